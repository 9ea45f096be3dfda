#pragma once

#include <string>

#include "artin/induction.hpp"
#include "json.hpp"

namespace artin {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json group_json(const GroupPtr& g, const std::string& spec);
Json class_function_json(const ClassFunction& f);
Json table_json(const CharacterTable& t, const std::string& spec);
Json certificate_json(const MonomialCatalog& cat, const InductionCertificate& c, const std::string& spec);

struct JsonCheck {
  bool ok = false;
  std::string reason;
};
// Rebuilds everything from the generators in the document and re-checks the
// certificate: class order, linearity of each psi, family and kernel
// conditions, and sum coeff * Ind psi == target.
JsonCheck verify_certificate_json(const Json& doc);

}  // namespace artin
