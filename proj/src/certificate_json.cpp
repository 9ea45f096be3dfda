#include "artin/certificate_json.hpp"

#include "artin/errors.hpp"

namespace artin {

namespace {

Json perms_json(const std::vector<Perm>& ps) {
  Json a = Json::array();
  for (const Perm& p : ps) a.push_back(p.to_cycles());
  return a;
}

Json subgroup_json(const Subgroup& h) {
  return Json{{"generators", perms_json(h.group->generators())}, {"order", h.order()}};
}

std::vector<Perm> parse_perms(std::size_t degree, const Json& a) {
  std::vector<Perm> out;
  for (const auto& s : a) out.push_back(Perm::from_cycles(degree, s.get<std::string>()));
  return out;
}

// Class index of each JSON class entry, checked against the recorded order.
bool check_classes(const GroupPtr& g, const Json& classes, std::string& why) {
  if (classes.size() != g->num_classes()) {
    why = "class count differs";
    return false;
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Perm rep = Perm::from_cycles(g->degree(), classes[c]["rep"].get<std::string>());
    int idx = g->index_of(rep);
    if (idx < 0 || g->class_of(idx) != static_cast<int>(c) ||
        g->classes()[c].size != classes[c]["size"].get<std::size_t>()) {
      why = "class " + std::to_string(c) + " does not match the recorded ordering";
      return false;
    }
  }
  return true;
}

}  // namespace

Json group_json(const GroupPtr& g, const std::string& spec) {
  Json classes = Json::array();
  for (const auto& c : g->classes())
    classes.push_back({{"rep", g->element(c.rep).to_cycles()}, {"size", c.size}, {"element_order", c.element_order}});
  return Json{{"spec", spec},
              {"degree", g->degree()},
              {"order", g->order().get_str()},
              {"generators", perms_json(g->generators())},
              {"classes", classes}};
}

Json class_function_json(const ClassFunction& f) {
  Json a = Json::array();
  for (const auto& v : f.values) a.push_back(v.to_string());
  return a;
}

Json table_json(const CharacterTable& t, const std::string& spec) {
  Json rows = Json::array();
  for (const auto& chi : t.irr) rows.push_back(class_function_json(chi));
  return Json{{"schema", "artin.table"},
              {"schema_version", kSchemaVersion},
              {"group", group_json(t.group, spec)},
              {"degrees", t.degrees},
              {"characters", rows}};
}

Json certificate_json(const MonomialCatalog& cat, const InductionCertificate& c, const std::string& spec) {
  Json normals = Json::array();
  for (const auto& n : c.normals) normals.push_back(subgroup_json(n));
  Json terms = Json::array();
  for (const auto& term : c.terms) {
    const MonomialCharacter& m = cat.monomial(term.monomial);
    const Subgroup& h = cat.subgroups()[m.subgroup];
    ClassFunction psi = cat.psi_function(m);
    Json pv = Json::array();
    for (std::size_t k = 0; k < psi.size(); ++k)
      pv.push_back({{"rep", h.group->element(h.group->classes()[k].rep).to_cycles()}, {"value", psi[k].to_string()}});
    terms.push_back({{"subgroup", subgroup_json(h)},
                     {"psi", pv},
                     {"coeff", term.coeff.get_str()},
                     {"induced", class_function_json(m.induced)}});
  }
  return Json{{"schema", "artin.certificate"},
              {"schema_version", kSchemaVersion},
              {"group", group_json(cat.group(), spec)},
              {"family", to_string(c.family)},
              {"normals", normals},
              {"target", class_function_json(c.target)},
              {"terms", terms},
              {"verified", c.verified}};
}

JsonCheck verify_certificate_json(const Json& doc) {
  JsonCheck out;
  try {
    if (doc.at("schema") != "artin.certificate" || doc.at("schema_version") != kSchemaVersion) {
      out.reason = "unknown schema";
      return out;
    }
    const Json& gj = doc.at("group");
    std::size_t degree = gj.at("degree").get<std::size_t>();
    GroupPtr g = PermGroup::create(degree, parse_perms(degree, gj.at("generators")));
    if (g->order().get_str() != gj.at("order").get<std::string>()) {
      out.reason = "group order differs";
      return out;
    }
    if (!check_classes(g, gj.at("classes"), out.reason)) return out;

    std::vector<Cyclotomic> tv;
    for (const auto& s : doc.at("target")) tv.push_back(Cyclotomic::parse(s.get<std::string>()));
    ClassFunction target(g, tv);
    SubgroupFilter family = parse_filter(doc.at("family").get<std::string>());

    std::vector<Subgroup> normals;
    for (const auto& nj : doc.at("normals")) {
      Subgroup n = subgroup_from_perms(g, parse_perms(degree, nj.at("generators")));
      if (!is_normal(g, n)) {
        out.reason = "listed normal subgroup is not normal";
        return out;
      }
      normals.push_back(n);
    }

    ClassFunction sum = zero_function(g);
    for (const auto& tj : doc.at("terms")) {
      Subgroup h = subgroup_from_perms(g, parse_perms(degree, tj.at("subgroup").at("generators")));
      if (!passes(h.group, family)) {
        out.reason = "subgroup outside the family";
        return out;
      }
      std::vector<Cyclotomic> pv(h.group->num_classes());
      std::vector<char> seen(pv.size(), 0);
      for (const auto& e : tj.at("psi")) {
        int idx = h.group->index_of(Perm::from_cycles(degree, e.at("rep").get<std::string>()));
        if (idx < 0) {
          out.reason = "psi representative outside the subgroup";
          return out;
        }
        std::size_t c = static_cast<std::size_t>(h.group->class_of(idx));
        pv[c] = Cyclotomic::parse(e.at("value").get<std::string>());
        seen[c] = 1;
      }
      for (char s : seen)
        if (!s) {
          out.reason = "psi misses a class";
          return out;
        }
      ClassFunction psi(h.group, pv);
      // linear: psi(x y) = psi(x) psi(y) for generators x
      auto val = [&](int i) { return psi[static_cast<std::size_t>(h.group->class_of(i))]; };
      for (int x : h.group->generator_indices())
        for (std::size_t y = 0; y < h.group->size(); ++y)
          if (val(h.group->mul(x, static_cast<int>(y))) != val(x) * val(static_cast<int>(y))) {
            out.reason = "psi is not a linear character";
            return out;
          }
      for (const Subgroup& n : normals) {
        bool avoids = false;
        for (std::size_t y = 0; y < h.group->size() && !avoids; ++y)
          if (n.contains(h.members[y]) && val(static_cast<int>(y)) != Cyclotomic(1)) avoids = true;
        if (!avoids) {
          out.reason = "a term has N cap H inside ker psi";
          return out;
        }
      }
      BigRational q(tj.at("coeff").get<std::string>());
      q.canonicalize();
      sum = add(sum, scale(induce(h, psi), q));
    }
    if (sum != target) {
      out.reason = "sum of induced terms differs from the target";
      return out;
    }
    out.ok = true;
  } catch (const std::exception& e) {
    out.reason = std::string("malformed certificate: ") + e.what();
  }
  return out;
}

}  // namespace artin
