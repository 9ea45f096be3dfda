#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/character_table.hpp"
#include "artin/group_ops.hpp"
#include "artin/integer_matrix.hpp"

namespace artin {

// Ind_H^G psi for a linear character psi of H.
struct MonomialCharacter {
  std::size_t subgroup = 0;  // index into MonomialCatalog::subgroups()
  std::size_t psi = 0;       // index into the subgroup's linear characters
  std::uint64_t e = 1;       // psi(class c) = zeta_e^exps[c], e = exponent of H
  std::vector<std::uint32_t> exps;
  ClassFunction induced;
  std::vector<long> mult;    // multiplicity of each irreducible
  std::size_t constituents = 0;
  bool faithful = false;     // every constituent is faithful
};

// All subgroups up to conjugacy with their linear characters, induced to G.
class MonomialCatalog {
 public:
  MonomialCatalog(GroupPtr g, std::shared_ptr<const CharacterTable> table);

  const GroupPtr& group() const { return g_; }
  const CharacterTable& table() const { return *table_; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  bool in_family(std::size_t subgroup, SubgroupFilter f) const;
  const std::vector<MonomialCharacter>& monomials() const { return mons_; }
  const MonomialCharacter& monomial(std::size_t i) const { return mons_[i]; }
  ClassFunction psi_function(const MonomialCharacter& m) const;
  // psi(x) as an exponent of zeta_e, x a parent element in H.
  std::uint32_t psi_exponent(const MonomialCharacter& m, int x) const;
  // Some x in N cap H with psi(x) != 1.
  bool avoids_kernel(const MonomialCharacter& m, const Subgroup& n) const;
  bool kernel_condition(const MonomialCharacter& m, const std::vector<Subgroup>& normals) const;
  // Monomials in the family satisfying the kernel condition, in canonical order.
  std::vector<std::size_t> qualifying(SubgroupFilter f, const std::vector<Subgroup>& normals) const;
  const std::vector<Subgroup>& minimal_normal_subgroups() const { return minimal_; }

 private:
  GroupPtr g_;
  std::shared_ptr<const CharacterTable> table_;
  std::vector<Subgroup> subs_;
  std::vector<std::array<bool, 5>> fam_;
  std::vector<MonomialCharacter> mons_;
  std::vector<Subgroup> minimal_;
};

// Nilpotent H, kernel condition against the minimal normal subgroups,
// deduplicated by induced character.
std::vector<std::size_t> faithful_monomials(const MonomialCatalog& cat);

struct CertificateTerm {
  std::size_t monomial = 0;
  BigRational coeff;
};

struct InductionCertificate {
  ClassFunction target;
  std::vector<CertificateTerm> terms;
  SubgroupFilter family = SubgroupFilter::nilpotent;
  std::vector<Subgroup> normals;
  bool verified = false;  // pointwise re-check of sum a_i Ind_i == target
};

// Solves target = sum a_i Ind_{H_i} psi_i over the qualifying monomials.
// PreconditionError if the target is outside R(G; normals);
// FalsificationError if no rational combination exists.
InductionCertificate certificate_solve(const MonomialCatalog& cat, const ClassFunction& target, SubgroupFilter family,
                                       const std::vector<Subgroup>& normals);

// Pointwise exact check, independent of the solver.
bool verify_certificate(const MonomialCatalog& cat, const InductionCertificate& c);

struct SpaceReport {
  std::vector<std::size_t> r_basis;     // irreducible indices
  std::vector<std::size_t> generators;  // qualifying monomial indices
  std::size_t i_rank = 0;               // rank of multiplicity vectors
  std::size_t flat_rank = 0;            // rank of flattened class-function vectors
  bool contained = true;                // every generator lies in R
  bool pushforward_ok = true;           // R basis pushes forward to 0 on each G/N
  bool dual_ok = true;                  // excluded irreducibles are constant on N-cosets
  bool equal() const { return contained && i_rank == r_basis.size() && flat_rank == i_rank; }
};
SpaceReport verify_spaces(const MonomialCatalog& cat, const std::vector<Subgroup>& normals, SubgroupFilter family);

struct ZSearchResult {
  enum class Status { found, no_integral_solution, height_exceeded } status = Status::no_integral_solution;
  std::vector<std::size_t> monomials;  // faithful monomials used as columns
  std::vector<BigInt> coeffs;
  BigInt height = 0;
  std::string verdict() const;
};
// chi must be a faithful irreducible (index into the table).
ZSearchResult z_certificate_search(const MonomialCatalog& cat, std::size_t chi, const BigInt& height_bound = 1000000);

struct Lemma61Report {
  std::uint64_t d = 0;                     // |G|
  std::vector<std::size_t> faithful;       // chi_j
  std::vector<std::size_t> selected;       // phi_i (monomial indices)
  IntMatrix a;                             // a[i][j] = <phi_i, chi_j>
  RatMatrix inverse;                       // chi_j = sum_i inverse[j][i] phi_i
  std::vector<InductionCertificate> certificates;
  bool entries_ok = false;                 // |a_ij| <= sqrt d
  bool coeffs_ok = false;                  // |coeff| <= d^{3(d-1)/2}
  bool degrees_ok = false;                 // deg phi_i <= d/2
  bool m_ok = false;                       // m <= d
  bool ok() const { return entries_ok && coeffs_ok && degrees_ok && m_ok; }
};
Lemma61Report lemma61_certificate(const MonomialCatalog& cat);

struct MackeyTerm {
  Subgroup h;
  ClassFunction psi;
  std::size_t multiplicity = 1;
};
struct MackeyResult {
  std::vector<MackeyTerm> terms;
  ClassFunction sum;       // sum of multiplicity * Ind psi_tau
  ClassFunction product;   // phi1 * phi2
  bool pointwise_ok = false;
  bool degree_ok = false;  // sum [G:H_tau] == [G:H1][G:H2]
};
MackeyResult mackey_decompose(const MonomialCatalog& cat, std::size_t phi1, std::size_t phi2);

struct IndicatorDecomposition {
  std::vector<Cyclotomic> coeffs;  // a_i = |C|/|G| conj(chi_i(c))
  double l1_upper = 0;             // certified upper bound on sum |a_i|
  bool exact_ok = false;           // sum a_i chi_i is the class indicator
  bool certified = false;          // l1_upper <= 1 + 1e-12
};
IndicatorDecomposition class_indicator_decomposition(const CharacterTable& t, std::size_t c);

}  // namespace artin
