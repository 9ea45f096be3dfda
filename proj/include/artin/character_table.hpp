#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "artin/class_function.hpp"
#include "artin/perm_group.hpp"

namespace artin {

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irr;       // trivial first, then by degree
  std::vector<unsigned long> degrees;
  std::uint64_t prime = 0;              // modulus used for the eigenvector computation

  std::size_t size() const { return irr.size(); }
};

// Dixon-Schneider over F_p, p the smallest prime = 1 mod exp(G) above 2 sqrt|G|.
// `seed` drives the random class-matrix combinations used to split eigenspaces.
CharacterTable character_table(const GroupPtr& g, std::uint64_t seed = 0x5eed);

// Nonzero multiplicities <f, chi_i>.
std::vector<std::pair<std::size_t, Cyclotomic>> decompose(const ClassFunction& f, const CharacterTable& t);

// Full multiplicity vector; throws PreconditionError unless f is a character.
std::vector<long> character_multiplicities(const ClassFunction& f, const CharacterTable& t);

struct KernelInfo {
  Subgroup kernel;
  bool faithful = false;
};
KernelInfo kernel_and_faithful(const ClassFunction& chi, const CharacterTable& t);

// Indices of irreducibles whose kernel is trivial.
std::vector<std::size_t> faithful_irreducibles(const CharacterTable& t);

}  // namespace artin
