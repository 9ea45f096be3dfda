#include "artin/group_spec.hpp"

#include <array>
#include <cctype>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::size_t parse_count(const std::string& s, const std::string& ctx) {
  std::string t = trim(s);
  if (t.empty() || t.size() > 6) throw InputError("bad integer argument in " + ctx);
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad integer argument in " + ctx);
  return std::stoul(t);
}

Perm cycle_perm(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Perm(img);
}

// Right regular representation of the dicyclic group of order 4m:
// a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1. Elements a^k b^e at index k + 2m e.
std::vector<Perm> dicyclic(std::size_t m) {
  std::size_t n2 = 2 * m, n = 4 * m;
  auto mul = [&](std::size_t x, std::size_t y) {
    std::size_t k = x % n2, e = x / n2, l = y % n2, f = y / n2;
    if (e == 0) return (k + l) % n2 + n2 * f;
    std::size_t kk = (k + n2 - l) % n2;
    if (f == 0) return kk + n2;
    return (kk + m) % n2;
  };
  std::vector<Perm> gens;
  for (std::size_t g : {std::size_t{1}, n2}) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>(mul(x, g));
    gens.emplace_back(img);
  }
  return gens;
}

std::vector<Perm> sl23() {
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) pts.emplace_back(x, y);
  auto index = [&](int x, int y) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == std::make_pair(x, y)) return static_cast<std::uint32_t>(i);
    throw std::logic_error("point");
  };
  std::vector<Perm> gens;
  for (auto mat : {std::array<int, 4>{1, 1, 0, 1}, std::array<int, 4>{1, 0, 1, 1}}) {
    std::vector<std::uint32_t> img(8);
    for (std::size_t i = 0; i < 8; ++i) {
      auto [x, y] = pts[i];
      img[i] = index((mat[0] * x + mat[1] * y) % 3, (mat[2] * x + mat[3] * y) % 3);
    }
    gens.emplace_back(img);
  }
  return gens;
}

}  // namespace

std::pair<std::size_t, std::vector<Perm>> family_generators(const std::string& raw) {
  std::string f = trim(raw);
  if (f == "Q8") return {8, dicyclic(2)};
  if (f == "Q16") return {16, dicyclic(4)};
  if (f == "SL23") return {8, sl23()};
  if (f == "F21") {
    std::vector<std::uint32_t> shift(7), dbl(7);
    for (std::uint32_t i = 0; i < 7; ++i) {
      shift[i] = (i + 1) % 7;
      dbl[i] = (2 * i) % 7;
    }
    return {7, {Perm(shift), Perm(dbl)}};
  }
  auto open = f.find('(');
  if (open == std::string::npos || f.back() != ')') throw InputError("unknown group factor: " + f);
  std::string name = trim(f.substr(0, open));
  std::string arg = f.substr(open + 1, f.size() - open - 2);
  if (name == "Perm") {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= arg.size(); ++i)
      if (i == arg.size() || arg[i] == ';') {
        parts.push_back(arg.substr(start, i - start));
        start = i + 1;
      }
    std::size_t n = parse_count(parts[0], f);
    if (n == 0) throw InputError("degree must be positive in " + f);
    std::vector<Perm> gens;
    for (std::size_t i = 1; i < parts.size(); ++i) gens.push_back(Perm::from_cycles(n, parts[i]));
    return {n, gens};
  }
  std::size_t n = parse_count(arg, f);
  if (name == "Cyc") {
    if (n < 1) throw InputError("Cyc needs n >= 1");
    if (n == 1) return {1, {}};
    return {n, {cycle_perm(n)}};
  }
  if (name == "Sym") {
    if (n < 1) throw InputError("Sym needs n >= 1");
    if (n == 1) return {1, {}};
    if (n == 2) return {2, {cycle_perm(2)}};
    return {n, {cycle_perm(n), Perm::from_cycles(n, "(1 2)")}};
  }
  if (name == "Alt") {
    if (n < 1) throw InputError("Alt needs n >= 1");
    std::vector<Perm> gens;
    for (std::size_t k = 3; k <= n; ++k)
      gens.push_back(Perm::from_cycles(n, "(1 2 " + std::to_string(k) + ")"));
    return {n, gens};
  }
  if (name == "Dih") {
    if (n < 1) throw InputError("Dih needs n >= 1");
    if (n == 1) return {2, {cycle_perm(2)}};
    if (n == 2) return {4, {Perm::from_cycles(4, "(1 2)(3 4)"), Perm::from_cycles(4, "(1 3)(2 4)")}};
    std::vector<std::uint32_t> refl(n);
    for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<std::uint32_t>((n - i) % n);
    return {n, {cycle_perm(n), Perm(refl)}};
  }
  throw InputError("unknown group family: " + name);
}

GroupPtr parse_group(const std::string& spec, Limits limits) {
  std::vector<std::string> factors;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i < spec.size() && spec[i] == '(') ++depth;
    if (i < spec.size() && spec[i] == ')') --depth;
    if (i == spec.size() || (depth == 0 && spec[i] == 'x')) {
      factors.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw InputError("unbalanced parentheses in group spec: " + spec);
  std::size_t total = 0;
  std::vector<std::pair<std::size_t, std::vector<Perm>>> parts;
  for (auto& f : factors) {
    if (trim(f).empty()) throw InputError("empty factor in group spec: " + spec);
    parts.push_back(family_generators(f));
    total += parts.back().first;
  }
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (auto& [deg, gs] : parts) {
    for (auto& g : gs) {
      std::vector<std::uint32_t> img(total);
      std::iota(img.begin(), img.end(), 0u);
      for (std::size_t i = 0; i < deg; ++i) img[offset + i] = static_cast<std::uint32_t>(offset + g[i]);
      gens.emplace_back(img);
    }
    offset += deg;
  }
  return PermGroup::create(total, gens, limits);
}

std::vector<std::string> catalog_specs() {
  std::vector<std::string> out;
  for (int n = 1; n <= 30; ++n) out.push_back("Cyc(" + std::to_string(n) + ")");
  for (int n = 2; n <= 20; ++n) out.push_back("Dih(" + std::to_string(n) + ")");
  for (int n = 1; n <= 5; ++n) out.push_back("Sym(" + std::to_string(n) + ")");
  for (int n = 3; n <= 5; ++n) out.push_back("Alt(" + std::to_string(n) + ")");
  for (const char* s : {"Q8", "Q16", "SL23", "F21", "Cyc(3)xSym(3)", "Q8xCyc(3)"}) out.push_back(s);
  return out;
}

}  // namespace artin
