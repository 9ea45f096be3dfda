#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "artin/errors.hpp"
#include "artin/group_ops.hpp"
#include "artin/group_spec.hpp"
#include "artin/perm_group.hpp"

using namespace artin;

namespace {

// Brute-force closure by breadth-first search over generator products.
std::set<Perm> closure(std::size_t degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::multiset<std::size_t> brute_class_sizes(const std::set<Perm>& elems) {
  std::set<Perm> done;
  std::multiset<std::size_t> sizes;
  for (const auto& x : elems) {
    if (done.count(x)) continue;
    std::set<Perm> orbit;
    for (const auto& g : elems) orbit.insert(g.inverse() * x * g);
    done.insert(orbit.begin(), orbit.end());
    sizes.insert(orbit.size());
  }
  return sizes;
}

std::vector<Perm> q8_regular() {
  // left-regular action of Q8 = {1,-1,i,-i,j,-j,k,-k} numbered 1..8
  return {Perm::from_cycles(8, "(1 3 2 4)(5 7 6 8)"), Perm::from_cycles(8, "(1 5 2 6)(3 8 4 7)")};
}

}  // namespace

TEST(Perm, CyclesRoundTripAndComposition) {
  Perm a = Perm::from_cycles(4, "(1 2 3)");
  Perm b = Perm::from_cycles(4, "(3 4)");
  EXPECT_EQ(a.to_cycles(), "(1 2 3)");
  EXPECT_EQ(Perm::from_cycles(4, a.to_cycles()), a);
  // left to right: 3 -> 1 under a, then 1 fixed by b
  EXPECT_EQ((a * b)[2], 0u);
  EXPECT_EQ((a * b).to_cycles(), "(1 2 4 3)");
  EXPECT_EQ(a.order(), 3u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.pow(-1), a.inverse());
  EXPECT_EQ(Perm::from_cycles(3, "()").to_cycles(), "()");
}

TEST(Perm, MalformedInputThrows) {
  EXPECT_THROW(Perm::from_cycles(3, "(1 1)"), InputError);
  EXPECT_THROW(Perm::from_cycles(3, "(1 4)"), InputError);
  EXPECT_THROW(Perm::from_cycles(3, "(1 2"), InputError);
  EXPECT_THROW(Perm(std::vector<std::uint32_t>{0, 0, 1}), InputError);
}

TEST(BuildGroup, Examples) {
  auto s3 = PermGroup::create(3, {Perm::from_cycles(3, "(1 2 3)"), Perm::from_cycles(3, "(1 2)")});
  EXPECT_EQ(s3->order(), 6);
  auto triv = PermGroup::create(1, {});
  EXPECT_EQ(triv->order(), 1);
  auto q8 = PermGroup::create(8, q8_regular());
  EXPECT_EQ(q8->order(), BigInt(closure(8, q8_regular()).size()));
  EXPECT_EQ(q8->order(), 8);
}

TEST(BuildGroup, OrderMatchesEnumerationOverCatalog) {
  for (const auto& spec : catalog_specs()) {
    auto g = parse_group(spec);
    auto brute = closure(g->degree(), g->generators());
    ASSERT_EQ(g->order(), BigInt(brute.size())) << spec;
    ASSERT_EQ(g->size(), brute.size()) << spec;
    for (std::size_t i = 0; i < g->size(); ++i) ASSERT_TRUE(brute.count(g->element(static_cast<int>(i)))) << spec;
  }
}

TEST(BuildGroup, MembershipIsExact) {
  auto a4 = parse_group("Alt(4)");
  EXPECT_TRUE(a4->contains(Perm::from_cycles(4, "(1 2)(3 4)")));
  EXPECT_FALSE(a4->contains(Perm::from_cycles(4, "(1 2)")));
  EXPECT_EQ(a4->index_of(Perm::from_cycles(4, "(1 2)")), -1);
}

TEST(BuildGroup, LargeGroupOrderWithoutEnumeration) {
  auto s8 = parse_group("Sym(8)", Limits{100, 100, 100});
  EXPECT_EQ(s8->order(), 40320);
  EXPECT_FALSE(s8->enumerated());
  EXPECT_THROW(s8->size(), CapacityError);
  EXPECT_THROW(s8->classes(), CapacityError);
}

TEST(GroupSpec, FamiliesAndErrors) {
  EXPECT_EQ(parse_group("Dih(5)")->order(), 10);
  EXPECT_EQ(parse_group("Dih(2)")->order(), 4);
  EXPECT_EQ(parse_group("Q16")->order(), 16);
  EXPECT_EQ(parse_group("SL23")->order(), 24);
  EXPECT_EQ(parse_group("F21")->order(), 21);
  EXPECT_EQ(parse_group("Cyc(3)xSym(3)")->order(), 18);
  EXPECT_EQ(parse_group("Perm(4; (1 2)(3 4); (1 3)(2 4))")->order(), 4);
  EXPECT_THROW(parse_group("Foo(3)"), InputError);
  EXPECT_THROW(parse_group("Sym("), InputError);
  EXPECT_THROW(parse_group("Cyc(0)"), InputError);
}

TEST(ConjugacyClasses, Examples) {
  auto s3 = parse_group("Sym(3)");
  std::vector<std::size_t> sizes;
  for (const auto& c : s3->classes()) sizes.push_back(c.size);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));

  auto triv = parse_group("Cyc(1)");
  ASSERT_EQ(triv->num_classes(), 1u);
  EXPECT_EQ(triv->classes()[0].size, 1u);

  auto s4 = parse_group("Sym(4)");
  std::multiset<std::size_t> got;
  for (const auto& c : s4->classes()) got.insert(c.size);
  EXPECT_EQ(got, (std::multiset<std::size_t>{1, 6, 8, 3, 6}));
}

TEST(ConjugacyClasses, PartitionAndOrderingOverCatalog) {
  for (const auto& spec : catalog_specs()) {
    auto g = parse_group(spec);
    std::multiset<std::size_t> got;
    std::vector<int> seen(g->size(), 0);
    std::size_t total = 0;
    const auto& cls = g->classes();
    for (std::size_t c = 0; c < cls.size(); ++c) {
      got.insert(cls[c].size);
      total += cls[c].size;
      ASSERT_EQ(g->order() % BigInt(cls[c].size), 0) << spec;
      ASSERT_EQ(cls[c].rep, *std::min_element(cls[c].members.begin(), cls[c].members.end()));
      for (int m : cls[c].members) {
        ++seen[static_cast<std::size_t>(m)];
        ASSERT_EQ(g->class_of(m), static_cast<int>(c));
      }
      if (c > 0) {
        auto key = [&](std::size_t k) { return std::make_pair(cls[k].size, g->element(cls[k].rep)); };
        ASSERT_LT(key(c - 1), key(c)) << spec;
      }
    }
    EXPECT_EQ(total, g->size()) << spec;
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; })) << spec;
    std::set<Perm> elems;
    for (std::size_t i = 0; i < g->size(); ++i) elems.insert(g->element(static_cast<int>(i)));
    EXPECT_EQ(got, brute_class_sizes(elems)) << spec;
    EXPECT_EQ(cls[0].size, 1u);
    EXPECT_TRUE(g->element(cls[0].rep).is_identity());
  }
}

TEST(StructureQuery, Examples) {
  auto s4 = parse_group("Sym(4)");
  EXPECT_EQ(fitting(s4).order(), 4u);

  auto s3 = parse_group("Sym(3)");
  auto mins = minimal_normals(s3);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].order(), 3u);

  auto q8 = PermGroup::create(8, q8_regular());
  Subgroup z = center(q8);
  // oracle: elements commuting with every element
  std::size_t count = 0;
  for (std::size_t i = 0; i < q8->size(); ++i) {
    bool central = true;
    for (std::size_t j = 0; j < q8->size(); ++j)
      if (q8->mul(static_cast<int>(i), static_cast<int>(j)) != q8->mul(static_cast<int>(j), static_cast<int>(i)))
        central = false;
    if (central) {
      ++count;
      EXPECT_TRUE(z.contains(static_cast<int>(i)));
    }
  }
  EXPECT_EQ(z.order(), 2u);
  EXPECT_EQ(count, 2u);
}

TEST(StructureQuery, InvariantsOverCatalog) {
  for (const auto& spec : catalog_specs()) {
    auto g = parse_group(spec);
    for (const Subgroup& h : {center(g), derived_subgroup(g), fitting(g), socle(g)}) {
      EXPECT_TRUE(is_normal(g, h)) << spec;
      EXPECT_EQ(g->size() % h.order(), 0u) << spec;
    }
    // fitting = product of p-cores
    std::vector<int> gens;
    for (auto p : prime_divisors(g->size()))
      for (int m : p_core(g, p).members) gens.push_back(m);
    EXPECT_EQ(subgroup_generated(g, gens).members, fitting(g).members) << spec;
    // socle = group generated by the minimal normals
    std::vector<int> mg;
    for (const auto& n : minimal_normals(g)) mg.insert(mg.end(), n.members.begin(), n.members.end());
    EXPECT_EQ(subgroup_generated(g, mg).order(), socle(g).order()) << spec;
    // core is the largest normal subgroup inside H
    for (auto p : prime_divisors(g->size())) {
      Subgroup s = sylow(g, p);
      Subgroup c = core(g, s);
      EXPECT_TRUE(is_normal(g, c));
      for (const auto& n : normal_subgroups(g))
        if (is_subset(n, s)) {
          EXPECT_TRUE(is_subset(n, c)) << spec;
        }
      std::size_t pp = 1;
      while (g->size() % (pp * p) == 0) pp *= p;
      EXPECT_EQ(s.order(), pp) << spec;
    }
  }
}

TEST(StructureQuery, SocleOfTrivialFittingIsDirectProduct) {
  auto a5 = parse_group("Alt(5)");
  ASSERT_EQ(fitting(a5).order(), 1u);
  auto mins = minimal_normals(a5);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(socle(a5).order(), 60u);
  auto s5 = parse_group("Sym(5)");
  EXPECT_EQ(socle(s5).order(), 60u);
}

TEST(StructureQuery, SylowNormalizerCoversCyclicQuotients) {
  // For cyclic G/N the projection of N_G(S) onto G/N is onto.
  for (const auto& spec : catalog_specs()) {
    auto g = parse_group(spec);
    if (g->size() > 120) continue;
    for (const auto& n : normal_subgroups(g)) {
      Quotient q = quotient_group(g, n);
      if (!is_cyclic(q.group)) continue;
      for (auto p : prime_divisors(g->size())) {
        Subgroup ns = normalizer(g, sylow(g, p));
        std::set<int> img;
        for (int m : ns.members) img.insert(q.image[static_cast<std::size_t>(m)]);
        ASSERT_EQ(img.size(), g->size() / n.order()) << spec;
      }
    }
  }
}

TEST(Subgroups, Examples) {
  auto s3 = parse_group("Sym(3)");
  auto nil = subgroups_up_to_conjugacy(s3, SubgroupFilter::nilpotent);
  std::vector<std::size_t> orders;
  for (const auto& h : nil) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 3}));

  auto c4 = parse_group("Cyc(4)");
  orders.clear();
  for (const auto& h : subgroups_up_to_conjugacy(c4, SubgroupFilter::cyclic)) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 4}));

  auto a5 = parse_group("Alt(5)");
  orders.clear();
  for (const auto& h : subgroups_up_to_conjugacy(a5, SubgroupFilter::nilpotent)) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  // 9 classes of subgroups in A5 in total
  EXPECT_EQ(subgroups_up_to_conjugacy(a5, SubgroupFilter::all).size(), 9u);
  EXPECT_EQ(subgroups_up_to_conjugacy(parse_group("Sym(4)"), SubgroupFilter::all).size(), 11u);
}

TEST(Subgroups, AgreeWithBruteForceOnSmallGroups) {
  // Oracle: close every pair of elements, dedupe by conjugacy.
  for (const char* spec : {"Sym(4)", "Dih(6)", "Q8", "Cyc(3)xSym(3)", "SL23"}) {
    auto g = parse_group(spec);
    std::set<std::vector<int>> subs;
    for (std::size_t a = 0; a < g->size(); ++a)
      for (std::size_t b = a; b < g->size(); ++b)
        subs.insert(subgroup_generated(g, {static_cast<int>(a), static_cast<int>(b)}).members);
    // all catalog small groups here are 2-generated, except possibly none; also add products
    std::set<std::vector<int>> canon;
    for (const auto& m : subs) {
      std::vector<int> best = m;
      for (std::size_t x = 0; x < g->size(); ++x) {
        std::vector<int> c;
        for (int y : m) c.push_back(g->conj(y, static_cast<int>(x)));
        std::sort(c.begin(), c.end());
        best = std::min(best, c);
      }
      canon.insert(best);
    }
    auto got = subgroups_up_to_conjugacy(g, SubgroupFilter::all);
    std::set<std::vector<int>> mine;
    for (const auto& h : got) {
      EXPECT_EQ(g->size() % h.order(), 0u);
      mine.insert(h.members);
    }
    // every 2-generated class is present
    for (const auto& c : canon) EXPECT_TRUE(mine.count(c)) << spec;
    EXPECT_GE(mine.size(), canon.size());
  }
}

TEST(Subgroups, FiltersAreConsistent) {
  for (const auto& spec : catalog_specs()) {
    auto g = parse_group(spec);
    if (g->size() > 60) continue;
    for (const auto& h : subgroups_up_to_conjugacy(g, SubgroupFilter::all)) {
      bool nil = is_nilpotent_by_sylows(h.group);
      ASSERT_EQ(nil, is_nilpotent_by_central_series(h.group)) << spec;
      if (is_cyclic(h.group)) {
        EXPECT_TRUE(is_elementary(h.group));
      }
      if (is_elementary(h.group)) {
        EXPECT_TRUE(nil);
      }
      if (is_elementary_rank_le_2(h.group)) {
        EXPECT_TRUE(is_elementary(h.group));
      }
    }
  }
}

TEST(Subgroups, CapacityLimit) {
  auto g = parse_group("Sym(5)", Limits{10000, 100, 2000});
  EXPECT_THROW(subgroups_up_to_conjugacy(g, SubgroupFilter::all), CapacityError);
}

TEST(Abelianization, Examples) {
  EXPECT_EQ(abelianization(parse_group("Q8")).factors, (std::vector<unsigned long>{2, 2}));
  EXPECT_EQ(abelianization(parse_group("Cyc(6)")).factors, (std::vector<unsigned long>{6}));
  EXPECT_EQ(abelianization(parse_group("Sym(4)")).factors, (std::vector<unsigned long>{2}));
  EXPECT_TRUE(abelianization(parse_group("Alt(5)")).factors.empty());
}

TEST(Abelianization, ProjectionIsHomomorphismWithDerivedKernel) {
  for (const char* spec : {"Q8", "Sym(4)", "Dih(6)", "Cyc(3)xSym(3)", "Q8xCyc(3)", "F21"}) {
    auto g = parse_group(spec);
    auto ab = abelianization(g);
    Subgroup d = derived_subgroup(g);
    EXPECT_EQ(ab.order() * d.order(), g->size()) << spec;
    for (std::size_t a = 0; a < g->size(); ++a) {
      bool zero = std::all_of(ab.coords[a].begin(), ab.coords[a].end(), [](unsigned long v) { return v == 0; });
      EXPECT_EQ(zero, d.contains(static_cast<int>(a)));
      for (std::size_t b = 0; b < g->size(); b += 3) {
        auto ab_c = ab.coords[static_cast<std::size_t>(g->mul(static_cast<int>(a), static_cast<int>(b)))];
        for (std::size_t k = 0; k < ab.factors.size(); ++k)
          ASSERT_EQ(ab_c[k], (ab.coords[a][k] + ab.coords[b][k]) % ab.factors[k]);
      }
    }
    for (std::size_t k = 1; k < ab.factors.size(); ++k) EXPECT_EQ(ab.factors[k] % ab.factors[k - 1], 0u);
  }
}

TEST(Quotient, Examples) {
  auto s4 = parse_group("Sym(4)");
  Subgroup v4 = fitting(s4);
  Quotient q = quotient_group(s4, v4);
  EXPECT_EQ(q.group->order(), 6);
  EXPECT_EQ(derived_subgroup(q.group).order(), 3u);  // nonabelian

  auto q8 = parse_group("Q8");
  Quotient qq = quotient_group(q8, center(q8));
  EXPECT_EQ(qq.group->order(), 4);
  EXPECT_EQ(abelianization(qq.group).factors, (std::vector<unsigned long>{2, 2}));

  auto d5 = parse_group("Dih(5)");
  EXPECT_EQ(quotient_group(d5, trivial_subgroup(d5)).group->order(), 10);
}

TEST(Quotient, ProjectionIsSurjectiveHomomorphismWithKernelN) {
  auto g = parse_group("SL23");
  for (const auto& n : normal_subgroups(g)) {
    Quotient q = quotient_group(g, n);
    std::set<int> img(q.image.begin(), q.image.end());
    EXPECT_EQ(img.size(), q.group->size());
    int id = q.group->index_of(Perm(q.group->degree()));
    for (std::size_t a = 0; a < g->size(); ++a) {
      EXPECT_EQ(q.image[a] == id, n.contains(static_cast<int>(a)));
      for (std::size_t b = 0; b < g->size(); b += 5)
        ASSERT_EQ(q.image[static_cast<std::size_t>(g->mul(static_cast<int>(a), static_cast<int>(b)))],
                  q.group->mul(q.image[a], q.image[b]));
    }
  }
}

TEST(Quotient, NonNormalThrows) {
  auto s3 = parse_group("Sym(3)");
  Subgroup c2 = subgroup_from_perms(s3, {Perm::from_cycles(3, "(1 2)")});
  EXPECT_THROW(quotient_group(s3, c2), PreconditionError);
}

TEST(Subgroups, FromPermsRejectsOutsiders) {
  auto a4 = parse_group("Alt(4)");
  EXPECT_THROW(subgroup_from_perms(a4, {Perm::from_cycles(4, "(1 2)")}), InputError);
}
