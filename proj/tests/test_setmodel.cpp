#include "doctest.h"
#include "simploid/expansion.hpp"
#include "simploid/setmodel.hpp"

#include <set>

using namespace simploid;

namespace {

struct Named {
  std::string name;
  FiniteCategory cat;
};

std::vector<Named> battery() {
  return {{"Z2", cyclic_group(2)}, {"Z3", cyclic_group(3)}, {"idem", idempotent_monoid()}, {"poset", chain_poset(2)}};
}

// is every arrow invertible
bool groupoid_oracle(const FiniteCategory& c) {
  for (size_t f = 0; f < c.src.size(); ++f) {
    bool inv = false;
    for (size_t g = 0; g < c.src.size(); ++g)
      if (c.comp[g][f] >= 0 && c.comp[g][f] == c.identity[c.src[f]] && c.comp[f][g] == c.identity[c.tgt[f]]) inv = true;
    if (!inv) return false;
  }
  return true;
}

Morphism functor(const FiniteCategory& a, const FiniteCategory& b, const std::vector<int>& arrows, int depth) {
  return nerve_map(a, nerve(a, depth), b, nerve(b, depth), arrows);
}

}  // namespace

TEST_CASE("k-groupoid and k-category verdicts") {
  for (auto& [name, c] : battery()) {
    CAPTURE(name);
    auto x = nerve(c, 4);
    CHECK(is_k_groupoid(x, 1, 4).holds == groupoid_oracle(c));
    CHECK(is_k_category(x, 1, 4).holds);
    // nerves are not 0-groupoids unless discrete
    CHECK_FALSE(is_k_groupoid(x, 0, 3).holds);
  }
  auto z2 = is_k_groupoid(nerve(cyclic_group(2), 4), 1, 4);
  bool seen = false;
  for (auto& v : z2.levels)
    if (v.shape == "horn(2,1)") {
      seen = true;
      CHECK(v.source == 4);
      CHECK(v.target == 4);
      CHECK(v.bijective);
    }
  CHECK(seen);
  CHECK(is_k_groupoid(terminal_object(4), 0, 4).holds);
  auto p = is_k_category(nerve(chain_poset(2), 3), 1, 3);
  for (auto& v : p.levels)
    if (v.shape.starts_with("thick_edge")) CHECK(v.source == 2);
}

TEST_CASE("fibrations and hypercovers of nerves") {
  int d = 4;
  auto z2 = cyclic_group(2);
  auto x = nerve(z2, d);
  auto pt = terminal_object(d);
  auto f = to_terminal(x, pt);
  CHECK(is_fibration(f, d).holds);
  // X_2 has 4 elements, boundaries of 2-simplices are all 8 triples
  auto to_pt = is_hypercover(f, d);
  CHECK(to_pt.levels[1].ok);
  CHECK(to_pt.levels[2].target == 8);
  CHECK(to_pt.levels[2].image == 4);
  CHECK_FALSE(to_pt.holds);
  CHECK(is_hypercover(identity_morphism(x), d).holds);
  // projection G x H -> G: every horn lifts, but boundaries of 2-simplices
  // whose H-parts do not compose have no filler
  auto gh = product_category(z2, cyclic_group(3));
  std::vector<int> arrows;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) arrows.push_back(a);
  auto proj = functor(gh, z2, arrows, d);
  CHECK(is_fibration(proj, d).holds);
  auto hc = is_hypercover(proj, d);
  CHECK_FALSE(hc.holds);
  // oracle: boundaries are 3 arrows of G x H with composing G-parts,
  // fillers exist only when the H-parts compose too
  long long boundaries = 2 * 2 * 3 * 3 * 3, fillable = 2 * 2 * 3 * 3;
  CHECK(hc.levels[2].target == boundaries);
  CHECK(hc.levels[2].image == fillable);
  // quotient Z4 -> Z2 is a fibration, not a hypercover
  auto q = functor(cyclic_group(4), z2, {0, 1, 0, 1}, d);
  CHECK(is_fibration(q, d).holds);
  CHECK_FALSE(is_hypercover(q, d).holds);
  // indiscrete groupoids are contractible
  auto ind = nerve(indiscrete_groupoid(3), d);
  CHECK(is_hypercover(to_terminal(ind, terminal_object(d)), d).holds);
}

TEST_CASE("path spaces") {
  auto x = nerve(cyclic_group(2), 3);
  auto p0 = path_space(x, 0, 3);
  for (int m = 0; m <= 3; ++m) CHECK(p0.object->size(m) == x->size(m));
  auto p1 = path_space(x, 1, 3);
  CHECK(p1.object->size(0) == 2);
  CHECK(p1.object->validate());
  auto poset = nerve(chain_poset(2), 3);
  auto tp = thick_power(poset, 1, 1, 2);
  CHECK(tp.object->size(0) == 2);
}

TEST_CASE("Brown factorization") {
  int d = 3;
  auto y = nerve(cyclic_group(2), d);
  {
    auto bf = brown_factorization(identity_morphism(y), d);
    CHECK(is_hypercover(bf.p, d).holds);
    for (int n = 0; n <= d; ++n)
      for (int x = 0; x < y->size(n); ++x) {
        CHECK(bf.p.at(n, bf.s.at(n, x)) == x);
        CHECK(bf.q.at(n, bf.s.at(n, x)) == x);
      }
  }
  auto pt = nerve(discrete_category(1), d);
  auto incl = functor(discrete_category(1), cyclic_group(2), {0}, d);
  auto bf = brown_factorization(incl, d);
  CHECK(bf.s.valid(d));
  CHECK(bf.q.valid(d));
  CHECK(is_hypercover(bf.p, d).holds);
  for (int n = 0; n <= d; ++n) {
    std::set<int> hit;
    for (int z = 0; z < bf.pf.object->size(n); ++z) hit.insert(bf.q.at(n, z));
    CHECK(static_cast<int>(hit.size()) == y->size(n));
  }
  auto two = functor(discrete_category(1), discrete_category(2), {0}, d);
  auto b2 = brown_factorization(two, d);
  CHECK_FALSE(is_hypercover(b2.q, d).levels[0].ok);
}

TEST_CASE("weak equivalence criteria agree") {
  int d = 3;
  auto z2 = cyclic_group(2);
  struct Case {
    Morphism f;
    bool expect;
  };
  std::vector<Case> cases{
      {functor(z2, z2, {0, 1}, d), true},
      {functor(discrete_category(1), z2, {0}, d), false},
      {functor(cyclic_group(4), z2, {0, 1, 0, 1}, d), false},
      {functor(indiscrete_groupoid(2), discrete_category(1), {0, 0, 0, 0}, d), true},
      {functor(discrete_category(1), indiscrete_groupoid(3), {0}, d), true},
      {functor(discrete_category(2), discrete_category(1), {0, 0}, d), false},
  };
  for (size_t k = 0; k < cases.size(); ++k) {
    CAPTURE(k);
    auto path = is_weak_equivalence_path(cases[k].f, 1, d);
    auto direct = is_weak_equivalence_direct(cases[k].f, d);
    auto cat = is_weak_equivalence_cat_direct(cases[k].f, d);
    CHECK(path.holds == cases[k].expect);
    CHECK(direct.holds == cases[k].expect);
    CHECK(cat.holds == cases[k].expect);
  }
}

TEST_CASE("cores") {
  int d = 4;
  for (auto& [name, c] : battery()) {
    CAPTURE(name);
    auto x = nerve(c, d);
    auto gg = gg_core(x, 1, d);
    CHECK(gg.object->validate());
    CHECK(is_k_groupoid(gg.object, 1, d).holds);
    auto g1 = g_core(x, 1, d), g2 = g_core_spine(x, 1, d), g3 = g_core_image(x, 1, d);
    for (int n = 0; n <= d; ++n) {
      CHECK(g1.inclusion.level[n] == g2.inclusion.level[n]);
      CHECK(g1.inclusion.level[n] == g3.inclusion.level[n]);
    }
    auto onto = corestrict(gg_evaluation(gg, x), g1.inclusion);
    CHECK(is_hypercover(onto, d).holds);
    CHECK(is_k_groupoid(g1.object, 1, d).holds);
    auto ggg = gg_core(gg.object, 1, d);
    CHECK(is_isomorphism(postcompose(ggg, gg_core(x, 1, d), gg_evaluation(gg, x)), d));
  }
  // poset: constant thick simplices only, discrete core
  auto poset = nerve(chain_poset(2), 3);
  auto gg = gg_core(poset, 1, 3);
  for (int n = 0; n <= 3; ++n) CHECK(gg.object->size(n) == 2);
  // group: every edge invertible
  auto z3 = nerve(cyclic_group(3), 3);
  auto g = g_core(z3, 1, 3);
  for (int n = 0; n <= 3; ++n) CHECK(g.object->size(n) == z3->size(n));
  // idempotent monoid: only the unit
  auto g_idem = g_core(nerve(idempotent_monoid(), 3), 1, 3);
  for (int n = 0; n <= 3; ++n) CHECK(g_idem.object->size(n) == 1);
}

TEST_CASE("expansions induce covers") {
  int d = 4;
  auto x = nerve(cyclic_group(2), d);
  auto f = to_terminal(x, terminal_object(d));
  // grade 2 > k = 1: bijection on maps
  for (auto c : {cert_prism_horn(2, 1, 1), cert_union_of_faces(3, {0, 1}), cert_prism_horn(1, 1, 0)}) {
    auto v = lifting_condition(f, c.base);
    CHECK(v.surjective);
    if (c.m > 1) CHECK(v.bijective);
  }
}
