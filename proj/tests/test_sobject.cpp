#include "doctest.h"
#include "simploid/sobject.hpp"

using namespace simploid;

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Word faces_of(const TruncatedSimplicialObject& x, int n, int k) {
  Word w;
  for (int i = 0; i <= n; ++i) w.push_back(x.d(n, i, k));
  return w;
}

}  // namespace

TEST_CASE("group nerve levels") {
  for (int g = 1; g <= 4; ++g) {
    auto x = nerve(cyclic_group(g), 4);
    for (int n = 0; n <= 4; ++n) CHECK(x->size(n) == ipow(g, n));
    CHECK(x->validate());
  }
  auto m = nerve(idempotent_monoid(), 3);
  CHECK(m->validate());
  auto p = nerve(chain_poset(3), 3);
  CHECK(p->size(2) == 10);  // monotone maps [2] -> [2]
  CHECK(p->validate());
}

TEST_CASE("coskeletal extension reproduces the nerve") {
  std::vector<FiniteCategory> cats{cyclic_group(3), idempotent_monoid(), chain_poset(2), indiscrete_groupoid(2),
                                   product_category(cyclic_group(2), chain_poset(2))};
  for (auto& c : cats) {
    auto direct = nerve(c, 5);
    auto ext = nerve(c, 2);
    ext->ensure(5);
    CHECK(ext->validate());
    std::vector<int> iso(direct->size(2));
    for (int k = 0; k < direct->size(2); ++k) iso[k] = k;
    for (int n = 3; n <= 5; ++n) {
      REQUIRE(ext->size(n) == direct->size(n));
      std::vector<int> next(direct->size(n), -1);
      for (int k = 0; k < direct->size(n); ++k) {
        Word f = faces_of(*direct, n, k);
        for (int& v : f) v = iso[v];
        auto r = ext->find(n, f);
        REQUIRE(r.has_value());
        next[k] = *r;
      }
      std::vector<int> sorted = next;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::unique(sorted.begin(), sorted.end()) == sorted.end());
      iso = next;
    }
  }
}

TEST_CASE("map counts") {
  auto d2 = nerve(chain_poset(3), 3);
  CHECK(enumerate_maps(standard_simplex(1), d2).size() == 6);
  for (int n = 0; n <= 3; ++n) {
    auto thick = nerve(indiscrete_groupoid(n + 1), 3);
    CHECK(enumerate_maps(thick_simplex(1, 2), thick).size() == static_cast<size_t>((n + 1) * (n + 1)));
  }
  CHECK(enumerate_maps(empty_set(), d2).size() == 1);
  auto z2 = nerve(cyclic_group(2), 2);
  CHECK(enumerate_maps(standard_simplex(4), z2).size() == 16);
  // a thick source truncated below the coskeletal degree is refused
  CHECK_THROWS_AS(enumerate_maps(thick_simplex(1, 1), z2), InsufficientTruncation);
  auto plain = std::make_shared<TruncatedSimplicialObject>(*nerve(cyclic_group(2), 2));
  plain->coskeletal_from = -1;
  CHECK_THROWS_AS(enumerate_maps(standard_simplex(3), plain), InsufficientTruncation);
}

TEST_CASE("enumerate_maps matches the naive oracle") {
  std::vector<SSet> shapes{standard_simplex(0), standard_simplex(1), standard_simplex(2), horn(2, 1).sub,
                           boundary(2).sub, product(standard_simplex(1), standard_simplex(1)), thick_simplex(1, 2),
                           spine(3).sub, join(standard_simplex(0), boundary(1).sub)};
  std::vector<SObj> targets{nerve(cyclic_group(2), 3), nerve(cyclic_group(3), 3), nerve(idempotent_monoid(), 3),
                            nerve(chain_poset(2), 3), nerve(indiscrete_groupoid(2), 3), terminal_object(3)};
  int compared = 0;
  for (auto& t : shapes)
    for (auto& x : targets) {
      if (naive_table_count(t, x) > 500) continue;
      auto a = enumerate_maps(t, x);
      auto b = enumerate_maps_naive(t, x);
      CHECK(a.maps == b.maps);
      ++compared;
    }
  CHECK(compared >= 20);
}

TEST_CASE("mapping objects") {
  auto x = nerve(cyclic_group(2), 2);
  auto p0 = mapping_object([](int m) { return product(standard_simplex(m), standard_simplex(0)); }, x, 3);
  for (int m = 0; m <= 3; ++m) CHECK(p0.object->size(m) == x->size(m));
  CHECK(p0.object->validate());
  auto p1 = mapping_object([](int m) { return product(standard_simplex(m), standard_simplex(1)); }, x, 2);
  CHECK(p1.object->size(0) == 2);
  CHECK(p1.object->validate());
  auto ev = evaluation(p1, x, [](int, int a) { return Word{a, 0}; });
  CHECK(ev.valid(2));
  auto gg = mapping_object([](int m) { return thick_simplex(m, 2); }, x, 3);
  CHECK(gg.object->validate());
  CHECK(gg.object->size(2) == 4);
}

TEST_CASE("pullbacks and sub-objects") {
  auto z2 = nerve(cyclic_group(2), 3);
  auto pr = product_object(z2, z2);
  CHECK(pr.object->size(2) == 16);
  CHECK(pr.object->validate());
  CHECK(pr.p1.valid(3));
  auto [img, inc] = image_object(pr.p1);
  CHECK(img->size(3) == 8);
  CHECK(inc.valid(3));
}
