#include "doctest.h"
#include "simploid/sset.hpp"

#include <set>

using namespace simploid;

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return static_cast<int>(r);
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// all simplices of dimension k including degenerate ones
int all_simplices(const FiniteSimplicialSet& t, int k) {
  int total = 0;
  for (int r = 0; r <= k; ++r) total += t.count(r) * binom(k, r);
  return total;
}

}  // namespace

TEST_CASE("standard simplex counts") {
  CHECK(standard_simplex(0)->counts() == std::vector<int>{1});
  CHECK(standard_simplex(2)->counts() == std::vector<int>{3, 3, 1});
  auto d3 = standard_simplex(3);
  CHECK(d3->count(1) == 6);
  for (int n = 0; n <= 5; ++n) {
    auto d = standard_simplex(n);
    for (int k = 0; k <= n; ++k) CHECK(d->count(k) == binom(n + 1, k + 1));
    CHECK(check_simplicial_identities(*d));
  }
}

TEST_CASE("horns and boundaries") {
  CHECK(horn(2, 1).sub->counts() == std::vector<int>{3, 2});
  CHECK(boundary(2).sub->counts() == std::vector<int>{3, 3});
  auto h = horn(1, 1);
  REQUIRE(h.sub->counts() == std::vector<int>{1});
  CHECK(h.sub->vertex_keys[0] == Word{1});
  CHECK(horn(1, 0).sub->vertex_keys[0] == Word{0});
  CHECK(boundary(1).sub->counts() == std::vector<int>{2});
  CHECK_THROWS_AS(horn(2, 3), InvalidInput);
  CHECK(horn(3, 2).sub->counts() == std::vector<int>{4, 6, 3});
  CHECK(spine(3).sub->counts() == std::vector<int>{4, 3});
}

TEST_CASE("thick simplex counts") {
  auto t1 = thick_simplex(1, 6);
  for (int k = 0; k <= 6; ++k) CHECK(t1->count(k) == 2);
  for (int n = 1; n <= 3; ++n) {
    auto t = thick_simplex(n, 4);
    CHECK(check_simplicial_identities(*t));
    for (int k = 1; k <= 4; ++k) {
      CHECK(t->count(k) == (n + 1) * ipow(n, k));
      CHECK(all_simplices(*t, k) == ipow(n + 1, k + 1));
    }
  }
  CHECK(thick_simplex(2, 1)->count(1) == 6);
}

TEST_CASE("thickify") {
  auto a = thickify(standard_simplex(2), 3);
  auto b = thick_simplex(2, 3);
  CHECK(a->counts() == b->counts());
  CHECK(thickify(horn(1, 1).sub, 4)->counts() == std::vector<int>{1});
  CHECK(thickify(boundary(1).sub, 4)->counts() == std::vector<int>{2});
  auto th = thickify(horn(2, 1).sub, 3);
  CHECK(check_simplicial_identities(*th));
  // two thick edges glued at a vertex: 3 + 4 + 4 + 4 words
  CHECK(th->counts() == std::vector<int>{3, 4, 4, 4});
}

TEST_CASE("product") {
  auto d1 = standard_simplex(1), d2 = standard_simplex(2);
  auto sq = product(d1, d1);
  CHECK(sq->count(2) == 2);
  CHECK(sq->counts() == std::vector<int>{4, 5, 2});
  auto p21 = product(d2, d1);
  CHECK(p21->count(3) == 3);
  CHECK(check_simplicial_identities(*p21));
  auto u = product(standard_simplex(0), d2);
  CHECK(u->counts() == d2->counts());
  // levelwise product of all simplices
  auto t = thick_simplex(1, 3);
  auto pt = product(d1, t);
  CHECK(check_simplicial_identities(*pt));
  for (int k = 0; k <= 3; ++k)
    CHECK(all_simplices(*pt, k) == all_simplices(*d1, k) * all_simplices(*t, k));
  for (int k = 0; k <= 3; ++k)
    CHECK(all_simplices(*p21, k) == all_simplices(*d2, k) * all_simplices(*d1, k));
}

TEST_CASE("join") {
  auto d0 = standard_simplex(0), d1 = standard_simplex(1);
  CHECK(join(d0, d0)->counts() == standard_simplex(1)->counts());
  CHECK(join(d1, d0)->counts() == standard_simplex(2)->counts());
  CHECK(join(d1, d1)->counts() == standard_simplex(3)->counts());
  auto j = join(thick_simplex(1, 2), d0);
  // oracle: nerve of the category 0 <-> 1 -> v; nondegenerate k-cells are
  // adjacent-distinct words over {0,1,v} with v only in the last slot
  for (int k = 0; k <= 2; ++k) {
    int words = 0;
    std::vector<int> w(k + 1, 0);
    for (int code = 0; code < ipow(3, k + 1); ++code) {
      int x = code;
      for (int& c : w) c = x % 3, x /= 3;
      bool ok = true;
      for (int p = 0; p < k; ++p) ok = ok && w[p] != w[p + 1] && w[p] != 2;
      words += ok;
    }
    CHECK(j->count(k) == words);
  }
  CHECK(j->counts() == std::vector<int>{3, 4, 4});
  CHECK(check_simplicial_identities(*j));
  auto a = join(join(d0, d1), d0), b = join(d0, join(d1, d0));
  CHECK(a->counts() == b->counts());
  CHECK(check_simplicial_identities(*a));
}

TEST_CASE("normal form round trip") {
  auto t = thick_simplex(2, 3);
  for (int n = 0; n <= 3; ++n)
    for (int c = 0; c < t->count(n); ++c) {
      Simplex s = Simplex::cell(n, c);
      for (int j = 0; j <= n; ++j) {
        Simplex d = t->degen_of(s, j);
        CHECK(t->face_of(d, j) == s);
        CHECK(t->face_of(d, j + 1) == s);
        SimplexRef r = to_ref(d);
        CHECK(from_ref(r, n + 1) == d);
        CHECK(static_cast<int>(r.degens.size()) == 1);
      }
    }
}

TEST_CASE("skeleton and pushout attach") {
  auto d2 = standard_simplex(2);
  CHECK(skeleton(d2, 1).sub->counts() == std::vector<int>{3, 3});
  auto h = horn(2, 1);
  auto glued = pushout_attach(h.sub, identity_map(h.sub), 2, 1);
  CHECK(glued->counts() == std::vector<int>{3, 3, 1});
  CHECK(check_simplicial_identities(*glued));
  auto b = boundary(2);
  auto filled = pushout_attach(b.sub, identity_map(b.sub), 2, -1);
  CHECK(filled->counts() == std::vector<int>{3, 3, 1});
  SimplicialMap bad = identity_map(h.sub);
  std::swap(bad.assign[1][0], bad.assign[1][1]);
  CHECK_THROWS_AS(pushout_attach(h.sub, bad, 2, 1), InvalidInput);
}
