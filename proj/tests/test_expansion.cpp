#include "doctest.h"
#include "simploid/expansion.hpp"

using namespace simploid;

namespace {

// cells outside the base up to dimension d
int missing_cells(const ExpansionCertificate& c, int d) {
  int k = 0;
  for (int n = 0; n <= d && n <= c.ambient->max_dim(); ++n)
    for (int x = 0; x < c.ambient->count(n); ++x) k += !c.base.contains(n, x);
  return k;
}

void check_cert(const ExpansionCertificate& c) {
  auto r = verify_certificate(c);
  INFO(r.error);
  CHECK(r.valid);
  int top = c.complete_to_dim >= 0 ? c.complete_to_dim : c.ambient->max_dim();
  // a step at the top dimension may leave its free face below it; count
  // everything attached instead
  int attached = 2 * static_cast<int>(c.steps.size());
  CHECK(attached >= missing_cells(c, top));
}

Word word_of(const ExpansionCertificate& c, const ExpansionStep& s) {
  Word w;
  for (int v : c.ambient->vertices(s.n, s.cell)) w.push_back(c.ambient->vertex_keys[v][0]);
  return w;
}

}  // namespace

TEST_CASE("union of faces") {
  check_cert(cert_union_of_faces(2, {0}));
  check_cert(cert_union_of_faces(3, {1, 2}));
  auto c = cert_union_of_faces(3, {0, 1, 3});
  check_cert(c);
  CHECK(c.steps.size() == 1);
  CHECK_THROWS_AS(cert_union_of_faces(2, {0, 1, 2}), InvalidInput);
}

TEST_CASE("shuffles and b values") {
  CHECK(shuffles(2, 2).size() == 6);
  CHECK(shuffles(1, 3).size() == 4);
  Shuffle s{{1}};
  CHECK(s.vertices(1) == Word{0, 0, 0, 1, 1, 1});
  Shuffle a{{1, 1}};
  CHECK(a.b(1) == 0);
  CHECK(a.b(2) == 2);
}

TEST_CASE("prism horns") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; m + n <= 5; ++n)
      for (int i = 0; i <= m; ++i) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(i);
        auto c = cert_prism_horn(m, n, i);
        auto r = verify_certificate(c);
        INFO(r.error);
        CHECK(r.valid);
        // every shuffle simplex and one free face per step
        CHECK(c.steps.size() * 2 == static_cast<size_t>(missing_cells(c, m + n)));
        if (0 < i && i < m) CHECK(verify_certificate(cert_prism_horn(m, n, i, true)).valid);
      }
  auto c = cert_prism_horn(1, 1, 1);
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0].i == 1);
  CHECK(c.steps[1].i == 2);
  check_cert(cert_prism_horn_tilde(2, 1, 1));
  check_cert(cert_prism_horn_tilde(1, 2, 0));
  CHECK_THROWS_AS(cert_prism_horn(0, 2, 0), InvalidInput);
}

TEST_CASE("product with a pair") {
  auto h = horn(2, 1);
  for (int side : {0, 1}) {
    check_cert(cert_product_with_pair(h, 1, 0, side));
    check_cert(cert_product_with_pair(h, 2, 1, side, true));
  }
  check_cert(cert_product_with_pair(boundary(2), 1, 1, 0));
}

TEST_CASE("thick inner horn batches") {
  auto b = thick_inner_horn_batches(2, 1, 3);
  std::map<std::pair<int, int>, std::vector<Word>> got(b.begin(), b.end());
  CHECK(got[{2, 0}] == std::vector<Word>{{2, 1, 0}});
  CHECK(got[{3, 1}] == std::vector<Word>{{1, 0, 1, 2}, {1, 2, 1, 0}});
  CHECK(got[{3, 0}] == std::vector<Word>{{0, 1, 2, 0}, {0, 1, 2, 1}, {2, 1, 0, 1}, {2, 1, 0, 2}});
  auto c = cert_thick_inner_horn(2, 1, 3);
  check_cert(c);
  REQUIRE(c.steps.size() == 7);
  CHECK(word_of(c, c.steps[0]) == Word{2, 1, 0});
  CHECK(c.steps[0].i == 1);
  CHECK(c.steps[1].i == 2);  // Q_{3,1} comes before Q_{3,0}
  CHECK(c.steps[3].i == 1);
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i < n; ++i) check_cert(cert_thick_inner_horn(n, i, n + 1));
}

TEST_CASE("tampered certificate is rejected") {
  auto c = cert_thick_inner_horn(2, 1, 3);
  std::swap(c.steps[2], c.steps[3]);  // a Q_{3,1} step after a Q_{3,0} step
  auto r = verify_certificate(c);
  CHECK_FALSE(r.valid);
  CHECK(r.error.find("step") != std::string::npos);
  auto d = cert_thick_inner_horn(2, 1, 3);
  d.steps.pop_back();
  CHECK_FALSE(verify_certificate(d).valid);
}

TEST_CASE("thick horns and thickification") {
  check_cert(cert_thick_horn(2, 0, 3));
  check_cert(cert_thick_horn(2, 2, 3));
  check_cert(cert_thick_horn(3, 1, 4));
  check_cert(cert_thick_horn(3, 3, 4));
  check_cert(cert_spine_thick(2, 3));
  check_cert(cert_spine_thick(3, 4));
  auto d3 = standard_simplex(3);
  auto inner = search_expansion(horn_in(d3, 3, 2), true, 1);
  REQUIRE(inner.has_value());
  check_cert(cert_thickify_inner(*inner, 4));
}

TEST_CASE("cylinder, thick boundary and spine") {
  for (int n = 0; n <= 2; ++n) {
    CAPTURE(n);
    check_cert(cert_cylinder(n, n + 2));
  }
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    check_cert(cert_thick_boundary(n, n + 2));
  }
  auto b1 = cert_thick_boundary(1, 3);
  CHECK(word_of(b1, b1.steps[0]) == Word{0, 1, 0});
  for (int n = 0; n <= 4; ++n) check_cert(cert_spine(n));
}

TEST_CASE("search agrees with the constructors") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; m + n <= 4; ++n)
      for (int i = 0; i <= m; ++i) {
        auto c = cert_prism_horn(m, n, i);
        auto s = search_expansion(c.base, false, m);
        REQUIRE(s.has_value());
        check_cert(*s);
        CHECK(s->steps.size() == c.steps.size());
      }
  auto sd = standard_simplex(1);
  CHECK_FALSE(search_expansion(boundary_in(sd, 1), false, 1).has_value());
  auto d2 = standard_simplex(2);
  CHECK_FALSE(search_expansion(horn_in(d2, 2, 0), true, 1).has_value());
  auto outer = search_expansion(horn_in(d2, 2, 0), false, 1);
  REQUIRE(outer.has_value());
  CHECK(outer->steps.size() == 1);
  auto sp = search_expansion(spine_in(d2), true, 1);
  REQUIRE(sp.has_value());
  CHECK(sp->steps.size() == 1);
}
