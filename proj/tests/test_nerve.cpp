#include "doctest.h"
#include "simploid/nerve.hpp"

#include <random>

using namespace simploid;

namespace {

Q rnd(std::mt19937& g, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  return Q(d(g));
}

Q rnd_nonzero(std::mt19937& g) {
  Q q = 0;
  while (q == 0) q = rnd(g);
  return q;
}

Element coords(int deg, QVec v) {
  Element e;
  e.c[deg] = std::move(v);
  return e;
}

Element random_in(const DGAlgebra& A, int deg, std::mt19937& g) {
  if (A.dim(deg) == 0) return {};
  QVec v(A.dim(deg));
  for (auto& q : v) q = rnd(g);
  auto e = coords(deg, v);
  A.normalize(e);
  return e;
}

// End(V) for V = (Q -c-> Q): basis A^-1 {E01}, A^0 {E00, E11}, A^1 {E10}.
// Vertices t E10 are always Maurer-Cartan; diag(a, b) is closed for
// d_{ij} iff (c + t_i) a = (c + t_j) b.
struct EndPoint {
  NervePoint p;
  std::vector<Q> t;
};

EndPoint random_end_point(const DGAlgebra& A, const Q& c, int n, std::mt19937& g) {
  EndPoint out;
  out.p.n = n;
  for (int i = 0; i <= n; ++i) {
    Q t = rnd(g);
    while (c + t == 0) t = rnd(g);
    out.t.push_back(t);
    if (t != 0) out.p.mu[{i}] = coords(1, {t});
  }
  for (int i = 0; i < n; ++i) {
    Q a = rnd_nonzero(g);
    Q b = (c + out.t[i]) * a / (c + out.t[i + 1]);
    auto f = coords(0, {a, b});
    auto mu = A.sub(f, A.unit);
    if (!A.is_zero(mu)) out.p.mu[{i, i + 1}] = mu;
  }
  // spine expansion: tuples with i1 = i0 + 1, by dimension, larger i0 first
  for (int k = 2; k <= n; ++k)
    for (int i0 = n; i0 >= 0; --i0)
      for (auto& I : increasing_tuples(n))
        if (static_cast<int>(I.size()) == k + 1 && I[0] == i0 && I[1] == i0 + 1)
          out.p = fill_face(A, out.p, I, 1, random_in(A, 1 - k, g));
  return out;
}

// closed formula for the missing face of an inner horn, n >= 3
Element face_formula(const DGAlgebra& A, const NervePoint& p, int n, int i) {
  auto mu = [&](Word w) { return component(p, w); };
  auto range = [](int a, int b, int skip) {
    Word w;
    for (int v = a; v <= b; ++v)
      if (v != skip) w.push_back(v);
    return w;
  };
  auto sg = [](long long e) { return Q(e % 2 == 0 ? 1 : -1); };
  auto x = mu(range(0, n, -1));
  auto f01 = A.add(A.unit, mu({0, 1}));
  auto fl = A.add(A.unit, mu({n - 1, n}));
  auto d0n = twisted_diff(A, mu({0}), mu({n}), x);
  Element r = A.scale(-sg(n - i), d0n);
  r = A.sub(r, A.scale(sg(i), A.mul(f01, mu(range(1, n, -1)))));
  r = A.sub(r, A.scale(sg(n - i), A.mul(mu(range(0, n - 1, -1)), fl)));
  for (int l = 1; l < n; ++l)
    if (l != i) r = A.sub(r, A.scale(sg(l - i), mu(range(0, n, l))));
  for (int l = 2; l <= n - 2; ++l)
    r = A.sub(r, A.scale(sg(static_cast<long long>(n) * l - n + i), A.mul(mu(range(0, l, -1)), mu(range(l, n, -1)))));
  return r;
}

// 2x2 product on coordinates E00 E01 E10 E11
QVec mat2(const QVec& a, const QVec& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

TEST_CASE("Maurer-Cartan equation agrees with the cochain algebra") {
  std::mt19937 g(11);
  for (Q c : {Q(0), Q(1)}) {
    auto A = end_two_term(c);
    for (int n = 1; n <= 3; ++n) {
      auto C = cochain_dga(standard_simplex(n));
      auto T = tensor_dga(C.alg, A);
      auto s = standard_simplex(n);
      for (int trial = 0; trial < 4; ++trial) {
        NervePoint p = random_end_point(A, c, n, g).p;
        if (trial % 2) {
          // perturb into a non-solution
          for (auto& I : increasing_tuples(n)) {
            int k = static_cast<int>(I.size()) - 1;
            if (k >= 1 && A.dim(1 - k) > 0) {
              p.mu[I] = A.add(component(p, I), random_in(A, 1 - k, g));
              break;
            }
          }
        }
        Element a;
        for (int q = 0; q <= n; ++q)
          for (int cell = 0; cell < s->count(q); ++cell) {
            Word I;
            for (int v : s->vertices(q, cell)) I.push_back(s->vertex_keys[v][0]);
            a = T.alg.add(a, T.embed(q, cell, component(p, I)));
          }
        auto res = mc_residual(T.alg, a);
        bool all = true;
        for (int q = 0; q <= n; ++q)
          for (int cell = 0; cell < s->count(q); ++cell) {
            Word I;
            for (int v : s->vertices(q, cell)) I.push_back(s->vertex_keys[v][0]);
            auto want = A.scale(q % 2 ? -1 : 1, mc_defect(A, p, I));
            CHECK(T.component(res, q, cell, A) == want);
            all = all && A.is_zero(want);
          }
        CHECK(nerve_check(A, p) == all);
        if (trial % 2 == 0) CHECK(all);
      }
    }
  }
}

TEST_CASE("M2(Q): inner 2-horn composes") {
  auto M = matrix_algebra(2);
  std::mt19937 g(3);
  for (int s = 0; s < 50; ++s) {
    QVec f01(4), f12(4);
    for (auto& q : f01) q = rnd(g);
    for (auto& q : f12) q = rnd(g);
    NervePoint h;
    h.n = 2;
    h.mu[{0, 1}] = M.sub(coords(0, f01), M.unit);
    h.mu[{1, 2}] = M.sub(coords(0, f12), M.unit);
    auto p = inner_horn_fill(M, h, 1, {});
    CHECK(nerve_check(M, p));
    auto f02 = M.add(M.unit, component(p, {0, 2}));
    CHECK(f02 == coords(0, mat2(f01, f12)));
  }
}

TEST_CASE("inner horn fillers in End(V)") {
  std::mt19937 g(5);
  for (Q c : {Q(0), Q(1)}) {
    auto A = end_two_term(c);
    for (int n = 2; n <= 4; ++n)
      for (int trial = 0; trial < 3; ++trial) {
        auto p = random_end_point(A, c, n, g).p;
        std::string why;
        INFO(why);
        REQUIRE(nerve_check(A, p, &why));
        Word top(n + 1);
        for (int v = 0; v <= n; ++v) top[v] = v;
        for (int i = 1; i < n; ++i) {
          auto horn = drop_horn_faces(p, i);
          auto x = component(p, top);
          auto filled = inner_horn_fill(A, horn, i, x);
          CHECK(filled == p);
          Word face = top;
          face.erase(face.begin() + i);
          if (n >= 3) CHECK(component(filled, face) == face_formula(A, p, n, i));
          if (n >= 3) CHECK(A.dim(1 - n) == 0);  // the filler has no free parameter
        }
        if (n == 2) {
          // n = 2 closed form
          auto x = component(p, {0, 1, 2});
          auto f01 = A.add(A.unit, component(p, {0, 1})), f12 = A.add(A.unit, component(p, {1, 2}));
          auto want = A.add(A.add(A.d(x), A.mul(component(p, {0}), x)), A.mul(x, component(p, {2})));
          want = A.add(want, A.sub(A.mul(f01, f12), A.unit));
          CHECK(component(p, {0, 2}) == want);
        }
      }
  }
}

TEST_CASE("simplicial operators preserve points") {
  std::mt19937 g(9);
  auto A = end_two_term(1);
  auto p = random_end_point(A, 1, 3, g).p;
  for (int i = 0; i <= 3; ++i) CHECK(nerve_check(A, operator_action(A, coface(3, i), p)));
  for (int j = 0; j <= 3; ++j) CHECK(nerve_check(A, operator_action(A, codegen(3, j), p)));
  auto obj = nerve_as_simplicial_object(A, {p}, 3);
  CHECK(obj.object->validate());
  CHECK(obj.object->size(3) >= 1);
}

TEST_CASE("psi is a DGA isomorphism") {
  for (Q c : {Q(0), Q(1)}) {
    auto A = end_two_term(c);
    int trunc = 6;
    auto t = thick_edge_cochains(A, trunc);
    auto& T = t.tensor;
    auto qdeg = [&](int d, int idx) { return T.parts[d - T.alg.lo][idx][0]; };
    auto a = a0(A);
    int checked = 0;
    for (int d1 = T.alg.lo; d1 <= 2; ++d1)
      for (int x = 0; x < T.alg.dim(d1); ++x) {
        if (qdeg(d1, x) > 3) continue;
        auto ex = T.alg.basis_element(d1, x);
        auto px = psi(A, t, ex);
        CHECK(in_V(A, px));
        CHECK(psi_inverse(A, t, px) == ex);
        auto lhs = psi(A, t, T.alg.d(ex));
        auto rhs = mat_add(A, mat_d(A, px), mat_commutator(A, a, px));
        CHECK(mat_equal(A, lhs, rhs));
        for (int d2 = T.alg.lo; d2 <= 2; ++d2)
          for (int y = 0; y < T.alg.dim(d2); ++y) {
            if (qdeg(d2, y) > 3) continue;
            auto ey = T.alg.basis_element(d2, y);
            CHECK(mat_equal(A, psi(A, t, T.alg.mul(ex, ey)), mat_mul(A, px, psi(A, t, ey))));
            ++checked;
          }
      }
    CHECK(checked > 100);
  }
}

TEST_CASE("Catalan lift of quasi-invertible edges") {
  std::mt19937 g(21);
  for (Q c : {Q(0), Q(1)}) {
    auto A = end_two_term(c);
    auto t = thick_edge_cochains(A, 7);
    for (int s = 0; s < 5; ++s) {
      auto e = random_end_point(A, c, 1, g);
      auto mu0 = component(e.p, {0}), mu1 = component(e.p, {1}), mu01 = component(e.p, {0, 1});
      auto w = quasi_invertible_solve(A, mu0, mu1, mu01);
      REQUIRE(w.has_value());
      auto lift = catalan_lift(A, mu0, mu1, mu01, *w);
      CHECK(lift.beta_ok);
      CHECK(lift.mc_ok);
      // the lift restricts to the given edge and is a point of the thick nerve
      auto m = psi_inverse(A, t, mat_sub(A, lift.a, a0(A)));
      CHECK(t.tensor.component(m, 0, 0, A) == mu0);
      CHECK(t.tensor.component(m, 0, 1, A) == mu1);
      int e01 = t.words[1][0] == Word{0, 1} ? 0 : 1;
      CHECK(t.tensor.component(m, 1, e01, A) == mu01);
      auto res = mc_residual(t.tensor.alg, m);
      CHECK(t.tensor.alg.is_zero(res));
    }
  }
  auto M = matrix_algebra(2);
  auto mu01 = M.sub(coords(0, {Q(2), Q(1), Q(1), Q(1)}), M.unit);
  auto w = quasi_invertible_solve(M, {}, {}, mu01);
  REQUIRE(w.has_value());
  auto lift = catalan_lift(M, {}, {}, mu01, *w);
  CHECK(lift.mc_ok);
}

TEST_CASE("smoothness identities") {
  std::mt19937 g(4);
  for (Q c : {Q(0), Q(1)}) {
    auto A = end_two_term(c);
    for (int s = 0; s < 3; ++s) {
      auto e = random_end_point(A, c, 1, g);
      auto mu0 = component(e.p, {0}), mu1 = component(e.p, {1}), mu01 = component(e.p, {0, 1});
      auto w = quasi_invertible_solve(A, mu0, mu1, mu01);
      REQUIRE(w.has_value());
      auto lift = catalan_lift(A, mu0, mu1, mu01, *w);
      auto r = smoothness_identities(A, lift.a, -2, 2);
      CHECK(r.b_ok);
      CHECK(r.h_identities);
      CHECK(r.p_closed);
      CHECK(r.H_identities);
      CHECK(r.P_closed);
      CHECK(r.ideal_sampled);
    }
  }
}

TEST_CASE("psi in total degree 1 has the displayed signs") {
  auto A = end_two_term(1);
  auto t = thick_edge_cochains(A, 3);
  auto mu = A.basis_element(1, 0);
  int v1 = t.words[0][0] == Word{1} ? 0 : 1;
  auto m = psi(A, t, t.tensor.embed(0, v1, mu));
  CHECK(m.get(1, 1, 0) == A.scale(-1, mu));
  auto h = A.basis_element(-1, 0);
  for (int c = 0; c < 2; ++c) {
    auto& w = t.words[2][c];
    auto m2 = psi(A, t, t.tensor.embed(2, c, h));
    if (w == Word{1, 0, 1}) CHECK(m2.get(1, 1, 1) == A.scale(-1, h));
    if (w == Word{0, 1, 0}) CHECK(m2.get(0, 0, 1) == h);
  }
}

TEST_CASE("sampled End(V) points are Maurer-Cartan and reproducible") {
  for (int c = 0; c <= 1; ++c) {
    auto A = end_two_term(Q(c));
    for (int n = 0; n <= 4; ++n) {
      std::mt19937_64 g1(17 + n), g2(17 + n);
      auto p = sample_two_term_point(A, Q(c), n, g1);
      std::string why;
      CHECK_MESSAGE(nerve_check(A, p, &why), why);
      CHECK(p == sample_two_term_point(A, Q(c), n, g2));
    }
  }
}

TEST_CASE("generic sampled points are Maurer-Cartan") {
  for (auto A : {matrix_algebra(2), end_two_term(0), end_two_term(1)}) {
    std::mt19937_64 g(5);
    for (int n = 0; n <= 4; ++n) {
      auto p = sample_point(A, n, g);
      std::string why;
      CHECK_MESSAGE(nerve_check(A, p, &why), why);
      for (int i = 0; i + 1 <= n; ++i) CHECK(A.is_zero(A.d(component(p, {i, i + 1}))));
    }
  }
}

TEST_CASE("psi check and two-term detection") {
  for (Q c : {Q(0), Q(1), Q(-3, 2)}) {
    auto A = end_two_term(c);
    auto r = psi_check(A, 2);
    CHECK_MESSAGE(r.ok, r.failure);
    CHECK(r.products == r.elements * r.elements);
    REQUIRE(two_term_parameter(A).has_value());
    CHECK(*two_term_parameter(A) == c);
  }
  CHECK_FALSE(two_term_parameter(matrix_algebra(2)).has_value());
  CHECK(psi_check(matrix_algebra(2), 2).ok);
}
