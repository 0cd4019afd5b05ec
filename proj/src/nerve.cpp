#include "simploid/nerve.hpp"

#include <sstream>

namespace simploid {

namespace {

int sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

const Element kZero{};

}  // namespace

std::vector<Word> increasing_tuples(int n) {
  std::vector<Word> out;
  for (int len = 1; len <= n + 1; ++len) {
    std::vector<Word> level;
    for (uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
      if (__builtin_popcount(mask) != len) continue;
      Word w;
      for (int v = 0; v <= n; ++v)
        if (mask >> v & 1) w.push_back(v);
      level.push_back(w);
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool NervePoint::operator==(const NervePoint& o) const {
  if (n != o.n) return false;
  for (auto& [I, m] : mu)
    if (!(m == component(o, I))) return false;
  for (auto& [I, m] : o.mu)
    if (!(m == component(*this, I))) return false;
  return true;
}

const Element& component(const NervePoint& p, const Word& tuple) {
  auto it = p.mu.find(tuple);
  return it == p.mu.end() ? kZero : it->second;
}

Element mc_defect(const DGAlgebra& A, const NervePoint& p, const Word& I) {
  int k = static_cast<int>(I.size()) - 1;
  Element r = A.d(component(p, I));
  if (k >= 1)
    for (int l = 0; l <= k; ++l) {
      Word f = I;
      f.erase(f.begin() + l);
      r = A.add(r, A.scale(sign(k - l), component(p, f)));
    }
  for (int l = 0; l <= k; ++l) {
    Word front(I.begin(), I.begin() + l + 1), back(I.begin() + l, I.end());
    r = A.add(r, A.scale(sign(static_cast<long long>(k) * l), A.mul(component(p, front), component(p, back))));
  }
  return r;
}

bool nerve_check(const DGAlgebra& A, const NervePoint& p, std::string* why) {
  for (auto& [I, m] : p.mu) {
    int k = static_cast<int>(I.size()) - 1;
    auto deg = A.degree(m);
    if (deg && *deg != 1 - k) {
      if (why) *why = "component of wrong degree";
      return false;
    }
  }
  for (auto& I : increasing_tuples(p.n)) {
    auto r = mc_defect(A, p, I);
    if (!A.is_zero(r)) {
      if (why) {
        std::ostringstream os;
        os << "Maurer-Cartan equation fails at (";
        for (size_t j = 0; j < I.size(); ++j) os << (j ? "," : "") << I[j];
        os << "): " << A.show(r);
        *why = os.str();
      }
      return false;
    }
  }
  return true;
}

NervePoint operator_action(const DGAlgebra& A, const Word& theta, const NervePoint& p) {
  NervePoint r;
  r.n = static_cast<int>(theta.size()) - 1;
  for (auto& J : increasing_tuples(r.n)) {
    Word img;
    bool inj = true;
    for (int j : J) {
      if (!img.empty() && img.back() == theta[j]) inj = false;
      img.push_back(theta[j]);
    }
    if (!inj) continue;
    auto& m = component(p, img);
    if (!A.is_zero(m)) r.mu[J] = m;
  }
  return r;
}

NervePoint fill_face(const DGAlgebra& A, const NervePoint& p, const Word& tuple, int i, const Element& x) {
  int n = static_cast<int>(tuple.size()) - 1;
  if (i <= 0 || i >= n) throw InvalidInput("horn is not inner");
  auto deg = A.degree(x);
  if (deg && *deg != 1 - n) throw InvalidInput("filler parameter has the wrong degree");
  NervePoint r = p;
  Word face = tuple;
  face.erase(face.begin() + i);
  r.mu[tuple] = x;
  r.mu.erase(face);
  auto rest = mc_defect(A, r, tuple);
  auto sol = A.scale(-sign(n - i), rest);
  if (!A.is_zero(sol)) r.mu[face] = sol;
  if (A.is_zero(x)) r.mu.erase(tuple);
  return r;
}

NervePoint drop_horn_faces(const NervePoint& p, int i) {
  NervePoint r = p;
  Word top(p.n + 1);
  for (int v = 0; v <= p.n; ++v) top[v] = v;
  r.mu.erase(top);
  top.erase(top.begin() + i);
  r.mu.erase(top);
  return r;
}

NervePoint inner_horn_fill(const DGAlgebra& A, const NervePoint& horn, int i, const Element& x) {
  Word top(horn.n + 1);
  for (int v = 0; v <= horn.n; ++v) top[v] = v;
  auto h = drop_horn_faces(horn, i);
  std::string why;
  for (auto& I : increasing_tuples(horn.n)) {
    if (I == top) continue;
    Word face = top;
    face.erase(face.begin() + i);
    if (I == face) continue;
    if (!A.is_zero(mc_defect(A, h, I))) throw InvalidInput("horn data does not satisfy the Maurer-Cartan equation");
  }
  return fill_face(A, h, top, i, x);
}

Element Matrix2U::get(int i, int j, int p) const {
  auto& m = e[2 * i + j];
  auto it = m.find(p);
  return it == m.end() ? Element{} : it->second;
}

namespace {

void clean(const DGAlgebra& A, Matrix2U& x) {
  for (auto& m : x.e)
    for (auto it = m.begin(); it != m.end();) {
      A.normalize(it->second);
      if (A.is_zero(it->second))
        it = m.erase(it);
      else
        ++it;
    }
}

}  // namespace

Matrix2U mat_add(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y) {
  Matrix2U r = x;
  for (int k = 0; k < 4; ++k)
    for (auto& [p, v] : y.e[k]) r.e[k][p] = A.add(r.e[k][p], v);
  clean(A, r);
  return r;
}

Matrix2U mat_scale(const DGAlgebra& A, const Q& q, const Matrix2U& x) {
  Matrix2U r = x;
  for (auto& m : r.e)
    for (auto& [p, v] : m) v = A.scale(q, v);
  clean(A, r);
  return r;
}

Matrix2U mat_sub(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y) { return mat_add(A, x, mat_scale(A, -1, y)); }

Matrix2U mat_mul(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y) {
  Matrix2U r;
  r.degree = x.degree + y.degree;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        for (auto& [p, a] : x.e[2 * i + l])
          for (auto& [q, b] : y.e[2 * l + j]) {
            auto& t = r.e[2 * i + j][p + q];
            t = A.add(t, A.mul(a, b));
          }
  clean(A, r);
  return r;
}

Matrix2U mat_d(const DGAlgebra& A, const Matrix2U& x) {
  Matrix2U r;
  r.degree = x.degree + 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (auto& [p, a] : x.e[2 * i + j]) r.e[2 * i + j][p] = A.scale(sign(i), A.d(a));
  clean(A, r);
  return r;
}

Matrix2U mat_commutator(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y) {
  return mat_sub(A, mat_mul(A, x, y), mat_scale(A, sign(static_cast<long long>(x.degree) * y.degree), mat_mul(A, y, x)));
}

Matrix2U mat_u_times(const Matrix2U& x, int power) {
  Matrix2U r;
  r.degree = x.degree + 2 * power;
  for (int k = 0; k < 4; ++k)
    for (auto& [p, v] : x.e[k]) r.e[k][p + power] = v;
  return r;
}

Matrix2U mat_identity(const DGAlgebra& A) { return mat_from(A, 0, A.unit, {}, {}, A.unit); }

Matrix2U mat_from(const DGAlgebra& A, int degree, const Element& e00, const Element& e01, const Element& e10,
                  const Element& e11) {
  Matrix2U r;
  r.degree = degree;
  r.e[0][0] = e00;
  r.e[1][0] = e01;
  r.e[2][0] = e10;
  r.e[3][0] = e11;
  clean(A, r);
  return r;
}

bool mat_is_zero(const DGAlgebra& A, const Matrix2U& x) {
  for (auto& m : x.e)
    for (auto& [p, v] : m)
      if (!A.is_zero(v)) return false;
  return true;
}

bool mat_equal(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y) {
  auto dx = x, dy = y;
  dx.degree = dy.degree = 0;
  return mat_is_zero(A, mat_sub(A, dx, dy));
}

bool in_V(const DGAlgebra& A, const Matrix2U& x) { return A.is_zero(x.get(1, 0, 0)); }

std::string mat_show(const DGAlgebra& A, const Matrix2U& x) {
  std::ostringstream os;
  os << "deg " << x.degree << " [";
  for (int k = 0; k < 4; ++k) {
    os << (k ? "; " : "");
    bool first = true;
    for (auto& [p, v] : x.e[k]) {
      os << (first ? "" : " + ") << "(" << A.show(v) << ")u^" << p;
      first = false;
    }
    if (first) os << "0";
  }
  os << "]";
  return os.str();
}

ThickEdgeCochains thick_edge_cochains(const DGAlgebra& A, int trunc) {
  ThickEdgeCochains t;
  t.edge = thick_simplex(1, trunc);
  t.cochains = cochain_dga(t.edge);
  t.tensor = tensor_dga(t.cochains.alg, A);
  t.words.assign(t.edge->max_dim() + 1, {});
  for (int q = 0; q <= t.edge->max_dim(); ++q)
    for (int c = 0; c < t.edge->count(q); ++c) {
      Word w;
      for (int v : t.edge->vertices(q, c)) w.push_back(t.edge->vertex_keys[v][0]);
      t.words[q].push_back(w);
    }
  return t;
}

Matrix2U a0(const DGAlgebra& A) {
  Matrix2U r;
  r.degree = 1;
  r.e[1][0] = A.unit;
  r.e[2][1] = A.unit;
  return r;
}

Matrix2U psi(const DGAlgebra& A, const ThickEdgeCochains& t, const Element& x) {
  Matrix2U r;
  auto deg = t.tensor.alg.degree(x);
  r.degree = deg ? *deg : 0;
  for (auto& [d, v] : x.c)
    for (size_t idx = 0; idx < v.size(); ++idx) {
      if (v[idx] == 0) continue;
      auto [q, c, ad, ai] = t.tensor.parts[d - t.tensor.alg.lo][idx];
      auto& w = t.words[q][c];
      int s = w.front(), e = w.back();
      int p = (q + s - e) / 2;
      Q coef = (e == 1 && ad % 2 != 0) ? Q(-v[idx]) : v[idx];
      auto& slot = r.e[2 * s + e][p];
      slot = A.add(slot, A.scale(coef, A.basis_element(ad, ai)));
    }
  clean(A, r);
  return r;
}

Element psi_inverse(const DGAlgebra& A, const ThickEdgeCochains& t, const Matrix2U& m) {
  Element r;
  auto& T = t.tensor;
  for (int s = 0; s < 2; ++s)
    for (int e = 0; e < 2; ++e)
      for (auto& [p, v] : m.e[2 * s + e]) {
        int q = 2 * p - s + e;
        if (q < 0 || q >= static_cast<int>(t.words.size())) continue;
        for (int c = 0; c < static_cast<int>(t.words[q].size()); ++c)
          if (t.words[q][c].front() == s) {
            Element coef;
            for (auto& [ad, cv] : v.c) coef = A.add(coef, A.scale(e == 1 && ad % 2 != 0 ? -1 : 1, A.part(v, ad)));
            r = T.alg.add(r, T.embed(q, c, coef));
          }
      }
  return r;
}

bool thick_edge_check(const DGAlgebra& A, const Matrix2U& a, std::string* why) {
  auto lhs = mat_add(A, mat_d(A, a), mat_mul(A, a, a));
  if (!mat_equal(A, lhs, mat_u_times(mat_identity(A)))) {
    if (why) *why = "da + a^2 != u.1: " + mat_show(A, lhs);
    return false;
  }
  if (!in_V(A, mat_sub(A, a, a0(A)))) {
    if (why) *why = "a - a0 not in VA";
    return false;
  }
  return true;
}

CatalanLift catalan_lift(const DGAlgebra& A, const Element& mu0, const Element& mu1, const Element& mu01,
                         const QuasiInverse& w) {
  CatalanLift out;
  Element f = A.add(A.unit, mu01);
  Element c = A.sub(A.mul(f, w.k), A.mul(w.h, f));
  out.alpha = mat_from(A, 1, mu0, f, {}, A.scale(-1, mu1));
  out.beta = mat_from(A, -1, w.h, A.mul(w.h, c), w.g, A.add(A.scale(-1, w.k), A.mul(w.g, c)));
  auto lhs = mat_add(A, mat_d(A, out.beta), mat_commutator(A, out.alpha, out.beta));
  out.beta_ok = mat_equal(A, lhs, mat_identity(A));
  out.a = out.alpha;
  auto b2 = mat_mul(A, out.beta, out.beta);
  auto pw = out.beta;  // beta^{2n+1}
  mpz_class catalan = 1;
  for (int n = 0; n < 64 && !mat_is_zero(A, pw); ++n) {
    Q coef = Q(catalan) * sign(n);
    out.a = mat_add(A, out.a, mat_scale(A, coef, mat_u_times(pw, n + 1)));
    ++out.terms;
    catalan = catalan * 2 * (2 * n + 1) / (n + 2);
    pw = mat_mul(A, pw, b2);
  }
  out.a.degree = 1;
  out.mc_ok = thick_edge_check(A, out.a);
  return out;
}

std::vector<Matrix2U> v_basis(const DGAlgebra& A, int degree) {
  std::vector<Matrix2U> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = (i == 1 && j == 0) ? 1 : 0;; ++p) {
        int ad = degree + i - j - 2 * p;
        if (ad < A.lo) break;
        for (int b = 0; b < A.dim(ad); ++b) {
          Matrix2U m;
          m.degree = degree;
          m.e[2 * i + j][p] = A.basis_element(ad, b);
          out.push_back(m);
        }
      }
  return out;
}

namespace {

// coordinates of a homogeneous element of VA in the v_basis ordering
QVec v_coords(const DGAlgebra& A, int degree, const Matrix2U& x) {
  QVec out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = (i == 1 && j == 0) ? 1 : 0;; ++p) {
        int ad = degree + i - j - 2 * p;
        if (ad < A.lo) break;
        auto e = x.get(i, j, p);
        auto it = e.c.find(ad);
        for (int b = 0; b < A.dim(ad); ++b) out.push_back(it == e.c.end() ? Q(0) : it->second[b]);
      }
  return out;
}

}  // namespace

SmoothnessReport smoothness_identities(const DGAlgebra& A, const Matrix2U& a, int deg_lo, int deg_hi) {
  SmoothnessReport rep;
  Matrix2U b;
  b.degree = -1;
  for (int k = 0; k < 4; ++k)
    for (auto& [p, v] : a.e[k])
      if (p >= 1) b.e[k][p - 1] = A.scale(p, v);
  clean(A, b);
  auto D = [&](const Matrix2U& x) { return mat_add(A, mat_d(A, x), mat_commutator(A, a, x)); };
  auto B = [&](const Matrix2U& x) { return mat_mul(A, b, x); };
  rep.b_ok = mat_equal(A, D(b), mat_identity(A));

  auto q_proj = [&](const Matrix2U& x) {
    Matrix2U r;
    r.degree = x.degree;
    r.e[0][0] = x.get(0, 0, 0);
    clean(A, r);
    return r;
  };
  auto Q_proj = [&](const Matrix2U& x) {
    Matrix2U r;
    r.degree = x.degree;
    for (int k = 0; k < 4; ++k) r.e[k][0] = x.get(k / 2, k % 2, 0);
    clean(A, r);
    return r;
  };
  auto run = [&](const std::function<Matrix2U(const Matrix2U&)>& pi, bool& ident, bool& closed) {
    auto h = [&](const Matrix2U& x) {
      auto y = mat_sub(A, x, pi(x));
      y.degree = x.degree;
      auto r = mat_sub(A, B(y), B(B(D(y))));
      r.degree = x.degree - 1;
      return r;
    };
    ident = closed = true;
    for (int k = deg_lo; k <= deg_hi; ++k)
      for (auto& x : v_basis(A, k)) {
        ++rep.checked;
        auto hx = h(x);
        if (!mat_equal(A, h(D(hx)), hx) || !mat_is_zero(A, h(hx))) ident = false;
        auto p = mat_add(A, D(h(x)), h(D(x)));
        auto px = pi(x);
        auto dpx = D(px);
        auto pdx = pi(D(x));
        auto closed_form = mat_add(A, mat_sub(A, x, px), B(mat_sub(A, dpx, pdx)));
        if (!mat_equal(A, p, closed_form)) closed = false;
      }
    return h;
  };
  run(q_proj, rep.h_identities, rep.p_closed);
  run(Q_proj, rep.H_identities, rep.P_closed);

  // sampled: products of p(x) with basis elements stay in the image of p
  auto p_op = [&](const Matrix2U& x) {
    auto y = mat_sub(A, x, q_proj(x));
    auto dq = mat_sub(A, D(q_proj(x)), q_proj(D(x)));
    auto r = mat_add(A, y, B(dq));
    r.degree = x.degree;
    return r;
  };
  rep.ideal_sampled = true;
  for (int k = deg_lo; k <= deg_hi; ++k)
    for (int l = deg_lo; l <= deg_hi; ++l) {
      auto bk = v_basis(A, k), bl = v_basis(A, l);
      auto bm = v_basis(A, k + l);
      QMatrix span;
      for (auto& e : bm) span.push_back(v_coords(A, k + l, p_op(e)));
      int r0 = linalg::rank(span);
      for (size_t s = 0; s < bk.size() && s < 3; ++s)
        for (size_t t = 0; t < bl.size() && t < 3; ++t) {
          auto px = p_op(bk[s]);
          for (auto z : {mat_mul(A, px, bl[t]), mat_mul(A, bl[t], px)}) {
            auto ext = span;
            ext.push_back(v_coords(A, k + l, z));
            if (linalg::rank(ext) != r0) rep.ideal_sampled = false;
          }
        }
    }
  return rep;
}

Q sample_rational(std::mt19937_64& g, int range, bool nonzero) {
  while (true) {
    Q q(static_cast<long>(g() % static_cast<uint64_t>(2 * range + 1)) - range);
    if (!nonzero || q != 0) return q;
  }
}

Element sample_element(const DGAlgebra& A, int degree, std::mt19937_64& g) {
  Element e;
  if (A.dim(degree) == 0) return e;
  QVec v(A.dim(degree));
  for (auto& q : v) q = sample_rational(g);
  e.c[degree] = v;
  A.normalize(e);
  return e;
}

PsiCheck psi_check(const DGAlgebra& A, int max_total) {
  int qmax = max_total - std::min(A.lo, 0);
  auto t = thick_edge_cochains(A, 2 * qmax);
  auto& T = t.tensor;
  auto a = a0(A);
  PsiCheck r;
  auto fail = [&](const std::string& what) {
    if (r.ok) r.failure = what;
    r.ok = false;
  };
  if (!mat_equal(A, psi(A, t, T.alg.unit), mat_identity(A))) fail("psi(1) != 1");
  std::vector<Element> basis;
  for (int d = T.alg.lo; d <= max_total; ++d)
    for (int x = 0; x < T.alg.dim(d); ++x)
      if (T.parts[d - T.alg.lo][x][0] <= qmax) basis.push_back(T.alg.basis_element(d, x));
  for (auto& ex : basis) {
    ++r.elements;
    auto px = psi(A, t, ex);
    if (!in_V(A, px)) fail("psi(" + T.alg.show(ex) + ") not in VA");
    if (!(psi_inverse(A, t, px) == ex)) fail("psi^-1 psi(" + T.alg.show(ex) + ") != identity");
    if (!mat_equal(A, psi(A, t, T.alg.d(ex)), mat_add(A, mat_d(A, px), mat_commutator(A, a, px))))
      fail("delta differs at " + T.alg.show(ex));
    for (auto& ey : basis) {
      ++r.products;
      if (!mat_equal(A, psi(A, t, T.alg.mul(ex, ey)), mat_mul(A, px, psi(A, t, ey))))
        fail("product differs at " + T.alg.show(ex) + " * " + T.alg.show(ey));
    }
  }
  return r;
}

std::optional<Q> two_term_parameter(const DGAlgebra& A) {
  if (A.lo != -1 || A.hi != 1 || A.dim(0) != 2) return std::nullopt;
  auto it = A.diff.find(0);
  if (it == A.diff.end() || it->second.empty() || it->second[0].empty()) return std::nullopt;
  Q v = it->second[0][0];
  for (Q c : {v, Q(-v)}) {
    auto B = end_two_term(c);
    bool same = B.basis == A.basis && B.unit == A.unit;
    for (int d = -1; same && d <= 1; ++d)
      for (int x = 0; same && x < 2 - (d != 0); ++x) {
        auto ex = A.basis_element(d, x);
        same = A.d(ex) == B.d(ex);
        for (int e = -1; same && e <= 1; ++e)
          for (int y = 0; same && y < 2 - (e != 0); ++y) same = A.mul(ex, A.basis_element(e, y)) == B.mul(ex, B.basis_element(e, y));
      }
    if (same) return c;
  }
  return std::nullopt;
}

Element sample_cocycle(const DGAlgebra& A, int degree, std::mt19937_64& g) {
  int dim = A.dim(degree);
  Element e;
  if (dim == 0) return e;
  QMatrix m;
  auto it = A.diff.find(degree);
  if (it != A.diff.end()) m = it->second;
  std::vector<int> pivots;
  if (!m.empty()) pivots = linalg::rref(m);
  QVec v(dim);
  std::vector<char> is_pivot(dim, 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    Q t = sample_rational(g);
    v[f] += t;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] -= t * m[r][f];
  }
  e.c[degree] = v;
  A.normalize(e);
  return e;
}

// spine simplices first, larger start vertex first within a dimension
static NervePoint fill_spine(const DGAlgebra& A, NervePoint p, std::mt19937_64& g) {
  int n = p.n;
  for (int k = 2; k <= n; ++k)
    for (int i0 = n; i0 >= 0; --i0)
      for (auto& I : increasing_tuples(n))
        if (static_cast<int>(I.size()) == k + 1 && I[0] == i0 && I[1] == i0 + 1)
          p = fill_face(A, p, I, 1, sample_element(A, 1 - k, g));
  return p;
}

NervePoint sample_point(const DGAlgebra& A, int n, std::mt19937_64& g) {
  NervePoint p;
  p.n = n;
  for (int i = 0; i < n; ++i) {
    auto mu = sample_cocycle(A, 0, g);
    if (!A.is_zero(mu)) p.mu[{i, i + 1}] = mu;
  }
  return fill_spine(A, p, g);
}

NervePoint sample_two_term_point(const DGAlgebra& A, const Q& c, int n, std::mt19937_64& g) {
  NervePoint p;
  p.n = n;
  std::vector<Q> t;
  for (int i = 0; i <= n; ++i) {
    Q ti = sample_rational(g);
    while (c + ti == 0) ti = sample_rational(g);
    t.push_back(ti);
    if (ti != 0) p.mu[{i}] = A.scale(ti, A.basis_element(1, 0));
  }
  for (int i = 0; i < n; ++i) {
    Q a = sample_rational(g, 3, true);
    Q b = (c + t[i]) * a / (c + t[i + 1]);
    Element f;
    f.c[0] = {a, b};
    auto mu = A.sub(f, A.unit);
    if (!A.is_zero(mu)) p.mu[{i, i + 1}] = mu;
  }
  return fill_spine(A, p, g);
}

namespace {

std::string point_key(const NervePoint& p) {
  std::ostringstream os;
  os << p.n << ":";
  for (auto& [I, m] : p.mu) {
    bool nz = false;
    for (auto& [d, v] : m.c)
      for (auto& q : v) nz = nz || q != 0;
    if (!nz) continue;
    for (int v : I) os << v << ",";
    os << "=";
    for (auto& [d, v] : m.c) {
      os << d << "(";
      for (auto& q : v) os << q.get_str() << " ";
      os << ")";
    }
    os << ";";
  }
  return os.str();
}

}  // namespace

NerveObject nerve_as_simplicial_object(const DGAlgebra& A, const std::vector<NervePoint>& generators, int depth) {
  NerveObject out;
  out.points.assign(depth + 1, {});
  std::vector<std::map<std::string, int>> ids(depth + 1);
  std::vector<std::pair<int, int>> todo;
  auto insert = [&](NervePoint p) {
    for (auto it = p.mu.begin(); it != p.mu.end();) {
      A.normalize(it->second);
      it = A.is_zero(it->second) ? p.mu.erase(it) : std::next(it);
    }
    auto key = point_key(p);
    auto& m = ids[p.n];
    auto it = m.find(key);
    if (it != m.end()) return it->second;
    int id = static_cast<int>(out.points[p.n].size());
    m[key] = id;
    out.points[p.n].push_back(p);
    todo.push_back({p.n, id});
    return id;
  };
  for (auto& g : generators)
    if (g.n <= depth) insert(g);
  while (!todo.empty()) {
    auto [n, id] = todo.back();
    todo.pop_back();
    NervePoint p = out.points[n][id];
    if (n >= 1)
      for (int i = 0; i <= n; ++i) insert(operator_action(A, coface(n, i), p));
    if (n < depth)
      for (int j = 0; j <= n; ++j) insert(operator_action(A, codegen(n, j), p));
  }
  auto x = std::make_shared<TruncatedSimplicialObject>();
  x->sizes.resize(depth + 1);
  x->face.resize(depth + 1);
  x->degen.resize(depth);
  x->labels.resize(depth + 1);
  auto lookup = [&](const NervePoint& p) {
    NervePoint c = p;
    for (auto it = c.mu.begin(); it != c.mu.end();) {
      A.normalize(it->second);
      it = A.is_zero(it->second) ? c.mu.erase(it) : std::next(it);
    }
    return ids[c.n].at(point_key(c));
  };
  for (int n = 0; n <= depth; ++n) {
    int sz = static_cast<int>(out.points[n].size());
    x->sizes[n] = sz;
    for (int k = 0; k < sz; ++k) x->labels[n].push_back("p" + std::to_string(n) + "_" + std::to_string(k));
    if (n >= 1) {
      x->face[n].assign(n + 1, std::vector<int>(sz));
      for (int i = 0; i <= n; ++i)
        for (int k = 0; k < sz; ++k) x->face[n][i][k] = lookup(operator_action(A, coface(n, i), out.points[n][k]));
    }
    if (n < depth) {
      x->degen[n].assign(n + 1, std::vector<int>(sz));
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k < sz; ++k) x->degen[n][j][k] = lookup(operator_action(A, codegen(n, j), out.points[n][k]));
    }
  }
  out.object = x;
  return out;
}

}  // namespace simploid
