#include "simploid/dga.hpp"

#include <sstream>

namespace simploid {

namespace linalg {

std::vector<int> rref(QMatrix& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (size_t q = 0; q < rows; ++q) {
      if (q == r || m[q][c] == 0) continue;
      Q f = m[q][c];
      for (size_t j = c; j < cols; ++j) m[q][j] -= f * m[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<QVec> solve(const QMatrix& m, const QVec& b) {
  size_t cols = m.empty() ? 0 : m[0].size();
  QMatrix aug = m;
  for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
  QVec x(cols, Q(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

}  // namespace linalg

namespace {

bool all_zero(const QVec& v) {
  for (auto& q : v)
    if (q != 0) return false;
  return true;
}

int sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

bool Element::operator==(const Element& o) const {
  for (auto& [d, v] : c) {
    auto it = o.c.find(d);
    if (it == o.c.end()) {
      if (!all_zero(v)) return false;
    } else if (v != it->second) {
      return false;
    }
  }
  for (auto& [d, v] : o.c)
    if (!c.count(d) && !all_zero(v)) return false;
  return true;
}

int DGAlgebra::dim(int d) const {
  if (d < lo || d > hi) return 0;
  return static_cast<int>(basis[d - lo].size());
}

Element DGAlgebra::basis_element(int d, int idx) const {
  Element e;
  QVec v(dim(d), Q(0));
  v.at(idx) = 1;
  e.c[d] = v;
  return e;
}

Element DGAlgebra::scalar(const Q& q) const { return scale(q, unit); }

void DGAlgebra::normalize(Element& x) const {
  for (auto it = x.c.begin(); it != x.c.end();) {
    if (dim(it->first) == 0 || all_zero(it->second))
      it = x.c.erase(it);
    else
      ++it;
  }
}

Element DGAlgebra::add(const Element& x, const Element& y) const {
  Element r = x;
  for (auto& [d, v] : y.c) {
    auto& t = r.c[d];
    if (t.empty()) t.assign(dim(d), Q(0));
    for (size_t i = 0; i < v.size(); ++i) t[i] += v[i];
  }
  normalize(r);
  return r;
}

Element DGAlgebra::scale(const Q& q, const Element& x) const {
  Element r = x;
  for (auto& [d, v] : r.c)
    for (auto& a : v) a *= q;
  normalize(r);
  return r;
}

Element DGAlgebra::sub(const Element& x, const Element& y) const { return add(x, scale(-1, y)); }

Element DGAlgebra::mul(const Element& x, const Element& y) const {
  Element r;
  for (auto& [i, xv] : x.c)
    for (auto& [j, yv] : y.c) {
      auto it = prod.find({i, j});
      if (it == prod.end()) continue;
      auto& t = r.c[i + j];
      if (t.empty()) t.assign(dim(i + j), Q(0));
      for (size_t a = 0; a < xv.size(); ++a) {
        if (xv[a] == 0) continue;
        for (size_t b = 0; b < yv.size(); ++b) {
          if (yv[b] == 0) continue;
          Q coef = xv[a] * yv[b];
          for (auto& [k, q] : it->second[a][b]) t[k] += coef * q;
        }
      }
    }
  normalize(r);
  return r;
}

Element DGAlgebra::d(const Element& x) const {
  Element r;
  for (auto& [i, v] : x.c) {
    auto it = diff.find(i);
    if (it == diff.end()) continue;
    QVec out(dim(i + 1), Q(0));
    for (size_t row = 0; row < out.size(); ++row)
      for (size_t col = 0; col < v.size(); ++col)
        if (v[col] != 0) out[row] += it->second[row][col] * v[col];
    r.c[i + 1] = out;
  }
  normalize(r);
  return r;
}

Element DGAlgebra::part(const Element& x, int deg) const {
  Element r;
  auto it = x.c.find(deg);
  if (it != x.c.end()) r.c[deg] = it->second;
  normalize(r);
  return r;
}

bool DGAlgebra::is_zero(const Element& x) const {
  for (auto& [d, v] : x.c)
    if (!all_zero(v)) return false;
  return true;
}

std::optional<int> DGAlgebra::degree(const Element& x) const {
  std::optional<int> deg;
  for (auto& [d, v] : x.c) {
    if (all_zero(v)) continue;
    if (deg) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::string DGAlgebra::show(const Element& x) const {
  std::ostringstream os;
  bool first = true;
  for (auto& [d, v] : x.c)
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << rational_text(v[i]) << "*" << basis[d - lo][i];
    }
  if (first) os << "0";
  return os.str();
}

int DGAlgebra::vanishing_k() const {
  int k = 0;
  while (true) {
    bool ok = true;
    for (int i = lo; i <= -k; ++i)
      if (dim(i) > 0) ok = false;
    if (ok) return k;
    ++k;
  }
}

std::optional<std::string> DGAlgebra::check_invariants() const {
  auto name = [&](int d, int i) { return basis[d - lo][i]; };
  for (int d = lo; d <= hi; ++d)
    for (int i = 0; i < dim(d); ++i)
      if (!is_zero(this->d(this->d(basis_element(d, i))))) return "d^2 != 0 on " + name(d, i);
  if (!is_zero(this->d(unit))) return std::string("d(1) != 0");
  for (int d = lo; d <= hi; ++d)
    for (int i = 0; i < dim(d); ++i) {
      auto e = basis_element(d, i);
      if (!(mul(unit, e) == e) || !(mul(e, unit) == e)) return "unit fails on " + name(d, i);
    }
  for (int p = lo; p <= hi; ++p)
    for (int q = lo; q <= hi; ++q)
      for (int a = 0; a < dim(p); ++a)
        for (int b = 0; b < dim(q); ++b) {
          auto x = basis_element(p, a), y = basis_element(q, b);
          auto lhs = this->d(mul(x, y));
          auto rhs = add(mul(this->d(x), y), scale(sign(p), mul(x, this->d(y))));
          if (!(lhs == rhs)) return "Leibniz fails on (" + name(p, a) + ", " + name(q, b) + ")";
        }
  for (int p = lo; p <= hi; ++p)
    for (int q = lo; q <= hi; ++q)
      for (int r = lo; r <= hi; ++r)
        for (int a = 0; a < dim(p); ++a)
          for (int b = 0; b < dim(q); ++b) {
            auto xy = mul(basis_element(p, a), basis_element(q, b));
            for (int c = 0; c < dim(r); ++c) {
              auto z = basis_element(r, c);
              auto lhs = mul(xy, z);
              auto rhs = mul(basis_element(p, a), mul(basis_element(q, b), z));
              if (!(lhs == rhs))
                return "associativity fails on (" + name(p, a) + ", " + name(q, b) + ", " + name(r, c) + ")";
            }
          }
  return std::nullopt;
}

Element commutator(const DGAlgebra& A, const Element& a, const Element& b) {
  auto da = A.degree(a), db = A.degree(b);
  if (!da || !db) {
    if (A.is_zero(a) || A.is_zero(b)) return {};
    // bilinear extension over homogeneous parts
    Element r;
    for (auto& [i, v] : a.c)
      for (auto& [j, w] : b.c) r = A.add(r, commutator(A, A.part(a, i), A.part(b, j)));
    return r;
  }
  return A.sub(A.mul(a, b), A.scale(sign(static_cast<long long>(*da) * *db), A.mul(b, a)));
}

DGAlgebra end_complex(const std::vector<int>& vdeg, const QMatrix& dv) {
  int n = static_cast<int>(vdeg.size());
  DGAlgebra A;
  std::map<int, std::vector<std::pair<int, int>>> units;  // degree -> (i, j)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) units[vdeg[i] - vdeg[j]].push_back({i, j});
  A.lo = units.begin()->first;
  A.hi = units.rbegin()->first;
  A.basis.assign(A.hi - A.lo + 1, {});
  std::map<std::pair<int, int>, std::pair<int, int>> where;
  for (auto& [d, list] : units)
    for (auto& [i, j] : list) {
      where[{i, j}] = {d, static_cast<int>(A.basis[d - A.lo].size())};
      A.basis[d - A.lo].push_back("E" + std::to_string(i) + std::to_string(j));
    }
  for (int p = A.lo; p <= A.hi; ++p)
    for (int q = A.lo; q <= A.hi; ++q) {
      if (p + q < A.lo || p + q > A.hi) continue;
      auto& t = A.prod[{p, q}];
      t.assign(A.dim(p), std::vector<SparseVec>(A.dim(q)));
      for (auto& [i, j] : units[p])
        for (auto& [k, l] : units[q])
          if (j == k) t[where[{i, j}].second][where[{k, l}].second].push_back({where[{i, l}].second, Q(1)});
    }
  // d(phi) = dv phi - (-1)^{|phi|} phi dv
  for (int p = A.lo; p < A.hi; ++p) {
    QMatrix m(A.dim(p + 1), QVec(A.dim(p), Q(0)));
    for (auto& [i, j] : units[p]) {
      int col = where[{i, j}].second;
      for (int r = 0; r < n; ++r) {
        if (dv[r][i] != 0) m[where.at({r, j}).second][col] += dv[r][i];
        if (dv[j][r] != 0) m[where.at({i, r}).second][col] -= sign(p) * dv[j][r];
      }
    }
    A.diff[p] = m;
  }
  for (int i = 0; i < n; ++i) {
    auto [d, idx] = where[{i, i}];
    A.unit = A.add(A.unit, A.basis_element(d, idx));
  }
  return A;
}

DGAlgebra matrix_algebra(int n) { return end_complex(std::vector<int>(n, 0), QMatrix(n, QVec(n, Q(0)))); }

DGAlgebra end_two_term(const Q& c) { return end_complex({0, 1}, {{0, 0}, {c, 0}}); }

CochainDGA cochain_dga(const SSet& t, int max_degree) {
  CochainDGA out{t, {}};
  auto& A = out.alg;
  int top = t->max_dim();
  if (max_degree >= 0) top = std::min(top, max_degree);
  A.lo = 0;
  A.hi = top;
  A.basis.assign(top + 1, {});
  for (int n = 0; n <= top; ++n) A.basis[n] = t->labels[n];
  for (int n = 1; n <= top; ++n) {
    QMatrix m(A.dim(n), QVec(A.dim(n - 1), Q(0)));
    for (int c = 0; c < A.dim(n); ++c)
      for (int i = 0; i <= n; ++i) {
        auto& f = t->face(n, c, i);
        if (f.nondegenerate()) m[c][f.base] += sign(i);
      }
    A.diff[n - 1] = m;
  }
  if (top >= 0) A.diff[top] = QMatrix(0, QVec(A.dim(top), Q(0)));
  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q <= top; ++q) A.prod[{p, q}].assign(A.dim(p), std::vector<SparseVec>(A.dim(q)));
  for (int n = 0; n <= top; ++n)
    for (int c = 0; c < A.dim(n); ++c)
      for (int j = 0; j <= n; ++j) {
        Word front, back;
        for (int v = 0; v <= j; ++v) front.push_back(v);
        for (int v = j; v <= n; ++v) back.push_back(v);
        auto& f = t->face_along(n, c, front);
        auto& b = t->face_along(n, c, back);
        if (f.nondegenerate() && b.nondegenerate()) A.prod[{j, n - j}][f.base][b.base].push_back({c, Q(1)});
      }
  for (int v = 0; v < A.dim(0); ++v) A.unit = A.add(A.unit, A.basis_element(0, v));
  return out;
}

Element TensorDGA::embed(int cdeg, int cidx, const Element& a) const {
  Element r;
  for (auto& [ad, v] : a.c)
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      auto it = index.find({cdeg, cidx, ad, static_cast<int>(i)});
      if (it == index.end()) continue;
      auto& t = r.c[it->second.first];
      if (t.empty()) t.assign(alg.dim(it->second.first), Q(0));
      t[it->second.second] += v[i];
    }
  alg.normalize(r);
  return r;
}

Element TensorDGA::component(const Element& x, int cdeg, int cidx, const DGAlgebra& a) const {
  Element r;
  for (auto& [d, v] : x.c)
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      auto& p = parts[d - alg.lo][i];
      if (p[0] != cdeg || p[1] != cidx) continue;
      auto& t = r.c[p[2]];
      if (t.empty()) t.assign(a.dim(p[2]), Q(0));
      t[p[3]] += v[i];
    }
  a.normalize(r);
  return r;
}

TensorDGA tensor_dga(const DGAlgebra& c, const DGAlgebra& a) {
  TensorDGA T;
  auto& A = T.alg;
  A.lo = c.lo + a.lo;
  A.hi = c.hi + a.hi;
  A.basis.assign(A.hi - A.lo + 1, {});
  T.parts.assign(A.hi - A.lo + 1, {});
  for (int p = c.lo; p <= c.hi; ++p)
    for (int i = 0; i < c.dim(p); ++i)
      for (int q = a.lo; q <= a.hi; ++q)
        for (int j = 0; j < a.dim(q); ++j) {
          int d = p + q;
          T.index[{p, i, q, j}] = {d, static_cast<int>(A.basis[d - A.lo].size())};
          A.basis[d - A.lo].push_back(c.basis[p - c.lo][i] + "*" + a.basis[q - a.lo][j]);
          T.parts[d - A.lo].push_back({p, i, q, j});
        }
  auto lift = [&](const Element& ce, const Element& ae, Q coef) {
    Element r;
    for (auto& [p, cv] : ce.c)
      for (size_t i = 0; i < cv.size(); ++i) {
        if (cv[i] == 0) continue;
        for (auto& [q, av] : ae.c)
          for (size_t j = 0; j < av.size(); ++j) {
            if (av[j] == 0) continue;
            auto [d, k] = T.index.at({p, static_cast<int>(i), q, static_cast<int>(j)});
            auto& t = r.c[d];
            if (t.empty()) t.assign(A.dim(d), Q(0));
            t[k] += coef * cv[i] * av[j];
          }
      }
    return r;
  };
  auto to_sparse = [&](const Element& e, int d) {
    SparseVec s;
    auto it = e.c.find(d);
    if (it != e.c.end())
      for (size_t k = 0; k < it->second.size(); ++k)
        if (it->second[k] != 0) s.push_back({static_cast<int>(k), it->second[k]});
    return s;
  };
  for (int d = A.lo; d <= A.hi; ++d) {
    if (d + 1 > A.hi) break;
    QMatrix m(A.dim(d + 1), QVec(A.dim(d), Q(0)));
    for (int col = 0; col < A.dim(d); ++col) {
      auto [p, i, q, j] = T.parts[d - A.lo][col];
      auto ce = c.basis_element(p, i), ae = a.basis_element(q, j);
      auto r = A.add(lift(c.d(ce), ae, 1), lift(ce, a.d(ae), sign(p)));
      for (auto& [k, v] : to_sparse(r, d + 1)) m[k][col] = v;
    }
    A.diff[d] = m;
  }
  for (int d1 = A.lo; d1 <= A.hi; ++d1)
    for (int d2 = A.lo; d2 <= A.hi; ++d2) {
      if (d1 + d2 < A.lo || d1 + d2 > A.hi) continue;
      auto& tab = A.prod[{d1, d2}];
      tab.assign(A.dim(d1), std::vector<SparseVec>(A.dim(d2)));
      for (int x = 0; x < A.dim(d1); ++x) {
        auto [p, i, q, j] = T.parts[d1 - A.lo][x];
        for (int y = 0; y < A.dim(d2); ++y) {
          auto [p2, i2, q2, j2] = T.parts[d2 - A.lo][y];
          auto cc = c.mul(c.basis_element(p, i), c.basis_element(p2, i2));
          if (c.is_zero(cc)) continue;
          auto aa = a.mul(a.basis_element(q, j), a.basis_element(q2, j2));
          if (a.is_zero(aa)) continue;
          tab[x][y] = to_sparse(lift(cc, aa, sign(static_cast<long long>(q) * p2)), d1 + d2);
        }
      }
    }
  A.unit = lift(c.unit, a.unit, 1);
  A.normalize(A.unit);
  return T;
}

Element mc_residual(const DGAlgebra& A, const Element& mu) { return A.add(A.d(mu), A.mul(mu, mu)); }

bool is_mc(const DGAlgebra& A, const Element& mu) { return A.is_zero(mc_residual(A, mu)); }

Element twisted_diff(const DGAlgebra& A, const Element& mu, const Element& nu, const Element& a) {
  Element r;
  for (auto& [deg, v] : a.c) {
    auto x = A.part(a, deg);
    r = A.add(r, A.add(A.d(x), A.sub(A.mul(mu, x), A.scale(sign(deg), A.mul(x, nu)))));
  }
  return r;
}

namespace {

// columns of a linear map from A^{src} given as a function, read in A^{tgt}
QMatrix linear_columns(const DGAlgebra& A, int src, int tgt, const std::function<Element(const Element&)>& f) {
  QMatrix m(A.dim(tgt), QVec(A.dim(src), Q(0)));
  for (int j = 0; j < A.dim(src); ++j) {
    auto img = A.part(f(A.basis_element(src, j)), tgt);
    auto it = img.c.find(tgt);
    if (it == img.c.end()) continue;
    for (int i = 0; i < A.dim(tgt); ++i) m[i][j] = it->second[i];
  }
  return m;
}

Element from_coords(const DGAlgebra& A, int d, const QVec& v, size_t offset) {
  Element e;
  if (A.dim(d) == 0) return e;
  e.c[d] = QVec(v.begin() + offset, v.begin() + offset + A.dim(d));
  A.normalize(e);
  return e;
}

}  // namespace

std::optional<QuasiInverse> quasi_invertible_solve(const DGAlgebra& A, const Element& mu0, const Element& mu1,
                                                   const Element& mu01) {
  Element f = A.add(A.unit, mu01);
  int n0 = A.dim(0), n1 = A.dim(-1);
  auto fg = linear_columns(A, 0, 0, [&](const Element& g) { return A.mul(f, g); });
  auto gf = linear_columns(A, 0, 0, [&](const Element& g) { return A.mul(g, f); });
  auto dh = linear_columns(A, -1, 0, [&](const Element& h) { return A.add(A.d(h), commutator(A, mu0, h)); });
  auto dk = linear_columns(A, -1, 0, [&](const Element& k) { return A.add(A.d(k), commutator(A, mu1, k)); });
  // unknowns (g, h, k); rows: first equation then second
  QMatrix m(2 * n0, QVec(n0 + 2 * n1, Q(0)));
  QVec rhs(2 * n0, Q(0));
  auto one = A.part(A.unit, 0);
  for (int r = 0; r < n0; ++r) {
    for (int j = 0; j < n0; ++j) {
      m[r][j] = -fg[r][j];
      m[n0 + r][j] = -gf[r][j];
    }
    for (int j = 0; j < n1; ++j) {
      m[r][n0 + j] = dh[r][j];
      m[n0 + r][n0 + n1 + j] = dk[r][j];
    }
    Q u = one.c.count(0) ? one.c.at(0)[r] : Q(0);
    rhs[r] = -u;
    rhs[n0 + r] = -u;
  }
  auto x = linalg::solve(m, rhs);
  if (!x) return std::nullopt;
  QuasiInverse w{from_coords(A, 0, *x, 0), from_coords(A, -1, *x, n0), from_coords(A, -1, *x, n0 + n1)};
  return w;
}

bool check_quasi_inverse(const DGAlgebra& A, const Element& mu0, const Element& mu1, const Element& mu01,
                         const QuasiInverse& w) {
  Element f = A.add(A.unit, mu01);
  auto lhs1 = A.add(A.d(w.h), commutator(A, mu0, w.h));
  auto lhs2 = A.add(A.d(w.k), commutator(A, mu1, w.k));
  return lhs1 == A.sub(A.mul(f, w.g), A.unit) && lhs2 == A.sub(A.mul(w.g, f), A.unit);
}

std::string rational_text(const Q& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Q parse_rational(const std::string& s) {
  Q q;
  if (s.empty() || q.set_str(s, 10) != 0 || (s.find('/') != std::string::npos && q.get_den() == 0))
    throw InvalidInput("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace simploid
