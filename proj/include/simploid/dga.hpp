#pragma once

#include "simploid/sset.hpp"

#include <gmpxx.h>

namespace simploid {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMatrix = std::vector<QVec>;  // row major
using SparseVec = std::vector<std::pair<int, Q>>;

namespace linalg {
// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMatrix& m);
int rank(QMatrix m);
// one solution of m x = b, or nullopt when inconsistent
std::optional<QVec> solve(const QMatrix& m, const QVec& b);
}  // namespace linalg

// degree -> coordinates in that degree; missing degrees are zero
struct Element {
  std::map<int, QVec> c;
  bool operator==(const Element& o) const;
};

class DGAlgebra {
 public:
  int lo = 0, hi = -1;
  std::vector<std::vector<std::string>> basis;                    // basis[d - lo]
  std::map<int, QMatrix> diff;                                    // diff[d] : A^d -> A^{d+1}, dim(d+1) x dim(d)
  std::map<std::pair<int, int>, std::vector<std::vector<SparseVec>>> prod;  // prod[{i,j}][a][b] in degree i+j
  Element unit;

  int dim(int d) const;
  Element zero() const { return {}; }
  Element basis_element(int d, int idx) const;
  Element scalar(const Q& q) const;  // q * unit

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element scale(const Q& q, const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  Element d(const Element& x) const;
  Element part(const Element& x, int deg) const;
  bool is_zero(const Element& x) const;
  // unique degree of a nonzero homogeneous element, nullopt otherwise
  std::optional<int> degree(const Element& x) const;
  std::string show(const Element& x) const;

  // first violated identity among d^2 = 0, Leibniz, associativity, unit
  std::optional<std::string> check_invariants() const;
  // smallest k with A^i = 0 for all i <= -k
  int vanishing_k() const;
  void normalize(Element& x) const;
};

// [a, b] = ab - (-1)^{|a||b|} ba for homogeneous a, b
Element commutator(const DGAlgebra& A, const Element& a, const Element& b);

// End(V) for V with basis degrees vdeg and differential dv (dv[i][j]: v_j -> v_i)
DGAlgebra end_complex(const std::vector<int>& vdeg, const QMatrix& dv);
// M_N(Q) concentrated in degree 0
DGAlgebra matrix_algebra(int n);
// End(V) for V = (Q -> Q) in degrees 0,1 with differential c
DGAlgebra end_two_term(const Q& c);

// Normalized cochains on the nondegenerate cells of t, up to max_degree.
struct CochainDGA {
  SSet shape;
  DGAlgebra alg;
};
CochainDGA cochain_dga(const SSet& t, int max_degree = -1);

struct TensorDGA {
  DGAlgebra alg;
  // parts[d - lo][idx] = (cochain degree, cochain index, A degree, A index)
  std::vector<std::vector<std::array<int, 4>>> parts;
  std::map<std::array<int, 4>, std::pair<int, int>> index;
  // sum over the given cochain basis element tensor a
  Element embed(int cdeg, int cidx, const Element& a) const;
  // coefficient of the cochain basis element, as an element of A
  Element component(const Element& x, int cdeg, int cidx, const DGAlgebra& a) const;
};
TensorDGA tensor_dga(const DGAlgebra& c, const DGAlgebra& a);

Element mc_residual(const DGAlgebra& A, const Element& mu);
bool is_mc(const DGAlgebra& A, const Element& mu);
// d_{mu,nu} a = da + mu a - (-1)^{|a|} a nu, applied degreewise
Element twisted_diff(const DGAlgebra& A, const Element& mu, const Element& nu, const Element& a);

struct QuasiInverse {
  Element g, h, k;
};
// solves dh + [mu0,h] = fg - 1, dk + [mu1,k] = gf - 1 with f = 1 + mu01
std::optional<QuasiInverse> quasi_invertible_solve(const DGAlgebra& A, const Element& mu0, const Element& mu1,
                                                   const Element& mu01);
bool check_quasi_inverse(const DGAlgebra& A, const Element& mu0, const Element& mu1, const Element& mu01,
                         const QuasiInverse& w);

std::string rational_text(const Q& q);
Q parse_rational(const std::string& s);

}  // namespace simploid
