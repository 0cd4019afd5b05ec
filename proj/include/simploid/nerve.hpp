#pragma once

#include "simploid/dga.hpp"
#include "simploid/sobject.hpp"

#include <random>

namespace simploid {

// A point of N_n A: mu_I in A^{1-k} for every increasing tuple I of length k+1.
struct NervePoint {
  int n = 0;
  std::map<Word, Element> mu;
  bool operator==(const NervePoint& o) const;
};

// nonempty increasing tuples of [n], by length then lexicographically
std::vector<Word> increasing_tuples(int n);
const Element& component(const NervePoint& p, const Word& tuple);

// left side of the Maurer-Cartan equation at one tuple
Element mc_defect(const DGAlgebra& A, const NervePoint& p, const Word& tuple);
bool nerve_check(const DGAlgebra& A, const NervePoint& p, std::string* why = nullptr);
// theta : [m] -> [n] monotone
NervePoint operator_action(const DGAlgebra& A, const Word& theta, const NervePoint& p);

// fills the inner horn of the face spanned by `tuple` at position i, taking
// mu_tuple = x; all other faces of the tuple must already be present
NervePoint fill_face(const DGAlgebra& A, const NervePoint& p, const Word& tuple, int i, const Element& x);
// horn data is a point with mu_{0..n} and mu_{0..i^..n} absent or ignored
NervePoint inner_horn_fill(const DGAlgebra& A, const NervePoint& horn, int i, const Element& x);
NervePoint drop_horn_faces(const NervePoint& p, int i);

// 2x2 matrices over A[u], |u| = 2; entry (i,j) of a degree k matrix has
// u^p coefficient in A^{k+i-j-2p}
struct Matrix2U {
  int degree = 0;
  std::array<std::map<int, Element>, 4> e;  // row major, u-power -> coefficient
  Element& at(int i, int j, int p) { return e[2 * i + j][p]; }
  Element get(int i, int j, int p) const;
};

Matrix2U mat_add(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y);
Matrix2U mat_sub(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y);
Matrix2U mat_scale(const DGAlgebra& A, const Q& q, const Matrix2U& x);
Matrix2U mat_mul(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y);
Matrix2U mat_d(const DGAlgebra& A, const Matrix2U& x);
Matrix2U mat_commutator(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y);
Matrix2U mat_u_times(const Matrix2U& x, int power = 1);
Matrix2U mat_identity(const DGAlgebra& A);
Matrix2U mat_from(const DGAlgebra& A, int degree, const Element& e00, const Element& e01, const Element& e10,
                  const Element& e11);
bool mat_equal(const DGAlgebra& A, const Matrix2U& x, const Matrix2U& y);
bool mat_is_zero(const DGAlgebra& A, const Matrix2U& x);
bool in_V(const DGAlgebra& A, const Matrix2U& x);  // alpha_10(0) = 0
std::string mat_show(const DGAlgebra& A, const Matrix2U& x);

// C(thick Delta^1) (x) A for the thick edge truncated at trunc
struct ThickEdgeCochains {
  SSet edge;
  CochainDGA cochains;
  TensorDGA tensor;
  std::vector<std::vector<Word>> words;  // words[q][c]
};
ThickEdgeCochains thick_edge_cochains(const DGAlgebra& A, int trunc);

Matrix2U a0(const DGAlgebra& A);
Matrix2U psi(const DGAlgebra& A, const ThickEdgeCochains& t, const Element& x);
// drops u powers beyond the truncation
Element psi_inverse(const DGAlgebra& A, const ThickEdgeCochains& t, const Matrix2U& m);

// psi on the basis of C(thick Delta^1) (x) A in total degrees <= max_total:
// lands in VA, inverts, intertwines delta with d + [a0,-], multiplicative
struct PsiCheck {
  int elements = 0, products = 0;
  bool ok = true;
  std::string failure;
};
PsiCheck psi_check(const DGAlgebra& A, int max_total);

// da + a^2 = u.1 and a - a0 in VA
bool thick_edge_check(const DGAlgebra& A, const Matrix2U& a, std::string* why = nullptr);

struct CatalanLift {
  Matrix2U alpha, beta, a;
  bool beta_ok = false;  // d beta + [alpha, beta] = 1
  bool mc_ok = false;    // da + a^2 = u.1
  int terms = 0;
};
CatalanLift catalan_lift(const DGAlgebra& A, const Element& mu0, const Element& mu1, const Element& mu01,
                         const QuasiInverse& w);

struct SmoothnessReport {
  bool b_ok = false;          // d_a b = 1
  bool h_identities = false;  // h d_a h = h, h^2 = 0
  bool p_closed = false;      // d_a h + h d_a = 1 - q + b[d_a, q]
  bool H_identities = false;
  bool P_closed = false;
  bool ideal_sampled = false;  // im p closed under multiplication, sampled
  int checked = 0;
  bool all() const { return b_ok && h_identities && p_closed && H_identities && P_closed && ideal_sampled; }
};
// basis of VA in one total degree
std::vector<Matrix2U> v_basis(const DGAlgebra& A, int degree);
SmoothnessReport smoothness_identities(const DGAlgebra& A, const Matrix2U& a, int deg_lo, int deg_hi);

// small random rationals from raw engine output
Q sample_rational(std::mt19937_64& g, int range = 3, bool nonzero = false);
Element sample_element(const DGAlgebra& A, int degree, std::mt19937_64& g);
// random d-closed element of A^degree
Element sample_cocycle(const DGAlgebra& A, int degree, std::mt19937_64& g);
// point of N_n A with zero vertices, closed spine edges and random fillers
NervePoint sample_point(const DGAlgebra& A, int n, std::mt19937_64& g);
// c when A is End(V) for V = (Q -c-> Q) in the end_two_term presentation
std::optional<Q> two_term_parameter(const DGAlgebra& A);
// point of N_n End(V), V = (Q -c-> Q), built along the spine expansion:
// vertices t E10, spine edges diag(a, b) closed for the twisted
// differential, higher spine simplices filled with random parameters
NervePoint sample_two_term_point(const DGAlgebra& A, const Q& c, int n, std::mt19937_64& g);

// levels 0..depth generated by the given points under faces and degeneracies
struct NerveObject {
  SObj object;
  std::vector<std::vector<NervePoint>> points;
};
NerveObject nerve_as_simplicial_object(const DGAlgebra& A, const std::vector<NervePoint>& generators, int depth);

}  // namespace simploid
