#pragma once

#include "simploid/sobject.hpp"

namespace simploid {

// One restriction morphism Map(A c B, f) -> Map(A' c B', f).
struct LevelVerdict {
  std::string shape;
  int n = 0, i = -1;
  long long source = 0, target = 0, image = 0;
  bool surjective = false, bijective = false;
  bool need_bijective = false;
  bool ok = false;
};

struct ConditionReport {
  std::string name;
  std::string lemma;
  std::vector<LevelVerdict> levels;
  bool holds = true;
  void add(LevelVerdict v);
};

// A c B and A' c B' are subcomplexes of one ambient set with A' c A and
// B' c B; pairs (a : A -> X, b : B -> Y) with f a = b|A restrict to the
// corresponding pairs on (A', B').
LevelVerdict relative_restriction(const Morphism& f, const Subcomplex& a, const Subcomplex& b, const Subcomplex& a2,
                                  const Subcomplex& b2);
// X_n -> Map(S c T, f) for a subcomplex S of T
LevelVerdict lifting_condition(const Morphism& f, const Subcomplex& s);

// truncation of thick shapes that determines maps into the given objects
int thick_trunc(const SObj& x, const SObj& y, int at_least = 1);
int default_depth(int k);

ConditionReport is_k_groupoid(const SObj& x, int k, int depth);
ConditionReport is_k_category(const SObj& x, int k, int depth);
ConditionReport is_fibration(const Morphism& f, int depth);
ConditionReport is_hypercover(const Morphism& f, int depth);
ConditionReport is_quasi_fibration(const Morphism& f, int depth);
bool is_isomorphism(const Morphism& f, int depth);

// (P_n X)_m = Map(Delta^m x Delta^n, X)
MappingObject path_space(const SObj& x, int n, int depth);
// (P_n X)_m = Map(Delta^m x thick Delta^n, X)
MappingObject thick_power(const SObj& x, int n, int k, int depth);
// values of P_1 X at the two ends of the path
Morphism path_end(const MappingObject& p1, const SObj& x, int end);

struct BrownFactorization {
  MappingObject path;  // P_1 Y
  Pullback pf;         // P(f) = X x_Y P_1 Y, glued at end 0
  Morphism s, q, p;    // s : X -> P(f), q = end 1, p = projection to X
};
BrownFactorization brown_factorization(const Morphism& f, int depth);

ConditionReport is_weak_equivalence_path(const Morphism& f, int k, int depth);
ConditionReport is_weak_equivalence_direct(const Morphism& f, int depth);
ConditionReport is_weak_equivalence_cat_direct(const Morphism& f, int depth);

// GG(X)_n = Map(thick Delta^n, X)
MappingObject gg_core(const SObj& x, int k, int depth);
Morphism gg_evaluation(const MappingObject& gg, const SObj& x);

struct Core {
  SObj object;
  Morphism inclusion;
};
// image of GG(X) -> X
Core g_core_image(const SObj& x, int k, int depth);
// simplices whose spine edges are quasi-invertible
Core g_core_spine(const SObj& x, int k, int depth);
// simplices all of whose edges are quasi-invertible; coskeletal when X is
Core g_core(const SObj& x, int k, int depth);

// factor f through a sub-object inclusion
Morphism corestrict(const Morphism& f, const Morphism& inclusion);
// the simplex x in X_m as a table on the standard simplex
std::vector<int> simplex_table(int m, int x, const TruncatedSimplicialObject& X);

}  // namespace simploid
