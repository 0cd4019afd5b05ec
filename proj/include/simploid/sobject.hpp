#pragma once

#include "simploid/sset.hpp"

#include <mutex>

namespace simploid {

// Levelwise finite simplicial set X_0..X_depth. When coskeletal_from = c >= 0,
// every level above c is the boundary matching set Map(dDelta^n, X) and is
// computed on demand.
class TruncatedSimplicialObject {
 public:
  int coskeletal_from = -1;
  std::vector<int> sizes;
  std::vector<std::vector<std::vector<int>>> face;   // face[n][i][x], n >= 1
  std::vector<std::vector<std::vector<int>>> degen;  // degen[n][j][x] : X_n -> X_{n+1}
  std::vector<std::vector<std::string>> labels;

  TruncatedSimplicialObject() = default;
  TruncatedSimplicialObject(const TruncatedSimplicialObject& o);
  TruncatedSimplicialObject& operator=(const TruncatedSimplicialObject&) = delete;

  int depth() const;
  int size(int n) const;
  int d(int n, int i, int x) const;
  int s(int n, int j, int x) const;
  // applies the degeneracy part of a monotone surjection to x in X_n
  int degenerate(int n, int x, const Word& sigma) const;
  std::string label(int n, int x) const;

  // elements of X_n with the given face tuple (n >= 1) or all of X_0
  const std::vector<int>& with_faces(int n, const Word& faces) const;
  std::optional<int> find(int n, const Word& faces) const;
  using FaceIndex = std::unordered_map<Word, std::vector<int>, WordHash>;
  // face tuple -> elements of X_n; stays valid for the lifetime of the object
  const FaceIndex& face_index(int n) const;

  // extends coskeletal levels through n; throws InsufficientTruncation
  void ensure(int n) const;
  bool validate(std::string* why = nullptr, int upto = -1) const;

 private:
  mutable std::recursive_mutex mu_;
  mutable std::vector<std::unique_ptr<std::unordered_map<Word, std::vector<int>, WordHash>>> index_;
  void extend_one() const;
};

using SObj = std::shared_ptr<const TruncatedSimplicialObject>;

struct Morphism {
  SObj source, target;
  mutable std::vector<std::vector<int>> level;
  int at(int n, int x) const;
  bool valid(int upto, std::string* why = nullptr) const;
};

Morphism identity_morphism(const SObj& x);
Morphism compose(const Morphism& g, const Morphism& f);  // g o f

// A simplicial map T -> X stored as one value per nondegenerate cell,
// flattened by dimension.
struct MapSpace {
  SSet source;
  std::vector<int> offset;
  std::vector<std::vector<int>> maps;  // sorted lexicographically
  size_t size() const { return maps.size(); }
  int value(size_t k, int n, int c) const { return maps[k][offset[n] + c]; }
  std::optional<size_t> find(const std::vector<int>& table) const;
};

std::vector<int> cell_offsets(const FiniteSimplicialSet& t);
int eval_simplex(const FiniteSimplicialSet& t, const std::vector<int>& offset, const std::vector<int>& table,
                 const TruncatedSimplicialObject& x, const Simplex& s);
// precompose a table on B with g : A -> B
std::vector<int> pull_table(const SimplicialMap& g, const std::vector<int>& table_b, const TruncatedSimplicialObject& x);
// value of the simplex with the given vertex sequence; cells above the
// truncation of t are filled through the coskeletal structure of x
int eval_vertices(const FiniteSimplicialSet& t, const std::vector<int>& table, const TruncatedSimplicialObject& x,
                  const Word& verts);

struct LiftProblem {
  const Morphism* f = nullptr;             // X -> Y
  const std::vector<int>* over = nullptr;  // table of a map T -> Y
  const std::vector<int>* fixed = nullptr;  // prescribed values, -1 = free
};

MapSpace enumerate_maps(const SSet& t, const SObj& x, const LiftProblem& lp = {});
// reference implementation: all tables filtered by the face identities
MapSpace enumerate_maps_naive(const SSet& t, const SObj& x);
long long naive_table_count(const SSet& t, const SObj& x);

struct FiniteCategory {
  int objects = 0;
  std::vector<int> src, tgt, identity;
  std::vector<std::vector<int>> comp;  // comp[g][f] = g o f, -1 if not composable
  std::vector<std::string> object_labels, arrow_labels;
};

FiniteCategory group_category(const std::vector<std::vector<int>>& mult, const std::vector<std::string>& names = {});
FiniteCategory cyclic_group(int n);
FiniteCategory monoid_category(const std::vector<std::vector<int>>& mult, int unit, const std::vector<std::string>& names = {});
FiniteCategory idempotent_monoid();
FiniteCategory poset_category(int n, const std::vector<std::pair<int, int>>& less);
FiniteCategory chain_poset(int n);
FiniteCategory indiscrete_groupoid(int n);
FiniteCategory discrete_category(int n);
FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b);

SObj nerve(const FiniteCategory& c, int depth);
SObj terminal_object(int depth);
Morphism to_terminal(const SObj& x, const SObj& pt);
// functor given on arrows (objects follow from identities)
Morphism nerve_map(const FiniteCategory& a, const SObj& na, const FiniteCategory& b, const SObj& nb,
                   const std::vector<int>& on_arrows);

struct Pullback {
  SObj object;
  Morphism p1, p2;
};
Pullback pullback(const Morphism& f, const Morphism& g);  // X x_Z Y for f: X->Z, g: Y->Z
Pullback product_object(const SObj& a, const SObj& b);

// Sub-object on the elements marked in keep (must be closed under faces and
// degeneracies); returns the object and its inclusion.
std::pair<SObj, Morphism> sub_object(const SObj& x, const std::vector<std::vector<char>>& keep, bool coskeletal);
std::pair<SObj, Morphism> image_object(const Morphism& f);

// Map(T_m, X) for a family of vertex-determined shapes whose vertex keys
// start with a coordinate in [m]; cosimplicial operators act on that
// coordinate.
using ShapeFamily = std::function<SSet(int m)>;
struct MappingObject {
  SObj object;
  std::vector<SSet> shapes;
  std::vector<MapSpace> spaces;
};
MappingObject mapping_object(const ShapeFamily& shapes, const SObj& x, int depth);
// evaluation along Delta^m -> T_m given by vertex a |-> key(m, a)
Morphism evaluation(const MappingObject& mo, const SObj& x, const std::function<Word(int m, int a)>& key);
// postcomposition Map(T_m, X) -> Map(T_m, Y)
Morphism postcompose(const MappingObject& mx, const MappingObject& my, const Morphism& f);

SObj extend_copy(const SObj& x, int depth);

}  // namespace simploid
