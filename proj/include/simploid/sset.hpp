#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace simploid {

using Word = std::vector<int>;

struct WordHash {
  size_t operator()(const Word& w) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(x)) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

class InsufficientTruncation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// EZ normal form as stored in files: s_{j1}...s_{jp} base with j1 > ... > jp.
struct SimplexRef {
  std::vector<int> degens;
  int base = -1;
  bool operator==(const SimplexRef&) const = default;
};

// A simplex as a monotone surjection sigma: [dim] -> [bdim] applied to a
// nondegenerate base cell of dimension bdim.
struct Simplex {
  Word sigma;
  int base = -1;

  int dim() const { return static_cast<int>(sigma.size()) - 1; }
  int bdim() const { return sigma.empty() ? -1 : sigma.back(); }
  bool nondegenerate() const { return bdim() == dim(); }
  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

  static Simplex cell(int d, int id);
};

struct SimplexHash {
  size_t operator()(const Simplex& s) const noexcept {
    return WordHash{}(s.sigma) * 31 + static_cast<size_t>(s.base);
  }
};

Word identity_word(int n);
// positions j with sigma(j) == sigma(j+1)
std::vector<int> repeats(const Word& sigma);
Word surjection_from_repeats(int dim, const std::vector<int>& rep);
SimplexRef to_ref(const Simplex& s);
Simplex from_ref(const SimplexRef& r, int dim);
// epi-mono factorization of a monotone map; returns (surjection, sorted image)
std::pair<Word, Word> epi_mono(const Word& theta);
Word compose(const Word& outer, const Word& inner);  // outer o inner
Word coface(int n, int i);   // [n-1] -> [n] skipping i
Word codegen(int n, int j);  // [n+1] -> [n] hitting j twice

class FiniteSimplicialSet {
 public:
  int trunc_dim = -1;
  bool complete = true;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<Simplex>>> faces;  // faces[n][c][i]
  std::vector<Word> vertex_keys;                          // optional, one per vertex

  int max_dim() const;
  int count(int n) const { return n < static_cast<int>(labels.size()) ? static_cast<int>(labels[n].size()) : 0; }
  int total_cells() const;
  std::vector<int> counts() const;

  // Must be called once all faces are filled in; builds face tables.
  void finalize();

  const Simplex& face(int n, int c, int i) const { return faces[n][c][i]; }
  // theta: [m] -> [dim s] monotone
  Simplex apply(const Word& theta, const Simplex& s) const;
  Simplex face_of(const Simplex& s, int i) const;
  Simplex degen_of(const Simplex& s, int j) const;
  // face of a nondegenerate cell along the sorted vertex subset `image`
  const Simplex& face_along(int n, int c, const Word& image) const;
  const Simplex& face_mask(int n, int c, uint32_t mask) const { return mask_table_[n][c][mask]; }

  const Word& vertices(int n, int c) const { return vertex_seq_[n][c]; }
  Word vertices(const Simplex& s) const;
  // lookup by vertex sequence; only meaningful when simplices are
  // determined by their vertices
  std::optional<Simplex> find_by_vertices(const Word& verts) const;
  bool vertex_determined() const { return vertex_determined_; }
  std::optional<int> find_vertex(const Word& key) const;

  std::string label_of(const Simplex& s) const;

 private:
  std::vector<std::vector<std::vector<Simplex>>> mask_table_;
  std::vector<std::vector<Word>> vertex_seq_;
  std::vector<std::unordered_map<Word, int, WordHash>> by_vertices_;
  std::unordered_map<Word, int, WordHash> vertex_lookup_;
  bool vertex_determined_ = true;
};

using SSet = std::shared_ptr<const FiniteSimplicialSet>;

struct SimplicialMap {
  SSet source, target;
  std::vector<std::vector<Simplex>> assign;  // assign[n][c]
  Simplex image(const Simplex& s) const;
  bool valid(std::string* why = nullptr) const;
};

// Subcomplex of an ambient set given by cell membership.
struct Subcomplex {
  SSet ambient;
  std::vector<std::vector<char>> member;
  bool contains(const Simplex& s) const;
  bool contains(int n, int c) const { return n < static_cast<int>(member.size()) && member[n][c]; }
  int total() const;
};

struct Inclusion {
  SSet sub, ambient;
  SimplicialMap embedding;
  std::vector<std::vector<int>> to_ambient;  // cell ids
  std::vector<std::vector<int>> from_ambient;  // -1 when absent
  Subcomplex as_subcomplex() const;
};

Subcomplex empty_subcomplex(SSet ambient);
Subcomplex full_subcomplex(SSet ambient);
Subcomplex closure(SSet ambient, const std::vector<std::pair<int, int>>& cells);
Subcomplex unite(const Subcomplex& a, const Subcomplex& b);
Subcomplex intersect(const Subcomplex& a, const Subcomplex& b);
bool is_closed(const Subcomplex& s);
Inclusion realize(const Subcomplex& s);

SSet standard_simplex(int n);
SSet thick_simplex(int n, int trunc);
SSet thickify(const SSet& t, int trunc);
SSet product(const SSet& s, const SSet& t);
SSet join(const SSet& s, const SSet& t);
SSet empty_set();

// subcomplexes of standard_simplex(n) / thick_simplex(n)
Inclusion horn(int n, int i);
Inclusion boundary(int n);
Inclusion spine(int n);
Inclusion skeleton(const SSet& t, int j);
Subcomplex horn_in(const SSet& simplex_like, int n, int i);  // by vertex sets
Subcomplex boundary_in(const SSet& simplex_like, int n);

// Simplicial map determined by a function on vertex ids; requires the
// target to be vertex determined.
SimplicialMap map_by_vertices(const SSet& src, const SSet& tgt, const std::vector<int>& vertex_image);
SimplicialMap map_by_keys(const SSet& src, const SSet& tgt, const std::function<Word(const Word&)>& key_image);
SimplicialMap identity_map(const SSet& s);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g o f

// Adds one n-cell along an attaching map from horn(n,i) (i >= 0) or from
// boundary(n) (i < 0). For horns the missing face is added as well.
SSet pushout_attach(const SSet& t, const SimplicialMap& attaching, int n, int i);

bool isomorphic_counts(const SSet& a, const SSet& b);
bool check_simplicial_identities(const FiniteSimplicialSet& t, std::string* why = nullptr);

}  // namespace simploid
