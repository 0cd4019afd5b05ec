#pragma once

#include "simploid/sset.hpp"

#include <chrono>

namespace simploid {

struct ExpansionStep {
  int n = 0, i = 0;
  int cell = -1;             // x: nondegenerate n-cell of the ambient set
  SimplicialMap attaching;  // horn(n,i) -> ambient, lands in the previous stage
};

// Filtration S = F_{-1} c F_0 c ... of the ambient set, one horn pushout per
// step. For truncated ambients the steps only cover dimensions through
// complete_to_dim.
struct ExpansionCertificate {
  SSet ambient;
  Subcomplex base;
  int m = 1;
  bool inner = false;
  int complete_to_dim = -1;
  std::vector<ExpansionStep> steps;
};

struct VerifyReport {
  bool valid = false;
  int attached_count = 0;
  int max_dim = -1;
  std::string error;
};

VerifyReport verify_certificate(const ExpansionCertificate& c, bool replay = true);

// restriction of the n-cell x to the horn, as stored in a step
SimplicialMap horn_restriction(const SSet& ambient, int n, int x, int i);
ExpansionStep make_step(const SSet& ambient, int n, int x, int i);

// stable sort by dimension; keeps every valid certificate valid
void sort_steps(ExpansionCertificate& c);
ExpansionCertificate compose_certificates(const ExpansionCertificate& first, const ExpansionCertificate& second);
// push steps forward along g : ambient -> new ambient; the moved cells must
// land injectively
ExpansionCertificate transport(const ExpansionCertificate& c, const SimplicialMap& g, const Subcomplex& new_base);

// subcomplexes addressed by vertex keys
Subcomplex subcomplex_by_keys(const SSet& amb, const std::function<bool(const std::vector<Word>&)>& keep);
Subcomplex increasing_in(const SSet& thick);  // Delta^n inside the thick simplex
Subcomplex spine_in(const SSet& simplex_like);
Subcomplex prism_horn_in(const SSet& prism, int m, int n, int i);
Subcomplex prism_horn_tilde_in(const SSet& prism, int m, int n, int j);

struct Shuffle {
  Word a;  // 0 <= a_1 <= ... <= a_m <= n
  int b(int i) const;
  Word vertices(int n) const;  // vertex keys (p,q) flattened as 2*(m+n+1)
};
std::vector<Shuffle> shuffles(int m, int n);

ExpansionCertificate cert_union_of_faces(int n, const std::vector<int>& faces);
ExpansionCertificate cert_prism_horn(int m, int n, int i, bool inner = false);
ExpansionCertificate cert_prism_horn_tilde(int m, int n, int j, bool inner = false);
// side 0: Delta^m x S u Lambda^m_i x T -> Delta^m x T
// side 1: S x Delta^m u T x Lambda^m_i -> T x Delta^m
ExpansionCertificate cert_product_with_pair(const Inclusion& st, int m, int i, int side, bool inner = false);
ExpansionCertificate cert_thick_inner_horn(int n, int i, int trunc);
// the sets Q_{k,m} in attachment order, as vertex words
std::vector<std::pair<std::pair<int, int>, std::vector<Word>>> thick_inner_horn_batches(int n, int i, int trunc);
ExpansionCertificate cert_thickify_inner(const ExpansionCertificate& c, int trunc);
ExpansionCertificate cert_thick_horn(int n, int i, int trunc);
ExpansionCertificate cert_cylinder(int n, int trunc);
ExpansionCertificate cert_thick_boundary(int n, int trunc);
ExpansionCertificate cert_spine(int n);
ExpansionCertificate cert_spine_thick(int n, int trunc);

class SearchTimeout : public std::runtime_error {
 public:
  SearchTimeout(const std::string& what, std::vector<ExpansionStep> partial)
      : std::runtime_error(what), partial(std::move(partial)) {}
  std::vector<ExpansionStep> partial;
};

// exhaustive search over admissible horn attachments; nullopt when none
// exists
std::optional<ExpansionCertificate> search_expansion(const Subcomplex& base, bool inner, int m, long budget_ms = 10000,
                                                     int complete_to_dim = -1);

std::string word_label(const FiniteSimplicialSet& t, int n, int c);

}  // namespace simploid
