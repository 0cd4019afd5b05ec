#include "simploid/cli.hpp"

#include "simploid/io.hpp"
#include "simploid/report.hpp"
#include "simploid/setmodel.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>

namespace simploid {

namespace {

using io::Json;

struct Options {
  std::string command;
  std::string input, dga, out, format = "text", kind, x = "0", via = "path", faces, category, target, arrows,
                                      algebra;
  int k = 1, depth = -1, trunc = 3, m = 1, n = 2, i = 1, sample = 20;
  uint64_t seed = 1;
  long budget_ms = -1;
  bool inner = false, timings = false;

  int eff_depth() const { return depth >= 0 ? depth : default_depth(k); }
};

class Budget {
 public:
  explicit Budget(long ms) : ms_(ms), start_(std::chrono::steady_clock::now()) {}
  long elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }
  // milliseconds left; a large value when unlimited
  long remaining() const { return ms_ <= 0 ? 1L << 40 : std::max(1L, ms_ - elapsed()); }
  void check(const std::string& where) const {
    if (ms_ > 0 && elapsed() > ms_)
      throw BudgetExceeded("budget of " + std::to_string(ms_) + " ms exceeded at " + where);
  }

 private:
  long ms_;
  std::chrono::steady_clock::time_point start_;
};

std::string join_ints(const Word& w, const char* sep = "") {
  std::string s;
  for (size_t a = 0; a < w.size(); ++a) s += (a ? sep : "") + std::to_string(w[a]);
  return s;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InvalidInput("bad integer list: " + s);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad integer list: " + s);
    }
  }
  return v;
}

Json config_of(const Options& o) {
  Json c{{"command", o.command}, {"k", o.k},         {"depth", o.eff_depth()}, {"trunc", o.trunc},
         {"seed", o.seed},       {"sample", o.sample}, {"budget_ms", o.budget_ms}};
  for (auto& [key, v] : std::vector<std::pair<std::string, std::string>>{{"input", o.input},
                                                                          {"dga", o.dga},
                                                                          {"kind", o.kind},
                                                                          {"faces", o.faces},
                                                                          {"category", o.category},
                                                                          {"target", o.target},
                                                                          {"arrows", o.arrows},
                                                                          {"algebra", o.algebra}})
    if (!v.empty()) c[key] = v;
  if (o.command.starts_with("expansion certify")) {
    c["m"] = o.m;
    c["n"] = o.n;
    c["i"] = o.i;
    c["inner"] = o.inner;
  }
  if (o.command == "nerve fill") {
    c["n"] = o.n;
    c["i"] = o.i;
    c["x"] = o.x;
  }
  if (o.command == "check we") c["via"] = o.via;
  return c;
}

// ---- expansions

const char* cert_lemma(const std::string& kind) {
  if (kind == "prism" || kind == "prism-tilde") return "Lemma Moore";
  if (kind == "union") return "Lemma proper";
  if (kind == "thick-inner") return "Lemma lambda";
  if (kind == "thick-horn") return "Corollary lambda2";
  if (kind == "cylinder") return "Lemma DD1";
  if (kind == "thick-boundary") return "Lemma mu";
  if (kind == "spine" || kind == "spine-thick") return "Proposition G";
  throw InvalidInput("unknown certificate kind: " + kind);
}

ExpansionCertificate build_cert(const Options& o) {
  if (o.n < 0 || o.m < 0 || o.trunc < 1) throw InvalidInput("negative dimension or truncation");
  auto& k = o.kind;
  if (k == "prism") return cert_prism_horn(o.m, o.n, o.i, o.inner);
  if (k == "prism-tilde") return cert_prism_horn_tilde(o.m, o.n, o.i, o.inner);
  if (k == "union") return cert_union_of_faces(o.n, parse_ints(o.faces));
  if (k == "thick-inner") return cert_thick_inner_horn(o.n, o.i, o.trunc);
  if (k == "thick-horn") return cert_thick_horn(o.n, o.i, o.trunc);
  if (k == "cylinder") return cert_cylinder(o.n, o.trunc);
  if (k == "thick-boundary") return cert_thick_boundary(o.n, o.trunc);
  if (k == "spine") return cert_spine(o.n);
  if (k == "spine-thick") return cert_spine_thick(o.n, o.trunc);
  throw InvalidInput("unknown certificate kind: " + k);
}

Json verify_detail(const ExpansionCertificate& c, const VerifyReport& r) {
  Json d{{"steps", c.steps.size()}, {"attached_count", r.attached_count}, {"max_dim", r.max_dim}, {"m", c.m},
         {"inner", c.inner}};
  if (!r.error.empty()) d["error"] = r.error;
  return d;
}

Json step_words(const ExpansionCertificate& c) {
  Json w = Json::array();
  for (auto& s : c.steps) w.push_back(Json{{"n", s.n}, {"i", s.i}, {"cell", word_label(*c.ambient, s.n, s.cell)}});
  return w;
}

Report expansion_certify(const Options& o) {
  Report r{o.command, cert_lemma(o.kind)};
  auto c = build_cert(o);
  auto v = verify_certificate(c);
  auto d = verify_detail(c, v);
  d["attachments"] = step_words(c);
  r.add("certificate verifies", v.valid, d);
  if (o.kind == "thick-inner") {
    Json b = Json::array();
    for (auto& [km, words] : thick_inner_horn_batches(o.n, o.i, o.trunc)) {
      Json ws = Json::array();
      for (auto& w : words) ws.push_back(join_ints(w));
      b.push_back(Json{{"k", km.first}, {"m", km.second}, {"words", ws}});
    }
    r.output = Json{{"batches", b}};
  }
  if (!o.out.empty()) io::write_file(o.out, io::cert_to_json(c));
  return r;
}

Report expansion_verify(const Options& o) {
  Report r{o.command, "Definition expansion"};
  auto c = io::cert_from_json(io::read_file(o.input));
  auto v = verify_certificate(c);
  r.add("certificate verifies", v.valid, verify_detail(c, v));
  return r;
}

Report expansion_search(const Options& o, const Budget& budget) {
  Report r{o.command, "Definition expansion"};
  auto c = io::cert_from_json(io::read_file(o.input));
  std::optional<ExpansionCertificate> found;
  try {
    found = search_expansion(c.base, c.inner, c.m, budget.remaining(), c.complete_to_dim);
  } catch (const SearchTimeout& e) {
    throw BudgetExceeded(std::string("search: ") + e.what());
  }
  r.add("expansion found", found.has_value());
  if (found) {
    auto v = verify_certificate(*found);
    r.add("found certificate verifies", v.valid, verify_detail(*found, v));
    r.add("same number of steps as input", found->steps.size() == c.steps.size(),
          Json{{"found", found->steps.size()}, {"input", c.steps.size()}});
    r.output = Json{{"attachments", step_words(*found)}};
    if (!o.out.empty()) io::write_file(o.out, io::cert_to_json(*found));
  }
  return r;
}

// ---- set model

Report from_condition(const Options& o, const ConditionReport& c) {
  Report r{o.command, c.lemma};
  for (auto& v : c.levels) {
    Json d{{"n", v.n},
           {"source", v.source},
           {"target", v.target},
           {"image", v.image},
           {"surjective", v.surjective},
           {"bijective", v.bijective},
           {"need_bijective", v.need_bijective}};
    if (v.i >= 0) d["i"] = v.i;
    r.add(v.shape, v.ok, d);
  }
  if (c.levels.empty()) r.add(c.name, c.holds);
  return r;
}

Report check_command(const Options& o, const std::string& what) {
  int depth = o.eff_depth();
  if (what == "kgroupoid" || what == "kcategory") {
    auto x = io::sobj_from_json(io::read_file(o.input));
    return from_condition(o, what == "kgroupoid" ? is_k_groupoid(x, o.k, depth) : is_k_category(x, o.k, depth));
  }
  auto f = io::morphism_from_json(io::read_file(o.input));
  if (what == "fibration") return from_condition(o, is_fibration(f, depth));
  if (what == "hypercover") return from_condition(o, is_hypercover(f, depth));
  if (what == "quasi-fibration") return from_condition(o, is_quasi_fibration(f, depth));
  if (o.via == "path") return from_condition(o, is_weak_equivalence_path(f, o.k, depth));
  if (o.via == "direct") return from_condition(o, is_weak_equivalence_direct(f, depth));
  if (o.via == "cat") return from_condition(o, is_weak_equivalence_cat_direct(f, depth));
  throw InvalidInput("--via must be path, direct or cat");
}

// ---- nerve

DGAlgebra load_dga(const Options& o) {
  if (o.dga.empty()) throw InvalidInput("--dga is required");
  auto A = io::dga_from_json(io::read_file(o.dga));
  if (auto bad = A.check_invariants()) throw InvalidInput("not a dga: " + *bad);
  return A;
}

NervePoint sample_any(const DGAlgebra& A, int n, std::mt19937_64& g) {
  if (auto c = two_term_parameter(A)) return sample_two_term_point(A, *c, n, g);
  return sample_point(A, n, g);
}

Element parse_x(const DGAlgebra& A, const std::string& text, int degree) {
  if (text == "0") return {};
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("--x: ") + e.what());
  }
  auto x = io::element_from_json(A, j);
  for (auto& [d, v] : x.c)
    if (d != degree) throw InvalidInput("--x must lie in degree " + std::to_string(degree));
  return x;
}

Report nerve_check_cmd(const Options& o) {
  Report r{o.command, "Theorem Smooth Part 1"};
  auto A = load_dga(o);
  if (o.input.empty()) throw InvalidInput("--input is required");
  auto p = io::nerve_from_json(A, io::read_file(o.input));
  std::string why;
  bool ok = nerve_check(A, p, &why);
  Json d{{"n", p.n}};
  if (!why.empty()) d["failure"] = why;
  r.add("Maurer-Cartan at every tuple", ok, d);
  return r;
}

Report nerve_fill_cmd(const Options& o) {
  Report r{o.command, "Theorem Smooth Part 1"};
  auto A = load_dga(o);
  if (o.n < 2 || o.i <= 0 || o.i >= o.n) throw InvalidInput("fill needs an inner horn: n >= 2, 0 < i < n");
  NervePoint horn;
  if (!o.input.empty()) {
    horn = io::nerve_from_json(A, io::read_file(o.input));
    if (horn.n != o.n) throw InvalidInput("input point has the wrong dimension");
  } else {
    std::mt19937_64 g(o.seed);
    horn = sample_any(A, o.n, g);
  }
  horn = drop_horn_faces(horn, o.i);
  auto x = parse_x(A, o.x, 1 - o.n);
  auto p = inner_horn_fill(A, horn, o.i, x);
  std::string why;
  r.add("filler is Maurer-Cartan", nerve_check(A, p, &why), why.empty() ? Json::object() : Json{{"failure", why}});
  r.add("top component is x", component(p, identity_word(o.n)) == x);
  bool horn_kept = true;
  for (auto& [t, v] : horn.mu) horn_kept = horn_kept && component(p, t) == v;
  r.add("horn components unchanged", horn_kept);
  if (o.n == 2) {
    // mu02 = dx + mu0 x + x mu2 + f01 f12 - 1
    auto f01 = A.add(A.unit, component(p, {0, 1})), f12 = A.add(A.unit, component(p, {1, 2}));
    auto rhs = A.sub(A.add(A.add(A.d(x), A.mul(component(p, {0}), x)), A.add(A.mul(x, component(p, {2})), A.mul(f01, f12))),
                     A.unit);
    r.add("mu02 = dx + mu0 x + x mu2 + f01 f12 - 1", component(p, {0, 2}) == rhs);
  }
  r.output = io::nerve_to_json(p);
  if (!o.out.empty()) io::write_file(o.out, r.output);
  return r;
}

struct EdgeData {
  Element mu0, mu1, mu01;
};

EdgeData edge_of(const NervePoint& p) { return {component(p, {0}), component(p, {1}), component(p, {0, 1})}; }

Json matrix_json(const DGAlgebra& A, const Matrix2U& m) {
  Json j = Json::array();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Json e = Json::object();
      for (auto& [pw, el] : m.e[2 * a + b])
        if (!A.is_zero(el)) e[std::to_string(pw)] = io::element_to_json(el);
      j.push_back(e);
    }
  return j;
}

Report nerve_lift_cmd(const Options& o) {
  Report r{o.command, "Proposition Markl"};
  auto A = load_dga(o);
  NervePoint p;
  if (!o.input.empty()) {
    p = io::nerve_from_json(A, io::read_file(o.input));
    if (p.n != 1) throw InvalidInput("lift expects a point of N_1");
    std::string why;
    if (!nerve_check(A, p, &why)) throw InvalidInput("input is not Maurer-Cartan: " + why);
  } else {
    std::mt19937_64 g(o.seed);
    p = sample_any(A, 1, g);
  }
  auto e = edge_of(p);
  auto w = quasi_invertible_solve(A, e.mu0, e.mu1, e.mu01);
  r.add("edge is quasi-invertible", w.has_value());
  if (!w) return r;
  r.add("quasi-inverse satisfies its equations", check_quasi_inverse(A, e.mu0, e.mu1, e.mu01, *w));
  auto lift = catalan_lift(A, e.mu0, e.mu1, e.mu01, *w);
  r.add("d beta + [alpha, beta] = 1", lift.beta_ok);
  r.add("da + a^2 = u.1", lift.mc_ok, Json{{"terms", lift.terms}});
  std::string why;
  r.add("a - a0 lies in VA", thick_edge_check(A, lift.a, &why), why.empty() ? Json::object() : Json{{"failure", why}});
  r.output = Json{{"a", matrix_json(A, lift.a)}, {"point", io::nerve_to_json(p)}};
  return r;
}

Report nerve_psi_cmd(const Options& o) {
  Report r{o.command, "Lemma psi"};
  auto A = load_dga(o);
  auto c = psi_check(A, 2);
  Json d{{"elements", c.elements}, {"products", c.products}, {"max_total_degree", 2}};
  if (!c.failure.empty()) d["failure"] = c.failure;
  r.add("psi is a dga isomorphism onto VA", c.ok, d);
  return r;
}

Report nerve_identities_cmd(const Options& o, const Budget& budget) {
  Report r{o.command, "Lemma smooth"};
  auto A = load_dga(o);
  std::mt19937_64 g(o.seed);
  int done = 0, tries = 0;
  while (done < o.sample) {
    budget.check("identities sample " + std::to_string(done));
    if (++tries > 20 * o.sample + 20) {
      r.add("enough quasi-invertible samples", false, Json{{"found", done}, {"wanted", o.sample}});
      break;
    }
    auto e = edge_of(sample_any(A, 1, g));
    auto w = quasi_invertible_solve(A, e.mu0, e.mu1, e.mu01);
    if (!w) continue;
    auto lift = catalan_lift(A, e.mu0, e.mu1, e.mu01, *w);
    auto s = smoothness_identities(A, lift.a, -2, 2);
    Json d{{"d_a b = 1", s.b_ok},     {"h d h = h, h^2 = 0", s.h_identities}, {"p closed form", s.p_closed},
           {"H identities", s.H_identities}, {"P closed form", s.P_closed},    {"im p ideal (sampled)", s.ideal_sampled},
           {"checked", s.checked}};
    r.add("point " + std::to_string(done), s.all() && lift.mc_ok, d);
    ++done;
  }
  return r;
}

// ---- suites

template <class F>
void guarded_case(Report& r, const std::string& name, const Budget& budget, F f) {
  budget.check(name);
  try {
    f();
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::exception& e) {
    r.add(name, false, Json{{"error", e.what()}});
  }
}

void cert_case(Report& r, const std::string& name, const Budget& budget, const std::function<ExpansionCertificate()>& make) {
  guarded_case(r, name, budget, [&] {
    auto c = make();
    auto v = verify_certificate(c);
    r.add(name, v.valid, verify_detail(c, v));
  });
}

Report suite_expansions(const Options& o, const Budget& budget) {
  Report r{o.command, "Suite"};
  auto name = [](std::string s, std::initializer_list<int> args) {
    s += "(";
    bool first = true;
    for (int a : args) {
      s += (first ? "" : ",") + std::to_string(a);
      first = false;
    }
    return s + ")";
  };
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n)
      for (int i = 0; i <= m; ++i) {
        cert_case(r, name("prism", {m, n, i}), budget, [=] { return cert_prism_horn(m, n, i); });
        if (0 < i && i < m)
          cert_case(r, name("prism-inner", {m, n, i}), budget, [=] { return cert_prism_horn(m, n, i, true); });
      }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; m + n <= 4; ++n)
      for (int j = 0; j <= n; ++j)
        cert_case(r, name("prism-tilde", {m, n, j}), budget, [=] { return cert_prism_horn_tilde(m, n, j); });
  for (int n = 1; n <= 4; ++n)
    for (int mask = 1; mask + 1 < (1 << (n + 1)); ++mask) {
      std::vector<int> faces;
      for (int f = 0; f <= n; ++f)
        if (mask >> f & 1) faces.push_back(f);
      cert_case(r, "union(" + std::to_string(n) + ";" + join_ints(faces, ",") + ")", budget,
                [=] { return cert_union_of_faces(n, faces); });
    }
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i < n; ++i)
      cert_case(r, name("thick-inner", {n, i, n + 1}), budget, [=] { return cert_thick_inner_horn(n, i, n + 1); });
  for (int n = 2; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      cert_case(r, name("thick-horn", {n, i, n + 1}), budget, [=] { return cert_thick_horn(n, i, n + 1); });
  for (int n = 0; n <= 2; ++n) cert_case(r, name("cylinder", {n, n + 2}), budget, [=] { return cert_cylinder(n, n + 2); });
  for (int n = 1; n <= 3; ++n)
    cert_case(r, name("thick-boundary", {n, n + 2}), budget, [=] { return cert_thick_boundary(n, n + 2); });
  for (int n = 0; n <= 4; ++n) cert_case(r, name("spine", {n}), budget, [=] { return cert_spine(n); });
  for (int n = 2; n <= 3; ++n)
    cert_case(r, name("spine-thick", {n, n + 1}), budget, [=] { return cert_spine_thick(n, n + 1); });
  for (int side = 0; side <= 1; ++side) {
    cert_case(r, name("product-with-horn", {2, 1, 1, 0, side}), budget,
              [=] { return cert_product_with_pair(horn(2, 1), 1, 0, side); });
    cert_case(r, name("product-with-horn-inner", {2, 1, 2, 1, side}), budget,
              [=] { return cert_product_with_pair(horn(2, 1), 2, 1, side, true); });
  }
  return r;
}

struct NamedCategory {
  std::string name;
  FiniteCategory cat;
};

FiniteCategory category_named(const std::string& s) {
  auto num = [&](const std::string& prefix) -> int {
    auto t = s.substr(prefix.size());
    auto v = parse_ints(t);
    if (v.size() != 1 || v[0] < 1 || v[0] > 12) throw InvalidInput("bad category size in " + s);
    return v[0];
  };
  if (s == "idem") return idempotent_monoid();
  if (s == "poset") return chain_poset(2);
  if (s == "point") return discrete_category(1);
  if (s.starts_with("z")) return cyclic_group(num("z"));
  if (s.starts_with("chain")) return chain_poset(num("chain"));
  if (s.starts_with("indiscrete")) return indiscrete_groupoid(num("indiscrete"));
  if (s.starts_with("discrete")) return discrete_category(num("discrete"));
  throw InvalidInput("unknown category " + s + " (z<N>, idem, poset, chain<N>, indiscrete<N>, discrete<N>, point)");
}

// is every arrow invertible
bool all_invertible(const FiniteCategory& c) {
  for (size_t f = 0; f < c.src.size(); ++f) {
    bool inv = false;
    for (size_t g = 0; g < c.src.size(); ++g)
      if (c.comp[g][f] >= 0 && c.comp[g][f] == c.identity[c.src[f]] && c.comp[f][g] == c.identity[c.tgt[f]]) inv = true;
    if (!inv) return false;
  }
  return true;
}

Report suite_set_model(const Options& o, const Budget& budget) {
  Report r{o.command, "Suite"};
  int k = o.k, d = o.eff_depth();
  for (std::string cname : {"z2", "z3", "idem", "poset"}) {
    auto c = category_named(cname);
    auto x = nerve(c, d);
    guarded_case(r, cname + " k-groupoid", budget, [&] {
      bool got = is_k_groupoid(x, k, d).holds, want = k >= 1 && all_invertible(c);
      r.add(cname + " k-groupoid", got == want, Json{{"verdict", got}, {"expected", want}});
    });
    guarded_case(r, cname + " k-category", budget, [&] {
      bool got = is_k_category(x, k, d).holds;
      r.add(cname + " k-category", got == (k >= 1), Json{{"verdict", got}});
    });
    guarded_case(r, cname + " cores", budget, [&] {
      auto gg = gg_core(x, k, d);
      r.add(cname + " GG(X) is a k-groupoid", is_k_groupoid(gg.object, k, d).holds);
      auto g = g_core(x, k, d), gs = g_core_spine(x, k, d);
      bool same = true;
      for (int n = 0; n <= d; ++n) same = same && g.inclusion.level[n] == gs.inclusion.level[n];
      r.add(cname + " G(X) spine = all edges", same);
      r.add(cname + " GG(X) -> G(X) hypercover", is_hypercover(corestrict(gg_evaluation(gg, x), g.inclusion), d).holds);
      auto ggg = gg_core(gg.object, k, d);
      r.add(cname + " GGG(X) = GG(X)", is_isomorphism(postcompose(ggg, gg_core(x, k, d), gg_evaluation(gg, x)), d));
    });
  }
  auto functor = [&](const std::string& a, const std::string& b, const std::vector<int>& arrows) {
    auto ca = category_named(a), cb = category_named(b);
    return nerve_map(ca, nerve(ca, d), cb, nerve(cb, d), arrows);
  };
  struct WeCase {
    std::string name, a, b;
    std::vector<int> arrows;
  };
  for (auto& w : std::vector<WeCase>{{"id z2", "z2", "z2", {0, 1}},
                                     {"point -> z2", "point", "z2", {0}},
                                     {"z4 -> z2", "z4", "z2", {0, 1, 0, 1}},
                                     {"indiscrete2 -> point", "indiscrete2", "point", {0, 0, 0, 0}},
                                     {"point -> indiscrete3", "point", "indiscrete3", {0}}})
    guarded_case(r, "we " + w.name, budget, [&] {
      auto f = functor(w.a, w.b, w.arrows);
      bool p = is_weak_equivalence_path(f, k, d).holds, q = is_weak_equivalence_direct(f, d).holds;
      r.add("we " + w.name + " path = direct", p == q, Json{{"path", p}, {"direct", q}});
    });
  return r;
}

Report suite_nerve(const Options& o, const Budget& budget) {
  Report r{o.command, "Suite"};
  std::mt19937_64 g(o.seed);
  std::vector<std::pair<std::string, DGAlgebra>> algebras{{"M2", matrix_algebra(2)},
                                                          {"End(V) d=0", end_two_term(0)},
                                                          {"End(V) d=1", end_two_term(1)}};
  for (auto& [name, A] : algebras) {
    for (int n = 2; n <= 4; ++n)
      guarded_case(r, name + " fill n=" + std::to_string(n), budget, [&] {
        bool ok = true;
        for (int s = 0; s < 5; ++s) {
          auto p = sample_any(A, n, g);
          for (int i = 1; i < n; ++i) {
            auto q = inner_horn_fill(A, drop_horn_faces(p, i), i, component(p, identity_word(n)));
            ok = ok && q == p;
          }
        }
        r.add(name + " fill n=" + std::to_string(n) + " recovers the point", ok);
      });
    guarded_case(r, name + " psi", budget, [&] {
      auto c = psi_check(A, 2);
      r.add(name + " psi", c.ok, c.failure.empty() ? Json::object() : Json{{"failure", c.failure}});
    });
    guarded_case(r, name + " lift", budget, [&] {
      int lifted = 0, ok = 0;
      for (int s = 0; s < 5; ++s) {
        auto e = edge_of(sample_any(A, 1, g));
        auto w = quasi_invertible_solve(A, e.mu0, e.mu1, e.mu01);
        if (!w) continue;
        ++lifted;
        auto lift = catalan_lift(A, e.mu0, e.mu1, e.mu01, *w);
        ok += lift.mc_ok && lift.beta_ok && thick_edge_check(A, lift.a) &&
              smoothness_identities(A, lift.a, -2, 2).all();
      }
      r.add(name + " lift and identities", ok == lifted, Json{{"lifted", lifted}, {"ok", ok}});
    });
  }
  return r;
}

// ---- export

Json export_command(const Options& o, const std::string& what) {
  int d = o.eff_depth();
  if (what == "nerve") return io::sobj_to_json(*nerve(category_named(o.category), d));
  if (what == "functor") {
    auto a = category_named(o.category), b = category_named(o.target);
    auto arrows = parse_ints(o.arrows);
    if (arrows.size() != a.src.size()) throw InvalidInput("--arrows needs one value per arrow of the source");
    for (int v : arrows)
      if (v < 0 || v >= static_cast<int>(b.src.size())) throw InvalidInput("--arrows value out of range");
    auto f = nerve_map(a, nerve(a, d), b, nerve(b, d), arrows);
    std::string why;
    if (!f.valid(d, &why)) throw InvalidInput("not a functor: " + why);
    return io::morphism_to_json(f, d);
  }
  if (what == "dga") {
    if (o.algebra == "m2") return io::dga_to_json(matrix_algebra(2));
    if (o.algebra.starts_with("end:")) return io::dga_to_json(end_two_term(parse_rational(o.algebra.substr(4))));
    throw InvalidInput("--algebra must be m2 or end:<c>");
  }
  if (what == "point") {
    auto A = load_dga(o);
    std::mt19937_64 g(o.seed);
    return io::nerve_to_json(sample_any(A, o.n, g));
  }
  throw InvalidInput("unknown export " + what);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"simploid: exact checks for higher groupoids", "simploid"};
  app.require_subcommand(1);
  app.add_option("--input", o.input, "input file (cert.v1, sobj.v1, smorph.v1 or nerve.v1)");
  app.add_option("--dga", o.dga, "dga.v1 file");
  app.add_option("--out", o.out, "write the produced artifact here");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--k", o.k, "groupoid level")->check(CLI::Range(0, 6));
  app.add_option("--depth", o.depth, "verification depth, default k+3")->check(CLI::Range(0, 12));
  app.add_option("--trunc", o.trunc, "truncation of thick shapes");
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--sample", o.sample, "number of sampled points")->check(CLI::Range(0, 100000));
  app.add_option("--budget-ms", o.budget_ms, "time budget, falls back to SIMPLOID_BUDGET_MS");
  app.add_option("--kind", o.kind, "certificate kind");
  app.add_option("--m", o.m);
  app.add_option("--n", o.n);
  app.add_option("--i", o.i);
  app.add_option("--x", o.x, "filler value: 0 or an element as JSON");
  app.add_option("--faces", o.faces, "comma separated face indices");
  app.add_option("--via", o.via, "path, direct or cat");
  app.add_option("--category", o.category, "z<N>, idem, poset, chain<N>, indiscrete<N>, discrete<N>, point");
  app.add_option("--target", o.target, "target category of a functor");
  app.add_option("--arrows", o.arrows, "functor on arrows, comma separated");
  app.add_option("--algebra", o.algebra, "m2 or end:<c>");
  app.add_flag("--inner", o.inner, "inner expansion");
  app.add_flag("--timings", o.timings, "add wall-clock timings to the report");

  std::string group, leaf;
  auto add_group = [&](const std::string& name, const std::string& desc, const std::vector<std::string>& leaves) {
    auto* g = app.add_subcommand(name, desc);
    g->fallthrough();
    g->require_subcommand(1);
    g->callback([&, name] { group = name; });
    for (auto& l : leaves) {
      auto* s = g->add_subcommand(l);
      s->fallthrough();
      s->callback([&, l] { leaf = l; });
    }
  };
  add_group("expansion", "certify, verify or search expansions", {"certify", "verify", "search"});
  add_group("check", "set-model conditions",
            {"kgroupoid", "kcategory", "fibration", "hypercover", "quasi-fibration", "we"});
  add_group("nerve", "Maurer-Cartan nerve of a dga", {"check", "fill", "lift", "psi", "identities"});
  add_group("suite", "named batteries", {"expansions", "set-model", "nerve"});
  add_group("export", "write example inputs", {"nerve", "functor", "dga", "point"});

  std::vector<std::string> argv_s{"simploid"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  o.command = group + " " + leaf;

  try {
    if (o.budget_ms < 0) {
      if (const char* env = std::getenv("SIMPLOID_BUDGET_MS")) {
        try {
          size_t used = 0;
          o.budget_ms = std::stol(env, &used);
          if (used != std::string(env).size() || o.budget_ms < 0) throw std::invalid_argument(env);
        } catch (const std::logic_error&) {
          throw InvalidInput(std::string("SIMPLOID_BUDGET_MS is not a nonnegative integer: ") + env);
        }
      }
    }
    if (o.budget_ms < 0) o.budget_ms = 0;
    Budget budget(o.budget_ms);

    if (group == "export") {
      auto j = export_command(o, leaf);
      if (o.out.empty())
        out << io::dump(j);
      else
        io::write_file(o.out, j);
      return kExitTrue;
    }

    Report r;
    if (group == "expansion") {
      if (leaf == "certify") {
        if (o.kind.empty()) throw InvalidInput("--kind is required");
        r = expansion_certify(o);
      } else {
        if (o.input.empty()) throw InvalidInput("--input is required");
        r = leaf == "verify" ? expansion_verify(o) : expansion_search(o, budget);
      }
    } else if (group == "check") {
      if (o.input.empty()) throw InvalidInput("--input is required");
      r = check_command(o, leaf);
    } else if (group == "nerve") {
      if (leaf == "check") r = nerve_check_cmd(o);
      if (leaf == "fill") r = nerve_fill_cmd(o);
      if (leaf == "lift") r = nerve_lift_cmd(o);
      if (leaf == "psi") r = nerve_psi_cmd(o);
      if (leaf == "identities") r = nerve_identities_cmd(o, budget);
    } else if (group == "suite") {
      if (leaf == "expansions") r = suite_expansions(o, budget);
      if (leaf == "set-model") r = suite_set_model(o, budget);
      if (leaf == "nerve") r = suite_nerve(o, budget);
    }
    budget.check(o.command);
    r.command = o.command;
    r.config = config_of(o);
    if (o.timings) r.timings = Json{{"total_ms", budget.elapsed()}};
    out << (o.format == "json" ? io::dump(r.to_json()) : r.to_text());
    return r.verdict() ? kExitTrue : kExitFalse;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InsufficientTruncation& e) {
    err << "insufficient truncation: " << e.what() << "\n";
    return kExitInsufficientTruncation;
  } catch (const BudgetExceeded& e) {
    err << "timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const SearchTimeout& e) {
    err << "timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace simploid
