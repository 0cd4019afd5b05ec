#include "simploid/setmodel.hpp"

#include "simploid/expansion.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace simploid {

namespace {

std::string str(const char* name, int n) { return std::string(name) + "(" + std::to_string(n) + ")"; }

std::string str(const char* name, int n, int i) {
  return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(i) + ")";
}

SimplicialMap between(const Inclusion& small, const Inclusion& big) {
  SimplicialMap g{small.sub, big.sub, {}};
  g.assign.resize(small.to_ambient.size());
  for (size_t n = 0; n < small.to_ambient.size(); ++n)
    for (int c : small.to_ambient[n]) {
      int b = big.from_ambient[n][c];
      if (b < 0) throw InvalidInput("subcomplexes are not nested");
      g.assign[n].push_back(Simplex::cell(static_cast<int>(n), b));
    }
  return g;
}

std::vector<int> slot_dims(const FiniteSimplicialSet& t) {
  std::vector<int> dims;
  for (int n = 0; n < static_cast<int>(t.labels.size()); ++n)
    for (int c = 0; c < t.count(n); ++c) dims.push_back(n);
  return dims;
}

std::vector<int> push_table(const Morphism& f, const std::vector<int>& dims, const std::vector<int>& table) {
  std::vector<int> out(table.size());
  for (size_t q = 0; q < table.size(); ++q) out[q] = f.at(dims[q], table[q]);
  return out;
}

// Map(A c B, f) as (index into Map(A,X), index into Map(B,Y)) pairs
struct RelativeSpace {
  Inclusion ia, ib;
  MapSpace ma, mb;
  std::vector<std::pair<int, int>> pairs;
};

RelativeSpace relative_space(const Morphism& f, const Subcomplex& a, const Subcomplex& b) {
  RelativeSpace r;
  r.ia = realize(a);
  r.ib = realize(b);
  r.ma = enumerate_maps(r.ia.sub, f.source);
  r.mb = enumerate_maps(r.ib.sub, f.target);
  auto dims = slot_dims(*r.ia.sub);
  std::unordered_map<Word, std::vector<int>, WordHash> by_image;
  for (size_t k = 0; k < r.ma.size(); ++k) by_image[push_table(f, dims, r.ma.maps[k])].push_back(static_cast<int>(k));
  auto g = between(r.ia, r.ib);
  for (size_t k = 0; k < r.mb.size(); ++k) {
    auto it = by_image.find(pull_table(g, r.mb.maps[k], *f.target));
    if (it == by_image.end()) continue;
    for (int q : it->second) r.pairs.push_back({q, static_cast<int>(k)});
  }
  return r;
}

Subcomplex vertex_sub(const SSet& amb, const Word& key) {
  return subcomplex_by_keys(amb, [&](const std::vector<Word>& ks) {
    for (auto& k : ks)
      if (k != key) return false;
    return true;
  });
}

std::set<int> tail_set(const std::vector<Word>& ks, int side) {
  std::set<int> out;
  for (auto& k : ks)
    if (k[0] == side) out.insert(k[1]);
  return out;
}

int face_to_edge(const TruncatedSimplicialObject& X, int n, int x, int a, int b) {
  int cur = x, dim = n;
  for (int j = n; j >= 0; --j)
    if (j != a && j != b) cur = X.d(dim--, j, cur);
  return cur;
}

Core edge_core(const SObj& x, int k, int depth, bool spine_only) {
  auto gg = gg_core(x, k, std::min(depth, 1));
  auto ev = gg_evaluation(gg, x);
  std::vector<char> edge(x->size(1), 0);
  for (int e = 0; e < gg.object->size(1); ++e) edge[ev.at(1, e)] = 1;
  std::vector<std::vector<char>> keep(depth + 1);
  for (int n = 0; n <= depth; ++n) {
    keep[n].assign(x->size(n), 0);
    for (int s = 0; s < x->size(n); ++s) {
      bool ok = true;
      for (int a = 0; ok && a < n; ++a)
        for (int b = a + 1; ok && b <= (spine_only ? a + 1 : n); ++b) ok = edge[face_to_edge(*x, n, s, a, b)];
      keep[n][s] = ok;
    }
  }
  auto [obj, inc] = sub_object(x, keep, !spine_only);
  if (!spine_only && obj->coskeletal_from == 0) {
    auto copy = std::make_shared<TruncatedSimplicialObject>(*obj);
    copy->coskeletal_from = 1;
    obj = copy;
    inc.source = obj;
  }
  return {obj, inc};
}

}  // namespace

void ConditionReport::add(LevelVerdict v) {
  holds = holds && v.ok;
  levels.push_back(std::move(v));
}

LevelVerdict relative_restriction(const Morphism& f, const Subcomplex& a, const Subcomplex& b, const Subcomplex& a2,
                                  const Subcomplex& b2) {
  RelativeSpace d = relative_space(f, a, b);
  RelativeSpace c = relative_space(f, a2, b2);
  auto ga = between(c.ia, d.ia);
  auto gb = between(c.ib, d.ib);
  std::set<std::pair<int, int>> image;
  for (auto [p, q] : d.pairs) {
    auto ra = c.ma.find(pull_table(ga, d.ma.maps[p], *f.source));
    auto rb = c.mb.find(pull_table(gb, d.mb.maps[q], *f.target));
    if (!ra || !rb) throw InvalidInput("restriction left the mapping space");
    image.insert({static_cast<int>(*ra), static_cast<int>(*rb)});
  }
  LevelVerdict v;
  v.source = static_cast<long long>(d.pairs.size());
  v.target = static_cast<long long>(c.pairs.size());
  v.image = static_cast<long long>(image.size());
  v.surjective = v.image == v.target;
  v.bijective = v.surjective && v.source == v.target;
  v.ok = v.surjective;
  return v;
}

LevelVerdict lifting_condition(const Morphism& f, const Subcomplex& s) {
  auto full = full_subcomplex(s.ambient);
  return relative_restriction(f, full, full, s, full);
}

int thick_trunc(const SObj& x, const SObj& y, int at_least) {
  if (x->coskeletal_from < 0 || y->coskeletal_from < 0)
    throw InsufficientTruncation("thick shapes need coskeletal objects");
  return std::max({x->coskeletal_from, y->coskeletal_from, at_least});
}

int default_depth(int k) { return k + 3; }

static LevelVerdict horn_verdict(const Morphism& f, int n, int i, bool need_bij) {
  auto h = horn(n, i);
  LevelVerdict v = lifting_condition(f, h.as_subcomplex());
  v.shape = str("horn", n, i);
  v.n = n;
  v.i = i;
  v.need_bijective = need_bij;
  v.ok = v.surjective && (!need_bij || v.bijective);
  return v;
}

static LevelVerdict thick_edge_verdict(const Morphism& f, int end) {
  auto t = thick_simplex(1, thick_trunc(f.source, f.target));
  LevelVerdict v = lifting_condition(f, vertex_sub(t, {end}));
  v.shape = str("thick_edge", end);
  v.n = 1;
  v.i = end;
  return v;
}

ConditionReport is_k_groupoid(const SObj& x, int k, int depth) {
  ConditionReport r{"kgroupoid", "Definition k-groupoid", {}, true};
  auto f = to_terminal(x, terminal_object(depth));
  for (int n = 1; n <= depth; ++n)
    for (int i = 0; i <= n; ++i) r.add(horn_verdict(f, n, i, n > k));
  return r;
}

ConditionReport is_k_category(const SObj& x, int k, int depth) {
  ConditionReport r{"kcategory", "Definition k-category", {}, true};
  auto f = to_terminal(x, terminal_object(depth));
  for (int n = 2; n <= depth; ++n)
    for (int i = 1; i < n; ++i) r.add(horn_verdict(f, n, i, n > k));
  r.add(thick_edge_verdict(f, 0));
  r.add(thick_edge_verdict(f, 1));
  return r;
}

ConditionReport is_fibration(const Morphism& f, int depth) {
  ConditionReport r{"fibration", "Definition fibration", {}, true};
  for (int n = 1; n <= depth; ++n)
    for (int i = 0; i <= n; ++i) r.add(horn_verdict(f, n, i, false));
  return r;
}

ConditionReport is_hypercover(const Morphism& f, int depth) {
  ConditionReport r{"hypercover", "Definition hypercover", {}, true};
  for (int n = 0; n <= depth; ++n) {
    LevelVerdict v;
    if (n == 0) {
      auto pt = standard_simplex(0);
      v = lifting_condition(f, empty_subcomplex(pt));
    } else {
      v = lifting_condition(f, boundary(n).as_subcomplex());
    }
    v.shape = str("boundary", n);
    v.n = n;
    r.add(v);
  }
  return r;
}

ConditionReport is_quasi_fibration(const Morphism& f, int depth) {
  ConditionReport r{"quasi-fibration", "Definition quasi-fibration", {}, true};
  for (int n = 2; n <= depth; ++n)
    for (int i = 1; i < n; ++i) r.add(horn_verdict(f, n, i, false));
  r.add(thick_edge_verdict(f, 0));
  r.add(thick_edge_verdict(f, 1));
  return r;
}

bool is_isomorphism(const Morphism& f, int depth) {
  for (int n = 0; n <= depth; ++n) {
    if (f.source->size(n) != f.target->size(n)) return false;
    std::vector<char> hit(f.target->size(n), 0);
    for (int x = 0; x < f.source->size(n); ++x) {
      int y = f.at(n, x);
      if (hit[y]) return false;
      hit[y] = 1;
    }
  }
  return true;
}

MappingObject path_space(const SObj& x, int n, int depth) {
  auto dn = standard_simplex(n);
  return mapping_object([dn](int m) { return product(standard_simplex(m), dn); }, x, depth);
}

MappingObject thick_power(const SObj& x, int n, int k, int depth) {
  auto tn = thick_simplex(n, thick_trunc(x, x, k + 1));
  return mapping_object([tn](int m) { return product(standard_simplex(m), tn); }, x, depth);
}

Morphism path_end(const MappingObject& p1, const SObj& x, int end) {
  return evaluation(p1, x, [end](int, int a) { return Word{a, end}; });
}

std::vector<int> simplex_table(int m, int x, const TruncatedSimplicialObject& X) {
  auto t = standard_simplex(m);
  std::vector<int> out;
  for (int d = 0; d <= m; ++d)
    for (int c = 0; c < t->count(d); ++c) {
      Word v;
      for (int u : t->vertices(d, c)) v.push_back(t->vertex_keys[u][0]);
      int cur = x, dim = m;
      for (int j = m; j >= 0; --j)
        if (!std::binary_search(v.begin(), v.end(), j)) cur = X.d(dim--, j, cur);
      out.push_back(cur);
    }
  return out;
}

BrownFactorization brown_factorization(const Morphism& f, int depth) {
  const SObj& X = f.source;
  const SObj& Y = f.target;
  MappingObject p1 = path_space(Y, 1, depth);
  Morphism ev0 = path_end(p1, Y, 0), ev1 = path_end(p1, Y, 1);
  Pullback pf = pullback(f, ev0);
  Morphism q = compose(ev1, pf.p2);
  Morphism s{X, pf.object, {}};
  for (int m = 0; m <= pf.object->depth(); ++m) {
    std::map<std::pair<int, int>, int> id;
    for (int z = 0; z < pf.object->size(m); ++z) id[{pf.p1.at(m, z), pf.p2.at(m, z)}] = z;
    auto proj = map_by_keys(p1.shapes[m], standard_simplex(m), [](const Word& k) { return Word{k[0]}; });
    std::vector<int> lv(X->size(m));
    for (int x = 0; x < X->size(m); ++x) {
      auto path = p1.spaces[m].find(pull_table(proj, simplex_table(m, f.at(m, x), *Y), *Y));
      if (!path) throw InvalidInput("constant path not found");
      lv[x] = id.at({x, static_cast<int>(*path)});
    }
    s.level.push_back(lv);
  }
  return {p1, pf, s, q, pf.p1};
}

ConditionReport is_weak_equivalence_path(const Morphism& f, int k, int depth) {
  (void)k;
  auto bf = brown_factorization(f, depth);
  ConditionReport r = is_hypercover(bf.q, depth);
  r.name = "we-path";
  r.lemma = "Definition weak equivalence";
  return r;
}

ConditionReport is_weak_equivalence_direct(const Morphism& f, int depth) {
  ConditionReport r{"we-direct", "Theorem We", {}, true};
  for (int n = 0; n < depth; ++n) {
    auto amb = standard_simplex(n + 1);
    auto a = subcomplex_by_keys(amb, [n](const std::vector<Word>& ks) {
      for (auto& k : ks)
        if (k[0] > n) return false;
      return true;
    });
    auto a2 = subcomplex_by_keys(amb, [n](const std::vector<Word>& ks) {
      std::set<int> vs;
      for (auto& k : ks) {
        if (k[0] > n) return false;
        vs.insert(k[0]);
      }
      return static_cast<int>(vs.size()) <= n;
    });
    auto b2 = horn_in(amb, n + 1, n + 1);
    auto v = relative_restriction(f, a, full_subcomplex(amb), a2, b2);
    v.shape = str("We", n);
    v.n = n;
    r.add(v);
  }
  return r;
}

ConditionReport is_weak_equivalence_cat_direct(const Morphism& f, int depth) {
  ConditionReport r{"we-cat", "Theorem join-criterion", {}, true};
  int base = thick_trunc(f.source, f.target);
  {
    auto t = thick_simplex(1, base);
    auto v = relative_restriction(f, vertex_sub(t, {0}), full_subcomplex(t), empty_subcomplex(t), vertex_sub(t, {1}));
    v.shape = "join(0)";
    r.add(v);
  }
  for (int n = 1; n < depth; ++n) {
    auto j = join(thick_simplex(1, std::max(base, n)), standard_simplex(n - 1));
    auto a = subcomplex_by_keys(j, [](const std::vector<Word>& ks) { return tail_set(ks, 0) <= std::set<int>{1}; });
    auto a2 = subcomplex_by_keys(j, [n](const std::vector<Word>& ks) {
      auto s = tail_set(ks, 0);
      return s <= std::set<int>{1} && (s.empty() || static_cast<int>(tail_set(ks, 1).size()) < n);
    });
    auto b2 = subcomplex_by_keys(j, [n](const std::vector<Word>& ks) {
      return static_cast<int>(tail_set(ks, 1).size()) < n || tail_set(ks, 0) <= std::set<int>{0};
    });
    auto v = relative_restriction(f, a, full_subcomplex(j), a2, b2);
    v.shape = str("join", n);
    v.n = n;
    r.add(v);
  }
  return r;
}

MappingObject gg_core(const SObj& x, int k, int depth) {
  int t = thick_trunc(x, x, k + 1);
  return mapping_object([t](int m) { return thick_simplex(m, t); }, x, depth);
}

Morphism gg_evaluation(const MappingObject& gg, const SObj& x) {
  return evaluation(gg, x, [](int, int a) { return Word{a}; });
}

Core g_core_image(const SObj& x, int k, int depth) {
  auto gg = gg_core(x, k, depth);
  auto [obj, inc] = image_object(gg_evaluation(gg, x));
  return {obj, inc};
}

Core g_core_spine(const SObj& x, int k, int depth) { return edge_core(x, k, depth, true); }

Core g_core(const SObj& x, int k, int depth) { return edge_core(x, k, depth, false); }

Morphism corestrict(const Morphism& f, const Morphism& inclusion) {
  Morphism out{f.source, inclusion.source, {}};
  int top = std::min(f.source->depth(), inclusion.source->depth());
  for (int n = 0; n <= top; ++n) {
    std::unordered_map<int, int> inv;
    for (int s = 0; s < inclusion.source->size(n); ++s) inv[inclusion.at(n, s)] = s;
    std::vector<int> lv(f.source->size(n));
    for (int z = 0; z < f.source->size(n); ++z) {
      auto it = inv.find(f.at(n, z));
      if (it == inv.end()) throw InvalidInput("morphism does not factor through the sub-object");
      lv[z] = it->second;
    }
    out.level.push_back(lv);
  }
  return out;
}

}  // namespace simploid
