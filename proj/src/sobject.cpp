#include "simploid/sobject.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace simploid {

TruncatedSimplicialObject::TruncatedSimplicialObject(const TruncatedSimplicialObject& o)
    : coskeletal_from(o.coskeletal_from), sizes(o.sizes), face(o.face), degen(o.degen), labels(o.labels) {}

int TruncatedSimplicialObject::depth() const { return static_cast<int>(sizes.size()) - 1; }

int TruncatedSimplicialObject::size(int n) const {
  if (n > depth()) ensure(n);
  return sizes[n];
}

int TruncatedSimplicialObject::d(int n, int i, int x) const {
  if (n > depth()) ensure(n);
  return face[n][i][x];
}

int TruncatedSimplicialObject::s(int n, int j, int x) const {
  if (n + 1 > depth()) ensure(n + 1);
  return degen[n][j][x];
}

int TruncatedSimplicialObject::degenerate(int n, int x, const Word& sigma) const {
  int cur = n;
  for (int r : repeats(sigma)) x = s(cur++, r, x);
  return x;
}

std::string TruncatedSimplicialObject::label(int n, int x) const {
  if (n < static_cast<int>(labels.size()) && x < static_cast<int>(labels[n].size())) return labels[n][x];
  std::string s = "<";
  for (int i = 0; n > 0 && i <= n; ++i) s += (i ? "," : "") + std::to_string(d(n, i, x));
  return n > 0 ? s + ">" : "#" + std::to_string(x);
}

static const std::vector<int> kEmpty;

const TruncatedSimplicialObject::FaceIndex& TruncatedSimplicialObject::face_index(int n) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (n > depth()) ensure(n);
  if (static_cast<int>(index_.size()) <= n) index_.resize(n + 1);
  if (!index_[n]) {
    auto idx = std::make_unique<FaceIndex>();
    for (int x = 0; x < sizes[n]; ++x) {
      Word k;
      for (int i = 0; n > 0 && i <= n; ++i) k.push_back(face[n][i][x]);
      (*idx)[k].push_back(x);
    }
    index_[n] = std::move(idx);
  }
  return *index_[n];
}

const std::vector<int>& TruncatedSimplicialObject::with_faces(int n, const Word& faces) const {
  const auto& idx = face_index(n);
  auto it = idx.find(faces);
  return it == idx.end() ? kEmpty : it->second;
}

std::optional<int> TruncatedSimplicialObject::find(int n, const Word& faces) const {
  const auto& v = with_faces(n, faces);
  if (v.empty()) return std::nullopt;
  return v.front();
}

void TruncatedSimplicialObject::ensure(int n) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  while (depth() < n) extend_one();
}

void TruncatedSimplicialObject::extend_one() const {
  int m = depth() + 1;
  if (coskeletal_from < 0 || m <= coskeletal_from)
    throw InsufficientTruncation("level " + std::to_string(m) + " requested but object is truncated at depth " +
                                 std::to_string(depth()));
  auto* self = const_cast<TruncatedSimplicialObject*>(this);
  SObj alias(this, [](const TruncatedSimplicialObject*) {});
  Inclusion bd = boundary(m);
  MapSpace ms = enumerate_maps(bd.sub, alias);
  std::vector<int> opposite(m + 1);
  for (int i = 0; i <= m; ++i) {
    Word verts;
    for (int v = 0; v <= m; ++v)
      if (v != i) verts.push_back(*bd.sub->find_vertex({v}));
    opposite[i] = bd.sub->find_by_vertices(verts)->base;
  }
  std::vector<Word> tuples;
  for (size_t k = 0; k < ms.size(); ++k) {
    Word t(m + 1);
    for (int i = 0; i <= m; ++i) t[i] = ms.value(k, m - 1, opposite[i]);
    tuples.push_back(t);
  }
  std::sort(tuples.begin(), tuples.end());
  std::map<Word, int> id;
  for (size_t x = 0; x < tuples.size(); ++x) id[tuples[x]] = static_cast<int>(x);
  self->sizes.push_back(static_cast<int>(tuples.size()));
  self->face.resize(m + 1);
  self->face[m].assign(m + 1, std::vector<int>(tuples.size()));
  for (size_t x = 0; x < tuples.size(); ++x)
    for (int i = 0; i <= m; ++i) self->face[m][i][x] = tuples[x][i];
  self->degen.resize(m);
  self->degen[m - 1].assign(m, std::vector<int>(sizes[m - 1]));
  for (int j = 0; j < m; ++j)
    for (int x = 0; x < sizes[m - 1]; ++x) {
      Word t(m + 1);
      for (int i = 0; i <= m; ++i) {
        if (i == j || i == j + 1) t[i] = x;
        else if (i < j) t[i] = degen[m - 2][j - 1][face[m - 1][i][x]];
        else t[i] = degen[m - 2][j][face[m - 1][i - 1][x]];
      }
      auto it = id.find(t);
      if (it == id.end()) throw InvalidInput("degenerate tuple missing from coskeletal level");
      self->degen[m - 1][j][x] = it->second;
    }
}

bool TruncatedSimplicialObject::validate(std::string* why, int upto) const {
  int top = upto < 0 ? depth() : upto;
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  for (int n = 1; n <= top; ++n)
    for (int x = 0; x < size(n); ++x) {
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (n >= 2 && d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)))
            return fail("face identity fails at level " + std::to_string(n));
    }
  for (int n = 0; n < top; ++n)
    for (int x = 0; x < size(n); ++x)
      for (int j = 0; j <= n; ++j) {
        int y = s(n, j, x);
        for (int i = 0; i <= n + 1; ++i) {
          int lhs = d(n + 1, i, y);
          int rhs;
          if (i == j || i == j + 1) rhs = x;
          else if (i < j) rhs = s(n - 1, j - 1, d(n, i, x));
          else rhs = s(n - 1, j, d(n, i - 1, x));
          if (lhs != rhs) return fail("face of degeneracy fails at level " + std::to_string(n));
        }
        for (int i = 0; i <= j && n + 2 <= top; ++i)
          if (s(n + 1, i, y) != s(n + 1, j + 1, s(n, i, x))) return fail("degeneracy identity fails");
      }
  return true;
}

int Morphism::at(int n, int x) const {
  while (static_cast<int>(level.size()) <= n) {
    int m = static_cast<int>(level.size());
    const auto& tg = *target;
    if (tg.coskeletal_from < 0 || m <= tg.coskeletal_from || m == 0)
      throw InsufficientTruncation("morphism not defined at level " + std::to_string(m));
    std::vector<int> lv(source->size(m));
    for (int y = 0; y < source->size(m); ++y) {
      Word f;
      for (int i = 0; i <= m; ++i) f.push_back(at(m - 1, source->d(m, i, y)));
      auto r = tg.find(m, f);
      if (!r) throw InvalidInput("morphism extension failed");
      lv[y] = *r;
    }
    level.push_back(std::move(lv));
  }
  return level[n][x];
}

bool Morphism::valid(int upto, std::string* why) const {
  for (int n = 0; n <= upto; ++n)
    for (int x = 0; x < source->size(n); ++x) {
      int y = at(n, x);
      if (y < 0 || y >= target->size(n)) {
        if (why) *why = "value out of range";
        return false;
      }
      for (int i = 0; n > 0 && i <= n; ++i)
        if (target->d(n, i, y) != at(n - 1, source->d(n, i, x))) {
          if (why) *why = "not compatible with faces at level " + std::to_string(n);
          return false;
        }
      for (int j = 0; n < upto && j <= n; ++j)
        if (target->s(n, j, y) != at(n + 1, source->s(n, j, x))) {
          if (why) *why = "not compatible with degeneracies at level " + std::to_string(n);
          return false;
        }
    }
  return true;
}

Morphism identity_morphism(const SObj& x) {
  Morphism m{x, x, {}};
  for (int n = 0; n <= x->depth(); ++n) {
    std::vector<int> lv(x->size(n));
    for (int k = 0; k < x->size(n); ++k) lv[k] = k;
    m.level.push_back(lv);
  }
  return m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism m{f.source, g.target, {}};
  int top = std::min(f.source->depth(), static_cast<int>(f.level.size()) - 1);
  for (int n = 0; n <= top; ++n) {
    std::vector<int> lv(f.source->size(n));
    for (int k = 0; k < f.source->size(n); ++k) lv[k] = g.at(n, f.at(n, k));
    m.level.push_back(lv);
  }
  return m;
}

std::optional<size_t> MapSpace::find(const std::vector<int>& table) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), table);
  if (it == maps.end() || *it != table) return std::nullopt;
  return static_cast<size_t>(it - maps.begin());
}

std::vector<int> cell_offsets(const FiniteSimplicialSet& t) {
  std::vector<int> off(t.labels.size() + 1, 0);
  for (size_t n = 0; n < t.labels.size(); ++n) off[n + 1] = off[n] + t.count(static_cast<int>(n));
  return off;
}

int eval_simplex(const FiniteSimplicialSet&, const std::vector<int>& offset, const std::vector<int>& table,
                 const TruncatedSimplicialObject& x, const Simplex& s) {
  return x.degenerate(s.bdim(), table[offset[s.bdim()] + s.base], s.sigma);
}

std::vector<int> pull_table(const SimplicialMap& g, const std::vector<int>& table_b, const TruncatedSimplicialObject& x) {
  auto off = cell_offsets(*g.target);
  std::vector<int> out;
  for (size_t n = 0; n < g.assign.size(); ++n)
    for (auto& s : g.assign[n]) out.push_back(eval_simplex(*g.target, off, table_b, x, s));
  return out;
}

int eval_vertices(const FiniteSimplicialSet& t, const std::vector<int>& table, const TruncatedSimplicialObject& x,
                  const Word& verts) {
  auto [eps, u] = epi_mono(verts);
  int d = static_cast<int>(u.size()) - 1;
  int val;
  if (auto s = t.find_by_vertices(u)) {
    auto off = cell_offsets(t);
    val = table[off[d] + s->base];
  } else {
    if (!t.complete && d <= t.trunc_dim) throw InvalidInput("vertex sequence is not a simplex");
    if (t.complete) throw InvalidInput("vertex sequence is not a simplex");
    Word f;
    for (int i = 0; i <= d; ++i) {
      Word w = u;
      w.erase(w.begin() + i);
      f.push_back(eval_vertices(t, table, x, w));
    }
    auto r = x.find(d, f);
    if (!r) throw InvalidInput("coskeletal filler missing");
    val = *r;
  }
  return x.degenerate(d, val, eps);
}

namespace {

struct CellOrder {
  std::vector<std::pair<int, int>> order;
};

CellOrder eager_order(const FiniteSimplicialSet& t) {
  CellOrder co;
  int top = static_cast<int>(t.labels.size());
  std::vector<std::vector<int>> pending(top);
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> dependents;
  std::vector<std::vector<char>> done(top);
  for (int n = 0; n < top; ++n) {
    pending[n].assign(t.count(n), 0);
    done[n].assign(t.count(n), 0);
    for (int c = 0; n > 0 && c < t.count(n); ++c) {
      std::set<std::pair<int, int>> bases;
      for (int i = 0; i <= n; ++i) bases.insert({t.face(n, c, i).bdim(), t.face(n, c, i).base});
      pending[n][c] = static_cast<int>(bases.size());
      for (auto& b : bases) dependents[b].push_back({n, c});
    }
  }
  // highest dimension first, so each cell is checked as soon as its faces are set
  auto later = [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, decltype(later)> ready(later);
  auto schedule = [&](std::pair<int, int> cell) {
    ready.push(cell);
    while (!ready.empty()) {
      auto cur = ready.top();
      ready.pop();
      if (done[cur.first][cur.second]) continue;
      done[cur.first][cur.second] = 1;
      co.order.push_back(cur);
      auto it = dependents.find(cur);
      if (it == dependents.end()) continue;
      for (auto& dep : it->second)
        if (--pending[dep.first][dep.second] == 0) ready.push(dep);
    }
  };
  for (int v = 0; top > 0 && v < t.count(0); ++v) schedule({0, v});
  return co;
}

void check_truncation(const FiniteSimplicialSet& t, const TruncatedSimplicialObject& x) {
  int md = t.max_dim();
  if (!t.complete && (x.coskeletal_from < 0 || t.trunc_dim < x.coskeletal_from))
    throw InsufficientTruncation("truncated source at dimension " + std::to_string(t.trunc_dim) +
                                 " does not determine maps into this object");
  if (md > x.depth()) {
    if (x.coskeletal_from < 0)
      throw InsufficientTruncation("source has cells in dimension " + std::to_string(md) +
                                   " but target is truncated at depth " + std::to_string(x.depth()));
    x.ensure(md);
  }
}

}  // namespace

MapSpace enumerate_maps(const SSet& tp, const SObj& xp, const LiftProblem& lp) {
  const auto& t = *tp;
  const auto& x = *xp;
  check_truncation(t, x);
  MapSpace out;
  out.source = tp;
  out.offset = cell_offsets(t);
  int total = out.offset.back();
  if (total == 0) {
    out.maps.push_back({});
    return out;
  }
  auto co = eager_order(t);
  int N = static_cast<int>(co.order.size());
  std::vector<int> vals(total, -1);
  std::vector<const std::vector<int>*> cand(N);
  std::vector<size_t> pos(N);
  std::vector<int> flat(N);
  for (int k = 0; k < N; ++k) flat[k] = out.offset[co.order[k].first] + co.order[k].second;
  // faces of each cell as (table slot, dimension, degeneracy indices)
  struct FaceRef {
    int slot, dim;
    std::vector<int> reps;
  };
  std::vector<std::vector<FaceRef>> faces(N);
  std::vector<const TruncatedSimplicialObject::FaceIndex*> index(t.max_dim() + 1);
  for (int n = 0; n <= t.max_dim(); ++n) index[n] = &x.face_index(n);
  for (int k = 0; k < N; ++k) {
    auto [n, c] = co.order[k];
    for (int i = 0; n > 0 && i <= n; ++i) {
      const auto& f = t.face(n, c, i);
      faces[k].push_back({out.offset[f.bdim()] + f.base, f.bdim(), repeats(f.sigma)});
    }
  }
  Word key;
  auto prepare = [&](int k) {
    int n = co.order[k].first;
    key.clear();
    for (auto& f : faces[k]) {
      int v = vals[f.slot], cur = f.dim;
      for (int r : f.reps) v = x.degen[cur++][r][v];
      key.push_back(v);
    }
    auto it = index[n]->find(key);
    cand[k] = it == index[n]->end() ? &kEmpty : &it->second;
    pos[k] = 0;
  };
  int k = 0;
  prepare(0);
  while (k >= 0) {
    if (pos[k] >= cand[k]->size()) {
      vals[flat[k]] = -1;
      --k;
      continue;
    }
    int v = (*cand[k])[pos[k]++];
    int n = co.order[k].first;
    if (lp.fixed && (*lp.fixed)[flat[k]] >= 0 && (*lp.fixed)[flat[k]] != v) continue;
    if (lp.f && lp.over && lp.f->at(n, v) != (*lp.over)[flat[k]]) continue;
    vals[flat[k]] = v;
    if (k + 1 == N) {
      out.maps.push_back(vals);
      continue;
    }
    ++k;
    prepare(k);
  }
  std::sort(out.maps.begin(), out.maps.end());
  return out;
}

long long naive_table_count(const SSet& tp, const SObj& xp) {
  long long prod = 1;
  for (int n = 0; n <= tp->max_dim(); ++n)
    for (int c = 0; c < tp->count(n); ++c) {
      prod *= xp->size(n);
      if (prod > (1LL << 40)) return prod;
    }
  return prod;
}

MapSpace enumerate_maps_naive(const SSet& tp, const SObj& xp) {
  const auto& t = *tp;
  const auto& x = *xp;
  check_truncation(t, x);
  MapSpace out;
  out.source = tp;
  out.offset = cell_offsets(t);
  int total = out.offset.back();
  std::vector<int> dimof(total);
  for (int n = 0; n <= t.max_dim(); ++n)
    for (int c = 0; c < t.count(n); ++c) dimof[out.offset[n] + c] = n;
  std::vector<int> vals(total, 0);
  for (int q = 0; q < total; ++q)
    if (x.size(dimof[q]) == 0) return out;
  while (true) {
    bool ok = true;
    for (int n = 1; ok && n <= t.max_dim(); ++n)
      for (int c = 0; ok && c < t.count(n); ++c)
        for (int i = 0; ok && i <= n; ++i)
          ok = x.d(n, i, vals[out.offset[n] + c]) == eval_simplex(t, out.offset, vals, x, t.face(n, c, i));
    if (ok) out.maps.push_back(vals);
    int q = 0;
    while (q < total && ++vals[q] == x.size(dimof[q])) vals[q++] = 0;
    if (q == total) break;
  }
  std::sort(out.maps.begin(), out.maps.end());
  return out;
}

FiniteCategory group_category(const std::vector<std::vector<int>>& mult, const std::vector<std::string>& names) {
  int unit = -1;
  for (size_t e = 0; e < mult.size() && unit < 0; ++e) {
    bool ok = true;
    for (size_t g = 0; g < mult.size(); ++g) ok = ok && mult[e][g] == static_cast<int>(g) && mult[g][e] == static_cast<int>(g);
    if (ok) unit = static_cast<int>(e);
  }
  if (unit < 0) throw InvalidInput("multiplication table has no unit");
  for (size_t g = 0; g < mult.size(); ++g) {
    bool inv = false;
    for (size_t h = 0; h < mult.size(); ++h) inv = inv || mult[g][h] == unit;
    if (!inv) throw InvalidInput("element without inverse");
  }
  return monoid_category(mult, unit, names);
}

FiniteCategory monoid_category(const std::vector<std::vector<int>>& mult, int unit, const std::vector<std::string>& names) {
  FiniteCategory c;
  int n = static_cast<int>(mult.size());
  c.objects = 1;
  c.src.assign(n, 0);
  c.tgt.assign(n, 0);
  c.identity = {unit};
  c.comp = mult;
  c.object_labels = {"*"};
  for (int g = 0; g < n; ++g) c.arrow_labels.push_back(g < static_cast<int>(names.size()) ? names[g] : std::to_string(g));
  return c;
}

FiniteCategory cyclic_group(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b] = (a + b) % n;
  return group_category(m);
}

FiniteCategory idempotent_monoid() { return monoid_category({{0, 1}, {1, 1}}, 0, {"1", "e"}); }

FiniteCategory poset_category(int n, const std::vector<std::pair<int, int>>& less) {
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) le[a][a] = 1;
  for (auto [a, b] : less) le[a][b] = 1;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le[a][k] && le[k][b]) le[a][b] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && le[a][b] && le[b][a]) throw InvalidInput("relation is not antisymmetric");
  FiniteCategory c;
  c.objects = n;
  c.identity.assign(n, -1);
  std::map<std::pair<int, int>, int> id;
  for (int a = 0; a < n; ++a) {
    c.object_labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b)
      if (le[a][b]) {
        id[{a, b}] = static_cast<int>(c.src.size());
        if (a == b) c.identity[a] = static_cast<int>(c.src.size());
        c.src.push_back(a);
        c.tgt.push_back(b);
        c.arrow_labels.push_back(std::to_string(a) + "<=" + std::to_string(b));
      }
  }
  int m = static_cast<int>(c.src.size());
  c.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (c.tgt[f] == c.src[g]) c.comp[g][f] = id.at({c.src[f], c.tgt[g]});
  return c;
}

FiniteCategory chain_poset(int n) {
  std::vector<std::pair<int, int>> l;
  for (int a = 0; a + 1 < n; ++a) l.push_back({a, a + 1});
  return poset_category(n, l);
}

FiniteCategory indiscrete_groupoid(int n) {
  FiniteCategory c;
  c.objects = n;
  c.identity.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    c.object_labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (a == b) c.identity[a] = static_cast<int>(c.src.size());
      c.src.push_back(a);
      c.tgt.push_back(b);
      c.arrow_labels.push_back(std::to_string(a) + "->" + std::to_string(b));
    }
  }
  int m = n * n;
  c.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (c.tgt[f] == c.src[g]) c.comp[g][f] = c.src[f] * n + c.tgt[g];
  return c;
}

FiniteCategory discrete_category(int n) {
  FiniteCategory c;
  c.objects = n;
  for (int a = 0; a < n; ++a) {
    c.identity.push_back(a);
    c.src.push_back(a);
    c.tgt.push_back(a);
    c.object_labels.push_back(std::to_string(a));
    c.arrow_labels.push_back("id" + std::to_string(a));
  }
  c.comp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) c.comp[a][a] = a;
  return c;
}

FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b) {
  FiniteCategory c;
  c.objects = a.objects * b.objects;
  int ma = static_cast<int>(a.src.size()), mb = static_cast<int>(b.src.size());
  for (int x = 0; x < a.objects; ++x)
    for (int y = 0; y < b.objects; ++y) {
      c.object_labels.push_back("(" + a.object_labels[x] + "," + b.object_labels[y] + ")");
      c.identity.push_back(a.identity[x] * mb + b.identity[y]);
    }
  for (int f = 0; f < ma; ++f)
    for (int g = 0; g < mb; ++g) {
      c.src.push_back(a.src[f] * b.objects + b.src[g]);
      c.tgt.push_back(a.tgt[f] * b.objects + b.tgt[g]);
      c.arrow_labels.push_back("(" + a.arrow_labels[f] + "," + b.arrow_labels[g] + ")");
    }
  c.comp.assign(ma * mb, std::vector<int>(ma * mb, -1));
  for (int g1 = 0; g1 < ma; ++g1)
    for (int g2 = 0; g2 < mb; ++g2)
      for (int f1 = 0; f1 < ma; ++f1)
        for (int f2 = 0; f2 < mb; ++f2) {
          int x = a.comp[g1][f1], y = b.comp[g2][f2];
          if (x >= 0 && y >= 0) c.comp[g1 * mb + g2][f1 * mb + f2] = x * mb + y;
        }
  return c;
}

SObj nerve(const FiniteCategory& c, int depth) {
  auto x = std::make_shared<TruncatedSimplicialObject>();
  x->coskeletal_from = 2;
  std::vector<std::vector<Word>> lv(depth + 1);
  std::vector<std::map<Word, int>> id(depth + 1);
  for (int o = 0; o < c.objects; ++o) lv[0].push_back({o});
  int m = static_cast<int>(c.src.size());
  for (int n = 1; n <= depth; ++n) {
    if (n == 1) {
      for (int f = 0; f < m; ++f) lv[1].push_back({f});
    } else {
      for (auto& w : lv[n - 1])
        for (int f = 0; f < m; ++f)
          if (c.src[f] == c.tgt[w.back()]) {
            Word v = w;
            v.push_back(f);
            lv[n].push_back(v);
          }
    }
  }
  for (int n = 0; n <= depth; ++n)
    for (size_t k = 0; k < lv[n].size(); ++k) id[n][lv[n][k]] = static_cast<int>(k);
  x->sizes.resize(depth + 1);
  x->face.resize(depth + 1);
  x->degen.resize(depth);
  x->labels.resize(depth + 1);
  for (int n = 0; n <= depth; ++n) {
    x->sizes[n] = static_cast<int>(lv[n].size());
    for (auto& w : lv[n]) {
      std::string s;
      if (n == 0) s = c.object_labels.empty() ? std::to_string(w[0]) : c.object_labels[w[0]];
      else
        for (size_t j = 0; j < w.size(); ++j)
          s += (j ? "|" : "") + (c.arrow_labels.empty() ? std::to_string(w[j]) : c.arrow_labels[w[j]]);
      x->labels[n].push_back(n == 0 ? s : "[" + s + "]");
    }
    if (n >= 1) {
      x->face[n].assign(n + 1, std::vector<int>(lv[n].size()));
      for (size_t k = 0; k < lv[n].size(); ++k) {
        const Word& w = lv[n][k];
        for (int i = 0; i <= n; ++i) {
          int r;
          if (n == 1) r = i == 0 ? c.tgt[w[0]] : c.src[w[0]];
          else {
            Word v;
            if (i == 0) v.assign(w.begin() + 1, w.end());
            else if (i == n) v.assign(w.begin(), w.end() - 1);
            else {
              v.assign(w.begin(), w.begin() + i - 1);
              v.push_back(c.comp[w[i]][w[i - 1]]);
              v.insert(v.end(), w.begin() + i + 1, w.end());
            }
            r = id[n - 1].at(v);
          }
          x->face[n][i][k] = r;
        }
      }
    }
    if (n < depth) {
      x->degen[n].assign(n + 1, std::vector<int>(lv[n].size()));
      for (size_t k = 0; k < lv[n].size(); ++k) {
        const Word& w = lv[n][k];
        for (int j = 0; j <= n; ++j) {
          Word v;
          if (n == 0) v = {c.identity[w[0]]};
          else {
            int obj = j == n ? c.tgt[w[n - 1]] : c.src[w[j]];
            v.assign(w.begin(), w.begin() + j);
            v.push_back(c.identity[obj]);
            v.insert(v.end(), w.begin() + j, w.end());
          }
          x->degen[n][j][k] = id[n + 1].at(v);
        }
      }
    }
  }
  return x;
}

SObj terminal_object(int depth) {
  FiniteCategory c = discrete_category(1);
  c.object_labels = {"pt"};
  auto x = nerve(c, depth);
  auto y = std::make_shared<TruncatedSimplicialObject>(*x);
  y->coskeletal_from = 0;
  return y;
}

Morphism to_terminal(const SObj& x, const SObj& pt) {
  Morphism m{x, pt, {}};
  for (int n = 0; n <= x->depth(); ++n) m.level.push_back(std::vector<int>(x->size(n), 0));
  return m;
}

Morphism nerve_map(const FiniteCategory& a, const SObj& na, const FiniteCategory& b, const SObj& nb,
                   const std::vector<int>& on_arrows) {
  int m = static_cast<int>(a.src.size());
  std::vector<int> on_obj(a.objects);
  for (int o = 0; o < a.objects; ++o) on_obj[o] = b.src[on_arrows[a.identity[o]]];
  for (int f = 0; f < m; ++f) {
    if (b.src[on_arrows[f]] != on_obj[a.src[f]] || b.tgt[on_arrows[f]] != on_obj[a.tgt[f]])
      throw InvalidInput("arrow map is not compatible with sources and targets");
    for (int g = 0; g < m; ++g)
      if (a.comp[g][f] >= 0 && on_arrows[a.comp[g][f]] != b.comp[on_arrows[g]][on_arrows[f]])
        throw InvalidInput("arrow map is not a functor");
  }
  Morphism mor{na, nb, {}};
  int top = std::min(na->depth(), nb->depth());
  mor.level.resize(top + 1);
  mor.level[0] = on_obj;
  for (int n = 1; n <= top; ++n) {
    mor.level[n].resize(na->size(n));
    for (int k = 0; k < na->size(n); ++k) {
      if (n == 1) {
        mor.level[1][k] = on_arrows[k];
        continue;
      }
      Word faces;
      for (int i = 0; i <= n; ++i) faces.push_back(mor.level[n - 1][na->d(n, i, k)]);
      auto r = nb->find(n, faces);
      if (!r) throw InvalidInput("simplex lookup failed");
      mor.level[n][k] = *r;
    }
  }
  return mor;
}

Pullback pullback(const Morphism& f, const Morphism& g) {
  const auto& X = *f.source;
  const auto& Y = *g.source;
  int top = std::min(X.depth(), Y.depth());
  auto p = std::make_shared<TruncatedSimplicialObject>();
  if (X.coskeletal_from >= 0 && Y.coskeletal_from >= 0 && f.target->coskeletal_from >= 0)
    p->coskeletal_from = std::max(X.coskeletal_from, Y.coskeletal_from);
  std::vector<std::vector<std::pair<int, int>>> lv(top + 1);
  std::vector<std::map<std::pair<int, int>, int>> id(top + 1);
  for (int n = 0; n <= top; ++n) {
    std::map<int, std::vector<int>> ys;
    for (int y = 0; y < Y.size(n); ++y) ys[g.at(n, y)].push_back(y);
    for (int x = 0; x < X.size(n); ++x) {
      auto it = ys.find(f.at(n, x));
      if (it == ys.end()) continue;
      for (int y : it->second) {
        id[n][{x, y}] = static_cast<int>(lv[n].size());
        lv[n].push_back({x, y});
      }
    }
  }
  p->sizes.resize(top + 1);
  p->face.resize(top + 1);
  p->degen.resize(top);
  p->labels.resize(top + 1);
  Morphism p1{p, f.source, {}}, p2{p, g.source, {}};
  for (int n = 0; n <= top; ++n) {
    p->sizes[n] = static_cast<int>(lv[n].size());
    std::vector<int> a, b;
    for (auto [x, y] : lv[n]) {
      a.push_back(x);
      b.push_back(y);
      p->labels[n].push_back("(" + X.label(n, x) + "," + Y.label(n, y) + ")");
    }
    p1.level.push_back(a);
    p2.level.push_back(b);
    if (n >= 1) {
      p->face[n].assign(n + 1, std::vector<int>(lv[n].size()));
      for (size_t k = 0; k < lv[n].size(); ++k)
        for (int i = 0; i <= n; ++i)
          p->face[n][i][k] = id[n - 1].at({X.d(n, i, lv[n][k].first), Y.d(n, i, lv[n][k].second)});
    }
    if (n < top) {
      p->degen[n].assign(n + 1, std::vector<int>(lv[n].size()));
      for (size_t k = 0; k < lv[n].size(); ++k)
        for (int j = 0; j <= n; ++j)
          p->degen[n][j][k] = id[n + 1].at({X.s(n, j, lv[n][k].first), Y.s(n, j, lv[n][k].second)});
    }
  }
  SObj ps = p;
  p1.source = ps;
  p2.source = ps;
  return {ps, p1, p2};
}

Pullback product_object(const SObj& a, const SObj& b) {
  int top = std::min(a->depth(), b->depth());
  auto pt = terminal_object(top);
  return pullback(to_terminal(a, pt), to_terminal(b, pt));
}

std::pair<SObj, Morphism> sub_object(const SObj& xp, const std::vector<std::vector<char>>& keep, bool coskeletal) {
  const auto& X = *xp;
  int top = static_cast<int>(keep.size()) - 1;
  auto s = std::make_shared<TruncatedSimplicialObject>();
  s->coskeletal_from = coskeletal ? X.coskeletal_from : -1;
  std::vector<std::vector<int>> newid(top + 1), old(top + 1);
  for (int n = 0; n <= top; ++n) {
    newid[n].assign(X.size(n), -1);
    for (int x = 0; x < X.size(n); ++x)
      if (keep[n][x]) {
        newid[n][x] = static_cast<int>(old[n].size());
        old[n].push_back(x);
      }
  }
  s->sizes.resize(top + 1);
  s->face.resize(top + 1);
  s->degen.resize(top);
  s->labels.resize(top + 1);
  auto get = [&](int n, int x) {
    int r = newid[n][x];
    if (r < 0) throw InvalidInput("subset is not closed under simplicial operators at level " + std::to_string(n));
    return r;
  };
  for (int n = 0; n <= top; ++n) {
    s->sizes[n] = static_cast<int>(old[n].size());
    for (int x : old[n]) s->labels[n].push_back(X.label(n, x));
    if (n >= 1) {
      s->face[n].assign(n + 1, std::vector<int>(old[n].size()));
      for (size_t k = 0; k < old[n].size(); ++k)
        for (int i = 0; i <= n; ++i) s->face[n][i][k] = get(n - 1, X.d(n, i, old[n][k]));
    }
    if (n < top) {
      s->degen[n].assign(n + 1, std::vector<int>(old[n].size()));
      for (size_t k = 0; k < old[n].size(); ++k)
        for (int j = 0; j <= n; ++j) s->degen[n][j][k] = get(n + 1, X.s(n, j, old[n][k]));
    }
  }
  SObj so = s;
  return {so, Morphism{so, xp, old}};
}

std::pair<SObj, Morphism> image_object(const Morphism& f) {
  int top = std::min(f.source->depth(), f.target->depth());
  std::vector<std::vector<char>> keep(top + 1);
  for (int n = 0; n <= top; ++n) {
    keep[n].assign(f.target->size(n), 0);
    for (int x = 0; x < f.source->size(n); ++x) keep[n][f.at(n, x)] = 1;
  }
  return sub_object(f.target, keep, false);
}

MappingObject mapping_object(const ShapeFamily& shapes, const SObj& xp, int depth) {
  MappingObject mo;
  const auto& X = *xp;
  for (int m = 0; m <= depth; ++m) {
    mo.shapes.push_back(shapes(m));
    mo.spaces.push_back(enumerate_maps(mo.shapes[m], xp));
  }
  auto obj = std::make_shared<TruncatedSimplicialObject>();
  obj->coskeletal_from = (X.coskeletal_from >= 0 && depth >= X.coskeletal_from) ? X.coskeletal_from : -1;
  obj->sizes.resize(depth + 1);
  obj->face.resize(depth + 1);
  obj->degen.resize(depth);
  auto op_map = [&](int from, int to, const Word& theta) {
    return map_by_keys(mo.shapes[from], mo.shapes[to], [&](const Word& k) {
      Word r = k;
      r[0] = theta[k[0]];
      return r;
    });
  };
  for (int m = 0; m <= depth; ++m) {
    obj->sizes[m] = static_cast<int>(mo.spaces[m].size());
    if (m >= 1) {
      obj->face[m].assign(m + 1, std::vector<int>(mo.spaces[m].size()));
      for (int i = 0; i <= m; ++i) {
        auto g = op_map(m - 1, m, coface(m, i));
        for (size_t a = 0; a < mo.spaces[m].size(); ++a) {
          auto r = mo.spaces[m - 1].find(pull_table(g, mo.spaces[m].maps[a], X));
          if (!r) throw InvalidInput("face of mapping object element not found");
          obj->face[m][i][a] = static_cast<int>(*r);
        }
      }
    }
    if (m < depth) {
      obj->degen[m].assign(m + 1, std::vector<int>(mo.spaces[m].size()));
      for (int j = 0; j <= m; ++j) {
        auto g = op_map(m + 1, m, codegen(m, j));
        for (size_t a = 0; a < mo.spaces[m].size(); ++a) {
          auto r = mo.spaces[m + 1].find(pull_table(g, mo.spaces[m].maps[a], X));
          if (!r) throw InvalidInput("degeneracy of mapping object element not found");
          obj->degen[m][j][a] = static_cast<int>(*r);
        }
      }
    }
  }
  mo.object = obj;
  return mo;
}

Morphism evaluation(const MappingObject& mo, const SObj& xp, const std::function<Word(int m, int a)>& key) {
  Morphism mor{mo.object, xp, {}};
  for (size_t m = 0; m < mo.spaces.size(); ++m) {
    const auto& T = *mo.shapes[m];
    Word verts;
    for (int a = 0; a <= static_cast<int>(m); ++a) {
      auto v = T.find_vertex(key(static_cast<int>(m), a));
      if (!v) throw InvalidInput("evaluation vertex not found");
      verts.push_back(*v);
    }
    std::vector<int> lv;
    for (auto& table : mo.spaces[m].maps) lv.push_back(eval_vertices(T, table, *xp, verts));
    mor.level.push_back(lv);
  }
  return mor;
}

Morphism postcompose(const MappingObject& mx, const MappingObject& my, const Morphism& f) {
  Morphism mor{mx.object, my.object, {}};
  for (size_t m = 0; m < mx.spaces.size() && m < my.spaces.size(); ++m) {
    const auto& T = *mx.shapes[m];
    std::vector<int> dims;
    for (int n = 0; n <= T.max_dim(); ++n)
      for (int c = 0; c < T.count(n); ++c) dims.push_back(n);
    std::vector<int> lv;
    for (auto& table : mx.spaces[m].maps) {
      std::vector<int> t2(table.size());
      for (size_t q = 0; q < table.size(); ++q) t2[q] = f.at(dims[q], table[q]);
      auto r = my.spaces[m].find(t2);
      if (!r) throw InvalidInput("postcomposition left the mapping space");
      lv.push_back(static_cast<int>(*r));
    }
    mor.level.push_back(lv);
  }
  return mor;
}

SObj extend_copy(const SObj& x, int depth) {
  x->ensure(depth);
  return std::make_shared<TruncatedSimplicialObject>(*x);
}

}  // namespace simploid
