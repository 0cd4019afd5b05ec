#include "simploid/sset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace simploid {

Simplex Simplex::cell(int d, int id) { return Simplex{identity_word(d), id}; }

Word identity_word(int n) {
  Word w(n + 1);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

std::vector<int> repeats(const Word& sigma) {
  std::vector<int> r;
  for (size_t j = 0; j + 1 < sigma.size(); ++j)
    if (sigma[j] == sigma[j + 1]) r.push_back(static_cast<int>(j));
  return r;
}

Word surjection_from_repeats(int dim, const std::vector<int>& rep) {
  Word s(dim + 1, 0);
  for (int j = 0; j < dim; ++j) {
    bool r = std::find(rep.begin(), rep.end(), j) != rep.end();
    s[j + 1] = s[j] + (r ? 0 : 1);
  }
  return s;
}

SimplexRef to_ref(const Simplex& s) {
  SimplexRef r;
  r.degens = repeats(s.sigma);
  std::reverse(r.degens.begin(), r.degens.end());
  r.base = s.base;
  return r;
}

Simplex from_ref(const SimplexRef& r, int dim) {
  for (size_t k = 0; k + 1 < r.degens.size(); ++k)
    if (r.degens[k] <= r.degens[k + 1]) throw InvalidInput("degeneracy word not strictly decreasing");
  for (int j : r.degens)
    if (j < 0 || j >= dim) throw InvalidInput("degeneracy index out of range");
  return Simplex{surjection_from_repeats(dim, r.degens), r.base};
}

std::pair<Word, Word> epi_mono(const Word& theta) {
  Word img;
  Word eps(theta.size());
  for (size_t j = 0; j < theta.size(); ++j) {
    if (img.empty() || img.back() != theta[j]) img.push_back(theta[j]);
    eps[j] = static_cast<int>(img.size()) - 1;
  }
  return {eps, img};
}

Word compose(const Word& outer, const Word& inner) {
  Word r(inner.size());
  for (size_t j = 0; j < inner.size(); ++j) r[j] = outer[inner[j]];
  return r;
}

Word coface(int n, int i) {
  Word w(n);
  for (int j = 0; j < n; ++j) w[j] = j < i ? j : j + 1;
  return w;
}

Word codegen(int n, int j) {
  Word w(n + 2);
  for (int k = 0; k <= n + 1; ++k) w[k] = k <= j ? k : k - 1;
  return w;
}

static uint32_t mask_of(const Word& image) {
  uint32_t m = 0;
  for (int v : image) m |= 1u << v;
  return m;
}

int FiniteSimplicialSet::max_dim() const {
  for (int n = static_cast<int>(labels.size()) - 1; n >= 0; --n)
    if (!labels[n].empty()) return n;
  return -1;
}

int FiniteSimplicialSet::total_cells() const {
  int t = 0;
  for (auto& l : labels) t += static_cast<int>(l.size());
  return t;
}

std::vector<int> FiniteSimplicialSet::counts() const {
  std::vector<int> c;
  for (auto& l : labels) c.push_back(static_cast<int>(l.size()));
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

void FiniteSimplicialSet::finalize() {
  faces.resize(labels.size());
  int top = static_cast<int>(labels.size());
  if (top > 20) throw InvalidInput("dimension too large");
  mask_table_.assign(top, {});
  for (int n = 0; n < top; ++n) {
    int cnt = count(n);
    if (static_cast<int>(faces[n].size()) != cnt) {
      if (n == 0 && faces[0].empty()) faces[0].assign(cnt, {});
      else throw InvalidInput("face table size mismatch in dimension " + std::to_string(n));
    }
    uint32_t full = (1u << (n + 1)) - 1;
    mask_table_[n].assign(cnt, std::vector<Simplex>(full + 1));
    for (int c = 0; c < cnt; ++c) {
      if (n > 0 && static_cast<int>(faces[n][c].size()) != n + 1)
        throw InvalidInput("cell " + std::to_string(c) + " in dimension " + std::to_string(n) + " has wrong face count");
      for (int i = 0; i < static_cast<int>(faces[n][c].size()); ++i) {
        const Simplex& f = faces[n][c][i];
        if (f.dim() != n - 1 || f.bdim() < 0 || f.bdim() >= n || f.base < 0 || f.base >= count(f.bdim()))
          throw InvalidInput("bad face reference in dimension " + std::to_string(n));
      }
      auto& tab = mask_table_[n][c];
      tab[full] = Simplex::cell(n, c);
      for (uint32_t mask = 1; mask < full; ++mask) {
        int j = n;
        while (mask & (1u << j)) --j;
        uint32_t low = mask & ((1u << j) - 1);
        uint32_t high = (mask >> (j + 1)) << j;
        uint32_t m2 = low | high;
        const Simplex& f = faces[n][c][j];
        Word pos;
        for (int p = 0; p < n; ++p)
          if (m2 & (1u << p)) pos.push_back(p);
        Word vals = compose(f.sigma, pos);
        auto [eps, img] = epi_mono(vals);
        const Simplex& g = mask_table_[f.bdim()][f.base][mask_of(img)];
        tab[mask] = Simplex{compose(g.sigma, eps), g.base};
      }
    }
  }
  vertex_seq_.assign(top, {});
  by_vertices_.assign(top, {});
  vertex_determined_ = true;
  for (int n = 0; n < top; ++n) {
    vertex_seq_[n].resize(count(n));
    for (int c = 0; c < count(n); ++c) {
      Word v(n + 1);
      for (int j = 0; j <= n; ++j) v[j] = mask_table_[n][c][1u << j].base;
      vertex_seq_[n][c] = v;
      if (!by_vertices_[n].emplace(v, c).second) vertex_determined_ = false;
    }
  }
  vertex_lookup_.clear();
  if (!vertex_keys.empty() && static_cast<int>(vertex_keys.size()) != count(0))
    throw InvalidInput("vertex key count mismatch");
  for (size_t v = 0; v < vertex_keys.size(); ++v) vertex_lookup_.emplace(vertex_keys[v], static_cast<int>(v));
}

Simplex FiniteSimplicialSet::apply(const Word& theta, const Simplex& s) const {
  Word st = compose(s.sigma, theta);
  auto [eps, img] = epi_mono(st);
  const Simplex& g = mask_table_[s.bdim()][s.base][mask_of(img)];
  return Simplex{compose(g.sigma, eps), g.base};
}

Simplex FiniteSimplicialSet::face_of(const Simplex& s, int i) const { return apply(coface(s.dim(), i), s); }

Simplex FiniteSimplicialSet::degen_of(const Simplex& s, int j) const { return apply(codegen(s.dim(), j), s); }

const Simplex& FiniteSimplicialSet::face_along(int n, int c, const Word& image) const {
  return mask_table_[n][c][mask_of(image)];
}

Word FiniteSimplicialSet::vertices(const Simplex& s) const {
  const Word& b = vertex_seq_[s.bdim()][s.base];
  return compose(b, s.sigma);
}

std::optional<Simplex> FiniteSimplicialSet::find_by_vertices(const Word& verts) const {
  auto [eps, u] = epi_mono(verts);
  int d = static_cast<int>(u.size()) - 1;
  if (d < 0 || d >= static_cast<int>(by_vertices_.size())) return std::nullopt;
  auto it = by_vertices_[d].find(u);
  if (it == by_vertices_[d].end()) return std::nullopt;
  return Simplex{eps, it->second};
}

std::optional<int> FiniteSimplicialSet::find_vertex(const Word& key) const {
  auto it = vertex_lookup_.find(key);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

static std::string key_text(const Word& k) {
  std::string s;
  if (k.size() == 1) return std::to_string(k[0]);
  s = "(";
  for (size_t j = 0; j < k.size(); ++j) s += (j ? "," : "") + std::to_string(k[j]);
  return s + ")";
}

static std::string seq_label(const std::vector<Word>& keys, const Word& verts) {
  std::string s = "(";
  for (size_t j = 0; j < verts.size(); ++j) s += (j ? "," : "") + key_text(keys[verts[j]]);
  return s + ")";
}

std::string FiniteSimplicialSet::label_of(const Simplex& s) const {
  if (s.nondegenerate()) return labels[s.bdim()][s.base];
  if (!vertex_keys.empty()) return seq_label(vertex_keys, vertices(s));
  std::ostringstream o;
  auto r = to_ref(s);
  for (int j : r.degens) o << "s" << j;
  o << " " << labels[s.bdim()][s.base];
  return o.str();
}

Simplex SimplicialMap::image(const Simplex& s) const {
  return target->apply(s.sigma, assign[s.bdim()][s.base]);
}

bool SimplicialMap::valid(std::string* why) const {
  for (int n = 0; n < static_cast<int>(source->labels.size()); ++n) {
    if (source->count(n) && (n >= static_cast<int>(assign.size()) || static_cast<int>(assign[n].size()) != source->count(n))) {
      if (why) *why = "assignment table incomplete in dimension " + std::to_string(n);
      return false;
    }
    for (int c = 0; c < source->count(n); ++c) {
      const Simplex& a = assign[n][c];
      if (a.dim() != n || a.bdim() < 0 || a.base < 0 || a.base >= target->count(a.bdim())) {
        if (why) *why = "bad image for cell " + source->labels[n][c];
        return false;
      }
      for (int i = 0; n > 0 && i <= n; ++i) {
        if (target->face_of(a, i) != image(source->face(n, c, i))) {
          if (why) *why = "map does not commute with face " + std::to_string(i) + " of " + source->labels[n][c];
          return false;
        }
      }
    }
  }
  return true;
}

bool Subcomplex::contains(const Simplex& s) const { return contains(s.bdim(), s.base); }

int Subcomplex::total() const {
  int t = 0;
  for (auto& m : member) t += static_cast<int>(std::count(m.begin(), m.end(), 1));
  return t;
}

Subcomplex Inclusion::as_subcomplex() const {
  Subcomplex s = empty_subcomplex(ambient);
  for (size_t n = 0; n < to_ambient.size(); ++n)
    for (int c : to_ambient[n]) s.member[n][c] = 1;
  return s;
}

Subcomplex empty_subcomplex(SSet ambient) {
  Subcomplex s;
  s.member.resize(ambient->labels.size());
  for (size_t n = 0; n < s.member.size(); ++n) s.member[n].assign(ambient->count(static_cast<int>(n)), 0);
  s.ambient = std::move(ambient);
  return s;
}

Subcomplex full_subcomplex(SSet ambient) {
  Subcomplex s = empty_subcomplex(std::move(ambient));
  for (auto& m : s.member) std::fill(m.begin(), m.end(), 1);
  return s;
}

Subcomplex closure(SSet ambient, const std::vector<std::pair<int, int>>& cells) {
  Subcomplex s = empty_subcomplex(ambient);
  std::vector<std::pair<int, int>> stack(cells.begin(), cells.end());
  while (!stack.empty()) {
    auto [n, c] = stack.back();
    stack.pop_back();
    if (s.member[n][c]) continue;
    s.member[n][c] = 1;
    for (int i = 0; n > 0 && i <= n; ++i) {
      const Simplex& f = ambient->face(n, c, i);
      stack.emplace_back(f.bdim(), f.base);
    }
  }
  return s;
}

Subcomplex unite(const Subcomplex& a, const Subcomplex& b) {
  Subcomplex s = a;
  for (size_t n = 0; n < s.member.size(); ++n)
    for (size_t c = 0; c < s.member[n].size(); ++c) s.member[n][c] |= b.member[n][c];
  return s;
}

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
  Subcomplex s = a;
  for (size_t n = 0; n < s.member.size(); ++n)
    for (size_t c = 0; c < s.member[n].size(); ++c) s.member[n][c] &= b.member[n][c];
  return s;
}

bool is_closed(const Subcomplex& s) {
  for (size_t n = 1; n < s.member.size(); ++n)
    for (size_t c = 0; c < s.member[n].size(); ++c) {
      if (!s.member[n][c]) continue;
      for (int i = 0; i <= static_cast<int>(n); ++i)
        if (!s.contains(s.ambient->face(static_cast<int>(n), static_cast<int>(c), i))) return false;
    }
  return true;
}

Inclusion realize(const Subcomplex& s) {
  auto out = std::make_shared<FiniteSimplicialSet>();
  const auto& amb = *s.ambient;
  Inclusion inc;
  int top = static_cast<int>(s.member.size());
  while (top > 0 && std::count(s.member[top - 1].begin(), s.member[top - 1].end(), 1) == 0) --top;
  inc.to_ambient.assign(top, {});
  inc.from_ambient.assign(amb.labels.size(), {});
  for (size_t n = 0; n < amb.labels.size(); ++n) inc.from_ambient[n].assign(amb.count(static_cast<int>(n)), -1);
  out->labels.assign(top, {});
  out->faces.assign(top, {});
  for (int n = 0; n < top; ++n)
    for (int c = 0; c < amb.count(n); ++c)
      if (s.member[n][c]) {
        inc.from_ambient[n][c] = static_cast<int>(inc.to_ambient[n].size());
        inc.to_ambient[n].push_back(c);
        out->labels[n].push_back(amb.labels[n][c]);
        if (n == 0 && !amb.vertex_keys.empty()) out->vertex_keys.push_back(amb.vertex_keys[c]);
      }
  for (int n = 0; n < top; ++n) {
    out->faces[n].resize(inc.to_ambient[n].size());
    for (size_t k = 0; k < inc.to_ambient[n].size(); ++k) {
      int c = inc.to_ambient[n][k];
      for (int i = 0; n > 0 && i <= n; ++i) {
        Simplex f = amb.face(n, c, i);
        int nb = inc.from_ambient[f.bdim()][f.base];
        if (nb < 0) throw InvalidInput("subcomplex is not closed under faces");
        f.base = nb;
        out->faces[n][k].push_back(f);
      }
    }
  }
  out->trunc_dim = amb.complete ? std::max(top - 1, -1) : amb.trunc_dim;
  out->complete = amb.complete;
  out->finalize();
  inc.sub = out;
  inc.ambient = s.ambient;
  inc.embedding.source = out;
  inc.embedding.target = s.ambient;
  inc.embedding.assign.resize(top);
  for (int n = 0; n < top; ++n)
    for (int c : inc.to_ambient[n]) inc.embedding.assign[n].push_back(Simplex::cell(n, c));
  return inc;
}

SSet empty_set() {
  auto e = std::make_shared<FiniteSimplicialSet>();
  e->trunc_dim = -1;
  e->complete = true;
  e->finalize();
  return e;
}

static void combos(int n, int k, int start, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    combos(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

static std::vector<Word> subsets(int n, int k) {
  std::vector<Word> out;
  Word cur;
  combos(n, k, 0, cur, out);
  return out;
}

SSet standard_simplex(int n) {
  auto s = std::make_shared<FiniteSimplicialSet>();
  s->trunc_dim = n;
  s->complete = true;
  s->labels.resize(n + 1);
  s->faces.resize(n + 1);
  std::vector<std::map<Word, int>> ids(n + 1);
  for (int k = 0; k <= n; ++k) {
    for (auto& w : subsets(n + 1, k + 1)) {
      ids[k][w] = static_cast<int>(s->labels[k].size());
      std::string lab = "(";
      for (size_t j = 0; j < w.size(); ++j) lab += (j ? "," : "") + std::to_string(w[j]);
      s->labels[k].push_back(lab + ")");
      std::vector<Simplex> fs;
      for (int i = 0; k > 0 && i <= k; ++i) {
        Word f = w;
        f.erase(f.begin() + i);
        fs.push_back(Simplex::cell(k - 1, ids[k - 1].at(f)));
      }
      s->faces[k].push_back(fs);
    }
  }
  for (int v = 0; v <= n; ++v) s->vertex_keys.push_back({v});
  s->finalize();
  return s;
}

static void adjacent_distinct_words(int len, int alphabet, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < alphabet; ++v) {
    if (!cur.empty() && cur.back() == v) continue;
    cur.push_back(v);
    adjacent_distinct_words(len, alphabet, cur, out);
    cur.pop_back();
  }
}

SSet thickify(const SSet& tp, int trunc) {
  const auto& t = *tp;
  struct Entry {
    int r, cell;
    Word w;
    std::vector<Word> sortkey;
  };
  auto out = std::make_shared<FiniteSimplicialSet>();
  out->trunc_dim = trunc;
  out->complete = t.max_dim() <= 0;
  int top = trunc;
  if (out->complete) top = std::min(trunc, std::max(t.max_dim(), 0));
  if (t.max_dim() < 0) top = -1;
  bool keyed = !t.vertex_keys.empty();
  std::vector<std::vector<Entry>> entries(top + 1);
  std::vector<std::map<std::tuple<int, int, Word>, int>> ids(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (int r = 0; r <= std::min(k, t.max_dim()); ++r) {
      std::vector<Word> words;
      Word cur;
      adjacent_distinct_words(k + 1, r + 1, cur, words);
      for (auto& w : words) {
        std::vector<char> seen(r + 1, 0);
        for (int x : w) seen[x] = 1;
        if (std::count(seen.begin(), seen.end(), 0)) continue;
        for (int c = 0; c < t.count(r); ++c) {
          Entry e{r, c, w, {}};
          if (keyed) {
            for (int x : w) e.sortkey.push_back(t.vertex_keys[t.vertices(r, c)[x]]);
          } else {
            e.sortkey = {Word{r, c}, w};
          }
          entries[k].push_back(std::move(e));
        }
      }
    }
    std::sort(entries[k].begin(), entries[k].end(),
              [](const Entry& a, const Entry& b) { return a.sortkey < b.sortkey; });
    for (size_t x = 0; x < entries[k].size(); ++x)
      ids[k][{entries[k][x].r, entries[k][x].cell, entries[k][x].w}] = static_cast<int>(x);
  }
  out->labels.resize(top + 1);
  out->faces.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (auto& e : entries[k]) {
      if (keyed) {
        std::string lab = "(";
        for (size_t j = 0; j < e.sortkey.size(); ++j) lab += (j ? "," : "") + key_text(e.sortkey[j]);
        out->labels[k].push_back(lab + ")");
      } else {
        std::string lab = t.labels[e.r][e.cell] + "<";
        for (size_t j = 0; j < e.w.size(); ++j) lab += (j ? "," : "") + std::to_string(e.w[j]);
        out->labels[k].push_back(lab + ">");
      }
      std::vector<Simplex> fs;
      for (int i = 0; k > 0 && i <= k; ++i) {
        Word w1 = e.w;
        w1.erase(w1.begin() + i);
        Word img = w1;
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        Word rel(w1.size());
        for (size_t j = 0; j < w1.size(); ++j)
          rel[j] = static_cast<int>(std::lower_bound(img.begin(), img.end(), w1[j]) - img.begin());
        const Simplex& g = t.face_along(e.r, e.cell, img);
        Word w2 = compose(g.sigma, rel);
        Word u;
        Word sig(w2.size());
        for (size_t j = 0; j < w2.size(); ++j) {
          if (u.empty() || u.back() != w2[j]) u.push_back(w2[j]);
          sig[j] = static_cast<int>(u.size()) - 1;
        }
        int d = static_cast<int>(u.size()) - 1;
        fs.push_back(Simplex{sig, ids[d].at({g.bdim(), g.base, u})});
      }
      out->faces[k].push_back(fs);
    }
  }
  if (top >= 0) {
    for (auto& e : entries[0]) out->vertex_keys.push_back(keyed ? t.vertex_keys[e.cell] : Word{e.cell});
  }
  out->finalize();
  return out;
}

SSet thick_simplex(int n, int trunc) { return thickify(standard_simplex(n), trunc); }

static int eff_trunc(const FiniteSimplicialSet& s) { return s.complete ? 1 << 20 : s.trunc_dim; }

SSet product(const SSet& sp, const SSet& tp) {
  const auto& S = *sp;
  const auto& T = *tp;
  auto out = std::make_shared<FiniteSimplicialSet>();
  int dS = S.max_dim(), dT = T.max_dim();
  int top;
  if (dS < 0 || dT < 0) {
    top = -1;
    out->complete = S.complete && T.complete;
    out->trunc_dim = out->complete ? -1 : std::min(eff_trunc(S), eff_trunc(T));
  } else if (S.complete && T.complete) {
    top = dS + dT;
    out->complete = true;
    out->trunc_dim = top;
  } else {
    top = std::min(eff_trunc(S), eff_trunc(T));
    out->complete = false;
    out->trunc_dim = top;
  }
  bool keyed = !S.vertex_keys.empty() && !T.vertex_keys.empty();
  using Pair = std::pair<Simplex, Simplex>;
  std::vector<std::vector<Pair>> cells(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (int p = 0; p <= std::min(k, dS); ++p)
      for (int q = 0; q <= std::min(k, dT); ++q) {
        if (p + q < k) continue;
        auto das = subsets(k, k - p);
        for (auto& da : das) {
          Word rest;
          for (int j = 0; j < k; ++j)
            if (std::find(da.begin(), da.end(), j) == da.end()) rest.push_back(j);
          for (auto& pick : subsets(static_cast<int>(rest.size()), k - q)) {
            Word db;
            for (int x : pick) db.push_back(rest[x]);
            Word sa = surjection_from_repeats(k, da), sb = surjection_from_repeats(k, db);
            for (int a = 0; a < S.count(p); ++a)
              for (int b = 0; b < T.count(q); ++b) cells[k].push_back({Simplex{sa, a}, Simplex{sb, b}});
          }
        }
      }
    auto key = [&](const Pair& pr) {
      std::vector<Word> ks;
      if (keyed) {
        Word va = S.vertices(pr.first), vb = T.vertices(pr.second);
        for (size_t j = 0; j < va.size(); ++j) {
          Word kk = S.vertex_keys[va[j]];
          kk.insert(kk.end(), T.vertex_keys[vb[j]].begin(), T.vertex_keys[vb[j]].end());
          ks.push_back(kk);
        }
      }
      return ks;
    };
    if (keyed)
      std::stable_sort(cells[k].begin(), cells[k].end(), [&](const Pair& a, const Pair& b) { return key(a) < key(b); });
  }
  std::vector<std::map<Pair, int>> ids(top + 1);
  for (int k = 0; k <= top; ++k)
    for (size_t x = 0; x < cells[k].size(); ++x) ids[k][cells[k][x]] = static_cast<int>(x);
  out->labels.resize(top + 1);
  out->faces.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (auto& pr : cells[k]) {
      if (keyed) {
        Word va = S.vertices(pr.first), vb = T.vertices(pr.second);
        std::string lab = "(";
        for (size_t j = 0; j < va.size(); ++j) {
          Word kk = S.vertex_keys[va[j]];
          kk.insert(kk.end(), T.vertex_keys[vb[j]].begin(), T.vertex_keys[vb[j]].end());
          lab += (j ? "," : "") + key_text(kk);
        }
        out->labels[k].push_back(lab + ")");
      } else {
        out->labels[k].push_back("[" + S.label_of(pr.first) + "|" + T.label_of(pr.second) + "]");
      }
      std::vector<Simplex> fs;
      for (int i = 0; k > 0 && i <= k; ++i) {
        Simplex x = S.face_of(pr.first, i), y = T.face_of(pr.second, i);
        auto rx = repeats(x.sigma), ry = repeats(y.sigma);
        std::vector<int> common;
        std::set_intersection(rx.begin(), rx.end(), ry.begin(), ry.end(), std::back_inserter(common));
        Word keep;
        for (int j = 0; j <= k - 1; ++j)
          if (std::find(common.begin(), common.end(), j - 1) == common.end()) keep.push_back(j);
        Simplex x2 = S.apply(keep, x), y2 = T.apply(keep, y);
        int d = k - 1 - static_cast<int>(common.size());
        fs.push_back(Simplex{surjection_from_repeats(k - 1, common), ids[d].at({x2, y2})});
      }
      out->faces[k].push_back(fs);
    }
  }
  if (top >= 0) {
    for (auto& pr : cells[0]) {
      Word kk = keyed ? S.vertex_keys[pr.first.base] : Word{pr.first.base};
      const Word& kt = keyed ? T.vertex_keys[pr.second.base] : Word{pr.second.base};
      if (!keyed) kk.push_back(pr.second.base);
      else kk.insert(kk.end(), kt.begin(), kt.end());
      out->vertex_keys.push_back(kk);
    }
  }
  out->finalize();
  return out;
}

SSet join(const SSet& sp, const SSet& tp) {
  const auto& S = *sp;
  const auto& T = *tp;
  auto out = std::make_shared<FiniteSimplicialSet>();
  int dS = S.max_dim(), dT = T.max_dim();
  int top;
  if (S.complete && T.complete) {
    top = std::max({dS, dT, dS + dT + 1});
    out->complete = true;
    out->trunc_dim = top;
  } else {
    top = std::min(eff_trunc(S), eff_trunc(T));
    out->complete = false;
    out->trunc_dim = top;
  }
  // cell kinds: 0 = left, 1 = right, 2 = pair
  struct Cell {
    int kind, a, b, p;
  };
  std::vector<std::vector<Cell>> cells(top + 1);
  std::vector<std::map<std::tuple<int, int, int>, int>> ids(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (int a = 0; a < S.count(k); ++a) cells[k].push_back({0, a, -1, k});
    for (int b = 0; b < T.count(k); ++b) cells[k].push_back({1, -1, b, -1});
    for (int p = 0; p <= k - 1; ++p) {
      int q = k - 1 - p;
      for (int a = 0; a < S.count(p); ++a)
        for (int b = 0; b < T.count(q); ++b) cells[k].push_back({2, a, b, p});
    }
    for (size_t x = 0; x < cells[k].size(); ++x) {
      auto& c = cells[k][x];
      ids[k][{c.kind, c.a, c.b}] = static_cast<int>(x);
    }
  }
  auto left_key = [&](int v) {
    Word k{0};
    if (!S.vertex_keys.empty()) k.insert(k.end(), S.vertex_keys[v].begin(), S.vertex_keys[v].end());
    else k.push_back(v);
    return k;
  };
  auto right_key = [&](int v) {
    Word k{1};
    if (!T.vertex_keys.empty()) k.insert(k.end(), T.vertex_keys[v].begin(), T.vertex_keys[v].end());
    else k.push_back(v);
    return k;
  };
  out->labels.resize(top + 1);
  out->faces.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (auto& c : cells[k]) {
      std::vector<Simplex> fs;
      std::vector<Word> keys;
      if (c.kind == 0) {
        for (int v : S.vertices(k, c.a)) keys.push_back(left_key(v));
        for (int i = 0; k > 0 && i <= k; ++i) {
          Simplex f = S.face(k, c.a, i);
          fs.push_back(Simplex{f.sigma, ids[f.bdim()].at({0, f.base, -1})});
        }
      } else if (c.kind == 1) {
        for (int v : T.vertices(k, c.b)) keys.push_back(right_key(v));
        for (int i = 0; k > 0 && i <= k; ++i) {
          Simplex f = T.face(k, c.b, i);
          fs.push_back(Simplex{f.sigma, ids[f.bdim()].at({1, -1, f.base})});
        }
      } else {
        int p = c.p, q = k - 1 - p;
        for (int v : S.vertices(p, c.a)) keys.push_back(left_key(v));
        for (int v : T.vertices(q, c.b)) keys.push_back(right_key(v));
        for (int i = 0; i <= k; ++i) {
          if (i <= p) {
            if (p == 0) {
              fs.push_back(Simplex{identity_word(q), ids[q].at({1, -1, c.b})});
              continue;
            }
            Simplex f = S.face(p, c.a, i);
            int pb = f.bdim();
            Word sig = f.sigma;
            for (int j = 0; j <= q; ++j) sig.push_back(pb + 1 + j);
            fs.push_back(Simplex{sig, ids[pb + q + 1].at({2, f.base, c.b})});
          } else {
            int j = i - p - 1;
            if (q == 0) {
              fs.push_back(Simplex{identity_word(p), ids[p].at({0, c.a, -1})});
              continue;
            }
            Simplex f = T.face(q, c.b, j);
            Word sig = identity_word(p);
            for (int v : f.sigma) sig.push_back(p + 1 + v);
            fs.push_back(Simplex{sig, ids[p + f.bdim() + 1].at({2, c.a, f.base})});
          }
        }
      }
      std::string lab = "(";
      for (size_t j = 0; j < keys.size(); ++j) lab += (j ? "," : "") + key_text(keys[j]);
      out->labels[k].push_back(lab + ")");
      out->faces[k].push_back(fs);
    }
  }
  if (top >= 0)
    for (auto& c : cells[0]) out->vertex_keys.push_back(c.kind == 0 ? left_key(c.a) : right_key(c.b));
  out->finalize();
  return out;
}

static Subcomplex by_vertex_predicate(const SSet& amb, const std::function<bool(const std::set<int>&)>& keep) {
  Subcomplex s = empty_subcomplex(amb);
  for (int n = 0; n < static_cast<int>(amb->labels.size()); ++n)
    for (int c = 0; c < amb->count(n); ++c) {
      std::set<int> vs;
      for (int v : amb->vertices(n, c)) vs.insert(amb->vertex_keys.empty() ? v : amb->vertex_keys[v][0]);
      s.member[n][c] = keep(vs) ? 1 : 0;
    }
  return s;
}

Subcomplex horn_in(const SSet& amb, int n, int i) {
  if (n < 1 || i < 0 || i > n) throw InvalidInput("horn index out of range");
  return by_vertex_predicate(amb, [n, i](const std::set<int>& vs) {
    for (int j = 0; j <= n; ++j)
      if (j != i && !vs.count(j)) return true;
    return false;
  });
}

Subcomplex boundary_in(const SSet& amb, int n) {
  return by_vertex_predicate(amb, [n](const std::set<int>& vs) { return static_cast<int>(vs.size()) <= n; });
}

Inclusion horn(int n, int i) { return realize(horn_in(standard_simplex(n), n, i)); }

Inclusion boundary(int n) {
  if (n < 0) throw InvalidInput("boundary of negative simplex");
  return realize(boundary_in(standard_simplex(n), n));
}

Inclusion spine(int n) {
  auto d = standard_simplex(n);
  return realize(by_vertex_predicate(d, [](const std::set<int>& vs) {
    return vs.size() == 1 || (vs.size() == 2 && *vs.rbegin() == *vs.begin() + 1);
  }));
}

Inclusion skeleton(const SSet& t, int j) {
  Subcomplex s = empty_subcomplex(t);
  for (int n = 0; n <= j && n < static_cast<int>(s.member.size()); ++n) std::fill(s.member[n].begin(), s.member[n].end(), 1);
  Inclusion inc = realize(s);
  auto sub = std::const_pointer_cast<FiniteSimplicialSet>(inc.sub);
  if (!t->complete || t->max_dim() > j) {
    sub->complete = true;
    sub->trunc_dim = std::min(j, t->max_dim());
  }
  return inc;
}

SimplicialMap map_by_vertices(const SSet& src, const SSet& tgt, const std::vector<int>& vimg) {
  if (!tgt->vertex_determined()) throw InvalidInput("target is not determined by vertices");
  SimplicialMap m{src, tgt, {}};
  m.assign.resize(src->labels.size());
  for (int n = 0; n < static_cast<int>(src->labels.size()); ++n)
    for (int c = 0; c < src->count(n); ++c) {
      Word v = src->vertices(n, c);
      for (int& x : v) x = vimg[x];
      auto s = tgt->find_by_vertices(v);
      if (!s) throw InvalidInput("no simplex with vertices of " + src->labels[n][c] + " in target");
      m.assign[n].push_back(*s);
    }
  return m;
}

SimplicialMap map_by_keys(const SSet& src, const SSet& tgt, const std::function<Word(const Word&)>& key_image) {
  std::vector<int> vimg;
  for (int v = 0; v < src->count(0); ++v) {
    auto t = tgt->find_vertex(key_image(src->vertex_keys.at(v)));
    if (!t) throw InvalidInput("vertex image not found");
    vimg.push_back(*t);
  }
  return map_by_vertices(src, tgt, vimg);
}

SimplicialMap identity_map(const SSet& s) {
  SimplicialMap m{s, s, {}};
  m.assign.resize(s->labels.size());
  for (int n = 0; n < static_cast<int>(s->labels.size()); ++n)
    for (int c = 0; c < s->count(n); ++c) m.assign[n].push_back(Simplex::cell(n, c));
  return m;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap m{f.source, g.target, {}};
  m.assign.resize(f.assign.size());
  for (size_t n = 0; n < f.assign.size(); ++n)
    for (auto& s : f.assign[n]) m.assign[n].push_back(g.image(s));
  return m;
}

SSet pushout_attach(const SSet& tp, const SimplicialMap& h, int n, int i) {
  std::string why;
  if (!h.valid(&why)) throw InvalidInput("attaching map rejected: " + why);
  if (h.target != tp && h.target->total_cells() != tp->total_cells()) throw InvalidInput("attaching map lands elsewhere");
  const auto& src = *h.source;
  auto out = std::make_shared<FiniteSimplicialSet>(*tp);
  if (static_cast<int>(out->labels.size()) < n + 1) {
    out->labels.resize(n + 1);
    out->faces.resize(n + 1);
  }
  auto src_face = [&](int j) {
    Word verts;
    for (int v = 0; v <= n; ++v)
      if (v != j) verts.push_back(*src.find_vertex({v}));
    auto s = src.find_by_vertices(verts);
    if (!s) throw InvalidInput("attaching source lacks face " + std::to_string(j));
    return h.image(*s);
  };
  std::vector<Simplex> xf(n + 1);
  int yid = -1;
  if (i >= 0) {
    yid = out->count(n - 1);
    out->labels[n - 1].push_back("y" + std::to_string(n - 1) + "_" + std::to_string(yid));
    out->faces[n - 1].emplace_back();
  }
  for (int j = 0; j <= n; ++j) xf[j] = j == i ? Simplex::cell(n - 1, yid) : src_face(j);
  if (i >= 0 && n >= 2) {
    std::vector<Simplex> yf(n);
    for (int j = 0; j < n; ++j)
      yf[j] = j < i ? tp->face_of(xf[j], i - 1) : tp->face_of(xf[j + 1], i);
    out->faces[n - 1].back() = yf;
  }
  if (i >= 0 && n == 1 && !out->vertex_keys.empty()) {
    int mx = 0;
    for (auto& k : out->vertex_keys) mx = std::max(mx, k.empty() ? 0 : k[0]);
    out->vertex_keys.push_back(Word(out->vertex_keys[0].size(), mx + 1));
  }
  out->labels[n].push_back("x" + std::to_string(n) + "_" + std::to_string(out->count(n)));
  out->faces[n].push_back(xf);
  out->trunc_dim = std::max(out->trunc_dim, n);
  out->finalize();
  return out;
}

bool isomorphic_counts(const SSet& a, const SSet& b) { return a->counts() == b->counts(); }

bool check_simplicial_identities(const FiniteSimplicialSet& t, std::string* why) {
  for (int n = 2; n < static_cast<int>(t.labels.size()); ++n)
    for (int c = 0; c < t.count(n); ++c)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          if (t.face_of(t.face(n, c, j), i) != t.face_of(t.face(n, c, i), j - 1)) {
            if (why) *why = "d" + std::to_string(i) + "d" + std::to_string(j) + " fails on " + t.labels[n][c];
            return false;
          }
        }
  return true;
}

}  // namespace simploid
