#include "simploid/expansion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace simploid {

namespace {

const Inclusion& cached_horn(int n, int i) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Inclusion> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, i});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, i), horn(n, i)).first;
  return it->second;
}

struct Builder {
  SSet t;
  Subcomplex f;
  std::vector<ExpansionStep> steps;
  bool inner = false;
  int m = 1;

  bool present(const Simplex& s) const { return f.contains(s.bdim(), s.base); }

  bool can_attach(int n, int x, int i) const {
    if (n < std::max(m, 1) || i < 0 || i > n) return false;
    if (inner && (i == 0 || i == n)) return false;
    if (f.contains(n, x)) return false;
    for (int j = 0; j <= n; ++j) {
      const Simplex& s = t->face(n, x, j);
      if (j == i) {
        if (!s.nondegenerate() || present(s)) return false;
      } else if (!present(s)) {
        return false;
      }
    }
    return true;
  }

  bool attach(int n, int x, int i) {
    if (!can_attach(n, x, i)) return false;
    steps.push_back(make_step(t, n, x, i));
    f.member[n][x] = 1;
    f.member[n - 1][t->face(n, x, i).base] = 1;
    return true;
  }

  void attach_or_throw(int n, int x, int i) {
    if (!attach(n, x, i))
      throw std::logic_error("cannot attach " + t->labels[n][x] + " along face " + std::to_string(i));
  }

  // the single missing face of x, or -1
  int unique_missing(int n, int x) const {
    int miss = -1;
    for (int j = 0; j <= n; ++j)
      if (!present(t->face(n, x, j))) {
        if (miss >= 0) return -2;
        miss = j;
      }
    return miss;
  }

  // Lemma proper recursion: attach all missing faces but one, then x along
  // the remaining one; other choices are tried when that fails
  bool ensure(int n, int x) {
    if (f.contains(n, x)) return true;
    if (n == 0) return false;
    for (int j = 0; j <= n; ++j) {
      const Simplex& s = t->face(n, x, j);
      if (!s.nondegenerate() && !present(s) && !ensure(s.bdim(), s.base)) return false;
    }
    std::vector<int> missing;
    for (int j = 0; j <= n; ++j)
      if (!present(t->face(n, x, j))) missing.push_back(j);
    if (missing.empty()) return false;
    std::vector<int> choices(missing.rbegin(), missing.rend());
    for (int free_face : choices) {
      if (inner && (free_face == 0 || free_face == n)) continue;
      Subcomplex saved = f;
      size_t nsteps = steps.size();
      bool ok = true;
      for (int j : missing) {
        if (j == free_face) continue;
        const Simplex& s = t->face(n, x, j);
        if (!ensure(s.bdim(), s.base)) {
          ok = false;
          break;
        }
      }
      if (ok && attach(n, x, free_face)) return true;
      f = saved;
      steps.resize(nsteps);
    }
    return false;
  }

  ExpansionCertificate finish(const Subcomplex& base, int complete_to_dim) {
    ExpansionCertificate c;
    c.ambient = t;
    c.base = base;
    c.m = m;
    c.inner = inner;
    c.complete_to_dim = complete_to_dim;
    c.steps = std::move(steps);
    sort_steps(c);
    return c;
  }
};

Builder builder(const Subcomplex& base, int m, bool inner) {
  Builder b;
  b.t = base.ambient;
  b.f = base;
  b.m = m;
  b.inner = inner;
  return b;
}

std::vector<Word> key_sequence(const FiniteSimplicialSet& t, int n, int c) {
  std::vector<Word> ks;
  for (int v : t.vertices(n, c)) ks.push_back(t.vertex_keys[v]);
  return ks;
}

int cell_by_keys(const FiniteSimplicialSet& t, const std::vector<Word>& keys) {
  Word verts;
  for (auto& k : keys) {
    auto v = t.find_vertex(k);
    if (!v) throw InvalidInput("vertex key not found");
    verts.push_back(*v);
  }
  auto s = t.find_by_vertices(verts);
  if (!s || !s->nondegenerate()) throw InvalidInput("no nondegenerate simplex with these vertices");
  return s->base;
}

int cell_by_word(const FiniteSimplicialSet& t, const Word& w) {
  std::vector<Word> keys;
  for (int v : w) keys.push_back({v});
  return cell_by_keys(t, keys);
}

void adjacent_distinct(int len, int alphabet, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < alphabet; ++v) {
    if (!cur.empty() && cur.back() == v) continue;
    cur.push_back(v);
    adjacent_distinct(len, alphabet, cur, out);
    cur.pop_back();
  }
}

std::vector<Word> nondegenerate_words(int k, int n) {
  std::vector<Word> out;
  Word cur;
  adjacent_distinct(k + 1, n + 1, cur, out);
  return out;
}

}  // namespace

SimplicialMap horn_restriction(const SSet& ambient, int n, int x, int i) {
  const Inclusion& h = cached_horn(n, i);
  SimplicialMap m{h.sub, ambient, {}};
  m.assign.resize(h.sub->labels.size());
  for (int d = 0; d < static_cast<int>(h.sub->labels.size()); ++d)
    for (int c = 0; c < h.sub->count(d); ++c) {
      Word img;
      for (int v : h.sub->vertices(d, c)) img.push_back(h.sub->vertex_keys[v][0]);
      m.assign[d].push_back(ambient->face_along(n, x, img));
    }
  return m;
}

ExpansionStep make_step(const SSet& ambient, int n, int x, int i) {
  return ExpansionStep{n, i, x, horn_restriction(ambient, n, x, i)};
}

void sort_steps(ExpansionCertificate& c) {
  std::stable_sort(c.steps.begin(), c.steps.end(),
                   [](const ExpansionStep& a, const ExpansionStep& b) { return a.n < b.n; });
}

VerifyReport verify_certificate(const ExpansionCertificate& c, bool replay) {
  VerifyReport r;
  const auto& t = *c.ambient;
  auto fail = [&](const std::string& e) {
    r.valid = false;
    r.error = e;
    return r;
  };
  if (c.base.ambient != c.ambient) return fail("base is not a subcomplex of the ambient set");
  if (!is_closed(c.base)) return fail("base is not closed under faces");
  Subcomplex f = c.base;
  int target = c.complete_to_dim >= 0 ? c.complete_to_dim : t.max_dim();
  int prev = -1;
  Inclusion cur;
  SSet cset;
  std::vector<std::vector<int>> phi;  // replay cell -> ambient cell
  if (replay) {
    cur = realize(c.base);
    cset = cur.sub;
    phi = cur.to_ambient;
  }
  for (size_t k = 0; k < c.steps.size(); ++k) {
    const auto& s = c.steps[k];
    std::string tag = "step " + std::to_string(k) + " invalid: ";
    if (s.n < 1 || s.cell < 0 || s.cell >= t.count(s.n)) return fail(tag + "no such cell");
    if (s.i < 0 || s.i > s.n) return fail(tag + "horn index out of range");
    if (s.n < c.m) return fail(tag + "dimension below the declared grade");
    if (c.inner && (s.i == 0 || s.i == s.n)) return fail(tag + "outer horn in an inner certificate");
    if (s.n < prev) return fail(tag + "dimensions are not weakly monotone");
    prev = s.n;
    if (f.contains(s.n, s.cell)) return fail(tag + "cell already present");
    std::string why;
    if (!s.attaching.valid(&why)) return fail(tag + "attaching map rejected: " + why);
    if (s.attaching.source->counts() != cached_horn(s.n, s.i).sub->counts())
      return fail(tag + "attaching map is not defined on the horn");
    SimplicialMap expect = horn_restriction(c.ambient, s.n, s.cell, s.i);
    if (expect.assign != s.attaching.assign) return fail(tag + "attaching map is not the restriction of the cell");
    for (auto& lv : s.attaching.assign)
      for (auto& img : lv)
        if (!f.contains(img)) return fail(tag + "attaching map leaves the current complex");
    const Simplex& y = t.face(s.n, s.cell, s.i);
    if (!y.nondegenerate()) return fail(tag + "free face is degenerate");
    if (f.contains(y)) return fail(tag + "face already present");
    f.member[s.n][s.cell] = 1;
    f.member[s.n - 1][y.base] = 1;
    if (replay) {
      std::vector<std::vector<int>> inv(t.labels.size());
      for (size_t d = 0; d < t.labels.size(); ++d) inv[d].assign(t.count(static_cast<int>(d)), -1);
      for (size_t d = 0; d < phi.size(); ++d)
        for (size_t q = 0; q < phi[d].size(); ++q) inv[d][phi[d][q]] = static_cast<int>(q);
      SimplicialMap h{s.attaching.source, cset, s.attaching.assign};
      for (auto& lv : h.assign)
        for (auto& img : lv) img.base = inv[img.bdim()][img.base];
      SSet next = pushout_attach(cset, h, s.n, s.i);
      phi.resize(next->labels.size());
      phi[s.n - 1].push_back(y.base);
      phi[s.n].push_back(s.cell);
      for (int d : {s.n - 1, s.n}) {
        int q = next->count(d) - 1;
        for (int j = 0; d > 0 && j <= d; ++j) {
          Simplex a = next->face(d, q, j);
          a.base = phi[a.bdim()][a.base];
          if (a != t.face(d, phi[d][q], j)) return fail(tag + "replayed pushout disagrees with the ambient faces");
        }
      }
      cset = next;
    }
    r.attached_count++;
    r.max_dim = std::max(r.max_dim, s.n);
  }
  for (int n = 0; n <= target && n < static_cast<int>(t.labels.size()); ++n)
    for (int x = 0; x < t.count(n); ++x)
      if (!f.contains(n, x)) return fail("coverage incomplete: " + t.labels[n][x] + " never attached");
  if (replay && t.complete && target >= t.max_dim()) {
    if (cset->counts() != t.counts()) return fail("replayed complex differs from the ambient set");
  }
  r.valid = true;
  return r;
}

ExpansionCertificate compose_certificates(const ExpansionCertificate& a, const ExpansionCertificate& b) {
  if (a.ambient != b.ambient) throw InvalidInput("certificates live in different ambient sets");
  Subcomplex mid = a.base;
  for (auto& s : a.steps) {
    mid.member[s.n][s.cell] = 1;
    mid.member[s.n - 1][a.ambient->face(s.n, s.cell, s.i).base] = 1;
  }
  if (mid.member != b.base.member) throw InvalidInput("second certificate does not start where the first ends");
  ExpansionCertificate c = a;
  c.m = std::min(a.m, b.m);
  c.inner = a.inner && b.inner;
  c.complete_to_dim = b.complete_to_dim;
  c.steps.insert(c.steps.end(), b.steps.begin(), b.steps.end());
  sort_steps(c);
  return c;
}

ExpansionCertificate transport(const ExpansionCertificate& c, const SimplicialMap& g, const Subcomplex& new_base) {
  ExpansionCertificate out;
  out.ambient = g.target;
  out.base = new_base;
  out.m = c.m;
  out.inner = c.inner;
  out.complete_to_dim = c.complete_to_dim;
  for (auto& s : c.steps) {
    const Simplex& x = g.assign[s.n][s.cell];
    if (!x.nondegenerate()) throw InvalidInput("transported cell collapses");
    out.steps.push_back(ExpansionStep{s.n, s.i, x.base, compose(g, s.attaching)});
  }
  return out;
}

Subcomplex subcomplex_by_keys(const SSet& amb, const std::function<bool(const std::vector<Word>&)>& keep) {
  Subcomplex s = empty_subcomplex(amb);
  for (int n = 0; n < static_cast<int>(amb->labels.size()); ++n)
    for (int c = 0; c < amb->count(n); ++c) s.member[n][c] = keep(key_sequence(*amb, n, c)) ? 1 : 0;
  return s;
}

Subcomplex increasing_in(const SSet& thick) {
  return subcomplex_by_keys(thick, [](const std::vector<Word>& ks) {
    for (size_t j = 0; j + 1 < ks.size(); ++j)
      if (!(ks[j] < ks[j + 1])) return false;
    return true;
  });
}

Subcomplex spine_in(const SSet& amb) {
  return subcomplex_by_keys(amb, [](const std::vector<Word>& ks) {
    std::set<int> vs;
    for (auto& k : ks) vs.insert(k[0]);
    return vs.size() == 1 || (vs.size() == 2 && *vs.rbegin() == *vs.begin() + 1);
  });
}

static bool misses_other_than(const std::set<int>& vs, int n, int i) {
  for (int k = 0; k <= n; ++k)
    if (k != i && !vs.count(k)) return true;
  return false;
}

Subcomplex prism_horn_in(const SSet& prism, int m, int n, int i) {
  return subcomplex_by_keys(prism, [=](const std::vector<Word>& ks) {
    std::set<int> as, bs;
    for (auto& k : ks) {
      as.insert(k[0]);
      bs.insert(k[1]);
    }
    return misses_other_than(as, m, i) || static_cast<int>(bs.size()) <= n;
  });
}

Subcomplex prism_horn_tilde_in(const SSet& prism, int m, int n, int j) {
  return subcomplex_by_keys(prism, [=](const std::vector<Word>& ks) {
    std::set<int> as, bs;
    for (auto& k : ks) {
      as.insert(k[0]);
      bs.insert(k[1]);
    }
    return static_cast<int>(as.size()) <= m || misses_other_than(bs, n, j);
  });
}

int Shuffle::b(int i) const {
  int s = 0;
  for (int j = 1; j <= static_cast<int>(a.size()); ++j) s += j <= i ? a[j - 1] : -a[j - 1];
  return s;
}

Word Shuffle::vertices(int n) const {
  Word out{0, 0};
  int p = 0, q = 0, prev = 0;
  for (int aj : a) {
    for (; q < aj; ++q) out.insert(out.end(), {p, q + 1});
    ++p;
    out.insert(out.end(), {p, q});
    prev = aj;
  }
  (void)prev;
  for (; q < n; ++q) out.insert(out.end(), {p, q + 1});
  return out;
}

std::vector<Shuffle> shuffles(int m, int n) {
  std::vector<Shuffle> out;
  Word a(m, 0);
  std::function<void(int, int)> rec = [&](int j, int lo) {
    if (j == m) {
      out.push_back(Shuffle{a});
      return;
    }
    for (int v = lo; v <= n; ++v) {
      a[j] = v;
      rec(j + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

ExpansionCertificate cert_union_of_faces(int n, const std::vector<int>& faces) {
  std::set<int> fs(faces.begin(), faces.end());
  if (fs.empty() || static_cast<int>(fs.size()) > n) throw InvalidInput("need between 1 and n faces");
  for (int j : fs)
    if (j < 0 || j > n) throw InvalidInput("face index out of range");
  auto t = standard_simplex(n);
  std::vector<std::pair<int, int>> cells;
  for (int j : fs) {
    Word w;
    for (int v = 0; v <= n; ++v)
      if (v != j) w.push_back(v);
    cells.push_back({n - 1, cell_by_word(*t, w)});
  }
  Subcomplex base = closure(t, cells);
  Builder b = builder(base, static_cast<int>(fs.size()), false);
  if (!b.ensure(n, 0)) throw std::logic_error("face recursion failed");
  return b.finish(base, n);
}

ExpansionCertificate cert_prism_horn(int m, int n, int i, bool inner) {
  if (m < 1 || n < 0 || i < 0 || i > m) throw InvalidInput("prism horn needs m >= 1 and 0 <= i <= m");
  if (inner && (i == 0 || i == m)) throw InvalidInput("inner prism horn needs 0 < i < m");
  auto p = product(standard_simplex(m), standard_simplex(n));
  Subcomplex base = prism_horn_in(p, m, n, i);
  auto sh = shuffles(m, n);
  std::stable_sort(sh.begin(), sh.end(), [i](const Shuffle& x, const Shuffle& y) {
    if (x.b(i) != y.b(i)) return x.b(i) < y.b(i);
    return x.a < y.a;
  });
  Builder b = builder(base, m, inner);
  for (auto& s : sh) {
    Word v = s.vertices(n);
    std::vector<Word> keys;
    for (size_t q = 0; q < v.size(); q += 2) keys.push_back({v[q], v[q + 1]});
    int cell = cell_by_keys(*p, keys);
    if (!b.ensure(m + n, cell)) throw std::logic_error("shuffle simplex could not be attached");
  }
  return b.finish(base, m + n);
}

ExpansionCertificate cert_prism_horn_tilde(int m, int n, int j, bool inner) {
  ExpansionCertificate c = cert_prism_horn(n, m, j, inner);
  auto p = product(standard_simplex(m), standard_simplex(n));
  auto g = map_by_keys(c.ambient, p, [](const Word& k) { return Word{k[1], k[0]}; });
  auto out = transport(c, g, prism_horn_tilde_in(p, m, n, j));
  out.complete_to_dim = m + n;
  return out;
}

ExpansionCertificate cert_product_with_pair(const Inclusion& st, int m, int i, int side, bool inner) {
  const auto& T = st.ambient;
  if (T->vertex_keys.empty() || !T->vertex_determined()) throw InvalidInput("pair must be vertex determined");
  Subcomplex S = st.as_subcomplex();
  auto dm = standard_simplex(m);
  auto a = product(dm, T);
  size_t tk = T->vertex_keys[0].size();
  auto t_cell = [&](const std::vector<Word>& ks) {
    Word verts;
    for (auto& k : ks) verts.push_back(*T->find_vertex(Word(k.begin() + 1, k.end())));
    return *T->find_by_vertices(verts);
  };
  Subcomplex base = subcomplex_by_keys(a, [&](const std::vector<Word>& ks) {
    std::set<int> as;
    for (auto& k : ks) as.insert(k[0]);
    return S.contains(t_cell(ks)) || misses_other_than(as, m, i);
  });
  ExpansionCertificate out;
  out.ambient = a;
  out.base = base;
  out.m = m;
  out.inner = inner;
  out.complete_to_dim = a->max_dim();
  std::map<int, ExpansionCertificate> moore;
  for (int l = 0; l <= T->max_dim(); ++l)
    for (int tau = 0; tau < T->count(l); ++tau) {
      if (S.contains(l, tau)) continue;
      if (!moore.count(l)) moore.emplace(l, cert_prism_horn(m, l, i, inner));
      const auto& mc = moore.at(l);
      Word tv = T->vertices(l, tau);
      auto g = map_by_keys(mc.ambient, a, [&](const Word& k) {
        Word r{k[0]};
        const Word& key = T->vertex_keys[tv[k[1]]];
        r.insert(r.end(), key.begin(), key.end());
        return r;
      });
      auto moved = transport(mc, g, base);
      out.steps.insert(out.steps.end(), moved.steps.begin(), moved.steps.end());
    }
  sort_steps(out);
  if (side == 0) return out;
  auto swapped = product(T, dm);
  auto g = map_by_keys(a, swapped, [tk](const Word& k) {
    Word r(k.begin() + 1, k.end());
    r.push_back(k[0]);
    (void)tk;
    return r;
  });
  Subcomplex nb = empty_subcomplex(swapped);
  for (size_t n = 0; n < base.member.size(); ++n)
    for (size_t c = 0; c < base.member[n].size(); ++c)
      if (base.member[n][c]) nb.member[n][g.assign[n][c].base] = 1;
  return transport(out, g, nb);
}

std::vector<std::pair<std::pair<int, int>, std::vector<Word>>> thick_inner_horn_batches(int n, int i, int trunc) {
  if (!(0 < i && i < n)) throw InvalidInput("inner horn needs 0 < i < n");
  auto t = thick_simplex(n, trunc);
  Subcomplex base = unite(horn_in(t, n, i), increasing_in(t));
  std::vector<std::pair<std::pair<int, int>, std::vector<Word>>> out;
  for (int k = 2; k <= trunc; ++k)
    for (int m = k - i - 1; m >= 0; --m) {
      std::vector<Word> q;
      for (auto& w : nondegenerate_words(k, n)) {
        if (base.contains(k, cell_by_word(*t, w))) continue;
        bool ok = w[i + m] == i && w[i + m - 1] != w[i + m + 1];
        for (int j = i; ok && j < i + m; ++j) ok = w[j - 1] == w[j + 1];
        if (ok) q.push_back(w);
      }
      out.push_back({{k, m}, q});
    }
  return out;
}

ExpansionCertificate cert_thick_inner_horn(int n, int i, int trunc) {
  auto batches = thick_inner_horn_batches(n, i, trunc);
  auto t = thick_simplex(n, trunc);
  Subcomplex base = unite(horn_in(t, n, i), increasing_in(t));
  Builder b = builder(base, n, true);
  for (auto& [km, words] : batches)
    for (auto& w : words) b.attach_or_throw(km.first, cell_by_word(*t, w), i + km.second);
  return b.finish(base, trunc - 1);
}

ExpansionCertificate cert_thickify_inner(const ExpansionCertificate& c, int trunc) {
  if (!c.inner) throw InvalidInput("thickification needs an inner certificate");
  const auto& T = c.ambient;
  auto tt = thickify(T, trunc);
  Subcomplex base = subcomplex_by_keys(tt, [&](const std::vector<Word>& ks) {
    std::vector<Word> vs(ks.begin(), ks.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    int d = static_cast<int>(vs.size()) - 1;
    int tcell = cell_by_keys(*T, vs);
    if (c.base.contains(d, tcell)) return true;
    return ks == vs;
  });
  Builder b = builder(base, c.m, true);
  std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, std::vector<Word>>>> cache;
  for (auto& s : c.steps) {
    auto key = std::make_pair(s.n, s.i);
    if (!cache.count(key)) cache[key] = thick_inner_horn_batches(s.n, s.i, trunc);
    Word xv = T->vertices(s.n, s.cell);
    for (auto& [km, words] : cache[key])
      for (auto& w : words) {
        std::vector<Word> keys;
        for (int v : w) keys.push_back(T->vertex_keys[xv[v]]);
        b.attach_or_throw(km.first, cell_by_keys(*tt, keys), s.i + km.second);
      }
  }
  return b.finish(base, trunc - 1);
}

ExpansionCertificate cert_thick_horn(int n, int i, int trunc) {
  if (n < 2 || i < 0 || i > n) throw InvalidInput("thick horn needs n > 1 and 0 <= i <= n");
  if (trunc < n) throw InvalidInput("truncation below the horn dimension");
  auto t = thick_simplex(n, trunc);
  Subcomplex base1 = horn_in(t, n, 1);
  Builder b = builder(base1, n, true);
  b.attach_or_throw(n, cell_by_word(*t, identity_word(n)), 1);
  for (auto& [km, words] : thick_inner_horn_batches(n, 1, trunc))
    for (auto& w : words) b.attach_or_throw(km.first, cell_by_word(*t, w), 1 + km.second);
  ExpansionCertificate c = b.finish(base1, trunc - 1);
  if (i == 1) return c;
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[1], perm[i]);
  std::vector<int> vimg(n + 1);
  for (int v = 0; v <= n; ++v) vimg[v] = *t->find_vertex({perm[t->vertex_keys[v][0]]});
  auto g = map_by_vertices(t, t, vimg);
  return transport(c, g, horn_in(t, n, i));
}

ExpansionCertificate cert_cylinder(int n, int trunc) {
  if (n < 0 || trunc < n + 1) throw InvalidInput("cylinder needs trunc > n");
  auto a = product(standard_simplex(n), thick_simplex(1, trunc));
  Subcomplex base = subcomplex_by_keys(a, [n](const std::vector<Word>& ks) {
    std::set<int> as;
    bool zero = true;
    for (auto& k : ks) {
      as.insert(k[0]);
      zero = zero && k[1] == 0;
    }
    return static_cast<int>(as.size()) <= n || zero;
  });
  Builder b = builder(base, 1, n > 0);
  auto alt = [](int len, int first) {
    Word w(len);
    for (int j = 0; j < len; ++j) w[j] = (first + j) % 2;
    return w;
  };
  auto attach_auto = [&](const std::vector<Word>& keys) {
    int k = static_cast<int>(keys.size()) - 1;
    int cell = cell_by_keys(*a, keys);
    if (b.f.contains(k, cell)) return;
    int miss = b.unique_missing(k, cell);
    if (miss < 0) throw std::logic_error("cylinder cell " + a->labels[k][cell] + " has no unique free face");
    b.attach_or_throw(k, cell, miss);
  };
  if (n == 0) {
    for (int k = 1; k <= trunc; ++k) {
      std::vector<Word> keys;
      for (int e : alt(k + 1, 0)) keys.push_back({0, e});
      attach_auto(keys);
    }
    return b.finish(base, trunc - 1);
  }
  // blocks: lengths of sigma_0..sigma_n, each a nonempty alternating word
  for (int k = n; k <= trunc; ++k)
    for (int l = 0; l <= n; ++l)
      for (int mm = 1; mm <= k - n; ++mm) {
        std::vector<std::vector<Word>> found;
        int fixed_len = l < n ? (n - l) + (mm + 1) : mm + 1;
        int free_blocks = l < n ? l : n;
        int rest = k + 1 - fixed_len;
        if (rest < free_blocks) continue;
        std::vector<int> lens(free_blocks, 1);
        std::function<void(int, int)> rec = [&](int j, int left) {
          if (j == free_blocks) {
            if (left != 0) return;
            // each free block is an alternating word starting at 0 or 1
            int combos = 1 << free_blocks;
            for (int mask = 0; mask < combos; ++mask) {
              std::vector<Word> keys;
              int p = 0;
              if (l < n) {
                for (; p < n - l; ++p) keys.push_back({p, 0});
                for (int e : alt(mm + 1, 0)) keys.push_back({p, e});
                ++p;
              } else {
                for (int e : alt(mm + 1, mm % 2)) keys.push_back({p, e});
                ++p;
              }
              for (int q = 0; q < free_blocks; ++q, ++p)
                for (int e : alt(lens[q], (mask >> q) & 1)) keys.push_back({p, e});
              found.push_back(keys);
            }
            return;
          }
          for (int len = 1; len <= left - (free_blocks - j - 1); ++len) {
            lens[j] = len;
            rec(j + 1, left - len);
          }
        };
        rec(0, rest);
        std::sort(found.begin(), found.end());
        for (auto& keys : found) attach_auto(keys);
      }
  return b.finish(base, trunc - 1);
}

ExpansionCertificate cert_thick_boundary(int n, int trunc) {
  if (n < 1 || trunc < n + 1) throw InvalidInput("thick boundary needs n >= 1 and trunc > n");
  auto t = thick_simplex(n, trunc);
  Subcomplex base = unite(boundary_in(t, n), increasing_in(t));
  Builder b = builder(base, 1, false);
  for (int k = 1; k <= trunc; ++k)
    for (int m = n - 1; m >= 0; --m) {
      for (auto& w : nondegenerate_words(k, n)) {
        if (k <= m) continue;
        int cell = cell_by_word(*t, w);
        if (base.contains(k, cell)) continue;
        bool ok = true;
        for (int j = 0; ok && j <= m; ++j) ok = w[j] == j;
        std::set<int> tail(w.begin() + m + 1, w.end());
        std::set<int> want;
        for (int v = m; v <= n; ++v) want.insert(v);
        if (!ok || tail != want) continue;
        b.attach_or_throw(k, cell, m);
      }
    }
  return b.finish(base, trunc - 1);
}

ExpansionCertificate cert_spine(int n) {
  auto t = standard_simplex(n);
  Subcomplex base = spine_in(t);
  Builder b = builder(base, 1, true);
  for (int k = 2; k <= n; ++k) {
    std::vector<Word> q;
    for (int c = 0; c < t->count(k); ++c) {
      Word w = t->vertices(k, c);
      if (w[1] == w[0] + 1) q.push_back(w);
    }
    std::stable_sort(q.begin(), q.end(), [](const Word& x, const Word& y) {
      int sx = std::accumulate(x.begin(), x.end(), 0), sy = std::accumulate(y.begin(), y.end(), 0);
      if (sx != sy) return sx > sy;
      return x < y;
    });
    for (auto& w : q) b.attach_or_throw(k, cell_by_word(*t, w), 1);
  }
  return b.finish(base, n);
}

ExpansionCertificate cert_spine_thick(int n, int trunc) { return cert_thickify_inner(cert_spine(n), trunc); }

std::optional<ExpansionCertificate> search_expansion(const Subcomplex& base, bool inner, int m, long budget_ms,
                                                     int complete_to_dim) {
  const auto& t = *base.ambient;
  int target = complete_to_dim >= 0 ? complete_to_dim : t.max_dim();
  auto start = std::chrono::steady_clock::now();
  Builder b = builder(base, m, inner);
  std::unordered_set<std::string> failed;
  auto key = [&]() {
    std::string s;
    for (auto& lv : b.f.member) s.append(lv.begin(), lv.end());
    return s;
  };
  auto done = [&]() {
    for (int n = 0; n <= target && n < static_cast<int>(t.labels.size()); ++n)
      for (int x = 0; x < t.count(n); ++x)
        if (!b.f.contains(n, x)) return false;
    return true;
  };
  long calls = 0;
  std::function<bool()> dfs = [&]() -> bool {
    if (done()) return true;
    if ((++calls & 255) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      if (ms > budget_ms) throw SearchTimeout("search budget exhausted", b.steps);
    }
    std::string k = key();
    if (failed.count(k)) return false;
    for (int n = std::max(m, 1); n < static_cast<int>(t.labels.size()); ++n)
      for (int x = 0; x < t.count(n); ++x) {
        if (b.f.contains(n, x)) continue;
        int miss = b.unique_missing(n, x);
        if (miss < 0 || !b.can_attach(n, x, miss)) continue;
        b.attach(n, x, miss);
        if (dfs()) return true;
        b.steps.pop_back();
        b.f.member[n][x] = 0;
        b.f.member[n - 1][t.face(n, x, miss).base] = 0;
      }
    failed.insert(k);
    return false;
  };
  if (!dfs()) return std::nullopt;
  return b.finish(base, target);
}

std::string word_label(const FiniteSimplicialSet& t, int n, int c) { return t.labels[n][c]; }

}  // namespace simploid
