#include "simploid/io.hpp"

#include <fstream>
#include <sstream>

namespace simploid::io {

namespace {

void expect_schema(const Json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != name)
    throw InvalidInput("expected schema " + name);
}

template <class F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

Json ref_json(const Simplex& s) {
  auto r = to_ref(s);
  return Json{{"degens", r.degens}, {"base", r.base}};
}

Simplex ref_from(const Json& j, int dim, const FiniteSimplicialSet* target) {
  SimplexRef r{j.at("degens").get<std::vector<int>>(), j.at("base").get<int>()};
  auto s = from_ref(r, dim);
  if (target && (s.base < 0 || s.base >= target->count(s.bdim()))) throw InvalidInput("simplex base out of range");
  return s;
}

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (auto& q : v) a.push_back(rational_text(q));
  return a;
}

QVec qvec_from(const Json& j, size_t expect) {
  if (!j.is_array() || j.size() != expect) throw InvalidInput("coordinate vector has the wrong length");
  QVec v;
  for (auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

int int_key(const std::string& s) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (...) {
    throw InvalidInput("bad degree key " + s);
  }
  if (pos != s.size()) throw InvalidInput("bad degree key " + s);
  return v;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  out << dump(j);
}

Json sset_to_json(const FiniteSimplicialSet& t) {
  Json cells = Json::array(), faces = Json::array();
  for (int n = 0; n <= t.max_dim(); ++n) {
    Json lc = Json::array(), lf = Json::array();
    for (int c = 0; c < t.count(n); ++c) {
      lc.push_back({{"id", c}, {"label", t.labels[n][c]}});
      Json fs = Json::array();
      if (n > 0)
        for (int i = 0; i <= n; ++i) fs.push_back(ref_json(t.face(n, c, i)));
      lf.push_back(fs);
    }
    cells.push_back(lc);
    faces.push_back(lf);
  }
  Json j{{"schema", "sset.v1"}, {"trunc_dim", t.trunc_dim}, {"complete", t.complete}, {"cells", cells}, {"faces", faces}};
  if (!t.vertex_keys.empty()) j["vertex_keys"] = t.vertex_keys;
  return j;
}

SSet sset_from_json(const Json& j) {
  return guarded("sset.v1", [&] {
    expect_schema(j, "sset.v1");
    auto t = std::make_shared<FiniteSimplicialSet>();
    t->trunc_dim = j.at("trunc_dim").get<int>();
    t->complete = j.value("complete", true);
    auto& cells = j.at("cells");
    auto& faces = j.at("faces");
    if (cells.size() != faces.size()) throw InvalidInput("cells and faces disagree in length");
    size_t dims = cells.size();
    t->labels.resize(dims);
    t->faces.resize(dims);
    for (size_t n = 0; n < dims; ++n) {
      if (faces[n].size() != cells[n].size()) throw InvalidInput("face list count mismatch");
      for (size_t c = 0; c < cells[n].size(); ++c) {
        if (cells[n][c].at("id").get<size_t>() != c) throw InvalidInput("cell ids must be 0..count-1");
        t->labels[n].push_back(cells[n][c].at("label").get<std::string>());
      }
    }
    for (size_t n = 0; n < dims; ++n) {
      t->faces[n].resize(cells[n].size());
      for (size_t c = 0; c < cells[n].size(); ++c) {
        auto& fl = faces[n][c];
        if (fl.size() != (n == 0 ? 0 : n + 1)) throw InvalidInput("wrong number of faces");
        for (auto& f : fl) t->faces[n][c].push_back(ref_from(f, static_cast<int>(n) - 1, t.get()));
      }
    }
    if (j.contains("vertex_keys")) {
      t->vertex_keys = j.at("vertex_keys").get<std::vector<Word>>();
      if (t->vertex_keys.size() != static_cast<size_t>(t->count(0))) throw InvalidInput("vertex_keys count mismatch");
    }
    t->finalize();
    std::string why;
    if (!check_simplicial_identities(*t, &why)) throw InvalidInput("simplicial identities fail: " + why);
    return SSet(t);
  });
}

Json smap_to_json(const SimplicialMap& f) {
  Json assign = Json::array();
  for (auto& lv : f.assign) {
    Json a = Json::array();
    for (auto& s : lv) a.push_back(ref_json(s));
    assign.push_back(a);
  }
  return Json{{"schema", "smap.v1"}, {"source", sset_to_json(*f.source)}, {"target", sset_to_json(*f.target)},
              {"assign", assign}};
}

namespace {

std::vector<std::vector<Simplex>> assign_from(const Json& a, const FiniteSimplicialSet& src,
                                              const FiniteSimplicialSet& tgt) {
  std::vector<std::vector<Simplex>> out(a.size());
  for (size_t n = 0; n < a.size(); ++n) {
    if (static_cast<int>(a[n].size()) != src.count(static_cast<int>(n))) throw InvalidInput("assignment count mismatch");
    for (auto& s : a[n]) out[n].push_back(ref_from(s, static_cast<int>(n), &tgt));
  }
  return out;
}

}  // namespace

SimplicialMap smap_from_json(const Json& j) {
  return guarded("smap.v1", [&] {
    expect_schema(j, "smap.v1");
    SimplicialMap f;
    f.source = sset_from_json(j.at("source"));
    f.target = sset_from_json(j.at("target"));
    f.assign = assign_from(j.at("assign"), *f.source, *f.target);
    std::string why;
    if (!f.valid(&why)) throw InvalidInput("not a simplicial map: " + why);
    return f;
  });
}

Json cert_to_json(const ExpansionCertificate& c) {
  Json base = Json::array();
  for (auto& lv : c.base.member) {
    Json a = Json::array();
    for (char m : lv) a.push_back(m ? 1 : 0);
    base.push_back(a);
  }
  Json steps = Json::array();
  for (auto& s : c.steps) {
    Json assign = Json::array();
    for (auto& lv : s.attaching.assign) {
      Json a = Json::array();
      for (auto& x : lv) a.push_back(ref_json(x));
      assign.push_back(a);
    }
    steps.push_back({{"n", s.n}, {"i", s.i}, {"attaching", assign}, {"new_cell", s.cell}});
  }
  return Json{{"schema", "cert.v1"},   {"ambient", sset_to_json(*c.ambient)}, {"base", base},
              {"m", c.m},              {"inner", c.inner},                      {"steps", steps},
              {"complete_to_dim", c.complete_to_dim}};
}

ExpansionCertificate cert_from_json(const Json& j) {
  return guarded("cert.v1", [&] {
    expect_schema(j, "cert.v1");
    ExpansionCertificate c;
    c.ambient = sset_from_json(j.at("ambient"));
    c.base.ambient = c.ambient;
    for (auto& lv : j.at("base")) {
      std::vector<char> m;
      for (auto& x : lv) m.push_back(x.get<int>() ? 1 : 0);
      c.base.member.push_back(m);
    }
    if (c.base.member.size() != c.ambient->labels.size()) throw InvalidInput("base membership has wrong shape");
    for (size_t n = 0; n < c.base.member.size(); ++n)
      if (static_cast<int>(c.base.member[n].size()) != c.ambient->count(static_cast<int>(n)))
        throw InvalidInput("base membership has wrong shape");
    c.m = j.at("m").get<int>();
    c.inner = j.at("inner").get<bool>();
    c.complete_to_dim = j.at("complete_to_dim").get<int>();
    for (auto& s : j.at("steps")) {
      ExpansionStep st;
      st.n = s.at("n").get<int>();
      st.i = s.at("i").get<int>();
      st.cell = s.at("new_cell").get<int>();
      if (st.n < 1 || st.i < 0 || st.i > st.n || st.n > c.ambient->max_dim() || st.cell < 0 ||
          st.cell >= c.ambient->count(st.n))
        throw InvalidInput("step out of range");
      st.attaching.source = horn(st.n, st.i).sub;
      st.attaching.target = c.ambient;
      st.attaching.assign = assign_from(s.at("attaching"), *st.attaching.source, *c.ambient);
      c.steps.push_back(std::move(st));
    }
    return c;
  });
}

Json sobj_to_json(const TruncatedSimplicialObject& x) {
  int depth = x.depth();
  Json sizes = Json::array(), labels = Json::array(), face = Json::array(), degen = Json::array();
  for (int n = 0; n <= depth; ++n) {
    sizes.push_back(x.size(n));
    Json l = Json::array();
    for (int k = 0; k < x.size(n); ++k) l.push_back(x.label(n, k));
    labels.push_back(l);
    Json f = Json::array();
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        Json col = Json::array();
        for (int k = 0; k < x.size(n); ++k) col.push_back(x.d(n, i, k));
        f.push_back(col);
      }
    face.push_back(f);
    if (n < depth) {
      Json s = Json::array();
      for (int j = 0; j <= n; ++j) {
        Json col = Json::array();
        for (int k = 0; k < x.size(n); ++k) col.push_back(x.s(n, j, k));
        s.push_back(col);
      }
      degen.push_back(s);
    }
  }
  return Json{{"schema", "sobj.v1"}, {"depth", depth}, {"coskeletal_from", x.coskeletal_from}, {"sizes", sizes},
              {"labels", labels},    {"face", face},   {"degen", degen}};
}

SObj sobj_from_json(const Json& j) {
  return guarded("sobj.v1", [&] {
    expect_schema(j, "sobj.v1");
    auto x = std::make_shared<TruncatedSimplicialObject>();
    int depth = j.at("depth").get<int>();
    if (depth < 0) throw InvalidInput("negative depth");
    x->coskeletal_from = j.at("coskeletal_from").get<int>();
    x->sizes = j.at("sizes").get<std::vector<int>>();
    x->labels = j.at("labels").get<std::vector<std::vector<std::string>>>();
    x->face = j.at("face").get<std::vector<std::vector<std::vector<int>>>>();
    x->degen = j.at("degen").get<std::vector<std::vector<std::vector<int>>>>();
    if (static_cast<int>(x->sizes.size()) != depth + 1 || static_cast<int>(x->labels.size()) != depth + 1 ||
        static_cast<int>(x->face.size()) != depth + 1 || static_cast<int>(x->degen.size()) != depth)
      throw InvalidInput("level count does not match depth");
    for (int n = 0; n <= depth; ++n) {
      if (static_cast<int>(x->labels[n].size()) != x->sizes[n]) throw InvalidInput("label count mismatch");
      if (static_cast<int>(x->face[n].size()) != (n ? n + 1 : 0)) throw InvalidInput("face table shape");
      for (auto& col : x->face[n]) {
        if (static_cast<int>(col.size()) != x->sizes[n]) throw InvalidInput("face table shape");
        for (int v : col)
          if (v < 0 || v >= x->sizes[n - 1]) throw InvalidInput("face index out of range");
      }
      if (n < depth) {
        if (static_cast<int>(x->degen[n].size()) != n + 1) throw InvalidInput("degeneracy table shape");
        for (auto& col : x->degen[n]) {
          if (static_cast<int>(col.size()) != x->sizes[n]) throw InvalidInput("degeneracy table shape");
          for (int v : col)
            if (v < 0 || v >= x->sizes[n + 1]) throw InvalidInput("degeneracy index out of range");
        }
      }
    }
    std::string why;
    if (!x->validate(&why, depth)) throw InvalidInput("simplicial identities fail: " + why);
    return SObj(x);
  });
}

Json morphism_to_json(const Morphism& f, int depth) {
  Json levels = Json::array();
  for (int n = 0; n <= depth; ++n) {
    Json l = Json::array();
    for (int x = 0; x < f.source->size(n); ++x) l.push_back(f.at(n, x));
    levels.push_back(l);
  }
  return Json{{"schema", "smorph.v1"}, {"source", sobj_to_json(*f.source)}, {"target", sobj_to_json(*f.target)},
              {"level", levels}};
}

Morphism morphism_from_json(const Json& j) {
  return guarded("smorph.v1", [&] {
    expect_schema(j, "smorph.v1");
    Morphism f;
    f.source = sobj_from_json(j.at("source"));
    f.target = sobj_from_json(j.at("target"));
    f.level = j.at("level").get<std::vector<std::vector<int>>>();
    int depth = std::min(f.source->depth(), f.target->depth());
    if (static_cast<int>(f.level.size()) != depth + 1) throw InvalidInput("morphism level count mismatch");
    for (int n = 0; n <= depth; ++n) {
      if (static_cast<int>(f.level[n].size()) != f.source->size(n)) throw InvalidInput("morphism level size mismatch");
      for (int v : f.level[n])
        if (v < 0 || v >= f.target->size(n)) throw InvalidInput("morphism value out of range");
    }
    std::string why;
    if (!f.valid(depth, &why)) throw InvalidInput("not a simplicial morphism: " + why);
    return f;
  });
}

Json element_to_json(const Element& e) {
  Json j = Json::object();
  for (auto& [d, v] : e.c) {
    bool nz = false;
    for (auto& q : v) nz = nz || q != 0;
    if (nz) j[std::to_string(d)] = qvec_json(v);
  }
  return j;
}

Element element_from_json(const DGAlgebra& A, const Json& j) {
  return guarded("element", [&] {
    if (!j.is_object()) throw InvalidInput("element must be an object");
    Element e;
    for (auto& [k, v] : j.items()) {
      int d = int_key(k);
      if (A.dim(d) == 0) throw InvalidInput("element has a component in an empty degree");
      e.c[d] = qvec_from(v, A.dim(d));
    }
    A.normalize(e);
    return e;
  });
}

Json dga_to_json(const DGAlgebra& A) {
  Json degrees = Json::object(), diff = Json::object(), prod = Json::object();
  for (int d = A.lo; d <= A.hi; ++d) degrees[std::to_string(d)] = A.basis[d - A.lo];
  for (auto& [d, m] : A.diff) {
    Json rows = Json::array();
    for (auto& r : m) rows.push_back(qvec_json(r));
    diff[std::to_string(d)] = rows;
  }
  for (auto& [key, tab] : A.prod) {
    Json t = Json::array();
    for (auto& row : tab) {
      Json r = Json::array();
      for (auto& sv : row) {
        Json entries = Json::array();
        for (auto& [k, q] : sv) entries.push_back(Json::array({k, rational_text(q)}));
        r.push_back(entries);
      }
      t.push_back(r);
    }
    prod[std::to_string(key.first) + "," + std::to_string(key.second)] = t;
  }
  return Json{{"schema", "dga.v1"}, {"degrees", degrees}, {"diff", diff}, {"prod", prod}, {"unit", element_to_json(A.unit)}};
}

DGAlgebra dga_from_json(const Json& j) {
  return guarded("dga.v1", [&] {
    expect_schema(j, "dga.v1");
    DGAlgebra A;
    std::map<int, std::vector<std::string>> deg;
    for (auto& [k, v] : j.at("degrees").items()) deg[int_key(k)] = v.get<std::vector<std::string>>();
    if (deg.empty()) throw InvalidInput("no degrees");
    A.lo = deg.begin()->first;
    A.hi = deg.rbegin()->first;
    A.basis.assign(A.hi - A.lo + 1, {});
    for (auto& [d, b] : deg) A.basis[d - A.lo] = b;
    for (auto& [k, v] : j.at("diff").items()) {
      int d = int_key(k);
      if (!v.is_array() || static_cast<int>(v.size()) != A.dim(d + 1)) throw InvalidInput("differential shape");
      QMatrix m;
      for (auto& r : v) m.push_back(qvec_from(r, A.dim(d)));
      if (A.dim(d) > 0) A.diff[d] = m;
    }
    for (auto& [k, v] : j.at("prod").items()) {
      auto comma = k.find(',');
      if (comma == std::string::npos) throw InvalidInput("product key must be i,j");
      int p = int_key(k.substr(0, comma)), q = int_key(k.substr(comma + 1));
      if (static_cast<int>(v.size()) != A.dim(p)) throw InvalidInput("product table shape");
      std::vector<std::vector<SparseVec>> tab;
      for (auto& row : v) {
        if (static_cast<int>(row.size()) != A.dim(q)) throw InvalidInput("product table shape");
        std::vector<SparseVec> r;
        for (auto& entries : row) {
          SparseVec sv;
          for (auto& e : entries) {
            int idx = e.at(0).get<int>();
            if (idx < 0 || idx >= A.dim(p + q)) throw InvalidInput("product index out of range");
            sv.push_back({idx, parse_rational(e.at(1).get<std::string>())});
          }
          r.push_back(sv);
        }
        tab.push_back(r);
      }
      A.prod[{p, q}] = tab;
    }
    A.unit = element_from_json(A, j.at("unit"));
    return A;
  });
}

Json nerve_to_json(const NervePoint& p) {
  Json comps = Json::array();
  for (auto& [I, m] : p.mu) {
    auto e = element_to_json(m);
    if (e.empty()) continue;
    comps.push_back({{"tuple", I}, {"value", e}});
  }
  return Json{{"schema", "nerve.v1"}, {"n", p.n}, {"components", comps}};
}

NervePoint nerve_from_json(const DGAlgebra& A, const Json& j) {
  return guarded("nerve.v1", [&] {
    expect_schema(j, "nerve.v1");
    NervePoint p;
    p.n = j.at("n").get<int>();
    if (p.n < 0) throw InvalidInput("negative dimension");
    for (auto& c : j.at("components")) {
      Word I = c.at("tuple").get<Word>();
      if (I.empty()) throw InvalidInput("empty tuple");
      for (size_t k = 0; k < I.size(); ++k)
        if (I[k] < 0 || I[k] > p.n || (k && I[k] <= I[k - 1])) throw InvalidInput("tuple must be increasing in [n]");
      auto e = element_from_json(A, c.at("value"));
      int expect = 2 - static_cast<int>(I.size());
      auto d = A.degree(e);
      if (!A.is_zero(e) && (!d || *d != expect)) throw InvalidInput("component has the wrong degree");
      p.mu[I] = e;
    }
    return p;
  });
}

}  // namespace simploid::io
