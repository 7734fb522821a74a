#include "qvs/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace qvs {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what, json extra = {}) {
  json d = std::move(extra);
  d["where"] = where;
  throw StructuralError(what, std::move(d));
}

const json& object_at(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected a JSON object");
  return j;
}

void allow_fields(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& [key, val] : j.items()) {
    (void)val;
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) bad(where + "." + key, "unknown field");
  }
}

const json& need(const json& j, const char* field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) bad(where, std::string("missing field '") + field + "'");
  return *it;
}

void need_schema(const json& doc, const char* version, const std::string& where) {
  const json& s = need(object_at(doc, where), "schema", where);
  if (!s.is_string() || s.get<std::string>() != version)
    bad(where + ".schema", std::string("expected schema '") + version + "'",
        {{"found", s}});
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (!e.is_string()) bad(where + "[" + std::to_string(i) + "]", "expected a name");
    std::string s = e.get<std::string>();
    if (!seen.insert(s).second)
      bad(where + "[" + std::to_string(i) + "]", "duplicate name", {{"name", s}});
    out.push_back(std::move(s));
  }
  return out;
}

/// A reference to a named carrier position: a name string or an index.
int elem_ref(const json& j, const std::vector<std::string>& names, const std::string& where) {
  if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v < 0 || v >= static_cast<int>(names.size()))
      bad(where, "index out of range", {{"index", v}, {"carrier_size", names.size()}});
    return v;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    bad(where, "unknown element name", {{"name", s}});
  }
  bad(where, "expected an element name or index");
}

/// Resolves a referenced document path against the referring document's
/// directory when the plain path does not exist.
std::string sibling_path(const std::string& ref, const std::string& where) {
  namespace fs = std::filesystem;
  if (fs::exists(ref)) return ref;
  const fs::path base = fs::path(where).parent_path();
  const fs::path joined = base / ref;
  if (!base.empty() && fs::exists(joined)) return joined.string();
  return ref;
}

FiniteQuantale load_quantale_ref(const json& j, const std::string& where);

} // namespace

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open file", {{"path", path}});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw StructuralError("json parse error", {{"path", path}, {"detail", e.what()}});
  }
}

FiniteQuantale load_quantale(const json& doc, const std::string& where) {
  const json& j = object_at(doc, where);
  if (j.contains("builtin")) {
    allow_fields(j, {"schema", "builtin", "n"}, where);
    if (j.contains("schema")) need_schema(j, "quantale/1", where);
    const json& b = need(j, "builtin", where);
    if (!b.is_string()) bad(where + ".builtin", "expected a builtin name");
    const std::string name = b.get<std::string>();
    const bool sized = j.contains("n");
    int n = 0;
    if (sized) {
      const json& jn = j["n"];
      if (!jn.is_number_integer()) bad(where + ".n", "expected an integer");
      n = jn.get<int>();
    }
    if (name == "boolean2") {
      if (sized) bad(where + ".n", "boolean2 takes no size");
      return FiniteQuantale::boolean2();
    }
    if (name == "chain_lukasiewicz" || name == "chain_goedel") {
      if (!sized) bad(where, "chain builtins need a size field 'n'");
      if (n < 2 || n > 64) bad(where + ".n", "size out of range", {{"n", n}});
      return name == "chain_lukasiewicz" ? FiniteQuantale::chain_lukasiewicz(n)
                                         : FiniteQuantale::chain_goedel(n);
    }
    bad(where + ".builtin", "unknown builtin", {{"name", name}});
  }

  allow_fields(j, {"schema", "carrier", "chain", "order_pairs", "mul", "unit", "involution"},
               where);
  if (j.contains("schema")) need_schema(j, "quantale/1", where);
  const std::vector<std::string> names = string_list(need(j, "carrier", where), where + ".carrier");
  const int n = static_cast<int>(names.size());
  if (n == 0) bad(where + ".carrier", "empty carrier");

  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  const bool has_chain = j.contains("chain");
  const bool has_pairs = j.contains("order_pairs");
  if (has_chain == has_pairs)
    bad(where, "give exactly one of 'chain' and 'order_pairs'");
  if (has_chain) {
    if (!j["chain"].is_boolean() || !j["chain"].get<bool>())
      bad(where + ".chain", "only 'chain: true' is meaningful");
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  } else {
    const json& ps = j["order_pairs"];
    if (!ps.is_array()) bad(where + ".order_pairs", "expected an array of pairs");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string pw = where + ".order_pairs[" + std::to_string(i) + "]";
      const json& p = ps[i];
      if (!p.is_array() || p.size() != 2) bad(pw, "expected a pair");
      const int a = elem_ref(p[0], names, pw), b = elem_ref(p[1], names, pw);
      leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
    for (int a = 0; a < n; ++a) leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] &&
              leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)])
            leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }

  const json& jm = need(j, "mul", where);
  if (!jm.is_array() || static_cast<int>(jm.size()) != n)
    bad(where + ".mul", "expected an n x n table");
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    const json& row = jm[static_cast<std::size_t>(a)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad(where + ".mul[" + std::to_string(a) + "]", "expected n entries");
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          elem_ref(row[static_cast<std::size_t>(b)], names,
                   where + ".mul[" + std::to_string(a) + "][" + std::to_string(b) + "]");
  }
  const int unit = elem_ref(need(j, "unit", where), names, where + ".unit");
  std::vector<int> invol(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) invol[static_cast<std::size_t>(a)] = a;
  if (j.contains("involution")) {
    const json& ji = j["involution"];
    if (!ji.is_array() || static_cast<int>(ji.size()) != n)
      bad(where + ".involution", "expected n entries");
    for (int a = 0; a < n; ++a)
      invol[static_cast<std::size_t>(a)] =
          elem_ref(ji[static_cast<std::size_t>(a)], names,
                   where + ".involution[" + std::to_string(a) + "]");
  }
  return FiniteQuantale::from_tables(names, leq, mul, unit, invol);
}

namespace {

FiniteQuantale load_quantale_ref(const json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string path = sibling_path(j.get<std::string>(), where);
    const json doc = parse_json_file(path);
    need_schema(doc, "quantale/1", path);
    return load_quantale(doc, path);
  }
  return load_quantale(j, where);
}

QCategory load_category(const json& doc, const std::shared_ptr<const Quantaloid>& world,
                        const std::string& where) {
  const Quantaloid& K = *world;
  const FiniteQuantale& Q = K.base();
  const json& j = object_at(doc, where);
  allow_fields(j, {"elements", "types", "alpha"}, where);
  const std::vector<std::string> labels =
      string_list(need(j, "elements", where), where + ".elements");
  const int n = static_cast<int>(labels.size());
  if (n == 0) bad(where + ".elements", "empty carrier");

  const json& jt = need(j, "types", where);
  if (!jt.is_array() || static_cast<int>(jt.size()) != n)
    bad(where + ".types", "expected one type per element");
  TypedSet ts;
  ts.labels = labels;
  for (int x = 0; x < n; ++x) {
    const std::string tw = where + ".types[" + std::to_string(x) + "]";
    const int e = elem_ref(jt[static_cast<std::size_t>(x)], Q.names(), tw);
    const int obj = K.object_of_element(e);
    if (obj < 0) bad(tw, "type is not hermitian", {{"value", Q.name(e)}});
    ts.types.push_back(obj);
  }

  const json& ja = need(j, "alpha", where);
  if (!ja.is_array() || static_cast<int>(ja.size()) != n)
    bad(where + ".alpha", "expected an n x n matrix");
  std::vector<int> alpha(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const json& row = ja[static_cast<std::size_t>(x)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad(where + ".alpha[" + std::to_string(x) + "]", "expected n entries");
    for (int y = 0; y < n; ++y) {
      const std::string ew =
          where + ".alpha[" + std::to_string(x) + "][" + std::to_string(y) + "]";
      const int v = elem_ref(row[static_cast<std::size_t>(y)], Q.names(), ew);
      if (!K.hom(ts.types[static_cast<std::size_t>(x)], ts.types[static_cast<std::size_t>(y)])
               .contains(v))
        bad(ew, "entry outside its hom-set",
            {{"x", labels[static_cast<std::size_t>(x)]},
             {"y", labels[static_cast<std::size_t>(y)]},
             {"value", Q.name(v)}});
      alpha[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = v;
    }
  }
  return QCategory(world, ts, alpha);
}

} // namespace

LoadedQSet load_qset(const json& doc, const std::string& where) {
  const json& j = object_at(doc, where);
  need_schema(j, "qset/1", where);
  allow_fields(j, {"schema", "quantale", "elements", "alpha"}, where);
  LoadedQSet out;
  out.base = std::make_shared<const FiniteQuantale>(
      load_quantale_ref(need(j, "quantale", where), where));
  out.world = std::make_shared<const Quantaloid>(build_dstar(out.base));
  const Quantaloid& K = *out.world;
  const FiniteQuantale& Q = *out.base;

  const std::vector<std::string> labels =
      string_list(need(j, "elements", where), where + ".elements");
  const int n = static_cast<int>(labels.size());
  if (n == 0) bad(where + ".elements", "empty carrier");
  const json& ja = need(j, "alpha", where);
  if (!ja.is_array() || static_cast<int>(ja.size()) != n)
    bad(where + ".alpha", "expected an n x n matrix");

  // extents come off the diagonal; entries then live in their hom-sets
  std::vector<std::vector<int>> vals(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    const json& row = ja[static_cast<std::size_t>(x)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad(where + ".alpha[" + std::to_string(x) + "]", "expected n entries");
    for (int y = 0; y < n; ++y)
      vals[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          elem_ref(row[static_cast<std::size_t>(y)], Q.names(),
                   where + ".alpha[" + std::to_string(x) + "][" + std::to_string(y) + "]");
  }
  TypedSet ts;
  ts.labels = labels;
  for (int x = 0; x < n; ++x) {
    const int e = vals[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)];
    const int obj = K.object_of_element(e);
    if (obj < 0)
      bad(where + ".alpha[" + std::to_string(x) + "][" + std::to_string(x) + "]",
          "extent is not hermitian",
          {{"x", labels[static_cast<std::size_t>(x)]}, {"value", Q.name(e)}});
    ts.types.push_back(obj);
  }
  std::vector<int> alpha(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int v = vals[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (!K.hom(ts.types[static_cast<std::size_t>(x)], ts.types[static_cast<std::size_t>(y)])
               .contains(v))
        bad(where + ".alpha[" + std::to_string(x) + "][" + std::to_string(y) + "]",
            "entry outside its hom-set",
            {{"x", labels[static_cast<std::size_t>(x)]},
             {"y", labels[static_cast<std::size_t>(y)]},
             {"value", Q.name(v)}});
      alpha[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = v;
    }
  out.cat = QCategory(out.world, ts, alpha);
  return out;
}

std::vector<int> load_map(const json& j, const TypedSet& src, const TypedSet& dst,
                          const std::string& where) {
  const json* m = &j;
  json filedoc;
  std::string w = where;
  if (j.is_string()) {
    const std::string path = sibling_path(j.get<std::string>(), where);
    filedoc = parse_json_file(path);
    need_schema(filedoc, "map/1", path);
    allow_fields(filedoc, {"schema", "map"}, path);
    m = &need(filedoc, "map", path);
    w = path + ".map";
  }
  const json& jm = object_at(*m, w);
  std::vector<int> out(static_cast<std::size_t>(src.size()), -1);
  for (const auto& [key, val] : jm.items()) {
    int x = -1;
    for (int i = 0; i < src.size(); ++i)
      if (src.labels[static_cast<std::size_t>(i)] == key) x = i;
    if (x < 0) bad(w + "." + key, "unknown source element");
    out[static_cast<std::size_t>(x)] = elem_ref(val, dst.labels, w + "." + key);
  }
  for (int x = 0; x < src.size(); ++x)
    if (out[static_cast<std::size_t>(x)] < 0)
      bad(w, "map is missing a source element", {{"x", src.labels[static_cast<std::size_t>(x)]}});
  return out;
}

LoadedInstance load_instance(const json& doc, const std::string& where) {
  const json& j = object_at(doc, where);
  need_schema(j, "monadicity/1", where);
  LoadedInstance out;
  if (j.contains("builtin")) {
    allow_fields(j, {"schema", "builtin"}, where);
    const json& b = j["builtin"];
    if (!b.is_string()) bad(where + ".builtin", "expected a fork name");
    out.fork = builtin_split_fork(b.get<std::string>());
    out.world = out.fork.X.quantaloid_ptr();
    return out;
  }
  allow_fields(j, {"schema", "quantale", "categories", "fork", "cocones"}, where);
  out.base = std::make_shared<const FiniteQuantale>(
      load_quantale_ref(need(j, "quantale", where), where));
  out.world = std::make_shared<const Quantaloid>(build_dstar(out.base));

  const json& cats = object_at(need(j, "categories", where), where + ".categories");
  allow_fields(cats, {"X", "Y", "Z"}, where + ".categories");
  out.fork.X = load_category(need(cats, "X", where + ".categories"), out.world,
                             where + ".categories.X");
  out.fork.Y = load_category(need(cats, "Y", where + ".categories"), out.world,
                             where + ".categories.Y");
  out.fork.Z = load_category(need(cats, "Z", where + ".categories"), out.world,
                             where + ".categories.Z");

  const json& fork = object_at(need(j, "fork", where), where + ".fork");
  allow_fields(fork, {"f", "g", "t", "h", "s"}, where + ".fork");
  const TypedSet& X = out.fork.X.carrier();
  const TypedSet& Y = out.fork.Y.carrier();
  const TypedSet& Z = out.fork.Z.carrier();
  out.fork.f = load_map(need(fork, "f", where + ".fork"), X, Y, where + ".fork.f");
  out.fork.g = load_map(need(fork, "g", where + ".fork"), X, Y, where + ".fork.g");
  out.fork.t = load_map(need(fork, "t", where + ".fork"), Y, X, where + ".fork.t");
  out.fork.h = load_map(need(fork, "h", where + ".fork"), Y, Z, where + ".fork.h");
  out.fork.s = load_map(need(fork, "s", where + ".fork"), Z, Y, where + ".fork.s");

  if (j.contains("cocones")) {
    const json& cs = j["cocones"];
    if (!cs.is_array()) bad(where + ".cocones", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string cw = where + ".cocones[" + std::to_string(i) + "]";
      const json& c = object_at(cs[static_cast<std::size_t>(i)], cw);
      allow_fields(c, {"name", "category", "map"}, cw);
      Cocone co;
      const json& nm = need(c, "name", cw);
      if (!nm.is_string()) bad(cw + ".name", "expected a name");
      co.name = nm.get<std::string>();
      co.W = load_category(need(c, "category", cw), out.world, cw + ".category");
      co.k = load_map(need(c, "map", cw), Y, co.W.carrier(), cw + ".map");
      out.cocones.push_back(std::move(co));
    }
  }
  return out;
}

} // namespace qvs
