#pragma once

// JSON problem files. Scalars are read as exact rationals (JSON integers or
// strings "p/q") and reduced into the working field only on instantiation.
//
//   {"name": ..., "field": {"type": "rational"} | {"type": "prime", "p": P},
//    "algebra":   {"dim": m, "unit": [m], "mult": [m][m][m]},
//    "algebroid": {"rank": n, "anchor": [n][m][m], "bracket": [n][n][n*m]},
//    "module":    {"kind": "anchor" | "adjoint" | "explicit", "dim": d,
//                  "action": [m][d][d], "rho": [n][d][d]},
//    "rep_complex": {"terms": [module...], "maps": [[d'][d]...]},
//    "extension": {"k_indices": [...]} | {"kernel": [[n*m]...], "splitting": [[n*m]...]},
//    "options":   {"degree": d, "max_page": r}}
//
// Matrices are lists of rows; anchor[i][r][c] is the e_r-coefficient of a(s_i)(e_c),
// and bracket[i][j][l*m + a] the coefficient of e_a s_l in [s_i, s_j].

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lrc/ce_complex.hpp"
#include "lrc/errors.hpp"
#include "lrc/extension.hpp"
#include "lrc/field.hpp"
#include "lrc/lie_rinehart.hpp"

namespace lrc {

using RawVector = std::vector<Rational>;
using RawMatrix = std::vector<RawVector>;

struct ModuleSpec {
  std::string kind = "anchor";
  std::size_t dim = 0;
  std::vector<RawMatrix> action;
  std::vector<RawMatrix> rho;

  bool operator==(const ModuleSpec&) const = default;
};

struct RepComplexSpec {
  std::vector<ModuleSpec> terms;
  std::vector<RawMatrix> maps;

  bool operator==(const RepComplexSpec&) const = default;
};

struct ExtensionSpec {
  std::optional<std::vector<std::size_t>> k_indices;
  std::vector<RawVector> kernel;
  std::vector<RawVector> splitting;

  bool operator==(const ExtensionSpec&) const = default;
};

struct ProblemOptions {
  std::optional<std::size_t> degree;
  std::optional<int> max_page;

  bool operator==(const ProblemOptions&) const = default;
};

struct ProblemFile {
  std::string name;
  FieldSpec field;
  std::size_t algebra_dim = 0;
  RawVector unit;
  std::vector<std::vector<RawVector>> mult;
  std::size_t rank = 0;
  std::vector<RawMatrix> anchor;
  std::vector<std::vector<RawVector>> bracket;
  std::optional<ModuleSpec> module;
  std::optional<RepComplexSpec> rep_complex;
  std::optional<ExtensionSpec> extension;
  ProblemOptions options;

  bool operator==(const ProblemFile&) const = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string json_kind(const Json& j) { return j.type_name(); }

inline const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object, got " + json_kind(j));
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field " + (path.empty() ? key : path + "." + key));
  return *it;
}

inline std::size_t read_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(path + ": expected a non-negative integer, got " + j.dump());
  return j.get<std::size_t>();
}

inline Rational read_scalar(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

inline const Json& read_array(const Json& j, std::size_t expected, const std::string& path, const char* what) {
  if (!j.is_array()) throw ParseError(path + ": expected an array, got " + json_kind(j));
  if (j.size() != expected) throw ShapeError(path, std::to_string(expected) + " " + what, std::to_string(j.size()));
  return j;
}

inline RawVector read_vector(const Json& j, std::size_t n, const std::string& path) {
  read_array(j, n, path, "entries");
  RawVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(read_scalar(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

inline RawMatrix read_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  read_array(j, rows, path, "rows");
  RawMatrix m;
  for (std::size_t r = 0; r < rows; ++r) m.push_back(read_vector(j[r], cols, path + "[" + std::to_string(r) + "]"));
  return m;
}

inline std::vector<RawMatrix> read_matrices(const Json& j, std::size_t count, std::size_t rows, std::size_t cols,
                                            const std::string& path) {
  read_array(j, count, path, "matrices");
  std::vector<RawMatrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(read_matrix(j[i], rows, cols, path + "[" + std::to_string(i) + "]"));
  return out;
}

inline ModuleSpec read_module(const Json& j, std::size_t m, std::size_t n, const std::string& path) {
  ModuleSpec s;
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError(path + ".kind: expected a string");
    s.kind = j["kind"].get<std::string>();
  } else {
    s.kind = "explicit";
  }
  if (s.kind == "anchor" || s.kind == "adjoint") return s;
  if (s.kind != "explicit") throw ParseError(path + ".kind: unknown module kind \"" + s.kind + "\"");
  s.dim = read_size(member(j, "dim", path), path + ".dim");
  s.action = read_matrices(member(j, "action", path), m, s.dim, s.dim, path + ".action");
  s.rho = read_matrices(member(j, "rho", path), n, s.dim, s.dim, path + ".rho");
  return s;
}

inline std::size_t module_dim(const ModuleSpec& s, std::size_t m, std::size_t n) {
  if (s.kind == "anchor") return m;
  if (s.kind == "adjoint") return n * m;
  return s.dim;
}

inline std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline Json write_scalar(const Rational& q) { return q.get_str(); }

inline Json write_vector(const RawVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(write_scalar(x));
  return a;
}

inline Json write_matrix(const RawMatrix& m) {
  Json a = Json::array();
  for (const auto& r : m) a.push_back(write_vector(r));
  return a;
}

inline Json write_module(const ModuleSpec& s) {
  Json j = Json::object();
  j["kind"] = s.kind;
  if (s.kind != "explicit") return j;
  j["dim"] = s.dim;
  j["action"] = Json::array();
  for (const auto& a : s.action) j["action"].push_back(write_matrix(a));
  j["rho"] = Json::array();
  for (const auto& r : s.rho) j["rho"].push_back(write_matrix(r));
  return j;
}

}  // namespace detail

inline ProblemFile parse_problem_json(const std::string& text) {
  using detail::Json;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(detail::line_of(text, e.byte)) + ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw ParseError("top level: expected an object");
  ProblemFile p;
  if (j.contains("name")) p.name = j["name"].is_string() ? j["name"].get<std::string>() : j["name"].dump();

  const Json& field = detail::member(j, "field", "");
  if (field.is_string()) {
    p.field = FieldSpec::parse(field.get<std::string>());
  } else {
    const Json& type = detail::member(field, "type", "field");
    if (type == "rational") {
      p.field = FieldSpec{};
    } else if (type == "prime") {
      p.field = FieldSpec::parse(std::to_string(detail::read_size(detail::member(field, "p", "field"), "field.p")));
    } else {
      throw ParseError("field.type: expected \"rational\" or \"prime\", got " + type.dump());
    }
  }

  const Json& alg = detail::member(j, "algebra", "");
  const std::size_t m = p.algebra_dim = detail::read_size(detail::member(alg, "dim", "algebra"), "algebra.dim");
  if (m == 0) throw ShapeError("algebra.dim", "at least 1", "0");
  p.unit = detail::read_vector(detail::member(alg, "unit", "algebra"), m, "algebra.unit");
  const Json& mult = detail::member(alg, "mult", "algebra");
  detail::read_array(mult, m, "algebra.mult", "rows");
  for (std::size_t a = 0; a < m; ++a) {
    const std::string pa = "algebra.mult[" + std::to_string(a) + "]";
    detail::read_array(mult[a], m, pa, "entries");
    std::vector<RawVector> row;
    for (std::size_t b = 0; b < m; ++b) row.push_back(detail::read_vector(mult[a][b], m, pa + "[" + std::to_string(b) + "]"));
    p.mult.push_back(std::move(row));
  }

  const Json& ald = detail::member(j, "algebroid", "");
  const std::size_t n = p.rank = detail::read_size(detail::member(ald, "rank", "algebroid"), "algebroid.rank");
  p.anchor = detail::read_matrices(detail::member(ald, "anchor", "algebroid"), n, m, m, "algebroid.anchor");
  const Json& br = detail::member(ald, "bracket", "algebroid");
  detail::read_array(br, n, "algebroid.bracket", "rows");
  for (std::size_t a = 0; a < n; ++a) {
    const std::string pa = "algebroid.bracket[" + std::to_string(a) + "]";
    detail::read_array(br[a], n, pa, "entries");
    std::vector<RawVector> row;
    for (std::size_t b = 0; b < n; ++b)
      row.push_back(detail::read_vector(br[a][b], n * m, pa + "[" + std::to_string(b) + "]"));
    p.bracket.push_back(std::move(row));
  }

  if (j.contains("module")) p.module = detail::read_module(j["module"], m, n, "module");

  if (j.contains("rep_complex")) {
    const Json& rc = j["rep_complex"];
    RepComplexSpec spec;
    const Json& terms = detail::member(rc, "terms", "rep_complex");
    if (!terms.is_array() || terms.empty()) throw ParseError("rep_complex.terms: expected a non-empty array");
    for (std::size_t t = 0; t < terms.size(); ++t)
      spec.terms.push_back(detail::read_module(terms[t], m, n, "rep_complex.terms[" + std::to_string(t) + "]"));
    const Json& maps = rc.contains("maps") ? rc["maps"] : Json::array();
    detail::read_array(maps, spec.terms.size() - 1, "rep_complex.maps", "maps");
    for (std::size_t t = 0; t + 1 < spec.terms.size(); ++t)
      spec.maps.push_back(detail::read_matrix(maps[t], detail::module_dim(spec.terms[t + 1], m, n),
                                              detail::module_dim(spec.terms[t], m, n),
                                              "rep_complex.maps[" + std::to_string(t) + "]"));
    p.rep_complex = std::move(spec);
  }

  if (j.contains("extension")) {
    const Json& e = j["extension"];
    ExtensionSpec spec;
    if (e.contains("k_indices")) {
      const Json& ki = e["k_indices"];
      if (!ki.is_array()) throw ParseError("extension.k_indices: expected an array");
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < ki.size(); ++i) {
        const auto v = detail::read_size(ki[i], "extension.k_indices[" + std::to_string(i) + "]");
        if (v >= n) throw ShapeError("extension.k_indices[" + std::to_string(i) + "]", "index < " + std::to_string(n), std::to_string(v));
        idx.push_back(v);
      }
      spec.k_indices = std::move(idx);
    } else {
      const Json& ker = detail::member(e, "kernel", "extension");
      const Json& spl = detail::member(e, "splitting", "extension");
      if (!ker.is_array()) throw ParseError("extension.kernel: expected an array");
      if (!spl.is_array()) throw ParseError("extension.splitting: expected an array");
      for (std::size_t i = 0; i < ker.size(); ++i)
        spec.kernel.push_back(detail::read_vector(ker[i], n * m, "extension.kernel[" + std::to_string(i) + "]"));
      for (std::size_t i = 0; i < spl.size(); ++i)
        spec.splitting.push_back(detail::read_vector(spl[i], n * m, "extension.splitting[" + std::to_string(i) + "]"));
    }
    p.extension = std::move(spec);
  }

  if (j.contains("options")) {
    const Json& o = j["options"];
    if (o.contains("degree")) p.options.degree = detail::read_size(o["degree"], "options.degree");
    if (o.contains("max_page")) {
      if (!o["max_page"].is_number_integer()) throw ParseError("options.max_page: expected an integer");
      p.options.max_page = o["max_page"].get<int>();
    }
  }
  return p;
}

inline ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem_json(ss.str());
}

inline nlohmann::ordered_json problem_to_json(const ProblemFile& p) {
  using detail::Json;
  Json j = Json::object();
  if (!p.name.empty()) j["name"] = p.name;
  if (p.field.kind == FieldSpec::Kind::rational)
    j["field"] = Json{{"type", "rational"}};
  else
    j["field"] = Json{{"type", "prime"}, {"p", p.field.p}};
  Json mult = Json::array();
  for (const auto& row : p.mult) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(detail::write_vector(v));
    mult.push_back(std::move(r));
  }
  j["algebra"] = Json{{"dim", p.algebra_dim}, {"unit", detail::write_vector(p.unit)}, {"mult", std::move(mult)}};
  Json anchor = Json::array();
  for (const auto& a : p.anchor) anchor.push_back(detail::write_matrix(a));
  Json bracket = Json::array();
  for (const auto& row : p.bracket) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(detail::write_vector(v));
    bracket.push_back(std::move(r));
  }
  j["algebroid"] = Json{{"rank", p.rank}, {"anchor", std::move(anchor)}, {"bracket", std::move(bracket)}};
  if (p.module) j["module"] = detail::write_module(*p.module);
  if (p.rep_complex) {
    Json terms = Json::array(), maps = Json::array();
    for (const auto& t : p.rep_complex->terms) terms.push_back(detail::write_module(t));
    for (const auto& mp : p.rep_complex->maps) maps.push_back(detail::write_matrix(mp));
    j["rep_complex"] = Json{{"terms", std::move(terms)}, {"maps", std::move(maps)}};
  }
  if (p.extension) {
    Json e = Json::object();
    if (p.extension->k_indices) {
      e["k_indices"] = *p.extension->k_indices;
    } else {
      Json ker = Json::array(), spl = Json::array();
      for (const auto& v : p.extension->kernel) ker.push_back(detail::write_vector(v));
      for (const auto& v : p.extension->splitting) spl.push_back(detail::write_vector(v));
      e["kernel"] = std::move(ker);
      e["splitting"] = std::move(spl);
    }
    j["extension"] = std::move(e);
  }
  Json o = Json::object();
  if (p.options.degree) o["degree"] = *p.options.degree;
  if (p.options.max_page) o["max_page"] = *p.options.max_page;
  if (!o.empty()) j["options"] = std::move(o);
  return j;
}

// The problem with every scalar reduced into the field K.
template <class K>
struct Instance {
  Field<K> field;
  LieRinehart<K> algebroid;
  std::optional<Representation<K>> module;
  std::optional<RepComplex<K>> rep_complex;
  std::optional<ExtensionTriple<K>> extension;

  // The declared module, or A with the anchor action.
  Representation<K> representation() const { return module ? *module : anchor_representation(algebroid); }
};

namespace detail {

template <class K>
Vector<K> reduce(const Field<K>& f, const RawVector& v) {
  Vector<K> out;
  for (const auto& x : v) out.push_back(f.from_rational(x));
  return out;
}

template <class K>
Matrix<K> reduce(const Field<K>& f, const RawMatrix& m, std::size_t cols) {
  Matrix<K> out(m.size(), cols);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = f.from_rational(m[r][c]);
  return out;
}

template <class K>
Representation<K> reduce_module(const Field<K>& f, const LieRinehart<K>& l, const ModuleSpec& s) {
  if (s.kind == "anchor") return anchor_representation(l);
  if (s.kind == "adjoint") return adjoint_representation(l);
  Representation<K> r;
  r.module.dim = s.dim;
  for (const auto& a : s.action) r.module.action.push_back(reduce(f, a, s.dim));
  for (const auto& x : s.rho) r.rho.push_back(reduce(f, x, s.dim));
  return r;
}

}  // namespace detail

template <class K>
Instance<K> instantiate(const ProblemFile& p, const Field<K>& f) {
  std::vector<std::vector<Vector<K>>> mult;
  for (const auto& row : p.mult) {
    std::vector<Vector<K>> r;
    for (const auto& v : row) r.push_back(detail::reduce(f, v));
    mult.push_back(std::move(r));
  }
  FiniteAlgebra<K> a(f, detail::reduce(f, p.unit), std::move(mult));
  std::vector<Matrix<K>> anchor;
  for (const auto& x : p.anchor) anchor.push_back(detail::reduce(f, x, p.algebra_dim));
  const std::size_t m = p.algebra_dim, n = p.rank;
  typename LieRinehart<K>::BracketTable bracket(n, std::vector<std::vector<Vector<K>>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vector<K> h;
        for (std::size_t c = 0; c < m; ++c) h.push_back(f.from_rational(p.bracket[i][j][l * m + c]));
        bracket[i][j].push_back(std::move(h));
      }
  Instance<K> inst{f, LieRinehart<K>(std::move(a), std::move(anchor), std::move(bracket)), {}, {}, {}};
  if (p.module) inst.module = detail::reduce_module(f, inst.algebroid, *p.module);
  if (p.rep_complex) {
    RepComplex<K> c;
    for (const auto& t : p.rep_complex->terms) c.terms.push_back(detail::reduce_module(f, inst.algebroid, t));
    for (std::size_t t = 0; t < p.rep_complex->maps.size(); ++t)
      c.maps.push_back(detail::reduce(f, p.rep_complex->maps[t], c.terms[t].dim()));
    inst.rep_complex = std::move(c);
  }
  if (p.extension) {
    if (p.extension->k_indices) {
      inst.extension = ExtensionTriple<K>::from_indices(inst.algebroid, *p.extension->k_indices);
    } else {
      ExtensionTriple<K> e{inst.algebroid, {}, {}};
      for (const auto& v : p.extension->kernel) e.kernel.push_back(detail::reduce(f, v));
      for (const auto& v : p.extension->splitting) e.splitting.push_back(detail::reduce(f, v));
      inst.extension = std::move(e);
    }
  }
  return inst;
}

// Calls fn(Field<Rational>) or fn(Field<Zp>) according to the field spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rational) return fn(Field<Rational>());
  return fn(Field<Zp>(spec.p));
}

}  // namespace lrc
