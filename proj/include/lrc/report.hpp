#pragma once

// Command dispatch and deterministic reports. The text rendering is produced
// from the JSON body, so both renderings carry the same numbers.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrc/ce_complex.hpp"
#include "lrc/errors.hpp"
#include "lrc/extension.hpp"
#include "lrc/hochschild_serre.hpp"
#include "lrc/problem.hpp"
#include "lrc/rinehart.hpp"
#include "lrc/version.hpp"

namespace lrc {

using Json = nlohmann::ordered_json;

enum ExitCode { exit_ok = 0, exit_failure = 1, exit_input_error = 2 };

struct RunOptions {
  std::string command;
  std::optional<FieldSpec> field;
  std::optional<std::size_t> degree;
  std::optional<int> max_page;
  std::string input_sha256;
};

struct Report {
  Json body;
  int exit_code = exit_ok;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"validate", "cohomology", "invariants", "hs", "env", "total"};
  return c;
}

namespace report_detail {

inline std::string scalar(const Rational& q) { return q.get_str(); }
inline std::string scalar(const Zp& x) { return std::to_string(x.value()); }

template <class K>
Json vector_json(const Vector<K>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar(x));
  return a;
}

template <class K>
Json matrix_json(const Matrix<K>& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row_vector(r)));
  return a;
}

inline Json violations_json(const Violations& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(Json{{"axiom", x.axiom}, {"witness", x.witness}, {"detail", x.detail}});
  return a;
}

inline Json check(const std::string& name, const Violations& v) {
  return Json{{"name", name}, {"ok", v.empty()}, {"violations", violations_json(v)}};
}

template <class K>
Json validation(const Instance<K>& inst, bool& ok) {
  Json checks = Json::array();
  const auto add = [&](Json c) {
    if (!c["ok"].get<bool>()) ok = false;
    checks.push_back(std::move(c));
  };
  const auto& l = inst.algebroid;
  const auto ald = validate_algebroid(l);
  add(check("algebroid", ald));
  const auto rep = inst.representation();
  const auto rv = validate_representation(l, rep);
  add(check("representation", rv));
  if (ald.empty() && rv.empty()) {
    Violations sq;
    try {
      (void)ce_complex(l, rep);
    } catch (const ConstructionInconsistent& e) {
      sq.push_back({"d_rho_squared", {}, e.what()});
    }
    add(check("d_rho_squared", sq));
  }
  if (inst.rep_complex) add(check("rep_complex", validate_rep_complex(l, *inst.rep_complex)));
  if (inst.extension) add(check("extension", validate_extension(*inst.extension)));
  return checks;
}

inline Json dims_table(const std::map<Bidegree, std::size_t>& dims) {
  Json a = Json::array();
  for (const auto& [k, v] : dims)
    if (v) a.push_back(Json::array({k.first, k.second, v}));
  return a;
}

inline Json comparisons(const std::vector<DimComparison>& v) {
  Json a = Json::array();
  for (const auto& c : v)
    if (c.page || c.expected) a.push_back(Json{{"p", c.p}, {"q", c.q}, {"page", c.page}, {"expected", c.expected}});
  return a;
}

template <class K>
Json cohomology_section(const Instance<K>& inst) {
  const auto ce = ce_complex(inst.algebroid, inst.representation());
  const auto h = cohomology(ce.complex);
  Json dims = Json::array(), reps = Json::array();
  for (const auto& g : h) {
    dims.push_back(g.dim);
    Json r = Json::array();
    for (const auto& v : g.representatives) r.push_back(vector_json(v));
    reps.push_back(std::move(r));
  }
  return Json{{"cochain_dims", ce.complex.dims()},
              {"dims", std::move(dims)},
              {"euler_characteristic", ce.complex.euler_characteristic()},
              {"representatives", std::move(reps)}};
}

template <class K>
Json invariants_section(const Instance<K>& inst, bool& ok) {
  const auto rep = inst.representation();
  const auto inv = invariants(inst.algebroid, rep);
  const auto h0 = cohomology_at(ce_complex(inst.algebroid, rep).complex, 0);
  Json basis = Json::array();
  for (const auto& v : inv.basis()) basis.push_back(vector_json(v));
  const bool matches = inv == h0.cocycles;
  ok = ok && matches;
  return Json{{"dim", inv.dim()}, {"basis", std::move(basis)}, {"equals_h0", matches}};
}

template <class K>
Json hs_section(const Instance<K>& inst, const RunOptions& opt, const ProblemFile& p, bool& ok) {
  if (!inst.extension) throw ParseError("command hs needs an \"extension\" block");
  // The filtration has quotient_rank + 1 nonzero levels.
  const int length = static_cast<int>(inst.extension->quotient_rank()) + 1;
  const int r_max = opt.max_page ? *opt.max_page : (p.options.max_page ? *p.options.max_page : length + 1);
  if (r_max < 1) throw ParseError("--max-page must be at least 1");
  const auto hs = hochschild_serre(*inst.extension, inst.representation(), r_max);
  const auto& fc = hs.filtration.filtered;
  Json filtration = Json::array();
  for (int n = 0; n <= fc.complex().top_degree(); ++n) {
    Json levels = Json::array();
    for (int q = 0; q <= fc.top_index() + 1; ++q) levels.push_back(fc.level(n, q).dim());
    filtration.push_back(Json{{"degree", n}, {"levels", std::move(levels)}});
  }
  Json pages = Json::array();
  for (const auto& page : hs.sequence.pages) {
    Json ranks = Json::array();
    for (const auto& [k, d] : page.differentials) {
      const auto rk = rank(d);
      if (rk) ranks.push_back(Json::array({k.first, k.second, rk}));
    }
    pages.push_back(Json{{"r", page.r}, {"dims", dims_table(page.dims())}, {"differential_ranks", std::move(ranks)}});
  }
  Json convergence = Json::array();
  for (const auto& c : hs.sequence.convergence)
    convergence.push_back(Json{{"degree", c.degree}, {"e_infinity_sum", c.page_sum}, {"cohomology", c.cohomology_dim}, {"ok", c.ok()}});
  Json induced = Json::array();
  for (const auto& ind : hs.induced) {
    Json rho = Json::array();
    for (const auto& m : ind.representation.rho) rho.push_back(matrix_json(m));
    induced.push_back(Json{{"q", ind.degree}, {"dim", ind.representation.dim()}, {"rho", std::move(rho)}});
  }
  const auto& ft = hs.five_term;
  ok = ok && hs.ok();
  return Json{{"kernel_rank", hs.extension.k},
              {"quotient_rank", hs.extension.q},
              {"max_page", r_max},
              {"filtration", std::move(filtration)},
              {"pages", std::move(pages)},
              {"e_infinity", dims_table(hs.sequence.infinity.dims())},
              {"stable_from", hs.sequence.stable_from},
              {"cohomology", hs.direct_cohomology},
              {"certificates",
               Json{{"graded", all_ok(hs.graded)},
                    {"e1", all_ok(hs.e1)},
                    {"e2", all_ok(hs.e2)},
                    {"convergence", hs.sequence.converges()},
                    {"basis_invariant", hs.basis_invariant()},
                    {"induced_valid", hs.induced_valid},
                    {"sigma_independent", hs.sigma_independent},
                    {"five_term_exact", ft.exact()}}},
              {"graded", comparisons(hs.graded)},
              {"e1", comparisons(hs.e1)},
              {"e2", comparisons(hs.e2)},
              {"induced", std::move(induced)},
              {"convergence", std::move(convergence)},
              {"five_term",
               Json{{"dims", ft.dims},
                    {"exact_at", ft.exact_at},
                    {"compositions_zero", ft.compositions_zero},
                    {"transgression_rank", rank(ft.transgression)}}}};
}

template <class K>
Json env_section(const Instance<K>& inst, const RunOptions& opt, const ProblemFile& p, bool& ok) {
  const std::size_t d = opt.degree ? *opt.degree : (p.options.degree ? *p.options.degree : 3);
  const auto env = truncated_enveloping(inst.algebroid, d);
  const auto rep = inst.representation();
  const auto pbw = check_pbw_count(env);
  const auto rel = check_relations(env);
  const auto assoc = check_associativity(env);
  const auto act = check_module_action(env, rep);
  Json table = Json::array();
  for (std::size_t i = 0; i < env.dim(); ++i)
    for (std::size_t j = 0; j < env.dim(); ++j) {
      if (env.degree(i) + env.degree(j) > d) continue;
      Json prod = Json::array();
      for (const auto& [x, c] : env.basis_product(i, j)) prod.push_back(Json::array({env.basis_label(x), scalar(c)}));
      table.push_back(Json{{"left", env.basis_label(i)}, {"right", env.basis_label(j)}, {"product", std::move(prod)}});
    }
  const auto rc = rinehart_complex(env);
  const auto ex = check_exactness(rc);
  Json levels = Json::array();
  for (const auto& lv : ex.levels)
    levels.push_back(Json{{"t", lv.level},
                          {"chain_dims", lv.chain_dims},
                          {"augmented_homology", lv.augmented_homology},
                          {"exact", lv.exact}});
  const auto ulin = check_u_linearity(env, rc);
  Json hom{{"ok", true}};
  try {
    const auto cert = hom_complex_iso(env, rc, rep);
    hom["degrees_checked"] = cert.degrees_checked;
    hom["entries_compared"] = cert.entries_compared;
  } catch (const MismatchAt& e) {
    hom = Json{{"ok", false}, {"mismatch_degree", e.degree()}, {"detail", e.what()}};
  }
  Json ext{{"ok", false}};
  if (ex.exact()) {
    const auto cmp = ext_comparison(env, rc, rep, ex);
    ext = Json{{"ok", cmp.ok()}, {"ext_dims", cmp.ext_dims}, {"ce_dims", cmp.ce_dims}, {"same_subquotients", cmp.same_subquotients}};
  } else {
    ext["detail"] = "Rinehart complex not exact within the cutoff";
  }
  const bool all = pbw.empty() && rel.empty() && assoc.empty() && act.empty() && ex.exact() && ulin.empty() &&
                   hom["ok"].get<bool>() && ext["ok"].get<bool>();
  ok = ok && all;
  return Json{{"degree", d},
              {"pbw", Json{{"dim", env.dim()},
                           {"expected", env.algebra_dim() * binomial(inst.algebroid.rank() + d, d)},
                           {"ok", pbw.empty()}}},
              {"checks", Json::array({check("relations", rel), check("associativity", assoc),
                                      check("module_action", act), check("u_linearity", ulin)})},
              {"overflow_pairs", env.overflow_count()},
              {"table", std::move(table)},
              {"rinehart",
               Json{{"exact", ex.exact()},
                    {"square_zero", ex.square_zero},
                    {"augmentation_square_zero", ex.augmentation_square_zero},
                    {"filtration_preserved", ex.filtration_preserved},
                    {"levels", std::move(levels)}}},
              {"hom_iso", std::move(hom)},
              {"ext", std::move(ext)}};
}

template <class K>
Json total_section(const Instance<K>& inst, bool& ok) {
  if (!inst.rep_complex) throw ParseError("command total needs a \"rep_complex\" block");
  try {
    const auto t = total_complex(inst.algebroid, *inst.rep_complex);
    return Json{{"cochain_dims", t.dims()}, {"dims", cohomology_dims(t)}};
  } catch (const Error& e) {
    ok = false;
    return Json{{"error", e.what()}};
  }
}

template <class K>
void run_typed(const ProblemFile& p, const RunOptions& opt, const Field<K>& f, Report& rep) {
  const auto inst = instantiate(p, f);
  bool ok = true;
  rep.body["validation"] = validation(inst, ok);
  if (!ok) {
    rep.exit_code = exit_failure;
    return;
  }
  const std::string& c = opt.command;
  if (c == "cohomology") rep.body["cohomology"] = cohomology_section(inst);
  if (c == "invariants") rep.body["invariants"] = invariants_section(inst, ok);
  if (c == "hs") rep.body["hs"] = hs_section(inst, opt, p, ok);
  if (c == "env") rep.body["env"] = env_section(inst, opt, p, ok);
  if (c == "total") rep.body["total"] = total_section(inst, ok);
  if (!ok) rep.exit_code = exit_failure;
}

}  // namespace report_detail

inline Report run_command(const ProblemFile& p, const RunOptions& opt) {
  Report rep;
  const FieldSpec field = opt.field ? *opt.field : p.field;
  rep.body["engine"] = engine_name;
  rep.body["engine_version"] = engine_version;
  rep.body["command"] = opt.command;
  rep.body["problem"] = p.name;
  rep.body["input_sha256"] = opt.input_sha256;
  rep.body["field"] = field.name();
  rep.body["status"] = "ok";
  try {
    bool known = false;
    for (const auto& c : commands()) known = known || c == opt.command;
    if (!known) throw ParseError("unknown command \"" + opt.command + "\"");
    with_field(field, [&](const auto& f) { report_detail::run_typed(p, opt, f, rep); });
  } catch (const ParseError& e) {
    rep.exit_code = exit_input_error;
    rep.body["error"] = e.what();
  } catch (const DegreeOutOfRange& e) {
    rep.exit_code = exit_input_error;
    rep.body["error"] = e.what();
  } catch (const Error& e) {
    rep.exit_code = exit_failure;
    rep.body["error"] = e.what();
  }
  rep.body["status"] = rep.exit_code == exit_ok ? "ok" : rep.exit_code == exit_failure ? "fail" : "input_error";
  rep.body["exit_code"] = rep.exit_code;
  return rep;
}

// A report for input that could not be parsed at all.
inline Report input_error_report(const std::string& command, const std::string& sha256, const std::string& what) {
  Report rep;
  rep.exit_code = exit_input_error;
  rep.body["engine"] = engine_name;
  rep.body["engine_version"] = engine_version;
  rep.body["command"] = command;
  rep.body["input_sha256"] = sha256;
  rep.body["status"] = "input_error";
  rep.body["error"] = what;
  rep.body["exit_code"] = rep.exit_code;
  return rep;
}

inline std::string render_json(const Report& r) { return r.body.dump(2) + "\n"; }

namespace report_detail {

inline bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
  return true;
}

inline std::string flat(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) return j.dump();
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat(j[i]);
  return s + "]";
}

inline void text(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_flat(v))) {
        os << pad << k << ":\n";
        text(os, v, indent + 2);
      } else {
        os << pad << k << ": " << flat(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << pad << "-\n";
        text(os, v, indent + 2);
      } else {
        os << pad << "- " << flat(v) << "\n";
      }
    }
  } else {
    os << pad << flat(j) << "\n";
  }
}

}  // namespace report_detail

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  report_detail::text(os, r.body, 0);
  return os.str();
}

}  // namespace lrc
