#include "ergomax/io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>

namespace ergomax {

namespace {

Json opt_rational(const std::optional<Rational>& q) {
  return q ? json_rational(*q) : Json(nullptr);
}

}  // namespace

Json json_integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return zint(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>(), 10);
  throw domain_error("integer field must be a number or a decimal string");
}

Json json_rational(const Rational& q) {
  return Json{{"num", json_integer(q.get_num())}, {"den", json_integer(q.get_den())}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw domain_error("rational field must be a {num, den} object");
  Rational q(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  if (q.get_den() == 0) throw domain_error("rational field with zero denominator");
  q.canonicalize();
  return q;
}

Json json_highprec(const HighPrec& x, unsigned digits) {
  return Json{{"digits", x.str(digits)}, {"bits", x.bits()}};
}

Json json_norm_value(const NormValue& v, unsigned digits) {
  return Json{{"exact", opt_rational(v.exact)},
              {"power", opt_rational(v.power)},
              {"approx", json_highprec(v.approx, digits)}};
}

Json json_exponent(const Exponent& p) {
  if (p.inf) return Json("inf");
  return json_rational(p.q);
}

Exponent exponent_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Exponent::infinity();
  return Exponent::of(rational_from_json(j));
}

Json json_signal(const Signal& f) {
  Json entries = Json::array();
  for (const auto& [x, v] : f.entries()) {
    Json pt = Json::array();
    for (long long c : x) pt.push_back(c);
    entries.push_back(Json{{"x", pt}, {"v", json_rational(v)}});
  }
  return Json{{"dimension", f.dimension()}, {"entries", entries}};
}

Signal signal_from_json(const Json& j) {
  Signal f(j.at("dimension").get<int>());
  for (const auto& e : j.at("entries")) {
    Point x;
    for (const auto& c : e.at("x")) x.push_back(c.get<long long>());
    f.set(x, rational_from_json(e.at("v")));
  }
  return f;
}

Json json_cyclic(const CyclicSignal& f) {
  Json vals = Json::array();
  for (const auto& v : f.values()) vals.push_back(json_rational(v));
  return Json{{"period", f.period()}, {"weight", json_rational(f.weight())}, {"values", vals}};
}

CyclicSignal cyclic_from_json(const Json& j) {
  CyclicSignal f(j.at("period").get<long>(), rational_from_json(j.at("weight")));
  long i = 0;
  for (const auto& v : j.at("values")) f.set(i++, rational_from_json(v));
  if (i != f.period()) throw domain_error("cyclic value count does not match the period");
  return f;
}

Json json_polynomial_family(const PolynomialFamily& P) {
  Json rows = Json::array();
  for (int i = 0; i < P.d; ++i) {
    Json row = Json::array();
    for (int j = 0; j < P.m; ++j) {
      Json terms = Json::array();
      for (const auto& [exps, coeff] : P.at(i, j).terms()) {
        Json e = Json::array();
        for (unsigned u : exps) e.push_back(u);
        terms.push_back(Json{{"exps", e}, {"coeff", json_integer(coeff)}});
      }
      row.push_back(terms);
    }
    rows.push_back(row);
  }
  return Json{{"d", P.d}, {"m", P.m}, {"k", P.k}, {"polys", rows}};
}

namespace {

Json rat_pair(const Rational& q) {
  return Json::array({json_integer(q.get_num()), json_integer(q.get_den())});
}

Rational rat_from_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw domain_error("rational pair must be [num, den]");
  Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
  if (q.get_den() == 0) throw domain_error("rational pair has zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Json signal_file(const Signal& f) {
  Json entries = Json::array();
  for (const auto& [x, v] : f.entries()) {
    Json idx = Json::array();
    for (long long c : x) idx.push_back(c);
    entries.push_back(Json::array({idx, rat_pair(v)}));
  }
  return Json{{"d", f.dimension()}, {"entries", entries}};
}

Signal signal_from_file(const Json& j) {
  Signal f(j.at("d").get<int>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 2) throw domain_error("signal entry must be [index, value]");
    Point x;
    for (const auto& c : e[0]) x.push_back(c.get<long long>());
    f.set(x, rat_from_pair(e[1]));
  }
  return f;
}

Json cyclic_file(const CyclicSignal& f) {
  Json values = Json::array();
  for (long i = 0; i < f.period(); ++i) values.push_back(rat_pair(f.eval(i)));
  return Json{{"L", f.period()}, {"w", rat_pair(f.weight())}, {"values", values}};
}

CyclicSignal cyclic_from_file(const Json& j) {
  const Json& vals = j.at("values");
  CyclicSignal f(j.at("L").get<long>(), rat_from_pair(j.at("w")));
  if (static_cast<long>(vals.size()) != f.period())
    throw domain_error("cyclic value list length must equal L");
  for (long i = 0; i < f.period(); ++i)
    f.set(i, rat_from_pair(vals[static_cast<size_t>(i)]));
  return f;
}

Json family_file(const PolynomialFamily& P) {
  Json polys = Json::array();
  for (int i = 0; i < P.d; ++i) {
    for (int j = 0; j < P.m; ++j) {
      Json terms = Json::array();
      for (const auto& [exps, coeff] : P.at(i, j).terms()) {
        Json e = Json::array();
        for (unsigned u : exps) e.push_back(u);
        terms.push_back(Json::array({e, json_integer(coeff)}));
      }
      polys.push_back(terms);
    }
  }
  return Json{{"d", P.d}, {"m", P.m}, {"k", P.k}, {"polys", polys}};
}

PolynomialFamily family_from_file(const Json& j) {
  PolynomialFamily P(j.at("d").get<int>(), j.at("m").get<int>(), j.at("k").get<int>());
  const Json& polys = j.at("polys");
  if (static_cast<int>(polys.size()) != P.d * P.m)
    throw domain_error("family poly list must have d*m entries, row-major");
  for (int i = 0; i < P.d; ++i) {
    for (int jj = 0; jj < P.m; ++jj) {
      const Json& terms = polys[static_cast<size_t>(i * P.m + jj)];
      for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2)
          throw domain_error("polynomial term must be [exps, coeff]");
        std::vector<unsigned> exps;
        for (const auto& e : t[0]) exps.push_back(e.get<unsigned>());
        P.at(i, jj).add_term(exps, integer_from_json(t[1]));
      }
    }
  }
  return P;
}

Json json_ratio_report(const RatioReport& r) {
  Json out{{"op", op_name(r.op)},
           {"kind", r.kind == RatioReport::Kind::Weak ? "weak" : "strong"},
           {"p", json_exponent(r.p)},
           {"value", json_norm_value(r.value)}};
  out["tail_power_bound"] = opt_rational(r.tail_power_bound);
  out["pad"] = r.pad ? Json(*r.pad) : Json(nullptr);
  out["lambda"] = opt_rational(r.lambda);
  out["level_count"] = r.level_count ? Json(*r.level_count) : Json(nullptr);
  if (std::holds_alternative<Signal>(r.witness)) {
    out["witness"] = Json{{"system", "Z"}, {"signal", json_signal(std::get<Signal>(r.witness))}};
  } else if (std::holds_alternative<CyclicSignal>(r.witness)) {
    out["witness"] =
        Json{{"system", "cyclic"}, {"signal", json_cyclic(std::get<CyclicSignal>(r.witness))}};
  } else {
    out["witness"] = nullptr;
  }
  out["note"] = r.note;
  return out;
}

Json json_covering(const CoveringCertificate& c) {
  Json blocks = Json::array();
  for (const auto& b : c.blocks)
    blocks.push_back(Json{{"anchor", b.anchor},
                          {"radius", b.radius},
                          {"cut", b.cut},
                          {"window_sum", json_rational(b.window_sum)},
                          {"suffix_sum", json_rational(b.suffix_sum)}});
  Json level = Json::array();
  for (long long x : c.level) level.push_back(x);
  return Json{{"lambda", json_rational(c.lambda)}, {"level", level},
              {"blocks", blocks},                  {"covered", json_rational(c.covered)},
              {"mass", json_rational(c.mass)},     {"valid", c.valid}};
}

Json json_constant_report(const ConstantReport& r) {
  Json windows = Json::array();
  for (const auto& [start, len] : r.best.windows) windows.push_back(Json::array({start, len}));
  Json level = Json::array();
  for (long x : r.best.level) level.push_back(x);
  Json extremizer = Json::array();
  for (const auto& v : r.best.extremizer) extremizer.push_back(json_rational(v));
  Json cert{{"primal_feasible", r.best.cert.primal_feasible},
            {"dual_feasible", r.best.cert.dual_feasible},
            {"complementary", r.best.cert.complementary},
            {"gap_zero", r.best.cert.gap_zero}};
  Json best{{"windows", windows},
            {"level", level},
            {"lp_min", json_rational(r.best.lp_min)},
            {"value", json_rational(r.best.value)},
            {"extremizer", extremizer},
            {"cert", cert},
            {"cross_checked", r.best.cross_checked}};
  return Json{{"op", op_name(r.op)},
              {"L", r.L},
              {"n_max", r.n_max},
              {"constant", json_rational(r.constant)},
              {"cells_scanned", r.cells_scanned},
              {"lps_solved", r.lps_solved},
              {"best", best}};
}

Json json_root_bracket(const RootBracket& b) {
  return Json{{"lo", json_rational(b.lo)},
              {"hi", json_rational(b.hi)},
              {"exact", opt_rational(b.exact)},
              {"value", json_highprec(b.value)},
              {"probes", b.probes}};
}

Json json_search_report(const SearchReport& r) {
  return Json{{"best", json_ratio_report(r.best)},
              {"evaluations", r.evaluations},
              {"budget_exhausted", r.budget_exhausted},
              {"strategy", r.strategy}};
}

Json json_transfer_step(const TransferStep& s) {
  return Json{{"K", s.K},
              {"R_K", s.R_K},
              {"lhs_power", json_rational(s.lhs_power)},
              {"rhs_power", json_rational(s.rhs_power)},
              {"cyclic_power", json_rational(s.cyclic_power)},
              {"holds", s.holds},
              {"factor_power", json_rational(s.factor_power)},
              {"factor_exact", opt_rational(s.factor_exact)}};
}

Json json_transfer_demo(const TransferDemo& d) {
  Json steps = Json::array();
  for (const auto& s : d.steps) steps.push_back(json_transfer_step(s));
  return Json{{"norm", d.norm == TransferNorm::Strong ? "strong" : "weak"},
              {"all_hold", d.all_hold},
              {"steps", steps}};
}

Json json_amplify_report(const AmplifyReport& r) {
  return Json{{"L", r.build.L},
              {"R", r.build.R},
              {"eps", json_rational(r.build.eps)},
              {"f", json_cyclic(r.build.f)},
              {"norm_scaling_ok", r.build.norm_scaling_ok},
              {"op", op_name(r.op)},
              {"p", r.p},
              {"rho_power", json_rational(r.rho_power)},
              {"ratio_power", json_rational(r.ratio_power)},
              {"precondition_ok", r.precondition_ok},
              {"lhs_power", json_rational(r.lhs_power)},
              {"bracket_power", json_rational(r.bracket_power)},
              {"rhs_power", json_rational(r.rhs_power)},
              {"margin", json_rational(r.margin)},
              {"holds", r.holds},
              {"amplifying", r.amplifying},
              {"tail_bound", json_rational(r.tail_bound)},
              {"edge_value", json_rational(r.edge_value)},
              {"left_tail_ok", r.left_tail_ok},
              {"hoelder_ok", r.hoelder_ok},
              {"note", r.note}};
}

Json json_embed_report(const EmbedReport& r) {
  return Json{{"L", r.build.L},
              {"M", r.build.M},
              {"F", json_signal(r.build.F)},
              {"f", json_cyclic(r.build.f)},
              {"disjoint_ok", r.build.disjoint_ok},
              {"p", r.p},
              {"f_norm_power", json_rational(r.f_norm_power)},
              {"F_norm_power", json_rational(r.F_norm_power)},
              {"norm_equal", r.norm_equal},
              {"dominates_pointwise", r.dominates_pointwise},
              {"host_ratio_power", json_rational(r.host_ratio_power)},
              {"restricted_ratio_power", json_rational(r.restricted_ratio_power)},
              {"ratio_no_decrease", r.ratio_no_decrease}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_scalar(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_object()) {
    if (v.contains("num") && v.contains("den")) return csv_escape(rat_str(rational_from_json(v)));
    if (v.contains("digits")) return csv_escape(v.at("digits").get<std::string>());
    throw domain_error("object cell has no CSV rendering");
  }
  if (v.is_number()) return v.dump();
  throw domain_error("array cell has no CSV rendering");
}

std::string csv_table(const Json& rows) {
  if (!rows.is_array()) throw domain_error("CSV rows must form an array");
  std::string out;
  if (rows.empty()) return out;
  std::vector<std::string> cols;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    cols.push_back(key);
  }
  for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_escape(cols[i]);
  out += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < cols.size(); ++i) {
      if (!row.contains(cols[i])) throw domain_error("CSV row is missing column " + cols[i]);
      out += (i ? "," : "") + csv_scalar(row.at(cols[i]));
    }
    out += '\n';
  }
  return out;
}

std::string sidecar_path(const std::string& out_path) {
  if (out_path.empty() || out_path == "-") return "witnesses.json";
  std::string base = out_path;
  if (base.size() >= 4 && base.substr(base.size() - 4) == ".csv")
    base = base.substr(0, base.size() - 4);
  return base + ".witnesses.json";
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ergomax
