#include "superloop/report_io.hpp"

#include <json.hpp>
#include <sstream>

namespace superloop {

namespace {

using json = nlohmann::ordered_json;

json vec_to(const RatVec& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

json loop_element_to(const LoopElement& e) {
  json j;
  json terms = json::array();
  for (const auto& t : e.term_list())
    terms.push_back({t.kind == Parity::Even ? "a" : "u", t.basis_index, t.mode,
                     to_string(t.coeff)});
  j["terms"] = terms;
  j["k"] = to_string(e.k_coeff());
  return j;
}

json module_vector_to(const ModuleVector& v) {
  json j = json::array();
  for (const auto& [m, c] : v.entries()) {
    json word = json::array();
    for (const auto& s : m.word)
      word.push_back(
          {s.kind == Parity::Even ? "a" : "u", s.basis_index, s.mode});
    j.push_back({{"word", word}, {"coeff", to_string(c)}});
  }
  return j;
}

}  // namespace

std::string datum_report_to_json(const DatumReport& report) {
  json j;
  j["ok"] = report.ok();
  j["rank_form_a"] = report.rank_form_a;
  j["rank_form_u"] = report.rank_form_u;
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"condition", condition_name(v.condition)},
                          {"witness", v.witness},
                          {"lhs", vec_to(v.lhs)},
                          {"rhs", vec_to(v.rhs)}});
  }
  j["violations"] = violations;
  return j.dump(2) + "\n";
}

std::string jacobi_witnesses_to_json(const std::vector<JacobiWitness>& ws) {
  json j;
  j["ok"] = ws.empty();
  json list = json::array();
  for (const auto& w : ws)
    list.push_back({{"x", loop_element_to(w.x)},
                    {"y", loop_element_to(w.y)},
                    {"z", loop_element_to(w.z)},
                    {"residual", loop_element_to(w.residual)}});
  j["witnesses"] = list;
  return j.dump(2) + "\n";
}

std::string module_vector_to_json(const ModuleVector& v) {
  return module_vector_to(v).dump(2) + "\n";
}

std::string verify_report_to_json(const VerifyReport& report) {
  json j;
  j["ok"] = report.all_zero();
  j["checks"] = report.checks.size();
  json fails = json::array();
  for (const auto& c : report.checks) {
    if (c.ok()) continue;
    fails.push_back({{"identity_id", c.identity},
                     {"witness", c.witness},
                     {"residual_norm_is_zero", false},
                     {"residual", module_vector_to(c.residual)}});
  }
  j["failures"] = fails;
  return j.dump(2) + "\n";
}

std::string gram_to_json(const GramMatrix& g) {
  json j;
  j["degree"] = g.degree.str();
  json basis = json::array();
  for (const auto& m : g.basis) basis.push_back(m.str());
  j["basis"] = basis;
  json entries = json::array();
  for (const auto& row : g.entries) entries.push_back(vec_to(row));
  j["entries"] = entries;
  j["rank"] = g.rank();
  return j.dump(2) + "\n";
}

std::string gram_to_csv(const GramMatrix& g) {
  std::ostringstream out;
  for (const auto& row : g.entries) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << to_string(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string radical_to_json(const RadicalBasis& r) {
  json j;
  j["degree"] = r.degree.str();
  j["dim"] = r.vectors.size();
  json vectors = json::array();
  for (const auto& v : r.vectors) vectors.push_back(module_vector_to(v));
  j["vectors"] = vectors;
  return j.dump(2) + "\n";
}

std::string character_to_json(const CharacterSeries& rows) {
  json j = json::array();
  for (const auto& r : rows)
    j.push_back({{"degree", r.degree.str()},
                 {"dim", r.dim_big},
                 {"dim_radical", r.dim_radical},
                 {"dim_simple", r.dim_simple}});
  return j.dump(2) + "\n";
}

std::string character_to_csv(const CharacterSeries& rows) {
  std::ostringstream out;
  out << "degree,dim,dim_radical,dim_simple\n";
  for (const auto& r : rows)
    out << r.degree.str() << ',' << r.dim_big << ',' << r.dim_radical << ','
        << r.dim_simple << '\n';
  return out.str();
}

std::string ell_scan_to_json(const std::vector<std::pair<Rational, long>>& rs) {
  json j = json::array();
  for (const auto& [ell, rank] : rs)
    j.push_back({{"ell", to_string(ell)}, {"rank", rank}});
  return j.dump(2) + "\n";
}

std::string ell_scan_to_csv(const std::vector<std::pair<Rational, long>>& rs) {
  std::ostringstream out;
  out << "ell,rank\n";
  for (const auto& [ell, rank] : rs) out << to_string(ell) << ',' << rank << '\n';
  return out.str();
}

std::string contragredient_to_json(const ContragredientReport& report) {
  json j;
  j["ok"] = report.ok();
  j["adjoint_ok"] = report.adjoint_ok;
  j["lambda_ok"] = report.lambda_ok;
  j["block_symmetry_ok"] = report.block_symmetry_ok;
  j["signed_symmetry_ok"] = report.signed_symmetry_ok;
  j["failures"] = report.failures;
  return j.dump(2) + "\n";
}

}  // namespace superloop
