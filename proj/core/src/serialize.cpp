#include "c4ex/serialize.hpp"

#include <cstdio>

namespace c4ex {
namespace {

std::string exps(const MPoly::Exponents& e) {
  return "q^" + std::to_string(e[0]) + " r^" + std::to_string(e[1]) + " s^" + std::to_string(e[2]);
}

std::string cell(const Bound& b) { return b.applicable ? b.value.str() : std::string(); }

}  // namespace

nlohmann::json to_json(const LemmaVerdict& v) {
  nlohmann::json ctx = {{"n", v.context.n}, {"q", v.context.q}};
  if (v.context.r) ctx["r"] = *v.context.r;
  if (v.context.vertex) ctx["vertex"] = *v.context.vertex;
  if (!v.context.set.empty()) ctx["set"] = v.context.set;
  if (!v.context.note.empty()) ctx["note"] = v.context.note;
  return {{"name", v.name},
          {"holds", v.holds},
          {"hypotheses_met", v.hypotheses_met},
          {"vacuous", v.vacuous},
          {"margin", v.margin.fraction_str()},
          {"context", std::move(ctx)}};
}

nlohmann::json to_json(const TwoPathVerdict& v) {
  auto j = to_json(v.verdict);
  const auto& d = v.details;
  j["details"] = {{"k", d.k},
                  {"sum_degrees", d.sum_degrees},
                  {"x_size", d.x_size},
                  {"L", d.L},
                  {"m_by_pairs", d.m_by_pairs},
                  {"m_by_middle", d.m_by_middle},
                  {"lhs", d.lhs.fraction_str()},
                  {"jensen_bound", d.jensen_bound.fraction_str()},
                  {"literal_margin", d.literal_margin.fraction_str()},
                  {"intermediates_hold", v.all_intermediates_hold()}};
  return j;
}

nlohmann::json to_json(const DeficiencyProfile& p) {
  return {{"q", p.q},
          {"S", p.S.size()},
          {"S_q1", p.S_q1.size()},
          {"S_plus", p.S_plus.size()},
          {"f_S", p.fS},
          {"f_S_plus", p.fSplus},
          {"f_total", p.total()}};
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j = {{"which", std::string(to_string(c.which))},
                      {"q", c.q},
                      {"r", c.r},
                      {"n", c.n.fraction_str()},
                      {"k", c.k.fraction_str()},
                      {"m0", c.m0.fraction_str()},
                      {"d_floor", c.d_floor.fraction_str()},
                      {"s_lo", c.s_lo.fraction_str()},
                      {"s_hi", c.s_hi.fraction_str()},
                      {"verdict", std::string(to_string(c.verdict))}};
  if (c.verdict != Verdict::kInapplicable) {
    j["lead_coeff"] = c.lead_coeff.fraction_str();
    j["value_lo"] = c.value_lo.fraction_str();
    j["value_hi"] = c.value_hi.fraction_str();
  }
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

nlohmann::json to_json(const ThresholdResult& t) {
  nlohmann::json j = {{"which", std::string(to_string(t.which))},
                      {"q0", nullptr},
                      {"points", t.points},
                      {"failures", t.failures},
                      {"last_failing_q", nullptr}};
  if (t.q0) j["q0"] = *t.q0;
  if (t.last_failing_q) j["last_failing_q"] = *t.last_failing_q;
  j["status"] = t.q0 ? "found" : "scan-exhausted";
  return j;
}

nlohmann::json to_json(const SearchResult& r) {
  return {{"n", r.n},
          {"value", r.value},
          {"witness_g6", graph6_encode(r.witness)},
          {"nodes_explored", r.nodes_explored},
          {"status", std::string(to_string(r.status))},
          {"lo", r.lo},
          {"hi", r.hi},
          {"seconds", r.seconds},
          {"solver_version", std::string(kSolverVersion)}};
}

nlohmann::json to_json(const ExpansionCheck& c) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : c.mismatches) {
    mismatches.push_back(
        {{"monomial", exps(m.exponents)}, {"ours", m.ours.fraction_str()}, {"displayed", m.displayed.fraction_str()}});
  }
  return {{"name", c.name}, {"matches", c.matches()}, {"ours", c.ours.str()}, {"mismatches", std::move(mismatches)}};
}

nlohmann::json to_json(const LeadingTermCheck& c) {
  return {{"which", std::string(to_string(c.which))},
          {"t_lo", c.t_lo.fraction_str()},
          {"t_hi", c.t_hi.fraction_str()},
          {"max_value", c.max_value.fraction_str()},
          {"argmax", c.argmax.fraction_str()},
          {"bound", c.bound.fraction_str()},
          {"holds", c.holds()},
          {"tight", c.tight()}};
}

std::string bounds_csv_header() {
  return "n,q,r,class,reiman,erdos_conj,thm3,thm5,eq8,brown_lower,deletion_lower,best_upper,best_lower,n1_member,"
         "n2_member";
}

std::string bounds_csv_row(const BoundReport& rep, const BigRational& eps) {
  char erdos[64];
  std::snprintf(erdos, sizeof erdos, "%.6f", rep.erdos_conj);
  const auto& p = rep.position;
  std::string row;
  auto put = [&](const std::string& s) {
    if (!row.empty()) row += ',';
    row += s;
  };
  put(std::to_string(rep.n));
  put(std::to_string(p.q));
  put(std::to_string(p.r));
  put(std::string(to_string(p.cls)));
  put(std::to_string(rep.reiman.floor));
  put(erdos);
  put(cell(rep.thm3));
  put(cell(rep.thm5));
  put(cell(rep.eq8));
  put(cell(rep.brown_lower));
  put(cell(rep.deletion_lower));
  put(std::to_string(rep.best_upper.value));
  put(rep.best_lower ? std::to_string(rep.best_lower->value) : std::string());
  put(n1_member(rep.n, eps) ? "1" : "0");
  put(n2_member(rep.n, eps) ? "1" : "0");
  return row;
}

}  // namespace c4ex
