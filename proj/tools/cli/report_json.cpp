#include "cli/report_json.hpp"

namespace grlab::cli {
namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const Cube& q) { return json{{"origin", q.origin}, {"side", q.side}}; }

json to_json(const GRResult& r) {
  return json{{"epsilon", r.epsilon},
              {"witness", to_json(r.witness)},
              {"mode", r.mode.to_string()},
              {"cubes_scanned", r.cubes_scanned}};
}

json to_json(const MarginReport& r) {
  return json{{"worst_margin", r.worst_margin},
              {"worst_relative_margin", r.worst_relative_margin},
              {"witness", to_json(r.witness)},
              {"mode", r.mode.to_string()},
              {"holds", r.holds},
              {"tolerance", r.tolerance},
              {"cubes_scanned", r.cubes_scanned}};
}

json to_json(const AlphaProfile& r) {
  return json{{"beta", r.beta},
              {"alpha_star", r.alpha_star},
              {"witness", to_json(r.witness)},
              {"cubes_scanned", r.cubes_scanned}};
}

json to_json(const StepFunction& sf) {
  return json{{"total_mass", sf.total_mass()}, {"breakpoints", sf.breakpoints()}, {"levels", sf.levels()}};
}

json to_json(const CoveringResult& r) {
  json cubes = json::array();
  for (const auto& q : r.cubes) cubes.push_back(to_json(q));
  return json{{"cubes", std::move(cubes)},
              {"rho_lo", r.rho_lo},
              {"rho_hi", r.rho_hi},
              {"overlap", r.overlap},
              {"covered", r.covered}};
}

json to_json(const CoveringConstants& c) {
  return json{{"rho_lo", c.rho_lo}, {"rho_hi", c.rho_hi}, {"overlap", c.overlap}, {"cubes", c.cubes}};
}

json to_json(const Thm2Report& r) {
  json rows = json::array();
  for (const auto& rec : r.per_t) {
    rows.push_back(json{{"t", rec.t},
                        {"fstar", rec.fstar},
                        {"fstarstar", rec.fstarstar},
                        {"K_nominal", rec.k_nominal},
                        {"K_achieved", rec.k_achieved},
                        {"eq4_margin", optional_number(rec.eq4_margin)},
                        {"eq5_margin", optional_number(rec.eq5_margin)},
                        {"margins_hold", rec.margins_hold},
                        {"holds", rec.holds},
                        {"degenerate", rec.degenerate},
                        {"covering", to_json(rec.covering)}});
  }
  return json{{"mode", r.mode.to_string()},
              {"epsilon_measured", r.epsilon_measured},
              {"per_t", std::move(rows)},
              {"covering_constants", to_json(r.covering_constants)},
              {"all_hold", r.all_hold},
              {"tolerance", r.tolerance}};
}

json to_json(const RhConstant& r) {
  return json{{"p", r.p}, {"c_hat", r.c_hat}, {"witness", to_json(r.witness)}, {"cubes_scanned", r.cubes_scanned}};
}

json to_json(const RhOptimum& r) {
  return json{{"lambda_star", r.lambda_star},
              {"rho_star", r.rho_star},
              {"p_star", r.p_star},
              {"grid_fallback", r.grid_fallback}};
}

}  // namespace grlab::cli
