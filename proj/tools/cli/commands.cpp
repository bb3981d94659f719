#include "cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli/report_json.hpp"
#include "grlab/errors.hpp"
#include "grlab/generators.hpp"
#include "grlab/io.hpp"

#ifndef GRLAB_VERSION
#define GRLAB_VERSION "dev"
#endif

namespace grlab::cli {
namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::string mode;
  unsigned threads = 0;
  std::string plot_dir;
  double tolerance = 1e-12;
};

struct Input {
  WeightedGrid wg;
  std::string digest;
  EnumerationMode mode;
};

Input load_input(const std::string& path, const GlobalOptions& g) {
  const std::string bytes = io::read_file(path);
  Input in;
  in.wg = fs::path(path).extension() == ".csv" ? io::parse_wgrid_csv(bytes) : io::parse_wgrid_json(bytes);
  in.digest = io::sha256_hex(bytes);
  in.mode = g.mode.empty() ? EnumerationMode::default_for(in.wg.grid()) : EnumerationMode::parse(g.mode);
  CubeFamily(in.wg.grid(), in.mode);  // mode/grid compatibility
  return in;
}

json report(const std::string& command, const Input& in, json payload) {
  return json{{"tool_version", GRLAB_VERSION},
              {"command", command},
              {"input_digest", in.digest},
              {"shape", in.wg.grid().shape()},
              {"mode", in.mode.to_string()},
              {"conventions",
               {"cubes with zero mass are skipped",
                "cubes with f_Q = 0 are skipped in level-set and ratio scans (ratio 0 for oscillation)",
                "f* is right-continuous: f*(t) = min{s : mu{f > s} <= t}"}},
              {"payload", std::move(payload)}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void write_plot(const GlobalOptions& g, const std::string& name, const std::string& csv) {
  if (g.plot_dir.empty()) return;
  fs::create_directories(g.plot_dir);
  io::write_file(fs::path(g.plot_dir) / name, csv);
}

std::string csv_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::vector<double> default_beta_grid() {
  std::vector<double> b;
  for (int k = 1; k <= 19; ++k) b.push_back(0.05 * k);
  return b;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

int cmd_analyze(const GlobalOptions& g, const std::string& path, std::vector<double> betas, std::ostream& out,
                std::ostream& err) {
  const Input in = load_input(path, g);
  if (betas.empty()) betas = default_beta_grid();
  for (double b : betas) require(b > 0.0 && b < 1.0, "--beta-grid entries must lie in (0, 1)");

  const GRResult gr = gr_epsilon(in.wg, in.mode, g.threads);
  json profile = json::array();
  std::string alpha_csv = "beta,alpha_star\n";
  for (double b : betas) {
    const AlphaProfile ap = alpha_profile(in.wg, b, in.mode, g.threads);
    profile.push_back(to_json(ap));
    alpha_csv += csv_number(b) + "," + csv_number(ap.alpha_star) + "\n";
  }
  const StepFunction sf = rearrangement(in.wg);
  write_plot(g, "rearrangement.csv", to_csv(sf));
  write_plot(g, "alpha_profile.csv", alpha_csv);

  json payload{{"total_mass", in.wg.total_mass()},
               {"gr", to_json(gr)},
               {"alpha_profile", std::move(profile)},
               {"rearrangement", to_json(sf)}};
  emit(out, report("analyze", in, std::move(payload)));
  err << "epsilon = " << gr.epsilon << " at " << gr.witness.to_string() << " (" << gr.cubes_scanned
      << " cubes, mode " << in.mode.to_string() << ")\n";
  return kOk;
}

struct Theorem1Flags {
  std::string direction = "fwd";
  std::optional<double> epsilon;
  std::optional<double> lambda;
  std::optional<double> alpha;
  std::optional<double> beta;
};

int cmd_theorem1(const GlobalOptions& g, const std::string& path, const Theorem1Flags& f, std::ostream& out,
                 std::ostream& err) {
  require(f.direction == "fwd" || f.direction == "rev", "--direction must be fwd or rev");
  if (f.direction == "fwd") {
    require(!f.alpha && !f.beta, "--alpha/--beta apply to --direction rev");
    const Input in = load_input(path, g);
    double eps = 0.0;
    if (f.epsilon) {
      eps = *f.epsilon;
    } else {
      eps = gr_epsilon(in.wg, in.mode, g.threads).epsilon;
    }
    const double lambda = f.lambda.value_or((eps + 2.0) / 2.0);
    require(eps > 0.0 && eps < lambda && lambda < 2.0, "need 0 < epsilon < lambda < 2");
    const LevelParams lp = thm1_forward_params(eps, lambda);
    const MarginReport m = verify_thm1_forward(in.wg, eps, lambda, in.mode, g.threads, g.tolerance);
    json payload{{"direction", "fwd"},
                 {"epsilon", eps},
                 {"lambda", lambda},
                 {"alpha", lp.alpha},
                 {"beta", lp.beta},
                 {"result", to_json(m)}};
    emit(out, report("theorem1", in, std::move(payload)));
    err << "forward: worst margin " << m.worst_margin << " at " << m.witness.to_string() << " -> "
        << (m.holds ? "holds" : "FAILS") << '\n';
    return m.holds ? kOk : kDoesNotHold;
  }

  require(f.alpha && f.beta, "--direction rev needs --alpha and --beta");
  require(!f.epsilon && !f.lambda, "--epsilon/--lambda apply to --direction fwd");
  require(*f.alpha > 0.0 && *f.alpha < 1.0 && *f.beta > 0.0 && *f.beta < 1.0, "need 0 < alpha, beta < 1");
  const Input in = load_input(path, g);
  const LevelParams lp = LevelParams::make(*f.alpha, *f.beta);
  const MarginReport m = verify_thm1_reverse(in.wg, lp, in.mode, g.threads, g.tolerance);
  json payload{{"direction", "rev"},
               {"alpha", lp.alpha},
               {"beta", lp.beta},
               {"bound", thm1_reverse_bound(lp)},
               {"result", to_json(m)}};
  emit(out, report("theorem1", in, std::move(payload)));
  err << "reverse: worst margin " << m.worst_margin << " at " << m.witness.to_string() << " -> "
      << (m.holds ? "holds" : "FAILS") << '\n';
  return m.holds ? kOk : kDoesNotHold;
}

struct Theorem2Flags {
  std::optional<double> epsilon;
  std::optional<double> lambda;
  std::optional<double> rho;
  std::vector<double> t_values;
};

int cmd_theorem2(const GlobalOptions& g, const std::string& path, const Theorem2Flags& f, std::ostream& out,
                 std::ostream& err) {
  const Input in = load_input(path, g);
  const double eps = f.epsilon ? *f.epsilon : gr_epsilon(in.wg, in.mode, g.threads).epsilon;
  require(eps > 0.0 && eps < 2.0, "epsilon must lie in (0, 2); pass --epsilon for constant inputs");
  const double lambda = f.lambda.value_or((eps + 2.0) / 2.0);
  require(eps < lambda && lambda < 2.0, "need epsilon < lambda < 2");
  const double rho = f.rho.value_or((1.0 - lambda / 2.0) / 2.0);
  require(rho > 0.0 && rho < 1.0 - lambda / 2.0, "need 0 < rho < 1 - lambda/2");
  const double total = in.wg.total_mass();

  Thm2Params params{eps, lambda, rho, f.t_values};
  if (params.t_values.empty()) {
    for (int k = 1; k <= 10; ++k) params.t_values.push_back(rho * total * k / 10.0);
  }
  for (double t : params.t_values) {
    require(t > 0.0 && t <= rho * total, "--t values must lie in (0, rho mu(Q_0)] = (0, " + csv_number(rho * total) + "]");
  }

  const Thm2Report r = verify_thm2(in.wg, params, in.mode, g.threads, g.tolerance);

  if (!g.plot_dir.empty()) {
    const StepFunction sf = rearrangement(in.wg);
    std::string csv = "t,fstar,fstarstar\n";
    constexpr int kPoints = 256;
    for (int k = 1; k <= kPoints; ++k) {
      const double t = sf.total_mass() * k / kPoints;
      csv += csv_number(t) + "," + csv_number(sf.evaluate(t)) + "," + csv_number(sf.average(t)) + "\n";
    }
    write_plot(g, "fstar.csv", csv);
  }

  json payload{{"epsilon", eps}, {"lambda", lambda}, {"rho", rho}, {"result", to_json(r)}};
  emit(out, report("theorem2", in, std::move(payload)));
  err << "theorem2: " << r.per_t.size() << " t values, overlap " << r.covering_constants.overlap << " -> "
      << (r.all_hold ? "holds" : "FAILS") << '\n';
  return r.all_hold ? kOk : kDoesNotHold;
}

struct RhFlags {
  std::optional<double> p;
  bool automatic = false;
  double B = 1.0;
  bool B_from_covering = false;
  double delta = 1e-6;
};

int cmd_rh(const GlobalOptions& g, const std::string& path, const RhFlags& f, std::ostream& out, std::ostream& err) {
  require(f.p.has_value() != f.automatic, "rh needs exactly one of --p and --auto");
  if (f.p) require(*f.p > 1.0, "--p must exceed 1");
  require(f.B >= 1.0, "--B must be >= 1");
  const Input in = load_input(path, g);

  json payload;
  double p = f.p.value_or(0.0);
  if (f.automatic) {
    const GRResult gr = gr_epsilon(in.wg, in.mode, g.threads);
    require(gr.epsilon > 0.0, "--auto needs a non-constant input (measured epsilon is 0)");
    double B = f.B;
    if (f.B_from_covering) {
      const double lambda = (gr.epsilon + 2.0) / 2.0;
      const double rho = (1.0 - lambda / 2.0) / 2.0;
      const double t = rho * in.wg.total_mass();
      const StepFunction sf = rearrangement(in.wg);
      const CoveringResult cover = build_covering(in.wg, level_set_above(in.wg, sf.evaluate(t)), rho, 1.0 - lambda / 2.0);
      B = static_cast<double>(cover.overlap);
    }
    const RhOptimum opt = optimize_rh_exponent(gr.epsilon, B, f.delta);
    p = opt.p_star;
    json a = to_json(opt);
    a["epsilon_measured"] = gr.epsilon;
    a["B"] = B;
    a["B_from_covering"] = f.B_from_covering;
    a["delta"] = f.delta;
    payload["auto"] = std::move(a);
  }
  const RhConstant rc = rh_constant(in.wg, p, in.mode, g.threads);
  payload["result"] = to_json(rc);

  if (!g.plot_dir.empty()) {
    std::string csv = "p,c_hat\n";
    for (int k = 5; k <= 16; ++k) {
      const double pk = 0.25 * k;
      csv += csv_number(pk) + "," + csv_number(rh_constant(in.wg, pk, in.mode, g.threads).c_hat) + "\n";
    }
    write_plot(g, "rh_profile.csv", csv);
  }

  emit(out, report("rh", in, std::move(payload)));
  err << "rh: p = " << p << ", c_hat = " << rc.c_hat << " at " << rc.witness.to_string() << '\n';
  return kOk;
}

int cmd_generate(const std::string& spec_arg, const std::string& output, std::ostream& out, std::ostream& err) {
  const std::string text =
      !spec_arg.empty() && spec_arg.front() == '{' ? spec_arg : io::read_file(spec_arg);
  const gen::GenSpec spec = io::parse_genspec(text);
  const std::string wgrid = io::to_wgrid_json(gen::generate(spec));
  const std::string digest = io::sha256_hex(wgrid);
  if (output.empty()) {
    out << wgrid;
    err << "digest " << digest << '\n';
    return kOk;
  }
  io::write_file(output, wgrid);
  emit(out, json{{"tool_version", GRLAB_VERSION},
                 {"command", "generate"},
                 {"spec", json::parse(io::genspec_to_json(spec))},
                 {"digest", digest}});
  err << "wrote " << output << " (sha256 " << digest << ")\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"grlab: mean oscillation, GR and A_inf analysis of weighted grid data"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--mode", g.mode, "Cube family: all | dyadic | sample:COUNT:SEED (default: all in 1D, dyadic otherwise)");
  app.add_option("--threads", g.threads, "Worker threads, 0 = hardware concurrency");
  app.add_option("--plot-dir", g.plot_dir, "Directory for CSV plot data");
  app.add_option("--tolerance", g.tolerance, "Relative tolerance for inequality checks")->check(CLI::PositiveNumber);

  std::string input;
  std::vector<double> betas;
  auto* analyze = app.add_subcommand("analyze", "GR parameter, alpha profile and rearrangement of a wgrid file");
  analyze->add_option("input", input, "wgrid JSON or 1D CSV")->required();
  analyze->add_option("--beta-grid", betas, "Comma-separated beta values (default 0.05..0.95)")->delimiter(',');

  Theorem1Flags t1;
  auto* theorem1 = app.add_subcommand("theorem1", "Verify both directions of the GR / level-set equivalence");
  theorem1->add_option("input", input)->required();
  theorem1->add_option("--direction", t1.direction, "fwd or rev");
  theorem1->add_option("--epsilon", t1.epsilon, "GR parameter (default: measured)");
  theorem1->add_option("--lambda", t1.lambda, "lambda in (epsilon, 2) (default: (epsilon + 2)/2)");
  theorem1->add_option("--alpha", t1.alpha);
  theorem1->add_option("--beta", t1.beta);

  Theorem2Flags t2;
  auto* theorem2 = app.add_subcommand("theorem2", "Verify f** <= K f* with measured covering constants");
  theorem2->add_option("input", input)->required();
  theorem2->add_option("--epsilon", t2.epsilon, "GR parameter (default: measured)");
  theorem2->add_option("--lambda", t2.lambda, "default (epsilon + 2)/2");
  theorem2->add_option("--rho", t2.rho, "default (1 - lambda/2)/2");
  theorem2->add_option("--t", t2.t_values, "Comma-separated t values in (0, rho mu(Q_0)]")->delimiter(',');

  RhFlags rh;
  auto* rh_cmd = app.add_subcommand("rh", "Empirical reverse-Hölder constant");
  rh_cmd->add_option("input", input)->required();
  rh_cmd->add_option("--p", rh.p, "Exponent p > 1");
  rh_cmd->add_flag("--auto", rh.automatic, "Use the optimized exponent bound for the measured epsilon");
  rh_cmd->add_option("--B", rh.B, "Overlap constant for --auto (default 1)");
  rh_cmd->add_flag("--B-from-covering", rh.B_from_covering, "Measure the overlap constant from a covering");
  rh_cmd->add_option("--delta", rh.delta, "Safety gap below rho < 1 - lambda/2 for --auto");

  std::string spec;
  std::string output;
  auto* generate = app.add_subcommand("generate", "Write a generated wgrid file");
  generate->add_option("--spec", spec, "GenSpec JSON, inline or a file path")->required();
  generate->add_option("-o,--output", output, "Output path (default: stdout)");

  for (auto* sub : {analyze, theorem1, theorem2, rh_cmd, generate}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(g, input, betas, out, err);
    if (*theorem1) return cmd_theorem1(g, input, t1, out, err);
    if (*theorem2) return cmd_theorem2(g, input, t2, out, err);
    if (*rh_cmd) return cmd_rh(g, input, rh, out, err);
    if (*generate) return cmd_generate(spec, output, out, err);
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace grlab::cli
