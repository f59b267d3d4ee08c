#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "pmetrics/axioms.hpp"
#include "pmetrics/ball.hpp"
#include "pmetrics/convexity.hpp"
#include "pmetrics/errors.hpp"
#include "pmetrics/gauges.hpp"
#include "pmetrics/hausdorff.hpp"
#include "pmetrics/minkowski.hpp"
#include "pmetrics/norm_bridge.hpp"
#include "pmetrics/product_metric.hpp"
#include "pmetrics/sparse.hpp"

#include "csv_io.hpp"
#include "descriptors.hpp"
#include "json_out.hpp"

namespace pm = pmetrics;
namespace cli = pmetrics::cli;
using cli::json_bool;
using cli::json_num;
using cli::json_str;
using cli::json_vec;
using cli::JsonObject;

namespace {

double env_or(const char* name, double fallback) {
  const char* text = std::getenv(name);
  if (!text || !*text) return fallback;
  char* end = nullptr;
  const double value = std::strtod(text, &end);
  if (end == text || *end != '\0')
    throw std::runtime_error(std::string(name) + ": not a number: '" + text + "'");
  return value;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

pm::SampleBox parse_box(const std::string& text) {
  const auto bounds = cli::parse_double_list(text);
  if (bounds.size() != 2 || !(bounds[0] < bounds[1]))
    throw std::invalid_argument("box must be 'lo,hi' with lo < hi, got '" +
                                text + "'");
  return {bounds[0], bounds[1]};
}

pm::GaugeSpec parse_gauge(const std::string& family, double exponent) {
  if (family == "root-power-sum") return pm::GaugeSpec::root_power_sum(exponent);
  if (family == "power-sum") return pm::GaugeSpec::power_sum(exponent);
  throw std::invalid_argument(
      "unknown gauge family '" + family +
      "'; expected root-power-sum or power-sum");
}

// A single-component descriptor is broadcast to point dimension n.
pm::ProductMetricSpec resolve_metric(const std::string& descriptor,
                                     const std::string& p_text, pm::Index n) {
  auto components = cli::parse_metric_list(descriptor);
  const auto p = cli::parse_exponent(p_text);
  if (components.size() == 1 && n > 1)
    return pm::ProductMetricSpec::uniform(components.front(), n, p);
  return pm::ProductMetricSpec(std::move(components), p);
}

std::string violation_json(const pm::AxiomViolation& v) {
  JsonObject o;
  o.field("axiom", json_str(pm::metric_axiom_name(v.axiom)))
      .field("x", json_vec(v.x))
      .field("y", json_vec(v.y))
      .field("z", json_vec(v.z))
      .field("magnitude", json_num(v.magnitude));
  return o.str();
}

struct CommonOpts {
  std::string out;
  double tau = env_or("TAU", pm::kDefaultTau);
};

void add_common(CLI::App* cmd, const std::shared_ptr<CommonOpts>& opts) {
  cmd->add_option("--out", opts->out, "output path (default: stdout)");
  cmd->add_option("--tau", opts->tau,
                  "zero-equality threshold (env TAU overrides the default)");
}

void register_metric_eval(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string metric, p = "2", x, y;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("metric-eval",
                                 "evaluate a product metric between two points");
  cmd->add_option("--metric", opts->metric,
                  "comma list of abs | disc | pow:<s>")->required();
  cmd->add_option("--p", opts->p, "combination exponent >= 1, or inf");
  cmd->add_option("--x", opts->x, "first point, comma-separated")->required();
  cmd->add_option("--y", opts->y, "second point, comma-separated")->required();
  add_common(cmd, opts);
  cmd->callback([opts] {
    const pm::Vector x = cli::parse_vector(opts->x);
    const pm::Vector y = cli::parse_vector(opts->y);
    const auto spec = resolve_metric(opts->metric, opts->p, x.size());
    const double d = pm::product_distance(spec, x, y, opts->tau);
    write_output(opts->out, json_num(d) + "\n");
  });
}

void register_axioms_check(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string metric, p = "2", box = "-10,10";
    pm::Index trials = 10000;
    double tol = 1e-12;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "axioms-check", "random-search falsifier for the metric axioms");
  cmd->add_option("--metric", opts->metric,
                  "comma list of abs | disc | pow:<s>; its length is the dimension")
      ->required();
  cmd->add_option("--p", opts->p, "combination exponent >= 1, or inf");
  cmd->add_option("--box", opts->box, "sampling box lo,hi");
  cmd->add_option("--trials", opts->trials, "random triples to draw");
  cmd->add_option("--tol", opts->tol, "violation tolerance");
  cmd->add_option("--seed", opts->seed, "random seed");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const auto components = cli::parse_metric_list(opts->metric);
    const pm::ProductMetricSpec spec(components, cli::parse_exponent(opts->p));
    const double tau = opts->tau;
    const pm::DistanceFn d = [&spec, tau](const pm::Vector& a, const pm::Vector& b) {
      return pm::product_distance(spec, a, b, tau);
    };
    const auto report =
        pm::check_metric_axioms(d, spec.size(), parse_box(opts->box),
                                opts->trials, opts->tol, opts->seed, tau);

    JsonObject config;
    config.field("subcommand", json_str("axioms-check"))
        .field("metric", json_str(opts->metric))
        .field("p", json_str(opts->p))
        .field("box", json_str(opts->box))
        .field("trials", json_num(opts->trials))
        .field("tol", json_num(opts->tol))
        .field("tau", json_num(opts->tau))
        .field("seed", json_num(static_cast<pm::Index>(opts->seed)));

    std::string violations = "[";
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
      if (i) violations += ',';
      violations += violation_json(report.violations[i]);
    }
    violations += ']';

    JsonObject record;
    record.field("config", config.str())
        .field("trials_run", json_num(report.trials_run))
        .field("falsified", json_bool(report.falsified()))
        .field("violations", violations);
    write_output(opts->out, record.str() + "\n");
  });
}

void register_ball_sample(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string metric, p = "2", center = "0,0";
    double r = 1.0, tol = 1e-9;
    pm::Index dirs = 360;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "ball-sample", "sample a planar ball boundary as theta,x,y CSV rows");
  cmd->add_option("--metric", opts->metric, "comma list of abs | pow:<s>")->required();
  cmd->add_option("--p", opts->p, "combination exponent >= 1, or inf");
  cmd->add_option("--r", opts->r, "ball radius > 0");
  cmd->add_option("--center", opts->center, "ball center, comma-separated");
  cmd->add_option("--dirs", opts->dirs, "number of directions");
  cmd->add_option("--tol", opts->tol, "boundary tolerance on |d - r|");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const pm::Vector center = cli::parse_vector(opts->center);
    const auto spec = resolve_metric(opts->metric, opts->p, center.size());
    const pm::BallSpec ball{center, opts->r, pm::BallMetric::product(spec), true};
    const auto boundary = pm::ball_boundary_sample_2d(ball, opts->dirs, opts->tol);
    std::string csv;
    for (const auto& sample : boundary)
      csv += json_num(sample.theta) + "," + json_num(sample.point.x()) + "," +
             json_num(sample.point.y()) + "\n";
    write_output(opts->out, csv);
  });
}

void register_ball_nest(CLI::App& app) {
  struct Opts : CommonOpts {
    double r = 0.5, s_fine = 0.25, s_coarse = 0.75;
    pm::Index dim = 2, samples = 10000;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "ball-nest", "sampled inclusion check between d_s balls of equal radius");
  cmd->add_option("--r", opts->r, "ball radius")->required();
  cmd->add_option("--s-fine", opts->s_fine, "smaller exponent in (0, 1)");
  cmd->add_option("--s-coarse", opts->s_coarse, "larger exponent in (0, 1]");
  cmd->add_option("--dim", opts->dim, "ambient dimension");
  cmd->add_option("--samples", opts->samples, "points to sample");
  cmd->add_option("--seed", opts->seed, "random seed");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const auto report = pm::ball_nesting_check(
        opts->r, opts->s_fine, opts->s_coarse, opts->dim, opts->samples, opts->seed);

    JsonObject config;
    config.field("subcommand", json_str("ball-nest"))
        .field("r", json_num(opts->r))
        .field("s_fine", json_num(opts->s_fine))
        .field("s_coarse", json_num(opts->s_coarse))
        .field("dim", json_num(opts->dim))
        .field("samples", json_num(opts->samples))
        .field("seed", json_num(static_cast<pm::Index>(opts->seed)));

    std::string counterexamples = "[";
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
      if (i) counterexamples += ',';
      counterexamples += json_vec(report.counterexamples[i]);
    }
    counterexamples += ']';

    JsonObject record;
    record.field("config", config.str())
        .field("regime", json_str(pm::nesting_regime_name(report.regime)))
        .field("samples_tested", json_num(report.samples_tested))
        .field("antecedent_hits", json_num(report.antecedent_hits))
        .field("violations", json_num(static_cast<pm::Index>(report.counterexamples.size())))
        .field("counterexamples", counterexamples);
    write_output(opts->out, record.str() + "\n");
  });
}

void register_limit_scan(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string x, y, s_list = "1,0.5,0.25,0.1,0.05,0.01,0.005,0.001";
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "limit-scan", "d_s trajectory as s,value CSV rows; the final row is 0,d_0");
  cmd->add_option("--x", opts->x, "first point")->required();
  cmd->add_option("--y", opts->y, "second point (default: origin)");
  cmd->add_option("--s-list", opts->s_list, "comma list of exponents in (0, 1]");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const pm::Vector x = cli::parse_vector(opts->x);
    const pm::Vector y =
        opts->y.empty() ? pm::Vector(pm::Vector::Zero(x.size())) : cli::parse_vector(opts->y);
    const auto scan =
        pm::limit_scan(x, y, cli::parse_double_list(opts->s_list), opts->tau);
    std::string csv;
    for (const auto& [s, value] : scan.values)
      csv += json_num(s) + "," + json_num(value) + "\n";
    csv += "0," + json_num(scan.support) + "\n";
    write_output(opts->out, csv);
  });
}

void register_convexity_check(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string family = "root-power-sum", box = "-1,1";
    double exponent = 0.5, tol = 1e-9;
    pm::Index dim = 2, trials = 10000;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("convexity-check",
                                 "falsify convexity of a gauge by chord sampling");
  cmd->add_option("--family", opts->family, "root-power-sum | power-sum");
  cmd->add_option("--exponent", opts->exponent, "gauge exponent > 0")->required();
  cmd->add_option("--dim", opts->dim, "ambient dimension");
  cmd->add_option("--box", opts->box, "sampling box lo,hi");
  cmd->add_option("--trials", opts->trials, "random chords to draw");
  cmd->add_option("--tol", opts->tol, "violation tolerance");
  cmd->add_option("--seed", opts->seed, "random seed");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const auto gauge = parse_gauge(opts->family, opts->exponent);
    const pm::ScalarFieldFn f = [gauge](const pm::Vector& v) {
      return pm::gauge_value(gauge, v);
    };
    const auto witness = pm::check_convexity(f, opts->dim, parse_box(opts->box),
                                             opts->trials, opts->tol, opts->seed);

    JsonObject config;
    config.field("subcommand", json_str("convexity-check"))
        .field("family", json_str(opts->family))
        .field("exponent", json_num(opts->exponent))
        .field("dim", json_num(opts->dim))
        .field("box", json_str(opts->box))
        .field("trials", json_num(opts->trials))
        .field("tol", json_num(opts->tol))
        .field("seed", json_num(static_cast<pm::Index>(opts->seed)));

    JsonObject record;
    record.field("config", config.str())
        .field("violation_found", json_bool(witness.has_value()));
    if (witness) {
      JsonObject w;
      w.field("x", json_vec(witness->x))
          .field("y", json_vec(witness->y))
          .field("t", json_num(witness->t))
          .field("chord_value", json_num(witness->chord_value))
          .field("chord_bound", json_num(witness->chord_bound))
          .field("magnitude", json_num(witness->magnitude))
          .field("nonfinite", json_bool(witness->nonfinite));
      record.field("witness", w.str());
    }
    write_output(opts->out, record.str() + "\n");
  });
}

void register_homogeneity_check(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string family = "root-power-sum";
    double exponent = 0.5, tol = 1e-9;
    pm::Index dim = 2, trials = 10000;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("homogeneity-check",
                                 "falsify positive homogeneity of a gauge");
  cmd->add_option("--family", opts->family, "root-power-sum | power-sum");
  cmd->add_option("--exponent", opts->exponent, "gauge exponent > 0")->required();
  cmd->add_option("--dim", opts->dim, "ambient dimension");
  cmd->add_option("--trials", opts->trials, "random scalings to draw");
  cmd->add_option("--tol", opts->tol, "violation tolerance");
  cmd->add_option("--seed", opts->seed, "random seed");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const auto gauge = parse_gauge(opts->family, opts->exponent);
    const pm::ScalarFieldFn f = [gauge](const pm::Vector& v) {
      return pm::gauge_value(gauge, v);
    };
    const auto witness =
        pm::check_homogeneity(f, opts->dim, opts->trials, opts->tol, opts->seed);

    JsonObject config;
    config.field("subcommand", json_str("homogeneity-check"))
        .field("family", json_str(opts->family))
        .field("exponent", json_num(opts->exponent))
        .field("dim", json_num(opts->dim))
        .field("trials", json_num(opts->trials))
        .field("tol", json_num(opts->tol))
        .field("seed", json_num(static_cast<pm::Index>(opts->seed)));

    JsonObject record;
    record.field("config", config.str())
        .field("violation_found", json_bool(witness.has_value()));
    if (witness) {
      JsonObject w;
      w.field("x", json_vec(witness->x))
          .field("lambda", json_num(witness->lambda))
          .field("scaled_value", json_num(witness->scaled_value))
          .field("expected_value", json_num(witness->expected_value))
          .field("magnitude", json_num(witness->magnitude))
          .field("nonfinite", json_bool(witness->nonfinite));
      record.field("witness", w.str());
    }
    write_output(opts->out, record.str() + "\n");
  });
}

void register_hausdorff(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string k_path, a_path, metric = "abs", p = "2";
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "hausdorff", "Hausdorff distance between two CSV point sets");
  cmd->add_option("--K", opts->k_path, "CSV file, one point per row")->required();
  cmd->add_option("--A", opts->a_path, "CSV file, one point per row")->required();
  cmd->add_option("--metric", opts->metric,
                  "comma list of abs | disc | pow:<s>; a single entry is "
                  "broadcast to the point dimension");
  cmd->add_option("--p", opts->p, "combination exponent >= 1, or inf");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const pm::Matrix k = cli::read_csv_matrix(opts->k_path);
    const pm::Matrix a = cli::read_csv_matrix(opts->a_path);
    const auto spec = resolve_metric(opts->metric, opts->p, k.cols());
    const double ka = pm::directed_hausdorff(k, a, spec, opts->tau);
    const double ak = pm::directed_hausdorff(a, k, spec, opts->tau);

    JsonObject config;
    config.field("subcommand", json_str("hausdorff"))
        .field("K", json_str(opts->k_path))
        .field("A", json_str(opts->a_path))
        .field("metric", json_str(opts->metric))
        .field("p", json_str(opts->p))
        .field("tau", json_num(opts->tau));

    JsonObject record;
    record.field("config", config.str())
        .field("directed_ka", json_num(ka))
        .field("directed_ak", json_num(ak))
        .field("hausdorff", json_num(std::max(ka, ak)));
    write_output(opts->out, record.str() + "\n");
  });
}

void register_minkowski(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string ball_p = "2", x;
    double tol = 1e-6, inner_r = 0.0, outer_r = 0.0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "minkowski",
      "Minkowski functional of an open unit p-norm ball at a point");
  cmd->add_option("--ball-p", opts->ball_p, "norm order of the body: >= 1 or inf");
  cmd->add_option("--x", opts->x, "evaluation point")->required();
  cmd->add_option("--tol", opts->tol, "absolute bisection tolerance");
  cmd->add_option("--inner-r", opts->inner_r,
                  "override the inscribed euclidean radius");
  cmd->add_option("--outer-r", opts->outer_r,
                  "override the circumscribed euclidean radius");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const pm::Vector x = cli::parse_vector(opts->x);
    const auto p = cli::parse_exponent(opts->ball_p);
    const double n = static_cast<double>(x.size());
    const double inv_p = p.is_infinity() ? 0.0 : 1.0 / p.value();
    const double ratio = std::pow(n, 0.5 - inv_p);
    pm::ConvexBodyOracle body{
        [p](const pm::Vector& v) { return pm::p_norm(v, p) < 1.0; },
        opts->inner_r > 0.0 ? opts->inner_r : std::min(1.0, ratio),
        opts->outer_r > 0.0 ? opts->outer_r : std::max(1.0, ratio)};
    const double value = pm::minkowski_functional(body, x, opts->tol);

    JsonObject config;
    config.field("subcommand", json_str("minkowski"))
        .field("ball_p", json_str(opts->ball_p))
        .field("x", json_vec(x))
        .field("tol", json_num(opts->tol))
        .field("inner_r", json_num(body.inner_radius))
        .field("outer_r", json_num(body.outer_radius));

    JsonObject record;
    record.field("config", config.str()).field("value", json_num(value));
    write_output(opts->out, record.str() + "\n");
  });
}

void register_sparse_solve(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string a_path, b_path;
    double residual_tol = env_or("RESIDUAL_TOL", pm::kDefaultResidualTol);
    pm::Index max_support = -1;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "sparse-solve", "exact minimum-support solution by support enumeration");
  cmd->add_option("--A", opts->a_path, "CSV matrix")->required();
  cmd->add_option("--b", opts->b_path, "CSV right-hand side")->required();
  cmd->add_option("--residual-tol", opts->residual_tol,
                  "feasibility residual (env RESIDUAL_TOL overrides the default)");
  cmd->add_option("--max-support", opts->max_support,
                  "largest support cardinality to enumerate (-1: all)");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const pm::LinearSystem sys(cli::read_csv_matrix(opts->a_path),
                               cli::read_csv_vector(opts->b_path));
    const auto result =
        pm::l0_min_bruteforce(sys, opts->residual_tol, opts->max_support, opts->tau);

    JsonObject config;
    config.field("subcommand", json_str("sparse-solve"))
        .field("A", json_str(opts->a_path))
        .field("b", json_str(opts->b_path))
        .field("residual_tol", json_num(opts->residual_tol))
        .field("max_support", json_num(opts->max_support))
        .field("tau", json_num(opts->tau));

    JsonObject record;
    record.field("config", config.str())
        .field("feasible", json_bool(result.solution.has_value()))
        .field("supports_tried", json_num(result.supports_tried))
        .field("best_residual", json_num(result.best_residual));
    if (result.solution) {
      record.field("support", cli::json_indices_1based(result.solution->support))
          .field("x", json_vec(result.solution->x))
          .field("residual", json_num(result.solution->residual));
    }
    write_output(opts->out, record.str() + "\n");
  });
}

void register_surrogate_rank(CLI::App& app) {
  struct Opts : CommonOpts {
    std::string a_path, b_path;
    double s = 0.5;
    double residual_tol = env_or("RESIDUAL_TOL", pm::kDefaultResidualTol);
    pm::Index samples = 64;
    std::uint64_t seed = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "surrogate-rank",
      "rank sampled exact solutions by the d_s sparsity surrogate");
  cmd->add_option("--A", opts->a_path, "CSV matrix")->required();
  cmd->add_option("--b", opts->b_path, "CSV right-hand side")->required();
  cmd->add_option("--s", opts->s, "surrogate exponent in (0, 1]");
  cmd->add_option("--samples", opts->samples, "exact solutions to sample");
  cmd->add_option("--seed", opts->seed, "random seed");
  cmd->add_option("--residual-tol", opts->residual_tol,
                  "feasibility residual (env RESIDUAL_TOL overrides the default)");
  add_common(cmd, opts);
  cmd->callback([opts] {
    const pm::LinearSystem sys(cli::read_csv_matrix(opts->a_path),
                               cli::read_csv_vector(opts->b_path));
    const auto ranking = pm::surrogate_ranking_experiment(
        sys, opts->s, opts->samples, opts->seed, opts->residual_tol, opts->tau);

    JsonObject config;
    config.field("subcommand", json_str("surrogate-rank"))
        .field("A", json_str(opts->a_path))
        .field("b", json_str(opts->b_path))
        .field("s", json_num(opts->s))
        .field("samples", json_num(opts->samples))
        .field("seed", json_num(static_cast<pm::Index>(opts->seed)))
        .field("residual_tol", json_num(opts->residual_tol))
        .field("tau", json_num(opts->tau));

    const auto row_json = [](const pm::SurrogateRanking::Row& row, bool with_x) {
      JsonObject o;
      if (with_x) o.field("x", json_vec(row.x));
      o.field("ds", json_num(row.ds_value))
          .field("l0", json_num(row.support_size))
          .field("is_l0_optimum", json_bool(row.is_l0_optimum));
      return o.str();
    };

    std::string table = "[";
    for (std::size_t i = 0; i < ranking.table.size(); ++i) {
      if (i) table += ',';
      table += row_json(ranking.table[i], false);
    }
    table += ']';

    JsonObject record;
    record.field("config", config.str())
        .field("argmin_agreement", json_bool(ranking.argmin_agreement))
        .field("surrogate_min",
               row_json(ranking.table[static_cast<std::size_t>(ranking.surrogate_argmin)], true))
        .field("l0_min",
               row_json(ranking.table[static_cast<std::size_t>(ranking.l0_row)], true))
        .field("table", table);
    write_output(opts->out, record.str() + "\n");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pmetrics: product metrics, sparsity measures, ball geometry, and a "
      "brute-force sparse-recovery harness"};
  app.require_subcommand(1);

  try {
    register_metric_eval(app);
    register_axioms_check(app);
    register_ball_sample(app);
    register_ball_nest(app);
    register_limit_scan(app);
    register_convexity_check(app);
    register_homogeneity_check(app);
    register_hausdorff(app);
    register_minkowski(app);
    register_sparse_solve(app);
    register_surrogate_rank(app);

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, usage errors exit 2
  } catch (const std::exception& e) {
    JsonObject record;
    record.field("error", json_str("domain")).field("message", json_str(e.what()));
    std::cerr << record.str() << "\n";
    return 1;
  }
  return 0;
}
