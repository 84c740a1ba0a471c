#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frac/error.hpp"
#include "frac/fde.hpp"
#include "frac/hypergeometric.hpp"
#include "frac/io.hpp"
#include "frac/series.hpp"
#include "frac/special.hpp"
#include "frac/verify.hpp"

namespace frac::cli {
namespace {

using nlohmann::ordered_json;

struct Params {
  double order = 0.0;
  double x = 0.0;
  std::string sample;
  double alpha = 0.5;
  double beta = 1.0;
  double base = 0.0;
  double cutoff = 5.0;
  double z = 0.0;
  double tol = 1e-12;
  double a = 0.0;
  std::size_t k = 0;
  double y0 = 0.0;
  double shift = 0.0;
  std::size_t grid = 0;
  std::vector<double> upper, lower, fcoef, gcoef;
  bool residual = false;
  std::string in, out, problem;
  std::string format = "json";
};

// Failure of the computation to pass its own checks: exit 2.
struct VerificationFailed {};

struct Context {
  Params p;
  std::ostream& out;
  CLI::App* leaf = nullptr;
  std::string command;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

// Accepts a bare object or one wrapped in an output envelope under `field`.
nlohmann::json unwrap(nlohmann::json j, const char* field) {
  if (j.is_object() && j.contains("meta") && j.contains(field)) return j.at(field);
  return j;
}

// Options of the leaf command in declaration order, as given on the command
// line or their defaults.
ordered_json echo_params(const CLI::App* leaf) {
  ordered_json params = ordered_json::object();
  for (const CLI::Option* opt : leaf->get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
      if (opt->get_type_size() == 0) value = "true";
    } else {
      value = opt->get_default_str();
    }
    if (!value.empty()) params[opt->get_lnames().front()] = value;
  }
  return params;
}

ordered_json meta(const Context& ctx) {
  ordered_json m;
  m["tool"] = "frac";
  m["version"] = kVersion;
  m["command"] = ctx.command;
  m["params"] = echo_params(ctx.leaf);
  return m;
}

std::string csv_header(const Context& ctx) {
  std::string h = "# frac " + std::string(kVersion) + " " + ctx.command + "\n";
  const ordered_json params = echo_params(ctx.leaf);
  for (const auto& [key, value] : params.items()) {
    h += "# " + key + "=" + value.get<std::string>() + "\n";
  }
  return h;
}

void write(const Context& ctx, const std::string& text) {
  if (ctx.p.out.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream f(ctx.p.out, std::ios::binary);
  if (!f || !(f << text)) throw DomainError("cannot write " + ctx.p.out);
}

void emit_json(const Context& ctx, ordered_json body) {
  ordered_json doc;
  doc["meta"] = meta(ctx);
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  write(ctx, doc.dump(2) + "\n");
}

ordered_json ordered(const nlohmann::json& j) { return ordered_json::parse(j.dump()); }

void emit_series(const Context& ctx, const FracSeries& s,
                 const std::vector<std::string>& warnings = {},
                 std::optional<ordered_json> extra = std::nullopt) {
  if (ctx.p.format == "csv") {
    std::string text = csv_header(ctx);
    for (const auto& w : warnings) text += "# warning: " + w + "\n";
    write(ctx, text + series_to_csv(s));
    return;
  }
  ordered_json body;
  body["series"] = ordered(series_to_json(s));
  if (!warnings.empty()) body["warnings"] = warnings;
  if (extra) {
    for (auto& [key, value] : extra->items()) body[key] = value;
  }
  emit_json(ctx, std::move(body));
}

void emit_value(const Context& ctx, double value) {
  if (ctx.p.format == "csv") {
    write(ctx, csv_header(ctx) + "value\n" + shortest(value) + "\n");
    return;
  }
  ordered_json body;
  body["value"] = value;
  emit_json(ctx, std::move(body));
}

FracSeries input_series(const Context& ctx) { return series_from_json(unwrap(read_json(ctx.p.in), "series")); }

// --sample A:B:N, N >= 1 points from A to B inclusive.
std::vector<double> sample_points(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) throw ParameterError("bad --sample " + spec);
    parts.push_back(v);
  }
  if (parts.size() != 3 || parts[2] < 1.0 || parts[2] != std::floor(parts[2])) {
    throw ParameterError("--sample expects A:B:N with integer N >= 1");
  }
  const auto n = static_cast<std::size_t>(parts[2]);
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = n == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return xs;
}

void series_eval(const Context& ctx) {
  if (ctx.p.sample.empty() && ctx.leaf->count("--x") == 0) throw ParameterError("series eval needs --x or --sample");
  const FracSeries s = input_series(ctx);
  if (!ctx.p.sample.empty()) {
    std::string text = csv_header(ctx) + "x,value,tail_estimate\n";
    for (double x : sample_points(ctx.p.sample)) {
      const Evaluation e = evaluate(s, x);
      text += shortest(x) + "," + shortest(e.value) + "," + shortest(e.tail_estimate) + "\n";
    }
    write(ctx, text);
    return;
  }
  const Evaluation e = evaluate(s, ctx.p.x);
  if (ctx.p.format == "csv") {
    write(ctx, csv_header(ctx) + "x,value,tail_estimate\n" + shortest(ctx.p.x) + "," + shortest(e.value) + "," +
                   shortest(e.tail_estimate) + "\n");
    return;
  }
  ordered_json body;
  body["x"] = ctx.p.x;
  body["value"] = e.value;
  body["tail_estimate"] = e.tail_estimate;
  body["tail_within_tolerance"] = e.tail_within_tolerance;
  emit_json(ctx, std::move(body));
}

void hyper(const Context& ctx, const std::string& kind) {
  const Params& p = ctx.p;
  auto need = [&](std::size_t up, std::size_t low) {
    if (p.upper.size() != up || p.lower.size() != low) {
      throw ParameterError(kind + " takes " + std::to_string(up) + " --upper and " + std::to_string(low) +
                           " --lower values");
    }
  };
  FracSeries s(IndexPair::single(p.alpha), p.cutoff);
  std::optional<ResidualReport> residual;
  if (kind == "confluent") {
    need(1, 1);
    s = frac_confluent_series(p.upper[0], p.lower[0], p.alpha, p.cutoff);
    if (p.residual) residual = confluent_residual(s, p.upper[0], p.lower[0], p.alpha);
  } else if (kind == "gauss") {
    need(2, 1);
    s = frac_pfq_series({p.upper, p.lower, p.alpha, p.shift}, p.cutoff);
    if (p.residual) residual = gauss_residual(s, p.upper[0], p.upper[1], p.lower[0], p.alpha, p.shift);
  } else {
    if (p.residual) throw ParameterError("--residual is available for confluent and gauss only");
    s = frac_pfq_series({p.upper, p.lower, p.alpha, p.shift}, p.cutoff);
  }
  std::optional<ordered_json> extra;
  if (residual) extra = ordered_json{{"residual", ordered(residual_to_json(*residual))}};
  emit_series(ctx, s, {}, extra);
}

ordered_json solution_extra(const FracSeries& s, const ResidualReport& r) {
  ordered_json extra;
  const DifferentiabilityReport d = classify(s);
  ordered_json cls;
  cls["classification"] = d.classification == Differentiability::infinite ? "infinite" : "finite";
  cls["n_alpha"] = d.n_alpha;
  if (d.witness_exponent) cls["witness_exponent"] = *d.witness_exponent;
  extra["differentiability"] = cls;
  extra["residual"] = ordered(residual_to_json(r));
  return extra;
}

void solve(const Context& ctx, const std::string& kind) {
  const Params& p = ctx.p;
  if (kind == "example") {
    const FracSeries s = solve_example_equation(p.alpha, p.base, p.y0, p.cutoff);
    const FdeProblem problem = example_equation_problem(p.alpha, p.base, p.y0, p.cutoff);
    emit_series(ctx, s, {}, solution_extra(s, assemble_residual(problem, s)));
  } else if (kind == "linear") {
    const Solution sol = solve_linear_fde(p.alpha, p.beta, p.fcoef, p.gcoef, p.y0, p.cutoff, p.base);
    const FdeProblem problem = linear_fde_problem(p.alpha, p.beta, p.fcoef, p.gcoef, p.y0, p.cutoff, p.base);
    emit_series(ctx, sol.series, sol.warnings, solution_extra(sol.series, assemble_residual(problem, sol.series)));
  } else {
    const FdeProblem problem = problem_from_json(unwrap(read_json(p.problem), "problem"));
    const Solution sol = solve_by_ansatz(problem, p.cutoff);
    emit_series(ctx, sol.series, sol.warnings, solution_extra(sol.series, assemble_residual(problem, sol.series)));
  }
}

void verify(const Context& ctx, const std::string& kind) {
  const std::size_t grid = ctx.p.grid;
  std::vector<double> alphas;
  if (const CLI::Option* a = ctx.leaf->get_option_no_throw("--alpha"); a && a->count() > 0) alphas.push_back(ctx.p.alpha);
  Report report(kind);
  if (kind == "gamma") report = verify_gamma_suite();
  if (kind == "power-rule") report = verify_power_rule_suite(grid ? grid : 8192);
  if (kind == "ftfc") report = verify_ftfc_suite(grid ? grid : 2048, 20240611, alphas);
  if (kind == "all") {
    report.append(verify_gamma_suite());
    report.append(verify_power_rule_suite(grid ? grid : 8192));
    report.append(verify_ftfc_suite(grid ? grid : 2048, 20240611, alphas));
  }

  if (ctx.p.format == "csv") {
    std::string text = csv_header(ctx) + "name,value,tolerance,passed\n";
    for (const Check& c : report.checks()) {
      std::string name = c.name;
      if (name.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : name) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        name = quoted + "\"";
      }
      text += name + "," + shortest(c.value) + "," + shortest(c.tolerance) + "," + (c.passed ? "1" : "0") + "\n";
    }
    write(ctx, text);
  } else {
    ordered_json body;
    body["report"] = ordered(report_to_json(report));
    emit_json(ctx, std::move(body));
  }
  if (!report.passed()) throw VerificationFailed{};
}

void add_format(CLI::App* app, Params& p) {
  app->add_option("--format", p.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_out(CLI::App* app, Params& p) { app->add_option("--out", p.out, "Output file (default: stdout)"); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx{Params{}, out, nullptr, {}};
  Params& p = ctx.p;
  std::function<void()> action;

  CLI::App app{"Generalized fractional power series toolkit", "frac"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<void(const std::string&)> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    std::string command = parent == &app ? name : parent->get_name() + " " + name;
    sub->callback([&ctx, &action, sub, command, body, name] {
      ctx.leaf = sub;
      ctx.command = command;
      action = [body, name] { body(name); };
    });
    return sub;
  };

  // series
  CLI::App* series = app.add_subcommand("series", "Operate on a series JSON file");
  series->require_subcommand(1);
  for (const char* name : {"diff", "int"}) {
    CLI::App* sub = leaf(series, name, name == std::string("diff") ? "Caputo derivative" : "Riemann-Liouville integral",
                         [&](const std::string& kind) {
                           const FracSeries s = input_series(ctx);
                           emit_series(ctx, kind == "diff" ? caputo_derivative(s, p.order) : rl_integral(s, p.order));
                         });
    sub->add_option("--order", p.order, "Operator order")->required();
    sub->add_option("--in", p.in, "Input series JSON")->required()->check(CLI::ExistingFile);
    add_out(sub, p);
    add_format(sub, p);
  }
  {
    CLI::App* sub = leaf(series, "eval", "Evaluate a series", [&](const std::string&) { series_eval(ctx); });
    auto* x = sub->add_option("--x", p.x, "Evaluation point");
    auto* s = sub->add_option("--sample", p.sample, "A:B:N evenly spaced points, CSV output");
    x->excludes(s);
    sub->add_option("--in", p.in, "Input series JSON")->required()->check(CLI::ExistingFile);
    add_out(sub, p);
    add_format(sub, p);
  }

  // special
  CLI::App* special = app.add_subcommand("special", "Fractional special-function series");
  special->require_subcommand(1);
  for (const char* name : {"ml", "exp", "sin", "cos"}) {
    CLI::App* sub = leaf(special, name, std::string("Series of ") + name + "_alpha", [&](const std::string& kind) {
      if (kind == "ml") emit_series(ctx, mittag_leffler_series(p.alpha, p.base, p.cutoff));
      if (kind == "exp") emit_series(ctx, frac_exp_series(p.alpha, p.base, p.cutoff));
      if (kind == "sin") emit_series(ctx, frac_sin_series(p.alpha, p.base, p.cutoff));
      if (kind == "cos") emit_series(ctx, frac_cos_series(p.alpha, p.base, p.cutoff));
    });
    sub->add_option("--alpha", p.alpha, "Fractional order")->required();
    sub->add_option("--cutoff", p.cutoff, "Largest exponent kept")->required();
    sub->add_option("--base", p.base, "Expansion point")->capture_default_str();
    add_out(sub, p);
    add_format(sub, p);
  }

  // ml-eval, poch
  {
    CLI::App* sub = leaf(&app, "ml-eval", "Evaluate E_alpha(z)",
                         [&](const std::string&) { emit_value(ctx, mittag_leffler_eval(p.alpha, p.z, p.tol)); });
    sub->add_option("--alpha", p.alpha, "Fractional order")->required();
    sub->add_option("--z", p.z, "Argument, z >= 0")->required();
    sub->add_option("--tol", p.tol, "Relative truncation tolerance")->capture_default_str();
    add_out(sub, p);
    add_format(sub, p);
  }
  {
    CLI::App* sub = leaf(&app, "poch", "Fractional Pochhammer symbol",
                         [&](const std::string&) { emit_value(ctx, frac_pochhammer(p.a, p.alpha, p.k)); });
    sub->add_option("--a", p.a, "Base value")->required();
    sub->add_option("--alpha", p.alpha, "Fractional order")->required();
    sub->add_option("--k", p.k, "Index")->required();
    add_out(sub, p);
    add_format(sub, p);
  }

  // hyper
  CLI::App* hyp = app.add_subcommand("hyper", "Fractional hypergeometric series");
  hyp->require_subcommand(1);
  for (const char* name : {"confluent", "gauss", "pfq"}) {
    CLI::App* sub = leaf(hyp, name, std::string("Fractional ") + name + " series",
                         [&](const std::string& kind) { hyper(ctx, kind); });
    sub->add_option("--alpha", p.alpha, "Fractional order")->required();
    sub->add_option("--upper", p.upper, "Upper parameters")->delimiter(',');
    sub->add_option("--lower", p.lower, "Lower parameters")->delimiter(',');
    sub->add_option("--cutoff", p.cutoff, "Largest exponent kept")->required();
    sub->add_option("--shift", p.shift, "Expansion point")->capture_default_str();
    sub->add_flag("--residual", p.residual, "Attach the differential-equation residual");
    add_out(sub, p);
    add_format(sub, p);
  }

  // solve
  CLI::App* slv = app.add_subcommand("solve", "Series solutions of fractional differential equations");
  slv->require_subcommand(1);
  for (const char* name : {"example", "linear", "ansatz"}) {
    CLI::App* sub = leaf(slv, name, std::string("Solve the ") + name + " problem",
                         [&](const std::string& kind) { solve(ctx, kind); });
    const std::string kind = name;
    if (kind != "ansatz") {
      sub->add_option("--alpha", p.alpha, "Fractional order")->required();
      sub->add_option("--y0", p.y0, "Value at the base")->capture_default_str();
      sub->add_option("--base", p.base, "Expansion point")->capture_default_str();
    }
    if (kind == "linear") {
      sub->add_option("--beta", p.beta, "Second index")->required();
      sub->add_option("--fcoef", p.fcoef, "Coefficients of f")->delimiter(',')->required();
      sub->add_option("--gcoef", p.gcoef, "Coefficients of g")->delimiter(',')->required();
    }
    if (kind == "ansatz") {
      sub->add_option("--problem", p.problem, "Problem JSON")->required()->check(CLI::ExistingFile);
    }
    sub->add_option("--cutoff", p.cutoff, "Largest exponent kept")->capture_default_str();
    add_out(sub, p);
    add_format(sub, p);
  }

  // verify
  CLI::App* ver = app.add_subcommand("verify", "Run self-check suites");
  ver->require_subcommand(1);
  for (const char* name : {"gamma", "ftfc", "power-rule", "all"}) {
    CLI::App* sub = leaf(ver, name, std::string("Checks: ") + name, [&](const std::string& kind) { verify(ctx, kind); });
    sub->add_option("--grid", p.grid, "Quadrature subintervals");
    if (std::string(name) == "ftfc") sub->add_option("--alpha", p.alpha, "Only this order in the grid checks");
    add_out(sub, p);
    add_format(sub, p);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "frac: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    action();
  } catch (const VerificationFailed&) {
    return 2;
  } catch (const Error& e) {
    err << "frac: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "frac: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace frac::cli
