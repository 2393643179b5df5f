// Command-line surface: kernel evaluation, identity residual reports,
// forward/inverse transform round-trips, profile reconstruction, the
// continuous pair, and golden-table generation. Reports are JSON or CSV;
// exit 0 on success, 1 on domain/validation errors, 2 on quadrature
// non-convergence. Validation failures never leave a partial output file:
// the full report is assembled in memory before anything is written.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lsk/identities.hpp"
#include "lsk/kernels.hpp"
#include "lsk/quadrature.hpp"
#include "lsk/transforms.hpp"

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

const std::chrono::steady_clock::time_point g_start =
    std::chrono::steady_clock::now();

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Report {
  std::string command;
  json params = json::object();
  std::vector<json> results;
  std::vector<std::string> warnings;
  double seconds = 0.0;

  std::string to_json() const {
    json j;
    j["command"] = command;
    j["params"] = params;
    j["results"] = results;
    j["warnings"] = warnings;
    j["timing"] = {{"seconds", seconds}};
    return j.dump(2) + "\n";
  }

  // One row per result; columns are the union of keys, first-seen order.
  std::string to_csv() const {
    std::vector<std::string> cols;
    for (const auto& r : results) {
      for (auto it = r.begin(); it != r.end(); ++it) {
        if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) {
          cols.push_back(it.key());
        }
      }
    }
    std::ostringstream out;
    out << "# schema_version=" << kSchemaVersion << " command=" << command
        << "\n";
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "," : "") << cols[i];
    }
    out << "\n";
    for (const auto& r : results) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out << ",";
        if (!r.contains(cols[i])) continue;
        const auto& v = r[cols[i]];
        if (v.is_number_float()) {
          out << fmt17(v.get<double>());
        } else if (v.is_string()) {
          out << v.get<std::string>();
        } else {
          out << v.dump();
        }
      }
      out << "\n";
    }
    for (const auto& w : warnings) out << "# warning: " << w << "\n";
    return out.str();
  }
};

struct OutputOptions {
  std::string format = "json";
  std::string path;  // empty = stdout
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", out.path, "Write the report to this file");
}

void add_tolerance_options(CLI::App* cmd, lsk::Tolerance& tol) {
  cmd->add_option("--abs-tol", tol.abs_tol, "Absolute error target")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rel-tol", tol.rel_tol, "Relative error target")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-subdivisions", tol.max_subdivisions,
                  "Adaptive subdivision budget")
      ->check(CLI::PositiveNumber);
}

void emit(Report& report, const OutputOptions& out) {
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start)
          .count();
  const std::string body =
      out.format == "csv" ? report.to_csv() : report.to_json();
  if (out.path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(out.path, std::ios::trunc);
  if (!file) throw lsk::DomainError("cannot open output path " + out.path);
  file << body;
}

std::vector<double> parse_seq(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = std::stod(item, &used);
    while (used < item.size() && std::isspace(item[used])) ++used;
    if (used != item.size()) {
      throw lsk::DomainError("malformed number in sequence: '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw lsk::DomainError("sequence must be non-empty");
  return values;
}

json entry_json(const lsk::CoefficientEntry& e) {
  return json{{"n", e.index},
              {"value", e.value},
              {"error_estimate", e.error_estimate},
              {"amplification", e.amplification},
              {"precision_warning", e.precision_warning}};
}

// ---- kernel ---------------------------------------------------------------

struct KernelArgs {
  double alpha = 0.5, tau = 0.0, x = 1.0;
  lsk::Tolerance tol;
  OutputOptions out;
};

int run_kernel(const KernelArgs& a) {
  Report rep;
  rep.command = "kernel";
  rep.params = {{"alpha", a.alpha}, {"tau", a.tau}, {"x", a.x}};
  const lsk::KernelPoint p{{a.alpha, a.tau}, a.x};
  rep.results.push_back({{"quantity", "re_k"}, {"value", lsk::re_k(p, a.tol)}});
  rep.results.push_back({{"quantity", "im_k"}, {"value", lsk::im_k(p, a.tol)}});
  rep.results.push_back(
      {{"quantity", "re_j_incomplete"}, {"value", lsk::re_j_incomplete(p, a.tol)}});
  rep.results.push_back(
      {{"quantity", "im_j_incomplete"}, {"value", lsk::im_j_incomplete(p, a.tol)}});
  emit(rep, a.out);
  return 0;
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string identity = "eq113";
  double alpha = 0.5, tau = 0.0, u = 0.0;
  lsk::Tolerance tol;
  OutputOptions out;
};

int run_oracle(const OracleArgs& a) {
  const std::map<std::string, lsk::IdentityKind> kinds = {
      {"eq113", lsk::IdentityKind::eq113},
      {"eq114", lsk::IdentityKind::eq114},
      {"eq115", lsk::IdentityKind::eq115}};
  Report rep;
  rep.command = "oracle";
  rep.params = {{"identity", a.identity},
                {"alpha", a.alpha},
                {"tau", a.tau},
                {"u", a.u}};
  const auto res =
      lsk::check_identity(kinds.at(a.identity), a.alpha, a.tau, a.u, a.tol);
  rep.results.push_back({{"quantity", "lhs_re"}, {"value", res.lhs.real()}});
  rep.results.push_back({{"quantity", "lhs_im"}, {"value", res.lhs.imag()}});
  rep.results.push_back({{"quantity", "rhs_re"}, {"value", res.rhs.real()}});
  rep.results.push_back({{"quantity", "rhs_im"}, {"value", res.rhs.imag()}});
  rep.results.push_back({{"quantity", "residual"}, {"value", res.residual}});
  rep.results.push_back(
      {{"quantity", "rel_residual"}, {"value", res.rel_residual}});
  emit(rep, a.out);
  return 0;
}

// ---- forward --------------------------------------------------------------

struct ForwardArgs {
  std::string variant = "re";
  std::string seq_text;
  double alpha = 0.5;
  double delta = 0.0;
  std::vector<double> xs;
  lsk::Tolerance tol;
  OutputOptions out;
};

double forward_value(const std::string& variant,
                     const lsk::CoefficientSequence& seq, double alpha,
                     double x, const lsk::Tolerance& tol) {
  if (variant == "re") return lsk::forward_re(seq, alpha, x, tol);
  if (variant == "im") return lsk::forward_im(seq, alpha, x, tol);
  if (variant == "incomplete_re")
    return lsk::forward_incomplete_re(seq, x, tol);
  return lsk::forward_incomplete_im(seq, x, tol);
}

int run_forward(const ForwardArgs& a) {
  lsk::CoefficientSequence seq{parse_seq(a.seq_text), {a.delta, 1.0}};
  Report rep;
  rep.command = "forward";
  rep.params = {{"variant", a.variant},
                {"alpha", a.alpha},
                {"seq", seq.values},
                {"delta", a.delta}};
  if (a.variant.substr(0, 2) == "im" ||
      a.variant == "incomplete_im") {
    if (!seq.values.empty() && seq.values[0] != 0.0) {
      rep.warnings.push_back(
          "the Im series fixes a_0 = 0; the supplied a_0 entry is ignored");
    }
  }
  for (double x : a.xs) {
    rep.results.push_back(
        {{"x", x}, {"value", forward_value(a.variant, seq, a.alpha, x, a.tol)}});
  }
  emit(rep, a.out);
  return 0;
}

// ---- invert / roundtrip ----------------------------------------------------

struct RoundtripArgs {
  int theorem = 2;
  std::string variant = "re";
  std::string seq_text;
  double delta = 0.0;
  lsk::Tolerance tol;
  OutputOptions out;
};

// Forward the sequence through the selected theorem's series, then recover
// every coefficient with the matching inversion. Composes only public
// transform operations.
int run_roundtrip(const RoundtripArgs& a, int only_n) {
  lsk::CoefficientSequence seq{parse_seq(a.seq_text), {a.delta, 1.0}};
  const bool im = a.variant == "im";
  Report rep;
  rep.command = only_n >= 0 ? "invert" : "roundtrip";
  rep.params = {{"theorem", a.theorem},
                {"variant", a.variant},
                {"seq", seq.values},
                {"delta", a.delta}};
  if (only_n >= 0) rep.params["n"] = only_n;
  if (im && !seq.values.empty() && seq.values[0] != 0.0) {
    rep.warnings.push_back(
        "the Im series fixes a_0 = 0; the supplied a_0 entry is ignored");
  }

  std::map<double, double> cache;
  lsk::FunctionEvaluator f;
  f.singularity_exponent = a.theorem == 2 ? 0.5 : 0.0;
  f.decay_rate = 1.0;
  f.evaluate = [&](double x) {
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    double v = 0.0;
    switch (a.theorem) {
      case 2:
        v = im ? lsk::forward_im(seq, 0.5, x, a.tol)
               : lsk::forward_re(seq, 0.5, x, a.tol);
        break;
      case 3:
        v = im ? lsk::forward_incomplete_im(seq, x, a.tol)
               : lsk::forward_incomplete_re(seq, x, a.tol);
        break;
      default:
        break;
    }
    cache.emplace(x, v);
    return v;
  };

  lsk::TransformReport tr;
  const int top = static_cast<int>(seq.values.size()) - 1;
  const int lo = only_n >= 0 ? only_n : (im ? 1 : 0);
  const int hi = only_n >= 0 ? only_n : top;
  for (int n = lo; n <= hi; ++n) {
    double recovered = 0.0;
    switch (a.theorem) {
      case 2:
        recovered = im ? lsk::invert_im(f, n, a.tol, &tr)
                       : lsk::invert_re(f, n, a.tol, &tr);
        break;
      case 3:
        recovered = im ? lsk::invert_incomplete_im(f, n, a.tol, &tr)
                       : lsk::invert_incomplete_re(f, n, a.tol, &tr);
        break;
      case 5:
        recovered = im ? lsk::theorem5_forward_im(seq, n, a.tol, 0.5, &tr)
                       : lsk::theorem5_forward_re(seq, n, a.tol, 0.5, &tr);
        break;
      default:
        throw lsk::DomainError("roundtrip supports theorems 2, 3, 5");
    }
    json row = entry_json(tr.entries.back());
    row["value"] = recovered;
    if (a.theorem != 5 && n <= top) {
      row["input"] = seq.values[n];
      row["abs_error"] = std::fabs(recovered - seq.values[n]);
    }
    rep.results.push_back(row);
  }
  rep.warnings.insert(rep.warnings.end(), tr.warnings.begin(),
                      tr.warnings.end());
  emit(rep, a.out);
  return 0;
}

// ---- reconstruct (profile chain) -------------------------------------------

struct ReconstructArgs {
  std::string profile = "cos";
  std::string flavor = "cosh_half";
  int order = 4;
  std::vector<double> xs{1.0};
  lsk::Tolerance tol;
  OutputOptions out;
};

lsk::PeriodicProfile make_profile(const std::string& name,
                                  const std::string& flavor) {
  lsk::PeriodicProfile p;
  p.flavor = flavor == "sinh_half" ? lsk::ProfileFlavor::sinh_half
                                   : lsk::ProfileFlavor::cosh_half;
  if (name == "cos") {
    p.psi = [](double u) { return std::cos(u); };
    p.lipschitz_constant = 1.0;
  } else if (name == "sin") {
    p.psi = [](double u) { return std::sin(u); };
    p.lipschitz_constant = 1.0;
  } else if (name == "triangle") {
    // Symmetric triangle wave: 1 - 2|u|/pi, Lipschitz constant 2/pi.
    p.psi = [](double u) { return 1.0 - 2.0 * std::fabs(u) / std::numbers::pi; };
    p.lipschitz_constant = 2.0 / std::numbers::pi;
  } else {
    throw lsk::DomainError("unknown profile: " + name);
  }
  return p;
}

int run_reconstruct(const ReconstructArgs& a) {
  const lsk::PeriodicProfile profile = make_profile(a.profile, a.flavor);
  const bool im = profile.flavor == lsk::ProfileFlavor::sinh_half;
  Report rep;
  rep.command = "reconstruct";
  rep.params = {{"profile", a.profile},
                {"flavor", a.flavor},
                {"order", a.order}};

  std::map<double, double> cache;
  lsk::FunctionEvaluator f;
  f.singularity_exponent = 0.0;
  f.decay_rate = 1.0;
  f.evaluate = [&](double x) {
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    double v = lsk::represent_from_profile(profile, x, a.tol);
    cache.emplace(x, v);
    return v;
  };

  lsk::CoefficientSequence coeffs;
  coeffs.values.assign(a.order + 1, 0.0);
  for (int n = im ? 1 : 0; n <= a.order; ++n) {
    coeffs.values[n] = im ? lsk::coeff_im(f, 0.5, n, a.tol)
                          : lsk::coeff_re(f, 0.5, n, a.tol);
    rep.results.push_back({{"n", n}, {"coefficient", coeffs.values[n]}});
  }
  lsk::TransformReport tr;
  for (double x : a.xs) {
    const double rebuilt =
        im ? lsk::reconstruct_im(coeffs, x, a.order, a.tol, &tr)
           : lsk::reconstruct_re(coeffs, x, a.order, a.tol, &tr);
    rep.results.push_back({{"x", x},
                           {"reconstructed", rebuilt},
                           {"represented", f.evaluate(x)},
                           {"abs_error", std::fabs(rebuilt - f.evaluate(x))}});
  }
  rep.warnings.insert(rep.warnings.end(), tr.warnings.begin(),
                      tr.warnings.end());
  emit(rep, a.out);
  return 0;
}

// ---- continuous -------------------------------------------------------------

struct ContinuousArgs {
  std::string variant = "re";
  double u0 = 0.7;
  std::vector<double> taus{0.0, 0.5, 1.0, 2.0};
  std::vector<double> xs;
  double tau_max = 12.0;
  lsk::Tolerance tol;
  OutputOptions out;
};

int run_continuous(const ContinuousArgs& a) {
  const bool im = a.variant == "im";
  Report rep;
  rep.command = "continuous";
  rep.params = {{"variant", a.variant}, {"u0", a.u0}, {"tau_max", a.tau_max}};
  const double ch = std::cosh(a.u0);

  lsk::FunctionEvaluator f;
  f.evaluate = [&](double x) { return std::exp(-x * ch); };
  f.singularity_exponent = 0.0;
  f.decay_rate = ch;
  for (double tau : a.taus) {
    const double F = im ? lsk::ls_forward_im(f, tau, a.tol)
                        : lsk::ls_forward_re(f, tau, a.tol);
    rep.results.push_back({{"quantity", "forward"}, {"tau", tau}, {"value", F}});
  }

  // Inverse leg: invert the closed-form image of e^{-x cosh u0} and compare
  // pointwise. The weighted integrand cosh(pi tau) F(tau) kernel decays at
  // least like e^{-tau}.
  auto F_exact = [&](double tau) {
    const double chp = std::cosh(std::numbers::pi * tau);
    return im ? std::numbers::pi * std::sin(tau * a.u0) /
                    (2.0 * std::sinh(a.u0 / 2.0) * chp)
              : std::numbers::pi * std::cos(tau * a.u0) /
                    (2.0 * std::cosh(a.u0 / 2.0) * chp);
  };
  for (double x : a.xs) {
    const lsk::DecayHint decay{1.0};
    const auto res =
        im ? lsk::ls_inverse_im(F_exact, x, a.tau_max, decay, a.tol)
           : lsk::ls_inverse_re(F_exact, x, a.tau_max, decay, a.tol);
    rep.results.push_back({{"quantity", "inverse"},
                           {"x", x},
                           {"value", res.value},
                           {"target", std::exp(-x * ch)},
                           {"tail_bound", res.tail_bound},
                           {"abs_error",
                            std::fabs(res.value - std::exp(-x * ch))}});
  }
  emit(rep, a.out);
  return 0;
}

// ---- golden -----------------------------------------------------------------

struct GoldenArgs {
  std::string grid = "kernel";
  int n_max = 8;
  bool empty = false;
  lsk::Tolerance tol;
  OutputOptions out;
};

int run_golden(const GoldenArgs& a) {
  if (a.n_max > lsk::max_coefficient_index()) {
    throw lsk::DomainError(
        "golden grid refused: n_max " + std::to_string(a.n_max) +
        " exceeds the precision envelope N_max=" +
        std::to_string(lsk::max_coefficient_index()));
  }
  Report rep;
  rep.command = "golden";
  rep.params = {{"grid", a.grid},
                {"n_max", a.n_max},
                {"schema_version", kSchemaVersion}};
  if (a.empty) {
    emit(rep, a.out);
    return 0;
  }
  if (a.grid == "kernel") {
    const std::vector<double> alphas = {-0.5, 0.0, 0.5};
    const std::vector<double> xs = {0.5, 1.0, 2.0};
    for (const char* quantity : {"re_k", "im_k"}) {
      const bool im = std::string(quantity) == "im_k";
      for (double alpha : alphas) {
        for (int n = 0; n <= a.n_max; ++n) {
          for (double x : xs) {
            const lsk::KernelPoint p{{alpha, static_cast<double>(n)}, x};
            rep.results.push_back({{"quantity", quantity},
                                   {"alpha", alpha},
                                   {"n", n},
                                   {"x", x},
                                   {"value", im ? lsk::im_k(p, a.tol)
                                                : lsk::re_k(p, a.tol)}});
          }
        }
      }
    }
  } else if (a.grid == "identity") {
    for (int n = 0; n <= std::min(a.n_max, 4); ++n) {
      for (double u : {0.5, 1.0}) {
        const auto res = lsk::check_identity(lsk::IdentityKind::eq114, 0.5,
                                             n, u, a.tol);
        rep.results.push_back({{"quantity", "eq114_residual"},
                               {"alpha", 0.5},
                               {"n", n},
                               {"u", u},
                               {"lhs", res.lhs.real()},
                               {"rhs", res.rhs.real()},
                               {"value", res.residual}});
      }
    }
  } else {
    throw lsk::DomainError("unknown golden grid: " + a.grid);
  }
  emit(rep, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete and continuous transform toolkit over the "
               "Re/Im K_{alpha + i tau} kernel family"};
  app.require_subcommand(1);

  KernelArgs ka;
  auto* kernel = app.add_subcommand("kernel", "Evaluate the kernel family");
  kernel->add_option("--alpha", ka.alpha, "Real part of the order");
  kernel->add_option("--tau", ka.tau, "Imaginary part of the order");
  kernel->add_option("--x", ka.x, "Argument (must be positive)");
  add_tolerance_options(kernel, ka.tol);
  add_output_options(kernel, ka.out);

  OracleArgs oa;
  auto* oracle =
      app.add_subcommand("oracle", "Check a composition identity residual");
  oracle->add_option("--identity", oa.identity, "Identity to check")
      ->check(CLI::IsMember({"eq113", "eq114", "eq115"}));
  oracle->add_option("--alpha", oa.alpha, "Real part of the order");
  oracle->add_option("--tau", oa.tau, "Imaginary part of the order");
  oracle->add_option("--u", oa.u, "Evaluation point");
  add_tolerance_options(oracle, oa.tol);
  add_output_options(oracle, oa.out);

  ForwardArgs fa;
  auto* forward =
      app.add_subcommand("forward", "Evaluate a coefficient series");
  forward->add_option("--variant", fa.variant, "Series variant")
      ->check(CLI::IsMember({"re", "im", "incomplete_re", "incomplete_im"}));
  forward->add_option("--seq", fa.seq_text, "Comma-separated coefficients")
      ->required();
  forward->add_option("--alpha", fa.alpha, "Real part of the order");
  forward->add_option("--delta", fa.delta, "Decay certificate angle");
  forward->add_option("--x", fa.xs, "Evaluation points")->required();
  add_tolerance_options(forward, fa.tol);
  add_output_options(forward, fa.out);

  RoundtripArgs ia;
  int invert_n = 0;
  auto* invert =
      app.add_subcommand("invert", "Recover one coefficient from its series");
  invert->add_option("--theorem", ia.theorem, "Which pair to use")
      ->check(CLI::IsMember({2, 3, 5}));
  invert->add_option("--variant", ia.variant, "Series variant")
      ->check(CLI::IsMember({"re", "im"}));
  invert->add_option("--seq", ia.seq_text, "Comma-separated coefficients")
      ->required();
  invert->add_option("--n", invert_n, "Coefficient index to recover")
      ->required()
      ->check(CLI::NonNegativeNumber);
  invert->add_option("--delta", ia.delta, "Decay certificate angle");
  add_tolerance_options(invert, ia.tol);
  add_output_options(invert, ia.out);

  RoundtripArgs ra;
  auto* roundtrip = app.add_subcommand(
      "roundtrip", "Forward a sequence through a series and recover it");
  roundtrip->add_option("--theorem", ra.theorem, "Which pair to use")
      ->check(CLI::IsMember({2, 3, 5}));
  roundtrip->add_option("--variant", ra.variant, "Series variant")
      ->check(CLI::IsMember({"re", "im"}));
  roundtrip->add_option("--seq", ra.seq_text, "Comma-separated coefficients")
      ->required();
  roundtrip->add_option("--delta", ra.delta, "Decay certificate angle");
  add_tolerance_options(roundtrip, ra.tol);
  add_output_options(roundtrip, ra.out);

  ReconstructArgs ca;
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Represent a periodic profile and rebuild it");
  reconstruct->add_option("--profile", ca.profile, "Profile shape")
      ->check(CLI::IsMember({"cos", "sin", "triangle"}));
  reconstruct->add_option("--flavor", ca.flavor, "Weight flavor")
      ->check(CLI::IsMember({"cosh_half", "sinh_half"}));
  reconstruct->add_option("--order", ca.order, "Partial-sum order")
      ->check(CLI::NonNegativeNumber);
  reconstruct->add_option("--x", ca.xs, "Evaluation points");
  add_tolerance_options(reconstruct, ca.tol);
  add_output_options(reconstruct, ca.out);

  ContinuousArgs na;
  auto* continuous = app.add_subcommand(
      "continuous", "Continuous transform pair on e^{-x cosh u0}");
  continuous->add_option("--variant", na.variant, "Transform variant")
      ->check(CLI::IsMember({"re", "im"}));
  continuous->add_option("--u0", na.u0, "Shape parameter (must be positive)");
  continuous->add_option("--tau", na.taus, "Forward evaluation points");
  continuous->add_option("--x", na.xs, "Inverse evaluation points");
  continuous->add_option("--tau-max", na.tau_max, "Inverse truncation point");
  add_tolerance_options(continuous, na.tol);
  add_output_options(continuous, na.out);

  GoldenArgs ga;
  auto* golden =
      app.add_subcommand("golden", "Emit a golden reference table");
  golden->add_option("--grid", ga.grid, "Which grid to emit")
      ->check(CLI::IsMember({"kernel", "identity"}));
  golden->add_option("--n-max", ga.n_max, "Largest integer order")
      ->check(CLI::NonNegativeNumber);
  golden->add_flag("--empty", ga.empty, "Emit only the header");
  add_tolerance_options(golden, ga.tol);
  add_output_options(golden, ga.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (kernel->parsed()) return run_kernel(ka);
    if (oracle->parsed()) return run_oracle(oa);
    if (forward->parsed()) return run_forward(fa);
    if (invert->parsed()) return run_roundtrip(ia, invert_n);
    if (roundtrip->parsed()) return run_roundtrip(ra, -1);
    if (reconstruct->parsed()) return run_reconstruct(ca);
    if (continuous->parsed()) return run_continuous(na);
    if (golden->parsed()) return run_golden(ga);
  } catch (const lsk::NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return 2;
  } catch (const lsk::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
