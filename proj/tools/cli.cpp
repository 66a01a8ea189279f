#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "chebloc/analysis.hpp"
#include "chebloc/coefficients.hpp"
#include "chebloc/io.hpp"
#include "chebloc/quadrature.hpp"
#include "chebloc/rules.hpp"
#include "chebloc/verify.hpp"

namespace chebloc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "lo..hi", inclusive.
std::vector<int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like lo..hi");
  int lo = 0;
  int hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad range start");
    const std::string tail = text.substr(dots + 2);
    hi = std::stoi(tail, &used);
    if (used != tail.size()) throw UsageError("bad range end");
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "'");
  }
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

TestFunction make_function(const std::string& id, std::optional<int> m) {
  if (id == "xm_abs_exp") {
    if (!m) throw UsageError("--fn xm_abs_exp needs --m");
    return xm_abs_exp(*m);
  }
  if (m) throw UsageError("--m only applies to --fn xm_abs_exp");
  if (id == "exp") return exponential();
  if (id.rfind("poly:", 0) == 0) {
    std::vector<double> coefficients;
    std::stringstream list(id.substr(5));
    std::string item;
    while (std::getline(list, item, ',')) {
      try {
        std::size_t used = 0;
        coefficients.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw UsageError("bad polynomial coefficient '" + item + "'");
      }
    }
    return polynomial(coefficients);
  }
  throw UsageError("unknown function id '" + id + "'");
}

QuadKind rule_from(const std::string& name) {
  try {
    return parse_quad_kind(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_nodes(QuadKind kind, int n) {
  if (n < min_nodes(kind)) {
    throw UsageError(std::string(to_string(kind)) + " needs n >= " +
                     std::to_string(min_nodes(kind)));
  }
}

Interval interval_from(double a, double b) {
  try {
    return Interval(a, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit_report(const StudyReport& report, const std::string& path,
                 std::ostream& out) {
  if (path.empty()) {
    write_report_csv(out, report);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_report_csv(file, report);
}

const std::vector<std::string> kRuleNames{"f1", "cc", "f2", "f3", "f4"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Local Chebyshev approximation and interpolatory quadrature"};
  app.name("chebloc");
  app.require_subcommand(1, 1);

  std::string rule_name;
  int n = 0;
  std::string fn_id;
  std::optional<int> m;
  double a = 0.0;
  double b = 0.0;
  bool json = false;
  int patches = 1;
  int p_max = 1024;
  std::vector<int> ks;
  std::string out_path;
  std::string n_range;
  std::string m_range;

  auto add_rule = [&](CLI::App* cmd) {
    cmd->add_option("--rule", rule_name, "f1, cc, f2, f3 or f4")
        ->required()
        ->check(CLI::IsMember(kRuleNames));
  };

  CLI::App* nodes = app.add_subcommand("nodes", "Nodes and weights of a rule");
  add_rule(nodes);
  nodes->add_option("--n", n, "Number of nodes")->required();
  nodes->add_flag("--json", json, "JSON instead of CSV");

  CLI::App* coeffs =
      app.add_subcommand("coeffs", "Discrete Chebyshev coefficients");
  add_rule(coeffs);
  coeffs->add_option("--n", n)->required();
  coeffs->add_option("--fn", fn_id, "xm_abs_exp, exp or poly:c0,c1,...")
      ->required();
  coeffs->add_option("--m", m, "Regularity of xm_abs_exp");
  coeffs->add_option("--a", a)->required();
  coeffs->add_option("--b", b)->required();
  coeffs->add_flag("--json", json);

  CLI::App* quad = app.add_subcommand("quad", "Single or composite quadrature");
  add_rule(quad);
  quad->add_option("--n", n)->required();
  quad->add_option("--patches", patches, "Equispaced patch count")
      ->check(CLI::PositiveNumber);
  quad->add_option("--fn", fn_id)->required();
  quad->add_option("--m", m);
  quad->add_option("--a", a)->required();
  quad->add_option("--b", b)->required();

  CLI::App* decay =
      app.add_subcommand("study-decay", "Coefficient decay on shrinking intervals");
  add_rule(decay);
  decay->add_option("--n", n)->required();
  decay->add_option("--fn", fn_id)->default_val("xm_abs_exp");
  decay->add_option("--m", m);
  decay->add_option("--k", ks, "Coefficient indices (default 1..n-1)");
  decay->add_option("--p-max", p_max)->check(CLI::PositiveNumber);
  decay->add_option("--out", out_path, "CSV file (default stdout)");

  CLI::App* squad =
      app.add_subcommand("study-quad", "Quadrature error on shrinking intervals");
  add_rule(squad);
  auto* n_opt = squad->add_option("--n", n);
  auto* nr_opt = squad->add_option("--n-range", n_range, "lo..hi");
  n_opt->excludes(nr_opt);
  squad->add_option("--fn", fn_id)->default_val("xm_abs_exp");
  auto* m_opt = squad->add_option("--m", m);
  auto* mr_opt = squad->add_option("--m-range", m_range, "lo..hi");
  m_opt->excludes(mr_opt);
  squad->add_option("--p-max", p_max)->check(CLI::PositiveNumber);
  squad->add_option("--out", out_path);

  CLI::App* scomp = app.add_subcommand(
      "study-composite", "Composite error on a fixed interval as P doubles");
  add_rule(scomp);
  scomp->add_option("--n", n)->required();
  scomp->add_option("--fn", fn_id)->default_val("xm_abs_exp");
  scomp->add_option("--m", m);
  scomp->add_option("--a", a)->required();
  scomp->add_option("--b", b)->required();
  scomp->add_option("--p-max", p_max, "Largest patch count")
      ->check(CLI::PositiveNumber);
  scomp->add_option("--out", out_path);

  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (nodes->parsed()) {
      const QuadKind kind = rule_from(rule_name);
      check_nodes(kind, n);
      const QuadratureRule rule = make_rule(kind, n);
      if (json) {
        out << rule_to_json(rule) << '\n';
      } else {
        write_rule_csv(out, rule);
      }
      return kOk;
    }

    if (coeffs->parsed()) {
      const QuadKind kind = rule_from(rule_name);
      check_nodes(kind, n);
      const Interval interval = interval_from(a, b);
      const TestFunction f = make_function(fn_id, m);
      const CoefficientSet c =
          discrete_coeffs(make_rule(kind, n), f.sampled(), interval);
      if (json) {
        out << coefficients_to_json(c) << '\n';
      } else {
        write_coefficients_csv(out, c);
      }
      return kOk;
    }

    if (quad->parsed()) {
      const QuadKind kind = rule_from(rule_name);
      check_nodes(kind, n);
      const Interval interval = interval_from(a, b);
      const TestFunction f = make_function(fn_id, m);
      const QuadResult result =
          integrate_composite(make_rule(kind, n), f.sampled(),
                              Partition::equispaced(interval, patches));
      out << quad_result_to_json(result, patches, f.integral(interval)) << '\n';
      return kOk;
    }

    if (decay->parsed()) {
      const QuadKind kind = rule_from(rule_name);
      check_nodes(kind, n);
      const TestFunction f = make_function(fn_id, m);
      if (ks.empty()) {
        for (int k = 1; k < n; ++k) ks.push_back(k);
      }
      for (int k : ks) {
        if (k < 1 || k > n - 1) {
          throw UsageError("--k values must lie in 1..n-1");
        }
      }
      emit_report(coefficient_decay_study(kind, f, n, ks,
                                          ShrinkSchedule::doubling(p_max)),
                  out_path, out);
      return kOk;
    }

    if (squad->parsed()) {
      const QuadKind kind = rule_from(rule_name);
      if (n_opt->count() == 0 && nr_opt->count() == 0) {
        throw UsageError("study-quad needs --n or --n-range");
      }
      const std::vector<int> ns =
          nr_opt->count() ? parse_range(n_range) : std::vector<int>{n};
      for (int v : ns) check_nodes(kind, v);
      std::vector<std::optional<int>> regularities;
      if (mr_opt->count()) {
        for (int v : parse_range(m_range)) regularities.emplace_back(v);
      } else {
        regularities.push_back(m);
      }
      std::vector<TestFunction> functions;
      for (const auto& reg : regularities) {
        functions.push_back(make_function(fn_id, reg));
      }
      const ShrinkSchedule schedule = ShrinkSchedule::doubling(p_max);
      StudyReport report{StudyKind::Quadrature, {}};
      for (const TestFunction& f : functions) {
        report.append(quadrature_convergence_study(kind, f, ns, schedule));
      }
      emit_report(report, out_path, out);
      return kOk;
    }

    if (scomp->parsed()) {
      const QuadKind kind = rule_from(rule_name);
      check_nodes(kind, n);
      const Interval interval = interval_from(a, b);
      const TestFunction f = make_function(fn_id, m);
      emit_report(composite_convergence_study(kind, f, n, interval,
                                              powers_of_two(p_max)),
                  out_path, out);
      return kOk;
    }

    if (verify->parsed()) {
      bool all = true;
      for (const SuiteResult& r : run_property_suites()) {
        all = all && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.name
            << " worst=" << format_real(r.worst)
            << " tol=" << format_real(r.tolerance);
        if (!r.detail.empty()) out << " (" << r.detail << ')';
        out << '\n';
      }
      return all ? kOk : kVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace chebloc::cli
