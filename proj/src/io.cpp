#include "chebloc/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <variant>
#include <vector>

#include <json.hpp>

namespace chebloc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::string regularity_label(std::optional<int> m) {
  return m ? std::to_string(*m) : std::string("inf");
}

std::string optional_real(std::optional<double> value) {
  return value ? format_real(*value) : std::string();
}

}  // namespace

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string rule_to_json(const QuadratureRule& rule) {
  ordered_json j;
  j["kind"] = std::string(to_string(rule.kind));
  j["n"] = rule.n;
  j["thetas"] = to_std(rule.thetas);
  j["nodes"] = to_std(rule.nodes);
  j["weights"] = to_std(rule.weights);
  return j.dump();
}

void write_rule_csv(std::ostream& out, const QuadratureRule& rule) {
  out << "j,theta,node,weight\n";
  for (int j = 0; j < rule.n; ++j) {
    out << j << ',' << format_real(rule.thetas[j]) << ','
        << format_real(rule.nodes[j]) << ',' << format_real(rule.weights[j])
        << '\n';
  }
}

void write_coefficients_csv(std::ostream& out, const CoefficientSet& c) {
  out << "k,value\n";
  for (int k = 0; k < c.size(); ++k) {
    out << k << ',' << format_real(c[k]) << '\n';
  }
}

std::string coefficients_to_json(const CoefficientSet& c) {
  ordered_json j;
  j["family"] = std::string(to_string(c.family));
  j["a"] = c.interval.a();
  j["b"] = c.interval.b();
  if (const auto* rule = std::get_if<DiscreteRuleSource>(&c.source)) {
    j["source"] = {{"rule", std::string(to_string(rule->kind))},
                   {"n", rule->n}};
  } else {
    j["source"] = {
        {"reference_nodes",
         std::get<ContinuousOracleSource>(c.source).reference_nodes}};
  }
  j["values"] = to_std(c.values);
  return j.dump();
}

std::string quad_result_to_json(const QuadResult& result, int patches,
                                std::optional<double> exact) {
  ordered_json j;
  j["rule"] = std::string(to_string(result.rule));
  j["n"] = result.n;
  j["patches"] = patches;
  j["value"] = result.value;
  if (exact) {
    j["exact"] = *exact;
    j["abs_error"] = std::abs(*exact - result.value);
  }
  j["evaluations"] = result.evaluations;
  return j.dump();
}

void write_report_csv(std::ostream& out, const StudyReport& report) {
  switch (report.kind) {
    case StudyKind::CoefficientDecay:
      out << "family,rule,m,k,p,h,coeff_abs,ndr,tdr\n";
      for (const StudyRow& r : report.rows) {
        out << to_string(r.family) << ',' << to_string(r.rule) << ','
            << regularity_label(r.regularity) << ',' << r.k << ',' << r.step
            << ',' << format_real(r.h) << ',' << format_real(r.measured) << ','
            << optional_real(r.rate) << ',' << r.theory << '\n';
      }
      return;
    case StudyKind::Quadrature:
    case StudyKind::Composite:
      out << (report.kind == StudyKind::Quadrature
                  ? "rule,m,n,p,h,error,noc,toc,floor_flag\n"
                  : "rule,m,n,P,h,error,noc,toc,floor_flag\n");
      for (const StudyRow& r : report.rows) {
        out << to_string(r.rule) << ',' << regularity_label(r.regularity) << ','
            << r.n << ',' << r.step << ',' << format_real(r.h) << ','
            << format_real(r.measured) << ',' << optional_real(r.rate) << ','
            << r.theory << ',' << (r.below_floor ? 1 : 0) << '\n';
      }
      return;
  }
}

}  // namespace chebloc
