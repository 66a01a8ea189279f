#include "chebloc/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace chebloc {

namespace {

constexpr double kSubnormalCut = 1e-300;

QuadKind reference_rule(ChebKind family) {
  switch (family) {
    case ChebKind::First:
      return QuadKind::FejerI;
    case ChebKind::Second:
      return QuadKind::FejerII;
    case ChebKind::Third:
      return QuadKind::FejerIII;
    case ChebKind::Fourth:
      return QuadKind::FejerIV;
  }
  return QuadKind::FejerI;
}

// Values at the mapped nodes, times the node factor of the inner product.
struct NodeSamples {
  Eigen::VectorXd weighted;
  double scale = 0.0;
};

NodeSamples sample(const QuadratureRule& rule, const SampledFunction& f,
                   const Interval& interval) {
  NodeSamples out{Eigen::VectorXd(rule.n), 0.0};
  for (int j = 0; j < rule.n; ++j) {
    const double value = f(affine_map(interval, rule.nodes[j]));
    if (!std::isfinite(value)) {
      throw std::domain_error("function returned a non-finite value");
    }
    out.scale = std::max(out.scale, std::abs(value));
    out.weighted[j] = node_factor(rule, j) * value;
  }
  return out;
}

Eigen::VectorXd project(const QuadratureRule& rule, const NodeSamples& samples,
                        int count) {
  const ChebKind family = family_of(rule.kind);
  Eigen::VectorXd values(count);
  for (int k = 0; k < count; ++k) {
    double sum = 0.0;
    for (int j = 0; j < rule.n; ++j) {
      sum += samples.weighted[j] * eval_cheb_trig(family, k, rule.thetas[j]);
    }
    double c = sum / orthogonality_norm(rule.kind, rule.n, k);
    if (std::abs(c) < kSubnormalCut) c = 0.0;
    values[k] = c;
  }
  return values;
}

}  // namespace

CoefficientSet discrete_coeffs(const QuadratureRule& rule,
                               const SampledFunction& f,
                               const Interval& interval) {
  const NodeSamples samples = sample(rule, f, interval);
  return CoefficientSet{family_of(rule.kind), interval,
                        project(rule, samples, rule.n),
                        DiscreteRuleSource{rule.kind, rule.n}, samples.scale};
}

CoefficientSet discrete_coeffs(QuadKind kind, const SampledFunction& f,
                               const Interval& interval, int n) {
  return discrete_coeffs(make_rule(kind, n), f, interval);
}

int min_reference_nodes(int k_max) { return std::max(4096, 64 * (k_max + 1)); }

CoefficientSet continuous_coeffs(ChebKind family, const SampledFunction& f,
                                 const Interval& interval, int k_max,
                                 int reference_nodes) {
  if (k_max < 0) throw std::invalid_argument("negative k_max");
  if (reference_nodes < min_reference_nodes(k_max)) {
    throw std::invalid_argument(
        "reference resolution " + std::to_string(reference_nodes) +
        " below the floor " + std::to_string(min_reference_nodes(k_max)));
  }
  const QuadratureRule rule = make_rule(reference_rule(family), reference_nodes);
  const NodeSamples samples = sample(rule, f, interval);
  return CoefficientSet{family, interval, project(rule, samples, k_max + 1),
                        ContinuousOracleSource{reference_nodes},
                        samples.scale};
}

double KindRelationsReport::max_residual() const {
  return std::max({second, third, fourth});
}

KindRelationsReport kind_relations_check(const SampledFunction& f,
                                         const Interval& interval, int k_max,
                                         int reference_nodes) {
  const CoefficientSet first =
      continuous_coeffs(ChebKind::First, f, interval, k_max + 2, reference_nodes);
  const CoefficientSet second =
      continuous_coeffs(ChebKind::Second, f, interval, k_max, reference_nodes);
  const CoefficientSet third =
      continuous_coeffs(ChebKind::Third, f, interval, k_max, reference_nodes);
  const CoefficientSet fourth =
      continuous_coeffs(ChebKind::Fourth, f, interval, k_max, reference_nodes);

  KindRelationsReport report;
  for (int k = 0; k <= k_max; ++k) {
    const double base = first[k] / gamma(k);
    report.second = std::max(report.second,
                             std::abs(second[k] - (base - 0.5 * first[k + 2])));
    report.third = std::max(report.third,
                            std::abs(third[k] - (base + 0.5 * first[k + 1])));
    report.fourth = std::max(report.fourth,
                             std::abs(fourth[k] - (base - 0.5 * first[k + 1])));
  }
  return report;
}

std::vector<MidpointLimitRow> midpoint_limit_check(
    const SampledFunction& f, const std::vector<Interval>& schedule,
    int k_max) {
  std::vector<MidpointLimitRow> rows;
  rows.reserve(schedule.size());
  for (const Interval& interval : schedule) {
    const CoefficientSet c = continuous_coeffs(
        ChebKind::First, f, interval, k_max, min_reference_nodes(k_max));
    double max_higher = 0.0;
    for (int k = 1; k <= k_max; ++k) {
      max_higher = std::max(max_higher, std::abs(c[k]));
    }
    rows.push_back({interval, std::abs(c[0] - f(interval.midpoint())),
                    max_higher});
  }
  return rows;
}

}  // namespace chebloc
