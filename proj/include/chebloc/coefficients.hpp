#pragma once

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "chebloc/cheb_poly.hpp"
#include "chebloc/rules.hpp"

namespace chebloc {

/// A real function on [a, b] together with an optional regularity tag m
/// (f is m times continuously differentiable with a piecewise continuous
/// (m+2)-th derivative).  An empty tag means smooth.
struct SampledFunction {
  std::function<double(double)> evaluator;
  std::optional<int> regularity;

  double operator()(double x) const { return evaluator(x); }
};

struct DiscreteRuleSource {
  QuadKind kind;
  int n;
};

struct ContinuousOracleSource {
  int reference_nodes;
};

/// Coefficients c_0 .. c_{K-1} of f o xi in one Chebyshev family.
struct CoefficientSet {
  ChebKind family;
  Interval interval;
  Eigen::VectorXd values;
  std::variant<DiscreteRuleSource, ContinuousOracleSource> source;
  /// max |f| over the sampled points; sets the round-off scale of the values.
  double sample_scale = 0.0;

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int k) const { return values[k]; }
};

/// Discrete coefficients of the degree n-1 interpolant of f o xi at the
/// nodes of the rule.  f is evaluated exactly n times.
CoefficientSet discrete_coeffs(const QuadratureRule& rule,
                               const SampledFunction& f,
                               const Interval& interval);
CoefficientSet discrete_coeffs(QuadKind kind, const SampledFunction& f,
                               const Interval& interval, int n);

/// Smallest admissible oracle resolution for coefficients up to k_max.
int min_reference_nodes(int k_max);

/// Continuous coefficients c_0 .. c_{k_max} approximated by discrete ones on
/// reference_nodes points of the rule matched to `family`.
CoefficientSet continuous_coeffs(ChebKind family, const SampledFunction& f,
                                 const Interval& interval, int k_max,
                                 int reference_nodes);

/// Residuals of the identities expressing the U, V and W coefficients through
/// the T coefficients, maximized over k <= k_max.
struct KindRelationsReport {
  double second = 0.0;
  double third = 0.0;
  double fourth = 0.0;

  double max_residual() const;
};

KindRelationsReport kind_relations_check(const SampledFunction& f,
                                         const Interval& interval, int k_max,
                                         int reference_nodes);

struct MidpointLimitRow {
  Interval interval;
  /// |c_0 - f(x_0)| with x_0 the midpoint.
  double constant_error;
  /// max_{1 <= k <= k_max} |c_k|.
  double max_higher;
};

/// First-kind continuous coefficients along a sequence of shrinking intervals.
std::vector<MidpointLimitRow> midpoint_limit_check(
    const SampledFunction& f, const std::vector<Interval>& schedule,
    int k_max = 7);

}  // namespace chebloc
