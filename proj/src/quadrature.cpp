#include "chebloc/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace chebloc {

void CompensatedSum::add(double value) {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    correction_ += (sum_ - t) + value;
  } else {
    correction_ += (value - t) + sum_;
  }
  sum_ = t;
}

Partition::Partition(Interval interval, std::vector<double> breakpoints)
    : interval_(interval), breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2) {
    throw std::invalid_argument("partition needs at least one patch");
  }
  if (breakpoints_.front() != interval_.a() ||
      breakpoints_.back() != interval_.b()) {
    throw std::invalid_argument("partition must start at a and end at b");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
}

Partition Partition::equispaced(const Interval& interval, int patches) {
  if (patches < 1) {
    throw std::invalid_argument("patch count must be positive, got " +
                                std::to_string(patches));
  }
  const double step = interval.length() / patches;
  std::vector<double> points(patches + 1);
  for (int p = 0; p < patches; ++p) points[p] = interval.a() + p * step;
  points[patches] = interval.b();
  return Partition(interval, std::move(points));
}

Interval Partition::patch(int p) const {
  return Interval(breakpoints_.at(p), breakpoints_.at(p + 1));
}

QuadResult integrate(const QuadratureRule& rule, const SampledFunction& f,
                     const Interval& interval) {
  CompensatedSum sum;
  for (int j = 0; j < rule.n; ++j) {
    sum.add(rule.weights[j] * f(affine_map(interval, rule.nodes[j])));
  }
  return {0.5 * interval.length() * sum.result(), rule.kind, rule.n, rule.n};
}

QuadResult integrate(QuadKind kind, const SampledFunction& f,
                     const Interval& interval, int n) {
  return integrate(make_rule(kind, n), f, interval);
}

QuadResult integrate_composite(const QuadratureRule& rule,
                               const SampledFunction& f,
                               const Partition& partition) {
  CompensatedSum sum;
  std::int64_t evaluations = 0;
  for (int p = 0; p < partition.patches(); ++p) {
    const QuadResult part = integrate(rule, f, partition.patch(p));
    sum.add(part.value);
    evaluations += part.evaluations;
  }
  return {sum.result(), rule.kind, rule.n, evaluations};
}

QuadResult integrate_composite(QuadKind kind, const SampledFunction& f,
                               const Interval& interval, int patches, int n) {
  return integrate_composite(make_rule(kind, n), f,
                             Partition::equispaced(interval, patches));
}

Interpolant::Interpolant(const QuadratureRule& rule, const SampledFunction& f,
                         const Interval& interval)
    : coefficients_(discrete_coeffs(rule, f, interval)) {}

double Interpolant::operator()(double x) const {
  const double t = affine_inverse(coefficients_.interval, x);
  const Eigen::VectorXd basis =
      eval_cheb_sequence(coefficients_.family, coefficients_.size(), t);
  return coefficients_.values.dot(basis);
}

double interpolant_eval(QuadKind kind, const SampledFunction& f,
                        const Interval& interval, int n, double x) {
  // Range check before spending n evaluations of f.
  affine_inverse(interval, x);
  return Interpolant(make_rule(kind, n), f, interval)(x);
}

}  // namespace chebloc
