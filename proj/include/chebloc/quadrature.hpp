#pragma once

#include <cstdint>
#include <vector>

#include "chebloc/coefficients.hpp"
#include "chebloc/rules.hpp"

namespace chebloc {

/// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(double value);
  double result() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

/// a = a_0 < a_1 < ... < a_P = b.
class Partition {
 public:
  Partition(Interval interval, std::vector<double> breakpoints);

  /// P patches of length (b - a) / P; the last breakpoint is b exactly.
  static Partition equispaced(const Interval& interval, int patches);

  const Interval& interval() const { return interval_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  int patches() const { return static_cast<int>(breakpoints_.size()) - 1; }
  Interval patch(int p) const;

 private:
  Interval interval_;
  std::vector<double> breakpoints_;
};

struct QuadResult {
  double value;
  QuadKind rule;
  int n;
  std::int64_t evaluations;
};

/// (h/2) sum_j w_j f(xi(t_j)).
QuadResult integrate(const QuadratureRule& rule, const SampledFunction& f,
                     const Interval& interval);
QuadResult integrate(QuadKind kind, const SampledFunction& f,
                     const Interval& interval, int n);

/// Sum over patches of the single-patch rule, reduced in patch order.  With
/// one patch the result is bit-identical to integrate().
QuadResult integrate_composite(const QuadratureRule& rule,
                               const SampledFunction& f,
                               const Partition& partition);
QuadResult integrate_composite(QuadKind kind, const SampledFunction& f,
                               const Interval& interval, int patches, int n);

/// The interpolant sum_k c~_k P_k(xi^{-1}(x)) in the rule's family.
class Interpolant {
 public:
  Interpolant(const QuadratureRule& rule, const SampledFunction& f,
              const Interval& interval);

  double operator()(double x) const;
  const CoefficientSet& coefficients() const { return coefficients_; }

 private:
  CoefficientSet coefficients_;
};

double interpolant_eval(QuadKind kind, const SampledFunction& f,
                        const Interval& interval, int n, double x);

}  // namespace chebloc
