#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chebloc/coefficients.hpp"
#include "chebloc/rules.hpp"

namespace chebloc {

/// log2(coarse / fine); empty when either value is not strictly positive.
std::optional<double> rate(double coarse, double fine);

/// A test integrand with a closed-form antiderivative.
struct TestFunction {
  std::string id;
  /// Regularity m; empty for smooth functions.
  std::optional<int> regularity;
  std::function<double(double)> evaluator;
  std::function<double(double)> antiderivative;

  double operator()(double x) const { return evaluator(x); }
  double integral(const Interval& interval) const;
  SampledFunction sampled() const;
};

/// f(x) = x^m |x| + e^x, with F(x) = |x| x^{m+1} / (m+2) + e^x.
TestFunction xm_abs_exp(int m);

/// f(x) = e^x.
TestFunction exponential();

/// sum_i coefficients[i] x^i.
TestFunction polynomial(std::vector<double> coefficients);

/// Intervals [-1/(2p), 1/p] for p = 1, 2, 4, ..., p_max.
struct ShrinkSchedule {
  std::vector<int> p_values;

  static ShrinkSchedule doubling(int p_max = 1024);
  static Interval interval_for(int p);
};

/// n_0: 1 for odd n, 0 for even n.
int parity_correction(int n);

/// min{k, m+1}, or k for smooth functions.
int theoretical_decay_rate(int k, std::optional<int> regularity);

/// min{n+1+n_0, m+2}, or n+1+n_0 for smooth functions.
int theoretical_order(int n, std::optional<int> regularity);

/// min{n+n_0, m+2} in the patch width of an equispaced composite rule.
int theoretical_composite_order(int n, std::optional<int> regularity);

/// Below-floor cutoffs: values under these are round-off and are not rated.
double quadrature_floor(double exact_integral);
double coefficient_floor(double sample_scale);

enum class StudyKind { CoefficientDecay, Quadrature, Composite };

struct StudyRow {
  QuadKind rule;
  ChebKind family;
  std::optional<int> regularity;
  int n = 0;
  /// Coefficient index; unused outside decay studies.
  int k = 0;
  /// Shrink parameter p, or the patch count for composite studies.
  int step = 0;
  double h = 0.0;
  /// |c~_k| or the absolute quadrature error.
  double measured = 0.0;
  std::optional<double> rate;
  int theory = 0;
  bool below_floor = false;
};

/// Rows ordered by series (m, n, k) and then by step.  Each series starts a
/// new rate chain, so its first row has no rate.
struct StudyReport {
  StudyKind kind;
  std::vector<StudyRow> rows;

  void append(const StudyReport& other);
};

/// |c~_k| of f on each interval of the schedule, for each k in `ks`.
StudyReport coefficient_decay_study(QuadKind kind, const TestFunction& f,
                                    int n, const std::vector<int>& ks,
                                    const ShrinkSchedule& schedule);

/// Absolute error of the n-point rule on each interval of the schedule, for
/// each n in `ns`.
StudyReport quadrature_convergence_study(QuadKind kind, const TestFunction& f,
                                         const std::vector<int>& ns,
                                         const ShrinkSchedule& schedule);

/// Absolute error of the composite rule on [a, b] for each patch count.
StudyReport composite_convergence_study(QuadKind kind, const TestFunction& f,
                                        int n, const Interval& interval,
                                        const std::vector<int>& patch_counts);

/// Rows of `report` belonging to one series, in step order.
std::vector<StudyRow> series(const StudyReport& report,
                             std::optional<int> regularity, int n, int k);

/// Rate over the span of the last `halvings` consecutive above-floor steps,
/// log2(v[i-halvings] / v[i]) / halvings.  Empty when the series has fewer
/// than halvings + 1 above-floor rows.
std::optional<double> tail_rate(const std::vector<StudyRow>& rows,
                                int halvings = 3);

/// Powers of two 1, 2, ..., up to and including `last`.
std::vector<int> powers_of_two(int last);

}  // namespace chebloc
