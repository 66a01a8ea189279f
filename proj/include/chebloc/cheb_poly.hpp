#pragma once

#include <Eigen/Core>

#include <string_view>

namespace chebloc {

/// The four classical Chebyshev families: T, U, V and W.
enum class ChebKind { First, Second, Third, Fourth };

std::string_view to_string(ChebKind kind);

/// A finite interval [a, b] with a < b, and the affine map from the
/// reference interval [-1, 1] onto it.
class Interval {
 public:
  Interval(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  double midpoint() const { return 0.5 * (a_ + b_); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

/// gamma_n: 1 for n == 0, 2 otherwise.
double gamma(int n);

/// Endpoint normalizer over n nodes: 2 for j == 0 or j == n - 1, 1 otherwise.
double gamma_tilde(int j, int n);

/// Evaluates P_degree(t) for the given family with the three-term recurrence
/// p_{k+1} = 2t p_k - p_{k-1}.  Arguments within 1e-12 of [-1, 1] are clamped;
/// anything further out throws std::domain_error.
double eval_cheb(ChebKind kind, int degree, double t);

/// P_0(t), ..., P_{count-1}(t) from one pass of the recurrence.
Eigen::VectorXd eval_cheb_sequence(ChebKind kind, int count, double t);

/// Evaluates P_degree(cos theta) through the trigonometric representation.
/// Removable singularities at theta = 0 and theta = pi are replaced by their
/// analytic limits.  theta outside [0, pi] throws std::domain_error.
double eval_cheb_trig(ChebKind kind, int degree, double theta);

/// xi(t) = h/2 t + (a+b)/2.
double affine_map(const Interval& interval, double t);

/// Inverse of affine_map, x in [a, b] -> t in [-1, 1].
double affine_inverse(const Interval& interval, double x);

}  // namespace chebloc
