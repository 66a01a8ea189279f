#include "chebloc/cheb_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebloc {

namespace {

constexpr double kClampBand = 1e-12;

double clamp_reference(double t) {
  if (!(std::abs(t) <= 1.0 + kClampBand)) {
    throw std::domain_error("argument " + std::to_string(t) +
                            " outside [-1, 1]");
  }
  return std::clamp(t, -1.0, 1.0);
}

double sign_of_degree(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// P_n(-x) = (-1)^n Q_n(x), with Q the reflected family.
ChebKind reflected(ChebKind kind) {
  switch (kind) {
    case ChebKind::Third:
      return ChebKind::Fourth;
    case ChebKind::Fourth:
      return ChebKind::Third;
    default:
      return kind;
  }
}

// theta in [0, pi/2]; only theta == 0 is singular here.
double trig_near_right_end(ChebKind kind, int n, double theta) {
  const double dn = static_cast<double>(n);
  switch (kind) {
    case ChebKind::First:
      return std::cos(dn * theta);
    case ChebKind::Second:
      if (theta == 0.0) return dn + 1.0;
      return std::sin((dn + 1.0) * theta) / std::sin(theta);
    case ChebKind::Third:
      return std::cos((dn + 0.5) * theta) / std::cos(0.5 * theta);
    case ChebKind::Fourth:
      if (theta == 0.0) return 2.0 * dn + 1.0;
      return std::sin((dn + 0.5) * theta) / std::sin(0.5 * theta);
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(ChebKind kind) {
  switch (kind) {
    case ChebKind::First:
      return "T";
    case ChebKind::Second:
      return "U";
    case ChebKind::Third:
      return "V";
    case ChebKind::Fourth:
      return "W";
  }
  return "?";
}

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("interval requires finite a < b, got [" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                "]");
  }
}

double gamma(int n) { return n == 0 ? 1.0 : 2.0; }

double gamma_tilde(int j, int n) { return (j == 0 || j == n - 1) ? 2.0 : 1.0; }

double eval_cheb(ChebKind kind, int degree, double t) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  t = clamp_reference(t);
  if (degree == 0) return 1.0;

  double prev = 1.0;
  double curr = 0.0;
  switch (kind) {
    case ChebKind::First:
      curr = t;
      break;
    case ChebKind::Second:
      curr = 2.0 * t;
      break;
    case ChebKind::Third:
      curr = 2.0 * t - 1.0;
      break;
    case ChebKind::Fourth:
      curr = 2.0 * t + 1.0;
      break;
  }
  for (int k = 1; k < degree; ++k) {
    const double next = 2.0 * t * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

Eigen::VectorXd eval_cheb_sequence(ChebKind kind, int count, double t) {
  if (count < 0) throw std::invalid_argument("negative count");
  t = clamp_reference(t);
  Eigen::VectorXd values(count);
  if (count == 0) return values;
  values[0] = 1.0;
  if (count == 1) return values;
  values[1] = eval_cheb(kind, 1, t);
  for (int k = 2; k < count; ++k) {
    values[k] = 2.0 * t * values[k - 1] - values[k - 2];
  }
  return values;
}

double eval_cheb_trig(ChebKind kind, int degree, double theta) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("angle " + std::to_string(theta) +
                            " outside [0, pi]");
  }
  if (theta <= 0.5 * std::numbers::pi) {
    return trig_near_right_end(kind, degree, theta);
  }
  // pi - theta is exact for theta in [pi/2, pi].
  return sign_of_degree(degree) *
         trig_near_right_end(reflected(kind), degree, std::numbers::pi - theta);
}

double affine_map(const Interval& interval, double t) {
  t = clamp_reference(t);
  return 0.5 * interval.length() * t + interval.midpoint();
}

double affine_inverse(const Interval& interval, double x) {
  const double h = interval.length();
  const double band = kClampBand * h;
  if (!(x >= interval.a() - band && x <= interval.b() + band)) {
    throw std::domain_error("point " + std::to_string(x) +
                            " outside the interval");
  }
  return std::clamp((2.0 * x - (interval.a() + interval.b())) / h, -1.0, 1.0);
}

}  // namespace chebloc
