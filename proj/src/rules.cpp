#include "chebloc/rules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebloc {

namespace {

constexpr double kPi = std::numbers::pi;

// Returns true and sets `parity` to (-1)^(value / period) when period | value.
bool divides(long period, long value, double& parity) {
  if (value % period != 0) return false;
  const long quotient = value / period;
  parity = (quotient % 2 == 0) ? 1.0 : -1.0;
  return true;
}

double fejer_first_weight(int n, double theta) {
  double sum = 0.0;
  for (int k = 1; k <= n / 2; ++k) {
    sum += std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
  }
  return 2.0 / n * (1.0 - 2.0 * sum);
}

double clenshaw_curtis_weight(int n, int j, double theta) {
  double sum = 0.0;
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    sum += 2.0 / gamma_tilde(2 * k, n) * std::cos(2.0 * k * theta) /
           (4.0 * k * k - 1.0);
  }
  return 2.0 / ((n - 1) * gamma_tilde(j, n)) * (1.0 - sum);
}

// Shared by F-II (scale n + 1) and F-III / F-IV (scale n + 1/2).
double odd_sine_weight(int n, double scale, double theta) {
  double sum = 0.0;
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    sum += std::sin((2.0 * k - 1.0) * theta) / (2.0 * k - 1.0);
  }
  return 4.0 * std::sin(theta) / scale * sum;
}

// theta_j = (numerator / denominator) pi.
struct AngleFraction {
  long numerator;
  long denominator;
};

AngleFraction node_angle(QuadKind kind, int n, int j) {
  switch (kind) {
    case QuadKind::FejerI:
      return {2L * j + 1, 2L * n};
    case QuadKind::ClenshawCurtis:
      return {j, n - 1L};
    case QuadKind::FejerII:
      return {j + 1L, n + 1L};
    case QuadKind::FejerIII:
      return {2L * j + 1, 2L * n + 1};
    case QuadKind::FejerIV:
      return {2L * j + 2, 2L * n + 1};
  }
  return {0, 1};
}

double angle_value(AngleFraction f) {
  return std::min(kPi, kPi * static_cast<double>(f.numerator) /
                           static_cast<double>(f.denominator));
}

// cos(theta) written as sin(pi/2 - theta) with the difference formed in
// integers, so mirrored nodes are exact negatives and the centre is 0.
double node_value(AngleFraction f) {
  const long offset = f.denominator - 2 * f.numerator;
  return std::sin(kPi * static_cast<double>(offset) /
                  (2.0 * static_cast<double>(f.denominator)));
}

void check_nodes(QuadKind kind, int n) {
  if (n < min_nodes(kind)) {
    throw std::invalid_argument(std::string(to_string(kind)) +
                                " rule needs n >= " +
                                std::to_string(min_nodes(kind)) + ", got " +
                                std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(QuadKind kind) {
  switch (kind) {
    case QuadKind::FejerI:
      return "f1";
    case QuadKind::ClenshawCurtis:
      return "cc";
    case QuadKind::FejerII:
      return "f2";
    case QuadKind::FejerIII:
      return "f3";
    case QuadKind::FejerIV:
      return "f4";
  }
  return "?";
}

QuadKind parse_quad_kind(std::string_view label) {
  for (QuadKind kind : kAllQuadKinds) {
    if (to_string(kind) == label) return kind;
  }
  throw std::invalid_argument("unknown rule '" + std::string(label) +
                              "' (expected f1, cc, f2, f3 or f4)");
}

ChebKind family_of(QuadKind kind) {
  switch (kind) {
    case QuadKind::FejerI:
    case QuadKind::ClenshawCurtis:
      return ChebKind::First;
    case QuadKind::FejerII:
      return ChebKind::Second;
    case QuadKind::FejerIII:
      return ChebKind::Third;
    case QuadKind::FejerIV:
      return ChebKind::Fourth;
  }
  return ChebKind::First;
}

int min_nodes(QuadKind kind) {
  return kind == QuadKind::ClenshawCurtis ? 2 : 1;
}

QuadratureRule make_rule(QuadKind kind, int n) {
  check_nodes(kind, n);
  QuadratureRule rule{kind, n, Eigen::VectorXd(n), Eigen::VectorXd(n),
                      Eigen::VectorXd(n)};
  for (int j = 0; j < n; ++j) {
    const AngleFraction fraction = node_angle(kind, n, j);
    const double theta = angle_value(fraction);
    rule.thetas[j] = theta;
    rule.nodes[j] = node_value(fraction);
    switch (kind) {
      case QuadKind::FejerI:
        rule.weights[j] = fejer_first_weight(n, theta);
        break;
      case QuadKind::ClenshawCurtis:
        rule.weights[j] = clenshaw_curtis_weight(n, j, theta);
        break;
      case QuadKind::FejerII:
        rule.weights[j] = odd_sine_weight(n, n + 1.0, theta);
        break;
      case QuadKind::FejerIII:
      case QuadKind::FejerIV:
        rule.weights[j] = odd_sine_weight(n, n + 0.5, theta);
        break;
    }
  }
  return rule;
}

double node_factor(const QuadratureRule& rule, int j) {
  const double theta = rule.thetas[j];
  switch (rule.kind) {
    case QuadKind::FejerI:
      return 1.0;
    case QuadKind::ClenshawCurtis:
      return 1.0 / gamma_tilde(j, rule.n);
    case QuadKind::FejerII: {
      const double s = std::sin(theta);
      return s * s;
    }
    case QuadKind::FejerIII: {
      const double c = std::cos(0.5 * theta);
      return 2.0 * c * c;
    }
    case QuadKind::FejerIV: {
      const double s = std::sin(0.5 * theta);
      return 2.0 * s * s;
    }
  }
  return 0.0;
}

double discrete_orthogonality_sum(const QuadratureRule& rule, int i, int k) {
  if (k < 0 || k >= rule.n) {
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " outside [0, n-1]");
  }
  if (i < 0) throw std::invalid_argument("negative index i");
  const ChebKind family = family_of(rule.kind);
  double sum = 0.0;
  for (int j = 0; j < rule.n; ++j) {
    const double theta = rule.thetas[j];
    sum += node_factor(rule, j) * eval_cheb_trig(family, i, theta) *
           eval_cheb_trig(family, k, theta);
  }
  return sum;
}

double discrete_orthogonality_sum(QuadKind kind, int n, int i, int k) {
  return discrete_orthogonality_sum(make_rule(kind, n), i, k);
}

double closed_form_orthogonality(QuadKind kind, int n, int i, int k) {
  check_nodes(kind, n);
  if (k < 0 || k >= n) {
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " outside [0, n-1]");
  }
  if (i < 0) throw std::invalid_argument("negative index i");

  const long li = i;
  const long lk = k;
  double parity = 1.0;
  switch (kind) {
    case QuadKind::FejerI: {
      // Both alignments may hold at once (k == 0, i a multiple of 2n); each
      // contributes n/2 with its own sign.
      const long period = 2L * n;
      double value = 0.0;
      if (divides(period, li - lk, parity)) value += 0.5 * n * parity;
      if (divides(period, li + lk, parity)) value += 0.5 * n * parity;
      return value;
    }
    case QuadKind::ClenshawCurtis: {
      const long period = 2L * (n - 1);
      const double half = 0.5 * (n - 1);
      if (divides(period, li - lk, parity)) return half * gamma_tilde(k, n);
      if (divides(period, li + lk, parity) && 0 < k && k < n - 1) return half;
      return 0.0;
    }
    case QuadKind::FejerII: {
      const long period = 2L * (n + 1);
      const double half = 0.5 * (n + 1);
      if (divides(period, li - lk, parity)) return half;
      if (divides(period, li + lk + 2, parity)) return -half;
      return 0.0;
    }
    case QuadKind::FejerIII: {
      const long period = 2L * n + 1;
      const double scale = n + 0.5;
      if (divides(period, li - lk, parity)) return scale * parity;
      if (divides(period, li + lk + 1, parity)) return scale * parity;
      return 0.0;
    }
    case QuadKind::FejerIV: {
      const long period = 2L * n + 1;
      const double scale = n + 0.5;
      if (divides(period, li - lk, parity)) return scale;
      if (divides(period, li + lk + 1, parity)) return -scale;
      return 0.0;
    }
  }
  return 0.0;
}

double orthogonality_norm(QuadKind kind, int n, int k) {
  return closed_form_orthogonality(kind, n, k, k);
}

double lagrange_basis_eval(const QuadratureRule& rule, int j, double t) {
  if (j < 0 || j >= rule.n) {
    throw std::invalid_argument("node index " + std::to_string(j) +
                                " outside [0, n-1]");
  }
  const ChebKind family = family_of(rule.kind);
  const Eigen::VectorXd at_t = eval_cheb_sequence(family, rule.n, t);
  double sum = 0.0;
  for (int k = 0; k < rule.n; ++k) {
    sum += eval_cheb_trig(family, k, rule.thetas[j]) * at_t[k] /
           orthogonality_norm(rule.kind, rule.n, k);
  }
  return node_factor(rule, j) * sum;
}

double lagrange_basis_eval(QuadKind kind, int n, int j, double t) {
  return lagrange_basis_eval(make_rule(kind, n), j, t);
}

}  // namespace chebloc
