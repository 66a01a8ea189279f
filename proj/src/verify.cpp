#include "chebloc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "chebloc/coefficients.hpp"
#include "chebloc/quadrature.hpp"
#include "chebloc/rules.hpp"

namespace chebloc {

namespace {

// Exact integral of x^d over [a, b].
double monomial_integral(int d, double a, double b) {
  return (std::pow(b, d + 1) - std::pow(a, d + 1)) / (d + 1);
}

// Exact integral of |x|^d over [a, b]; the scale for relative errors.
double abs_monomial_integral(int d, double a, double b) {
  auto primitive = [d](double x) {
    return std::copysign(std::pow(std::abs(x), d + 1) / (d + 1), x);
  };
  return primitive(b) - primitive(a);
}

SuiteResult finish(SuiteResult r) {
  r.passed = r.worst <= r.tolerance;
  return r;
}

}  // namespace

double trig_power_integral(int l, int q, int k, int parity, int samples) {
  const double step = 2.0 * std::numbers::pi / samples;
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = -std::numbers::pi + i * step;
    const double zeta =
        parity % 2 == 0 ? std::cos(k * theta) : std::sin(k * theta);
    sum += std::pow(std::sin(theta), l) * std::pow(std::cos(theta), q) * zeta;
  }
  return step * sum;
}

SuiteResult check_discrete_orthogonality() {
  SuiteResult r{"discrete_orthogonality", false, 0.0, 1.0, ""};
  double worst_ratio = 0.0;
  for (QuadKind kind : kAllQuadKinds) {
    for (int n = min_nodes(kind); n <= 16; ++n) {
      const QuadratureRule rule = make_rule(kind, n);
      for (int k = 0; k < n; ++k) {
        for (int i = 0; i <= 4 * n + 3; ++i) {
          const double diff =
              std::abs(discrete_orthogonality_sum(rule, i, k) -
                       closed_form_orthogonality(kind, n, i, k));
          // Reported as a multiple of the n-dependent bound.
          const double ratio = diff / (1e-11 * n);
          if (ratio > worst_ratio) {
            worst_ratio = ratio;
            std::ostringstream s;
            s << to_string(kind) << " n=" << n << " i=" << i << " k=" << k
              << " diff=" << diff;
            r.detail = s.str();
          }
        }
      }
    }
  }
  r.worst = worst_ratio;
  return finish(r);
}

SuiteResult check_weights() {
  SuiteResult r{"weights", false, 0.0, 1e-13, ""};
  bool positive = true;
  for (QuadKind kind : kAllQuadKinds) {
    for (int n = min_nodes(kind); n <= 64; ++n) {
      const QuadratureRule rule = make_rule(kind, n);
      const double dev = std::abs(rule.weights.sum() - 2.0);
      if (dev > r.worst) {
        r.worst = dev;
        r.detail = std::string(to_string(kind)) + " n=" + std::to_string(n);
      }
      if ((rule.weights.array() <= 0.0).any()) {
        positive = false;
        r.detail = std::string(to_string(kind)) + " n=" + std::to_string(n) +
                   " has a non-positive weight";
      }
    }
  }
  r = finish(r);
  r.passed = r.passed && positive;
  return r;
}

SuiteResult check_interpolatory_exactness() {
  SuiteResult r{"interpolatory_exactness", false, 0.0, 1e-12, ""};
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> endpoint(-2.0, 2.0);
  std::vector<Interval> intervals;
  while (intervals.size() < 20) {
    double a = endpoint(rng);
    double b = endpoint(rng);
    if (a > b) std::swap(a, b);
    if (b - a > 0.05) intervals.emplace_back(a, b);
  }
  for (QuadKind kind : kAllQuadKinds) {
    for (int n = min_nodes(kind); n <= 12; ++n) {
      const QuadratureRule rule = make_rule(kind, n);
      for (int d = 0; d < n; ++d) {
        const SampledFunction monomial{
            [d](double x) { return std::pow(x, d); }, std::nullopt};
        for (const Interval& iv : intervals) {
          const double exact = monomial_integral(d, iv.a(), iv.b());
          const double scale = abs_monomial_integral(d, iv.a(), iv.b());
          const double rel =
              std::abs(integrate(rule, monomial, iv).value - exact) / scale;
          if (rel > r.worst) {
            r.worst = rel;
            std::ostringstream s;
            s << to_string(kind) << " n=" << n << " d=" << d << " on ["
              << iv.a() << ", " << iv.b() << "]";
            r.detail = s.str();
          }
        }
      }
    }
  }
  return finish(r);
}

SuiteResult check_kind_relations() {
  SuiteResult r{"kind_relations", false, 0.0, 1e-10, ""};
  const SampledFunction f{[](double x) { return std::exp(x); }, std::nullopt};
  r.worst = kind_relations_check(f, Interval(-0.5, 1.0), 6, 8192).max_residual();
  r.detail = "exp on [-0.5, 1], k <= 6";
  return finish(r);
}

SuiteResult check_trig_power_integrals() {
  SuiteResult r{"trig_power_integrals", false, 0.0, 1e-10, ""};
  for (int l = 0; l <= 4; ++l) {
    for (int q = 0; q <= 4; ++q) {
      for (int k = l + q + 1; k <= 12; ++k) {
        for (int parity = 0; parity < 2; ++parity) {
          const double v = std::abs(trig_power_integral(l, q, k, parity));
          if (v > r.worst) {
            r.worst = v;
            std::ostringstream s;
            s << "l=" << l << " q=" << q << " k=" << k << " parity=" << parity;
            r.detail = s.str();
          }
        }
      }
    }
  }
  return finish(r);
}

std::vector<SuiteResult> run_property_suites() {
  return {check_discrete_orthogonality(), check_weights(),
          check_interpolatory_exactness(), check_kind_relations(),
          check_trig_power_integrals()};
}

}  // namespace chebloc
