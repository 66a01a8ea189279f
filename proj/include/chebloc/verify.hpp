#pragma once

#include <string>
#include <vector>

namespace chebloc {

/// Trapezoid approximation of the integral over [-pi, pi] of
/// sin^l(theta) cos^q(theta) zeta(k theta), where zeta is cos for even
/// `parity` and sin for odd.  Exact for trigonometric polynomials of degree
/// below `samples`.
double trig_power_integral(int l, int q, int k, int parity, int samples = 10000);

struct SuiteResult {
  std::string name;
  bool passed = false;
  /// Largest observed deviation and the bound it is held to.
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Direct vs closed-form discrete orthogonality for every rule,
/// n <= 16, 0 <= k < n, 0 <= i <= 4n + 3; bound 1e-11 n.
SuiteResult check_discrete_orthogonality();

/// Weights sum to 2 (1e-13) and are positive for every rule with n <= 64.
SuiteResult check_weights();

/// Monomials of degree < n integrate exactly (1e-12 relative) for every rule
/// with n <= 12 on 20 pseudo-random intervals inside [-2, 2].
SuiteResult check_interpolatory_exactness();

/// Inter-family coefficient identities for e^x on [-0.5, 1], k <= 6,
/// 8192 reference nodes; bound 1e-10.
SuiteResult check_kind_relations();

/// Vanishing of the sine/cosine power integrals for l, q <= 4,
/// l + q < k <= 12, both parities; bound 1e-10.
SuiteResult check_trig_power_integrals();

std::vector<SuiteResult> run_property_suites();

}  // namespace chebloc
