#pragma once

#include <Eigen/Core>

#include <string>
#include <string_view>

#include "chebloc/cheb_poly.hpp"

namespace chebloc {

/// Interpolatory rules built on Chebyshev points.  FejerI and FejerII use the
/// zeros of T_n and U_n, FejerIII and FejerIV the zeros of V_n and W_n, and
/// ClenshawCurtis the extrema of T_{n-1}.
enum class QuadKind { FejerI, ClenshawCurtis, FejerII, FejerIII, FejerIV };

inline constexpr QuadKind kAllQuadKinds[] = {
    QuadKind::FejerI, QuadKind::ClenshawCurtis, QuadKind::FejerII,
    QuadKind::FejerIII, QuadKind::FejerIV};

/// Short label used on the command line and in reports: f1, cc, f2, f3, f4.
std::string_view to_string(QuadKind kind);

/// Inverse of to_string; throws std::invalid_argument on an unknown label.
QuadKind parse_quad_kind(std::string_view label);

/// Polynomial family whose discrete coefficients live on this rule's nodes.
ChebKind family_of(QuadKind kind);

/// Smallest admissible node count (2 for Clenshaw-Curtis, 1 otherwise).
int min_nodes(QuadKind kind);

/// Nodes and weights of an n-point rule on [-1, 1].
///
/// Index j runs with increasing angle, so nodes are strictly decreasing.
/// Angles are kept next to the nodes so trigonometric sums never go
/// through arccos.
struct QuadratureRule {
  QuadKind kind;
  int n;
  Eigen::VectorXd thetas;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Builds the rule from the closed-form angle and weight expressions.
/// Throws std::invalid_argument when n < min_nodes(kind).
QuadratureRule make_rule(QuadKind kind, int n);

/// Per-node factor entering the discrete inner product of the rule:
/// 1 (F-I), 1/gamma_tilde_j (CC), 1 - t_j^2 (F-II), 1 + t_j (F-III),
/// 1 - t_j (F-IV).
double node_factor(const QuadratureRule& rule, int j);

/// sum_j node_factor_j P_i(t_j) P_k(t_j) by direct summation, with P the
/// rule's family.  k must lie in [0, n-1]; i >= 0 is unrestricted.
double discrete_orthogonality_sum(QuadKind kind, int n, int i, int k);
double discrete_orthogonality_sum(const QuadratureRule& rule, int i, int k);

/// Closed-form value of discrete_orthogonality_sum (case analysis on the
/// divisibility of i -/+ k by the rule's period).
double closed_form_orthogonality(QuadKind kind, int n, int i, int k);

/// Diagonal value of the discrete inner product, i.e. the closed form at
/// i == k.  Discrete coefficients are normalized by this.
double orthogonality_norm(QuadKind kind, int n, int k);

/// L_j(t) written as a finite sum in the rule's family.
double lagrange_basis_eval(const QuadratureRule& rule, int j, double t);
double lagrange_basis_eval(QuadKind kind, int n, int j, double t);

}  // namespace chebloc
