#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "chebloc/analysis.hpp"
#include "chebloc/coefficients.hpp"
#include "chebloc/quadrature.hpp"
#include "chebloc/rules.hpp"

namespace chebloc {

/// 17 significant digits.
std::string format_real(double value);

/// {kind, n, thetas, nodes, weights}.
std::string rule_to_json(const QuadratureRule& rule);

/// Columns j, theta, node, weight.
void write_rule_csv(std::ostream& out, const QuadratureRule& rule);

/// Columns k, value.
void write_coefficients_csv(std::ostream& out, const CoefficientSet& c);

/// {family, a, b, source, values}.
std::string coefficients_to_json(const CoefficientSet& c);

/// {rule, n, patches, value, exact?, abs_error?, evaluations}.
std::string quad_result_to_json(const QuadResult& result, int patches,
                                std::optional<double> exact);

/// Header plus one line per row; the column set depends on report.kind:
///   decay:      family,rule,m,k,p,h,coeff_abs,ndr,tdr
///   quadrature: rule,m,n,p,h,error,noc,toc,floor_flag
///   composite:  rule,m,n,P,h,error,noc,toc,floor_flag
void write_report_csv(std::ostream& out, const StudyReport& report);

}  // namespace chebloc
