#include "chebloc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "chebloc/quadrature.hpp"

namespace chebloc {

namespace {

constexpr double kFloorScale = 5e-15;

std::optional<double> chained_rate(const std::optional<StudyRow>& previous,
                                   const StudyRow& current) {
  if (!previous || previous->below_floor || current.below_floor) {
    return std::nullopt;
  }
  return rate(previous->measured, current.measured);
}

}  // namespace

std::optional<double> rate(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0)) return std::nullopt;
  return std::log2(coarse / fine);
}

double TestFunction::integral(const Interval& interval) const {
  return antiderivative(interval.b()) - antiderivative(interval.a());
}

SampledFunction TestFunction::sampled() const {
  return SampledFunction{evaluator, regularity};
}

TestFunction xm_abs_exp(int m) {
  if (m < 0) throw std::invalid_argument("regularity m must be >= 0");
  return TestFunction{
      "xm_abs_exp",
      m,
      [m](double x) { return std::pow(x, m) * std::abs(x) + std::exp(x); },
      [m](double x) {
        return std::abs(x) * std::pow(x, m + 1) / (m + 2) + std::exp(x);
      }};
}

TestFunction exponential() {
  return TestFunction{"exp", std::nullopt, [](double x) { return std::exp(x); },
                      [](double x) { return std::exp(x); }};
}

TestFunction polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) {
    throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  std::ostringstream id;
  id << "poly:";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    id << (i ? "," : "") << coefficients[i];
  }
  auto horner = [c = coefficients](double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::vector<double> primitive(coefficients.size() + 1, 0.0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    primitive[i + 1] = coefficients[i] / static_cast<double>(i + 1);
  }
  auto primitive_horner = [c = std::move(primitive)](double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  return TestFunction{id.str(), std::nullopt, horner, primitive_horner};
}

ShrinkSchedule ShrinkSchedule::doubling(int p_max) {
  return ShrinkSchedule{powers_of_two(p_max)};
}

Interval ShrinkSchedule::interval_for(int p) {
  if (p < 1) throw std::invalid_argument("shrink parameter p must be >= 1");
  return Interval(-1.0 / (2.0 * p), 1.0 / p);
}

int parity_correction(int n) { return n % 2 == 1 ? 1 : 0; }

int theoretical_decay_rate(int k, std::optional<int> regularity) {
  return regularity ? std::min(k, *regularity + 1) : k;
}

int theoretical_order(int n, std::optional<int> regularity) {
  const int nodes_limit = n + 1 + parity_correction(n);
  return regularity ? std::min(nodes_limit, *regularity + 2) : nodes_limit;
}

int theoretical_composite_order(int n, std::optional<int> regularity) {
  const int nodes_limit = n + parity_correction(n);
  return regularity ? std::min(nodes_limit, *regularity + 2) : nodes_limit;
}

double quadrature_floor(double exact_integral) {
  return kFloorScale * (1.0 + std::abs(exact_integral));
}

double coefficient_floor(double sample_scale) {
  return kFloorScale * (1.0 + std::abs(sample_scale));
}

void StudyReport::append(const StudyReport& other) {
  if (other.kind != kind) {
    throw std::invalid_argument("cannot merge reports of different kinds");
  }
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

StudyReport coefficient_decay_study(QuadKind kind, const TestFunction& f,
                                    int n, const std::vector<int>& ks,
                                    const ShrinkSchedule& schedule) {
  for (int k : ks) {
    if (k < 1 || k > n - 1) {
      throw std::invalid_argument("coefficient index " + std::to_string(k) +
                                  " outside [1, n-1]");
    }
  }
  const QuadratureRule rule = make_rule(kind, n);
  const SampledFunction sampled = f.sampled();

  std::vector<CoefficientSet> per_step;
  per_step.reserve(schedule.p_values.size());
  for (int p : schedule.p_values) {
    per_step.push_back(
        discrete_coeffs(rule, sampled, ShrinkSchedule::interval_for(p)));
  }

  StudyReport report{StudyKind::CoefficientDecay, {}};
  for (int k : ks) {
    std::optional<StudyRow> previous;
    for (std::size_t s = 0; s < per_step.size(); ++s) {
      const CoefficientSet& c = per_step[s];
      StudyRow row;
      row.rule = kind;
      row.family = c.family;
      row.regularity = f.regularity;
      row.n = n;
      row.k = k;
      row.step = schedule.p_values[s];
      row.h = c.interval.length();
      row.measured = std::abs(c[k]);
      row.theory = theoretical_decay_rate(k, f.regularity);
      row.below_floor = row.measured < coefficient_floor(c.sample_scale);
      row.rate = chained_rate(previous, row);
      report.rows.push_back(row);
      previous = row;
    }
  }
  return report;
}

StudyReport quadrature_convergence_study(QuadKind kind, const TestFunction& f,
                                         const std::vector<int>& ns,
                                         const ShrinkSchedule& schedule) {
  StudyReport report{StudyKind::Quadrature, {}};
  report.rows.reserve(ns.size() * schedule.p_values.size());
  const SampledFunction sampled = f.sampled();
  for (int n : ns) {
    const QuadratureRule rule = make_rule(kind, n);
    std::optional<StudyRow> previous;
    for (int p : schedule.p_values) {
      const Interval interval = ShrinkSchedule::interval_for(p);
      const double exact = f.integral(interval);
      StudyRow row;
      row.rule = kind;
      row.family = family_of(kind);
      row.regularity = f.regularity;
      row.n = n;
      row.step = p;
      row.h = interval.length();
      row.measured = std::abs(exact - integrate(rule, sampled, interval).value);
      row.theory = theoretical_order(n, f.regularity);
      row.below_floor = row.measured < quadrature_floor(exact);
      row.rate = chained_rate(previous, row);
      report.rows.push_back(row);
      previous = row;
    }
  }
  return report;
}

StudyReport composite_convergence_study(QuadKind kind, const TestFunction& f,
                                        int n, const Interval& interval,
                                        const std::vector<int>& patch_counts) {
  StudyReport report{StudyKind::Composite, {}};
  report.rows.reserve(patch_counts.size());
  const QuadratureRule rule = make_rule(kind, n);
  const SampledFunction sampled = f.sampled();
  const double exact = f.integral(interval);
  std::optional<StudyRow> previous;
  for (int patches : patch_counts) {
    const Partition partition = Partition::equispaced(interval, patches);
    StudyRow row;
    row.rule = kind;
    row.family = family_of(kind);
    row.regularity = f.regularity;
    row.n = n;
    row.step = patches;
    row.h = interval.length() / patches;
    row.measured =
        std::abs(exact - integrate_composite(rule, sampled, partition).value);
    row.theory = theoretical_composite_order(n, f.regularity);
    row.below_floor = row.measured < quadrature_floor(exact);
    row.rate = chained_rate(previous, row);
    report.rows.push_back(row);
    previous = row;
  }
  return report;
}

std::vector<StudyRow> series(const StudyReport& report,
                             std::optional<int> regularity, int n, int k) {
  std::vector<StudyRow> out;
  for (const StudyRow& row : report.rows) {
    if (row.regularity == regularity && row.n == n && row.k == k) {
      out.push_back(row);
    }
  }
  return out;
}

std::optional<double> tail_rate(const std::vector<StudyRow>& rows,
                                 int halvings) {
  if (halvings < 1) throw std::invalid_argument("halvings must be >= 1");
  // Initial run of above-floor rows; round-off tails are ignored even if a
  // later row happens to climb back over the floor.
  std::size_t run = 0;
  while (run < rows.size() && !rows[run].below_floor) ++run;
  if (run < static_cast<std::size_t>(halvings) + 1) return std::nullopt;
  const StudyRow& fine = rows[run - 1];
  const StudyRow& coarse = rows[run - 1 - halvings];
  const auto span = rate(coarse.measured, fine.measured);
  if (!span) return std::nullopt;
  return *span / halvings;
}

std::vector<int> powers_of_two(int last) {
  if (last < 1) throw std::invalid_argument("schedule end must be >= 1");
  std::vector<int> out;
  for (long p = 1; p <= last; p *= 2) out.push_back(static_cast<int>(p));
  return out;
}

}  // namespace chebloc
