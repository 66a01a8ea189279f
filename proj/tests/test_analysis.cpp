#include <doctest.h>

#include <cmath>

#include "chebloc/analysis.hpp"
#include "chebloc/quadrature.hpp"

using namespace chebloc;

TEST_SUITE("analysis") {
  TEST_CASE("rate") {
    CHECK(*rate(4.80e-3, 1.20e-3) == doctest::Approx(2.0));
    CHECK(*rate(0.7, 0.7) == 0.0);
    CHECK(*rate(8.0, 1.0) == 3.0);
    CHECK_FALSE(rate(0.0, 1.0).has_value());
    CHECK_FALSE(rate(1.0, -1.0).has_value());
  }

  TEST_CASE("antiderivatives differentiate back") {
    for (int m = 0; m <= 10; ++m) {
      const TestFunction f = xm_abs_exp(m);
      for (double x : {-0.9, -0.3, 0.2, 0.7}) {
        const double step = 1e-5;
        const double fd = (f.antiderivative(x + step) - f.antiderivative(x - step)) / (2 * step);
        CHECK(fd == doctest::Approx(f(x)).epsilon(1e-8));
      }
      CHECK(f.antiderivative(1e-12) == doctest::Approx(f.antiderivative(-1e-12)));
      CHECK(f.regularity == m);
    }
    const TestFunction p = polynomial({1.0, 0.0, 3.0});
    CHECK(p.id == "poly:1,0,3");
    CHECK(p(2.0) == 13.0);
    CHECK(p.integral(Interval(0.0, 1.0)) == doctest::Approx(2.0));
    CHECK(exponential().integral(Interval(0.0, 1.0)) == doctest::Approx(std::exp(1.0) - 1.0));
    CHECK_THROWS_AS(xm_abs_exp(-1), std::invalid_argument);
  }

  TEST_CASE("schedule") {
    const ShrinkSchedule s = ShrinkSchedule::doubling();
    REQUIRE(s.p_values.size() == 11);
    CHECK(s.p_values.back() == 1024);
    for (int p : s.p_values) {
      const Interval iv = ShrinkSchedule::interval_for(p);
      CHECK(iv.a() < 0.0);
      CHECK(iv.b() > 0.0);
      CHECK(iv.length() == doctest::Approx(1.5 / p));
    }
  }

  TEST_CASE("theoretical rates") {
    CHECK(theoretical_decay_rate(7, 4) == 5);
    CHECK(theoretical_decay_rate(2, std::nullopt) == 2);
    CHECK(theoretical_order(8, 0) == 2);
    CHECK(theoretical_order(1, 10) == 3);
    CHECK(theoretical_order(2, 10) == 3);
    CHECK(theoretical_order(5, 10) == 7);
    CHECK(theoretical_composite_order(3, 10) == 4);
    CHECK(theoretical_composite_order(4, 0) == 2);
  }

  TEST_CASE("quadrature study layout and floor handling") {
    const StudyReport r = quadrature_convergence_study(
        QuadKind::FejerI, xm_abs_exp(4), {8}, ShrinkSchedule::doubling());
    REQUIRE(r.rows.size() == 11);
    CHECK_FALSE(r.rows[0].rate.has_value());
    CHECK(r.rows[0].measured == doctest::Approx(1.46e-6).epsilon(0.01));
    CHECK(*r.rows[1].rate == doctest::Approx(6.0).epsilon(0.01));
    bool seen_floor = false;
    for (const StudyRow& row : r.rows) {
      if (row.below_floor) seen_floor = true;
      if (seen_floor) CHECK_FALSE(row.rate.has_value());
      CHECK(row.theory == 6);
    }
    CHECK(seen_floor);

    const StudyReport smooth = quadrature_convergence_study(
        QuadKind::FejerI, exponential(), {8}, ShrinkSchedule::doubling());
    CHECK(smooth.rows[3].below_floor);
  }

  TEST_CASE("decay study") {
    const StudyReport r = coefficient_decay_study(
        QuadKind::FejerI, exponential(), 8, {2}, ShrinkSchedule::doubling());
    CHECK(*tail_rate(r.rows) == doctest::Approx(2.0).epsilon(0.01));
    CHECK_THROWS_AS(coefficient_decay_study(QuadKind::FejerI, exponential(), 8, {8},
                                            ShrinkSchedule::doubling()),
                    std::invalid_argument);

    const StudyReport kink = coefficient_decay_study(
        QuadKind::FejerII, xm_abs_exp(0), 8, {3, 5}, ShrinkSchedule::doubling());
    for (int k : {3, 5}) {
      const auto rows = series(kink, 0, 8, k);
      REQUIRE(rows.size() == 11);
      CHECK(*tail_rate(rows) == doctest::Approx(1.0).epsilon(0.05));
      CHECK(rows.front().theory == 1);
    }
  }

  TEST_CASE("composite study") {
    const TestFunction f = xm_abs_exp(10);
    const Interval iv(-0.5, 1.0);
    const StudyReport r = composite_convergence_study(QuadKind::FejerI, f, 3, iv,
                                                      powers_of_two(256));
    REQUIRE(r.rows.size() == 9);
    CHECK(r.rows[0].measured ==
          std::abs(f.integral(iv) - integrate(QuadKind::FejerI, f.sampled(), iv, 3).value));
    CHECK(*r.rows.back().rate == doctest::Approx(4.0).epsilon(0.01));
    CHECK(r.rows.back().theory == 4);
  }

  TEST_CASE("tail rate uses the initial above-floor run") {
    std::vector<StudyRow> rows(6);
    const double values[] = {1.0, 0.5, 0.125, 1.0 / 64, 1e-20, 1.0};
    for (int i = 0; i < 6; ++i) {
      rows[i].measured = values[i];
      rows[i].below_floor = i == 4;
    }
    CHECK(*tail_rate(rows) == doctest::Approx(2.0));
    CHECK_FALSE(tail_rate(std::vector<StudyRow>(rows.begin(), rows.begin() + 3)).has_value());
  }
}
