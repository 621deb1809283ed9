// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "marcumq/errors.hpp"
#include "marcumq/special_functions.hpp"
#include "test_oracles.hpp"

using namespace marcumq;

namespace {

double rel_diff(double a, double b) {
    return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1.0});
}

}  // namespace

TEST_CASE("gamma at exact points") {
    CHECK(marcumq::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(marcumq::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-15));
    CHECK(marcumq::gamma(0.5) == doctest::Approx(std::sqrt(4.0 * std::atan(1.0))).epsilon(1e-14));
}

TEST_CASE("gamma functional equation on (0, 50]") {
    for (double x = 0.25; x <= 50.0; x += 0.25) {
        if (x + 1.0 > 171.6) break;
        CHECK(std::fabs(marcumq::gamma(x + 1.0) - x * marcumq::gamma(x)) <=
              1e-13 * marcumq::gamma(x + 1.0));
    }
}

TEST_CASE("gamma domain and overflow errors") {
    CHECK_THROWS_AS(marcumq::gamma(0.0), DomainError);
    CHECK_THROWS_AS(marcumq::gamma(-3.5), DomainError);
    CHECK_THROWS_AS(marcumq::gamma(std::nan("")), DomainError);
    CHECK_THROWS_AS(marcumq::gamma(172.0), OverflowError);
}

TEST_CASE("log_gamma") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(log_gamma(11.0) == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    // agrees with gamma where both are representable
    for (double x = 0.5; x < 170.0; x += 7.3) {
        CHECK(std::fabs(log_gamma(x) - std::log(marcumq::gamma(x))) <=
              1e-13 * std::max(1.0, std::fabs(log_gamma(x))));
    }
}

TEST_CASE("regularized incomplete gamma: stated values") {
    CHECK(reg_upper_gamma(3.0, 0.0) == 1.0);
    CHECK(reg_upper_gamma(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(reg_lower_gamma(2.0, 0.0) == 0.0);
    CHECK(reg_lower_gamma(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    // erf equivalence: P(1/2, z^2) = erf(z)
    CHECK(std::fabs(reg_lower_gamma(0.5, 0.25) - std::erf(0.5)) <= 1e-13);
}

TEST_CASE("regularized incomplete gamma vs quadrature oracle") {
    CHECK(std::fabs(reg_upper_gamma(7.7, 3.38) -
                    test_oracles::reg_upper_gamma_quadrature(7.7, 3.38)) <= 1e-13);
    for (double s : {0.3, 1.0, 2.5, 7.7, 14.0}) {
        for (double x : {0.1, 1.0, 3.38, 9.0, 25.0}) {
            CHECK(std::fabs(reg_upper_gamma(s, x) -
                            test_oracles::reg_upper_gamma_quadrature(s, x)) <= 1e-13);
        }
    }
}

TEST_CASE("incomplete gamma pair sums to one") {
    for (double s = 0.25; s <= 20.0; s += 0.75) {
        for (double x = 0.0; x <= 40.0; x += 1.6) {
            const double p = reg_lower_gamma(s, x);
            const double q = reg_upper_gamma(s, x);
            CHECK(p >= 0.0);
            CHECK(q >= 0.0);
            CHECK(p <= 1.0);
            CHECK(q <= 1.0);
            CHECK(std::fabs(p + q - 1.0) <= 1e-14);
        }
    }
    CHECK_THROWS_AS(reg_lower_gamma(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(reg_upper_gamma(1.0, -0.5), DomainError);
}

TEST_CASE("bessel_i basics") {
    CHECK(bessel_i(0.0, 0.0) == 1.0);
    CHECK(bessel_i(1.5, 0.0) == 0.0);
    CHECK(std::fabs(bessel_i(0.0, 1.0) - test_oracles::bessel_i_series(0.0, 1.0)) <=
          1e-12 * bessel_i(0.0, 1.0));
    CHECK_THROWS_AS(bessel_i(-0.5, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_i(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_i(0.0, 800.0), OverflowError);
}

TEST_CASE("bessel_i vs direct series over the oracle's range") {
    for (double nu : {0.0, 0.5, 2.7, 6.7}) {
        for (double t : {0.1, 1.0, 5.0, 10.0, 30.0, 50.0}) {
            const double ref = test_oracles::bessel_i_series(nu, t, 200);
            CHECK(std::fabs(bessel_i(nu, t) - ref) <= 1e-12 * ref);
        }
    }
}

TEST_CASE("log_bessel_i large-argument path matches the asymptotic expansion") {
    for (double nu : {0.0, 1.3}) {
        for (double t : {700.0, 1500.0, 2500.0}) {
            const double mu = 4.0 * nu * nu;
            const double asym = t - 0.5 * std::log(2.0 * std::acos(-1.0) * t) +
                                std::log1p(-(mu - 1.0) / (8.0 * t) +
                                           (mu - 1.0) * (mu - 9.0) / (128.0 * t * t));
            CHECK(std::fabs(log_bessel_i(nu, t) - asym) <= 1e-6);
        }
    }
    // both summation paths agree near the switch point
    const double lo = log_bessel_i(0.7, 649.0);
    const double hi = log_bessel_i(0.7, 651.0);
    CHECK(hi - lo == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("laguerre stated values") {
    CHECK(laguerre({0, 2.3}, 7.0) == 1.0);
    CHECK(laguerre({1, 2.0}, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(laguerre({2, 0.0}, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK_THROWS_AS(laguerre({-1, 0.0}, 1.0), DomainError);
    CHECK_THROWS_AS(laguerre({2, -1.0}, 1.0), DomainError);
}

TEST_CASE("laguerre_at_zero") {
    CHECK(laguerre_at_zero({0, 1.7}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(laguerre_at_zero({3, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(laguerre_at_zero({2, 1.0}) == doctest::Approx(3.0).epsilon(1e-14));
    for (int n : {0, 1, 5, 17, 42}) {
        for (double alpha : {-0.5, 0.0, 1.0, 4.2}) {
            CHECK(rel_diff(laguerre_at_zero({n, alpha}), laguerre({n, alpha}, 0.0)) <= 1e-13);
        }
    }
}

TEST_CASE("brute_laguerre_sum stated values") {
    CHECK(brute_laguerre_sum({0, 0.5}, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(brute_laguerre_sum({1, 4.0}, 2.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(rel_diff(brute_laguerre_sum({4, 0.0}, 1.0), laguerre({4, 0.0}, 1.0)) <= 1e-13);
}

TEST_CASE("recurrence agrees with the explicit sum") {
    for (double alpha : {-0.5, 0.0, 1.0, 4.2}) {
        for (int n = 1; n <= 50; ++n) {
            for (double x = 0.0; x <= 20.0; x += 0.5) {
                const LaguerreIndex idx{n, alpha};
                CHECK(rel_diff(laguerre(idx, x), brute_laguerre_sum(idx, x)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("generating identity against the Bessel closed form") {
    // sum_n (-1)^n z^n L_n^{(alpha)}(x) / (L_n^{(alpha)}(0) n!)
    //   = Gamma(alpha+1) e^{-z} (xz)^{-alpha/2} I_alpha(2 sqrt(xz))
    for (double alpha : {0.0, 0.7, 2.0}) {
        for (double x : {0.8, 2.0, 4.0}) {
            for (double z : {0.8, 2.0, 4.0}) {
                double sum = 0.0;
                double zpow_over_fact = 1.0;  // z^n / n!
                double lz = 1.0;              // L_n^{(alpha)}(0)
                for (int n = 0; n < 80; ++n) {
                    if (n > 0) {
                        zpow_over_fact *= z / n;
                        lz *= (alpha + n) / n;
                    }
                    const double term = laguerre({n, alpha}, x) / lz * zpow_over_fact;
                    sum += (n & 1) ? -term : term;
                }
                const double closed = marcumq::gamma(alpha + 1.0) * std::exp(-z) *
                                      std::pow(x * z, -0.5 * alpha) *
                                      bessel_i(alpha, 2.0 * std::sqrt(x * z));
                CHECK(std::fabs(sum - closed) <= 1e-9);
            }
        }
    }
}
