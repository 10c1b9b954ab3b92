#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qident/nome.hpp"

using namespace qident;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent oracle: scan N upward until the tail bound drops below epsilon.
int smallest_terms(double abs_q, double coeff, double eps, int cap) {
    for (int N = 1; N <= cap; ++N)
        if (2.0 * coeff * std::pow(abs_q, N) / (1.0 - abs_q) < eps) return N;
    return cap;
}
} // namespace

TEST_CASE("nome_from_tau basic points") {
    CHECK(nome_from_tau({0.0, 1.0}).log_q().real() == doctest::Approx(-kPi).epsilon(1e-15));
    CHECK(nome_from_tau({0.0, 1.0}).log_q().imag() == 0.0);
    CHECK(nome_from_tau({0.0, 2.0}).log_q().real() == doctest::Approx(-2 * kPi));

    const LogNome n = nome_from_tau({1.0, 2.0}); // q = -e^{-2 pi}
    CHECK(n.log_q().real() == doctest::Approx(-2 * kPi));
    CHECK(n.log_q().imag() == doctest::Approx(kPi));
    CHECK(n.is_negative_real());
    CHECK(n.q().imag() == 0.0);
    CHECK(n.q().real() == doctest::Approx(-std::exp(-2 * kPi)));

    CHECK_THROWS_AS(nome_from_tau({0.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS(nome_from_tau({0.5, -1.0}), std::domain_error);
}

TEST_CASE("nome_from_q and round trips") {
    CHECK(nome_from_q({0.25, 0.0}).log_q().real() == doctest::Approx(std::log(0.25)));
    CHECK(nome_from_q({0.25, 0.0}).log_q().imag() == 0.0);

    const cplx qneg(-std::exp(-2 * kPi), 0.0);
    const LogNome np = nome_from_q(qneg);
    CHECK(np.log_q().real() == doctest::Approx(-2 * kPi));
    CHECK(np.log_q().imag() == doctest::Approx(kPi));
    const LogNome nr = nome_from_q(qneg, PowerBranch::real_root);
    CHECK(nr.log_q() == np.log_q());
    CHECK(nr.branch() == PowerBranch::real_root);

    CHECK_THROWS_AS(nome_from_q({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(nome_from_q({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(nome_from_q({1.5, 0.0}), std::domain_error);

    for (cplx tau : {cplx(0.0, 1.0), cplx(1.0, 2.0), cplx(-0.3, 0.7)}) {
        const cplx rt = nome_from_tau(tau).tau();
        CHECK(std::abs(rt - tau) < 1e-15 * std::abs(tau));
    }
}

TEST_CASE("nome_power conventions") {
    CHECK(nome_power(nome_from_q({std::exp(-kPi), 0.0}), 0.25).real() ==
          doctest::Approx(std::exp(-kPi / 4)).epsilon(1e-15));

    const cplx qneg(-std::exp(-2 * kPi), 0.0);
    // principal: exp((-2 pi + i pi)/2) = i e^{-pi}
    const cplx pr = nome_power(nome_from_q(qneg), 0.5);
    CHECK(pr.real() == doctest::Approx(0.0).epsilon(1e-16));
    CHECK(pr.imag() == doctest::Approx(std::exp(-kPi)));
    // real_root: -|q|^{1/2} = -e^{-pi}
    const cplx rr = nome_power(nome_from_q(qneg, PowerBranch::real_root), 0.5);
    CHECK(rr.imag() == 0.0);
    CHECK(rr.real() == doctest::Approx(-std::exp(-kPi)));
}

TEST_CASE("power additivity under the principal convention") {
    const LogNome n = nome_from_q({0.3, 0.4});
    for (double a : {-1.5, -0.25, 0.5, 1.0, 2.75}) {
        for (double b : {-0.5, 0.125, 1.5}) {
            const cplx lhs = n.power(a) * n.power(b);
            const cplx rhs = n.power(a + b);
            CHECK(std::abs(lhs - rhs) <= 1e-14 * std::abs(rhs));
        }
    }
}

TEST_CASE("root() lands on the convention's point") {
    const cplx qneg(-std::exp(-2 * kPi), 0.0);
    const LogNome rr = nome_from_q(qneg, PowerBranch::real_root);
    CHECK(rr.root(0.25).q().real() == doctest::Approx(-std::exp(-kPi / 2)));
    CHECK(rr.root(0.25).q().imag() == 0.0);
    const LogNome pp = nome_from_q(qneg);
    CHECK(std::abs(pp.root(0.25).q() - pp.power(0.25)) < 1e-16);
}

TEST_CASE("truncation_terms matches the scan oracle") {
    const TruncationPolicy p15{1e-15, 10000};
    const TruncationPolicy p12{1e-12, 10000};

    const LogNome half = nome_from_q({0.5, 0.0});
    const int oracle_half = smallest_terms(0.5, 1.0, 1e-15, 10000);
    CHECK(oracle_half == 52);
    CHECK(truncation_terms(half, p15, 1.0) == oracle_half);

    // tiny |q|: the very first tail already clears epsilon
    CHECK(truncation_terms(nome_from_q({1e-16, 0.0}), p15, 1.0) == 1);
    CHECK(truncation_terms(half, p15, 0.0) == 1);

    const LogNome q99 = nome_from_q({0.99, 0.0});
    const int oracle99 = smallest_terms(0.99, 1.0, 1e-12, 10000);
    CHECK(oracle99 == 3277);
    CHECK(truncation_terms(q99, p12, 1.0) == oracle99);

    for (double q : {0.1, 0.35, 0.72, 0.93}) {
        for (double c : {0.2, 1.0, 37.0}) {
            for (double eps : {1e-8, 1e-12, 1e-15}) {
                const TruncationPolicy p{eps, 100000};
                CHECK(truncation_terms(nome_from_q({q, 0.0}), p, c) ==
                      smallest_terms(q, c, eps, 100000));
            }
        }
    }
}

TEST_CASE("truncation_terms cap and monotonicity") {
    EvalStatus st;
    const TruncationPolicy tiny{1e-15, 10};
    CHECK(truncation_terms(nome_from_q({0.9, 0.0}), tiny, 1.0, &st) == 10);
    CHECK(st.cap_hit);

    const TruncationPolicy loose{1e-6, 10000};
    const TruncationPolicy tight{1e-14, 10000};
    const LogNome n = nome_from_q({0.6, 0.0});
    CHECK(truncation_terms(n, tight, 1.0) >= truncation_terms(n, loose, 1.0));
    CHECK(truncation_terms(nome_from_q({0.8, 0.0}), loose, 1.0) >=
          truncation_terms(nome_from_q({0.4, 0.0}), loose, 1.0));
}

TEST_CASE("classical_gamma") {
    CHECK(classical_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(classical_gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    // reflection cross-check for the value entering a = pi^{1/4}/Gamma(3/4)
    CHECK(classical_gamma(0.25) * classical_gamma(0.75) ==
          doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-13));
    for (double x = 0.25; x <= 5.0; x += 0.25)
        CHECK(classical_gamma(x + 1.0) ==
              doctest::Approx(x * classical_gamma(x)).epsilon(1e-12));
    CHECK_THROWS_AS(classical_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(classical_gamma(-1.5), std::domain_error);
}
