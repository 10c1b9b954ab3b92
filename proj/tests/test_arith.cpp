#include <cmath>
#include <numbers>
#include <numeric>

#include <doctest.h>

#include "qident/arith.hpp"
#include "qident/qgamma.hpp"
#include "qident/qseries.hpp"

using namespace qident;

namespace {
constexpr double kPi = std::numbers::pi;
const TruncationPolicy kPol{};
const TruncationPolicy kDeep{1e-12, 8'000'000};
} // namespace

TEST_CASE("euler_phi, moebius_mu, von_mangoldt") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(97) == 96);
    // independent count of coprime residues
    int coprime = 0;
    for (int k = 1; k <= 12; ++k)
        if (std::gcd(k, 12) == 1) ++coprime;
    CHECK(euler_phi(12) == coprime);

    CHECK(moebius_mu(1) == 1);
    CHECK(moebius_mu(12) == 0);
    CHECK(moebius_mu(30) == -1);
    CHECK(moebius_mu(6) == 1);

    CHECK(von_mangoldt(1) == 0.0);
    CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)));
    CHECK(von_mangoldt(6) == 0.0);
    CHECK(von_mangoldt(97) == doctest::Approx(std::log(97.0)));

    CHECK_THROWS_AS(euler_phi(0), std::domain_error);
}

TEST_CASE("Moebius sums") {
    for (long long m = 2; m <= 200; ++m) {
        long long mu_sum = 0, weighted = 0;
        for (long long d = 1; d <= m; ++d) {
            if (m % d) continue;
            mu_sum += moebius_mu(m / d);
            weighted += d * moebius_mu(m / d);
        }
        CHECK(mu_sum == 0);
        CHECK(weighted == euler_phi(m));
    }
}

TEST_CASE("q von Mangoldt definition and exact small cases") {
    const LogNome n = nome_from_q({0.5, 0.0});
    // m = 1: single divisor, phi(1) = 1
    const cplx f = ramanujan_f_neg(n, kPol);
    const cplx ph = qpoch_inf(n.power(0.5), n, kPol);
    const cplx expected = std::log(2.0 * f * f / (ph * ph));
    CHECK(std::abs(q_von_mangoldt(1, n, kPol) - expected) < 1e-13);

    // m = 2 evaluates to log 2 identically in q
    for (double q : {0.2, 0.5, 0.7})
        CHECK(std::abs(q_von_mangoldt(2, nome_from_q({q, 0.0}), kPol) - std::log(2.0)) <
              1e-12);

    CHECK_THROWS_AS(q_von_mangoldt(4, nome_from_q({0.3, 0.2}), kPol), std::domain_error);
    CHECK_THROWS_AS(q_von_mangoldt(4, nome_from_q({-0.3, 0.0}), kPol), std::domain_error);
}

TEST_CASE("Lambda_q(4) tends to ln 2") {
    const cplx v = q_von_mangoldt(4, nome_from_q({1.0 - 1e-4, 0.0}), kDeep);
    CHECK(std::abs(v - std::log(2.0)) < 1e-2);
}

TEST_CASE("P_q direct and closed forms") {
    const LogNome n05 = nome_from_q({0.5, 0.0});
    CHECK(pq_direct(1, n05, kPol) == cplx(1.0, 0.0));
    CHECK(std::abs(pq_direct(2, n05, kPol) - q_gamma_half(n05, kPol)) < 1e-13);

    const PqClosed c2 = pq_closed(2, nome_from_q({0.3, 0.0}), kPol);
    CHECK(std::abs(c2.moebius_form - q_gamma_half(nome_from_q({0.3, 0.0}), kPol)) < 1e-12);

    for (int m : {4, 6, 12, 30}) {
        for (double q : {0.1, 0.5, 0.9}) {
            const LogNome n = nome_from_q({q, 0.0});
            const cplx d = pq_direct(m, n, kPol);
            const PqClosed c = pq_closed(m, n, kPol);
            CHECK(std::abs(d - c.moebius_form) < 1e-10 * std::abs(d));
            REQUIRE(c.mangoldt_form.has_value());
            CHECK(std::abs(d - *c.mangoldt_form) < 1e-10 * std::abs(d));
        }
    }
    // complex q: the Moebius form still matches; the Mangoldt form needs a
    // real logarithm and is absent
    const PqClosed cc = pq_closed(6, nome_from_q({0.3, 0.2}), kPol);
    CHECK(std::abs(pq_direct(6, nome_from_q({0.3, 0.2}), kPol) - cc.moebius_form) < 1e-10);
    CHECK(!cc.mangoldt_form.has_value());
}

TEST_CASE("the Mangoldt closed form squares to (2 Gamma_q(1/2)^2)^phi") {
    const LogNome n = nome_from_q({0.5, 0.0});
    const cplx p6 = pq_direct(6, n, kPol);
    const cplx lam = q_von_mangoldt(6, n, kPol);
    const cplx gh = q_gamma_half(n, kPol);
    const cplx lhs = std::exp(lam) * p6 * p6;
    cplx rhs(1.0, 0.0);
    for (long long i = 0; i < euler_phi(6); ++i) rhs *= 2.0 * gh * gh;
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(rhs));
}

TEST_CASE("power-of-two products") {
    CHECK_THROWS_AS(pq_two_power(1, nome_from_q({0.5, 0.0}), kPol), std::domain_error);
    for (int k : {2, 3, 4}) {
        for (double q : {0.3, 0.5, 0.7}) {
            const LogNome n = nome_from_q({q, 0.0});
            const cplx t = pq_two_power(k, n, kPol);
            const cplx d = pq_direct(1 << k, n, kPol);
            CHECK(std::abs(t - d) < 1e-10 * std::abs(d));
        }
    }
    // negative q: the identity holds under the principal convention
    for (double qv : {-std::exp(-2 * kPi), -0.2}) {
        const LogNome n = nome_from_q({qv, 0.0});
        const cplx t = pq_two_power(2, n, kPol);
        const cplx d = pq_direct(4, n, kPol);
        CHECK(std::abs(t - d) < 1e-11 * std::abs(d));
    }
    // ... and fails under the real-root convention (branch tower breaks)
    const LogNome rr = nome_from_q({-std::exp(-2 * kPi), 0.0}, PowerBranch::real_root);
    CHECK(std::abs(pq_two_power(2, rr, kPol) - pq_direct(4, rr, kPol)) > 1e-2);
}

TEST_CASE("worked example constants") {
    const double a = std::pow(kPi, 0.25) / classical_gamma(0.75);
    const double r2p = std::pow(std::sqrt(2.0) + 1.0, 0.25);
    const double r2m = std::pow(std::sqrt(2.0) - 1.0, 0.25);
    const double e2 = std::exp(-2 * kPi), e4 = std::exp(-4 * kPi);

    struct Row {
        int k;
        double q;
        PowerBranch branch;
        double value;
    } rows[] = {
        {2, e2, PowerBranch::principal,
         (1 - e2) * a * a * std::pow(2.0, -17.0 / 16) * std::exp(3 * kPi / 16) * r2p},
        {2, e4, PowerBranch::principal,
         (1 - e4) * a * a * std::pow(2.0, -15.0 / 8) * std::exp(3 * kPi / 8)},
        {2, -e2, PowerBranch::real_root,
         (1 + e2) * a * a * std::pow(2.0, -19.0 / 16) * std::exp(3 * kPi / 16) * r2m},
        {2, -e4, PowerBranch::real_root,
         (1 + e4) * a * a * std::pow(2.0, -27.0 / 16) * std::exp(3 * kPi / 8) * r2m},
        {3, e4, PowerBranch::principal,
         (1 - e4) * (1 - e4) * a * a * a * a * std::pow(2.0, -57.0 / 16) *
             std::exp(11 * kPi / 16) * r2p},
        {3, -e4, PowerBranch::real_root,
         (1 + e4) * (1 + e4) * a * a * a * a * std::pow(2.0, -49.0 / 16) *
             std::exp(11 * kPi / 16) * std::pow(std::sqrt(2.0) - 1.0, 0.75)},
    };
    for (const Row& row : rows) {
        const LogNome n = nome_from_q({row.q, 0.0}, row.branch);
        const cplx v = pq_two_power(row.k, n, kPol);
        CHECK(std::abs(v - row.value) < 1e-11 * row.value);
    }
    // positive-q examples also equal the direct gamma product
    const LogNome pos = nome_from_q({e2, 0.0});
    CHECK(std::abs(pq_direct(4, pos, kPol) - rows[0].value) < 1e-11 * rows[0].value);
}
