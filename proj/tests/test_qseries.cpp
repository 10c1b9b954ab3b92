#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "qident/nome.hpp"
#include "qident/qseries.hpp"

using namespace qident;

namespace {
constexpr double kPi = std::numbers::pi;
const TruncationPolicy kPol{};

// Brute-force oracle with a fixed large factor count.
cplx brute_qpoch(cplx a, cplx q, int terms = 400) {
    cplx acc(1.0, 0.0), qk(1.0, 0.0);
    for (int k = 0; k < terms; ++k) {
        acc *= cplx(1.0, 0.0) - a * qk;
        qk *= q;
    }
    return acc;
}
} // namespace

TEST_CASE("qpoch_finite") {
    CHECK(qpoch_finite({3.7, -1.2}, {0.4, 0.1}, 0) == cplx(1.0, 0.0));
    CHECK(qpoch_finite({0.5, 0.0}, {0.5, 0.0}, 2).real() == doctest::Approx(0.375).epsilon(1e-16));
    CHECK(std::abs(qpoch_finite({1.0, 0.0}, {0.3, 0.0}, 1)) == 0.0);
    CHECK(std::abs(qpoch_finite({1.0, 0.0}, {0.3, 0.0}, 5)) == 0.0);
    CHECK_THROWS_AS(qpoch_finite({0.5, 0.0}, {0.5, 0.0}, -1), std::domain_error);
}

TEST_CASE("qpoch_inf against the brute-force oracle") {
    CHECK(qpoch_inf({0.0, 0.0}, nome_from_q({0.5, 0.0}), kPol) == cplx(1.0, 0.0));
    const LogNome n = nome_from_q({0.5, 0.0});
    CHECK(std::abs(qpoch_inf(n.q(), n, kPol) - brute_qpoch(n.q(), n.q(), 200)) < 1e-15);
    // a = q^m stays an ordinary product point
    for (int m : {1, 2, 5}) {
        const cplx a = n.power(double(m));
        CHECK(std::abs(qpoch_inf(a, n, kPol) - brute_qpoch(a, n.q())) < 1e-13);
    }
    const LogNome nc = nome_from_q({0.3, 0.35});
    const cplx ac(0.6, -0.2);
    CHECK(std::abs(qpoch_inf(ac, nc, kPol) - brute_qpoch(ac, nc.q())) < 1e-13);
}

TEST_CASE("the four q-shifted factorial factorisations") {
    std::vector<cplx> qs;
    for (int k = 1; k <= 18; ++k) qs.push_back({0.05 * k, 0.0});
    for (int k = 0; k < 8; ++k) qs.push_back(0.3 * std::exp(cplx(0.0, kPi * k / 4)));
    for (cplx qv : qs) {
        const LogNome n = nome_from_q(qv);
        const LogNome b2 = n.scaled(2.0);
        const cplx q = n.q(), q2 = b2.q();
        const cplx qq = qpoch_inf(q, n, kPol);
        const cplx q2q2 = qpoch_inf(q2, b2, kPol);
        const cplx qq2 = qpoch_inf(q, b2, kPol);
        const cplx mqq = qpoch_inf(-q, n, kPol);
        CHECK(std::abs(q2q2 - qq * mqq) < 1e-12 * std::abs(q2q2));
        CHECK(std::abs(qq - q2q2 * qq2) < 1e-12 * std::abs(qq));
        CHECK(std::abs(mqq - 1.0 / qq2) < 1e-12 * std::abs(mqq));
        CHECK(std::abs(mqq - qpoch_inf(-q2, b2, kPol) * qpoch_inf(-q, b2, kPol)) <
              1e-12 * std::abs(mqq));
    }
}

TEST_CASE("qpoch_multi fuses factors") {
    const LogNome n = nome_from_q({0.4, 0.0});
    const LogNome b2 = n.scaled(2.0);
    const std::vector<cplx> zero{cplx(0.0, 0.0)};
    CHECK(qpoch_multi(zero, n, kPol) == cplx(1.0, 0.0));

    const std::vector<cplx> single{cplx(0.3, 0.1)};
    CHECK(std::abs(qpoch_multi(single, n, kPol) - qpoch_inf(single[0], n, kPol)) < 1e-15);

    const std::vector<cplx> pair{n.power(2.0), n.power(4.0)};
    const cplx fused = qpoch_multi(pair, b2, kPol);
    const cplx separate = qpoch_inf(pair[0], b2, kPol) * qpoch_inf(pair[1], b2, kPol);
    CHECK(std::abs(fused - separate) < 1e-14 * std::abs(separate));

    CHECK_THROWS_AS(qpoch_multi(std::vector<cplx>{}, n, kPol), std::domain_error);
}

TEST_CASE("log_qpoch_inf agrees with the direct product") {
    for (cplx qv : {cplx(0.5, 0.0), cplx(0.3, 0.35), cplx(-0.4, 0.0)}) {
        const LogNome n = nome_from_q(qv);
        for (cplx a : {cplx(0.7, 0.0), cplx(-0.3, 0.2), n.q()}) {
            const cplx direct = qpoch_inf(a, n, kPol);
            const cplx via_log = std::exp(log_qpoch_inf(a, n, kPol));
            CHECK(std::abs(direct - via_log) < 1e-13 * std::abs(direct));
        }
    }
}

TEST_CASE("ramanujan f(-q)") {
    CHECK(std::abs(ramanujan_f_neg(nome_from_q({1e-12, 0.0}), kPol) - 1.0) < 1e-11);
    const LogNome n = nome_from_q({0.5, 0.0});
    CHECK(std::abs(ramanujan_f_neg(n, kPol) - brute_qpoch({0.5, 0.0}, {0.5, 0.0}, 200)) < 1e-15);
}

TEST_CASE("ramanujan psi definition and rearrangement") {
    CHECK(std::abs(ramanujan_psi(nome_from_q({1e-10, 0.0}), kPol) - 1.0) < 1e-9);
    // psi(q^{1/2}) = f^2(-q)/f(-q^{1/2}) for real q in (0,1)
    for (double q : {0.1, 0.25, 0.5, 0.8}) {
        const LogNome n = nome_from_q({q, 0.0});
        const LogNome nh = n.scaled(0.5);
        const cplx f1 = ramanujan_f_neg(n, kPol);
        const cplx f2 = ramanujan_f_neg(nh, kPol);
        const cplx psi = ramanujan_psi(nh, kPol);
        CHECK(std::abs(f1 * f1 / f2 - psi) < 1e-12 * std::abs(psi));
    }
}

TEST_CASE("explicit psi constants") {
    const double a = std::pow(kPi, 0.25) / classical_gamma(0.75);
    const double psi_epi = a * std::pow(2.0, -5.0 / 8) * std::exp(kPi / 8);
    const cplx v1 = ramanujan_psi(nome_from_q({std::exp(-kPi), 0.0}), kPol);
    CHECK(std::abs(v1 - psi_epi) < 1e-12 * psi_epi);

    const double psi_nepi = a * std::pow(2.0, -3.0 / 4) * std::exp(kPi / 8);
    const cplx v2 = ramanujan_psi(nome_from_q({-std::exp(-kPi), 0.0}), kPol);
    CHECK(std::abs(v2 - psi_nepi) < 1e-12 * psi_nepi);
}

TEST_CASE("cap-hit propagates as degraded accuracy") {
    EvalStatus st;
    const TruncationPolicy tiny{1e-15, 8};
    qpoch_inf({0.9, 0.0}, nome_from_q({0.9, 0.0}), tiny, &st);
    CHECK(st.cap_hit);
}
