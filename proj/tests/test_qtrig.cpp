#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "qident/qseries.hpp"
#include "qident/qtrig.hpp"

using namespace qident;

namespace {
constexpr double kPi = std::numbers::pi;
const TruncationPolicy kPol{};
} // namespace

TEST_CASE("q-sine special values") {
    for (double q : {0.2, 0.5, 0.8}) {
        const LogNome n = nome_from_q({q, 0.0});
        CHECK(std::abs(sin_q_gamma({0.5, 0.0}, n, kPol) - 1.0) < 1e-13);
        CHECK(std::abs(sin_q_gamma({1.0, 0.0}, n, kPol)) == 0.0);
        CHECK(std::abs(sin_q_gamma({0.0, 0.0}, n, kPol)) == 0.0);
        CHECK(std::abs(sin_q_theta({kPi / 2, 0.0}, n, kPol) - 1.0) < 1e-14);
        CHECK(std::abs(sin_q_theta({0.0, 0.0}, n, kPol)) < 1e-15);
        CHECK(std::abs(cos_q_theta({0.0, 0.0}, n, kPol) - 1.0) < 1e-13);
        CHECK(std::abs(cos_q_theta({kPi / 2, 0.0}, n, kPol)) < 1e-13);
        CHECK(std::abs(cos_q_gamma({0.5, 0.0}, n, kPol)) == 0.0);
    }
}

TEST_CASE("two-route agreement and the shift identity") {
    for (double q : {0.3, 0.5, 0.6, 0.9}) {
        const LogNome n = nome_from_q({q, 0.0});
        for (cplx z : {cplx(0.3, 0.0), cplx(0.2, 0.1), cplx(0.45, 0.0)}) {
            CHECK(std::abs(sin_q_gamma(z, n, kPol) - sin_q_theta(kPi * z, n, kPol)) < 1e-11);
            CHECK(std::abs(cos_q_gamma(z, n, kPol) - cos_q_theta(kPi * z, n, kPol)) < 1e-11);
        }
        // sin_q(z + pi/2) = cos_q(z)
        CHECK(std::abs(sin_q_theta({0.4 + kPi / 2, 0.0}, n, kPol) -
                       cos_q_theta({0.4, 0.0}, n, kPol)) < 1e-12);
    }
}

TEST_CASE("sin_q'(0)") {
    const LogNome q25 = nome_from_q({0.25, 0.0});
    const cplx direct = sin_q_prime0(q25, kPol);
    CHECK(direct.imag() == 0.0);
    CHECK(direct.real() > 0.0);
    {
        // independent composition of the same closed form
        const cplx psi = ramanujan_psi(q25, kPol);
        const double expected = (-2.0 * std::log(0.25) / kPi) * std::pow(0.25, 0.25) *
                                (psi * psi).real();
        CHECK(direct.real() == doctest::Approx(expected).epsilon(1e-14));
    }
    for (double q : {0.25, 0.5}) {
        const LogNome n = nome_from_q({q, 0.0});
        const double h = 1e-5;
        const cplx fd = (sin_q_theta({h, 0.0}, n, kPol) - sin_q_theta({-h, 0.0}, n, kPol)) /
                        (2.0 * h);
        CHECK(std::abs(sin_q_prime0(n, kPol) - fd) < 1e-7);
    }
    // q -> 0+: positive and vanishing like -(2 ln q/pi) q^{1/4}
    const cplx tiny = sin_q_prime0(nome_from_q({1e-6, 0.0}), kPol);
    CHECK(tiny.real() > 0.0);
    CHECK(tiny.real() < 1.0);
    CHECK_THROWS_AS(sin_q_prime0(nome_from_q({0.3, 0.2}), kPol), std::domain_error);
    CHECK_THROWS_AS(sin_q_prime0(nome_from_q({-0.3, 0.0}), kPol), std::domain_error);
}

TEST_CASE("multiplication residuals vanish together") {
    const LogNome n_i = nome_from_tau({0.0, 1.0});
    const LogNome n_c = nome_from_tau({0.5, 1.0});
    CHECK(std::abs(sine_product_residual({0.23, 0.0}, 1, n_i, kPol)) == 0.0);
    CHECK(std::abs(jacobi_product_residual({0.4, 0.0}, 1, n_i, kPol)) == 0.0);
    for (int m = 1; m <= 6; ++m) {
        CHECK(std::abs(jacobi_product_residual({0.4, 0.0}, m, n_i, kPol)) < 1e-10);
        CHECK(std::abs(sine_product_residual({0.23, 0.0}, m, n_i, kPol)) < 1e-10);
        CHECK(std::abs(jacobi_product_residual({0.2, 0.1}, m, n_c, kPol)) < 1e-9);
        CHECK(std::abs(sine_product_residual({0.2, 0.1}, m, n_c, kPol)) < 1e-9);
    }
    const LogNome q05 = nome_from_q({0.5, 0.0});
    const LogNome q04 = nome_from_q({0.4, 0.0});
    CHECK(std::abs(sine_product_residual({0.23, 0.0}, 2, q05, kPol)) < 1e-10);
    CHECK(std::abs(sine_product_residual({0.1, 0.05}, 5, q04, kPol)) < 1e-9);
}

TEST_CASE("node products") {
    CHECK(std::abs(sin_product_at_nodes(1, nome_from_q({0.5, 0.0}), kPol)) == 0.0);
    for (double q : {0.3, 0.5, 0.9}) {
        const LogNome n = nome_from_q({q, 0.0});
        for (int m : {2, 3, 5})
            CHECK(std::abs(sin_product_at_nodes(m, n, kPol)) < 1e-11);
    }
    // q -> 1 trend toward the classical value m/2^{m-1}
    const LogNome near1 = nome_from_q({0.999, 0.0});
    cplx prod(1.0, 0.0);
    for (int k = 1; k < 3; ++k)
        prod *= sin_q_theta({k * kPi / 3.0, 0.0}, near1, kPol);
    CHECK(std::abs(prod - 0.75) < 5e-3);
}

TEST_CASE("master identity vanishes for the matched f") {
    std::mt19937_64 rng(12345);
    auto u01 = [&] { return double(rng() >> 11) * 0x1.0p-53; };
    auto draw = [&](int m) {
        std::vector<cplx> xs;
        for (int i = 0; i <= m; ++i)
            xs.push_back(cplx(0.15 + 1.2 * u01(), -0.25 + 0.5 * u01()));
        return xs;
    };
    const LogNome n12 = nome_from_tau({0.0, 1.2});
    const LogNome n_i = nome_from_tau({0.0, 1.0});
    for (int trial = 0; trial < 5; ++trial) {
        CHECK(std::abs(master_identity_residual(1, draw(1), MasterParity::odd_f, n_i,
                                                kPol)) < 1e-10);
        CHECK(std::abs(master_identity_residual(2, draw(2), MasterParity::even_f, n_i,
                                                kPol)) < 1e-9);
        CHECK(std::abs(master_identity_residual(3, draw(3), MasterParity::odd_f, n12,
                                                kPol)) < 1e-9);
        CHECK(std::abs(master_identity_residual(4, draw(4), MasterParity::even_f, n12,
                                                kPol)) < 1e-9);
    }
    // mismatched parity violates the quasi-period hypothesis and stays O(1)
    CHECK(std::abs(master_identity_residual(2, draw(2), MasterParity::odd_f, n_i, kPol)) >
          1e-3);

    // coincident points make a denominator theta vanish
    std::vector<cplx> bad{cplx(0.4, 0.0), cplx(0.4, 0.0), cplx(0.9, 0.0)};
    CHECK_THROWS_AS(
        master_identity_residual(2, bad, MasterParity::even_f, n_i, kPol),
        near_singular_error);
    std::vector<cplx> wrong_size{cplx(0.4, 0.0)};
    CHECK_THROWS_AS(
        master_identity_residual(2, wrong_size, MasterParity::even_f, n_i, kPol),
        std::domain_error);
}
