#include "qident/qtrig.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qident/qgamma.hpp"
#include "qident/qseries.hpp"
#include "qident/theta.hpp"

namespace qident {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(cplx z) {
    return z.imag() == 0.0 && z.real() == std::round(z.real());
}

} // namespace

cplx sin_q_gamma(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status) {
    if (is_integer(z)) return cplx(0.0, 0.0);
    const LogNome n2 = n.scaled(2.0);
    const cplx lg_half = log_q_gamma(cplx(0.5, 0.0), n2, policy, status);
    const cplx lg = 0.25 * n.log_q() + 2.0 * lg_half + z * (z - 1.0) * n.log_q() -
                    log_q_gamma(z, n2, policy, status) -
                    log_q_gamma(cplx(1.0, 0.0) - z, n2, policy, status);
    return std::exp(lg);
}

cplx sin_q_theta(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status) {
    // scaled form: the q'^{1/4} prefactor cancels and would underflow as q -> 1
    const LogNome tp = n.tau_prime();
    return theta1_scaled(z, tp, policy, status) /
           theta1_scaled(cplx(kPi / 2, 0.0), tp, policy, status);
}

cplx cos_q_theta(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status) {
    const LogNome tp = n.tau_prime();
    return theta1_scaled(z + cplx(kPi / 2, 0.0), tp, policy, status) /
           theta1_scaled(cplx(kPi / 2, 0.0), tp, policy, status);
}

cplx cos_q_gamma(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status) {
    if (is_integer(z + cplx(0.5, 0.0))) return cplx(0.0, 0.0);
    const LogNome n2 = n.scaled(2.0);
    const cplx lg_half = log_q_gamma(cplx(0.5, 0.0), n2, policy, status);
    const cplx lg = 2.0 * lg_half + z * z * n.log_q() -
                    log_q_gamma(cplx(0.5, 0.0) - z, n2, policy, status) -
                    log_q_gamma(cplx(0.5, 0.0) + z, n2, policy, status);
    return std::exp(lg);
}

cplx sin_q_prime0(const LogNome& n, const TruncationPolicy& policy,
                  EvalStatus* status) {
    if (!n.is_positive_real())
        throw std::domain_error("sin_q_prime0: q must be real in (0,1)");
    const cplx psi = ramanujan_psi(n, policy, status);
    return (-2.0 * n.log_q().real() / kPi) * n.power(0.25) * psi * psi;
}

cplx sine_product_residual(cplx z, int m, const LogNome& n,
                           const TruncationPolicy& policy, EvalStatus* status) {
    if (m < 1) throw std::domain_error("sine_product_residual: m must be >= 1");
    const LogNome nm = n.scaled(double(m));
    cplx lhs(1.0, 0.0);
    for (int k = 0; k < m; ++k)
        lhs *= sin_q_theta(kPi * (z + cplx(double(k) / m, 0.0)), nm, policy, status);
    const LogNome base2 = n.scaled(2.0);
    const LogNome base2m = n.scaled(2.0 * m);
    const cplx poch1 = qpoch_inf(n.q(), base2, policy, status);
    const cplx poch2 = qpoch_inf(nm.q(), base2m, policy, status);
    const cplx rhs = n.power(double((m - 1) * (m + 1)) / 12.0) * poch1 * poch1 /
                     std::pow(poch2, 2 * m) *
                     sin_q_theta(double(m) * kPi * z, n, policy, status);
    return lhs - rhs;
}

cplx jacobi_product_residual(cplx z, int m, const LogNome& n,
                             const TruncationPolicy& policy, EvalStatus* status) {
    if (m < 1) throw std::domain_error("jacobi_product_residual: m must be >= 1");
    const LogNome base2 = n.scaled(2.0);
    const LogNome base2m = n.scaled(2.0 * m);
    const cplx pre = qpoch_inf(base2m.q(), base2m, policy, status) /
                     std::pow(qpoch_inf(base2.q(), base2, policy, status), m);
    cplx prod(1.0, 0.0);
    for (int k = 0; k < m; ++k)
        prod *= theta1(z + cplx(double(k) * kPi / m, 0.0), n, policy, status);
    return pre * prod - theta1(double(m) * z, n.scaled(double(m)), policy, status);
}

cplx sin_product_at_nodes(int m, const LogNome& n, const TruncationPolicy& policy,
                          EvalStatus* status) {
    if (m < 1) throw std::domain_error("sin_product_at_nodes: m must be >= 1");
    const LogNome nm = n.scaled(double(m));
    cplx lhs(1.0, 0.0);
    for (int k = 1; k < m; ++k)
        lhs *= sin_q_theta(cplx(double(k) * kPi / m, 0.0), nm, policy, status);
    const LogNome base2 = n.scaled(2.0);
    const LogNome base2m = n.scaled(2.0 * m);
    const cplx p2 = qpoch_inf(base2.q(), base2, policy, status);
    const cplx pm = qpoch_inf(nm.q(), base2m, policy, status);
    const cplx p2m = qpoch_inf(base2m.q(), base2m, policy, status);
    const cplx rhs = n.power(double((m - 1) * (m - 2)) / 12.0) * p2 * p2 /
                     (std::pow(pm, 2 * m - 2) * p2m * p2m);
    return lhs - rhs;
}

cplx master_identity_residual(int m, std::span<const cplx> xs, MasterParity parity,
                              const LogNome& n, const TruncationPolicy& policy,
                              EvalStatus* status) {
    if (m < 1) throw std::domain_error("master_identity_residual: m must be >= 1");
    if (xs.size() != static_cast<size_t>(m + 1))
        throw std::domain_error("master_identity_residual: need m+1 points");
    const LogNome tp = n.tau_prime();
    const LogNome tpm = tp.scaled(1.0 / m);
    const cplx f_shift = parity == MasterParity::even_f ? cplx(kPi / 2, 0.0) : cplx(0.0, 0.0);

    cplx total_x(0.0, 0.0);
    for (const cplx& x : xs) total_x += x;

    cplx sum(0.0, 0.0);
    for (int j = 0; j <= m; ++j) {
        const cplx num_arg = double(m) * xs[j] - total_x;
        cplx den(1.0, 0.0);
        for (int k = 0; k <= m; ++k) {
            if (k == j) continue;
            const cplx t = theta1(xs[j] - xs[k], tpm, policy, status);
            if (std::abs(t) < 1e-10)
                throw near_singular_error("master_identity_residual: theta denominator near zero");
            den *= t;
        }
        sum += theta1(num_arg, tp, policy, status) *
               theta1(xs[j] + f_shift, tpm, policy, status) / den;
    }
    return sum;
}

} // namespace qident
