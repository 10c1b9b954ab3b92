#pragma once

#include <span>

#include "qident/nome.hpp"

namespace qident {

// f choice in the master theta identity: theta_1(u|tau'/m) when m is odd,
// theta_1(u + pi/2|tau'/m) when m is even.
enum class MasterParity { odd_f, even_f };

struct near_singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sin_q(pi z) = q^{1/4} Gamma_{q^2}(1/2)^2 q^{z(z-1)} /
//               (Gamma_{q^2}(z) Gamma_{q^2}(1-z)); integer z maps to 0 (the
// gamma pole in the denominator).
cplx sin_q_gamma(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status = nullptr);

// sin_q(z) = theta_1(z|tau') / theta_1(pi/2|tau').
cplx sin_q_theta(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status = nullptr);

// cos_q(z) = theta_1(z + pi/2|tau') / theta_1(pi/2|tau').
cplx cos_q_theta(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status = nullptr);

// cos_q(pi z) = Gamma_{q^2}(1/2)^2 q^{z^2} /
//               (Gamma_{q^2}(1/2-z) Gamma_{q^2}(1/2+z)); half-integer z maps
// to 0.
cplx cos_q_gamma(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status = nullptr);

// sin_q'(0) = (-2 ln q / pi) q^{1/4} psi(q)^2 for real q in (0,1).
cplx sin_q_prime0(const LogNome& n, const TruncationPolicy& policy,
                  EvalStatus* status = nullptr);

// Residual of Gosper's multiplication formula
//   prod_{k=0}^{m-1} sin_{q^m}(pi(z+k/m))
//     - q^{(m-1)(m+1)/12} (q;q^2)^2 / (q^m;q^{2m})^{2m} sin_q(m pi z).
cplx sine_product_residual(cplx z, int m, const LogNome& n,
                           const TruncationPolicy& policy,
                           EvalStatus* status = nullptr);

// Residual of Jacobi's theta multiplication formula
//   (q^{2m};q^{2m}) / (q^2;q^2)^m prod_{k=0}^{m-1} theta_1(z+k pi/m|tau)
//     - theta_1(mz|m tau).
// The product runs over k = 0..m-1; the half-integer-centred range printed
// in some references is proportional to theta_1(mz + pi/2|m tau) for even m
// and fails as an identity there.
cplx jacobi_product_residual(cplx z, int m, const LogNome& n,
                             const TruncationPolicy& policy,
                             EvalStatus* status = nullptr);

// prod_{k=1}^{m-1} sin_{q^m}(k pi/m) minus its closed form
//   q^{(m-1)(m-2)/12} (q^2;q^2)^2 / ((q^m;q^{2m})^{2m-2} (q^{2m};q^{2m})^2).
cplx sin_product_at_nodes(int m, const LogNome& n, const TruncationPolicy& policy,
                          EvalStatus* status = nullptr);

// The (m+1)-term elliptic sum
//   sum_j theta_1((m-1)x_j - sum_{k!=j} x_k | tau') f(x_j)
//         / prod_{k!=j} theta_1(x_j-x_k | tau'/m),
// which vanishes when f matches the parity of m.  Throws near_singular_error
// when any denominator theta falls below 1e-10 in modulus.
cplx master_identity_residual(int m, std::span<const cplx> xs, MasterParity parity,
                              const LogNome& n, const TruncationPolicy& policy,
                              EvalStatus* status = nullptr);

} // namespace qident
