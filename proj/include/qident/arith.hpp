#pragma once

#include <optional>

#include "qident/nome.hpp"

namespace qident {

// Euler totient via trial division.
long long euler_phi(long long m);

// Moebius mu in {-1, 0, 1}.
int moebius_mu(long long m);

// ln p on prime powers p^k, 0 otherwise.
double von_mangoldt(long long m);

// The q-deformed von Mangoldt function
//   Lambda_q(m) = log( 2^{phi(m)} prod_{d|m} f(-q^{1/d})^{2 mu(m/d)}
//                      / (q^{1/2};q)^{2 phi(m)} ),
// real q in (0,1).  Accumulated in log space; tends to Lambda(m) as q -> 1.
cplx q_von_mangoldt(int m, const LogNome& n, const TruncationPolicy& policy,
                    EvalStatus* status = nullptr);

// P_q(m) = prod over 1 <= k <= m, gcd(k,m)=1, of Gamma_q(k/m).
cplx pq_direct(int m, const LogNome& n, const TruncationPolicy& policy,
               EvalStatus* status = nullptr);

// The two closed forms of P_q(m) for m >= 2 (m = 1 gives 1):
//   moebius_form  = Gamma_q(1/2)^{phi} (q^{1/2};q)^{phi}
//                   / prod_{d|m} f(-q^{1/d})^{mu(m/d)}
//   mangoldt_form = (2 Gamma_q(1/2)^2)^{phi/2} / exp(Lambda_q(m)/2)
// The mangoldt form needs the real-q logarithm and is absent otherwise.
// (The power base is 2 Gamma_q(1/2)^2, the q-analogue of 2 pi; the variant
// with base 2 Gamma_q(1/2) disagrees with the direct product for every
// m >= 2.)
struct PqClosed {
    cplx moebius_form;
    std::optional<cplx> mangoldt_form;
};
PqClosed pq_closed(int m, const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status = nullptr);

// P_q(2^k) = (1-q)^{2^{k-2}} psi(q^{1/2^k}) prod_{j=1}^{k-1}
//            psi(q^{1/2^j})^{2^{k-1-j}} for k >= 2, fractional powers taken
// under the nome's branch convention.
cplx pq_two_power(int k, const LogNome& n, const TruncationPolicy& policy,
                  EvalStatus* status = nullptr);

} // namespace qident
