#pragma once

#include "qident/nome.hpp"

namespace qident {

// log Gamma_q(z) with Gamma_q(z) = (q;q)_inf / (q^z;q)_inf * (1-q)^{1-z}.
// The two Pochhammer logs are accumulated pairwise per power of q, so the
// partial sums stay bounded even as q -> 1 where each factor alone
// underflows.  Throws pole_error when z is a nonpositive integer.
cplx log_q_gamma(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status = nullptr);

cplx q_gamma(cplx z, const LogNome& n, const TruncationPolicy& policy,
             EvalStatus* status = nullptr);

// Gamma_q(1/2) = psi(q^{1/2}) sqrt(1-q).
cplx q_gamma_half(const LogNome& n, const TruncationPolicy& policy,
                  EvalStatus* status = nullptr);

// prod_{k=1}^{m-1} Gamma_q(k/m); m = 1 gives the empty product 1.
cplx gauss_product_direct(int m, const LogNome& n, const TruncationPolicy& policy,
                          EvalStatus* status = nullptr);

// Closed form of the same product:
//   Gamma_q(1/2)^{m-1} f^{m-1}(-q^{1/2}) / (f^{m-2}(-q) f(-q^{1/m})).
cplx gauss_product_closed(int m, const LogNome& n, const TruncationPolicy& policy,
                          EvalStatus* status = nullptr);

// Residual of the q-analogue of the Gauss multiplication formula,
//   ((1-q^m)/(1-q))^{mz-1} prod_{k=0}^{m-1} Gamma_{q^m}(z+k/m)
//     - Gamma_q(mz) prod_{k=1}^{m-1} Gamma_{q^m}(k/m).
// Note the base of the first right-hand gamma is q, not q^m; the q^m
// variant fails numerically for every m >= 2.
cplx jackson_residual(cplx z, int m, const LogNome& n, const TruncationPolicy& policy,
                      EvalStatus* status = nullptr);

// Closed form of prod_{k=0}^{m-1} Gamma_q(z+k/m):
//   (q;q)_inf^m (1-q)^{(m-1)/2} / (q^{1/m};q^{1/m})_inf
//     * ((1-q)/(1-q^{1/m}))^{1-mz} * Gamma_{q^{1/m}}(mz).
cplx shifted_product_closed(cplx z, int m, const LogNome& n,
                            const TruncationPolicy& policy,
                            EvalStatus* status = nullptr);

// Residuals of prod_{k=0}^{m-1} Gamma_{q^m}((x+k)/m) against the corrected
// closed form carrying (1-q^m)^{(m-1)/2} and against the original published
// form carrying (1-q)^{(m-1)/2}.  The first vanishes; the second does not
// for m >= 2.
struct MAResiduals {
    cplx corrected;
    cplx original;
};
MAResiduals mahmoud_agarwal_residuals(double x, int m, const LogNome& n,
                                      const TruncationPolicy& policy,
                                      EvalStatus* status = nullptr);

} // namespace qident
