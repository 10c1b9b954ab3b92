#pragma once

#include "qident/nome.hpp"

namespace qident {

// Jacobi's first theta function theta_1(z|tau) from its sine series
//   2 sum_{n>=0} (-1)^n q^{(2n+1)^2/4} sin((2n+1)z).
// Terms are dropped once |q|^{(2n+1)^2/4} e^{(2n+1)|Im z|} < policy.epsilon.
cplx theta1_series(cplx z, const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status = nullptr);

// Triple-product form i q^{1/4} e^{-iz} (q^2 e^{-2iz}, e^{2iz}, q^2; q^2)_inf.
cplx theta1_product(cplx z, const LogNome& n, const TruncationPolicy& policy,
                    EvalStatus* status = nullptr);

// Route dispatch: series for |q| <= 0.5 (terms decay like q^{n^2}) and the
// triple product otherwise.
cplx theta1(cplx z, const LogNome& n, const TruncationPolicy& policy,
            EvalStatus* status = nullptr);

// theta_1'(0|tau) = 2 q^{1/4} (q^2;q^2)_inf^3.
cplx theta1_prime0(const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status = nullptr);

// theta_1(z|tau') with tau' = -1/tau, by direct evaluation at the
// transformed nome.
cplx theta1_at_tau_prime(cplx z, const LogNome& n, const TruncationPolicy& policy,
                         EvalStatus* status = nullptr);

// theta_1(z|tau) / (2 q^{1/4}).  Ratios of theta values cancel the q^{1/4}
// prefactor, which underflows for the very small nomes that appear at tau'
// when q -> 1; this form keeps such ratios finite.
cplx theta1_scaled(cplx z, const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status = nullptr);

} // namespace qident
