#pragma once

#include <span>

#include "qident/nome.hpp"

namespace qident {

// Finite q-shifted factorial (a;q)_n = prod_{i=0}^{n-1} (1 - a q^i).
cplx qpoch_finite(cplx a, cplx q, int terms);

// (a;q)_inf truncated per policy; relative accuracy ~policy.epsilon away
// from zeros of the product.
cplx qpoch_inf(cplx a, const LogNome& n, const TruncationPolicy& policy,
               EvalStatus* status = nullptr);

// log (a;q)_inf as a sum of factor logarithms.  exp() of the result equals
// the product exactly, and the log form survives the extreme magnitudes that
// appear as |q| -> 1.
cplx log_qpoch_inf(cplx a, const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status = nullptr);

// prod_i (a_i;q)_inf computed in one fused loop sharing the truncation count.
cplx qpoch_multi(std::span<const cplx> as, const LogNome& n,
                 const TruncationPolicy& policy, EvalStatus* status = nullptr);

// f(-q) = (q;q)_inf.  Callers wanting f(-q^{1/2}) pass the nome of q^{1/2}.
cplx ramanujan_f_neg(const LogNome& n, const TruncationPolicy& policy,
                     EvalStatus* status = nullptr);
cplx log_ramanujan_f_neg(const LogNome& n, const TruncationPolicy& policy,
                         EvalStatus* status = nullptr);

// psi(q) = (q^2;q^2)_inf / (q;q^2)_inf.
cplx ramanujan_psi(const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status = nullptr);
cplx log_ramanujan_psi(const LogNome& n, const TruncationPolicy& policy,
                       EvalStatus* status = nullptr);

} // namespace qident
