#include "qident/theta.hpp"

#include <array>
#include <cmath>

#include "qident/qseries.hpp"

namespace qident {

namespace {

// sum_{k>=0} (-1)^k q^{k(k+1)} sin((2k+1)z), i.e. theta_1/(2 q^{1/4}); the
// single branch point q^{1/4} is factored out so the sum sees integer powers
// only.
cplx theta1_series_sum(cplx z, const LogNome& n, const TruncationPolicy& policy,
                       EvalStatus* status) {
    const cplx q2 = n.scaled(2.0).q(); // q^2, multiplied in per step
    const double aq = n.abs_q();
    const double im_growth = 2.0 * std::abs(z.imag());
    const double log_aq = std::log(aq);

    cplx sum(0.0, 0.0);
    cplx qpow(1.0, 0.0); // q^{k(k+1)}
    cplx qstep = q2;     // q^{2(k+1)}
    double sign = 1.0;
    int k = 0;
    for (;;) {
        sum += sign * qpow * std::sin(double(2 * k + 1) * z);
        // |q|^{(2k+3)^2/4} e^{(2k+3)|Im z|} bounds the next term.
        const double next_log =
            (double(2 * k + 3) * double(2 * k + 3) / 4.0) * log_aq +
            (double(k) + 1.5) * im_growth;
        if (next_log < std::log(policy.epsilon) - 1.0) break;
        if (k + 1 >= policy.max_terms) {
            if (status) status->cap_hit = true;
            break;
        }
        qpow *= qstep; // q^{(k+1)(k+2)}
        qstep *= q2;
        sign = -sign;
        ++k;
    }
    return sum;
}

} // namespace

cplx theta1_series(cplx z, const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status) {
    return 2.0 * n.power(0.25) * theta1_series_sum(z, n, policy, status);
}

cplx theta1_product(cplx z, const LogNome& n, const TruncationPolicy& policy,
                    EvalStatus* status) {
    const LogNome base2 = n.scaled(2.0);
    const cplx q2 = base2.q();
    const cplx e2iz = std::exp(cplx(0.0, 2.0) * z);
    const std::array<cplx, 3> as{q2 / e2iz, e2iz, q2};
    return cplx(0.0, 1.0) * n.power(0.25) * std::exp(cplx(0.0, -1.0) * z) *
           qpoch_multi(as, base2, policy, status);
}

cplx theta1(cplx z, const LogNome& n, const TruncationPolicy& policy,
            EvalStatus* status) {
    return n.abs_q() <= 0.5 ? theta1_series(z, n, policy, status)
                            : theta1_product(z, n, policy, status);
}

cplx theta1_prime0(const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status) {
    const LogNome base2 = n.scaled(2.0);
    const cplx p = qpoch_inf(base2.q(), base2, policy, status);
    return 2.0 * n.power(0.25) * p * p * p;
}

cplx theta1_at_tau_prime(cplx z, const LogNome& n, const TruncationPolicy& policy,
                         EvalStatus* status) {
    return theta1(z, n.tau_prime(), policy, status);
}

cplx theta1_scaled(cplx z, const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status) {
    if (n.abs_q() <= 0.5) return theta1_series_sum(z, n, policy, status);
    return theta1_product(z, n, policy, status) / (2.0 * n.power(0.25));
}

} // namespace qident
