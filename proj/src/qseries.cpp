#include "qident/qseries.hpp"

#include <cmath>
#include <vector>

namespace qident {

namespace {

// Neumaier-compensated accumulator; the near-1 log sums run to ~10^6 terms
// with partial sums around 10^4, where naive summation costs ~6 digits.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

} // namespace

cplx qpoch_finite(cplx a, cplx q, int terms) {
    if (terms < 0)
        throw std::domain_error("qpoch_finite: terms must be >= 0");
    cplx acc(1.0, 0.0);
    cplx qk(1.0, 0.0);
    for (int i = 0; i < terms; ++i) {
        acc *= (cplx(1.0, 0.0) - a * qk);
        qk *= q;
    }
    return acc;
}

cplx qpoch_inf(cplx a, const LogNome& n, const TruncationPolicy& policy,
               EvalStatus* status) {
    if (a == cplx(0.0, 0.0)) return cplx(1.0, 0.0);
    const int N = truncation_terms(n, policy, std::abs(a), status);
    const cplx q = n.q();
    if (q.imag() == 0.0 && a.imag() == 0.0) {
        const double qr = q.real(), ar = a.real();
        double acc = 1.0, qk = 1.0;
        for (int k = 0; k < N; ++k) {
            acc *= (1.0 - ar * qk);
            qk *= qr;
        }
        return cplx(acc, 0.0);
    }
    cplx acc(1.0, 0.0), qk(1.0, 0.0);
    for (int k = 0; k < N; ++k) {
        acc *= (cplx(1.0, 0.0) - a * qk);
        qk *= q;
    }
    return acc;
}

cplx log_qpoch_inf(cplx a, const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status) {
    if (a == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
    const int N = truncation_terms(n, policy, std::abs(a), status);
    const cplx q = n.q();
    if (q.imag() == 0.0 && a.imag() == 0.0 && a.real() < 1.0) {
        // All factors 1 - a q^k stay positive: |a q^k| <= |a| < 1.
        const double qr = q.real(), ar = a.real();
        Kahan s;
        double qk = 1.0;
        for (int k = 0; k < N; ++k) {
            s.add(std::log1p(-ar * qk));
            qk *= qr;
        }
        return cplx(s.value(), 0.0);
    }
    Kahan re, im;
    cplx qk(1.0, 0.0);
    for (int k = 0; k < N; ++k) {
        const cplx l = std::log(cplx(1.0, 0.0) - a * qk);
        re.add(l.real());
        im.add(l.imag());
        qk *= q;
    }
    return cplx(re.value(), im.value());
}

cplx qpoch_multi(std::span<const cplx> as, const LogNome& n,
                 const TruncationPolicy& policy, EvalStatus* status) {
    if (as.empty())
        throw std::domain_error("qpoch_multi: argument list must be nonempty");
    double coeff = 0.0;
    for (const cplx& a : as) coeff = std::max(coeff, std::abs(a));
    const int N = truncation_terms(n, policy, coeff, status);
    const cplx q = n.q();
    cplx acc(1.0, 0.0), qk(1.0, 0.0);
    for (int k = 0; k < N; ++k) {
        for (const cplx& a : as) acc *= (cplx(1.0, 0.0) - a * qk);
        qk *= q;
    }
    return acc;
}

cplx ramanujan_f_neg(const LogNome& n, const TruncationPolicy& policy,
                     EvalStatus* status) {
    return qpoch_inf(n.q(), n, policy, status);
}

cplx log_ramanujan_f_neg(const LogNome& n, const TruncationPolicy& policy,
                         EvalStatus* status) {
    return log_qpoch_inf(n.q(), n, policy, status);
}

cplx ramanujan_psi(const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status) {
    const LogNome base2 = n.scaled(2.0);
    return qpoch_inf(base2.q(), base2, policy, status) /
           qpoch_inf(n.q(), base2, policy, status);
}

cplx log_ramanujan_psi(const LogNome& n, const TruncationPolicy& policy,
                       EvalStatus* status) {
    const LogNome base2 = n.scaled(2.0);
    return log_qpoch_inf(base2.q(), base2, policy, status) -
           log_qpoch_inf(n.q(), base2, policy, status);
}

} // namespace qident
