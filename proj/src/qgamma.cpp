#include "qident/qgamma.hpp"

#include <cmath>

#include "qident/qseries.hpp"

namespace qident {

namespace {

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

cplx log1m(cplx q) { return std::log(cplx(1.0, 0.0) - q); }

} // namespace

cplx log_q_gamma(cplx z, const LogNome& n, const TruncationPolicy& policy,
                 EvalStatus* status) {
    if (is_nonpositive_integer(z))
        throw pole_error("q_gamma: pole at nonpositive integer z");
    const cplx q = n.q();
    const cplx qz = n.power(z);
    const int N = truncation_terms(n, policy, std::max(1.0, std::abs(qz)), status);

    if (q.imag() == 0.0 && qz.imag() == 0.0) {
        const double qr = q.real(), ar = qz.real();
        double s = 0.0, comp = 0.0;
        double qk1 = qr, ak = ar; // q^{k+1}, q^{z+k}
        for (int k = 0; k < N; ++k) {
            const double term = std::log1p(-qk1) - std::log1p(-ak);
            const double t = s + term;
            comp += (std::abs(s) >= std::abs(term)) ? (s - t) + term : (term - t) + s;
            s = t;
            qk1 *= qr;
            ak *= qr;
        }
        return cplx(s + comp, 0.0) + (cplx(1.0, 0.0) - z) * log1m(q);
    }

    cplx s(0.0, 0.0);
    cplx qk1 = q, ak = qz;
    for (int k = 0; k < N; ++k) {
        const cplx d = cplx(1.0, 0.0) - ak;
        if (std::abs(d) == 0.0)
            throw pole_error("q_gamma: pole (q^z q^k = 1)");
        s += log1m(qk1) - std::log(d);
        qk1 *= q;
        ak *= q;
    }
    return s + (cplx(1.0, 0.0) - z) * log1m(q);
}

cplx q_gamma(cplx z, const LogNome& n, const TruncationPolicy& policy,
             EvalStatus* status) {
    return std::exp(log_q_gamma(z, n, policy, status));
}

cplx q_gamma_half(const LogNome& n, const TruncationPolicy& policy,
                  EvalStatus* status) {
    return ramanujan_psi(n.root(0.5), policy, status) *
           std::sqrt(cplx(1.0, 0.0) - n.q());
}

cplx gauss_product_direct(int m, const LogNome& n, const TruncationPolicy& policy,
                          EvalStatus* status) {
    if (m < 1) throw std::domain_error("gauss_product_direct: m must be >= 1");
    cplx acc(1.0, 0.0);
    for (int k = 1; k < m; ++k)
        acc *= q_gamma(cplx(double(k) / m, 0.0), n, policy, status);
    return acc;
}

cplx gauss_product_closed(int m, const LogNome& n, const TruncationPolicy& policy,
                          EvalStatus* status) {
    if (m < 1) throw std::domain_error("gauss_product_closed: m must be >= 1");
    if (m == 1) return cplx(1.0, 0.0);
    // Composed in log space: the f(-q^alpha) factors underflow as q -> 1.
    const cplx log_gamma_half =
        log_ramanujan_psi(n.root(0.5), policy, status) + 0.5 * log1m(n.q());
    const cplx lg = double(m - 1) * log_gamma_half +
                    double(m - 1) * log_ramanujan_f_neg(n.root(0.5), policy, status) -
                    double(m - 2) * log_ramanujan_f_neg(n, policy, status) -
                    log_ramanujan_f_neg(n.root(1.0 / m), policy, status);
    return std::exp(lg);
}

cplx jackson_residual(cplx z, int m, const LogNome& n, const TruncationPolicy& policy,
                      EvalStatus* status) {
    if (m < 1) throw std::domain_error("jackson_residual: m must be >= 1");
    const LogNome nm = n.scaled(double(m));
    const cplx q = n.q(), qm = nm.q();
    cplx lhs = std::pow((cplx(1.0, 0.0) - qm) / (cplx(1.0, 0.0) - q),
                        double(m) * z - cplx(1.0, 0.0));
    for (int k = 0; k < m; ++k)
        lhs *= q_gamma(z + cplx(double(k) / m, 0.0), nm, policy, status);
    cplx rhs = q_gamma(double(m) * z, n, policy, status);
    for (int k = 1; k < m; ++k)
        rhs *= q_gamma(cplx(double(k) / m, 0.0), nm, policy, status);
    return lhs - rhs;
}

cplx shifted_product_closed(cplx z, int m, const LogNome& n,
                            const TruncationPolicy& policy, EvalStatus* status) {
    if (m < 1) throw std::domain_error("shifted_product_closed: m must be >= 1");
    const LogNome nr = n.root(1.0 / m);
    const cplx q = n.q(), qr = nr.q();
    const cplx lg = double(m) * log_ramanujan_f_neg(n, policy, status) +
                    (double(m - 1) / 2.0) * log1m(q) -
                    log_ramanujan_f_neg(nr, policy, status) +
                    (cplx(1.0, 0.0) - double(m) * z) * (log1m(q) - log1m(qr)) +
                    log_q_gamma(double(m) * z, nr, policy, status);
    return std::exp(lg);
}

MAResiduals mahmoud_agarwal_residuals(double x, int m, const LogNome& n,
                                      const TruncationPolicy& policy,
                                      EvalStatus* status) {
    if (m < 1) throw std::domain_error("mahmoud_agarwal_residuals: m must be >= 1");
    if (!(x > 0.0)) throw std::domain_error("mahmoud_agarwal_residuals: x must be > 0");
    if (!n.is_positive_real())
        throw std::domain_error("mahmoud_agarwal_residuals: q must be real in (0,1)");
    const LogNome nm = n.scaled(double(m));
    const cplx q = n.q(), qm = nm.q();
    cplx lhs(1.0, 0.0);
    for (int k = 0; k < m; ++k)
        lhs *= q_gamma(cplx((x + k) / m, 0.0), nm, policy, status);
    const cplx common = std::exp(double(m) * log_ramanujan_f_neg(nm, policy, status) -
                                 log_ramanujan_f_neg(n, policy, status)) *
                        std::pow((cplx(1.0, 0.0) - qm) / (cplx(1.0, 0.0) - q), 1.0 - x) *
                        q_gamma(cplx(x, 0.0), n, policy, status);
    const double half = double(m - 1) / 2.0;
    const cplx corrected = common * std::pow(cplx(1.0, 0.0) - qm, half);
    const cplx original = common * std::pow(cplx(1.0, 0.0) - q, half);
    return MAResiduals{lhs - corrected, lhs - original};
}

} // namespace qident
