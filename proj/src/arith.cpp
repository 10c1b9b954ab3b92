#include "qident/arith.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "qident/qgamma.hpp"
#include "qident/qseries.hpp"

namespace qident {

namespace {

std::vector<long long> divisors(long long m) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

long long euler_phi(long long m) {
    if (m < 1) throw std::domain_error("euler_phi: m must be >= 1");
    long long result = m, rest = m;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            while (rest % p == 0) rest /= p;
            result -= result / p;
        }
    }
    if (rest > 1) result -= result / rest;
    return result;
}

int moebius_mu(long long m) {
    if (m < 1) throw std::domain_error("moebius_mu: m must be >= 1");
    int sign = 1;
    long long rest = m;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            rest /= p;
            if (rest % p == 0) return 0;
            sign = -sign;
        }
    }
    if (rest > 1) sign = -sign;
    return sign;
}

double von_mangoldt(long long m) {
    if (m < 1) throw std::domain_error("von_mangoldt: m must be >= 1");
    if (m == 1) return 0.0;
    long long rest = m;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            while (rest % p == 0) rest /= p;
            return rest == 1 ? std::log(double(p)) : 0.0;
        }
    }
    return std::log(double(m)); // m itself prime
}

cplx q_von_mangoldt(int m, const LogNome& n, const TruncationPolicy& policy,
                    EvalStatus* status) {
    if (m < 1) throw std::domain_error("q_von_mangoldt: m must be >= 1");
    if (!n.is_positive_real())
        throw std::domain_error("q_von_mangoldt: q must be real in (0,1)");
    const double phi = double(euler_phi(m));
    cplx lg = phi * std::log(2.0);
    for (long long d : divisors(m)) {
        const int mu = moebius_mu(m / d);
        if (mu == 0) continue;
        lg += 2.0 * double(mu) *
              log_ramanujan_f_neg(n.root(1.0 / double(d)), policy, status);
    }
    lg -= 2.0 * phi * log_qpoch_inf(n.power(0.5), n, policy, status);
    return lg;
}

cplx pq_direct(int m, const LogNome& n, const TruncationPolicy& policy,
               EvalStatus* status) {
    if (m < 1) throw std::domain_error("pq_direct: m must be >= 1");
    cplx acc(1.0, 0.0);
    for (int k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        acc *= q_gamma(cplx(double(k) / m, 0.0), n, policy, status);
    }
    return acc;
}

PqClosed pq_closed(int m, const LogNome& n, const TruncationPolicy& policy,
                   EvalStatus* status) {
    if (m < 1) throw std::domain_error("pq_closed: m must be >= 1");
    if (m == 1) return PqClosed{cplx(1.0, 0.0), cplx(1.0, 0.0)};
    const double phi = double(euler_phi(m));
    const cplx log_gamma_half =
        log_ramanujan_psi(n.root(0.5), policy, status) +
        0.5 * std::log(cplx(1.0, 0.0) - n.q());

    cplx lg = phi * log_gamma_half +
              phi * log_qpoch_inf(n.power(0.5), n, policy, status);
    for (long long d : divisors(m)) {
        const int mu = moebius_mu(m / d);
        if (mu == 0) continue;
        lg -= double(mu) * log_ramanujan_f_neg(n.root(1.0 / double(d)), policy, status);
    }
    PqClosed out{std::exp(lg), std::nullopt};

    if (n.is_positive_real()) {
        const cplx lg2 = (phi / 2.0) * std::log(2.0) + phi * log_gamma_half -
                         0.5 * q_von_mangoldt(m, n, policy, status);
        out.mangoldt_form = std::exp(lg2);
    }
    return out;
}

cplx pq_two_power(int k, const LogNome& n, const TruncationPolicy& policy,
                  EvalStatus* status) {
    if (k < 2) throw std::domain_error("pq_two_power: k must be >= 2");
    const double outer = std::pow(2.0, double(k - 2));
    cplx acc = std::exp(outer * std::log(cplx(1.0, 0.0) - n.q()));
    acc *= ramanujan_psi(n.root(std::pow(0.5, double(k))), policy, status);
    for (int j = 1; j < k; ++j) {
        const cplx psi = ramanujan_psi(n.root(std::pow(0.5, double(j))), policy, status);
        const long long e = 1LL << (k - 1 - j);
        cplx p(1.0, 0.0);
        for (long long i = 0; i < e; ++i) p *= psi;
        acc *= p;
    }
    return acc;
}

} // namespace qident
