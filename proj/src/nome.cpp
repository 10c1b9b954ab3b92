#include "qident/nome.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qident {

namespace {
constexpr double kPi = std::numbers::pi;
// Tolerance for recognising an exactly real nome from its stored argument.
constexpr double kArgEps = 1e-12;
} // namespace

LogNome LogNome::from_tau(cplx tau) {
    if (!(tau.imag() > 0.0))
        throw std::domain_error("LogNome::from_tau: Im(tau) must be positive");
    return LogNome(cplx(0.0, kPi) * tau, PowerBranch::principal);
}

LogNome LogNome::from_q(cplx q, PowerBranch branch) {
    const double mag = std::abs(q);
    if (!(mag > 0.0) || !(mag < 1.0) || !std::isfinite(mag))
        throw std::domain_error("LogNome::from_q: need 0 < |q| < 1");
    return LogNome(cplx(std::log(mag), std::arg(q)), branch);
}

cplx LogNome::q() const {
    // Keep exactly real nomes exactly real; exp(i pi) would leak ~1e-16i.
    if (is_positive_real()) return cplx(abs_q(), 0.0);
    if (is_negative_real()) return cplx(-abs_q(), 0.0);
    return std::exp(log_q_);
}

cplx LogNome::tau() const { return log_q_ / cplx(0.0, kPi); }

LogNome LogNome::tau_prime() const {
    return LogNome(cplx(0.0, kPi) * (-1.0 / tau()), branch_);
}

bool LogNome::is_negative_real() const {
    return std::abs(std::abs(log_q_.imag()) - kPi) < kArgEps;
}

bool LogNome::is_positive_real() const {
    return std::abs(log_q_.imag()) < kArgEps;
}

cplx LogNome::power(double alpha) const {
    if (branch_ == PowerBranch::real_root && is_negative_real())
        return cplx(-std::exp(alpha * log_q_.real()), 0.0);
    if (is_positive_real()) return cplx(std::exp(alpha * log_q_.real()), 0.0);
    return std::exp(alpha * log_q_);
}

cplx LogNome::power(cplx alpha) const {
    if (alpha.imag() == 0.0) return power(alpha.real());
    return std::exp(alpha * log_q_);
}

LogNome LogNome::scaled(double factor) const {
    return LogNome(log_q_ * factor, branch_);
}

LogNome LogNome::root(double alpha) const {
    if (branch_ == PowerBranch::real_root && is_negative_real())
        return LogNome(cplx(alpha * log_q_.real(), kPi), branch_);
    return scaled(alpha);
}

LogNome nome_from_tau(cplx tau) { return LogNome::from_tau(tau); }

LogNome nome_from_q(cplx q, PowerBranch branch) { return LogNome::from_q(q, branch); }

cplx nome_power(const LogNome& n, double alpha) { return n.power(alpha); }

int truncation_terms(const LogNome& n, const TruncationPolicy& policy,
                     double coeff_mag, EvalStatus* status) {
    if (coeff_mag < 0.0)
        throw std::domain_error("truncation_terms: coeff_mag must be >= 0");
    const double aq = n.abs_q();
    const double eps = policy.epsilon;
    auto bound = [&](double N) { return 2.0 * coeff_mag * std::pow(aq, N) / (1.0 - aq); };
    if (coeff_mag == 0.0 || bound(1.0) < eps) return 1;

    // Closed-form estimate, then nudge to the exact smallest N.
    double est = std::log(eps * (1.0 - aq) / (2.0 * coeff_mag)) / std::log(aq);
    long long N = static_cast<long long>(std::ceil(est));
    if (N < 1) N = 1;
    while (N > 1 && bound(static_cast<double>(N - 1)) < eps) --N;
    while (bound(static_cast<double>(N)) >= eps) {
        ++N;
        if (N > policy.max_terms) break;
    }
    if (N > policy.max_terms) {
        if (status) status->cap_hit = true;
        return policy.max_terms;
    }
    return static_cast<int>(N);
}

double classical_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("classical_gamma: x must be positive");
    return std::tgamma(x);
}

} // namespace qident
