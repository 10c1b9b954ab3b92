#pragma once

#include <complex>
#include <stdexcept>

namespace qident {

using cplx = std::complex<double>;

// Branch convention for fractional powers of the nome.  `principal` reads
// q^alpha as exp(alpha * Log q) with the principal logarithm.  `real_root`
// applies to negative real q only and reads q^alpha as -|q|^alpha, which is
// the reading under which classical tables of psi(-e^{-pi}) and friends are
// stated; for any other q it behaves like `principal`.
enum class PowerBranch { principal, real_root };

// Target accuracy and term caps for every truncated infinite product/series.
struct TruncationPolicy {
    double epsilon = 1e-15;
    int max_terms = 10000;
};

// Out-of-band accuracy channel: cap_hit is set when a truncation hit the
// max_terms cap, i.e. the result did not reach the requested epsilon.
struct EvalStatus {
    bool cap_hit = false;
};

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// The nome q held as log q.  Every fractional power q^alpha is derived from
// this one logarithm, so towers like q^{1/2}, q^{1/4}, q^{k^2/n} stay
// mutually consistent.  Invariant: Re(log q) < 0, i.e. |q| < 1.
class LogNome {
public:
    // q = e^{i pi tau}; requires Im(tau) > 0.
    static LogNome from_tau(cplx tau);
    // Principal logarithm of q; requires 0 < |q| < 1.
    static LogNome from_q(cplx q, PowerBranch branch = PowerBranch::principal);

    cplx log_q() const { return log_q_; }
    cplx q() const;
    double abs_q() const { return std::exp(log_q_.real()); }
    cplx tau() const;          // log q / (i pi), Im > 0
    LogNome tau_prime() const; // nome of tau' = -1/tau
    PowerBranch branch() const { return branch_; }

    bool is_negative_real() const;
    bool is_positive_real() const;
    bool is_real() const { return is_negative_real() || is_positive_real(); }

    // q^alpha under the branch convention.
    cplx power(double alpha) const;
    // q^alpha with complex exponent, principal convention.
    cplx power(cplx alpha) const;

    // Nome of q^factor obtained by scaling the logarithm (principal tower);
    // used for parameter changes such as q -> q^2, q -> q^{1/n}, tau -> m tau.
    LogNome scaled(double factor) const;

    // Nome whose value is q^alpha under this nome's convention.  Differs from
    // scaled() only for real_root nomes with negative real q, where the point
    // q^alpha = -|q|^alpha lands back on the negative axis.
    LogNome root(double alpha) const;

private:
    LogNome(cplx log_q, PowerBranch branch) : log_q_(log_q), branch_(branch) {}
    cplx log_q_;
    PowerBranch branch_;
};

LogNome nome_from_tau(cplx tau);
LogNome nome_from_q(cplx q, PowerBranch branch = PowerBranch::principal);
cplx nome_power(const LogNome& n, double alpha);

// Smallest N with 2 * coeff_mag * |q|^N / (1 - |q|) < policy.epsilon, clamped
// to [1, policy.max_terms].  Clamping is reported through status->cap_hit and
// means the dropped tail may exceed epsilon.
int truncation_terms(const LogNome& n, const TruncationPolicy& policy,
                     double coeff_mag, EvalStatus* status = nullptr);

// Gamma(x) for real x > 0.
double classical_gamma(double x);

} // namespace qident
