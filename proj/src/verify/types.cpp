#include "qident/verify/types.hpp"

#include <cstdio>

namespace qident::verify {

std::string format_cplx(cplx v) {
    char buf[80];
    if (v.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.9g", v.real());
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", v.real(), v.imag());
    return buf;
}

LogNome NomeSpec::make() const {
    return kind == Kind::from_q ? LogNome::from_q(value, branch)
                                : LogNome::from_tau(value);
}

std::string NomeSpec::describe() const {
    std::string s = kind == Kind::from_q ? "q=" : "tau=";
    s += format_cplx(value);
    if (kind == Kind::from_q && branch == PowerBranch::real_root) s += "(real-root)";
    return s;
}

NomeSpec q_spec(cplx q, PowerBranch branch) {
    return NomeSpec{NomeSpec::Kind::from_q, q, branch};
}

NomeSpec tau_spec(cplx tau) {
    return NomeSpec{NomeSpec::Kind::from_tau, tau, PowerBranch::principal};
}

} // namespace qident::verify
