#pragma once

#include <string>

#include "qident/verify/types.hpp"

namespace qident::verify {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON config:
//   {
//     "grid": {"q_values": [0.3, [0.2, 0.1]],
//              "z_values": [...],
//              "integer_params": [2, 3]},
//     "tolerances": {"finite": 1e-9, "limit": 1e-3, "constant": 1e-10},
//     "seed": 42,
//     "policy": {"epsilon": 1e-15, "max_terms": 10000}
//   }
// All keys optional; complex numbers are [re, im] pairs, bare numbers are
// real.  Grid overrides apply to the cases that run on the default grid;
// integer_params keeps only matching leading integer parameters there.
RunConfig parse_config_json(const std::string& text);
RunConfig load_config_file(const std::string& path);

} // namespace qident::verify
