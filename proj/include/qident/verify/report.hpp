#pragma once

#include "qident/verify/types.hpp"

namespace qident::verify {

enum class ReportFormat { csv, markdown };

// CSV: one row per grid point with the columns
//   case_id,point_index,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass
// UTF-8, LF line endings, deterministic for a fixed config and seed.
std::string emit_csv(const Report& r);

// Human-readable summary table plus per-case notes and the config echo.
std::string emit_markdown(const Report& r);

std::string emit_report(const Report& r, ReportFormat format);

} // namespace qident::verify
