#include "qident/verify/report.hpp"

#include <cstdio>

namespace qident::verify {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

const char* category_name(Category c) {
    switch (c) {
        case Category::finite_identity: return "finite identity";
        case Category::limit_claim: return "limit claim";
        case Category::explicit_constant: return "explicit constant";
    }
    return "?";
}

std::string md_cell(std::string s) {
    for (char& ch : s)
        if (ch == '|') ch = '/';
    return s;
}

} // namespace

std::string emit_csv(const Report& r) {
    std::string out =
        "case_id,point_index,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n";
    for (const CheckResult& c : r.results) {
        out += c.case_id;
        out += ',';
        out += std::to_string(c.point_index);
        out += ',';
        out += c.params; // never contains commas by construction
        out += ',';
        out += num(c.lhs.real());
        out += ',';
        out += num(c.lhs.imag());
        out += ',';
        out += num(c.rhs.real());
        out += ',';
        out += num(c.rhs.imag());
        out += ',';
        out += num(c.abs_err);
        out += ',';
        out += num(c.rel_err);
        out += ',';
        out += c.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string emit_markdown(const Report& r) {
    std::string out = "# " + r.suite_name + " verification report\n\n";
    if (!r.timestamp.empty()) out += "generated: " + r.timestamp + "\n\n";
    char line[256];
    std::snprintf(line, sizeof(line),
                  "config: seed=%llu epsilon=%.3g max_terms=%d\n\n",
                  static_cast<unsigned long long>(r.seed), r.policy.epsilon,
                  r.policy.max_terms);
    out += line;
    out += "| id | description | category | points | passed | worst abs | worst rel | status |\n";
    out += "|----|-------------|----------|--------|--------|-----------|-----------|--------|\n";
    for (const CaseSummary& c : r.cases) {
        out += "| " + c.id + " | " + md_cell(c.description) + " | " + category_name(c.category) +
               " | " + std::to_string(c.points) + " | " + std::to_string(c.passed) +
               " | " + short_num(c.worst_abs) + " | " + short_num(c.worst_rel) + " | " +
               (c.pass ? "pass" : "FAIL") + (c.expected_fail ? " (expected-fail)" : "") +
               " |\n";
    }
    bool any_note = false;
    for (const CaseSummary& c : r.cases)
        if (!c.note.empty()) any_note = true;
    if (any_note) {
        out += "\n## Notes\n\n";
        for (const CaseSummary& c : r.cases)
            if (!c.note.empty()) out += "- " + c.id + ": " + c.note + "\n";
    }
    out += "\n";
    out += r.all_pass() ? "All cases passed.\n" : "Some cases FAILED.\n";
    return out;
}

std::string emit_report(const Report& r, ReportFormat format) {
    return format == ReportFormat::csv ? emit_csv(r) : emit_markdown(r);
}

} // namespace qident::verify
