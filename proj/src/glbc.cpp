#include "schubertq/glbc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "schubertq/spectral.hpp"

namespace schubertq {

double lg_margin(double x) {
    return 2.0 * x -
           std::pow(2.0, x) * (2.0 * x * x - x + 1.0) * std::sin(std::numbers::pi * x / 2.0);
}

double og_margin(double x) {
    return std::pow(2.0, x + 1.0) * x -
           (2.0 * x * x + x + 1.0) * std::sin(std::numbers::pi * x / 2.0);
}

long long dimension_bound(int n) { return space_dimension(n) + 1; }

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Strict: return "strict";
        case Verdict::Equality: return "equality";
        case Verdict::Fail: return "fail";
    }
    return "fail";
}

GlbcReport glbc_report(Space space, int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("glbc_report: n must be in 1..12");
    GlbcReport report{space, n, space_dimension(n), dimension_bound(n), 0.0, {}, Verdict::Fail, {}};
    report.delta0_closed = delta0_closed_form(space, n);
    if (n <= 8) report.delta0_numeric = perron_root(c1_matrix(space, n));

    const double diff = report.delta0_closed - static_cast<double>(report.bound);
    if (std::abs(diff) <= 1e-9)
        report.verdict = Verdict::Equality;
    else
        report.verdict = diff > 0 ? Verdict::Strict : Verdict::Fail;

    if (space == Space::LG && n >= 2) report.margin = lg_margin(1.0 / (n + 1));
    if (space == Space::OG && n >= 6) report.margin = og_margin(1.0 / n);
    return report;
}

}  // namespace schubertq
