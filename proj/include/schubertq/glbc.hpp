#pragma once

#include <optional>
#include <string>

#include "schubertq/qh.hpp"

namespace schubertq {

/// Margin function for the LG bound: f(x) = 2x - 2^x (2x^2 - x + 1) sin(pi x / 2).
/// Clearing denominators in the closed form of delta0 shows that
/// delta0(LG(n)) >= d(n) is equivalent to f(1/(n+1)) >= 0.
double lg_margin(double x);

/// Margin function for the OG bound: h(x) = 2^{x+1} x - (2x^2 + x + 1) sin(pi x / 2);
/// delta0(OG(n)) >= d(n) is equivalent to h(1/n) >= 0.
double og_margin(double x);

/// d(n) = dim + 1 = n(n+1)/2 + 1, the conjectured lower bound for delta0.
long long dimension_bound(int n);

enum class Verdict { Strict, Equality, Fail };
std::string verdict_name(Verdict v);

struct GlbcReport {
    Space space;
    int n;
    long long dim;                        // n(n+1)/2
    long long bound;                      // d(n) = dim + 1
    double delta0_closed;
    std::optional<double> delta0_numeric; // power iteration, computed for n <= 8
    Verdict verdict;
    std::optional<double> margin;         // f(1/(n+1)) for LG n >= 2, h(1/n) for OG n >= 6

    bool equality() const { return verdict == Verdict::Equality; }
};

/// Per-n verdict on delta0 >= d(n). Equality is declared within 1e-9
/// (the equality cases are exact algebraic identities). Valid for n <= 12.
GlbcReport glbc_report(Space space, int n);

}  // namespace schubertq
