#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "schubertq/glbc.hpp"
#include "schubertq/spectral.hpp"

using namespace schubertq;
using doctest::Approx;

TEST_CASE("margin functions vanish at zero and stay nonnegative on their ranges") {
    CHECK(std::abs(lg_margin(1e-12)) < 1e-11);
    CHECK(og_margin(0.0) == 0.0);
    CHECK(lg_margin(1.0 / 3.0) >= 0.0);
    CHECK(og_margin(1.0 / 6.0) >= 0.0);
    CHECK(og_margin(1.0 / 8.0) >= 0.0);

    const int samples = 10000;
    for (int i = 1; i <= samples; ++i) {
        const double x_lg = (1.0 / 3.0) * i / samples;
        CHECK(lg_margin(x_lg) >= -1e-12);
        const double x_og = (1.0 / 6.0) * i / samples;
        CHECK(og_margin(x_og) >= -1e-12);
    }
}

TEST_CASE("margin sign agrees with the spectral gap") {
    // clearing denominators in the closed form: delta0 - d(n) and the margin
    // have the same sign
    for (int n = 2; n <= 12; ++n) {
        const double gap = delta0_closed_form(Space::LG, n) - dimension_bound(n);
        CHECK(lg_margin(1.0 / (n + 1)) * gap >= 0.0);
        CHECK(lg_margin(1.0 / (n + 1)) > 0.0);
        CHECK(gap > 0.0);
    }
    for (int n = 6; n <= 12; ++n) {
        const double gap = delta0_closed_form(Space::OG, n) - dimension_bound(n);
        CHECK(og_margin(1.0 / n) * gap >= 0.0);
    }
}

TEST_CASE("worked report rows") {
    const GlbcReport lg1 = glbc_report(Space::LG, 1);
    CHECK(lg1.verdict == Verdict::Equality);
    CHECK(lg1.bound == 2);
    CHECK(lg1.delta0_closed == Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(lg1.margin.has_value());

    const GlbcReport og2 = glbc_report(Space::OG, 2);
    CHECK(og2.verdict == Verdict::Equality);
    CHECK(og2.bound == 4);
    CHECK(og2.delta0_closed == Approx(4.0).epsilon(1e-12));

    const GlbcReport og5 = glbc_report(Space::OG, 5);
    CHECK(og5.verdict == Verdict::Strict);
    CHECK(og5.bound == 16);
    CHECK(og5.delta0_closed == Approx(18.5863298).epsilon(1e-7));

    CHECK_THROWS_AS(glbc_report(Space::LG, 0), std::invalid_argument);
    CHECK_THROWS_AS(glbc_report(Space::LG, 13), std::invalid_argument);
}

TEST_CASE("equality cases are exactly LG(1), OG(1), OG(2)") {
    std::set<std::pair<Space, int>> equalities;
    for (const Space space : {Space::LG, Space::OG}) {
        for (int n = 1; n <= 12; ++n) {
            const GlbcReport r = glbc_report(space, n);
            CHECK(r.bound == r.dim + 1);
            CHECK(r.delta0_closed >= static_cast<double>(r.bound) - 1e-9);
            CHECK(r.verdict != Verdict::Fail);
            if (r.verdict == Verdict::Equality) equalities.insert({space, n});
            CHECK((n <= 8) == r.delta0_numeric.has_value());
            if (r.delta0_numeric)
                CHECK(std::abs(*r.delta0_numeric - r.delta0_closed) <= 1e-7);
        }
    }
    CHECK(equalities == std::set<std::pair<Space, int>>{
                            {Space::LG, 1}, {Space::OG, 1}, {Space::OG, 2}});
}
