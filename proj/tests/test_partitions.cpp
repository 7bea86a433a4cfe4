#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "schubertq/partitions.hpp"

using namespace schubertq;

namespace {

// Oracle: column occupancy counted on a rasterized grid, independent of the
// row-by-row inequality used by is_horizontal_strip.
bool strip_by_column_counts(const SkewShape& s) {
    std::map<int, int> per_column;
    for (auto [r, c] : s.boxes()) ++per_column[c];
    return std::all_of(per_column.begin(), per_column.end(),
                       [](const auto& kv) { return kv.second <= 1; });
}

// Oracle: union-find over all box pairs, instead of the stack-based fill.
ComponentCounts components_by_union_find(const SkewShape& s) {
    const auto boxes = s.boxes();
    const int m = static_cast<int>(boxes.size());
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto [ri, ci] = boxes[i];
            const auto [rj, cj] = boxes[j];
            if (std::abs(ri - rj) <= 1 && std::abs(ci - cj) <= 1) parent[find(i)] = find(j);
        }
    std::set<int> roots;
    std::set<int> roots_meeting_column_one;
    for (int i = 0; i < m; ++i) {
        roots.insert(find(i));
        if (boxes[i].second == 1) roots_meeting_column_one.insert(find(i));
    }
    return ComponentCounts{static_cast<int>(roots.size()),
                           static_cast<int>(roots.size() - roots_meeting_column_one.size())};
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        out.push_back(Partition(current));
        if (row == rows) return;
        for (int p = maxpart; p >= 1; --p) {
            current.push_back(p);
            rec(row + 1, p);
            current.pop_back();
        }
    };
    rec(0, cols);
    return out;
}

}  // namespace

TEST_CASE("partition validation and parsing") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition({0}), std::invalid_argument);
    CHECK(Partition({3, 1, 0, 0}).length() == 2);  // trailing zeros stripped
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("2,1") == Partition({2, 1}));
    CHECK(StrictPartition::parse("3,1").weight() == 4);
    CHECK_THROWS_AS(StrictPartition::parse("1,x"), std::invalid_argument);
    CHECK(StrictPartition({2, 1}).to_string() == "(2,1)");
    CHECK(StrictPartition{}.to_csv() == "");
}

TEST_CASE("basis enumeration order and size") {
    const auto b1 = enumerate_basis(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == StrictPartition{});
    CHECK(b1[1] == StrictPartition({1}));

    const auto b2 = enumerate_basis(2);
    REQUIRE(b2.size() == 4);
    CHECK(b2[0] == StrictPartition{});
    CHECK(b2[1] == StrictPartition({1}));
    CHECK(b2[2] == StrictPartition({2}));
    CHECK(b2[3] == StrictPartition({2, 1}));

    CHECK(enumerate_basis(3).size() == 8);

    CHECK_THROWS_AS(enumerate_basis(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_basis(17), std::invalid_argument);
}

TEST_CASE("basis cardinality is 2^n and order is canonical") {
    for (int n = 1; n <= 12; ++n) {
        const auto basis = enumerate_basis(n);
        CHECK(basis.size() == (size_t{1} << n));
        CHECK(std::set<StrictPartition>(basis.begin(), basis.end()).size() == basis.size());
        for (size_t i = 1; i < basis.size(); ++i) {
            const bool ordered = basis[i - 1].weight() < basis[i].weight() ||
                                 (basis[i - 1].weight() == basis[i].weight() &&
                                  basis[i - 1].parts() > basis[i].parts());
            CHECK(ordered);
        }
    }
}

TEST_CASE("complement examples and involution") {
    CHECK(complement(StrictPartition{}, 2) == StrictPartition({2, 1}));
    CHECK(complement(StrictPartition({2}), 2) == StrictPartition({1}));
    CHECK(complement(StrictPartition({3, 1}), 3) == StrictPartition({2}));
    for (int n = 1; n <= 10; ++n) {
        for (const auto& lambda : enumerate_basis(n)) {
            const auto hat = complement(lambda, n);
            CHECK(complement(hat, n) == lambda);
            CHECK(lambda.weight() + hat.weight() == n * (n + 1) / 2);
        }
    }
    CHECK_THROWS_AS(complement(StrictPartition({4}), 3), std::invalid_argument);
}

TEST_CASE("horizontal strip on named shapes") {
    CHECK(is_horizontal_strip(SkewShape(Partition({2}), Partition({1}))));
    CHECK_FALSE(is_horizontal_strip(SkewShape(Partition({2, 1}), Partition{})));
    CHECK(is_horizontal_strip(SkewShape(Partition({3, 1}), Partition({2}))));
    CHECK_THROWS_AS(SkewShape(Partition({1}), Partition({2})), std::invalid_argument);
}

TEST_CASE("component counts on named shapes") {
    const auto a = component_counts(SkewShape(Partition({2}), Partition({1})));
    CHECK(a.components == 1);
    CHECK(a.off_first_column == 1);

    const auto b = component_counts(SkewShape(Partition({2, 1}), Partition({2})));
    CHECK(b.components == 1);
    CHECK(b.off_first_column == 0);

    const auto c = component_counts(SkewShape(Partition({3, 1}), Partition({2})));
    CHECK(c.components == 2);
    CHECK(c.off_first_column == 1);

    // empty diagram: N' defaults to zero
    const SkewShape empty(Partition({2, 1}), Partition({2, 1}));
    CHECK(component_counts(empty).components == 0);
    CHECK(pieri_exponent(empty) == 0);
}

TEST_CASE("strip and component oracles agree on every skew shape in a 6x6 box") {
    const auto all = partitions_in_box(6, 6);
    int checked = 0;
    for (const auto& outer : all) {
        for (const auto& inner : all) {
            if (!outer.contains(inner)) continue;
            SkewShape shape(outer, inner);
            CHECK(is_horizontal_strip(shape) == strip_by_column_counts(shape));
            const auto fast = component_counts(shape);
            const auto slow = components_by_union_find(shape);
            CHECK(fast.components == slow.components);
            CHECK(fast.off_first_column == slow.off_first_column);
            ++checked;
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(24, 12) == 2704156);
    CHECK(binomial(28, 14) == 40116600);
    CHECK(binomial(5, 7) == 0);
}
