#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "schubertq/sympoly.hpp"

using namespace schubertq;
using doctest::Approx;

namespace {

// Oracle: determinant by LU with partial pivoting; pfaffian^2 == det.
Complex determinant(const SkewSymMatrix& b) {
    const int r = b.size();
    std::vector<Complex> a(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[static_cast<size_t>(i) * r + j] = b(i, j);
    auto at = [&](int i, int j) -> Complex& { return a[static_cast<size_t>(i) * r + j]; };
    Complex det = 1.0;
    for (int k = 0; k < r; ++k) {
        int pivot = k;
        for (int i = k + 1; i < r; ++i)
            if (std::abs(at(i, k)) > std::abs(at(pivot, k))) pivot = i;
        if (at(pivot, k) == 0.0) return 0.0;
        if (pivot != k) {
            for (int j = 0; j < r; ++j) std::swap(at(pivot, j), at(k, j));
            det = -det;
        }
        det *= at(k, k);
        for (int i = k + 1; i < r; ++i) {
            const Complex f = at(i, k) / at(k, k);
            for (int j = k; j < r; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return det;
}

SkewSymMatrix random_skew(int r, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    SkewSymMatrix b(r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) b.set(i, j, Complex(dist(rng), dist(rng)));
    return b;
}

ComplexTuple ones(int n) { return ComplexTuple(std::vector<Complex>(n, 1.0)); }

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric(1, ones(2)).real() == Approx(2.0));
    CHECK(elementary_symmetric(3, ones(2)) == Complex(0.0));
    CHECK(elementary_symmetric(0, ones(5)) == Complex(1.0));
    // E_k of all-ones is C(n, k)
    const SymTable table(ones(6));
    CHECK(table.elementary(2).real() == Approx(15.0));
    CHECK(table.elementary(6).real() == Approx(1.0));
    CHECK(table.elementary(-1) == Complex(0.0));
}

TEST_CASE("E1 at the maximizing tuple of rank 2 is sqrt(2)") {
    // tuple (-1/2, 1/2): the two points closest to angle zero
    const IndexTuple i0(2, {-1, 1});
    const Complex e1 = elementary_symmetric(1, zeta_point(i0, 1.0));
    CHECK(e1.real() == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(e1.imag()) < 1e-12);
    CHECK(e1.real() == Approx(1.0 / std::sin(std::numbers::pi / 4.0)).epsilon(1e-12));
}

TEST_CASE("two-row kernel") {
    const ComplexTuple x2(std::vector<Complex>{Complex(0.3, 0.1), Complex(-1.2, 0.4)});
    const SymTable t2(x2);
    CHECK(t2.qtilde_two_row(1, 0) == t2.elementary(1));    // empty correction sum
    CHECK(qtilde_two_row(1, 1, ones(2)).real() == Approx(2.0));   // E1^2 - 2 E2 = 4 - 2
    CHECK(qtilde_two_row(2, 1, ones(3)).real() == Approx(7.0));   // E2 E1 - 2 E3 E0 = 9 - 2
    CHECK_THROWS_AS(qtilde_two_row(1, 2, ones(3)), std::invalid_argument);
}

TEST_CASE("pfaffian base cases") {
    SkewSymMatrix b0(0);
    CHECK(pfaffian(b0) == Complex(1.0));

    SkewSymMatrix b2(2);
    b2.set(0, 1, Complex(3.5, -1.0));
    CHECK(pfaffian(b2) == Complex(3.5, -1.0));

    // 4x4: b12 b34 - b13 b24 + b14 b23
    std::mt19937 rng(7);
    const SkewSymMatrix b4 = random_skew(4, rng);
    const Complex expected = b4(0, 1) * b4(2, 3) - b4(0, 2) * b4(1, 3) + b4(0, 3) * b4(1, 2);
    CHECK(std::abs(pfaffian_expansion(b4) - expected) < 1e-12);
    CHECK(std::abs(pfaffian_elimination(b4) - expected) < 1e-12);

    CHECK_THROWS_AS(SkewSymMatrix(3), std::invalid_argument);
    CHECK_THROWS_AS(pfaffian(SkewSymMatrix(18)), std::invalid_argument);
}

TEST_CASE("pfaffian: expansion vs elimination vs determinant on random matrices") {
    std::mt19937 rng(20240811);
    for (int r = 2; r <= 8; r += 2) {
        for (int rep = 0; rep < 25; ++rep) {
            const SkewSymMatrix b = random_skew(r, rng);
            const Complex pe = pfaffian_expansion(b);
            const Complex pg = pfaffian_elimination(b);
            CHECK(std::abs(pe - pg) <= 1e-10 * std::max(1.0, std::abs(pe)));
            const Complex det = determinant(b);
            CHECK(std::abs(pe * pe - det) <= 1e-9 * std::max(1.0, std::abs(det)));
        }
    }
}

TEST_CASE("qtilde basics") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    std::vector<Complex> coords(5);
    for (auto& c : coords) c = Complex(dist(rng), dist(rng));
    const ComplexTuple x(coords);
    const SymTable table(x);

    CHECK(table.qtilde(Partition{}) == Complex(1.0));
    for (int k = 1; k <= 5; ++k)
        CHECK(std::abs(table.qtilde(Partition({k})) - table.elementary(k)) < 1e-12);
    // length two reduces to the two-row kernel
    CHECK(std::abs(table.qtilde(Partition({4, 2})) - table.qtilde_two_row(4, 2)) < 1e-12);
    CHECK(std::abs(table.qtilde(Partition({3, 3})) - table.qtilde_two_row(3, 3)) < 1e-12);

    CHECK(qtilde(Partition({2, 1}), ones(2)).real() == Approx(2.0));
    CHECK_THROWS_AS(qtilde(Partition({6}), x), std::invalid_argument);
}

TEST_CASE("ptilde scales qtilde by 2^-length") {
    CHECK(ptilde(Partition{}, ones(3)) == Complex(1.0));
    const ComplexTuple x1(std::vector<Complex>{Complex(0.7, -0.2)});
    CHECK(std::abs(ptilde(Partition({1}), x1) - Complex(0.35, -0.1)) < 1e-15);
    CHECK(ptilde(Partition({2, 1}), ones(2)).real() == Approx(0.5));
}

TEST_CASE("qtilde is symmetric in the coordinates") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> coords(6);
    for (auto& c : coords) c = Complex(dist(rng), dist(rng));
    const std::vector<Partition> shapes{Partition({3, 1}), Partition({5, 4, 2}),
                                        Partition({2, 2, 1}), Partition({6, 3, 2, 1})};
    for (const auto& lambda : shapes) {
        const Complex reference = qtilde(lambda, ComplexTuple(coords));
        for (int rep = 0; rep < 10; ++rep) {
            std::shuffle(coords.begin(), coords.end(), rng);
            const Complex shuffled = qtilde(lambda, ComplexTuple(coords));
            CHECK(std::abs(shuffled - reference) <= 1e-12 * std::max(1.0, std::abs(reference)));
        }
    }
}

TEST_CASE("index window shape") {
    // rank 1: integers 0..1; rank 2: half-integers -1/2..3/2 step 1
    const auto w1 = index_window(1);
    CHECK(w1.twice_at(0) == 0);
    CHECK(w1.twice_at(1) == 2);
    const auto w2 = index_window(2);
    CHECK(w2.twice_at(0) == -1);
    CHECK(w2.twice_at(3) == 5);
    const auto w3 = index_window(3);
    CHECK(w3.twice_at(0) == -2);   // j = -1
    CHECK(w3.twice_at(5) == 8);    // j = 4 = 3m+1
}

TEST_CASE("index tuple validation and printing") {
    CHECK(IndexTuple(3, {-2, 0, 2}).to_string() == "(-1,0,1)");
    CHECK(IndexTuple(2, {-1, 1}).to_string() == "(-1/2,1/2)");
    CHECK_THROWS_AS(IndexTuple(2, {0, 2}), std::invalid_argument);   // wrong parity
    CHECK_THROWS_AS(IndexTuple(3, {0, 0}), std::invalid_argument);   // not increasing
}

TEST_CASE("index set cardinalities") {
    for (int n = 1; n <= 12; ++n) {
        const IndexSets sets = index_sets(n);
        CHECK(sets.antipodal_free.size() == (size_t{1} << n));
        CHECK(sets.product_one.size() == (size_t{1} << (n - 1)));
    }
    CHECK(window_count(12) == binomial(24, 12));
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_window(n).size() == window_count(n));
    CHECK_THROWS_AS(index_sets(0), std::invalid_argument);
    CHECK_THROWS_AS(index_sets(15), std::invalid_argument);
}

TEST_CASE("direct index-set construction matches filtering the full window") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<IndexTuple> filtered;
        for (const IndexTuple& tuple : enumerate_window(n)) {
            bool antipodal = false;
            for (int a = 0; a < n && !antipodal; ++a)
                for (int b = 0; b < n && !antipodal; ++b)
                    if (a != b) {
                        const int diff = tuple.twice(a) - tuple.twice(b);
                        antipodal = ((diff % (4 * n)) + 4 * n) % (4 * n) == 2 * n;
                    }
            if (!antipodal) filtered.push_back(tuple);
        }
        std::sort(filtered.begin(), filtered.end());
        const IndexSets direct = index_sets(n);
        CHECK(filtered == direct.antipodal_free);
    }
}

TEST_CASE("products of zeta coordinates over I_n are plus or minus one") {
    for (int n = 1; n <= 10; ++n) {
        const IndexSets sets = index_sets(n);
        size_t positive = 0;
        for (const IndexTuple& tuple : sets.antipodal_free) {
            Complex prod = 1.0;
            const ComplexTuple pt = zeta_point(tuple, 1.0);
            for (int i = 0; i < pt.size(); ++i) prod *= pt[i];
            const bool is_plus = std::abs(prod - Complex(1.0)) < 1e-9;
            const bool is_minus = std::abs(prod + Complex(1.0)) < 1e-9;
            CHECK((is_plus || is_minus));
            if (is_plus) ++positive;
        }
        CHECK(positive == sets.product_one.size());
    }
}

TEST_CASE("zeta point examples") {
    const ComplexTuple p1 = zeta_point(IndexTuple(1, {2}), 1.0);
    CHECK(std::abs(p1[0] - Complex(-1.0, 0.0)) < 1e-15);

    const ComplexTuple p2 = zeta_point(IndexTuple(2, {1, 3}), 1.0);
    CHECK(std::abs(p2[0] - std::polar(1.0, std::numbers::pi / 4)) < 1e-15);
    CHECK(std::abs(p2[1] - std::polar(1.0, 3 * std::numbers::pi / 4)) < 1e-15);

    const ComplexTuple p3 = zeta_point(IndexTuple(2, {1, 3}), std::sqrt(2.0));
    CHECK(std::abs(p3[0]) == Approx(std::sqrt(2.0)));
    CHECK(std::abs(p3[1]) == Approx(std::sqrt(2.0)));
}
