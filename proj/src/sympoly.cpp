#include "schubertq/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schubertq {

ComplexTuple::ComplexTuple(std::vector<Complex> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("ComplexTuple: empty point");
}

IndexTuple::IndexTuple(int n, std::vector<int> twice) : n_(n), twice_(std::move(twice)) {
    if (n_ < 1) throw std::invalid_argument("IndexTuple: rank must be positive");
    if (static_cast<int>(twice_.size()) != n_)
        throw std::invalid_argument("IndexTuple: expected exactly n entries");
    const IndexWindow window = index_window(n_);
    const int parity = (n_ % 2 == 1) ? 0 : 1;  // integers for odd rank, half-integers for even
    for (size_t i = 0; i < twice_.size(); ++i) {
        if (((twice_[i] % 2) + 2) % 2 != parity)
            throw std::invalid_argument("IndexTuple: entry parity does not match rank");
        if (i > 0 && twice_[i] <= twice_[i - 1])
            throw std::invalid_argument("IndexTuple: entries must be strictly increasing");
        if (twice_[i] < window.twice_at(0) || twice_[i] > window.twice_at(2 * n_ - 1))
            throw std::invalid_argument("IndexTuple: entry outside the admissible window");
    }
}

std::string IndexTuple::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < twice_.size(); ++i) {
        if (i) out += ",";
        if (twice_[i] % 2 == 0)
            out += std::to_string(twice_[i] / 2);
        else
            out += std::to_string(twice_[i]) + "/2";
    }
    return out + ")";
}

IndexWindow index_window(int n) {
    if (n < 1) throw std::invalid_argument("index_window: n must be positive");
    if (n % 2 == 1) {
        const int m = (n - 1) / 2;
        return {n, -2 * m};  // j in {-m, ..., 3m+1}
    }
    const int m = n / 2;
    return {n, -2 * m + 1};  // j in {-m+1/2, ..., 3m-1/2}
}

std::uint64_t window_count(int n) { return binomial(2 * n, n); }

std::vector<IndexTuple> enumerate_window(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_window: n must be in 1..10");
    const IndexWindow w = index_window(n);
    std::vector<IndexTuple> out;
    out.reserve(window_count(n));
    std::vector<int> slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i;
    while (true) {
        std::vector<int> twice(n);
        for (int i = 0; i < n; ++i) twice[i] = w.twice_at(slots[i]);
        out.emplace_back(n, std::move(twice));
        int i = n - 1;
        while (i >= 0 && slots[i] == n + i) --i;
        if (i < 0) break;
        ++slots[i];
        for (int t = i + 1; t < n; ++t) slots[t] = slots[t - 1] + 1;
    }
    return out;
}

IndexSets index_sets(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("index_sets: n must be in 1..14");
    const IndexWindow w = index_window(n);
    IndexSets sets;
    sets.antipodal_free.reserve(std::size_t{1} << n);
    // The window consists of the n antipodal pairs {t, t+n}; a subset of size
    // n is antipodal-free exactly when it takes one slot from each pair.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> twice(n);
        long long doubled_sum = 0;
        for (int t = 0; t < n; ++t) {
            const int slot = (mask & (1u << t)) ? t + n : t;
            twice[t] = w.twice_at(slot);
            doubled_sum += twice[t];
        }
        std::sort(twice.begin(), twice.end());
        const bool product_is_one = (doubled_sum % (4LL * n) + 4LL * n) % (4LL * n) == 0;
        sets.antipodal_free.emplace_back(n, std::move(twice));
        if (product_is_one) sets.product_one.push_back(sets.antipodal_free.back());
    }
    std::sort(sets.antipodal_free.begin(), sets.antipodal_free.end());
    std::sort(sets.product_one.begin(), sets.product_one.end());
    return sets;
}

ComplexTuple zeta_point(const IndexTuple& J, double scale) {
    std::vector<Complex> coords(J.size());
    for (int i = 0; i < J.size(); ++i)
        coords[i] = std::polar(scale, std::numbers::pi * J.twice(i) / (2.0 * J.rank()));
    return ComplexTuple(std::move(coords));
}

SymTable::SymTable(const ComplexTuple& point) : n_(point.size()), e_(point.size() + 1, 0.0) {
    e_[0] = 1.0;
    for (int i = 0; i < n_; ++i)
        for (int k = std::min(i + 1, n_); k >= 1; --k) e_[k] += point[i] * e_[k - 1];
}

Complex SymTable::elementary(int k) const {
    return (k >= 0 && k <= n_) ? e_[k] : Complex(0.0);
}

Complex SymTable::qtilde_two_row(int i, int j) const {
    if (i < j || j < 0) throw std::invalid_argument("qtilde_two_row: requires i >= j >= 0");
    Complex sum = elementary(i) * elementary(j);
    double sign = -1.0;
    for (int k = 1; k <= j; ++k, sign = -sign)
        sum += 2.0 * sign * elementary(i + k) * elementary(j - k);
    return sum;
}

Complex SymTable::qtilde(const Partition& lambda) const {
    if (!lambda.fits(n_)) throw std::invalid_argument("qtilde: lambda not in R(n)");
    int rows = lambda.length();
    if (rows == 0) return 1.0;
    if (rows % 2 == 1) ++rows;  // pad with one zero row
    SkewSymMatrix b(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j) b.set(i, j, qtilde_two_row(lambda.part(i), lambda.part(j)));
    return pfaffian(b);
}

Complex SymTable::ptilde(const Partition& lambda) const {
    return qtilde(lambda) * std::ldexp(1.0, -lambda.length());
}

Complex elementary_symmetric(int k, const ComplexTuple& point) {
    return SymTable(point).elementary(k);
}

Complex qtilde_two_row(int i, int j, const ComplexTuple& point) {
    return SymTable(point).qtilde_two_row(i, j);
}

Complex qtilde(const Partition& lambda, const ComplexTuple& point) {
    return SymTable(point).qtilde(lambda);
}

Complex ptilde(const Partition& lambda, const ComplexTuple& point) {
    return SymTable(point).ptilde(lambda);
}

SkewSymMatrix::SkewSymMatrix(int size)
    : size_(size), a_(static_cast<size_t>(size) * size, 0.0) {
    if (size < 0 || size % 2 != 0)
        throw std::invalid_argument("SkewSymMatrix: size must be even and nonnegative");
}

void SkewSymMatrix::set(int i, int j, Complex v) {
    if (i == j && v != 0.0) throw std::invalid_argument("SkewSymMatrix: diagonal must stay zero");
    a_[static_cast<size_t>(i) * size_ + j] = v;
    a_[static_cast<size_t>(j) * size_ + i] = -v;
}

namespace {

Complex pfaffian_expand(const std::vector<Complex>& a, size_t stride, const std::vector<int>& rows) {
    const size_t r = rows.size();
    if (r == 0) return 1.0;
    const size_t first = static_cast<size_t>(rows[0]);
    Complex total = 0.0;
    double sign = 1.0;
    for (size_t j = 1; j < r; ++j, sign = -sign) {
        const Complex factor = a[first * stride + rows[j]];
        if (factor != 0.0) {
            std::vector<int> rest;
            rest.reserve(r - 2);
            for (size_t t = 1; t < r; ++t)
                if (t != j) rest.push_back(rows[t]);
            total += sign * factor * pfaffian_expand(a, stride, rest);
        }
    }
    return total;
}

}  // namespace

Complex pfaffian_expansion(const SkewSymMatrix& b) {
    const int r = b.size();
    if (r == 0) return 1.0;
    std::vector<Complex> a(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[static_cast<size_t>(i) * r + j] = b(i, j);
    std::vector<int> rows(r);
    for (int i = 0; i < r; ++i) rows[i] = i;
    return pfaffian_expand(a, static_cast<size_t>(r), rows);
}

Complex pfaffian_elimination(const SkewSymMatrix& b) {
    const int r = b.size();
    if (r == 0) return 1.0;
    std::vector<Complex> a(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[static_cast<size_t>(i) * r + j] = b(i, j);
    auto at = [&](int i, int j) -> Complex& { return a[static_cast<size_t>(i) * r + j]; };

    Complex pf = 1.0;
    for (int k = 0; k < r; k += 2) {
        int pivot = k + 1;
        for (int j = k + 2; j < r; ++j)
            if (std::abs(at(k, j)) > std::abs(at(k, pivot))) pivot = j;
        if (at(k, pivot) == 0.0) return 0.0;
        if (pivot != k + 1) {
            for (int t = 0; t < r; ++t) std::swap(at(pivot, t), at(k + 1, t));
            for (int t = 0; t < r; ++t) std::swap(at(t, pivot), at(t, k + 1));
            pf = -pf;
        }
        const Complex head = at(k, k + 1);
        pf *= head;
        // Schur-complement update: A_ij -= (A_ki A_{k+1,j} - A_kj A_{k+1,i}) / head
        for (int i = k + 2; i < r; ++i)
            for (int j = k + 2; j < r; ++j)
                at(i, j) -= (at(k, i) * at(k + 1, j) - at(k, j) * at(k + 1, i)) / head;
    }
    return pf;
}

Complex pfaffian(const SkewSymMatrix& b) {
    if (b.size() > 16) throw std::invalid_argument("pfaffian: size must be at most 16");
    return b.size() <= 10 ? pfaffian_expansion(b) : pfaffian_elimination(b);
}

}  // namespace schubertq
