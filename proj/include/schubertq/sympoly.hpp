#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "schubertq/partitions.hpp"

namespace schubertq {

using Complex = std::complex<double>;

/// A fixed-length tuple of complex numbers: the point at which symmetric
/// polynomials get evaluated.
class ComplexTuple {
public:
    explicit ComplexTuple(std::vector<Complex> coords);

    const std::vector<Complex>& coords() const { return coords_; }
    int size() const { return static_cast<int>(coords_.size()); }
    Complex operator[](int i) const { return coords_[i]; }

private:
    std::vector<Complex> coords_;
};

/// An evaluation index J for the root-of-unity points of rank n: a strictly
/// increasing n-tuple of integers (n odd) or half-integers (n even), stored
/// exactly as doubled values 2*j so that membership tests never touch
/// floating point.
class IndexTuple {
public:
    /// `twice` holds 2*j_1 < ... < 2*j_n; parity must match n (even doubled
    /// values when n is odd, odd doubled values when n is even).
    IndexTuple(int n, std::vector<int> twice);

    int rank() const { return n_; }
    int size() const { return static_cast<int>(twice_.size()); }
    int twice(int i) const { return twice_[i]; }
    const std::vector<int>& twice_values() const { return twice_; }
    double value(int i) const { return twice_[i] / 2.0; }

    /// "(-1/2,1/2)" or "(0,1)".
    std::string to_string() const;

    friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

private:
    int n_ = 0;
    std::vector<int> twice_;
};

/// The window of admissible indices for rank n: entries between -m and 3m+1
/// (n = 2m+1) or -m+1/2 and 3m-1/2 (n = 2m); 2n consecutive values in all.
struct IndexWindow {
    int n;
    /// doubled value of the smallest admissible index
    int twice_min;
    /// doubled value of slot t, 0 <= t < 2n
    int twice_at(int t) const { return twice_min + 2 * t; }
};
IndexWindow index_window(int n);

/// Number of n-subsets of the window, C(2n, n).
std::uint64_t window_count(int n);

/// Materializes the full window set T_n; guarded to n <= 10 (the set has
/// C(2n,n) elements). Larger ranks use window_count plus the direct
/// constructions below.
std::vector<IndexTuple> enumerate_window(int n);

struct IndexSets {
    std::vector<IndexTuple> antipodal_free;  // I_n:  zeta^{j_k} != -zeta^{j_l}, 2^n tuples
    std::vector<IndexTuple> product_one;     // I_n^e: prod_k zeta^{j_k} = 1,  2^{n-1} tuples
};

/// Builds I_n and I_n^e for 1 <= n <= 14. The window splits into n antipodal
/// pairs {t, t+n}; an antipodal-free n-subset picks exactly one index from
/// each pair, so I_n is enumerated directly (no filtering of T_n). The
/// product condition is the exact congruence sum(j_k) = 0 mod 2n.
IndexSets index_sets(int n);

/// The evaluation point (scale*zeta^{j_1}, ..., scale*zeta^{j_n}) with
/// zeta = exp(pi*i/n), n the rank of J.
ComplexTuple zeta_point(const IndexTuple& J, double scale);

/// Elementary symmetric polynomial values E_0..E_n of a fixed point,
/// computed once by the triangle recurrence, plus the polynomial evaluators
/// that consume them.
class SymTable {
public:
    explicit SymTable(const ComplexTuple& point);

    int size() const { return n_; }
    /// E_k of the point; 0 outside 0..n.
    Complex elementary(int k) const;

    /// Two-row kernel Q~_{i,j} = E_i E_j + 2 sum_{k=1..j} (-1)^k E_{i+k} E_{j-k};
    /// requires i >= j >= 0.
    Complex qtilde_two_row(int i, int j) const;

    /// Q~_lambda: the Pfaffian of the matrix of two-row kernels over the rows
    /// of lambda (padded with one zero row when the length is odd).
    /// Q~ of the empty partition is 1; Q~_{(k)} = E_k.
    Complex qtilde(const Partition& lambda) const;

    /// P~_lambda = 2^{-l(lambda)} Q~_lambda.
    Complex ptilde(const Partition& lambda) const;

private:
    int n_;
    std::vector<Complex> e_;
};

Complex elementary_symmetric(int k, const ComplexTuple& point);
Complex qtilde_two_row(int i, int j, const ComplexTuple& point);
Complex qtilde(const Partition& lambda, const ComplexTuple& point);
Complex ptilde(const Partition& lambda, const ComplexTuple& point);

/// Dense skew-symmetric matrix of even size; set(i,j,v) writes v at (i,j)
/// and -v at (j,i).
class SkewSymMatrix {
public:
    explicit SkewSymMatrix(int size);

    int size() const { return size_; }
    Complex operator()(int i, int j) const { return a_[static_cast<size_t>(i) * size_ + j]; }
    void set(int i, int j, Complex v);

private:
    int size_;
    std::vector<Complex> a_;
};

/// Pfaffian by recursive expansion along the first row. Exact arithmetic
/// shape, exponential term count; intended for size <= 10.
Complex pfaffian_expansion(const SkewSymMatrix& b);

/// Pfaffian by skew-symmetric elimination with partial pivoting, O(r^3).
Complex pfaffian_elimination(const SkewSymMatrix& b);

/// Dispatches to the expansion for size <= 10 and elimination above;
/// size must be even and at most 16.
Complex pfaffian(const SkewSymMatrix& b);

}  // namespace schubertq
