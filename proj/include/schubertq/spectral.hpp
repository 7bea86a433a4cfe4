#pragma once

#include <complex>
#include <vector>

#include "schubertq/qh.hpp"
#include "schubertq/sympoly.hpp"

namespace schubertq {

/// One closed-form eigenvector of the Pieri operators, attached to an index
/// tuple I. `point` is the scaled root-of-unity tuple at which the
/// eigenvector coordinates and all eigenvalues are evaluated:
/// delta*zeta^I with delta = 2^{-1/(n+1)} over I in I^e_{n+1} for LG(n), and
/// epsilon*zeta^I with epsilon = 2^{1/n} over I in I_n for OG(n).
struct EigenPair {
    IndexTuple index;
    ComplexTuple point;
    Complex c1_eigenvalue;
    std::vector<Complex> coords;  // in enumerate_basis order
};

/// The scale factor applied to zeta^I: 2^{-1/(n+1)} (LG) or 2^{1/n} (OG).
double eigen_scale(Space space, int n);

/// The closed-form simultaneous eigenbasis: 2^n pairs, one per admissible
/// index tuple. The coordinate on basis element mu is Q~ (LG) or P~ (OG) of
/// the complement of mu, evaluated at `point`. Construction verifies the
/// vectors pairwise non-proportional. Valid for n <= 10.
std::vector<EigenPair> eigenbasis(Space space, int n);
std::vector<EigenPair> eigenbasis_lg(int n);
std::vector<EigenPair> eigenbasis_og(int n);

/// Claimed eigenvalue of the k-th Pieri operator on this eigenvector:
/// E_k(point) for LG, E_k(point)/2 for OG.
Complex pieri_eigenvalue(Space space, const EigenPair& pair, int k);

/// Largest relative residual ||M_k v - lambda v||_inf / ||v||_inf over all
/// k = 1..n and all eigenpairs, with M_k the exact Pieri matrix at q = 1.
/// Valid for n <= 8.
double verify_eigenpairs(Space space, int n);

/// The closed-form spectrum of the c1 operator. delta0 is the largest
/// modulus, which is expected to be attained by a real eigenvalue.
struct Spectrum {
    Space space;
    int n;
    std::vector<Complex> values;  // 2^n entries, one per index tuple
    double delta0;
};
Spectrum c1_spectrum(Space space, int n);

/// Dominant eigenvalue of a nonnegative irreducible matrix. Power iteration
/// from the all-ones vector on the diagonally shifted matrix M + sI (the
/// shift makes the iteration matrix primitive; c1 matrices are irreducible
/// but periodic, with period the Fano index, so the unshifted iteration
/// oscillates). Convergence is certified by the Collatz-Wielandt enclosure
///   min_i (Mx)_i/x_i  <=  perron root  <=  max_i (Mx)_i/x_i
/// which brackets the root for every positive vector x; the loop stops when
/// the bracket is narrower than tol. Throws std::runtime_error with the
/// last estimate if max_iter is exhausted.
double perron_root(const IntMatrix& m, double tol = 1e-9, int max_iter = 500000);

/// delta0 by the closed formula: 2^{-1/(n+1)} (n+1) / sin(pi/(2(n+1))) for
/// LG and 2^{1/n} n / sin(pi/(2n)) for OG.
double delta0_closed_form(Space space, int n);

/// Maximizer of Re E_1(zeta^I) over I_n together with the attained value
/// and the predicted value 1/sin(pi/2n).
struct RietschResult {
    IndexTuple maximizer;
    double value;
    double expected;
    double imag_part;  // imaginary part at the maximizer, should vanish
    bool pass(double tol = 1e-9) const;
};
RietschResult rietsch_check(int n);

/// The three spectral conditions on the c1 spectrum: delta0 is attained by
/// an eigenvalue, that eigenvalue is simple, and every eigenvalue of
/// maximal modulus is delta0 times an r-th root of unity, r the Fano index.
struct PropertyOReport {
    Space space;
    int n;
    int fano_index;
    double delta0;
    bool delta0_is_eigenvalue;
    bool delta0_simple;
    bool max_modulus_are_roots;
    int delta0_multiplicity;
    int max_modulus_count;
    bool pass() const { return delta0_is_eigenvalue && delta0_simple && max_modulus_are_roots; }
};
PropertyOReport property_o_check(Space space, int n, double tol = 1e-8);

}  // namespace schubertq
