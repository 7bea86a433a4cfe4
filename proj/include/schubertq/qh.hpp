#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubertq/partitions.hpp"

namespace schubertq {

/// The two target spaces: the Lagrangian Grassmannian LG(n) and the
/// (odd) orthogonal Grassmannian OG(n). Both have a 2^n Schubert basis
/// indexed by D(n) and complex dimension n(n+1)/2.
enum class Space { LG, OG };

Space parse_space(const std::string& name);           // "lg" | "og"
std::string space_name(Space space);                  // "lg" | "og"
std::string class_symbol(Space space);                // "sigma" | "tau"

/// Degree of the quantum parameter q: n+1 for LG, 2n for OG. Coincides with
/// the Fano index.
int q_degree(Space space, int n);
int fano_index(Space space, int n);

/// c1 = (n+1)*sigma_1 for LG, 2n*tau_1 for OG.
int c1_coefficient(Space space, int n);

long long space_dimension(int n);  // n(n+1)/2

/// The ordered Schubert basis of H*(space, n) with index lookup.
class Basis {
public:
    explicit Basis(int n);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(elements_.size()); }
    const std::vector<StrictPartition>& elements() const { return elements_; }
    const StrictPartition& operator[](int i) const { return elements_[i]; }
    int index_of(const StrictPartition& lambda) const;

private:
    int n_;
    std::vector<StrictPartition> elements_;
    std::map<StrictPartition, int> index_;
};

/// An element of the Schubert-basis lattice with integer coordinates. Every
/// coefficient reachable through the Pieri rules is a power of two, so
/// 64-bit integers hold all products exactly at desk scale.
class SchubertVector {
public:
    SchubertVector(Space space, int n) : space_(space), n_(n) {}

    Space space() const { return space_; }
    int n() const { return n_; }
    const std::map<StrictPartition, long long>& coeffs() const { return coeffs_; }
    long long coeff(const StrictPartition& lambda) const;
    void add(const StrictPartition& lambda, long long value);
    bool operator==(const SchubertVector&) const = default;

private:
    Space space_;
    int n_;
    std::map<StrictPartition, long long> coeffs_;
};

/// A Pieri product sigma_k * sigma_lambda (resp. tau_k * tau_lambda) split
/// by q-degree: `classical` carries q^0, `quantum` carries q^1. No other
/// powers of q occur in a single Pieri step.
struct PieriProduct {
    Space space;
    int n = 0;
    int k = 0;
    StrictPartition lambda;
    std::map<StrictPartition, long long> classical;
    std::map<StrictPartition, long long> quantum;

    SchubertVector at_q1() const;
    /// "sigma(2,1) + q" style rendering with q kept symbolic.
    std::string to_text() const;
};

/// Quantum Pieri rule for LG(n): the classical sum runs over strict
/// mu in D(n) containing lambda with |mu| = |lambda|+k and mu/lambda a
/// horizontal strip, weighted 2^{N(lambda,mu)} with N counting components
/// off the first column; the quantum sum runs over strict nu inside lambda
/// with |nu| = |lambda|+k-(n+1) and lambda/nu a horizontal strip, weighted
/// 2^{N'(nu,lambda)}.
PieriProduct pieri_lg(int k, const StrictPartition& lambda, int n);

/// Quantum Pieri rule for OG(n): both sums run over mu containing lambda
/// with |mu| = |lambda|+k and mu/lambda a horizontal strip, weighted
/// 2^{N'(lambda,mu)}. The classical sum keeps strict mu in D(n); the
/// quantum sum takes mu with two parts equal to n and contributes
/// tau_{mu minus those two rows} with one factor of q.
PieriProduct pieri_og(int k, const StrictPartition& lambda, int n);

PieriProduct pieri(Space space, int k, const StrictPartition& lambda, int n);

/// Dense square matrix of exact 64-bit integers.
class IntMatrix {
public:
    explicit IntMatrix(int dim);

    int dim() const { return dim_; }
    long long operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
    long long& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix scaled(long long factor) const;
    static IntMatrix identity(int dim);

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

private:
    int dim_;
    std::vector<long long> a_;
};

/// Matrix of the quantum multiplication operator by the k-th Pieri class at
/// q = 1; column c holds the image of the c-th basis element, rows and
/// columns in enumerate_basis order.
IntMatrix operator_matrix(Space space, int n, int k);

/// Matrix of quantum multiplication by c1 at q = 1:
/// (n+1)*[sigma_1] for LG, 2n*[tau_1] for OG.
IntMatrix c1_matrix(Space space, int n);

/// Evaluates the ring presentation as operator identities at q = 1 and
/// returns one residual matrix per relation; a correct implementation
/// returns all-zero matrices. For LG the relations are
///   sigma_i^2 + 2 sum_{k=1..n-i} (-1)^k sigma_{i+k} sigma_{i-k}
///     = (-1)^{n-i} sigma_{2i-n-1} q            (1 <= i <= n),
/// for OG
///   tau_i^2 + 2 sum_{k=1..i-1} (-1)^k tau_{i+k} tau_{i-k}
///     + (-1)^i tau_{2i} = 0                    (1 <= i <= n-1)
/// together with tau_n^2 = q. Single-row classes with index outside 0..n
/// are zero and index 0 is the unit.
std::vector<IntMatrix> check_ring_relations(Space space, int n);

/// Strong connectivity of the directed support graph (edge r -> c when the
/// entry is nonzero); the Perron-Frobenius hypothesis for c1 matrices.
bool is_irreducible(const IntMatrix& m);

}  // namespace schubertq
