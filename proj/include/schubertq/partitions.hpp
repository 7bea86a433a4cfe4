#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace schubertq {

/// A partition: weakly decreasing positive parts, stored without trailing
/// zeros. The empty partition is Partition{}.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are weakly decreasing and
    /// nonnegative. Trailing zeros are stripped.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses comma-separated parts; the empty string is the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    /// i-th part, 0-based; 0 beyond the length.
    int part(int i) const;
    bool empty() const { return parts_.empty(); }

    /// Row-wise containment of Young diagrams: inner_i <= outer_i for all i.
    bool contains(const Partition& inner) const;
    bool is_strict() const;
    /// Membership in R(n): at most n parts, each at most n.
    bool fits(int n) const;

    /// "(2,1)"; the empty partition prints as "()".
    std::string to_string() const;
    /// "2,1"; the empty partition prints as "".
    std::string to_csv() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A strict partition: strictly decreasing positive parts. Elements of the
/// Schubert basis index set D(n) are strict partitions with largest part <= n.
class StrictPartition {
public:
    StrictPartition() = default;
    /// Throws std::invalid_argument unless parts are strictly decreasing
    /// positive integers.
    explicit StrictPartition(std::vector<int> parts);
    StrictPartition(std::initializer_list<int> parts);

    static StrictPartition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int part(int i) const;
    bool empty() const { return parts_.empty(); }
    /// Membership in D(n).
    bool fits(int n) const { return parts_.empty() || parts_.front() <= n; }

    Partition to_partition() const { return Partition(parts_); }

    std::string to_string() const;
    std::string to_csv() const;

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

/// Skew diagram outer/inner. Construction checks containment and throws
/// std::invalid_argument on violation.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_, Partition inner_);

    int box_count() const { return outer.weight() - inner.weight(); }
    /// All boxes (row, column), 1-based, row-major.
    std::vector<std::pair<int, int>> boxes() const;
};

/// The Schubert basis index set D(n): all strict partitions with parts in
/// {1,...,n}, in a fixed total order (by weight, ties broken by
/// lexicographically larger first). The empty partition comes first and the
/// list has exactly 2^n entries. Valid for 1 <= n <= 16.
std::vector<StrictPartition> enumerate_basis(int n);

/// Complement of lambda in {1,...,n}: the strict partition on the unused
/// part sizes. A weight-reversing involution on D(n).
StrictPartition complement(const StrictPartition& lambda, int n);

/// True iff the skew diagram has at most one box in each column;
/// equivalently outer_{i+1} <= inner_i for every row i.
bool is_horizontal_strip(const SkewShape& shape);

struct ComponentCounts {
    int components = 0;            // boxes connected when they share an edge or a vertex
    int off_first_column = 0;      // components with no box in column 1
};

/// Connected components of the skew diagram, where two boxes are adjacent
/// when they share an edge or a vertex (8-neighbourhood).
ComponentCounts component_counts(const SkewShape& shape);

/// Pieri exponent N(lambda,mu): components of mu/lambda avoiding column 1.
int pieri_exponent_off_column(const SkewShape& shape);

/// Pieri exponent N'(lambda,mu): one less than the component count of
/// mu/lambda; the empty diagram counts as 0.
int pieri_exponent(const SkewShape& shape);

/// Exact binomial coefficient; throws std::overflow_error if the value does
/// not fit in 64 bits.
std::uint64_t binomial(int n, int k);

}  // namespace schubertq
