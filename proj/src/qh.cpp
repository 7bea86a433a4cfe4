#include "schubertq/qh.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubertq/parallel.hpp"

namespace schubertq {

Space parse_space(const std::string& name) {
    if (name == "lg" || name == "LG") return Space::LG;
    if (name == "og" || name == "OG") return Space::OG;
    throw std::invalid_argument("space must be 'lg' or 'og'");
}

std::string space_name(Space space) { return space == Space::LG ? "lg" : "og"; }
std::string class_symbol(Space space) { return space == Space::LG ? "sigma" : "tau"; }

int q_degree(Space space, int n) { return space == Space::LG ? n + 1 : 2 * n; }
int fano_index(Space space, int n) { return q_degree(space, n); }
int c1_coefficient(Space space, int n) { return space == Space::LG ? n + 1 : 2 * n; }

long long space_dimension(int n) { return static_cast<long long>(n) * (n + 1) / 2; }

Basis::Basis(int n) : n_(n), elements_(enumerate_basis(n)) {
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i) index_[elements_[i]] = i;
}

int Basis::index_of(const StrictPartition& lambda) const {
    auto it = index_.find(lambda);
    if (it == index_.end())
        throw std::invalid_argument("basis: " + lambda.to_string() + " not in D(n)");
    return it->second;
}

long long SchubertVector::coeff(const StrictPartition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? 0 : it->second;
}

void SchubertVector::add(const StrictPartition& lambda, long long value) {
    if (value == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SchubertVector PieriProduct::at_q1() const {
    SchubertVector v(space, n);
    for (const auto& [mu, c] : classical) v.add(mu, c);
    for (const auto& [nu, c] : quantum) v.add(nu, c);
    return v;
}

std::string PieriProduct::to_text() const {
    const std::string sym = class_symbol(space);
    std::vector<std::string> pieces;
    auto render = [&](const StrictPartition& label, long long coeff, bool with_q) {
        std::string term;
        if (coeff != 1) term = std::to_string(coeff);
        if (!label.empty()) {
            if (!term.empty()) term += "*";
            term += sym + label.to_string();
        }
        if (with_q) {
            if (!term.empty()) term += "*";
            term += "q";
        }
        if (term.empty()) term = "1";
        pieces.push_back(std::move(term));
    };
    for (const auto& [mu, c] : classical) render(mu, c, false);
    for (const auto& [nu, c] : quantum) render(nu, c, true);
    if (pieces.empty()) return "0";
    std::string out = pieces.front();
    for (size_t i = 1; i < pieces.size(); ++i) out += " + " + pieces[i];
    return out;
}

namespace {

void check_pieri_args(int k, const StrictPartition& lambda, int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("pieri: n must be in 1..16");
    if (k < 1 || k > n) throw std::invalid_argument("pieri: k must be in 1..n");
    if (!lambda.fits(n)) throw std::invalid_argument("pieri: lambda not in D(n)");
}

}  // namespace

PieriProduct pieri_lg(int k, const StrictPartition& lambda, int n) {
    check_pieri_args(k, lambda, n);
    PieriProduct out{Space::LG, n, k, lambda, {}, {}};
    const Partition inner = lambda.to_partition();

    for (const StrictPartition& mu : enumerate_basis(n)) {
        if (mu.weight() != lambda.weight() + k) continue;
        const Partition outer = mu.to_partition();
        if (!outer.contains(inner)) continue;
        SkewShape shape(outer, inner);
        if (!is_horizontal_strip(shape)) continue;
        out.classical[mu] = 1LL << pieri_exponent_off_column(shape);
    }

    const int quantum_weight = lambda.weight() + k - (n + 1);
    if (quantum_weight >= 0) {
        for (const StrictPartition& nu : enumerate_basis(n)) {
            if (nu.weight() != quantum_weight) continue;
            const Partition small = nu.to_partition();
            if (!inner.contains(small)) continue;
            SkewShape shape(inner, small);
            if (!is_horizontal_strip(shape)) continue;
            out.quantum[nu] = 1LL << pieri_exponent(shape);
        }
    }
    return out;
}

PieriProduct pieri_og(int k, const StrictPartition& lambda, int n) {
    check_pieri_args(k, lambda, n);
    PieriProduct out{Space::OG, n, k, lambda, {}, {}};
    const Partition inner = lambda.to_partition();

    for (const StrictPartition& mu : enumerate_basis(n)) {
        if (mu.weight() != lambda.weight() + k) continue;
        const Partition outer = mu.to_partition();
        if (!outer.contains(inner)) continue;
        SkewShape shape(outer, inner);
        if (!is_horizontal_strip(shape)) continue;
        out.classical[mu] = 1LL << pieri_exponent(shape);
    }

    // Quantum terms come from non-strict mu = (n, n, rho...) containing
    // lambda; the strip condition forces exactly two parts equal to n.
    const int quantum_weight = lambda.weight() + k - 2 * n;
    if (quantum_weight >= 0) {
        for (const StrictPartition& rho : enumerate_basis(n)) {
            if (rho.weight() != quantum_weight) continue;
            std::vector<int> parts{n, n};
            parts.insert(parts.end(), rho.parts().begin(), rho.parts().end());
            const Partition outer(std::move(parts));
            if (!outer.contains(inner)) continue;
            SkewShape shape(outer, inner);
            if (!is_horizontal_strip(shape)) continue;
            out.quantum[rho] = 1LL << pieri_exponent(shape);
        }
    }
    return out;
}

PieriProduct pieri(Space space, int k, const StrictPartition& lambda, int n) {
    return space == Space::LG ? pieri_lg(k, lambda, n) : pieri_og(k, lambda, n);
}

IntMatrix::IntMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0) {
    if (dim < 1) throw std::invalid_argument("IntMatrix: dimension must be positive");
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const long long v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < dim_; ++j) out.at(i, j) += v * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(dim_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] + rhs.a_[t];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(dim_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] - rhs.a_[t];
    return out;
}

IntMatrix IntMatrix::scaled(long long factor) const {
    IntMatrix out(dim_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] * factor;
    return out;
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix out(dim);
    for (int i = 0; i < dim; ++i) out.at(i, i) = 1;
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](long long v) { return v == 0; });
}

IntMatrix operator_matrix(Space space, int n, int k) {
    const Basis basis(n);
    IntMatrix m(basis.dim());
    parallel_for(basis.dim(), [&](int c) {
        const SchubertVector image = pieri(space, k, basis[c], n).at_q1();
        for (const auto& [label, coeff] : image.coeffs()) m.at(basis.index_of(label), c) = coeff;
    });
    return m;
}

IntMatrix c1_matrix(Space space, int n) {
    return operator_matrix(space, n, 1).scaled(c1_coefficient(space, n));
}

std::vector<IntMatrix> check_ring_relations(Space space, int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("check_ring_relations: n must be in 1..10");
    const int dim = 1 << n;
    std::vector<IntMatrix> ops;
    ops.reserve(n + 1);
    ops.push_back(IntMatrix::identity(dim));  // the unit class
    for (int k = 1; k <= n; ++k) ops.push_back(operator_matrix(space, n, k));
    // single-row classes outside 0..n are the zero class
    auto op = [&](int j) {
        if (j < 0 || j > n) return IntMatrix(dim);
        return ops[j];
    };

    std::vector<IntMatrix> residuals;
    if (space == Space::LG) {
        for (int i = 1; i <= n; ++i) {
            IntMatrix lhs = ops[i] * ops[i];
            long long sign = -1;
            for (int k = 1; k <= n - i; ++k, sign = -sign)
                lhs = lhs + (op(i + k) * op(i - k)).scaled(2 * sign);
            const long long rhs_sign = ((n - i) % 2 == 0) ? 1 : -1;
            residuals.push_back(lhs - op(2 * i - n - 1).scaled(rhs_sign));
        }
    } else {
        for (int i = 1; i <= n - 1; ++i) {
            IntMatrix lhs = ops[i] * ops[i];
            long long sign = -1;
            for (int k = 1; k <= i - 1; ++k, sign = -sign)
                lhs = lhs + (op(i + k) * op(i - k)).scaled(2 * sign);
            const long long tail_sign = (i % 2 == 0) ? 1 : -1;
            residuals.push_back(lhs + op(2 * i).scaled(tail_sign));
        }
        residuals.push_back(ops[n] * ops[n] - IntMatrix::identity(dim));  // tau_n^2 = q
    }
    return residuals;
}

bool is_irreducible(const IntMatrix& m) {
    const int dim = m.dim();
    auto reaches_all = [&](bool transpose) {
        std::vector<char> seen(dim, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < dim; ++w) {
                const long long entry = transpose ? m(w, v) : m(v, w);
                if (entry != 0 && !seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    stack.push_back(w);
                }
            }
        }
        return visited == dim;
    };
    return reaches_all(false) && reaches_all(true);
}

}  // namespace schubertq
