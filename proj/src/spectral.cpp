#include "schubertq/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "schubertq/parallel.hpp"

namespace schubertq {

double eigen_scale(Space space, int n) {
    return space == Space::LG ? std::pow(0.5, 1.0 / (n + 1)) : std::pow(2.0, 1.0 / n);
}

namespace {

/// The index tuples parameterizing the eigenbasis: I^e_{n+1} for LG(n),
/// I_n for OG(n). Both have 2^n elements.
std::vector<IndexTuple> eigen_indices(Space space, int n) {
    if (space == Space::LG) return index_sets(n + 1).product_one;
    return index_sets(n).antipodal_free;
}

void check_pairwise_independent(const std::vector<EigenPair>& pairs) {
    const double tol = 1e-8;
    for (size_t a = 0; a < pairs.size(); ++a) {
        const auto& u = pairs[a].coords;
        double umax = 0.0;
        size_t pivot = 0;
        for (size_t t = 0; t < u.size(); ++t)
            if (std::abs(u[t]) > umax) umax = std::abs(u[pivot = t]);
        if (umax <= 0.0) throw std::runtime_error("eigenbasis: zero eigenvector");
        for (size_t b = a + 1; b < pairs.size(); ++b) {
            const auto& v = pairs[b].coords;
            const Complex ratio = v[pivot] / u[pivot];
            bool proportional = true;
            for (size_t t = 0; t < u.size(); ++t) {
                if (std::abs(v[t] - ratio * u[t]) > tol * (1.0 + std::abs(ratio)) * umax) {
                    proportional = false;
                    break;
                }
            }
            if (proportional)
                throw std::runtime_error("eigenbasis: proportional eigenvectors at " +
                                         pairs[a].index.to_string() + " and " +
                                         pairs[b].index.to_string());
        }
    }
}

}  // namespace

std::vector<EigenPair> eigenbasis(Space space, int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("eigenbasis: n must be in 1..10");
    const Basis basis(n);
    const std::vector<IndexTuple> indices = eigen_indices(space, n);
    const double scale = eigen_scale(space, n);

    std::vector<EigenPair> pairs;
    pairs.reserve(indices.size());
    for (const IndexTuple& index : indices) {
        ComplexTuple point = zeta_point(index, scale);
        pairs.push_back(EigenPair{index, point, 0.0, {}});
    }
    parallel_for(static_cast<int>(pairs.size()), [&](int t) {
        EigenPair& pair = pairs[static_cast<size_t>(t)];
        const SymTable table(pair.point);
        pair.c1_eigenvalue = static_cast<double>(c1_coefficient(space, n)) * table.elementary(1);
        if (space == Space::OG) pair.c1_eigenvalue *= 0.5;
        pair.coords.assign(basis.dim(), 0.0);
        for (int i = 0; i < basis.dim(); ++i) {
            const StrictPartition& nu = basis[i];
            const Complex coord = space == Space::LG ? table.qtilde(nu.to_partition())
                                                     : table.ptilde(nu.to_partition());
            pair.coords[basis.index_of(complement(nu, n))] = coord;
        }
    });
    check_pairwise_independent(pairs);
    return pairs;
}

std::vector<EigenPair> eigenbasis_lg(int n) { return eigenbasis(Space::LG, n); }
std::vector<EigenPair> eigenbasis_og(int n) { return eigenbasis(Space::OG, n); }

Complex pieri_eigenvalue(Space space, const EigenPair& pair, int k) {
    const Complex ek = elementary_symmetric(k, pair.point);
    return space == Space::LG ? ek : ek * 0.5;
}

double verify_eigenpairs(Space space, int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("verify_eigenpairs: n must be in 1..8");
    const std::vector<EigenPair> pairs = eigenbasis(space, n);
    const int dim = 1 << n;

    std::vector<IntMatrix> mats;
    mats.reserve(n);
    for (int k = 1; k <= n; ++k) mats.push_back(operator_matrix(space, n, k));

    std::vector<double> worst(pairs.size(), 0.0);
    parallel_for(static_cast<int>(pairs.size()), [&](int t) {
        const EigenPair& pair = pairs[static_cast<size_t>(t)];
        const SymTable table(pair.point);
        double vnorm = 0.0;
        for (const Complex& c : pair.coords) vnorm = std::max(vnorm, std::abs(c));
        for (int k = 1; k <= n; ++k) {
            Complex value = table.elementary(k);
            if (space == Space::OG) value *= 0.5;
            const IntMatrix& m = mats[static_cast<size_t>(k - 1)];
            for (int r = 0; r < dim; ++r) {
                Complex acc = 0.0;
                for (int c = 0; c < dim; ++c) {
                    const long long entry = m(r, c);
                    if (entry != 0) acc += static_cast<double>(entry) * pair.coords[c];
                }
                const double res = std::abs(acc - value * pair.coords[r]);
                worst[t] = std::max(worst[t], res / vnorm);
            }
        }
    });
    return *std::max_element(worst.begin(), worst.end());
}

Spectrum c1_spectrum(Space space, int n) {
    Spectrum spec{space, n, {}, 0.0};
    for (const EigenPair& pair : eigenbasis(space, n)) {
        spec.values.push_back(pair.c1_eigenvalue);
        spec.delta0 = std::max(spec.delta0, std::abs(pair.c1_eigenvalue));
    }
    return spec;
}

double perron_root(const IntMatrix& m, double tol, int max_iter) {
    const int dim = m.dim();
    long long shift = 0;  // max row sum keeps the ratio of the two largest moduli small
    for (int r = 0; r < dim; ++r) {
        long long row = 0;
        for (int c = 0; c < dim; ++c) {
            if (m(r, c) < 0) throw std::invalid_argument("perron_root: negative entry");
            row += m(r, c);
        }
        shift = std::max(shift, row);
    }
    if (shift == 0) return 0.0;

    std::vector<double> x(dim, 1.0), y(dim);
    double low = 0.0, high = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        for (int r = 0; r < dim; ++r) {
            double acc = static_cast<double>(shift) * x[r];
            for (int c = 0; c < dim; ++c) {
                const long long entry = m(r, c);
                if (entry != 0) acc += static_cast<double>(entry) * x[c];
            }
            y[r] = acc;
        }
        low = y[0] / x[0];
        high = low;
        for (int r = 1; r < dim; ++r) {
            const double q = y[r] / x[r];
            low = std::min(low, q);
            high = std::max(high, q);
        }
        if (high - low < tol) return 0.5 * (low + high) - static_cast<double>(shift);
        double norm = 0.0;
        for (double v : y) norm = std::max(norm, v);
        for (int r = 0; r < dim; ++r) x[r] = y[r] / norm;
    }
    throw std::runtime_error("perron_root: no convergence after " + std::to_string(max_iter) +
                             " iterations, enclosure [" +
                             std::to_string(low - static_cast<double>(shift)) + ", " +
                             std::to_string(high - static_cast<double>(shift)) + "]");
}

double delta0_closed_form(Space space, int n) {
    if (n < 1) throw std::invalid_argument("delta0_closed_form: n must be positive");
    if (space == Space::LG)
        return std::pow(2.0, -1.0 / (n + 1)) * (n + 1) / std::sin(std::numbers::pi / (2.0 * (n + 1)));
    return std::pow(2.0, 1.0 / n) * n / std::sin(std::numbers::pi / (2.0 * n));
}

bool RietschResult::pass(double tol) const {
    return std::abs(imag_part) <= 1e-10 && std::abs(value - expected) <= tol;
}

RietschResult rietsch_check(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("rietsch_check: n must be in 1..12");
    const IndexSets sets = index_sets(n);
    const IndexTuple* best = nullptr;
    Complex best_value = 0.0;
    for (const IndexTuple& index : sets.antipodal_free) {
        const Complex e1 = elementary_symmetric(1, zeta_point(index, 1.0));
        if (best == nullptr || e1.real() > best_value.real()) {
            best = &index;
            best_value = e1;
        }
    }
    return RietschResult{*best, best_value.real(),
                         1.0 / std::sin(std::numbers::pi / (2.0 * n)), best_value.imag()};
}

PropertyOReport property_o_check(Space space, int n, double tol) {
    if (n < 1 || n > 8) throw std::invalid_argument("property_o_check: n must be in 1..8");
    const Spectrum spec = c1_spectrum(space, n);
    const int r = fano_index(space, n);

    PropertyOReport report{space, n,    r,    spec.delta0, false,
                           false, true, 0,    0};
    for (const Complex& v : spec.values) {
        if (std::abs(v - Complex(spec.delta0, 0.0)) <= tol) ++report.delta0_multiplicity;
        if (std::abs(std::abs(v) - spec.delta0) <= tol) {
            ++report.max_modulus_count;
            bool on_orbit = false;
            for (int t = 0; t < r && !on_orbit; ++t) {
                const Complex root =
                    std::polar(spec.delta0, 2.0 * std::numbers::pi * t / static_cast<double>(r));
                on_orbit = std::abs(v - root) <= tol;
            }
            if (!on_orbit) report.max_modulus_are_roots = false;
        }
    }
    report.delta0_is_eigenvalue = report.delta0_multiplicity >= 1;
    report.delta0_simple = report.delta0_multiplicity == 1;
    return report;
}

}  // namespace schubertq
