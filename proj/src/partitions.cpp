#include "schubertq/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schubertq {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad partition part: '" + tok + "'");
        parts.push_back(v);
    }
    return parts;
}

std::string join_parts(const std::vector<int>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& text) { return Partition(parse_parts(text)); }

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 0 && i < static_cast<int>(parts_.size())) ? parts_[i] : 0;
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > part(i)) return false;
    return true;
}

bool Partition::is_strict() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] >= parts_[i - 1]) return false;
    return true;
}

bool Partition::fits(int n) const {
    return length() <= n && (parts_.empty() || parts_.front() <= n);
}

std::string Partition::to_string() const { return "(" + join_parts(parts_, ",") + ")"; }
std::string Partition::to_csv() const { return join_parts(parts_, ","); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("strict partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("strict partition parts must be strictly decreasing");
    }
}

StrictPartition::StrictPartition(std::initializer_list<int> parts)
    : StrictPartition(std::vector<int>(parts)) {}

StrictPartition StrictPartition::parse(const std::string& text) {
    return StrictPartition(parse_parts(text));
}

int StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int StrictPartition::part(int i) const {
    return (i >= 0 && i < static_cast<int>(parts_.size())) ? parts_[i] : 0;
}

std::string StrictPartition::to_string() const { return "(" + join_parts(parts_, ",") + ")"; }
std::string StrictPartition::to_csv() const { return join_parts(parts_, ","); }

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape: inner partition not contained in outer");
}

std::vector<std::pair<int, int>> SkewShape::boxes() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < outer.length(); ++i)
        for (int c = inner.part(i) + 1; c <= outer.part(i); ++c)
            out.emplace_back(i + 1, c);
    return out;
}

std::vector<StrictPartition> enumerate_basis(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("enumerate_basis: n must be in 1..16");
    std::vector<StrictPartition> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> parts;
        for (int p = n; p >= 1; --p)
            if (mask & (1u << (p - 1))) parts.push_back(p);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), [](const StrictPartition& a, const StrictPartition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() > b.parts();
    });
    return out;
}

StrictPartition complement(const StrictPartition& lambda, int n) {
    if (!lambda.fits(n)) throw std::invalid_argument("complement: lambda not in D(n)");
    std::set<int> used(lambda.parts().begin(), lambda.parts().end());
    std::vector<int> parts;
    for (int p = n; p >= 1; --p)
        if (!used.count(p)) parts.push_back(p);
    return StrictPartition(std::move(parts));
}

bool is_horizontal_strip(const SkewShape& shape) {
    for (int i = 0; i + 1 < shape.outer.length(); ++i)
        if (shape.outer.part(i + 1) > shape.inner.part(i)) return false;
    return true;
}

ComponentCounts component_counts(const SkewShape& shape) {
    const auto boxes = shape.boxes();
    std::set<std::pair<int, int>> remaining(boxes.begin(), boxes.end());
    ComponentCounts counts;
    while (!remaining.empty()) {
        ++counts.components;
        bool meets_first_column = false;
        std::vector<std::pair<int, int>> stack{*remaining.begin()};
        remaining.erase(remaining.begin());
        while (!stack.empty()) {
            auto [r, c] = stack.back();
            stack.pop_back();
            if (c == 1) meets_first_column = true;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    auto it = remaining.find({r + dr, c + dc});
                    if (it != remaining.end()) {
                        stack.push_back(*it);
                        remaining.erase(it);
                    }
                }
            }
        }
        if (!meets_first_column) ++counts.off_first_column;
    }
    return counts;
}

int pieri_exponent_off_column(const SkewShape& shape) {
    return component_counts(shape).off_first_column;
}

int pieri_exponent(const SkewShape& shape) {
    const int c = component_counts(shape).components;
    return c == 0 ? 0 : c - 1;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: C(n-k+i, i) = C(n-k+i-1, i-1) * (n-k+i) / i
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > ~std::uint64_t{0}) throw std::overflow_error("binomial: 64-bit overflow");
    }
    return static_cast<std::uint64_t>(result);
}

}  // namespace schubertq
