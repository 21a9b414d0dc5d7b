#include "hermite/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hermite {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
    }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

int MultiIndex::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool MultiIndex::divides(const MultiIndex& other) const {
    if (other.dimension() != dimension()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > other.entries_[i]) return false;
    }
    return true;
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

bool GradedLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return b < a;
}

void sort_graded(std::vector<MultiIndex>& v) { std::sort(v.begin(), v.end(), GradedLess{}); }

std::int64_t degred(std::span<const MultiIndex> exponents) {
    std::int64_t total = 0;
    for (const auto& e : exponents) total += e.degree();
    return total;
}

MultiIndex exponent_sum(std::span<const MultiIndex> exponents, std::size_t n) {
    std::vector<int> sum(n, 0);
    for (const auto& e : exponents) {
        for (std::size_t i = 0; i < n; ++i) sum[i] += e[i];
    }
    return MultiIndex(std::move(sum));
}

namespace {
void fill_degree(std::size_t pos, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        fill_degree(pos + 1, remaining - e, cur, out);
    }
}
}  // namespace

std::vector<MultiIndex> monomials_below_degree(int d, std::size_t n) {
    std::vector<MultiIndex> out;
    if (n == 0) return out;
    std::vector<int> cur(n, 0);
    for (int deg = 0; deg < d; ++deg) fill_degree(0, deg, cur, out);
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace hermite
