#pragma once

#include <algorithm>
#include <functional>

namespace hermite {

namespace detail {

template <class Visit>
struct SubsetSearch {
    std::span<const MultiIndex> b;
    std::size_t k;
    std::vector<int> target;
    std::uint64_t budget;
    Visit& visit;
    std::vector<int> degrees;      // |b_i|, b kept in input order
    std::vector<long> cum;         // prefix sums of degrees
    std::vector<std::size_t> chosen;
    std::vector<int> sum;
    std::uint64_t nodes = 0;
    bool stopped = false;

    void run(std::size_t start) {
        if (stopped) return;
        if (++nodes > budget) throw BudgetExceeded("instance too large: subset budget exceeded");
        if (chosen.size() == k) {
            if (sum == target) {
                std::vector<MultiIndex> subset;
                for (auto i : chosen) subset.push_back(b[i]);
                if (!visit(subset)) stopped = true;
            }
            return;
        }
        const std::size_t need = k - chosen.size();
        int deg_left = 0;
        for (std::size_t t = 0; t < sum.size(); ++t) deg_left += target[t] - sum[t];
        // even the heaviest remaining picks cannot reach the target degree
        if (cum[b.size()] - cum[b.size() - need] < deg_left) return;
        for (std::size_t i = start; i + need <= b.size(); ++i) {
            bool fits = true;
            for (std::size_t t = 0; t < sum.size(); ++t) {
                if (sum[t] + b[i][t] > target[t]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            // b is sorted by degree, so the remaining picks contribute at least need * |b_i|
            if (static_cast<long>(need) * degrees[i] > deg_left) break;
            chosen.push_back(i);
            for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += b[i][t];
            run(i + 1);
            for (std::size_t t = 0; t < sum.size(); ++t) sum[t] -= b[i][t];
            chosen.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace detail

template <class Visit>
std::uint64_t for_each_subset_with_sum(std::span<const MultiIndex> b, std::size_t k, const MultiIndex& target,
                                       std::uint64_t budget, Visit&& visit) {
    std::vector<MultiIndex> sorted(b.begin(), b.end());
    sort_graded(sorted);
    detail::SubsetSearch<Visit> s{sorted, k, {target.entries().begin(), target.entries().end()}, budget, visit,
                                  {}, {}, {}, std::vector<int>(target.dimension(), 0)};
    s.cum.push_back(0);
    for (const auto& m : sorted) {
        s.degrees.push_back(m.degree());
        s.cum.push_back(s.cum.back() + m.degree());
    }
    if (k > sorted.size()) return 0;
    s.run(0);
    return s.nodes;
}

}  // namespace hermite
