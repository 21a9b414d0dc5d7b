#include "hermite/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hermite/parallel.hpp"
#include "hermite/reduction.hpp"

namespace hermite {

std::int64_t expected_dimension(const SingularitySpec& spec) {
    if (spec.degree < 0) throw std::invalid_argument("degree must be nonnegative");
    const std::int64_t d = spec.degree;
    std::int64_t dim = (d + 1) * (d + 2) / 2;
    for (std::size_t k = 0; k < spec.counts.size(); ++k) {
        if (spec.counts[k] < 0) throw std::invalid_argument("counts must be nonnegative");
        const auto kk = static_cast<std::int64_t>(k);
        dim -= static_cast<std::int64_t>(spec.counts[k]) * (kk + 1) * (kk + 2) / 2;
    }
    return std::max<std::int64_t>(0, dim);
}

int r_bound(int m, int k) {
    if (k < 0 || k > 12 || k > m) throw std::out_of_range("r_bound needs 0 <= k <= min(m, 12)");
    const std::int64_t num = 4LL * (m + 1) * (2 * m + 1);
    const std::int64_t den = static_cast<std::int64_t>(k + 1) * (k + 2);
    const std::int64_t ceil = (num + den - 1) / den;
    return static_cast<int>(std::max<std::int64_t>(6LL * (m + 1), ceil));
}

MixedBound mixed_q(int d, int D, int p) {
    if (d < 1 || D < 1 || p < 1) throw std::invalid_argument("mixed_q needs positive arguments");
    MixedBound b{d, D, p, 2 * D, 0};
    const std::int64_t dd = static_cast<std::int64_t>(d) * (d + 1);
    while (static_cast<std::int64_t>(b.h) * (b.h + 1) <= static_cast<std::int64_t>(p - 1) * dd) ++b.h;
    const std::int64_t num = static_cast<std::int64_t>(b.h) * (b.h - 1) + 2LL * D * (b.h - 1);
    b.q = static_cast<int>(num / dd + 1);  // least integer strictly above num/dd
    return b;
}

InterpProblem mixed_one_step_problem(std::span<const int> counts) {
    std::vector<int> orders;
    std::int64_t card = 0;
    for (std::size_t j = counts.size(); j-- > 0;) {
        const int order = static_cast<int>(j) + 1;
        for (int i = 0; i < counts[j]; ++i) orders.push_back(order);
        card += static_cast<std::int64_t>(counts[j]) * order * (order + 1) / 2;
    }
    return InterpProblem::planar(orders, Staircase::one_step(card));
}

Verdict mixed_one_step_verdict(std::span<const int> counts, const VerdictConfig& config) {
    return is_generically_correct(mixed_one_step_problem(counts), config);
}

std::vector<std::vector<int>> mixed_exceptions(int m, const SearchConfig& config) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    const int D = m + 1;
    std::vector<int> q(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) q[static_cast<std::size_t>(j)] = mixed_q(j + 1, D, config.base_nodes).q;
    std::uint64_t tails = 1;
    for (int j = 1; j <= m; ++j) {
        tails *= static_cast<std::uint64_t>(q[static_cast<std::size_t>(j)]);
        if (tails > config.problem_budget) throw BudgetExceeded("search box exceeds the problem budget");
    }
    // one work item per tail (p_1..p_m); p_0 is scanned upwards since adding a simple node keeps correctness
    std::vector<std::vector<std::vector<int>>> found(tails);
    parallel_for(tails, config.jobs, [&](std::size_t idx) {
        std::vector<int> counts(static_cast<std::size_t>(m) + 1, 0);
        std::size_t rest = idx;
        for (int j = 1; j <= m; ++j) {
            const auto qj = static_cast<std::size_t>(q[static_cast<std::size_t>(j)]);
            counts[static_cast<std::size_t>(j)] = static_cast<int>(rest % qj);
            rest /= qj;
        }
        for (int p0 = 0; p0 < q[0]; ++p0) {
            counts[0] = p0;
            if (mixed_one_step_verdict(counts, config.verdict).correct()) return;
            found[idx].push_back(counts);
        }
    });
    std::vector<std::vector<int>> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int r_from_exceptions(const std::vector<std::vector<int>>& ex, int m, int k, int ceiling) {
    int r = 0;
    for (const auto& e : ex) {
        bool within = true;
        for (std::size_t j = static_cast<std::size_t>(m) + 1; j < e.size(); ++j) within = within && e[j] == 0;
        if (within && e[static_cast<std::size_t>(k)] <= ceiling) r = std::max(r, e[static_cast<std::size_t>(k)]);
    }
    return r;
}

}  // namespace

int search_r(int m, int k, int search_ceiling, const SearchConfig& config, bool allow_low_ceiling) {
    if (k < 0 || k > m) throw std::out_of_range("search_r needs 0 <= k <= m");
    if (!allow_low_ceiling && search_ceiling < r_bound(m, k)) {
        throw std::invalid_argument("search ceiling below the proven bound");
    }
    return r_from_exceptions(mixed_exceptions(m, config), m, k, search_ceiling);
}

std::vector<std::vector<int>> search_r_table(int max_m, const SearchConfig& config) {
    const auto ex = mixed_exceptions(max_m, config);
    std::vector<std::vector<int>> rows;
    for (int m = 0; m <= max_m; ++m) {
        std::vector<int> row;
        for (int k = 0; k <= m; ++k) row.push_back(r_from_exceptions(ex, m, k, r_bound(m, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<int>> exceptional_mixed_triples(int max_order, const SearchConfig& config) {
    const std::vector<int> all_caps{9, 5, 5};
    if (max_order < 1 || max_order > 3) throw std::out_of_range("max_order must be 1, 2 or 3");
    const std::vector<int> caps(all_caps.begin(), all_caps.begin() + max_order);
    std::size_t total = 1;
    for (int c : caps) total *= static_cast<std::size_t>(c + 1);
    std::vector<char> bad(total, 0);
    auto decode = [&](std::size_t idx) {
        std::vector<int> counts(caps.size());
        for (std::size_t j = caps.size(); j-- > 0;) {
            counts[j] = static_cast<int>(idx % static_cast<std::size_t>(caps[j] + 1));
            idx /= static_cast<std::size_t>(caps[j] + 1);
        }
        return counts;
    };
    parallel_for(total, config.jobs, [&](std::size_t idx) {
        bad[idx] = mixed_one_step_verdict(decode(idx), config.verdict).correct() ? 0 : 1;
    });
    std::vector<std::vector<int>> out;
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (bad[idx]) out.push_back(decode(idx));
    }
    return out;
}

const std::vector<std::vector<int>>& reference_exact_r() {
    static const std::vector<std::vector<int>> t{
        {0},
        {0, 5},
        {3, 5, 5},
        {8, 6, 5, 6},
        {15, 6, 5, 6, 5},
        {24, 8, 6, 7, 5, 7},
        {35, 11, 6, 7, 6, 7, 6},
        {48, 16, 8, 7, 6, 7, 6, 7},
    };
    return t;
}

const std::vector<std::vector<int>>& reference_mixed_initial_r() {
    static const std::vector<std::vector<int>> t{
        {0},
        {2, 5},
        {9, 5, 5},
        {18, 6, 5, 6},
        {30, 10, 6, 6, 5},
        {45, 15, 7, 7, 5, 8},
        {63, 21, 10, 7, 6, 7, 7},
        {84, 28, 14, 8, 6, 7, 6, 7},
    };
    return t;
}

std::string format_r_table(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    const std::size_t width = rows.size();
    os << "m\\k";
    for (std::size_t k = 0; k < width; ++k) os << std::setw(4) << k;
    os << '\n';
    for (std::size_t m = 0; m < rows.size(); ++m) {
        os << std::setw(3) << m;
        for (std::size_t k = 0; k < width; ++k) {
            if (k < rows[m].size()) {
                os << std::setw(4) << rows[m][k];
            } else {
                os << std::setw(4) << '-';
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string format_r_csv(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    os << "m,k,r\n";
    for (std::size_t m = 0; m < rows.size(); ++m) {
        for (std::size_t k = 0; k < rows[m].size(); ++k) os << m << ',' << k << ',' << rows[m][k] << '\n';
    }
    return os.str();
}

}  // namespace hermite
