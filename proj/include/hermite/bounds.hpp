#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermite/interp.hpp"

namespace hermite {

struct MixedBound {
    int d = 0;
    int D = 0;
    int p = 0;
    int h = 0;
    int q = 0;
};

/// Degree d with counts[j] generic singular points of order j (each imposing an F_{j+1} condition).
struct SingularitySpec {
    int degree = 0;
    std::vector<int> counts;
};

std::int64_t expected_dimension(const SingularitySpec& spec);

/// max{6(m+1), ceil(4(m+1)(2m+1)/((k+1)(k+2)))}; throws std::out_of_range unless 0 <= k <= min(m, 12).
int r_bound(int m, int k);

/// Least h >= 2D with h(h+1) > (p-1)d(d+1), then least q > (h(h-1) + 2D(h-1))/(d(d+1)).
MixedBound mixed_q(int d, int D, int p);

struct SearchConfig {
    VerdictConfig verdict;
    int base_nodes = 7;                       // node count behind the box bounds
    std::uint64_t problem_budget = 1'000'000;  // refuse boxes needing more determinant checks
    unsigned jobs = 1;
};

/// Conditions F_{j+1} repeated counts[j] times against the 1-step diagram of matching cardinality.
InterpProblem mixed_one_step_problem(std::span<const int> counts);
Verdict mixed_one_step_verdict(std::span<const int> counts, const VerdictConfig& config = {});

/// Count vectors (p_0..p_m), orders 0..m, whose 1-step problem is not certified correct.
/// Orders j >= 1 range over [0, q_j) with q_j from mixed_q(j+1, m+1, base_nodes); for each such
/// tail the least correct p_0 is located below q_0, and every smaller p_0 is an exception.
std::vector<std::vector<int>> mixed_exceptions(int m, const SearchConfig& config = {});

/// max p_k over the exceptions for maximal order m, 0 if there are none. The order-k coordinate
/// is additionally capped by search_ceiling; a ceiling below r_bound(m,k) needs allow_low_ceiling.
int search_r(int m, int k, int search_ceiling, const SearchConfig& config = {}, bool allow_low_ceiling = false);

/// All rows 0..m of r(m,k) from a single exception search at maximal order m.
std::vector<std::vector<int>> search_r_table(int max_m, const SearchConfig& config = {});

/// Count vectors (#F_1, ..., #F_max_order) inside the caps 9, 5, 5 whose 1-step problem is not correct;
/// lexicographic. max_order 3 gives triples, 2 gives pairs.
std::vector<std::vector<int>> exceptional_mixed_triples(int max_order = 3, const SearchConfig& config = {});

/// Known values, rows m = 0..7: the exact thresholds and the mixed initial-case bounds.
const std::vector<std::vector<int>>& reference_exact_r();
const std::vector<std::vector<int>>& reference_mixed_initial_r();

/// Row-per-m text layout; "-" where k > m.
std::string format_r_table(const std::vector<std::vector<int>>& rows);
std::string format_r_csv(const std::vector<std::vector<int>>& rows);

}  // namespace hermite
