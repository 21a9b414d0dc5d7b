#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermite/multi_index.hpp"
#include "hermite/staircase.hpp"

namespace hermite {

using VSequence = std::vector<int>;

/// Carries the diagram on which reduction got stuck.
class ReductionError : public std::runtime_error {
public:
    ReductionError(const std::string& what, Staircase stuck) : std::runtime_error(what), stuck_(std::move(stuck)) {}
    [[nodiscard]] const Staircase& stuck() const { return stuck_; }

private:
    Staircase stuck_;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReductionStep {
    Staircase before;
    VSequence v;
    Staircase after;
    std::vector<MultiIndex> removed;
};

struct ReductionChain {
    std::vector<ReductionStep> steps;
    Staircase terminal;
};

/// v_d first, then downwards: the largest unused l <= a_i. Throws ReductionError("not d-reducible").
VSequence canonical_v(const Staircase& f, int d);

/// Throws ReductionError("not a reduction") for an invalid v.
ReductionStep reduce(const Staircase& f, int d, const VSequence& v);

/// Canonical steps until the cardinality reaches `stop`. An optional first step may use a custom v.
/// Throws ReductionError with the stuck diagram.
ReductionChain chain(const Staircase& f, int d, std::int64_t stop, const std::optional<VSequence>& first = std::nullopt);

/// "(~4,2) -> (~3,3) -> (~2)"; steps with a custom v show as "-(1,3,2)->".
std::string format_arrow(const ReductionChain& c, int d);
/// One "type -> type [v=(...)]" line per step.
std::string format_steps(const ReductionChain& c);

std::string format_v(const VSequence& v);
VSequence parse_v(const std::string& text);

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// E is exceptional in B for F_d: the one-node problem on E is correct and no other
/// equal-size subset of B with the same exponent sum is. Throws BudgetExceeded.
bool verify_exceptional(std::span<const MultiIndex> e, std::span<const MultiIndex> b, int d,
                        std::uint64_t budget = kDefaultSubsetBudget);

/// Calls visit for every subset of b of size k with the given exponent sum; visit returns false to stop.
/// Returns the number of search nodes used. Throws BudgetExceeded.
template <class Visit>
std::uint64_t for_each_subset_with_sum(std::span<const MultiIndex> b, std::size_t k, const MultiIndex& target,
                                       std::uint64_t budget, Visit&& visit);

}  // namespace hermite

#include "hermite/detail/subset_search.hpp"
