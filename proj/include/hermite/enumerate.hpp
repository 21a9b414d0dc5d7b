#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hermite/interp.hpp"
#include "hermite/reduction.hpp"
#include "hermite/staircase.hpp"

namespace hermite {

enum class DiagramFilter { All, Proper, SafelyProper };

/// Every staircase of the given cardinality with at most max_steps steps, in descending
/// lexicographic order of expanded types (the 1-step diagram comes first). visit returns false to stop.
void for_each_diagram(std::int64_t cardinality, int max_steps, const std::function<bool(const Staircase&)>& visit);

/// d-diagrams for k nodes of F_d, i.e. cardinality k d(d+1)/2 and at most d steps.
void for_each_d_diagram(int d, int k, DiagramFilter filter, const std::function<bool(const Staircase&)>& visit);
std::vector<Staircase> enumerate_d_diagrams(int d, int k, DiagramFilter filter);
std::uint64_t count_d_diagrams(int d, int k, DiagramFilter filter);

/// Canonical chains from every safely proper d-diagram at k1 nodes down to k2 nodes; sorted distinct terminals.
std::vector<Staircase> reduce_to_basecases(int d, int k1, int k2);

struct BasecaseConfig {
    VerdictConfig verdict;
    DiagramFilter family = DiagramFilter::Proper;  // which diagrams are checked
    bool require_safely_proper = true;             // condition (1); false asks only for proper
    std::size_t max_diagrams = 0;                  // 0 = no cap
    std::size_t stop_after_failures = 0;           // 0 = never stop early
    unsigned jobs = 1;
};

struct BasecaseFailure {
    Staircase diagram;
    std::string reason;
};

struct EnumerationReport {
    int d = 0;
    int step_bound = 0;
    int nodes = 0;
    std::uint64_t total = 0;
    std::vector<Staircase> reduced_set;
    std::vector<std::pair<Staircase, Verdict>> verdicts;  // enumeration order
    std::vector<BasecaseFailure> failures;
    bool truncated = false;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Checks (1) safely proper (or proper) with respect to D and (2) generic correctness of
/// ({F_d}_p, F) for every diagram of cardinality p d(d+1)/2 with at most D steps in the family.
EnumerationReport verify_basecases(int d, int step_bound, int p, const BasecaseConfig& config = {});

struct OneStepConfig {
    VerdictConfig verdict;
    std::uint64_t subset_budget = kDefaultSubsetBudget;
    bool use_reduction = true;
};

struct OneStepResult {
    Verdict verdict;
    ReductionChain chain;         // licensed canonical steps from the 1-step diagram
    std::size_t proved_at = 0;    // chain depth whose diagram was certified directly
    Verdict certificate;          // verdict of that diagram with k - proved_at nodes
    std::string route;            // "reduction" or "direct"
};

OneStepResult decide_one_step_detailed(int d, int k, const OneStepConfig& config = {});
Verdict decide_one_step(int d, int k, const OneStepConfig& config = {});

/// "d,k,total,terminals,failures" plus one row.
std::string report_csv(const EnumerationReport& r, bool header = true);

}  // namespace hermite
