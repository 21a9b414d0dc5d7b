#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermite/field.hpp"
#include "hermite/linalg.hpp"
#include "hermite/multi_index.hpp"
#include "hermite/staircase.hpp"

namespace hermite {

/// Conditions (one Ferrers diagram per node) against a candidate monomial set.
struct InterpProblem {
    std::vector<FerrersDiagram> conditions;
    std::vector<MultiIndex> basis;
    std::size_t n = 2;

    [[nodiscard]] std::size_t condition_count() const;
    /// Throws std::invalid_argument when not square or dimensions disagree.
    void validate() const;

    /// {F_{orders[0]}, F_{orders[1]}, ...} in the plane against the points of `target`.
    static InterpProblem planar(std::span<const int> orders, const Staircase& target);
};

/// Falling-factorial coefficient times a^(alpha-beta); zero unless beta <= alpha.
template <class Field>
typename Field::value_type phi(const MultiIndex& alpha, const MultiIndex& beta,
                               std::span<const typename Field::value_type> point, const Field& f) {
    typename Field::value_type r = f.one();
    for (std::size_t i = 0; i < alpha.dimension(); ++i) {
        const int a = alpha[i];
        const int b = beta[i];
        if (b > a) return f.zero();
        for (int t = a; t > a - b; --t) r = f.mul(r, f.from_int(t));
        if (a > b) r = f.mul(r, f.pow(point[i], static_cast<std::uint64_t>(a - b)));
    }
    return r;
}

/// Rows: node by node, each node's derivative orders in graded order. Columns: basis in graded order.
template <class Field>
MatrixF<Field> build_matrix(const InterpProblem& problem,
                            const std::vector<std::vector<typename Field::value_type>>& points, const Field& f) {
    problem.validate();
    if (points.size() != problem.conditions.size()) throw std::invalid_argument("one point per condition expected");
    std::vector<MultiIndex> cols = problem.basis;
    sort_graded(cols);
    const auto c = static_cast<Eigen::Index>(cols.size());
    MatrixF<Field> m(c, c);
    Eigen::Index row = 0;
    for (std::size_t node = 0; node < points.size(); ++node) {
        if (points[node].size() != problem.n) throw std::invalid_argument("point dimension mismatch");
        for (const auto& beta : problem.conditions[node].points()) {
            for (Eigen::Index j = 0; j < c; ++j) {
                m(row, j) = phi<Field>(cols[static_cast<std::size_t>(j)], beta, points[node], f);
            }
            ++row;
        }
    }
    return m;
}

enum class VerdictKind { CertifiedCorrect, CertifiedIncorrect, ProbablyIncorrect };

std::string to_string(VerdictKind k);
VerdictKind verdict_kind_from_string(const std::string& s);

struct VerdictConfig {
    std::uint64_t prime = kDefaultPrime;
    int trials = 8;
    std::size_t exact_threshold = 8;
    std::size_t exact_max_variables = 4;
    std::uint64_t seed = 0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::ProbablyIncorrect;
    int trials = 0;
    std::optional<std::uint64_t> prime;  // absent when the witness is an exact integer point
    std::int64_t degree_bound = 0;
    mpq_class error_bound = 0;
    /// Node coordinates with nonzero determinant (integers, residues when `prime` is set).
    std::vector<std::vector<std::uint64_t>> witness;
    std::string method;

    [[nodiscard]] bool correct() const { return kind == VerdictKind::CertifiedCorrect; }
};

Verdict is_generically_correct(const InterpProblem& problem, const VerdictConfig& config = {});

/// Re-evaluates the stored witness. False for verdicts without one.
bool witness_holds(const InterpProblem& problem, const Verdict& v);

/// Exact nonsingularity of the evaluation of all monomials of degree < d at the exponent points.
bool one_point_correct(std::span<const MultiIndex> exponents, int d, std::size_t n);

struct GenericBasis {
    std::vector<MultiIndex> basis;
    Verdict verdict;
};

/// Greedy: keep a monomial iff it raises the rank at random nodes. Graded order, ties by ascending alpha_2.
GenericBasis generic_basis(const std::vector<FerrersDiagram>& conditions, std::size_t n,
                           const VerdictConfig& config = {});

/// Deterministic per (seed, stream) generator state.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hermite
