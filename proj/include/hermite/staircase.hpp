#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hermite/multi_index.hpp"

namespace hermite {

class DiagramError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite downward-closed subset of N^n, kept in graded order.
class FerrersDiagram {
public:
    FerrersDiagram() = default;
    /// Throws DiagramError unless the set is downward closed.
    FerrersDiagram(std::vector<MultiIndex> points, std::size_t n);

    [[nodiscard]] std::size_t dimension() const { return n_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const std::vector<MultiIndex>& points() const { return points_; }
    [[nodiscard]] bool contains(const MultiIndex& a) const;
    /// d when the diagram equals F_d^n, 0 otherwise.
    [[nodiscard]] int triangle_order() const;

    friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;

private:
    std::vector<MultiIndex> points_;
    std::size_t n_ = 0;
};

/// F_d^n = { alpha : |alpha| < d }.
FerrersDiagram full_triangle(int d, std::size_t n);

bool is_downward_closed(std::span<const MultiIndex> points);

/// The split of a staircase with exactly d entries after the full prefix (1..a).
struct NormalizedType {
    int a = 0;
    std::vector<int> trailing;
};

/// Planar Ferrers diagram stored by its expanded type, trailing zeros stripped.
/// Level i (|alpha| = i-1) holds the points with alpha_2 < a_i.
class Staircase {
public:
    Staircase() = default;
    /// Throws DiagramError("not a diagram type") for a_i > i or a non-Ferrers profile.
    static Staircase from_type(std::vector<int> expanded);
    /// (prefix-bar, tail...) form.
    static Staircase from_compressed(int prefix, std::span<const int> tail);
    static Staircase from_normalized(const NormalizedType& n);
    /// Parses "(~a,a1,...)" or "(a1,...,ak)".
    static Staircase parse(std::string_view text);
    /// The unique type (a-bar, r) of cardinality N with r <= a.
    static Staircase one_step(std::int64_t cardinality);

    [[nodiscard]] const std::vector<int>& expanded() const { return type_; }
    [[nodiscard]] std::int64_t cardinality() const;
    /// Largest P with a_i = i for all i <= P.
    [[nodiscard]] int full_prefix() const;
    /// Entries after the full prefix.
    [[nodiscard]] std::vector<int> step_profile() const;
    [[nodiscard]] int steps() const;
    [[nodiscard]] std::vector<MultiIndex> points() const;
    [[nodiscard]] FerrersDiagram diagram() const;

    /// Throws DiagramError("more than d steps").
    [[nodiscard]] NormalizedType normalize_for_d(int d) const;
    [[nodiscard]] bool has_at_most_steps(int d) const { return steps() <= d; }
    [[nodiscard]] bool is_d_diagram(int d) const;
    /// Throws DiagramError for more than d steps; divisibility is not required.
    [[nodiscard]] bool is_proper(int d) const;
    [[nodiscard]] bool is_safely_proper(int d) const;
    /// Non-throwing variants: false when there are more than d steps.
    [[nodiscard]] bool is_proper_shape(int d) const;
    [[nodiscard]] bool is_safely_proper_shape(int d) const;

    /// "(~P,tail...)", "(0)" for the empty diagram.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string to_expanded_string() const;

    friend auto operator<=>(const Staircase&, const Staircase&) = default;
    friend bool operator==(const Staircase&, const Staircase&) = default;

private:
    explicit Staircase(std::vector<int> t) : type_(std::move(t)) {}
    std::vector<int> type_;
};

bool is_valid_type(std::span<const int> expanded);

/// Staircase whose level beta has width sum_i max(0, d_i - beta).
Staircase f_s(std::span<const int> orders);
/// Same, from diagrams; throws DiagramError unless each is a planar full triangle.
Staircase f_s(std::span<const FerrersDiagram> diagrams);

}  // namespace hermite
