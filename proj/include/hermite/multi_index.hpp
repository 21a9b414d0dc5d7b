#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hermite {

/// Exponent vector in N^n. Also used as a derivative order and as a lattice point.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    [[nodiscard]] std::size_t dimension() const { return entries_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::span<const int> entries() const { return entries_; }
    /// |alpha|, the entry sum.
    [[nodiscard]] int degree() const;

    /// Componentwise partial order: *this <= other.
    [[nodiscard]] bool divides(const MultiIndex& other) const;

    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

/// Graded order: total degree first, then lexicographically descending,
/// so in two variables (d,0) precedes (d-1,1), i.e. ascending second coordinate.
struct GradedLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

void sort_graded(std::vector<MultiIndex>& v);

/// Sum of |alpha| over a set of exponents (the degree of the product of monomials).
std::int64_t degred(std::span<const MultiIndex> exponents);

/// Componentwise sum of a set of exponents.
MultiIndex exponent_sum(std::span<const MultiIndex> exponents, std::size_t n);

/// All exponents of total degree < d in n variables, graded order.
std::vector<MultiIndex> monomials_below_degree(int d, std::size_t n);

std::uint64_t binomial(int n, int k);

}  // namespace hermite
