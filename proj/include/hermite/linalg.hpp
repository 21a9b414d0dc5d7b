#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hermite/field.hpp"

namespace hermite {

/// Gaussian elimination over any field policy.
template <class Field>
typename Field::value_type determinant(MatrixF<Field> m, const Field& f) {
    using V = typename Field::value_type;
    const Eigen::Index n = m.rows();
    V det = f.one();
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = c;
        while (piv < n && f.is_zero(m(piv, c))) ++piv;
        if (piv == n) return f.zero();
        if (piv != c) {
            m.row(piv).swap(m.row(c));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const V inv = f.inv(m(c, c));
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (f.is_zero(m(r, c))) continue;
            const V factor = f.mul(m(r, c), inv);
            for (Eigen::Index k = c; k < n; ++k) m(r, k) = f.sub(m(r, k), f.mul(factor, m(c, k)));
        }
    }
    return det;
}

/// Prime-field fast path (Montgomery arithmetic, row-major scratch).
std::uint64_t determinant(const MatrixP& m, const PrimeField& f);

template <class Field>
std::size_t rank(MatrixF<Field> m, const Field& f) {
    using V = typename Field::value_type;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = r;
        while (piv < rows && f.is_zero(m(piv, c))) ++piv;
        if (piv == rows) continue;
        m.row(piv).swap(m.row(r));
        const V inv = f.inv(m(r, c));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            if (f.is_zero(m(i, c))) continue;
            const V factor = f.mul(m(i, c), inv);
            for (Eigen::Index k = c; k < cols; ++k) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
        }
        ++r;
    }
    return static_cast<std::size_t>(r);
}

/// Fraction-free elimination; every intermediate is an exact minor.
mpz_class bareiss_determinant(MatrixZ m);
std::size_t bareiss_rank(MatrixZ m);

/// Clears row denominators, then Bareiss.
mpq_class det_exact(const MatrixQ& m);

/// Grows a set of linearly independent vectors mod p, one candidate at a time.
class IncrementalRank {
public:
    IncrementalRank(const PrimeField& f, std::size_t length) : f_(f), length_(length) {}
    /// Keeps v and returns true iff v is independent of the vectors kept so far.
    bool try_add(std::vector<std::uint64_t> v);
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }

private:
    PrimeField f_;
    std::size_t length_;
    std::vector<std::vector<std::uint64_t>> rows_;  // normalized, pivot entry 1
    std::vector<std::size_t> pivots_;
};

}  // namespace hermite
