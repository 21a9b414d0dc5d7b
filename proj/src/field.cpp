#include <stdexcept>

#include "hermite/field.hpp"
#include "hermite/linalg.hpp"

namespace hermite {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these twelve bases are deterministic below 2^64
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (1ULL << 63) || !is_prime(p)) {
        throw std::invalid_argument("modulus must be an odd prime below 2^63");
    }
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const { return powmod(a, e, p_); }

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return powmod(a, p_ - 2, p_);
}

RationalField::value_type RationalField::pow(const value_type& a, std::uint64_t e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), e);
    return mpq_class(num, den);
}

Montgomery::Montgomery(std::uint64_t p) : p_(p) {
    if ((p & 1) == 0 || p >= (1ULL << 63)) throw std::invalid_argument("Montgomery needs an odd modulus below 2^63");
    std::uint64_t inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    pinv_ = inv;
    const std::uint64_t r1 = (0 - p) % p;  // 2^64 mod p
    r2_ = mulmod(r1, r1, p);
}

std::uint64_t determinant(const MatrixP& m, const PrimeField& f) {
    const auto n = static_cast<std::size_t>(m.rows());
    if (static_cast<std::size_t>(m.cols()) != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return 1;
    const Montgomery mg(f.modulus());
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = mg.to(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    std::uint64_t det = mg.to(1);
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t k = c; k < n; ++k) std::swap(a[piv * n + k], a[c * n + k]);
            negate = !negate;
        }
        const std::uint64_t pv = a[c * n + c];
        det = mg.mul(det, pv);
        const std::uint64_t inv = mg.to(f.inv(mg.from(pv)));
        const std::uint64_t* prow = &a[c * n];
        for (std::size_t r = c + 1; r < n; ++r) {
            std::uint64_t* row = &a[r * n];
            if (row[c] == 0) continue;
            const std::uint64_t factor = mg.mul(row[c], inv);
            for (std::size_t k = c; k < n; ++k) row[k] = mg.sub(row[k], mg.mul(factor, prow[k]));
        }
    }
    const std::uint64_t d = mg.from(det);
    return negate ? f.neg(d) : d;
}

mpz_class bareiss_determinant(MatrixZ m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.row(piv).swap(m.row(k));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                mpz_class t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    mpz_class d = m(n - 1, n - 1);
    return sign < 0 ? mpz_class(-d) : d;
}

std::size_t bareiss_rank(MatrixZ m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    mpz_class prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = r;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        m.row(piv).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                mpz_class t = m(i, j) * m(r, c) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return static_cast<std::size_t>(r);
}

mpq_class det_exact(const MatrixQ& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
    MatrixZ z(n, n);
    mpz_class scale = 1;
    for (Eigen::Index i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (Eigen::Index j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (Eigen::Index j = 0; j < n; ++j) {
            mpq_class v = m(i, j) * l;
            z(i, j) = v.get_num();
        }
        scale *= l;
    }
    mpq_class d(bareiss_determinant(std::move(z)), scale);
    d.canonicalize();
    return d;
}

bool IncrementalRank::try_add(std::vector<std::uint64_t> v) {
    if (v.size() != length_) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint64_t c = v[pivots_[i]];
        if (c == 0) continue;
        const auto& row = rows_[i];
        for (std::size_t k = 0; k < length_; ++k) {
            if (row[k]) v[k] = f_.sub(v[k], f_.mul(c, row[k]));
        }
    }
    std::size_t piv = 0;
    while (piv < length_ && v[piv] == 0) ++piv;
    if (piv == length_) return false;
    const std::uint64_t inv = f_.inv(v[piv]);
    for (auto& x : v) x = f_.mul(x, inv);
    // keep earlier rows reduced against the new pivot
    for (auto& row : rows_) {
        const std::uint64_t c = row[piv];
        if (c == 0) continue;
        for (std::size_t k = 0; k < length_; ++k) {
            if (v[k]) row[k] = f_.sub(row[k], f_.mul(c, v[k]));
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

}  // namespace hermite
