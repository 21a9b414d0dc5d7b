#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <Eigen/Core>

namespace hermite {

/// 62-bit prime used when nothing else is requested.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;  // 2^62 - 57

bool is_prime(std::uint64_t n);

/// Residues modulo an odd prime below 2^63.
class PrimeField {
public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    [[nodiscard]] std::uint64_t modulus() const { return p_; }
    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] value_type from_int(std::int64_t v) const {
        const auto m = static_cast<std::int64_t>(p_);
        std::int64_t r = v % m;
        return static_cast<value_type>(r < 0 ? r + m : r);
    }
    [[nodiscard]] value_type add(value_type a, value_type b) const {
        const value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    [[nodiscard]] value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
    }
    [[nodiscard]] value_type pow(value_type a, std::uint64_t e) const;
    [[nodiscard]] value_type inv(value_type a) const;
    [[nodiscard]] bool is_zero(value_type a) const { return a == 0; }

private:
    std::uint64_t p_;
};

/// Q with exact GMP rationals.
class RationalField {
public:
    using value_type = mpq_class;

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] value_type from_int(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
    [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
    [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
    [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    [[nodiscard]] value_type inv(const value_type& a) const { return 1 / a; }
    [[nodiscard]] value_type pow(const value_type& a, std::uint64_t e) const;
    [[nodiscard]] bool is_zero(const value_type& a) const { return sgn(a) == 0; }
};

/// Z with GMP integers; no inverses, enough for fraction-free work.
class IntegerRing {
public:
    using value_type = mpz_class;

    [[nodiscard]] value_type zero() const { return 0; }
    [[nodiscard]] value_type one() const { return 1; }
    [[nodiscard]] value_type from_int(std::int64_t v) const { return mpz_class(static_cast<long>(v)); }
    [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
    [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
    [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    [[nodiscard]] value_type pow(const value_type& a, std::uint64_t e) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
        return r;
    }
    [[nodiscard]] bool is_zero(const value_type& a) const { return sgn(a) == 0; }
};

/// Montgomery form for the hot elimination loop.
class Montgomery {
public:
    explicit Montgomery(std::uint64_t p);
    [[nodiscard]] std::uint64_t to(std::uint64_t a) const { return mul(a, r2_); }
    [[nodiscard]] std::uint64_t from(std::uint64_t a) const { return reduce(a); }
    [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return reduce(static_cast<unsigned __int128>(a) * b);
    }
    [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    [[nodiscard]] std::uint64_t modulus() const { return p_; }

private:
    [[nodiscard]] std::uint64_t reduce(unsigned __int128 t) const {
        // m*p agrees with t in the low word, so only the high words remain
        const std::uint64_t m = static_cast<std::uint64_t>(t) * pinv_;
        const std::uint64_t mphi = static_cast<std::uint64_t>((static_cast<unsigned __int128>(m) * p_) >> 64);
        const std::uint64_t hi = static_cast<std::uint64_t>(t >> 64);
        std::uint64_t r = hi - mphi;
        if (hi < mphi) r += p_;
        return r;
    }
    std::uint64_t p_;
    std::uint64_t pinv_;  // p^{-1} mod 2^64
    std::uint64_t r2_;
};

template <class Field>
using MatrixF = Eigen::Matrix<typename Field::value_type, Eigen::Dynamic, Eigen::Dynamic>;
template <class Field>
using VectorF = Eigen::Matrix<typename Field::value_type, Eigen::Dynamic, 1>;

using MatrixZ = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixQ = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixP = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace hermite

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 6, AddCost = 150, MulCost = 100 };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpz_class NonInteger;
    typedef mpz_class Nested;
    enum { IsComplex = 0, IsInteger = 1, IsSigned = 1, RequireInitialization = 1, ReadCost = 6, AddCost = 100, MulCost = 100 };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
