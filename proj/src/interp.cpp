#include "hermite/interp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hermite {

std::size_t InterpProblem::condition_count() const {
    std::size_t c = 0;
    for (const auto& f : conditions) c += f.size();
    return c;
}

void InterpProblem::validate() const {
    for (const auto& f : conditions) {
        if (f.dimension() != n) throw std::invalid_argument("condition dimension mismatch");
    }
    for (const auto& b : basis) {
        if (b.dimension() != n) throw std::invalid_argument("basis dimension mismatch");
    }
    if (condition_count() != basis.size()) {
        throw std::invalid_argument("problem is not square: " + std::to_string(condition_count()) +
                                    " conditions, " + std::to_string(basis.size()) + " monomials");
    }
}

InterpProblem InterpProblem::planar(std::span<const int> orders, const Staircase& target) {
    InterpProblem p;
    p.n = 2;
    for (int d : orders) p.conditions.push_back(full_triangle(d, 2));
    p.basis = target.points();
    return p;
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedCorrect: return "CertifiedCorrect";
        case VerdictKind::CertifiedIncorrect: return "CertifiedIncorrect";
        case VerdictKind::ProbablyIncorrect: return "ProbablyIncorrect";
    }
    return "?";
}

VerdictKind verdict_kind_from_string(const std::string& s) {
    if (s == "CertifiedCorrect") return VerdictKind::CertifiedCorrect;
    if (s == "CertifiedIncorrect") return VerdictKind::CertifiedIncorrect;
    if (s == "ProbablyIncorrect") return VerdictKind::ProbablyIncorrect;
    throw std::invalid_argument("unknown verdict kind " + s);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(seed ^ mix(stream));
}

namespace {

std::vector<std::vector<std::uint64_t>> random_nodes(std::size_t count, std::size_t n, std::uint64_t p,
                                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<std::vector<std::uint64_t>> pts(count, std::vector<std::uint64_t>(n));
    for (auto& pt : pts) {
        for (auto& x : pt) x = dist(rng);
    }
    return pts;
}

mpz_class grid_determinant(const InterpProblem& problem, const std::vector<std::vector<std::uint64_t>>& pts) {
    IntegerRing z;
    std::vector<std::vector<mpz_class>> zp;
    for (const auto& pt : pts) {
        std::vector<mpz_class> row;
        for (auto x : pt) row.emplace_back(static_cast<unsigned long>(x));
        zp.push_back(std::move(row));
    }
    return bareiss_determinant(build_matrix(problem, zp, z));
}

/// Degree of det M in each node coordinate, bounded row by row and by the total degree.
std::vector<int> coordinate_degree_bounds(const InterpProblem& problem, std::int64_t total) {
    std::vector<int> bounds;
    for (const auto& f : problem.conditions) {
        for (std::size_t t = 0; t < problem.n; ++t) {
            std::int64_t b = 0;
            for (const auto& beta : f.points()) {
                int best = 0;
                for (const auto& alpha : problem.basis) {
                    if (beta.divides(alpha)) best = std::max(best, alpha[t] - beta[t]);
                }
                b += best;
            }
            bounds.push_back(static_cast<int>(std::min(b, total)));
        }
    }
    return bounds;
}

}  // namespace

Verdict is_generically_correct(const InterpProblem& problem, const VerdictConfig& config) {
    problem.validate();
    if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
    PrimeField f(config.prime);
    Verdict v;
    v.degree_bound = degred(problem.basis);
    if (config.prime <= static_cast<std::uint64_t>(std::max<std::int64_t>(v.degree_bound, 0))) {
        throw std::invalid_argument("prime too small: must exceed the degree bound " + std::to_string(v.degree_bound));
    }
    const std::size_t count = problem.conditions.size();
    for (int t = 0; t < config.trials; ++t) {
        auto pts = random_nodes(count, problem.n, config.prime, derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        if (determinant(build_matrix(problem, pts, f), f) != 0) {
            v.kind = VerdictKind::CertifiedCorrect;
            v.trials = t + 1;
            v.prime = config.prime;
            v.witness = std::move(pts);
            v.method = "modular";
            return v;
        }
    }
    v.trials = config.trials;
    const std::size_t vars = count * problem.n;
    if (problem.condition_count() <= config.exact_threshold && vars <= config.exact_max_variables) {
        // a polynomial vanishing on a (deg+1)^vars grid is identically zero
        const std::vector<int> bounds = coordinate_degree_bounds(problem, v.degree_bound);
        std::vector<int> idx(vars, 0);
        for (;;) {
            std::vector<std::vector<std::uint64_t>> pts(count, std::vector<std::uint64_t>(problem.n));
            for (std::size_t i = 0; i < vars; ++i) pts[i / problem.n][i % problem.n] = static_cast<std::uint64_t>(idx[i]);
            if (grid_determinant(problem, pts) != 0) {
                v.kind = VerdictKind::CertifiedCorrect;
                v.prime.reset();
                v.witness = std::move(pts);
                v.method = "exact-grid";
                return v;
            }
            std::size_t i = 0;
            while (i < vars && idx[i] == bounds[i]) idx[i++] = 0;
            if (i == vars) break;
            ++idx[i];
        }
        v.kind = VerdictKind::CertifiedIncorrect;
        v.method = "exact-grid";
        v.error_bound = 0;
        return v;
    }
    v.kind = VerdictKind::ProbablyIncorrect;
    v.prime = config.prime;
    v.method = "modular";
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(v.degree_bound), static_cast<unsigned long>(config.trials));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(config.prime), static_cast<unsigned long>(config.trials));
    v.error_bound = mpq_class(num, den);
    v.error_bound.canonicalize();
    return v;
}

bool witness_holds(const InterpProblem& problem, const Verdict& v) {
    if (v.kind != VerdictKind::CertifiedCorrect || v.witness.size() != problem.conditions.size()) return false;
    if (v.prime) {
        PrimeField f(*v.prime);
        return determinant(build_matrix(problem, v.witness, f), f) != 0;
    }
    return grid_determinant(problem, v.witness) != 0;
}

bool one_point_correct(std::span<const MultiIndex> exponents, int d, std::size_t n) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    const auto expected = binomial(static_cast<int>(n) + d - 1, static_cast<int>(n));
    if (exponents.size() != expected) {
        throw std::invalid_argument("one-node test needs " + std::to_string(expected) + " exponents");
    }
    const std::vector<MultiIndex> monos = monomials_below_degree(d, n);
    const auto c = static_cast<Eigen::Index>(monos.size());
    MatrixZ m(c, c);
    for (Eigen::Index i = 0; i < c; ++i) {
        const auto& pt = exponents[static_cast<std::size_t>(i)];
        if (pt.dimension() != n) throw std::invalid_argument("exponent dimension mismatch");
        for (Eigen::Index j = 0; j < c; ++j) {
            mpz_class v = 1;
            const auto& mono = monos[static_cast<std::size_t>(j)];
            for (std::size_t t = 0; t < n; ++t) {
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(pt[t]), static_cast<unsigned long>(mono[t]));
                v *= pw;
            }
            m(i, j) = v;
        }
    }
    return bareiss_determinant(std::move(m)) != 0;
}

GenericBasis generic_basis(const std::vector<FerrersDiagram>& conditions, std::size_t n, const VerdictConfig& config) {
    PrimeField f(config.prime);
    std::size_t c = 0;
    int max_degree = 0;
    for (const auto& fd : conditions) {
        if (fd.dimension() != n) throw std::invalid_argument("condition dimension mismatch");
        c += fd.size();
        for (const auto& b : fd.points()) max_degree = std::max(max_degree, b.degree());
    }
    const int degree_cap = static_cast<int>(conditions.size()) * (max_degree + 1);
    const auto pts = random_nodes(conditions.size(), n, config.prime, derive_seed(config.seed, 0));
    IncrementalRank inc(f, c);
    GenericBasis out;
    for (int deg = 0; out.basis.size() < c; ++deg) {
        if (deg > degree_cap) throw std::runtime_error("generic basis did not reach full rank");
        std::vector<MultiIndex> level = monomials_below_degree(deg + 1, n);
        level.erase(std::remove_if(level.begin(), level.end(), [&](const MultiIndex& m) { return m.degree() != deg; }),
                    level.end());
        for (const auto& alpha : level) {
            std::vector<std::uint64_t> col;
            col.reserve(c);
            for (std::size_t node = 0; node < conditions.size(); ++node) {
                for (const auto& beta : conditions[node].points()) col.push_back(phi<PrimeField>(alpha, beta, pts[node], f));
            }
            if (inc.try_add(std::move(col))) out.basis.push_back(alpha);
            if (out.basis.size() == c) break;
        }
    }
    InterpProblem problem{conditions, out.basis, n};
    out.verdict = is_generically_correct(problem, config);
    return out;
}

}  // namespace hermite
