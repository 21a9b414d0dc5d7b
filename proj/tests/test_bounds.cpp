#include <doctest.h>

#include <algorithm>
#include <random>

#include "hermite/bounds.hpp"

using namespace hermite;

namespace {

// Linear conditions on degree-d plane curves: vanishing to order j+1 at random points.
// Returns (d+1)(d+2)/2 minus the rank, i.e. the actual dimension of the family.
std::int64_t actual_dimension(const SingularitySpec& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-50, 50);
    RationalField q;
    const auto mons = monomials_below_degree(s.degree + 1, 2);
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t j = 0; j < s.counts.size(); ++j) {
        for (int c = 0; c < s.counts[j]; ++c) {
            const std::vector<mpq_class> pt{mpq_class(coord(rng)), mpq_class(coord(rng))};
            for (const auto& beta : monomials_below_degree(static_cast<int>(j) + 1, 2)) {
                std::vector<mpq_class> row;
                for (const auto& m : mons) row.push_back(phi<RationalField>(m, beta, pt, q));
                rows.push_back(row);
            }
        }
    }
    if (rows.empty()) return static_cast<std::int64_t>(mons.size());
    MatrixQ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(mons.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < mons.size(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
    return static_cast<std::int64_t>(mons.size()) - static_cast<std::int64_t>(rank(m, q));
}

}  // namespace

TEST_CASE("expected_dimension examples") {
    CHECK(expected_dimension({2, {0, 1}}) == 3);
    CHECK(actual_dimension({2, {0, 1}}, 1) == 3);
    CHECK(expected_dimension({1, {2}}) == 1);
    CHECK(actual_dimension({1, {2}}, 2) == 1);
    for (int d = 0; d <= 8; ++d) CHECK(expected_dimension({d, {0, 0, 0}}) == (d + 1) * (d + 2) / 2);
    CHECK(expected_dimension({2, {7}}) == 0);
    // non-special cases agree with the rank of the condition system
    CHECK(actual_dimension({3, {2, 1}}, 3) == expected_dimension({3, {2, 1}}));
    CHECK(actual_dimension({4, {3, 2}}, 4) == expected_dimension({4, {3, 2}}));
    CHECK(actual_dimension({5, {0, 0, 1}}, 5) == expected_dimension({5, {0, 0, 1}}));
}

TEST_CASE("expected_dimension is monotone in each count") {
    std::mt19937 rng(6);
    for (int iter = 0; iter < 200; ++iter) {
        SingularitySpec s{static_cast<int>(rng() % 12), {static_cast<int>(rng() % 5), static_cast<int>(rng() % 4),
                                                         static_cast<int>(rng() % 3)}};
        const auto base = expected_dimension(s);
        for (std::size_t j = 0; j < s.counts.size(); ++j) {
            auto t = s;
            ++t.counts[j];
            CHECK(expected_dimension(t) <= base);
        }
    }
}

TEST_CASE("r_bound") {
    CHECK(r_bound(1, 1) == 12);
    CHECK(r_bound(0, 0) == 6);
    CHECK(r_bound(2, 0) == 30);  // ceil(4*3*5/2)
    CHECK(r_bound(5, 1) == 44);  // ceil(4*6*11/6)
    CHECK_THROWS_AS(r_bound(3, 4), std::out_of_range);
    CHECK_THROWS_AS(r_bound(20, 13), std::out_of_range);
    CHECK_THROWS_AS(r_bound(3, -1), std::out_of_range);
    CHECK_NOTHROW(r_bound(12, 12));
    const auto& exact = reference_exact_r();
    for (std::size_t m = 0; m < exact.size(); ++m) {
        for (std::size_t k = 0; k <= m; ++k) CHECK(exact[m][k] <= r_bound(static_cast<int>(m), static_cast<int>(k)));
    }
}

TEST_CASE("mixed_q") {
    const auto b = mixed_q(1, 2, 10);
    CHECK(b.h == 4);
    CHECK(b.q == 13);
    for (int D = 1; D <= 8; ++D) {
        for (int p = 1; p <= 4; ++p) {
            const auto m = mixed_q(1, D, p);
            if (m.h == 2 * D) CHECK(m.q == 2 * D * (2 * D - 1) + 1);
        }
    }
}

TEST_CASE("mixed_q is minimal") {
    for (int d = 1; d <= 6; ++d) {
        for (int D = d; D <= 8; ++D) {
            for (int p = 1; p <= 12; ++p) {
                const auto b = mixed_q(d, D, p);
                const std::int64_t dd = static_cast<std::int64_t>(d) * (d + 1);
                auto h_ok = [&](std::int64_t h) { return h >= 2 * D && h * (h + 1) > (p - 1) * dd; };
                CHECK(h_ok(b.h));
                CHECK_FALSE(h_ok(b.h - 1));
                const std::int64_t num = static_cast<std::int64_t>(b.h) * (b.h - 1) + 2 * D * (b.h - 1);
                CHECK(b.q * dd > num);
                CHECK_FALSE((b.q - 1) * dd > num);
            }
        }
    }
}

TEST_CASE("search_r examples") {
    CHECK(search_r(0, 0, r_bound(0, 0)) == 0);
    CHECK(search_r(1, 1, r_bound(1, 1)) == 5);
    CHECK(search_r(2, 0, r_bound(2, 0)) == 3);
    CHECK_THROWS_AS(search_r(1, 1, 3), std::invalid_argument);
    CHECK_NOTHROW(search_r(1, 1, 3, {}, true));
}

TEST_CASE("search_r ignores the seed") {
    SearchConfig a, b;
    b.verdict.seed = 12345;
    CHECK(search_r(1, 0, r_bound(1, 0), a) == search_r(1, 0, r_bound(1, 0), b));
    CHECK(search_r(1, 1, r_bound(1, 1), a) == search_r(1, 1, r_bound(1, 1), b));
}

TEST_CASE("search_r_table stays inside the bounds") {
    const auto rows = search_r_table(2);
    const auto& exact = reference_exact_r();
    const auto& initial = reference_mixed_initial_r();
    for (std::size_t m = 0; m < rows.size(); ++m) {
        for (std::size_t k = 0; k <= m; ++k) {
            CHECK(rows[m][k] == exact[m][k]);
            CHECK(rows[m][k] <= r_bound(static_cast<int>(m), static_cast<int>(k)));
            CHECK(rows[m][k] <= initial[m][k]);
        }
    }
}

TEST_CASE("exceptional mixed problems") {
    const std::vector<std::vector<int>> pairs{{0, 2}, {0, 5}};
    CHECK(exceptional_mixed_triples(2) == pairs);
    const auto triples = exceptional_mixed_triples(3);
    CHECK(triples.size() == 13);
    CHECK(std::find(triples.begin(), triples.end(), std::vector<int>{0, 2, 0}) != triples.end());
    CHECK(std::find(triples.begin(), triples.end(), std::vector<int>{0, 0, 5}) != triples.end());
    CHECK(std::is_sorted(triples.begin(), triples.end()));
    for (const auto& t : triples) CHECK_FALSE(mixed_one_step_verdict(t).correct());
}

TEST_CASE("mixed one-step problems") {
    const std::vector<int> c{1, 1};
    const auto p = mixed_one_step_problem(c);
    CHECK(p.condition_count() == 4);
    CHECK(p.basis == Staircase::one_step(4).points());
    const std::vector<int> only_order_two{0, 2};
    CHECK(mixed_one_step_verdict(only_order_two).kind == VerdictKind::CertifiedIncorrect);
}

TEST_CASE("table formats") {
    const std::vector<std::vector<int>> rows{{0}, {0, 5}};
    CHECK(format_r_csv(rows) == "m,k,r\n0,0,0\n1,0,0\n1,1,5\n");
    const auto text = format_r_table(rows);
    CHECK(text.find("m\\k") != std::string::npos);
    CHECK(text.find('-') != std::string::npos);
}
