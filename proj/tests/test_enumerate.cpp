#include <doctest.h>

#include <algorithm>
#include <set>

#include "hermite/enumerate.hpp"

using namespace hermite;

namespace {

std::int64_t tri(int d) { return static_cast<std::int64_t>(d) * (d + 1) / 2; }

// Compositions a_1, a_2, ... with 0 <= a_i <= i summing to n. Level i holds the points
// (i-1-y, y), y < a_i; the point set must be closed under lowering either coordinate.
struct BruteForce {
    std::int64_t n;
    int max_steps;
    std::vector<int> a;
    std::set<std::pair<int, int>> pts;
    std::set<std::vector<int>> found;

    bool closed_at_level(int i) const {
        for (int y = 0; y < a[static_cast<std::size_t>(i - 1)]; ++y) {
            const int x = i - 1 - y;
            if (x > 0 && !pts.count({x - 1, y})) return false;
            if (y > 0 && !pts.count({x, y - 1})) return false;
        }
        return true;
    }

    int steps() const {
        std::size_t p = 0;
        while (p < a.size() && a[p] == static_cast<int>(p) + 1) ++p;
        std::size_t len = a.size();
        while (len > 0 && a[len - 1] == 0) --len;
        return static_cast<int>(len > p ? len - p : 0);
    }

    void run(std::int64_t remaining) {
        if (steps() > max_steps) return;
        if (remaining == 0) {
            auto t = a;
            while (!t.empty() && t.back() == 0) t.pop_back();
            found.insert(t);
            return;
        }
        if (!a.empty() && a.back() == 0) return;  // an empty level cannot be followed by points
        const int i = static_cast<int>(a.size()) + 1;
        for (int v = 0; v <= std::min<std::int64_t>(i, remaining); ++v) {
            a.push_back(v);
            for (int y = 0; y < v; ++y) pts.insert({i - 1 - y, y});
            if (closed_at_level(i)) run(remaining - v);
            for (int y = 0; y < v; ++y) pts.erase({i - 1 - y, y});
            a.pop_back();
        }
    }
};

std::set<std::vector<int>> brute(int d, int k) {
    BruteForce b{k * tri(d), d, {}, {}, {}};
    b.run(b.n);
    return b.found;
}

}  // namespace

TEST_CASE("enumeration matches an independent generator") {
    for (int d = 1; d <= 4; ++d) {
        for (int k = 1; k <= 6; ++k) {
            const auto expect = brute(d, k);
            std::set<std::vector<int>> got;
            std::size_t yielded = 0;
            for (const auto& f : enumerate_d_diagrams(d, k, DiagramFilter::All)) {
                got.insert(f.expanded());
                ++yielded;
            }
            CHECK_MESSAGE(got == expect, "d=" << d << " k=" << k);
            CHECK(yielded == got.size());
            CHECK(count_d_diagrams(d, k, DiagramFilter::All) == expect.size());
        }
    }
}

TEST_CASE("enumeration order is descending lexicographic") {
    const auto all = enumerate_d_diagrams(3, 4, DiagramFilter::All);
    REQUIRE(!all.empty());
    CHECK(all.front() == Staircase::one_step(24));
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].expanded() > all[i + 1].expanded());
}

TEST_CASE("filters") {
    for (int d = 1; d <= 5; ++d) {
        for (int k = 1; k <= 6; ++k) {
            const auto all = enumerate_d_diagrams(d, k, DiagramFilter::All);
            const auto proper = enumerate_d_diagrams(d, k, DiagramFilter::Proper);
            const auto safe = enumerate_d_diagrams(d, k, DiagramFilter::SafelyProper);
            std::vector<Staircase> expect_proper, expect_safe;
            for (const auto& f : all) {
                CHECK(f.cardinality() == k * tri(d));
                CHECK(f.steps() <= d);
                if (f.is_proper(d)) expect_proper.push_back(f);
                if (f.is_safely_proper(d)) expect_safe.push_back(f);
            }
            CHECK(proper == expect_proper);
            CHECK(safe == expect_safe);
            for (const auto& f : safe) CHECK(f.is_proper(d));
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    CHECK(enumerate_d_diagrams(5, 6, DiagramFilter::Proper) == enumerate_d_diagrams(5, 6, DiagramFilter::Proper));
    std::size_t n = 0;
    for_each_d_diagram(5, 6, DiagramFilter::All, [&](const Staircase&) { return ++n < 10; });
    CHECK(n == 10);
}

TEST_CASE("verify_basecases for d=2 and d=3 at six nodes") {
    for (int d : {2, 3}) {
        const auto r = verify_basecases(d, d, 6);
        CHECK(r.passed());
        CHECK(r.total == count_d_diagrams(d, 6, DiagramFilter::Proper));
        CHECK(r.verdicts.size() == r.total);
        for (const auto& [f, v] : r.verdicts) CHECK(v.kind == VerdictKind::CertifiedCorrect);
        CHECK_FALSE(r.truncated);
    }
}

TEST_CASE("verify_basecases finds a failure for d=10 at six nodes") {
    BasecaseConfig c;
    c.max_diagrams = 3;
    c.stop_after_failures = 1;
    const auto r = verify_basecases(10, 10, 6, c);
    CHECK_FALSE(r.passed());
    CHECK(r.truncated);
    REQUIRE(!r.failures.empty());
    CHECK(r.failures.front().diagram == Staircase::one_step(6 * 55));
}

TEST_CASE("verify_basecases ignores the worker count") {
    BasecaseConfig one, four;
    four.jobs = 4;
    const auto a = verify_basecases(3, 4, 4, one);
    const auto b = verify_basecases(3, 4, 4, four);
    REQUIRE(a.verdicts.size() == b.verdicts.size());
    for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
        CHECK(a.verdicts[i].first == b.verdicts[i].first);
        CHECK(a.verdicts[i].second.kind == b.verdicts[i].second.kind);
        CHECK(a.verdicts[i].second.witness == b.verdicts[i].second.witness);
    }
    CHECK(a.failures.size() == b.failures.size());
    CHECK(report_csv(a) == report_csv(b));
}

TEST_CASE("verify_basecases reports probable failures") {
    // two F_2 nodes against the 1-step diagram is never correct
    const auto r = verify_basecases(2, 2, 2);
    CHECK_FALSE(r.passed());
}

TEST_CASE("decide_one_step") {
    CHECK_FALSE(decide_one_step(2, 5).correct());
    CHECK_FALSE(decide_one_step(2, 2).correct());
    CHECK(decide_one_step(3, 7).correct());
    for (int k = 1; k <= 12; ++k) CHECK(decide_one_step(1, k).correct());
}

TEST_CASE("reduction route agrees with direct certification") {
    OneStepConfig direct;
    direct.use_reduction = false;
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 12; ++k) {
            const auto r = decide_one_step_detailed(d, k);
            const auto s = decide_one_step(d, k, direct);
            CHECK_MESSAGE(r.verdict.correct() == s.correct(), "d=" << d << " k=" << k);
            const bool expect = d == 1 || (k != 2 && k != 5);
            CHECK_MESSAGE(r.verdict.correct() == expect, "d=" << d << " k=" << k);
            if (r.route == "reduction") CHECK(r.chain.steps.size() >= r.proved_at);
        }
    }
}

TEST_CASE("reduce_to_basecases") {
    const auto five = reduce_to_basecases(5, 20, 6);
    CHECK(five.size() == 5);
    for (const auto& f : five) {
        CHECK(f.is_proper(5));
        CHECK(f.cardinality() == 6 * tri(5));
    }

    const auto two = reduce_to_basecases(2, 7, 6);
    const auto proper6 = enumerate_d_diagrams(2, 6, DiagramFilter::Proper);
    for (const auto& f : two) CHECK(std::find(proper6.begin(), proper6.end(), f) != proper6.end());

    for (int d = 2; d <= 4; ++d) {
        for (const auto& f : reduce_to_basecases(d, 9, 5)) CHECK(f.is_proper(d));
    }
    CHECK(std::is_sorted(two.begin(), two.end()));
}

TEST_CASE("report csv") {
    const auto r = verify_basecases(2, 2, 6);
    CHECK(report_csv(r) == "d,k,total,terminals,failures\n2,6,3,0,0\n");
}
