#include "hermite/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "hermite/interp.hpp"

namespace hermite {

VSequence canonical_v(const Staircase& f, int d) {
    const NormalizedType n = f.normalize_for_d(d);
    VSequence v(static_cast<std::size_t>(d), 0);
    std::vector<bool> used(static_cast<std::size_t>(d) + 1, false);
    for (int i = d - 1; i >= 0; --i) {
        int l = std::min(d, n.trailing[static_cast<std::size_t>(i)]);
        while (l >= 1 && used[static_cast<std::size_t>(l)]) --l;
        if (l < 1) throw ReductionError("not d-reducible: " + f.to_string(), f);
        used[static_cast<std::size_t>(l)] = true;
        v[static_cast<std::size_t>(i)] = l;
    }
    return v;
}

ReductionStep reduce(const Staircase& f, int d, const VSequence& v) {
    const NormalizedType n = f.normalize_for_d(d);
    if (v.size() != static_cast<std::size_t>(d)) throw ReductionError("not a reduction: v needs d entries", f);
    std::vector<bool> used(static_cast<std::size_t>(d) + 1, false);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1 || v[i] > d || used[static_cast<std::size_t>(v[i])] || v[i] > n.trailing[i]) {
            throw ReductionError("not a reduction: " + format_v(v) + " for " + f.to_string(), f);
        }
        used[static_cast<std::size_t>(v[i])] = true;
    }
    ReductionStep step;
    step.before = f;
    step.v = v;
    NormalizedType after = n;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int level_degree = n.a + static_cast<int>(i);
        const int top = n.trailing[i];
        for (int y = top - v[i]; y < top; ++y) step.removed.push_back(MultiIndex{level_degree - y, y});
        after.trailing[i] -= v[i];
    }
    sort_graded(step.removed);
    try {
        step.after = Staircase::from_normalized(after);
    } catch (const DiagramError&) {
        throw ReductionError("not a reduction: " + format_v(v) + " leaves a non-Ferrers set", f);
    }
    return step;
}

ReductionChain chain(const Staircase& f, int d, std::int64_t stop, const std::optional<VSequence>& first) {
    const std::int64_t tri = static_cast<std::int64_t>(d) * (d + 1) / 2;
    if (stop < 0 || stop % tri != 0) throw std::invalid_argument("stop must be a multiple of d(d+1)/2");
    if (f.cardinality() < stop) throw std::invalid_argument("diagram is already below the stop cardinality");
    ReductionChain c;
    c.terminal = f;
    bool custom = first.has_value();
    while (c.terminal.cardinality() > stop) {
        VSequence v = custom ? *first : canonical_v(c.terminal, d);
        custom = false;
        c.steps.push_back(reduce(c.terminal, d, v));
        c.terminal = c.steps.back().after;
    }
    return c;
}

std::string format_v(const VSequence& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

VSequence parse_v(const std::string& text) {
    std::string t;
    for (char ch : text) {
        if (ch != '(' && ch != ')' && ch != ' ') t += ch;
    }
    VSequence v;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad v entry \"" + item + "\"");
        v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("empty v sequence");
    return v;
}

namespace {

bool is_canonical_step(const ReductionStep& s, int d) {
    try {
        return canonical_v(s.before, d) == s.v;
    } catch (const ReductionError&) {
        return false;
    }
}

}  // namespace

std::string format_arrow(const ReductionChain& c, int d) {
    std::string out = c.steps.empty() ? c.terminal.to_string() : c.steps.front().before.to_string();
    for (const auto& s : c.steps) {
        out += is_canonical_step(s, d) ? " -> " : " -" + format_v(s.v) + "-> ";
        out += s.after.to_string();
    }
    return out;
}

std::string format_steps(const ReductionChain& c) {
    std::string out;
    for (const auto& s : c.steps) {
        out += s.before.to_string() + " -> " + s.after.to_string() + " [v=" + format_v(s.v) + "]\n";
    }
    return out;
}

bool verify_exceptional(std::span<const MultiIndex> e, std::span<const MultiIndex> b, int d, std::uint64_t budget) {
    if (e.empty()) throw std::invalid_argument("empty candidate set");
    const std::size_t n = e.front().dimension();
    std::vector<MultiIndex> es(e.begin(), e.end());
    sort_graded(es);
    std::vector<MultiIndex> bs(b.begin(), b.end());
    sort_graded(bs);
    if (!std::includes(bs.begin(), bs.end(), es.begin(), es.end(), GradedLess{})) {
        throw std::invalid_argument("candidate set is not contained in the monomial set");
    }
    if (!one_point_correct(es, d, n)) return false;
    bool unique = true;
    for_each_subset_with_sum(bs, es.size(), exponent_sum(es, n), budget, [&](const std::vector<MultiIndex>& p) {
        if (p == es) return true;
        if (one_point_correct(p, d, n)) {
            unique = false;
            return false;
        }
        return true;
    });
    return unique;
}

}  // namespace hermite
