#include "hermite/staircase.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace hermite {

FerrersDiagram::FerrersDiagram(std::vector<MultiIndex> points, std::size_t n)
    : points_(std::move(points)), n_(n) {
    for (const auto& p : points_) {
        if (p.dimension() != n_) throw DiagramError("point dimension mismatch");
    }
    sort_graded(points_);
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
        throw DiagramError("repeated point");
    }
    if (!is_downward_closed(points_)) throw DiagramError("not downward closed");
}

bool FerrersDiagram::contains(const MultiIndex& a) const {
    return std::binary_search(points_.begin(), points_.end(), a, GradedLess{});
}

int FerrersDiagram::triangle_order() const {
    if (points_.empty()) return 0;
    const int d = points_.back().degree() + 1;
    if (points_.size() != binomial(static_cast<int>(n_) + d - 1, static_cast<int>(n_))) return 0;
    return d;
}

bool is_downward_closed(std::span<const MultiIndex> points) {
    std::set<MultiIndex> s(points.begin(), points.end());
    for (const auto& p : points) {
        std::vector<int> e(p.entries().begin(), p.entries().end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            --e[i];
            if (!s.count(MultiIndex(e))) return false;
            ++e[i];
        }
    }
    return true;
}

FerrersDiagram full_triangle(int d, std::size_t n) {
    if (d < 1 || n < 1) throw DiagramError("full triangle needs d >= 1 and n >= 1");
    return FerrersDiagram(monomials_below_degree(d, n), n);
}

bool is_valid_type(std::span<const int> t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        const int level = static_cast<int>(i) + 1;
        if (t[i] < 0 || t[i] > level) return false;
        if (i > 0 && std::min(t[i], level - 1) > t[i - 1]) return false;
    }
    return true;
}

Staircase Staircase::from_type(std::vector<int> t) {
    while (!t.empty() && t.back() == 0) t.pop_back();
    if (!is_valid_type(t)) throw DiagramError("not a diagram type");
    return Staircase(std::move(t));
}

Staircase Staircase::from_compressed(int prefix, std::span<const int> tail) {
    if (prefix < 0) throw DiagramError("not a diagram type");
    std::vector<int> t;
    for (int i = 1; i <= prefix; ++i) t.push_back(i);
    t.insert(t.end(), tail.begin(), tail.end());
    return from_type(std::move(t));
}

Staircase Staircase::from_normalized(const NormalizedType& n) {
    return from_compressed(n.a, n.trailing);
}

Staircase Staircase::one_step(std::int64_t cardinality) {
    if (cardinality < 0) throw DiagramError("negative cardinality");
    int a = 0;
    while (static_cast<std::int64_t>(a + 1) * (a + 2) / 2 <= cardinality) ++a;
    const int r = static_cast<int>(cardinality - static_cast<std::int64_t>(a) * (a + 1) / 2);
    std::vector<int> tail;
    if (r > 0) tail.push_back(r);
    return from_compressed(a, tail);
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const char* what) {
    throw DiagramError("cannot parse type \"" + std::string(text) + "\" at position " +
                       std::to_string(pos) + ": " + what);
}

}  // namespace

Staircase Staircase::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '(') parse_fail(text, pos, "expected '('");
    ++pos;
    skip();
    bool compressed = false;
    if (pos < text.size() && text[pos] == '~') {
        compressed = true;
        ++pos;
    }
    std::vector<int> values;
    for (;;) {
        skip();
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc() || v < 0) parse_fail(text, pos, "expected a nonnegative integer");
        pos = static_cast<std::size_t>(ptr - text.data());
        values.push_back(v);
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
        }
        parse_fail(text, pos, "expected ',' or ')'");
    }
    skip();
    if (pos != text.size()) parse_fail(text, pos, "trailing characters");
    if (compressed) {
        return from_compressed(values.front(), std::span<const int>(values).subspan(1));
    }
    return from_type(std::move(values));
}

std::int64_t Staircase::cardinality() const {
    std::int64_t s = 0;
    for (int v : type_) s += v;
    return s;
}

int Staircase::full_prefix() const {
    int p = 0;
    while (p < static_cast<int>(type_.size()) && type_[p] == p + 1) ++p;
    return p;
}

std::vector<int> Staircase::step_profile() const {
    return {type_.begin() + full_prefix(), type_.end()};
}

int Staircase::steps() const { return static_cast<int>(type_.size()) - full_prefix(); }

std::vector<MultiIndex> Staircase::points() const {
    std::vector<MultiIndex> pts;
    pts.reserve(static_cast<std::size_t>(cardinality()));
    for (std::size_t i = 0; i < type_.size(); ++i) {
        const int deg = static_cast<int>(i);
        for (int y = 0; y < type_[i]; ++y) pts.push_back(MultiIndex{deg - y, y});
    }
    return pts;
}

FerrersDiagram Staircase::diagram() const { return FerrersDiagram(points(), 2); }

NormalizedType Staircase::normalize_for_d(int d) const {
    if (d < 1) throw DiagramError("d must be positive");
    const int s = static_cast<int>(type_.size());
    NormalizedType n;
    if (s <= d) {
        n.a = 0;
        n.trailing = type_;
        n.trailing.resize(static_cast<std::size_t>(d), 0);
        return n;
    }
    n.a = s - d;
    if (full_prefix() < n.a) throw DiagramError("more than d steps");
    n.trailing.assign(type_.begin() + n.a, type_.end());
    return n;
}

bool Staircase::is_d_diagram(int d) const {
    if (d < 1) return false;
    const std::int64_t tri = static_cast<std::int64_t>(d) * (d + 1) / 2;
    return cardinality() % tri == 0 && steps() <= d;
}

bool Staircase::is_proper(int d) const {
    // only the step bound is enforced: the shape condition makes sense without divisibility
    if (steps() > d) throw DiagramError("more than d steps: " + to_string());
    return is_proper_shape(d);
}

bool Staircase::is_safely_proper(int d) const { return is_proper(d) && is_safely_proper_shape(d); }

bool Staircase::is_proper_shape(int d) const {
    if (steps() > d) return false;
    const NormalizedType n = normalize_for_d(d);
    if (n.a < d) return false;
    for (std::size_t i = 0; i + 1 < n.trailing.size(); ++i) {
        if (n.trailing[i] == n.trailing[i + 1] && n.trailing[i] < d) return false;
    }
    return true;
}

bool Staircase::is_safely_proper_shape(int d) const {
    // the prefix must itself be a full triangle of side 2d
    return is_proper_shape(d) && full_prefix() >= 2 * d && normalize_for_d(d).trailing.back() > 0;
}

std::string Staircase::to_string() const {
    if (type_.empty()) return "(0)";
    const int p = full_prefix();
    if (p == 0) return to_expanded_string();
    std::string s = "(~" + std::to_string(p);
    for (std::size_t i = static_cast<std::size_t>(p); i < type_.size(); ++i) s += "," + std::to_string(type_[i]);
    return s + ")";
}

std::string Staircase::to_expanded_string() const {
    if (type_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < type_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(type_[i]);
    }
    return s + ")";
}

Staircase f_s(std::span<const int> orders) {
    int width0 = 0;
    for (int d : orders) {
        if (d < 1) throw DiagramError("triangle order must be positive");
        width0 += d;
    }
    auto width = [&](int beta) {
        int w = 0;
        for (int d : orders) w += std::max(0, d - beta);
        return w;
    };
    // row beta spans alpha_1 < width(beta); level i collects beta with beta + width(beta) > i - 1
    std::vector<int> t;
    for (int level = 1; level <= width0; ++level) {
        int count = 0;
        for (int beta = 0; beta < level; ++beta) {
            if (beta + width(beta) > level - 1) ++count;
        }
        t.push_back(count);
    }
    return Staircase::from_type(std::move(t));
}

Staircase f_s(std::span<const FerrersDiagram> diagrams) {
    std::vector<int> orders;
    for (const auto& f : diagrams) {
        const int d = f.dimension() == 2 ? f.triangle_order() : 0;
        if (d == 0) throw DiagramError("F_S needs planar full triangles");
        orders.push_back(d);
    }
    return f_s(orders);
}

}  // namespace hermite
