#include "hermite/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hermite/parallel.hpp"

namespace hermite {

namespace {

std::int64_t triangle(int d) { return static_cast<std::int64_t>(d) * (d + 1) / 2; }

struct TailWalker {
    const std::function<bool(const Staircase&)>& visit;
    int max_steps;
    std::vector<int> type;
    bool stopped = false;

    // parts are non-increasing and at most `cap`
    void walk(std::int64_t rem, int cap, int steps_left) {
        if (stopped) return;
        if (rem == 0) {
            if (!visit(Staircase::from_type(type))) stopped = true;
            return;
        }
        if (steps_left == 0 || static_cast<std::int64_t>(cap) * steps_left < rem) return;
        for (int part = static_cast<int>(std::min<std::int64_t>(cap, rem)); part >= 1 && !stopped; --part) {
            if (static_cast<std::int64_t>(part) * steps_left < rem) break;
            type.push_back(part);
            walk(rem - part, part, steps_left - 1);
            type.pop_back();
        }
    }
};

bool passes(DiagramFilter filter, const Staircase& f, int d) {
    switch (filter) {
        case DiagramFilter::All: return true;
        case DiagramFilter::Proper: return f.is_proper_shape(d);
        case DiagramFilter::SafelyProper: return f.is_safely_proper_shape(d);
    }
    return false;
}

}  // namespace

void for_each_diagram(std::int64_t cardinality, int max_steps, const std::function<bool(const Staircase&)>& visit) {
    if (cardinality < 0 || max_steps < 0) return;
    int top = 0;
    while (triangle(top + 1) <= cardinality) ++top;
    TailWalker w{visit, max_steps, {}};
    for (int prefix = top; prefix >= 0 && !w.stopped; --prefix) {
        w.type.clear();
        for (int i = 1; i <= prefix; ++i) w.type.push_back(i);
        w.walk(cardinality - triangle(prefix), prefix, max_steps);
    }
}

void for_each_d_diagram(int d, int k, DiagramFilter filter, const std::function<bool(const Staircase&)>& visit) {
    if (d < 1 || k < 0) throw std::invalid_argument("need d >= 1 and k >= 0");
    for_each_diagram(k * triangle(d), d, [&](const Staircase& f) { return passes(filter, f, d) ? visit(f) : true; });
}

std::vector<Staircase> enumerate_d_diagrams(int d, int k, DiagramFilter filter) {
    std::vector<Staircase> out;
    for_each_d_diagram(d, k, filter, [&](const Staircase& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

std::uint64_t count_d_diagrams(int d, int k, DiagramFilter filter) {
    std::uint64_t n = 0;
    for_each_d_diagram(d, k, filter, [&](const Staircase&) {
        ++n;
        return true;
    });
    return n;
}

std::vector<Staircase> reduce_to_basecases(int d, int k1, int k2) {
    if (k2 >= k1) throw std::invalid_argument("reduce_to_basecases needs k2 < k1");
    std::set<Staircase> terminals;
    const std::int64_t stop = k2 * triangle(d);
    for_each_d_diagram(d, k1, DiagramFilter::SafelyProper, [&](const Staircase& f) {
        terminals.insert(chain(f, d, stop).terminal);
        return true;
    });
    return {terminals.begin(), terminals.end()};
}

EnumerationReport verify_basecases(int d, int step_bound, int p, const BasecaseConfig& config) {
    if (step_bound < d) throw std::invalid_argument("step bound must be at least d");
    EnumerationReport r;
    r.d = d;
    r.step_bound = step_bound;
    r.nodes = p;
    std::vector<Staircase> family;
    for_each_diagram(p * triangle(d), step_bound, [&](const Staircase& f) {
        if (!passes(config.family, f, step_bound)) return true;
        if (config.max_diagrams && family.size() == config.max_diagrams) {
            r.truncated = true;
            return false;
        }
        family.push_back(f);
        return true;
    });
    r.total = family.size();
    const std::vector<int> orders(static_cast<std::size_t>(p), d);
    std::vector<Verdict> verdicts(family.size());
    std::vector<bool> done(family.size(), false);
    auto check = [&](std::size_t i) {
        verdicts[i] = is_generically_correct(InterpProblem::planar(orders, family[i]), config.verdict);
        done[i] = true;
    };
    if (config.stop_after_failures) {
        std::size_t failures = 0;
        for (std::size_t i = 0; i < family.size() && failures < config.stop_after_failures; ++i) {
            check(i);
            const bool cond1 = config.require_safely_proper ? family[i].is_safely_proper_shape(step_bound)
                                                            : family[i].is_proper_shape(step_bound);
            if (!cond1 || !verdicts[i].correct()) ++failures;
        }
    } else {
        // per-index writes only; vector<bool> is not safe for that
        std::vector<char> flags(family.size(), 0);
        parallel_for(family.size(), config.jobs, [&](std::size_t i) {
            verdicts[i] = is_generically_correct(InterpProblem::planar(orders, family[i]), config.verdict);
            flags[i] = 1;
        });
        for (std::size_t i = 0; i < family.size(); ++i) done[i] = flags[i] != 0;
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!done[i]) {
            r.truncated = true;
            continue;
        }
        const Staircase& f = family[i];
        const bool cond1 = config.require_safely_proper ? f.is_safely_proper_shape(step_bound) : f.is_proper_shape(step_bound);
        if (!cond1) r.failures.push_back({f, config.require_safely_proper ? "not safely proper" : "not proper"});
        if (!verdicts[i].correct()) r.failures.push_back({f, to_string(verdicts[i].kind)});
        r.verdicts.emplace_back(f, verdicts[i]);
    }
    return r;
}

OneStepResult decide_one_step_detailed(int d, int k, const OneStepConfig& config) {
    if (d < 1 || k < 1) throw std::invalid_argument("need d >= 1 and k >= 1");
    const std::int64_t tri = triangle(d);
    OneStepResult out;
    const Staircase top = Staircase::one_step(k * tri);
    out.chain.terminal = top;
    if (config.use_reduction) {
        Staircase cur = top;
        while (cur.cardinality() > tri) {
            ReductionStep step;
            try {
                step = reduce(cur, d, canonical_v(cur, d));
            } catch (const ReductionError&) {
                break;
            }
            // a proper diagram's canonical removal is exceptional; anything else is checked by brute force
            bool licensed = cur.is_proper_shape(d);
            if (!licensed) {
                try {
                    const auto pts = cur.points();
                    licensed = verify_exceptional(step.removed, pts, d, config.subset_budget);
                } catch (const BudgetExceeded&) {
                    licensed = false;
                }
            }
            if (!licensed) break;
            cur = step.after;
            out.chain.steps.push_back(std::move(step));
        }
        out.chain.terminal = cur;
    }
    // deepest first: the first correct diagram proves everything above it
    for (std::size_t depth = out.chain.steps.size() + 1; depth-- > 0;) {
        const Staircase& g = depth == 0 ? top : out.chain.steps[depth - 1].after;
        const std::vector<int> orders(static_cast<std::size_t>(k) - depth, d);
        Verdict v = is_generically_correct(InterpProblem::planar(orders, g), config.verdict);
        if (v.correct() || depth == 0) {
            out.proved_at = depth;
            out.certificate = v;
            out.verdict = v;
            out.route = depth == 0 ? "direct" : "reduction";
            if (depth > 0) {
                out.verdict.witness.clear();
                out.verdict.method = "reduction";
                out.verdict.degree_bound = degred(top.points());
            }
            break;
        }
    }
    return out;
}

Verdict decide_one_step(int d, int k, const OneStepConfig& config) { return decide_one_step_detailed(d, k, config).verdict; }

std::string report_csv(const EnumerationReport& r, bool header) {
    std::ostringstream os;
    if (header) os << "d,k,total,terminals,failures\n";
    os << r.d << ',' << r.nodes << ',' << r.total << ',' << r.reduced_set.size() << ',' << r.failures.size() << '\n';
    return os.str();
}

}  // namespace hermite
