#include "hermite/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermite/bounds.hpp"
#include "hermite/enumerate.hpp"
#include "hermite/records.hpp"
#include "hermite/reduction.hpp"

namespace hermite {

void RunConfig::validate() const {
    if (prime <= (1ULL << 31) || !is_prime(prime)) throw std::invalid_argument("--prime must be a prime above 2^31");
    if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
}

VerdictConfig RunConfig::verdict_config() const {
    VerdictConfig v;
    v.prime = prime;
    v.trials = trials;
    v.exact_threshold = exact_threshold;
    v.seed = seed;
    return v;
}

std::vector<int> parse_node_spec(const std::string& spec) {
    std::vector<int> orders;
    std::size_t pos = 0;
    auto fail = [&](const char* what) {
        throw std::invalid_argument("bad node spec \"" + spec + "\" at position " + std::to_string(pos) + ": " + what);
    };
    auto number = [&] {
        std::size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoi(spec.substr(start, pos - start));
    };
    for (;;) {
        if (pos >= spec.size() || spec[pos] != 'F') fail("expected 'F'");
        ++pos;
        const int d = number();
        if (d < 1) fail("order must be positive");
        int k = 1;
        if (pos < spec.size() && spec[pos] == 'x') {
            ++pos;
            k = number();
        }
        orders.insert(orders.end(), static_cast<std::size_t>(k), d);
        if (pos == spec.size()) break;
        if (spec[pos] != '+') fail("expected '+'");
        ++pos;
    }
    return orders;
}

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncorrect = 2;
constexpr int kExitProbable = 3;

int exit_for(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::CertifiedCorrect: return kExitOk;
        case VerdictKind::CertifiedIncorrect: return kExitIncorrect;
        case VerdictKind::ProbablyIncorrect: return kExitProbable;
    }
    return kExitUsage;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream os;
    os << to_string(v.kind) << " trials=" << v.trials << " degreeBound=" << v.degree_bound << " method=" << v.method;
    if (v.prime) os << " prime=" << *v.prime;
    if (v.kind == VerdictKind::ProbablyIncorrect) os << " errorBound=" << v.error_bound.get_d();
    return os.str();
}

std::string join_points(const std::vector<MultiIndex>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += pts[i].to_string();
    }
    return s;
}

struct Context {
    RunConfig cfg;
    std::ostream& out;
    std::ostream& err;
    std::unique_ptr<VerdictCache> cache;

    VerdictCache* cache_ptr() {
        if (!cache && !cfg.cache_path.empty()) cache = std::make_unique<VerdictCache>(cfg.cache_path);
        return cache.get();
    }
};

DiagramFilter parse_filter(const std::string& s) {
    if (s == "all") return DiagramFilter::All;
    if (s == "proper") return DiagramFilter::Proper;
    if (s == "safely" || s == "safelyProper" || s == "safely-proper") return DiagramFilter::SafelyProper;
    throw std::invalid_argument("unknown filter " + s);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generic correctness of planar Hermite interpolation problems", "hermite"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{RunConfig{}, out, err, nullptr};
    RunConfig& cfg = ctx.cfg;
    std::string format = "text";
    app.add_option("--seed", cfg.seed, "random seed")->envname("HERMITE_SEED");
    app.add_option("--prime", cfg.prime, "prime for modular evaluation")->envname("HERMITE_PRIME");
    app.add_option("--trials", cfg.trials, "random evaluations before giving up")->envname("HERMITE_TRIALS");
    app.add_option("--exact-threshold", cfg.exact_threshold, "largest matrix for the exact fallback")
        ->envname("HERMITE_EXACT_THRESHOLD");
    app.add_option("--budget", cfg.budget, "subset / problem budget")->envname("HERMITE_BUDGET");
    app.add_option("--jobs", cfg.jobs, "worker threads")->envname("HERMITE_JOBS");
    app.add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("HERMITE_FORMAT");
    app.add_option("--cache", cfg.cache_path, "JSON-lines verdict cache")->envname("HERMITE_CACHE");
    app.add_flag("--full", cfg.full, "lift desk-scale limits")->envname("HERMITE_FULL");

    // check
    auto* check = app.add_subcommand("check", "decide generic correctness of one problem");
    std::string nodes, basis_type;
    bool onestep = false;
    check->add_option("--nodes", nodes, "conditions, e.g. F1x2+F3x4")->required();
    auto* basis_opt = check->add_option("--basis", basis_type, "monomials as a staircase type, e.g. \"(~3,3)\"");
    auto* onestep_opt = check->add_flag("--onestep", onestep, "use the 1-step diagram of matching size");
    basis_opt->excludes(onestep_opt);

    // reduce
    auto* red = app.add_subcommand("reduce", "print a reduction chain");
    std::string red_type, red_v;
    int red_d = 0;
    std::int64_t red_stop = -1;
    bool red_steps = false;
    red->add_option("type", red_type, "staircase type")->required();
    red->add_option("-d", red_d, "reduction order")->required();
    red->add_option("-v", red_v, "custom v for the first step, e.g. 1,3,2");
    red->add_option("--stop", red_stop, "stop cardinality");
    red->add_flag("--steps", red_steps, "one 'type -> type [v=...]' line per step");

    // basis
    auto* bas = app.add_subcommand("basis", "greedy generic basis");
    std::string bas_nodes;
    bas->add_option("--nodes", bas_nodes, "conditions")->required();

    // enumerate
    auto* en = app.add_subcommand("enumerate", "list d-diagrams");
    int en_d = 0, en_k = 0;
    std::string en_filter = "proper";
    bool en_count = false;
    en->add_option("-d", en_d)->required();
    en->add_option("-k,--nodes", en_k)->required();
    en->add_option("--filter", en_filter, "all, proper or safely");
    en->add_flag("--count", en_count, "print only the count");

    // basecases
    auto* bc = app.add_subcommand("basecases", "verify base cases");
    int bc_d = 0, bc_D = 0, bc_p = 0;
    std::size_t bc_max = 0, bc_stop = 0;
    std::string bc_family = "proper", bc_condition = "safely";
    bc->add_option("-d", bc_d)->required();
    bc->add_option("-D", bc_D, "step bound (default d)");
    bc->add_option("-p,--nodes", bc_p)->required();
    bc->add_option("--max-diagrams", bc_max);
    bc->add_option("--stop-after", bc_stop, "stop after this many failures");
    bc->add_option("--family", bc_family, "all, proper or safely");
    bc->add_option("--condition", bc_condition, "proper or safely");

    // decide
    auto* dec = app.add_subcommand("decide", "generic correctness of the 1-step problem for k nodes of F_d");
    int dec_d = 0, dec_k = 0;
    dec->add_option("-d", dec_d)->required();
    dec->add_option("-k,--nodes", dec_k)->required();

    // tables
    auto* tab = app.add_subcommand("tables", "regenerate tables");
    std::string which, tab_range = "2..7", tab_out;
    int tab_nodes = 6, tab_max = 3;
    tab->add_option("which", which, "counts, rmk, rmk-bounds or triples")
        ->required()
        ->check(CLI::IsMember({"counts", "rmk", "rmk-bounds", "triples"}));
    tab->add_option("--d", tab_range, "range of d, e.g. 2..7");
    tab->add_option("--nodes", tab_nodes);
    tab->add_option("--max", tab_max, "largest m for rmk");
    tab->add_option("--out", tab_out, "write to a file instead of stdout");

    // cache
    auto* cac = app.add_subcommand("cache", "inspect or clear the verdict cache");
    std::string cache_action;
    cac->add_option("action", cache_action)->required()->check(CLI::IsMember({"show", "clear", "stats"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;

    try {
        cfg.validate();
        const VerdictConfig vc = cfg.verdict_config();

        if (*check) {
            InterpProblem p;
            const auto orders = parse_node_spec(nodes);
            std::int64_t card = 0;
            for (int d : orders) card += static_cast<std::int64_t>(d) * (d + 1) / 2;
            Staircase target;
            if (onestep) {
                target = Staircase::one_step(card);
            } else if (!basis_type.empty()) {
                target = Staircase::parse(basis_type);
            } else {
                throw std::invalid_argument("check needs --basis or --onestep");
            }
            p = InterpProblem::planar(orders, target);
            const Verdict v = cached_verdict(p, vc, ctx.cache_ptr());
            if (cfg.format == OutputFormat::Json) {
                out << verdict_record(v, problem_hash(p), vc) << '\n';
            } else {
                out << target.to_string() << ": " << verdict_text(v) << '\n';
            }
            return exit_for(v);
        }

        if (*red) {
            const Staircase f = Staircase::parse(red_type);
            std::optional<VSequence> first;
            if (!red_v.empty()) first = parse_v(red_v);
            const std::int64_t tri = static_cast<std::int64_t>(red_d) * (red_d + 1) / 2;
            std::int64_t stop = red_stop;
            if (stop < 0) stop = first ? f.cardinality() - tri : std::min(tri, f.cardinality());
            try {
                const ReductionChain c = chain(f, red_d, stop, first);
                if (red_steps) {
                    out << format_steps(c);
                } else {
                    out << format_arrow(c, red_d) << '\n';
                }
            } catch (const ReductionError& e) {
                err << "error: " << e.what() << '\n';
                return kExitIncorrect;
            }
            return kExitOk;
        }

        if (*bas) {
            std::vector<FerrersDiagram> conds;
            for (int d : parse_node_spec(bas_nodes)) conds.push_back(full_triangle(d, 2));
            const GenericBasis g = generic_basis(conds, 2, vc);
            std::string type = "not a staircase";
            try {
                std::vector<int> t;
                for (const auto& m : g.basis) {
                    const auto lvl = static_cast<std::size_t>(m.degree());
                    if (t.size() <= lvl) t.resize(lvl + 1, 0);
                    ++t[lvl];
                }
                const Staircase s = Staircase::from_type(t);
                if (s.points() == std::vector<MultiIndex>(g.basis.begin(), g.basis.end())) type = s.to_string();
            } catch (const DiagramError&) {
            }
            out << type << '\n' << join_points(g.basis) << '\n' << verdict_text(g.verdict) << '\n';
            return exit_for(g.verdict);
        }

        if (*en) {
            const auto filter = parse_filter(en_filter);
            if (en_count) {
                out << count_d_diagrams(en_d, en_k, filter) << '\n';
            } else {
                for_each_d_diagram(en_d, en_k, filter, [&](const Staircase& f) {
                    out << f.to_string() << '\n';
                    return true;
                });
            }
            return kExitOk;
        }

        if (*bc) {
            BasecaseConfig b;
            b.verdict = vc;
            b.family = parse_filter(bc_family);
            b.require_safely_proper = parse_filter(bc_condition) == DiagramFilter::SafelyProper;
            b.max_diagrams = bc_max;
            b.stop_after_failures = bc_stop;
            b.jobs = cfg.jobs;
            if (bc_d >= 10 && !cfg.full && bc_max == 0) {
                throw std::invalid_argument("d >= 10 needs --full or --max-diagrams");
            }
            const auto r = verify_basecases(bc_d, bc_D ? bc_D : bc_d, bc_p, b);
            if (cfg.format == OutputFormat::Json) {
                nlohmann::json j;
                j["d"] = r.d;
                j["D"] = r.step_bound;
                j["k"] = r.nodes;
                j["total"] = r.total;
                j["truncated"] = r.truncated;
                for (const auto& f : r.failures) j["failures"].push_back({{"diagram", f.diagram.to_string()}, {"reason", f.reason}});
                for (const auto& [f, v] : r.verdicts) j["verdicts"][f.to_string()] = to_string(v.kind);
                out << j.dump(2) << '\n';
            } else {
                out << report_csv(r);
                for (const auto& f : r.failures) out << "failure " << f.diagram.to_string() << ": " << f.reason << '\n';
            }
            return r.passed() ? kExitOk : kExitIncorrect;
        }

        if (*dec) {
            OneStepConfig oc;
            oc.verdict = vc;
            oc.subset_budget = cfg.budget;
            const auto r = decide_one_step_detailed(dec_d, dec_k, oc);
            out << Staircase::one_step(static_cast<std::int64_t>(dec_k) * dec_d * (dec_d + 1) / 2).to_string() << ": "
                << verdict_text(r.verdict) << " route=" << r.route;
            if (r.route == "reduction") out << " depth=" << r.proved_at << " via " << r.chain.steps[r.proved_at - 1].after.to_string();
            out << '\n';
            return exit_for(r.verdict);
        }

        if (*tab) {
            std::ostringstream os;
            SearchConfig sc;
            sc.verdict = vc;
            sc.jobs = cfg.jobs;
            sc.problem_budget = cfg.budget;
            const bool csv = cfg.format == OutputFormat::Csv;
            if (which == "counts") {
                const auto [lo, hi] = parse_range(tab_range);
                if (hi > 9 && !cfg.full) throw std::invalid_argument("d > 9 needs --full");
                os << (csv ? "d,nodes,diagrams,proper,safely_proper\n" : "d nodes diagrams proper safely_proper\n");
                for (int d = lo; d <= hi; ++d) {
                    const char sep = csv ? ',' : ' ';
                    os << d << sep << tab_nodes << sep << count_d_diagrams(d, tab_nodes, DiagramFilter::All) << sep
                       << count_d_diagrams(d, tab_nodes, DiagramFilter::Proper) << sep
                       << count_d_diagrams(d, tab_nodes, DiagramFilter::SafelyProper) << '\n';
                }
            } else if (which == "rmk") {
                std::vector<std::vector<int>> rows;
                int reached = tab_max;
                for (; reached >= 0; --reached) {
                    try {
                        rows = search_r_table(reached, sc);
                        break;
                    } catch (const BudgetExceeded&) {
                    }
                }
                os << (csv ? format_r_csv(rows) : format_r_table(rows));
                for (int m = reached + 1; m <= tab_max; ++m) os << "m=" << m << " skipped (budget)\n";
            } else if (which == "rmk-bounds") {
                std::vector<std::vector<int>> computed;
                for (int m = 0; m < 8; ++m) {
                    std::vector<int> row;
                    for (int k = 0; k <= m; ++k) row.push_back(r_bound(m, k));
                    computed.push_back(row);
                }
                if (csv) {
                    os << format_r_csv(reference_mixed_initial_r());
                } else {
                    os << "mixed initial cases\n" << format_r_table(reference_mixed_initial_r());
                    os << "closed-form bound\n" << format_r_table(computed);
                }
            } else {
                for (const auto& t : exceptional_mixed_triples(3, sc)) {
                    os << '(' << t[0] << ',' << t[1] << ',' << t[2] << ")\n";
                }
            }
            if (tab_out.empty()) {
                out << os.str();
            } else {
                std::ofstream f(tab_out);
                if (!f) throw std::runtime_error("cannot write " + tab_out);
                f << os.str();
            }
            return kExitOk;
        }

        if (*cac) {
            if (cfg.cache_path.empty()) throw std::invalid_argument("cache needs --cache");
            if (cache_action == "clear") {
                std::ofstream(cfg.cache_path, std::ios::trunc);
                out << "cleared " << cfg.cache_path << '\n';
            } else if (cache_action == "stats") {
                out << VerdictCache(cfg.cache_path).size() << " records\n";
            } else {
                std::ifstream in(cfg.cache_path);
                std::string line;
                while (std::getline(in, line)) out << line << '\n';
            }
            return kExitOk;
        }
    } catch (const ReductionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIncorrect;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hermite
