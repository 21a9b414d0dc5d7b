#include "hermite/records.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hermite {

using nlohmann::json;

std::string problem_key(const InterpProblem& p) {
    std::string s = "n=" + std::to_string(p.n) + ";F=";
    for (std::size_t i = 0; i < p.conditions.size(); ++i) {
        if (i) s += '+';
        const int t = p.conditions[i].triangle_order();
        if (t > 0) {
            s += "F" + std::to_string(t);
            continue;
        }
        s += '{';
        for (const auto& pt : p.conditions[i].points()) s += pt.to_string();
        s += '}';
    }
    std::vector<MultiIndex> b = p.basis;
    sort_graded(b);
    s += ";B=";
    for (const auto& m : b) s += m.to_string();
    return s;
}

std::uint64_t problem_hash(const InterpProblem& p) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : problem_key(p)) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string verdict_record(const Verdict& v, std::uint64_t hash, const VerdictConfig& config) {
    json j;
    j["problem"] = hash;
    j["kind"] = to_string(v.kind);
    j["prime"] = v.prime ? json(*v.prime) : json(nullptr);
    j["seed"] = config.seed;
    j["trials"] = v.trials;
    j["configTrials"] = config.trials;
    j["configPrime"] = config.prime;
    j["degreeBound"] = v.degree_bound;
    j["errorBound"] = v.error_bound.get_str();
    j["method"] = v.method;
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j.dump();
}

Verdict parse_verdict_record(const std::string& line, std::uint64_t* hash, VerdictConfig* config) {
    const json j = json::parse(line);
    Verdict v;
    v.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
    if (!j.at("prime").is_null()) v.prime = j.at("prime").get<std::uint64_t>();
    v.trials = j.at("trials").get<int>();
    v.degree_bound = j.at("degreeBound").get<std::int64_t>();
    v.error_bound = mpq_class(j.at("errorBound").get<std::string>());
    v.error_bound.canonicalize();
    v.method = j.value("method", std::string());
    if (j.contains("witness")) v.witness = j.at("witness").get<std::vector<std::vector<std::uint64_t>>>();
    if (hash) *hash = j.at("problem").get<std::uint64_t>();
    if (config) {
        config->seed = j.at("seed").get<std::uint64_t>();
        config->trials = j.value("configTrials", v.trials);
        config->prime = j.value("configPrime", v.prime.value_or(kDefaultPrime));
    }
    return v;
}

VerdictCache::VerdictCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::uint64_t hash = 0;
        VerdictConfig c;
        try {
            Verdict v = parse_verdict_record(line, &hash, &c);
            entries_[{hash, c.prime, c.seed, c.trials}] = std::move(v);
        } catch (const std::exception& e) {
            throw std::runtime_error(path_ + ":" + std::to_string(lineno) + ": bad cache record: " + e.what());
        }
    }
}

std::optional<Verdict> VerdictCache::find(std::uint64_t hash, const VerdictConfig& config) const {
    auto it = entries_.find({hash, config.prime, config.seed, config.trials});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void VerdictCache::store(std::uint64_t hash, const VerdictConfig& config, const Verdict& v) {
    const Key key{hash, config.prime, config.seed, config.trials};
    if (entries_.count(key)) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot write cache " + path_);
    out << verdict_record(v, hash, config) << '\n';
    entries_[key] = v;
}

Verdict cached_verdict(const InterpProblem& p, const VerdictConfig& config, VerdictCache* cache) {
    if (!cache) return is_generically_correct(p, config);
    const std::uint64_t h = problem_hash(p);
    if (auto hit = cache->find(h, config)) return *hit;
    Verdict v = is_generically_correct(p, config);
    cache->store(h, config, v);
    return v;
}

}  // namespace hermite
