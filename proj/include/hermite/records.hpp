#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "hermite/interp.hpp"

namespace hermite {

/// Canonical text of a problem: conditions in order, basis in graded order.
std::string problem_key(const InterpProblem& p);
/// FNV-1a of problem_key.
std::uint64_t problem_hash(const InterpProblem& p);

/// One JSON object on a single line.
std::string verdict_record(const Verdict& v, std::uint64_t hash, const VerdictConfig& config);
/// Parses a record line; returns the verdict and fills hash/config fields that were stored.
Verdict parse_verdict_record(const std::string& line, std::uint64_t* hash = nullptr, VerdictConfig* config = nullptr);

/// Append-only JSON-lines cache keyed by (problem hash, prime, seed, trials).
class VerdictCache {
public:
    explicit VerdictCache(std::string path);

    [[nodiscard]] std::optional<Verdict> find(std::uint64_t hash, const VerdictConfig& config) const;
    void store(std::uint64_t hash, const VerdictConfig& config, const Verdict& v);
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] const std::string& path() const { return path_; }

private:
    using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, int>;
    std::string path_;
    std::map<Key, Verdict> entries_;
};

/// is_generically_correct through an optional cache.
Verdict cached_verdict(const InterpProblem& p, const VerdictConfig& config, VerdictCache* cache);

}  // namespace hermite
