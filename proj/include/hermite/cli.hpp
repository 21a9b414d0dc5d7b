#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hermite/interp.hpp"

namespace hermite {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t prime = kDefaultPrime;
    int trials = 8;
    std::size_t exact_threshold = 8;
    std::uint64_t budget = 10'000'000;
    unsigned jobs = 1;
    OutputFormat format = OutputFormat::Text;
    std::string cache_path;
    bool full = false;

    /// Throws std::invalid_argument when the prime is not a prime above 2^31 or trials < 1.
    void validate() const;
    [[nodiscard]] VerdictConfig verdict_config() const;
};

/// "F1x2+F3x4" -> {1,1,3,3,3,3}. Throws std::invalid_argument with the offending position.
std::vector<int> parse_node_spec(const std::string& spec);

/// Exit status: 0 correct / success, 1 usage error, 2 certified incorrect or reduction failure,
/// 3 probably incorrect.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermite
