#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tristar/colouring.hpp"
#include "tristar/rational.hpp"

namespace tristar::explorer {

enum class Objective { double_star, triple, component };

std::string to_string(Objective objective);
std::optional<Objective> parse_objective(const std::string& text);

/// Simulated-annealing settings. Temperature and cooling are exact rationals
/// so a config round-trips without float drift; they are converted to double
/// once at the start of each restart. Defaults are engineering choices.
struct SearchConfig {
    int n = 8;
    int r = 3;
    Objective objective = Objective::triple;
    std::int64_t iterations = 100'000;
    Rational initial_temperature{2};
    Rational cooling{995, 1000};
    std::uint64_t seed = 1;
    int restarts = 8;
    int threads = 1;
};

/// Throws std::invalid_argument describing the first bad field.
void validate(const SearchConfig& config);

/// max double star, max triple star (2 when none exists), or max component.
int objective(const ColourClassView& view, Objective kind);
int objective(const EdgeColouring& colouring, Objective kind);

struct LogEntry {
    int restart = 0;
    std::int64_t iteration = 0;
    int best = 0;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

struct SearchResult {
    EdgeColouring best_colouring;
    int best_objective = 0;
    int best_restart = 0;
    /// objective * (r-1) / n
    Rational ratio;
    /// One entry per restart start and per improvement of that restart's best.
    std::vector<LogEntry> log;
};

/// Minimizes the objective with single-edge recolour moves. Restart k seeds
/// its own SplitMix64 with seed + k * 0x9E3779B97F4A7C15, draws a uniform
/// random starting colouring, then per iteration picks a uniform edge and a
/// uniform different colour, accepts when delta <= 0 or with probability
/// exp(-delta / T), and multiplies T by the cooling factor. The best restart
/// wins; ties go to the lowest restart index.
///
/// delta is the objective difference. When the objective is unchanged it is
/// the relative change, in (-1, 1), of a plateau measure: the number of stars
/// attaining the maximum, or the sum of squared component sizes.
///
/// For the triple objective with r >= 3, a result below ceil(n/(r-1)) throws
/// TheoremViolation.
SearchResult anneal(const SearchConfig& config);

} // namespace tristar::explorer
