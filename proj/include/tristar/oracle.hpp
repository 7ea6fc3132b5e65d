#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tristar/colouring.hpp"
#include "tristar/rational.hpp"
#include "tristar/stars.hpp"

namespace tristar::oracle {

// Definition-level re-implementations. These read edge colours one at a time
// and share no code with the bit-parallel finders.

DoubleStar brute_max_double_star(const EdgeColouring& colouring);
std::optional<TripleStar> brute_max_triple_star(const EdgeColouring& colouring);

struct EnumerationSpec {
    int n = 3;
    int r = 2;
    /// Restricted-growth strings over the edges: one colouring per
    /// colour-relabelling class.
    bool canonical = true;
    std::uint64_t budget = 100'000'000;
    int threads = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t produced, std::uint64_t required)
        : std::runtime_error("enumeration budget exceeded after " + std::to_string(produced) + " of " +
                             std::to_string(required) + " colourings"),
          produced_(produced), required_(required)
    {
    }
    std::uint64_t produced() const { return produced_; }
    std::uint64_t required() const { return required_; }

private:
    std::uint64_t produced_;
    std::uint64_t required_;
};

/// Number of colourings the spec enumerates (saturating at UINT64_MAX).
std::uint64_t enumeration_count(int n, int r, bool canonical);

/// Streams colourings in lexicographic order of their edge-colour vectors.
/// Every colouring declares m = spec.r. Throws BudgetExceeded after handing
/// out `budget` colourings when more remain. Returns the number produced.
std::uint64_t enumerate_colourings(const EnumerationSpec& spec,
                                   const std::function<void(const EdgeColouring&)>& visit);

enum class CheckMode { triple, double_star, component };

std::string to_string(CheckMode mode);
std::optional<CheckMode> parse_check_mode(const std::string& text);

struct ExhaustReport {
    int n = 0;
    int r = 0;
    CheckMode mode = CheckMode::triple;
    bool prove = false;
    bool local = false;
    std::uint64_t colourings_checked = 0;
    std::uint64_t certificates_verified = 0;
    /// Minimum over all colourings of the largest monochromatic object.
    int minimum = 0;
    /// Lexicographically first colouring attaining the minimum.
    EdgeColouring witness;
    /// Bound asserted per colouring, if the mode asserts one.
    std::optional<Rational> bound;
    /// First violations in enumeration order, each with its serialized colouring.
    std::vector<std::string> violations;
    std::uint64_t violation_count = 0;

    bool ok() const { return violation_count == 0; }
};

/// Enumerates every canonical r-colouring of K_n and records the minimum of
/// the chosen objective. Triple mode asserts ceil(n/(r-1)) for r >= 3 (a lone
/// edge stands in when no colour class has a 2-edge path); component mode
/// asserts ceil(n/(r-1)) for r >= 2; double mode only reports. With `prove`
/// every colouring also gets a certificate that must verify.
ExhaustReport exhaustive_theorem_check(int n, int r, CheckMode mode, bool prove, int threads = 1,
                                       std::uint64_t budget = 100'000'000);

/// Local variant: enumerates canonical colourings with any number of labels,
/// keeps those whose locality is at most r, and asserts the triple-star
/// bound rn/(r^2-r+1). Optionally proves and verifies each. Practical for
/// n <= 5.
ExhaustReport exhaustive_local_check(int n, int r, bool prove, int threads = 1,
                                     std::uint64_t budget = 100'000'000);

} // namespace tristar::oracle
