#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tristar/colouring.hpp"
#include "tristar/explorer.hpp"
#include "tristar/oracle.hpp"
#include "tristar/stars.hpp"

namespace tristar {

struct BoundComparison {
    std::string registry; // "global" or "local"
    std::string name;
    Rational value;
    int observed = 0;

    bool met() const { return Rational(observed) >= value; }
};

struct AnalysisReport {
    int n = 0;
    int m = 0;
    int colours_used = 0;
    int locality = 0;
    /// colour -> component sizes, largest first
    std::map<int, std::vector<int>> component_sizes;
    MaxComponent max_component;
    DoubleStar max_double_star;
    /// nullopt when skipped or when no colour class has a 2-edge path
    std::optional<TripleStar> max_triple_star;
    bool triple_computed = true;
    std::vector<BoundComparison> bounds;
};

struct AnalysisOptions {
    /// The triple-star search is cubic per colour; large inputs may skip it.
    bool triple = true;
};

AnalysisReport analyze(const EdgeColouring& colouring, AnalysisOptions options = {});

/// Sorted keys, rationals as {"num","den"}: byte-stable for a fixed input.
std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

std::string to_json(const oracle::ExhaustReport& report);
std::string to_text(const oracle::ExhaustReport& report);

} // namespace tristar
