#include "tristar/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "tristar/prover.hpp"
#include "tristar/random.hpp"
#include "tristar/stars.hpp"

namespace tristar::explorer {

std::string to_string(Objective objective)
{
    switch (objective) {
    case Objective::double_star: return "double";
    case Objective::triple: return "triple";
    case Objective::component: return "component";
    }
    return "unknown";
}

std::optional<Objective> parse_objective(const std::string& text)
{
    if (text == "double")
        return Objective::double_star;
    if (text == "triple")
        return Objective::triple;
    if (text == "component")
        return Objective::component;
    return std::nullopt;
}

void validate(const SearchConfig& config)
{
    if (config.n < 2)
        throw std::invalid_argument("search: n >= 2 required");
    if (config.r < 1 || config.r > 65535)
        throw std::invalid_argument("search: r must lie in 1..65535");
    if (config.iterations < 1)
        throw std::invalid_argument("search: iterations >= 1 required");
    if (config.initial_temperature < Rational(0))
        throw std::invalid_argument("search: initial temperature must be non-negative");
    if (config.cooling <= Rational(0) || config.cooling >= Rational(1))
        throw std::invalid_argument("search: cooling factor must lie in (0, 1)");
    if (config.restarts < 1)
        throw std::invalid_argument("search: restarts >= 1 required");
    if (config.threads < 1)
        throw std::invalid_argument("search: threads >= 1 required");
}

int objective(const ColourClassView& view, Objective kind)
{
    switch (kind) {
    case Objective::double_star: return max_double_star(view).order();
    case Objective::triple: {
        auto t = max_triple_star(view);
        return t ? t->order() : 2;
    }
    case Objective::component: return max_component(view).size;
    }
    return 0;
}

int objective(const EdgeColouring& colouring, Objective kind) { return objective(ColourClassView(colouring), kind); }

namespace {

// Objective value plus how many witnesses attain it. Single-edge moves rarely
// change the maximum, so on a plateau the search prefers states where fewer
// witnesses need to be broken.
struct Energy {
    int value = 0;
    int ties = 0;
};

Energy energy(const EdgeColouring& colouring, Objective kind)
{
    const ColourClassView view(colouring);
    Energy e;
    auto offer = [&](int order) {
        if (order > e.value)
            e = {order, 1};
        else if (order == e.value)
            ++e.ties;
    };
    const int n = view.n();
    for (int k = 1; k <= view.m(); ++k) {
        const auto c = static_cast<Colour>(k);
        switch (kind) {
        case Objective::component:
            for (const auto& comp : colour_components(view, k)) {
                const int size = static_cast<int>(comp.size());
                e.value = std::max(e.value, size);
                e.ties += size * size;
            }
            break;
        case Objective::double_star:
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y : view.neighbours(c, x).members())
                    if (y > x)
                        offer(VertexSet::union_count(view.neighbours(c, x), view.neighbours(c, y)));
            break;
        case Objective::triple:
            for (Vertex x = 0; x < n; ++x) {
                const auto around = view.neighbours(c, x).members();
                for (std::size_t i = 0; i < around.size(); ++i)
                    for (std::size_t j = i + 1; j < around.size(); ++j)
                        offer(VertexSet::union_count(view.neighbours(c, around[i]), view.neighbours(c, x),
                                                     view.neighbours(c, around[j])));
            }
            break;
        }
    }
    if (kind == Objective::triple && e.value == 0)
        e = {2, 0};
    return e;
}

// Objective difference, or on equal objectives the relative change in ties,
// which lies strictly between -1 and 1.
double energy_delta(const Energy& from, const Energy& to)
{
    if (to.value != from.value)
        return static_cast<double>(to.value - from.value);
    if (to.ties == from.ties)
        return 0.0;
    return static_cast<double>(to.ties - from.ties) / static_cast<double>(to.ties + from.ties);
}

struct RestartOutcome {
    EdgeColouring best;
    int best_value = 0;
    std::vector<LogEntry> log;
};

RestartOutcome run_restart(const SearchConfig& config, int restart)
{
    SplitMix64 rng(config.seed + static_cast<std::uint64_t>(restart) * 0x9E3779B97F4A7C15ULL);
    const int n = config.n;
    const int r = config.r;
    EdgeColouring current(n, r);
    for (auto& c : current.colours())
        c = static_cast<Colour>(1 + rng.below(static_cast<std::uint64_t>(r)));

    Energy current_energy = energy(current, config.objective);
    RestartOutcome out{current, current_energy.value, {{restart, 0, current_energy.value}}};
    if (r == 1)
        return out;

    const auto edges = static_cast<std::uint64_t>(current.colours().size());
    const double cooling = config.cooling.to_double();
    double temperature = config.initial_temperature.to_double();

    for (std::int64_t it = 1; it <= config.iterations; ++it) {
        const auto e = static_cast<std::size_t>(rng.below(edges));
        const Colour old = current.colours()[e];
        // uniform over the r-1 other colours
        auto pick = static_cast<Colour>(1 + rng.below(static_cast<std::uint64_t>(r - 1)));
        const Colour fresh = pick >= old ? static_cast<Colour>(pick + 1) : pick;

        current.colours()[e] = fresh;
        const Energy next = energy(current, config.objective);
        const double delta = energy_delta(current_energy, next);
        const double roll = rng.unit();
        const bool accept = delta <= 0.0 || (temperature > 0.0 && roll < std::exp(-delta / temperature));
        if (accept) {
            current_energy = next;
            if (next.value < out.best_value) {
                out.best_value = next.value;
                out.best = current;
                out.log.push_back({restart, it, next.value});
            }
        } else {
            current.colours()[e] = old;
        }
        temperature *= cooling;
    }
    return out;
}

} // namespace

SearchResult anneal(const SearchConfig& config)
{
    validate(config);
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
    std::atomic<int> cursor{0};
    auto worker = [&] {
        for (int k = cursor++; k < config.restarts; k = cursor++)
            outcomes[static_cast<std::size_t>(k)] = run_restart(config, k);
    };
    const int threads = std::min(config.threads, config.restarts);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    SearchResult result;
    std::size_t best = 0;
    for (std::size_t k = 1; k < outcomes.size(); ++k)
        if (outcomes[k].best_value < outcomes[best].best_value)
            best = k;
    result.best_colouring = outcomes[best].best;
    result.best_objective = outcomes[best].best_value;
    result.best_restart = static_cast<int>(best);
    result.ratio = Rational(result.best_objective) * Rational(config.r - 1) / Rational(config.n);
    for (auto& o : outcomes)
        result.log.insert(result.log.end(), o.log.begin(), o.log.end());

    if (config.objective == Objective::triple && config.r >= 3 &&
        result.best_objective < global_bound(config.n, config.r).ceil())
        throw TheoremViolation("search found a colouring whose largest triple star (" +
                                   std::to_string(result.best_objective) + ") is below ceil(n/(r-1))",
                               result.best_colouring);
    return result;
}

} // namespace tristar::explorer
