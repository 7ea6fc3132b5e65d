#include "tristar/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "tristar/io.hpp"
#include "tristar/prover.hpp"

namespace tristar::oracle {

DoubleStar brute_max_double_star(const EdgeColouring& colouring)
{
    const int n = colouring.n();
    DoubleStar best;
    int best_order = 0;
    for (int c = 1; c <= colouring.m(); ++c)
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) {
                if (colouring.colour(x, y) != c)
                    continue;
                std::vector<Vertex> members;
                for (Vertex v = 0; v < n; ++v) {
                    const bool in = v == x || v == y || colouring.colour(v, x) == c || colouring.colour(v, y) == c;
                    if (in)
                        members.push_back(v);
                }
                if (static_cast<int>(members.size()) > best_order) {
                    best_order = static_cast<int>(members.size());
                    best = {static_cast<Colour>(c), x, y, std::move(members)};
                }
            }
    return best;
}

std::optional<TripleStar> brute_max_triple_star(const EdgeColouring& colouring)
{
    const int n = colouring.n();
    std::optional<TripleStar> best;
    for (int c = 1; c <= colouring.m(); ++c)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex x = 0; x < n; ++x)
                for (Vertex w = u + 1; w < n; ++w) {
                    if (x == u || x == w || colouring.colour(x, u) != c || colouring.colour(x, w) != c)
                        continue;
                    std::vector<Vertex> members;
                    for (Vertex v = 0; v < n; ++v) {
                        bool in = v == u || v == x || v == w;
                        for (Vertex centre : {u, x, w})
                            in = in || (v != centre && colouring.colour(v, centre) == c);
                        if (in)
                            members.push_back(v);
                    }
                    if (!best || members.size() > best->vertices.size())
                        best = TripleStar{static_cast<Colour>(c), {u, x, w}, std::move(members), false};
                }
    return best;
}

namespace {

using Count = std::uint64_t;
constexpr Count kSaturated = std::numeric_limits<Count>::max();

Count sat_add(Count a, Count b) { return a > kSaturated - b ? kSaturated : a + b; }
Count sat_mul(Count a, Count b) { return (b != 0 && a > kSaturated / b) ? kSaturated : a * b; }

/// Odometer over colour vectors with positions [0, frozen) held fixed.
/// Canonical mode bounds position p by 1 + max(prefix), capped at r.
class Odometer {
public:
    Odometer(std::vector<Colour> start, std::size_t frozen, int r, bool canonical)
        : a_(std::move(start)), frozen_(frozen), r_(r), canonical_(canonical)
    {
    }

    const std::vector<Colour>& value() const { return a_; }

    bool next()
    {
        for (std::size_t p = a_.size(); p-- > frozen_;) {
            if (a_[p] < limit(p)) {
                ++a_[p];
                std::fill(a_.begin() + static_cast<std::ptrdiff_t>(p) + 1, a_.end(), Colour{1});
                return true;
            }
        }
        return false;
    }

private:
    Colour limit(std::size_t p) const
    {
        if (!canonical_)
            return static_cast<Colour>(r_);
        Colour top = 0;
        for (std::size_t i = 0; i < p; ++i)
            top = std::max(top, a_[i]);
        return static_cast<Colour>(std::min<int>(r_, top + 1));
    }

    std::vector<Colour> a_;
    std::size_t frozen_;
    int r_;
    bool canonical_;
};

/// Restricted-growth strings of the given length over at most r symbols:
/// sum of Stirling numbers S(len, k), k = 1..r.
Count restricted_growth_count(std::size_t len, int r)
{
    if (len == 0)
        return 1;
    // ways[k] = strings so far using exactly k symbols
    std::vector<Count> ways(static_cast<std::size_t>(r) + 1, 0);
    ways[1] = 1;
    for (std::size_t pos = 1; pos < len; ++pos) {
        std::vector<Count> next(ways.size(), 0);
        for (std::size_t k = 1; k < ways.size(); ++k) {
            if (ways[k] == 0)
                continue;
            next[k] = sat_add(next[k], sat_mul(ways[k], k));
            if (k + 1 < ways.size())
                next[k + 1] = sat_add(next[k + 1], ways[k]);
        }
        ways = std::move(next);
    }
    Count total = 0;
    for (Count w : ways)
        total = sat_add(total, w);
    return total;
}

/// Per-worker accumulator; merge() is associative and commutative.
struct Tally {
    Count checked = 0;
    Count verified = 0;
    int minimum = std::numeric_limits<int>::max();
    std::vector<Colour> witness;
    std::vector<std::pair<std::vector<Colour>, std::string>> violations;
    Count violation_count = 0;

    static constexpr std::size_t kKept = 10;

    void observe_minimum(int value, const std::vector<Colour>& colours)
    {
        if (value < minimum || (value == minimum && colours < witness)) {
            minimum = value;
            witness = colours;
        }
    }

    void add_violation(const std::vector<Colour>& colours, std::string what)
    {
        ++violation_count;
        violations.emplace_back(colours, std::move(what));
        std::sort(violations.begin(), violations.end());
        if (violations.size() > kKept)
            violations.resize(kKept);
    }

    void merge(const Tally& o)
    {
        checked += o.checked;
        verified += o.verified;
        if (o.checked > 0)
            observe_minimum(o.minimum, o.witness);
        for (const auto& v : o.violations)
            violations.push_back(v);
        violation_count += o.violation_count;
        std::sort(violations.begin(), violations.end());
        if (violations.size() > kKept)
            violations.resize(kKept);
    }
};

using Visitor = std::function<void(const EdgeColouring&, Tally&)>;

/// Runs `visit` over every colouring, splitting the space by prefix across
/// worker threads.
Tally parallel_sweep(int n, int r, bool canonical, int threads, const Visitor& visit)
{
    const std::size_t edges = static_cast<std::size_t>(edge_count(n));
    threads = std::max(1, threads);

    // prefix depth: enough work units to balance, never the whole vector
    std::size_t depth = 0;
    auto units = [&](std::size_t len) {
        if (canonical)
            return restricted_growth_count(len, r);
        Count total = 1;
        for (std::size_t i = 0; i < len; ++i)
            total = sat_mul(total, static_cast<Count>(r));
        return total;
    };
    while (depth < edges && depth < 8 && units(depth) < static_cast<Count>(64 * threads))
        ++depth;

    std::vector<std::vector<Colour>> prefixes;
    if (depth == 0) {
        prefixes.emplace_back();
    } else {
        Odometer prefix(std::vector<Colour>(depth, 1), 0, r, canonical);
        do
            prefixes.push_back(prefix.value());
        while (prefix.next());
    }

    std::atomic<std::size_t> cursor{0};
    std::vector<Tally> tallies(static_cast<std::size_t>(threads));
    auto worker = [&](std::size_t id) {
        Tally& tally = tallies[id];
        EdgeColouring scratch(n, r);
        for (std::size_t i = cursor++; i < prefixes.size(); i = cursor++) {
            std::vector<Colour> start = prefixes[i];
            start.resize(edges, 1);
            Odometer odo(std::move(start), depth, r, canonical);
            do {
                scratch.colours() = odo.value();
                visit(scratch, tally);
            } while (odo.next());
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker, static_cast<std::size_t>(t));
        for (auto& th : pool)
            th.join();
    }

    Tally total;
    for (const auto& t : tallies)
        total.merge(t);
    return total;
}

ExhaustReport make_report(int n, int r, CheckMode mode, bool prove, bool local, std::optional<Rational> bound,
                          const Tally& tally)
{
    ExhaustReport report;
    report.n = n;
    report.r = r;
    report.mode = mode;
    report.prove = prove;
    report.local = local;
    report.bound = bound;
    report.colourings_checked = tally.checked;
    report.certificates_verified = tally.verified;
    report.violation_count = tally.violation_count;
    if (tally.checked > 0) {
        report.minimum = tally.minimum;
        const int m = local ? std::max<int>(1, *std::max_element(tally.witness.begin(), tally.witness.end())) : r;
        report.witness = EdgeColouring(n, m, tally.witness);
    }
    for (const auto& [colours, what] : tally.violations) {
        const int m = local ? *std::max_element(colours.begin(), colours.end()) : r;
        report.violations.push_back(what + "\n" + format_colouring(EdgeColouring(n, m, colours)));
    }
    return report;
}

/// Largest monochromatic object of the given kind; a missing triple star
/// counts as a lone edge (order 2).
int objective_value(const ColourClassView& view, CheckMode mode)
{
    switch (mode) {
    case CheckMode::triple: {
        auto t = max_triple_star(view);
        return t ? t->order() : 2;
    }
    case CheckMode::double_star: return max_double_star(view).order();
    case CheckMode::component: return max_component(view).size;
    }
    return 0;
}

void prove_and_verify(const ColourClassView& view, ProofMode mode, int r, int exact_triple, Tally& tally)
{
    try {
        const auto cert = prove(view, mode, r);
        const auto verdict = verify_certificate(view.colouring(), cert);
        if (!verdict)
            tally.add_violation(view.colouring().colours(),
                                "certificate rejected: " + to_string(*verdict.reason) + " (" + verdict.detail + ")");
        else if (exact_triple > 0 && cert.order() > exact_triple)
            tally.add_violation(view.colouring().colours(), "certificate order exceeds the exact maximum");
        else
            ++tally.verified;
    } catch (const TheoremViolation& e) {
        tally.add_violation(view.colouring().colours(), std::string("theorem violation: ") + e.what());
    }
}

} // namespace

std::uint64_t enumeration_count(int n, int r, bool canonical)
{
    const auto edges = static_cast<std::size_t>(edge_count(n));
    if (canonical)
        return restricted_growth_count(edges, r);
    Count total = 1;
    for (std::size_t i = 0; i < edges; ++i)
        total = sat_mul(total, static_cast<Count>(r));
    return total;
}

std::uint64_t enumerate_colourings(const EnumerationSpec& spec,
                                   const std::function<void(const EdgeColouring&)>& visit)
{
    if (spec.n < 2 || spec.r < 1)
        throw std::invalid_argument("enumeration needs n >= 2 and r >= 1");
    const Count required = enumeration_count(spec.n, spec.r, spec.canonical);
    const auto edges = static_cast<std::size_t>(edge_count(spec.n));
    Odometer odo(std::vector<Colour>(edges, 1), 0, spec.r, spec.canonical);
    EdgeColouring current(spec.n, spec.r);
    Count produced = 0;
    do {
        if (produced == spec.budget)
            throw BudgetExceeded(produced, required);
        current.colours() = odo.value();
        visit(current);
        ++produced;
    } while (odo.next());
    return produced;
}

std::string to_string(CheckMode mode)
{
    switch (mode) {
    case CheckMode::triple: return "triple";
    case CheckMode::double_star: return "double";
    case CheckMode::component: return "component";
    }
    return "unknown";
}

std::optional<CheckMode> parse_check_mode(const std::string& text)
{
    if (text == "triple")
        return CheckMode::triple;
    if (text == "double")
        return CheckMode::double_star;
    if (text == "component")
        return CheckMode::component;
    return std::nullopt;
}

ExhaustReport exhaustive_theorem_check(int n, int r, CheckMode mode, bool prove, int threads, std::uint64_t budget)
{
    if (n < 2 || r < 1)
        throw std::invalid_argument("exhaustive check needs n >= 2 and r >= 1");
    if (prove && r < 3)
        throw std::invalid_argument("theorem requires r >= 3 for --prove");
    const Count required = enumeration_count(n, r, true);
    if (required > budget)
        throw BudgetExceeded(0, required);

    std::optional<Rational> bound;
    if (mode == CheckMode::triple && r >= 3)
        bound = global_bound(n, r);
    else if (mode == CheckMode::component)
        bound = r >= 2 ? global_bound(n, r) : Rational(n);
    const std::int64_t target = bound ? bound->ceil() : 0;

    const Tally tally = parallel_sweep(n, r, true, threads, [&](const EdgeColouring& colouring, Tally& t) {
        ColourClassView view(colouring);
        ++t.checked;
        const int value = objective_value(view, mode);
        t.observe_minimum(value, colouring.colours());
        if (bound && value < target)
            t.add_violation(colouring.colours(), "objective " + std::to_string(value) + " below ceil(" +
                                                     bound->str() + ")");
        if (prove)
            prove_and_verify(view, ProofMode::global, r, mode == CheckMode::triple ? value : 0, t);
    });
    return make_report(n, r, mode, prove, false, bound, tally);
}

ExhaustReport exhaustive_local_check(int n, int r, bool prove, int threads, std::uint64_t budget)
{
    if (n < 2 || r < 3)
        throw std::invalid_argument("local exhaustive check needs n >= 2 and r >= 3");
    const int labels = static_cast<int>(edge_count(n));
    if (labels > 65535)
        throw std::invalid_argument("local exhaustive check: n too large");
    const Count required = enumeration_count(n, labels, true);
    if (required > budget)
        throw BudgetExceeded(0, required);

    const Rational bound = local_bound(n, r);
    const std::int64_t target = bound.ceil();

    const Tally tally = parallel_sweep(n, labels, true, threads, [&](const EdgeColouring& raw, Tally& t) {
        const Colour top = *std::max_element(raw.colours().begin(), raw.colours().end());
        const EdgeColouring colouring(n, top, raw.colours());
        if (locality(colouring).locality > r)
            return;
        ColourClassView view(colouring);
        ++t.checked;
        const int value = objective_value(view, CheckMode::triple);
        t.observe_minimum(value, colouring.colours());
        if (value < target)
            t.add_violation(colouring.colours(), "objective " + std::to_string(value) + " below ceil(" +
                                                     bound.str() + ")");
        if (prove)
            prove_and_verify(view, ProofMode::local, r, value, t);
    });
    return make_report(n, r, CheckMode::triple, prove, true, bound, tally);
}

} // namespace tristar::oracle
