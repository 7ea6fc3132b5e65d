#include "tristar/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "tristar/io.hpp"

namespace tristar {

namespace {

nlohmann::json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

int observed_for(const AnalysisReport& report, const std::string& name)
{
    if (name.rfind("component", 0) == 0)
        return report.max_component.size;
    if (name.rfind("double_star", 0) == 0)
        return report.max_double_star.order();
    return report.max_triple_star ? report.max_triple_star->order() : 2;
}

void add_registry(AnalysisReport& report, const BoundRegistry& reg, const std::string& label)
{
    for (const auto& b : reg.bounds) {
        if (!report.triple_computed && b.name.rfind("triple_star", 0) == 0)
            continue;
        report.bounds.push_back({label, b.name, b.value, observed_for(report, b.name)});
    }
}

} // namespace

AnalysisReport analyze(const EdgeColouring& colouring, AnalysisOptions options)
{
    const ColourClassView view(colouring);
    AnalysisReport report;
    report.n = colouring.n();
    report.m = colouring.m();
    report.colours_used = colouring.colours_used();
    report.locality = locality(colouring).locality;
    for (int c = 1; c <= colouring.m(); ++c) {
        std::vector<int> sizes;
        for (const auto& comp : colour_components(view, c))
            sizes.push_back(static_cast<int>(comp.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        report.component_sizes[c] = std::move(sizes);
    }
    report.max_component = max_component(view);
    report.max_double_star = max_double_star(view);
    report.triple_computed = options.triple;
    if (options.triple)
        report.max_triple_star = max_triple_star(view);

    add_registry(report, known_bounds(report.n, report.m, false), "global");
    add_registry(report, known_bounds(report.n, std::max(1, report.locality), true), "local");
    return report;
}

std::string to_json(const AnalysisReport& report)
{
    using nlohmann::json;
    json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["colours_used"] = report.colours_used;
    j["locality"] = report.locality;
    json sizes = json::object();
    for (const auto& [c, list] : report.component_sizes)
        sizes[std::to_string(c)] = list;
    j["component_sizes"] = sizes;
    j["max_component"] = {{"colour", report.max_component.colour},
                          {"size", report.max_component.size},
                          {"vertices", report.max_component.vertices}};
    const auto& ds = report.max_double_star;
    j["max_double_star"] = {{"colour", ds.colour},
                            {"centres", {ds.x, ds.y}},
                            {"order", ds.order()},
                            {"ratio", rational_json(Rational(ds.order(), report.n))}};
    if (!report.triple_computed) {
        j["max_triple_star"] = "skipped";
    } else if (report.max_triple_star) {
        const auto& ts = *report.max_triple_star;
        j["max_triple_star"] = {{"colour", ts.colour},
                                {"centres", ts.centres},
                                {"order", ts.order()},
                                {"ratio", rational_json(Rational(ts.order(), report.n))}};
    } else {
        j["max_triple_star"] = nullptr;
    }
    json bounds = json::array();
    for (const auto& b : report.bounds)
        bounds.push_back({{"registry", b.registry},
                          {"name", b.name},
                          {"value", rational_json(b.value)},
                          {"observed", b.observed},
                          {"met", b.met()}});
    j["bounds"] = bounds;
    return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& report)
{
    std::ostringstream os;
    os << "n = " << report.n << ", m = " << report.m << " (" << report.colours_used << " used), locality = "
       << report.locality << "\n";
    os << "component sizes by colour:\n";
    for (const auto& [c, sizes] : report.component_sizes) {
        os << "  colour " << c << ":";
        if (sizes.empty())
            os << " (no edges)";
        for (int s : sizes)
            os << ' ' << s;
        os << '\n';
    }
    os << "max component: colour " << report.max_component.colour << ", size " << report.max_component.size << '\n';
    const auto& ds = report.max_double_star;
    os << "max double star: colour " << ds.colour << ", centres (" << ds.x << ", " << ds.y << "), order "
       << ds.order() << ", ratio order/n = " << Rational(ds.order(), report.n) << " ~ "
       << Rational(ds.order(), report.n).to_double() << '\n';
    if (!report.triple_computed) {
        os << "max triple star: skipped\n";
    } else if (report.max_triple_star) {
        const auto& ts = *report.max_triple_star;
        os << "max triple star: colour " << ts.colour << ", centres (" << ts.centres[0] << ", " << ts.centres[1]
           << ", " << ts.centres[2] << "), order " << ts.order() << ", ratio order/n = "
           << Rational(ts.order(), report.n) << " ~ " << Rational(ts.order(), report.n).to_double() << '\n';
    } else {
        os << "max triple star: none (every colour class is a matching)\n";
    }
    os << "known bounds:\n";
    for (const auto& b : report.bounds)
        os << "  " << b.registry << ' ' << b.name << " >= " << b.value << " (~" << b.value.to_double()
           << "): observed " << b.observed << (b.met() ? "" : "  [below]") << '\n';
    return os.str();
}

std::string to_json(const oracle::ExhaustReport& report)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["n"] = report.n;
    j["r"] = report.r;
    j["mode"] = oracle::to_string(report.mode);
    j["colourings_checked"] = report.colourings_checked;
    j["minimum"] = report.minimum;
    j["witness"] = report.colourings_checked > 0 ? format_colouring(report.witness) : std::string();
    j["violations"] = report.violations;
    j["violation_count"] = report.violation_count;
    j["local"] = report.local;
    j["prove"] = report.prove;
    j["certificates_verified"] = report.certificates_verified;
    j["bound"] = report.bound ? ordered_json{{"num", report.bound->num()}, {"den", report.bound->den()}}
                              : ordered_json(nullptr);
    return j.dump(2) + "\n";
}

std::string to_text(const oracle::ExhaustReport& report)
{
    std::ostringstream os;
    os << "exhaustive " << (report.local ? "local " : "") << oracle::to_string(report.mode) << " check, n = "
       << report.n << ", r = " << report.r << '\n';
    os << "colourings checked: " << report.colourings_checked << '\n';
    os << "minimum: " << report.minimum << '\n';
    if (report.bound)
        os << "asserted bound: " << *report.bound << " (ceil " << report.bound->ceil() << ")\n";
    if (report.prove)
        os << "certificates verified: " << report.certificates_verified << '\n';
    os << "violations: " << report.violation_count << '\n';
    return os.str();
}

} // namespace tristar
