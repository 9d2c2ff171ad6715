#include "longhop/compare.hpp"

#include "longhop/construct.hpp"
#include "longhop/error.hpp"
#include "longhop/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace longhop {

namespace {

constexpr double kMinDimension = 1.0;
constexpr double kMaxCostDimension = 32.0;
constexpr double kEps = 1e-9;

std::string fixed(double v, int decimals = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// Root of an increasing function on [lo, hi] by bisection.
double solve_increasing(const std::function<double(double)>& f, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void check_target(double ports, double radix) {
    if (!(ports > 0.0) || !(radix > 0.0)) {
        throw InputError("ports and radix must be positive");
    }
}

// Solves ln P = delta ln 2 + ln(ports-per-switch factor(delta)) for a
// dimension model of the form P = c R 2^delta / (delta + offset).
double solve_dimension(double ports, double radix, double c, double offset, const char* what,
                       bool& degenerate) {
    auto g = [&](double delta) {
        return delta * std::log(2.0) + std::log(c * radix) - std::log(delta + offset) -
               std::log(ports);
    };
    const double at_min = g(kMinDimension);
    if (std::fabs(at_min) <= 1e-12) {
        degenerate = true;
        return kMinDimension;
    }
    if (at_min > 0.0 || g(kMaxCostDimension) < 0.0) {
        throw InfeasibleError(std::string(what) + ": no dimension in (1, 32) yields P=" +
                              fixed(ports, 0) + " at radix " + fixed(radix, 0));
    }
    degenerate = false;
    return solve_increasing(g, kMinDimension, kMaxCostDimension);
}

struct NaturalConfig {
    double ports;
    double avg_hops;
};

// Mean hops at P, linear in P between the nearest lower and higher natural
// (integer dimension, integer trunking) configurations.
double interpolate_avg(const std::vector<NaturalConfig>& configs, double ports, bool& clamped) {
    const NaturalConfig* lo = nullptr;
    const NaturalConfig* hi = nullptr;
    for (const auto& c : configs) {
        if (c.ports <= ports * (1 + kEps) && (lo == nullptr || c.ports > lo->ports)) lo = &c;
        if (c.ports >= ports * (1 - kEps) && (hi == nullptr || c.ports < hi->ports)) hi = &c;
    }
    clamped = lo == nullptr || hi == nullptr;
    if (lo == nullptr && hi == nullptr) return 0.0;
    if (lo == nullptr) return hi->avg_hops;
    if (hi == nullptr) return lo->avg_hops;
    if (hi->ports - lo->ports <= kEps * ports) return lo->avg_hops;
    const double t = (ports - lo->ports) / (hi->ports - lo->ports);
    return lo->avg_hops + t * (hi->avg_hops - lo->avg_hops);
}

std::vector<NaturalConfig> natural_configs(double radix, unsigned port_overhead,
                                           double server_factor,
                                           const std::function<double(unsigned)>& avg) {
    std::vector<NaturalConfig> out;
    for (unsigned d = 1; d <= 32; ++d) {
        const double q = std::floor(radix / (d + port_overhead) + kEps);
        if (q < 1.0) break;
        out.push_back({server_factor * q * std::ldexp(1.0, static_cast<int>(d)), avg(d)});
    }
    return out;
}

ComparisonRow single_switch(Family f, double ports) {
    ComparisonRow row;
    row.family = f;
    row.switches = 1.0;
    row.ports_per_switch = ports;
    row.cables_per_port = 0.0;
    row.max_hops = 0;
    row.avg_hops = 0.0;
    row.degenerate = true;
    row.note = "P fits on a single switch";
    return row;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::LH: return "LH";
        case Family::HC: return "HC";
        case Family::FC: return "FC";
        case Family::FT: return "FT";
    }
    return "?";
}

Family family_from_string(std::string_view name) {
    for (Family f : {Family::LH, Family::HC, Family::FC, Family::FT}) {
        if (to_string(f) == name) return f;
    }
    throw InputError("unknown topology family \"" + std::string(name) + "\"");
}

std::string ComparisonRow::describe() const {
    switch (family) {
        case Family::LH:
            return "LH(d=" + std::to_string(static_cast<unsigned>(dimension)) +
                   ", m=" + std::to_string(hops_per_switch) +
                   ", Delta=" + std::to_string(min_distance) + ") Q=" + fixed(trunking, 3);
        case Family::HC: return "HC(dimension " + fixed(dimension, 3) + ") Q=" + fixed(trunking, 3);
        case Family::FC: return "FC(dimension " + fixed(dimension, 3) + ") Q=" + fixed(trunking, 3);
        case Family::FT:
            return "FT Levels L=" + std::to_string(static_cast<unsigned>(dimension)) +
                   " Q=" + fixed(trunking, 6);
    }
    return {};
}

double folded_cube_avg_hops(unsigned d) {
    // Node x sits at distance min(|x|, d + 1 - |x|).
    double coeff = 1.0;  // C(d, w) / 2^d, built incrementally
    for (unsigned i = 0; i < d; ++i) coeff *= 0.5;
    double total = 0.0;
    for (unsigned w = 0; w <= d; ++w) {
        total += coeff * std::min(w, d + 1 - w);
        coeff = coeff * (d - w) / (w + 1);
    }
    return total;
}

ComparisonRow model_hc(double ports, double radix) {
    check_target(ports, radix);
    ComparisonRow row;
    row.family = Family::HC;
    const double delta = solve_dimension(ports, radix, 1.0, 1.0, "model_hc", row.degenerate);
    row.dimension = delta;
    row.trunking = radix / (delta + 1.0);
    row.switches = std::exp2(delta);
    row.ports_per_switch = row.trunking;
    row.cables_per_port = delta / 2.0;
    row.max_hops = static_cast<unsigned>(std::ceil(delta - 1e-6));
    bool clamped = false;
    row.avg_hops = interpolate_avg(
        natural_configs(radix, 1, 1.0, [](unsigned d) { return d / 2.0; }), ports, clamped);
    if (row.degenerate) row.note = "degenerate: dimension 1";
    if (clamped) row.note = "average hops outside the natural configuration range";
    return row;
}

ComparisonRow model_fc(double ports, double radix) {
    check_target(ports, radix);
    ComparisonRow row;
    row.family = Family::FC;
    const double delta = solve_dimension(ports, radix, 2.0, 3.0, "model_fc", row.degenerate);
    row.dimension = delta;
    row.trunking = radix / (delta + 3.0);
    row.switches = std::exp2(delta);
    row.ports_per_switch = 2.0 * row.trunking;
    row.cables_per_port = (delta + 1.0) / 4.0;
    row.max_hops = static_cast<unsigned>(std::ceil(delta / 2.0 - 1e-6));
    bool clamped = false;
    row.avg_hops =
        interpolate_avg(natural_configs(radix, 3, 2.0, folded_cube_avg_hops), ports, clamped);
    if (row.degenerate) row.note = "degenerate: dimension 1";
    if (clamped) row.note = "average hops outside the natural configuration range";
    return row;
}

ComparisonRow model_ft(double ports, double radix, unsigned levels) {
    check_target(ports, radix);
    if (levels < 2) throw InputError("model_ft: fat tree needs L >= 2 levels");
    const double half = radix / 2.0;
    const double l = levels;
    const double trunk = std::pow(2.0 * std::pow(half, l) / ports, 1.0 / (l - 1.0));
    if (trunk < 1.0 - kEps) {
        throw InfeasibleError("model_ft: P=" + fixed(ports, 0) + " exceeds the capacity of a " +
                              std::to_string(levels) + "-level fat tree at radix " +
                              fixed(radix, 0) + " (trunking " + fixed(trunk) + " < 1)");
    }
    ComparisonRow row;
    row.family = Family::FT;
    row.dimension = l;
    row.trunking = trunk;
    row.switches = (2.0 * l - 1.0) * std::pow(half / trunk, l - 1.0);
    row.ports_per_switch = radix / (2.0 * l - 1.0);
    row.cables_per_port = l - 1.0;
    row.max_hops = 2 * (levels - 1);
    // A level-j subtree holds (R/2)^j of the 2 (R/2)^L ports; leaving it
    // costs two more links.
    double avg = 2.0 * (l - 1.0);
    for (unsigned i = 1; i < levels; ++i) avg -= std::pow(2.0 / radix, i);
    row.avg_hops = avg;
    return row;
}

LhParams lh_params_from_code(const GeneratorMatrix& g) {
    const auto topo = code_to_network(g);
    const auto stats = distances(topo);
    LhParams p;
    p.dimension = topo.dimension();
    p.hops_per_switch = static_cast<unsigned>(topo.degree());
    p.min_distance = static_cast<unsigned>(min_distance(g));
    p.max_hops = stats.diameter;
    p.avg_hops = stats.avg_hops_with_self;
    return p;
}

ComparisonRow model_lh(double ports, double radix, const LhParams& lh) {
    if (!(radix > 0.0)) throw InputError("radix must be positive");
    if (lh.dimension == 0 || lh.dimension > kMaxDimension || lh.min_distance == 0 ||
        lh.hops_per_switch < lh.dimension) {
        throw InputError("model_lh: invalid code parameters (d, m, Delta)");
    }
    const double n = std::exp2(lh.dimension);
    const double delta = lh.min_distance;
    const double m = lh.hops_per_switch;
    const double trunk = ports > 0.0 ? ports / (delta * n) : radix / (m + delta);
    if ((m + delta) * trunk > radix * (1 + kEps)) {
        throw InfeasibleError("model_lh: m + Delta = " + fixed(m + delta, 0) + " ports at trunking " +
                              fixed(trunk, 3) + " exceed radix " + fixed(radix, 0));
    }
    ComparisonRow row;
    row.family = Family::LH;
    row.dimension = lh.dimension;
    row.hops_per_switch = lh.hops_per_switch;
    row.min_distance = lh.min_distance;
    row.trunking = trunk;
    row.switches = n;
    row.ports_per_switch = delta * trunk;
    row.cables_per_port = m / (2.0 * delta);
    row.max_hops = lh.max_hops;
    row.avg_hops = lh.avg_hops;
    return row;
}

ComparisonRow model_lh(double ports, double radix, const GeneratorMatrix& g) {
    return model_lh(ports, radix, lh_params_from_code(g));
}

double ComparisonTable::switches_norm(const ComparisonRow& r) const {
    const double base = lh().switches;
    return base > 0.0 ? 100.0 * r.switches / base : 100.0;
}

double ComparisonTable::cabling_norm(const ComparisonRow& r) const {
    const double base = lh().cables_per_port;
    return base > 0.0 ? 100.0 * r.cables_per_port / base : 100.0;
}

ComparisonTable compare(double ports, double radix, const LhParams& lh, unsigned ft_levels) {
    ComparisonTable table;
    table.radix = radix;
    auto lh_row = model_lh(ports, radix, lh);
    table.ports = lh_row.switches * lh_row.ports_per_switch;
    if (table.ports <= radix) {
        for (Family f : {Family::LH, Family::FT, Family::FC, Family::HC}) {
            table.rows.push_back(single_switch(f, table.ports));
        }
        return table;
    }
    table.rows.push_back(std::move(lh_row));
    table.rows.push_back(model_ft(table.ports, radix, ft_levels));
    table.rows.push_back(model_fc(table.ports, radix));
    table.rows.push_back(model_hc(table.ports, radix));
    return table;
}

std::string format_text(const ComparisonTable& t) {
    std::string out = "NETWORKS COMPARED WITH THE LONG HOP (LH) NETWORK\n";
    for (const auto& r : t.rows) out += "  " + r.describe() + (r.note.empty() ? "" : "  [" + r.note + "]") + "\n";
    out += "  FB, DF: unsupported\n";
    out += "TARGET: Ports P=" + fixed(t.ports, 0) + ", Switch radix R=" + fixed(t.radix, 0) +
           ", Oversubscription ovs=1\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %16s %12s %12s %12s %12s %5s %12s\n", "##",
                  "#Switches", "Ports/Sw.", "Switches", "Cables/Pt", "Cabling", "Max",
                  "Avg Hops");
    out += line;
    for (const auto& r : t.rows) {
        const std::string max = r.max_hops ? std::to_string(*r.max_hops) : "n/a";
        const std::string avg = r.avg_hops ? fixed(*r.avg_hops) : "n/a";
        std::snprintf(line, sizeof line, "%-4s %16s %12s %12s %12s %12s %5s %12s\n",
                      std::string(to_string(r.family)).c_str(), fixed(r.switches).c_str(),
                      fixed(r.ports_per_switch).c_str(), fixed(t.switches_norm(r)).c_str(),
                      fixed(r.cables_per_port).c_str(), fixed(t.cabling_norm(r)).c_str(),
                      max.c_str(), avg.c_str());
        out += line;
    }
    out += "LH advantage ratios:";
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        out += " " + std::string(to_string(r.family)) + " switches x" +
               fixed(t.switches_norm(r) / 100.0, 3) + " cables x" +
               fixed(t.cabling_norm(r) / 100.0, 3) + (i + 1 < t.rows.size() ? ";" : "");
    }
    out += "\n";
    return out;
}

std::string format_csv(const ComparisonTable& t) {
    std::string out =
        "family,switches,ports_per_switch,switches_norm,cables_per_port,cabling_norm,max_hops,"
        "avg_hops\n";
    for (const auto& r : t.rows) {
        out += std::string(to_string(r.family)) + "," + fixed(r.switches) + "," +
               fixed(r.ports_per_switch) + "," + fixed(t.switches_norm(r)) + "," +
               fixed(r.cables_per_port) + "," + fixed(t.cabling_norm(r)) + "," +
               (r.max_hops ? std::to_string(*r.max_hops) : "") + "," +
               (r.avg_hops ? fixed(*r.avg_hops) : "") + "\n";
    }
    return out;
}

std::string format_json(const ComparisonTable& t) {
    using nlohmann::json;
    json doc;
    doc["target"] = {{"ports", t.ports}, {"radix", t.radix}, {"oversubscription", 1}};
    json rows = json::array();
    for (const auto& r : t.rows) {
        json j;
        j["family"] = to_string(r.family);
        j["params"] = r.describe();
        j["dimension"] = r.dimension;
        j["trunking"] = r.trunking;
        j["hops_per_switch"] = r.hops_per_switch;
        j["min_distance"] = r.min_distance;
        j["switches"] = r.switches;
        j["ports_per_switch"] = r.ports_per_switch;
        j["switches_norm"] = t.switches_norm(r);
        j["cables_per_port"] = r.cables_per_port;
        j["cabling_norm"] = t.cabling_norm(r);
        j["max_hops"] = r.max_hops ? json(*r.max_hops) : json(nullptr);
        j["avg_hops"] = r.avg_hops ? json(*r.avg_hops) : json(nullptr);
        j["degenerate"] = r.degenerate;
        j["note"] = r.note;
        rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
    doc["unsupported"] = json::array({"FB", "DF"});
    return doc.dump(2) + "\n";
}

ComparisonTable parse_comparison_json(std::string_view text) {
    using nlohmann::json;
    try {
        const json doc = json::parse(text);
        ComparisonTable t;
        t.ports = doc.at("target").at("ports").get<double>();
        t.radix = doc.at("target").at("radix").get<double>();
        for (const auto& j : doc.at("rows")) {
            ComparisonRow r;
            r.family = family_from_string(j.at("family").get<std::string>());
            r.dimension = j.at("dimension").get<double>();
            r.trunking = j.at("trunking").get<double>();
            r.hops_per_switch = j.at("hops_per_switch").get<unsigned>();
            r.min_distance = j.at("min_distance").get<unsigned>();
            r.switches = j.at("switches").get<double>();
            r.ports_per_switch = j.at("ports_per_switch").get<double>();
            r.cables_per_port = j.at("cables_per_port").get<double>();
            if (!j.at("max_hops").is_null()) r.max_hops = j.at("max_hops").get<unsigned>();
            if (!j.at("avg_hops").is_null()) r.avg_hops = j.at("avg_hops").get<double>();
            r.degenerate = j.at("degenerate").get<bool>();
            r.note = j.at("note").get<std::string>();
            t.rows.push_back(std::move(r));
        }
        if (t.rows.empty()) throw InputError("comparison JSON has no rows");
        return t;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed comparison JSON: ") + e.what());
    }
}

}  // namespace longhop
