#include "cli.hpp"

#include "longhop/codes.hpp"
#include "longhop/compare.hpp"
#include "longhop/construct.hpp"
#include "longhop/error.hpp"
#include "longhop/optimize.hpp"
#include "longhop/routing.hpp"
#include "longhop/topology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace longhop::cli {

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool quiet = false;
    std::uint64_t seed = 1;

    void log(const std::string& msg) const {
        if (!quiet) err << "longhop: " << msg << '\n';
    }
};

class VerifyFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Context& ctx, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        ctx.out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write \"" + path + "\"");
    f << text;
    ctx.log("wrote " + path);
}

bool looks_like_hopset(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return line.compare(first, 2, "d=") == 0;
    }
    return false;
}

std::string with_file(const std::string& path, const std::exception& e) {
    return path + ": " + e.what();
}

// Hop-set files load directly; generator files go through code_to_network.
CayleyTopology load_topology(const std::string& path) {
    const std::string text = read_file(path);
    try {
        if (looks_like_hopset(text)) return parse_hopset(text);
        return code_to_network(parse_generator(text));
    } catch (const ParseError& e) {
        throw InputError(with_file(path, e));
    } catch (const InputError& e) {
        throw InputError(with_file(path, e));
    }
}

GeneratorMatrix load_generator(const std::string& path) {
    const std::string text = read_file(path);
    try {
        if (looks_like_hopset(text)) return network_to_code(parse_hopset(text));
        return parse_generator(text);
    } catch (const InputError& e) {
        throw InputError(with_file(path, e));
    }
}

// d-digit binary, 0b-prefixed binary, or decimal.
Word parse_node(const std::string& s, unsigned d) {
    if (s.rfind("0b", 0) == 0) return parse_binary(s.substr(2));
    const bool binary = s.size() == d && s.find_first_not_of("01") == std::string::npos;
    if (binary) return parse_binary(s);
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw InputError("");
        return v;
    } catch (...) {
        throw InputError("invalid node \"" + s + "\"");
    }
}

std::string join_ports(const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.ports.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(p.ports[i]);
    }
    return s;
}

std::string node_walk(const CayleyTopology& t, const Path& p, Word source) {
    std::string s = to_binary(source, t.dimension());
    Word x = source;
    for (unsigned port : p.ports) {
        x = t.neighbor(x, port);
        s += " > " + to_binary(x, t.dimension());
    }
    return s;
}

// ---- subcommands ---------------------------------------------------------

struct BisectArgs {
    std::string file;
    std::string method = "fwht";
    std::string format = "text";
    bool spectrum = false;
    unsigned max_d = kDefaultSpectrumCap;
};

int cmd_bisect(const Context& ctx, const BisectArgs& a) {
    const auto t = load_topology(a.file);
    SpectrumOptions opts;
    opts.max_dimension = a.max_d;
    SpectrumResult res;
    if (a.method == "scan") {
        res = bisection_scan(t, opts);
    } else if (a.method == "fwht") {
        res = bisection_fwht(t, opts);
    } else {
        res = bisection_fwht(t, opts);
        if (!(bisection_scan(t, opts) == res)) throw VerifyFailed("scan and fwht spectra differ");
    }
    const unsigned d = t.dimension();
    if (a.format == "json") {
        nlohmann::json j;
        j["d"] = d;
        j["m"] = t.degree();
        j["N"] = t.node_count();
        j["b"] = res.b;
        j["B"] = res.bisection_links();
        j["argmin_r"] = res.argmin_rs;
        if (a.spectrum) {
            j["cuts"] = res.cuts;
            j["alphas"] = res.alphas;
        }
        ctx.out << j.dump(2) << '\n';
        return kExitOk;
    }
    ctx.out << "d=" << d << " m=" << t.degree() << " N=" << t.node_count() << '\n';
    ctx.out << "b=" << res.b << '\n';
    ctx.out << "B=" << res.bisection_links() << '\n';
    ctx.out << "argmin_count=" << res.argmin_rs.size() << '\n';
    ctx.out << "argmin_r=";
    const std::size_t shown = a.spectrum ? res.argmin_rs.size()
                                         : std::min<std::size_t>(res.argmin_rs.size(), 64);
    for (std::size_t i = 0; i < shown; ++i) {
        ctx.out << (i ? "," : "") << to_binary(res.argmin_rs[i], d);
    }
    if (shown < res.argmin_rs.size()) ctx.out << ",...";
    ctx.out << '\n';
    if (a.spectrum) {
        ctx.out << "r,cut,alpha\n";
        for (std::size_t r = 0; r < res.cuts.size(); ++r) {
            ctx.out << to_binary(r, d) << ',' << res.cuts[r] << ',' << res.alphas[r] << '\n';
        }
    }
    return kExitOk;
}

int cmd_mindist(const Context& ctx, const std::string& file, std::size_t max_k) {
    const auto g = load_generator(file);
    const auto delta = min_distance(g, max_k);
    ctx.out << "n=" << g.cols() << " k=" << g.rows() << '\n';
    ctx.out << "Delta=" << delta << '\n';
    return kExitOk;
}

int cmd_convert(const Context& ctx, const std::string& file, const std::string& to,
                const std::string& output) {
    const std::string text = read_file(file);
    const bool is_hops = looks_like_hopset(text);
    try {
        if (to == "hops") {
            const auto t = is_hops ? parse_hopset(text) : code_to_network(parse_generator(text));
            write_output(ctx, output, emit_hopset(t));
        } else {
            const auto g = is_hops ? network_to_code(parse_hopset(text)) : parse_generator(text);
            write_output(ctx, output, emit_generator(g));
        }
    } catch (const InputError& e) {
        throw InputError(with_file(file, e));
    }
    return kExitOk;
}

struct OptimizeArgs {
    unsigned d = 0;
    unsigned m = 0;
    std::string method = "brute";
    unsigned swap = 1;
    unsigned rounds = 100;
    std::string start;
    std::string output;
    unsigned max_extra = 3;
    unsigned max_d = 5;
};

int cmd_optimize(const Context& ctx, const OptimizeArgs& a) {
    SearchReport report = [&] {
        if (a.method == "brute") {
            return brute_force_search(a.d, a.m, {a.max_extra, a.max_d});
        }
        if (!a.start.empty()) {
            return greedy_improve(load_topology(a.start).hop_set(), a.swap, a.rounds);
        }
        if (a.d == 0 || a.d > kMaxDimension) throw InputError("optimize: --d required");
        // Default start: the basis plus the smallest non-basis words.
        std::vector<Word> hops;
        for (unsigned i = 0; i < a.d; ++i) hops.push_back(Word{1} << i);
        for (Word w = 1; w < (Word{1} << a.d) && hops.size() < a.m; ++w) {
            if (weight(w) > 1) hops.push_back(w);
        }
        return greedy_improve(HopSet(a.d, std::move(hops)), a.swap, a.rounds);
    }();
    const CayleyTopology best(report.best_hops);
    std::string text = "# method=" + std::string(to_string(report.method)) +
                       " best_b=" + std::to_string(report.best_b) +
                       " evaluated=" + std::to_string(report.evaluated) +
                       " rounds=" + std::to_string(report.rounds) + "\n";
    text += emit_hopset(best);
    write_output(ctx, a.output, text);
    if (!a.output.empty() && a.output != "-") {
        ctx.out << "best_b=" << report.best_b << " evaluated=" << report.evaluated << '\n';
    }
    return kExitOk;
}

int cmd_routes(const Context& ctx, const std::string& file, const std::string& dest,
               const std::string& source, unsigned q, unsigned max_extra) {
    const auto t = load_topology(file);
    const Word x = source.empty() ? 0 : parse_node(source, t.dimension());
    const Word y = parse_node(dest, t.dimension());
    if (x >= t.node_count() || y >= t.node_count()) throw InputError("node out of range");
    if (x == y) throw InputError("routes: source equals destination");
    const Word rel = x ^ y;
    const auto shortest = shortest_paths(t, rel);
    ctx.out << "relative_destination=" << to_binary(rel, t.dimension()) << '\n';
    ctx.out << "shortest_paths=" << shortest.size() << " length=" << shortest.front().length()
            << '\n';
    for (const auto& p : shortest) ctx.out << "  " << join_ports(p) << '\n';
    const auto disjoint = disjoint_paths(t, rel, q, {max_extra});
    ctx.out << "disjoint_paths=" << disjoint.size() << '\n';
    for (std::size_t s = 0; s < disjoint.size(); ++s) {
        ctx.out << "  s=" << s + 1 << " ports=" << join_ports(disjoint[s])
                << " nodes=" << node_walk(t, disjoint[s], x) << '\n';
    }
    return kExitOk;
}

int cmd_ftable(const Context& ctx, const std::string& file, unsigned q, unsigned max_extra,
               const std::string& output) {
    const auto t = load_topology(file);
    const auto table = forwarding_table(t, q, {max_extra});
    ctx.log("forwarding table: " + std::to_string(table.entry_count()) + " entries");
    write_output(ctx, output, forwarding_table_csv(table));
    return kExitOk;
}

int cmd_cluster(const Context& ctx, const std::string& file, unsigned levels,
                const std::string& output) {
    const auto t = load_topology(file);
    const auto c = cluster(t, levels);
    std::string text = "# split_indices=";
    for (std::size_t i = 0; i < c.split_indices.size(); ++i) {
        text += (i ? "," : "") + to_binary(c.split_indices[i], t.dimension());
    }
    text += "\nnode,label\n";
    for (std::size_t x = 0; x < c.labels.size(); ++x) {
        text += to_binary(x, t.dimension()) + "," + std::to_string(c.labels[x]) + "\n";
    }
    write_output(ctx, output, text);
    return kExitOk;
}

struct CompareArgs {
    double ports = 0.0;
    double radix = 0.0;
    std::vector<unsigned> lh;
    std::vector<double> lh_hops;
    std::string code;
    unsigned levels = 4;
    std::string format = "text";
    std::string output;
};

int cmd_compare(const Context& ctx, const CompareArgs& a) {
    LhParams lh;
    if (!a.code.empty()) {
        lh = lh_params_from_code(load_generator(a.code));
    } else if (a.lh.size() == 3) {
        lh.dimension = a.lh[0];
        lh.hops_per_switch = a.lh[1];
        lh.min_distance = a.lh[2];
    } else {
        throw InputError("compare: give --code FILE or --lh d,m,Delta");
    }
    if (a.lh_hops.size() == 2) {
        lh.max_hops = static_cast<unsigned>(a.lh_hops[0]);
        lh.avg_hops = a.lh_hops[1];
    }
    const auto table = compare(a.ports, a.radix, lh, a.levels);
    std::string text;
    if (a.format == "csv") {
        text = format_csv(table);
    } else if (a.format == "json") {
        text = format_json(table);
    } else {
        text = format_text(table);
    }
    write_output(ctx, a.output, text);
    return kExitOk;
}

int cmd_verify(const Context& ctx, const std::string& file) {
    const auto t = load_topology(file);
    const unsigned d = t.dimension();
    const std::uint64_t n = t.node_count();
    bool ok = true;
    auto report = [&](bool pass, const std::string& name, const std::string& detail) {
        ctx.out << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
        ok = ok && pass;
    };
    auto skip = [&](const std::string& name, const std::string& why) {
        ctx.out << "SKIP " << name << ": " << why << '\n';
    };

    const auto scan = bisection_scan(t);
    const auto fast = bisection_fwht(t);
    report(scan == fast, "scan_vs_fwht",
           "b=" + std::to_string(scan.b) + " (fwht b=" + std::to_string(fast.b) + ")");

    bool spectrum_ok = scan.alphas[0] == static_cast<std::int32_t>(t.degree());
    for (std::uint64_t r = 1; r < n; ++r) spectrum_ok = spectrum_ok && scan.alphas[r] <= scan.alphas[0];
    report(spectrum_ok, "trivial_eigenvalue", "alpha_0=m=" + std::to_string(t.degree()) + " >= alpha_r");

    const auto edges = edge_list(t);
    if (n <= kBruteForceMaxNodes) {
        const auto brute = bisection_bruteforce(edges);
        report(brute == scan.bisection_links(), "equipartition_oracle",
               "brute force B=" + std::to_string(brute) + " links, Walsh B=" +
                   std::to_string(scan.bisection_links()));
    } else {
        skip("equipartition_oracle", "N=" + std::to_string(n) + " > 20");
    }

    if (d <= 12) {
        bool cuts_ok = true;
        std::vector<std::uint8_t> side(n);
        for (Word r = 0; r < n && cuts_ok; ++r) {
            for (Word x = 0; x < n; ++x) side[x] = static_cast<std::uint8_t>(walsh(r, x));
            cuts_ok = cut_links(edges, side) == static_cast<std::uint64_t>(scan.cuts[r]) * (n / 2);
        }
        report(cuts_ok, "walsh_cut_correspondence", "C_r * N/2 equals explicit partition cut for all r");
    } else {
        skip("walsh_cut_correspondence", "d > 12");
    }

    if (d <= kDefaultMinDistanceLimit) {
        const auto delta = min_distance(network_to_code(t));
        report(static_cast<std::int64_t>(delta) == scan.b, "code_distance",
               "min_distance=" + std::to_string(delta) + " b=" + std::to_string(scan.b));
    } else {
        skip("code_distance", "d > 28");
    }

    const auto normalized = CayleyTopology(normalize_basis(t.hop_set()));
    auto sorted_cuts = [](std::vector<std::int32_t> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    report(sorted_cuts(bisection_scan(normalized).cuts) == sorted_cuts(scan.cuts),
           "basis_invariance", "normalized hop set has the same cut multiset");

    std::mt19937_64 rng(ctx.seed);
    const Word source = std::uniform_int_distribution<Word>(0, n - 1)(rng);
    const auto h0 = distances(t, 0).histogram;
    const auto hx = distances(t, source).histogram;
    report(h0 == hx, "vertex_symmetry",
           "distance histogram from " + to_binary(source, d) + " matches node 0");

    if (!ok) throw VerifyFailed("verification failed");
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Long Hop Cayley-graph topologies: bisection, codes, routing, cost models",
                 "longhop"};
    app.require_subcommand(1);
    Context ctx{out, err};
    app.add_flag("--quiet,-q", ctx.quiet, "Suppress log messages");
    app.add_option("--seed", ctx.seed, "Seed for randomized checks")->capture_default_str();

    BisectArgs bisect;
    auto* c_bisect = app.add_subcommand("bisect", "Exact bisection of a hop set via Walsh spectra");
    c_bisect->add_option("file", bisect.file, "Hop-set or generator file")->required();
    c_bisect->add_option("--method", bisect.method)
        ->check(CLI::IsMember({"scan", "fwht", "both"}))->capture_default_str();
    c_bisect->add_option("--format", bisect.format)->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    c_bisect->add_flag("--spectrum", bisect.spectrum, "Print every C_r and alpha_r");
    c_bisect->add_option("--max-d", bisect.max_d, "Dimension cap for full spectra")
        ->capture_default_str();

    std::string mindist_file;
    std::size_t max_k = kDefaultMinDistanceLimit;
    auto* c_mindist = app.add_subcommand("mindist", "Minimum distance of a linear code");
    c_mindist->add_option("file", mindist_file, "Generator file")->required();
    c_mindist->add_option("--max-k", max_k, "Exhaustive enumeration limit")->capture_default_str();

    std::string convert_file, convert_to, convert_out;
    auto* c_convert = app.add_subcommand("convert", "Translate between generator and hop-set files");
    c_convert->add_option("file", convert_file)->required();
    c_convert->add_option("--to", convert_to)->required()->check(CLI::IsMember({"hops", "code"}));
    c_convert->add_option("-o,--output", convert_out);

    OptimizeArgs opt;
    auto* c_opt = app.add_subcommand("optimize", "Search for bisection-maximizing hop sets");
    c_opt->add_option("--d", opt.d, "Dimension");
    c_opt->add_option("--m", opt.m, "Hops per node");
    c_opt->add_option("--method", opt.method)->check(CLI::IsMember({"brute", "greedy"}))
        ->capture_default_str();
    c_opt->add_option("--swap", opt.swap, "Greedy swap width (1 or 2)")->capture_default_str();
    c_opt->add_option("--rounds", opt.rounds, "Greedy round cap")->capture_default_str();
    c_opt->add_option("--start", opt.start, "Greedy start hop set");
    c_opt->add_option("--max-extra", opt.max_extra, "Brute force budget: m - d")->capture_default_str();
    c_opt->add_option("--max-d", opt.max_d, "Brute force budget: d")->capture_default_str();
    c_opt->add_option("-o,--output", opt.output, "Result hop-set file");

    std::string routes_file, routes_dest, routes_src;
    unsigned routes_q = 1, routes_extra = 4;
    auto* c_routes = app.add_subcommand("routes", "Shortest and edge-disjoint paths");
    c_routes->add_option("file", routes_file)->required();
    c_routes->add_option("--dest", routes_dest)->required();
    c_routes->add_option("--source", routes_src);
    c_routes->add_option("--q", routes_q, "Path diversity")->capture_default_str();
    c_routes->add_option("--max-extra", routes_extra, "Detour length cap")->capture_default_str();

    std::string ftable_file, ftable_out;
    unsigned ftable_q = 2, ftable_extra = 4;
    auto* c_ftable = app.add_subcommand("ftable", "Forwarding table CSV");
    c_ftable->add_option("file", ftable_file)->required();
    c_ftable->add_option("--q", ftable_q, "Path diversity")->capture_default_str();
    c_ftable->add_option("--max-extra", ftable_extra, "Detour length cap")->capture_default_str();
    c_ftable->add_option("-o,--output", ftable_out);

    std::string cluster_file, cluster_out;
    unsigned cluster_levels = 1;
    auto* c_cluster = app.add_subcommand("cluster", "Recursive Walsh bisection clustering");
    c_cluster->add_option("file", cluster_file)->required();
    c_cluster->add_option("--levels", cluster_levels)->capture_default_str();
    c_cluster->add_option("-o,--output", cluster_out);

    CompareArgs cmp;
    auto* c_cmp = app.add_subcommand("compare", "Cost comparison against HC, FC and FT");
    c_cmp->add_option("--ports", cmp.ports, "Target ports P (default: set by the LH code)");
    c_cmp->add_option("--radix", cmp.radix, "Switch radix R")->required();
    c_cmp->add_option("--lh", cmp.lh, "LH code parameters d,m,Delta")->delimiter(',')->expected(3);
    c_cmp->add_option("--lh-hops", cmp.lh_hops, "Known LH max,avg hops")->delimiter(',')->expected(2);
    c_cmp->add_option("--code", cmp.code, "LH generator matrix file");
    c_cmp->add_option("--levels", cmp.levels, "Fat tree levels")->capture_default_str();
    c_cmp->add_option("--format", cmp.format)->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    c_cmp->add_option("-o,--output", cmp.output);

    std::string verify_file;
    auto* c_verify = app.add_subcommand("verify", "Cross-check spectral results against oracles");
    c_verify->add_option("file", verify_file)->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*c_bisect) return cmd_bisect(ctx, bisect);
        if (*c_mindist) return cmd_mindist(ctx, mindist_file, max_k);
        if (*c_convert) return cmd_convert(ctx, convert_file, convert_to, convert_out);
        if (*c_opt) return cmd_optimize(ctx, opt);
        if (*c_routes) return cmd_routes(ctx, routes_file, routes_dest, routes_src, routes_q, routes_extra);
        if (*c_ftable) return cmd_ftable(ctx, ftable_file, ftable_q, ftable_extra, ftable_out);
        if (*c_cluster) return cmd_cluster(ctx, cluster_file, cluster_levels, cluster_out);
        if (*c_cmp) return cmd_compare(ctx, cmp);
        if (*c_verify) return cmd_verify(ctx, verify_file);
    } catch (const VerifyFailed& e) {
        err << "longhop: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const InfeasibleError& e) {
        err << "longhop: infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const InputError& e) {
        err << "longhop: error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace longhop::cli
