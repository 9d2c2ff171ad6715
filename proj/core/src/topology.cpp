#include "longhop/topology.hpp"

#include "longhop/error.hpp"
#include "parallel.hpp"
#include "text_lines.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <unordered_set>

namespace longhop {

namespace {

void check_dimension(unsigned d, unsigned cap, const char* what) {
    if (d > cap) {
        throw InfeasibleError(std::string(what) + ": d=" + std::to_string(d) +
                              " exceeds the configured cap " + std::to_string(cap));
    }
}

void finish_spectrum(SpectrumResult& res) {
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    for (std::size_t r = 1; r < res.cuts.size(); ++r) best = std::min(best, res.cuts[r]);
    res.b = res.cuts.size() > 1 ? best : 0;
    for (std::size_t r = 1; r < res.cuts.size(); ++r) {
        if (res.cuts[r] == best) res.argmin_rs.push_back(r);
    }
}

}  // namespace

HopSet::HopSet(unsigned dimension, std::vector<Word> hops)
    : dimension_(dimension), hops_(std::move(hops)) {
    if (dimension == 0 || dimension > kMaxDimension) {
        throw InputError("dimension d must be in [1, 32], got " + std::to_string(dimension));
    }
    std::unordered_set<Word> seen;
    for (std::size_t s = 0; s < hops_.size(); ++s) {
        const Word h = hops_[s];
        const std::string where = "hop " + std::to_string(s + 1);
        if (h == 0) throw InputError(where + " is zero (self-loop)");
        if (h >> dimension != 0) {
            throw InputError(where + " does not fit in d=" + std::to_string(dimension) + " bits");
        }
        if (!seen.insert(h).second) {
            throw InputError(where + " duplicates an earlier hop (multi-edge)");
        }
    }
    const unsigned rank = gf2_rank(hops_);
    if (rank < dimension) {
        throw InputError("hops span rank " + std::to_string(rank) + " < d=" +
                         std::to_string(dimension) + " (disconnected graph)");
    }
}

std::vector<Neighbor> CayleyTopology::neighbors(Word x) const {
    if (x >= node_count()) {
        throw InputError("node " + std::to_string(x) + " out of range [0, " +
                         std::to_string(node_count()) + ")");
    }
    std::vector<Neighbor> out;
    out.reserve(degree());
    for (unsigned s = 1; s <= degree(); ++s) out.push_back({s, neighbor(x, s)});
    return out;
}

CayleyTopology build(unsigned dimension, std::vector<Word> hops) {
    return CayleyTopology(HopSet(dimension, std::move(hops)));
}

unsigned cut_walsh(const CayleyTopology& t, Word r) noexcept {
    unsigned cut = 0;
    for (Word h : t.hops()) cut += static_cast<unsigned>(parity(r & h));
    return cut;
}

SpectrumResult bisection_scan(const CayleyTopology& t, const SpectrumOptions& opts) {
    check_dimension(t.dimension(), opts.max_dimension, "bisection_scan");
    const std::uint64_t n = t.node_count();
    const auto m = static_cast<std::int32_t>(t.degree());
    SpectrumResult res;
    res.node_count = n;
    res.cuts.assign(n, 0);
    res.alphas.assign(n, 0);

    const auto hops = t.hops();
    detail::parallel_chunks(n, detail::resolve_threads(opts.threads),
                            [&](std::uint64_t begin, std::uint64_t end) {
                                for (std::uint64_t r = begin; r < end; ++r) {
                                    std::int32_t cut = 0;
                                    for (Word h : hops) cut += parity(r & h);
                                    res.cuts[r] = cut;
                                    res.alphas[r] = m - 2 * cut;
                                }
                            });
    finish_spectrum(res);
    return res;
}

SpectrumResult bisection_fwht(const CayleyTopology& t, const SpectrumOptions& opts) {
    check_dimension(t.dimension(), opts.max_dimension, "bisection_fwht");
    const std::uint64_t n = t.node_count();
    const auto m = static_cast<std::int32_t>(t.degree());
    SpectrumResult res;
    res.node_count = n;
    res.alphas.assign(n, 0);
    for (Word h : t.hops()) res.alphas[h] += 1;
    fwht_inplace(std::span<std::int32_t>(res.alphas));
    res.cuts.resize(n);
    for (std::uint64_t r = 0; r < n; ++r) res.cuts[r] = (m - res.alphas[r]) / 2;
    finish_spectrum(res);
    return res;
}

EdgeList edge_list(const CayleyTopology& t) {
    EdgeList g;
    g.nodes = t.node_count();
    g.edges.reserve(g.nodes * t.degree() / 2);
    for (Word x = 0; x < g.nodes; ++x) {
        for (Word h : t.hops()) {
            const Word y = x ^ h;
            if (x < y) g.edges.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
        }
    }
    return g;
}

std::uint64_t cut_links(const EdgeList& g, std::span<const std::uint8_t> side) {
    std::uint64_t cut = 0;
    for (const Edge& e : g.edges) cut += side[e.u] != side[e.v] ? 1 : 0;
    return cut;
}

std::uint64_t bisection_bruteforce(const EdgeList& g) {
    const std::size_t n = g.nodes;
    if (n == 0 || n % 2 != 0) {
        throw InputError("bisection_bruteforce: node count " + std::to_string(n) + " is not even");
    }
    if (n > kBruteForceMaxNodes) {
        throw InfeasibleError("bisection_bruteforce: " + std::to_string(n) +
                              " nodes exceeds the enumeration limit " +
                              std::to_string(kBruteForceMaxNodes));
    }
    for (const Edge& e : g.edges) {
        if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
    }

    // Node 0 is pinned to side 0, so each equipartition is visited once:
    // choose the other n/2 - 1 side-0 members among nodes 1..n-1.
    const unsigned rest = static_cast<unsigned>(n - 1);
    const unsigned pick = static_cast<unsigned>(n / 2 - 1);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    auto evaluate = [&](std::uint32_t members) {
        const std::uint32_t zero_side = (members << 1) | 1U;  // bit x set: node x on side 0
        std::uint64_t cut = 0;
        for (const Edge& e : g.edges) {
            cut += (((zero_side >> e.u) ^ (zero_side >> e.v)) & 1U);
        }
        best = std::min(best, cut);
    };
    if (pick == 0) {
        evaluate(0);
        return best;
    }
    // Gosper's hack over pick-subsets of `rest` bits.
    std::uint32_t set = (std::uint32_t{1} << pick) - 1;
    const std::uint32_t limit = std::uint32_t{1} << rest;
    while (set < limit) {
        evaluate(set);
        const std::uint32_t c = set & (0U - set);
        const std::uint32_t r = set + c;
        set = (((r ^ set) >> 2) / c) | r;
    }
    return best;
}

DistanceStats distances(const CayleyTopology& t, Word source, unsigned max_dimension) {
    check_dimension(t.dimension(), max_dimension, "distances");
    const std::uint64_t n = t.node_count();
    if (source >= n) throw InputError("distances: source node out of range");
    constexpr std::uint8_t kUnseen = 0xFF;
    std::vector<std::uint8_t> dist(n, kUnseen);
    std::vector<Word> frontier{source};
    std::vector<Word> next;
    dist[source] = 0;

    DistanceStats stats;
    stats.histogram.push_back(1);
    std::uint64_t total = 0;
    std::uint8_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Word x : frontier) {
            for (Word h : t.hops()) {
                const Word y = x ^ h;
                if (dist[y] == kUnseen) {
                    dist[y] = level;
                    next.push_back(y);
                }
            }
        }
        if (next.empty()) break;
        stats.histogram.push_back(next.size());
        total += static_cast<std::uint64_t>(level) * next.size();
        frontier.swap(next);
    }
    stats.diameter = static_cast<unsigned>(stats.histogram.size() - 1);
    stats.avg_hops = n > 1 ? static_cast<double>(total) / static_cast<double>(n - 1) : 0.0;
    stats.avg_hops_with_self = static_cast<double>(total) / static_cast<double>(n);
    return stats;
}

Clustering cluster(const CayleyTopology& t, unsigned levels) {
    const unsigned d = t.dimension();
    if (levels > d) {
        throw InputError("cluster: levels=" + std::to_string(levels) + " exceeds d=" +
                         std::to_string(d));
    }
    const std::uint64_t n = t.node_count();
    Clustering out;
    out.labels.assign(n, 0);

    std::vector<Word> used;
    std::vector<Word> inside(t.hops().begin(), t.hops().end());  // links within one cluster
    for (unsigned level = 0; level < levels; ++level) {
        Word best_r = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (Word r = 1; r < n; ++r) {
            used.push_back(r);
            const bool independent = gf2_rank(used) == used.size();
            used.pop_back();
            if (!independent) continue;
            std::size_t cost = 0;
            for (Word h : inside) cost += static_cast<std::size_t>(parity(r & h));
            if (cost < best_cost) {
                best_cost = cost;
                best_r = r;
            }
        }
        used.push_back(best_r);
        out.split_indices.push_back(best_r);
        std::erase_if(inside, [best_r](Word h) { return parity(best_r & h) != 0; });
        for (Word x = 0; x < n; ++x) {
            out.labels[x] |= static_cast<std::uint32_t>(parity(best_r & x)) << level;
        }
    }
    return out;
}

CayleyTopology parse_hopset(std::string_view text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(1, "hop-set file is empty");
    const auto& header = lines.front();
    if (header.text.rfind("d=", 0) != 0) {
        throw ParseError(header.number, "expected \"d=<int>\", got \"" + header.text + "\"");
    }
    unsigned d = 0;
    const char* first = header.text.data() + 2;
    const char* last = header.text.data() + header.text.size();
    auto [ptr, ec] = std::from_chars(first, last, d);
    if (ec != std::errc() || ptr != last || d == 0 || d > kMaxDimension) {
        throw ParseError(header.number, "invalid dimension \"" + header.text.substr(2) + "\"");
    }
    std::vector<Word> hops;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.text.size() != d) {
            throw ParseError(line.number, "hop \"" + line.text + "\" has " +
                                              std::to_string(line.text.size()) +
                                              " digits, expected d=" + std::to_string(d));
        }
        try {
            hops.push_back(parse_binary(line.text));
        } catch (const InputError& e) {
            throw ParseError(line.number, e.what());
        }
    }
    try {
        return build(d, std::move(hops));
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(lines.back().number, e.what());
    }
}

std::string emit_hopset(const CayleyTopology& t) {
    std::string out = "# Cayley hop set, " + std::to_string(t.degree()) +
                      " hops, MSB-first\nd=" + std::to_string(t.dimension()) + "\n";
    for (Word h : t.hops()) {
        out += to_binary(h, t.dimension());
        out += '\n';
    }
    return out;
}

EdgeList parse_edge_list(std::string_view text, std::size_t nodes) {
    EdgeList g;
    std::size_t max_id = 0;
    for (const auto& line : detail::content_lines(text)) {
        std::uint32_t u = 0;
        std::uint32_t v = 0;
        const char* p = line.text.data();
        const char* end = p + line.text.size();
        auto r1 = std::from_chars(p, end, u);
        if (r1.ec != std::errc()) throw ParseError(line.number, "expected \"u v\"");
        p = r1.ptr;
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        auto r2 = std::from_chars(p, end, v);
        if (r2.ec != std::errc() || r2.ptr != end || p == r1.ptr) {
            throw ParseError(line.number, "expected \"u v\"");
        }
        g.edges.push_back({u, v});
        max_id = std::max<std::size_t>(max_id, std::max(u, v));
    }
    g.nodes = nodes != 0 ? nodes : (g.edges.empty() ? 0 : max_id + 1);
    return g;
}

}  // namespace longhop
