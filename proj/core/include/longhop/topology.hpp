#pragma once

// Cayley graphs XQ(d, m) = Cay(Z_2^d, S_m).
//
// Node x is adjacent to x ^ h_s for every hop h_s. Adjacency is never
// materialized; neighbors are computed on demand. Ports are numbered 1..m in
// hop-list order.

#include "longhop/gf2.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace longhop {

/// Validated generator set: nonzero, pairwise distinct hops spanning Z_2^d.
class HopSet {
public:
    /// Throws InputError on a zero hop, a duplicate hop, a hop wider than d
    /// bits, or rank < d.
    HopSet(unsigned dimension, std::vector<Word> hops);

    unsigned dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return hops_.size(); }
    std::span<const Word> hops() const noexcept { return hops_; }
    /// Hop behind 1-based `port`.
    Word hop(unsigned port) const noexcept { return hops_[port - 1]; }

    friend bool operator==(const HopSet&, const HopSet&) = default;

private:
    unsigned dimension_;
    std::vector<Word> hops_;
};

struct Neighbor {
    unsigned port;  // 1-based
    Word node;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

class CayleyTopology {
public:
    explicit CayleyTopology(HopSet hops) : hops_(std::move(hops)) {}

    const HopSet& hop_set() const noexcept { return hops_; }
    unsigned dimension() const noexcept { return hops_.dimension(); }
    std::size_t degree() const noexcept { return hops_.size(); }
    std::uint64_t node_count() const noexcept { return std::uint64_t{1} << dimension(); }
    std::span<const Word> hops() const noexcept { return hops_.hops(); }
    /// Hop behind 1-based `port`.
    Word hop(unsigned port) const noexcept { return hops_.hop(port); }

    /// Throws InputError when x is not a node label.
    std::vector<Neighbor> neighbors(Word x) const;
    Word neighbor(Word x, unsigned port) const noexcept { return x ^ hops_.hop(port); }

    friend bool operator==(const CayleyTopology&, const CayleyTopology&) = default;

private:
    HopSet hops_;
};

CayleyTopology build(unsigned dimension, std::vector<Word> hops);

/// C_r = sum_s parity(r & h_s): the cut of the Walsh partition W_r in units
/// of N/2 links.
unsigned cut_walsh(const CayleyTopology& t, Word r) noexcept;

struct SpectrumResult {
    std::vector<std::int32_t> cuts;    // cuts[r] = C_r
    std::vector<std::int32_t> alphas;  // alphas[r] = m - 2 C_r, adjacency eigenvalues
    std::int64_t b = 0;                // min over r > 0 of C_r
    std::vector<Word> argmin_rs;       // every r > 0 attaining b, ascending
    std::uint64_t node_count = 0;

    /// Bisection in links, b * N / 2.
    std::uint64_t bisection_links() const noexcept {
        return static_cast<std::uint64_t>(b) * (node_count / 2);
    }

    friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

inline constexpr unsigned kDefaultSpectrumCap = 24;

struct SpectrumOptions {
    unsigned max_dimension = kDefaultSpectrumCap;
    /// 0 picks LONGHOP_THREADS from the environment, falling back to 1.
    unsigned threads = 0;
};

/// Direct scan of all N - 1 Walsh partitions, N * m parity evaluations.
/// Throws InfeasibleError when d exceeds the cap.
SpectrumResult bisection_scan(const CayleyTopology& t, const SpectrumOptions& opts = {});

/// Same result through one fast Walsh transform of the hop indicator vector.
SpectrumResult bisection_fwht(const CayleyTopology& t, const SpectrumOptions& opts = {});

struct Edge {
    std::uint32_t u;
    std::uint32_t v;
};

struct EdgeList {
    std::size_t nodes = 0;
    std::vector<Edge> edges;
};

/// Each undirected link of t listed once, as (x, x ^ h_s) with x < x ^ h_s.
EdgeList edge_list(const CayleyTopology& t);

/// Links crossing the partition whose side bit for node x is side[x].
std::uint64_t cut_links(const EdgeList& g, std::span<const std::uint8_t> side);

inline constexpr std::size_t kBruteForceMaxNodes = 20;

/// Exact minimum equipartition cut in links over all C(N, N/2) / 2 splits.
/// Throws InputError for odd N or an edge endpoint >= N; InfeasibleError
/// for N > kBruteForceMaxNodes.
std::uint64_t bisection_bruteforce(const EdgeList& g);

struct DistanceStats {
    unsigned diameter = 0;
    /// Mean hop count over the N - 1 destinations other than the source.
    double avg_hops = 0.0;
    /// Mean over all N destinations (source counted at distance 0).
    double avg_hops_with_self = 0.0;
    std::vector<std::uint64_t> histogram;  // histogram[h] = nodes at distance h
};

/// BFS from `source`. By vertex symmetry every source gives the same result.
DistanceStats distances(const CayleyTopology& t, Word source = 0,
                        unsigned max_dimension = kDefaultSpectrumCap);

struct Clustering {
    std::vector<std::uint32_t> labels;  // labels[x] in [0, 2^levels)
    std::vector<Word> split_indices;    // Walsh index used at each level
};

/// Recursive bisection along Walsh cuts. Level 1 splits on the smallest r
/// attaining b; every further level picks the smallest r, independent of the
/// indices already used, that minimizes the number of links inside a current
/// cluster crossing the new split. Label bit i is walsh(split_indices[i], x).
/// Throws InputError when levels > d.
Clustering cluster(const CayleyTopology& t, unsigned levels);

/// Hop-set file: '#' comments, a "d=<int>" line, then one d-character
/// MSB-first binary hop per line.
CayleyTopology parse_hopset(std::string_view text);
std::string emit_hopset(const CayleyTopology& t);

/// Edge-list file: '#' comments, "u v" per line, 0-based ids. `nodes` = 0
/// infers max id + 1.
EdgeList parse_edge_list(std::string_view text, std::size_t nodes = 0);

}  // namespace longhop
