#pragma once

// Multipath routing on Cayley topologies by relative addressing: the hop
// sequences from X to Y are the hop sequences from 0 to X ^ Y, so every
// path and table is computed once, from node 0.

#include "longhop/error.hpp"
#include "longhop/topology.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace longhop {

/// A hop sequence; ports are 1-based.
struct Path {
    std::vector<unsigned> ports;

    std::size_t length() const noexcept { return ports.size(); }
    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// XOR of the hops along the path.
Word path_target(const CayleyTopology& t, const Path& p);

/// Undirected links used by the path when walked from `source`, each as
/// (smaller endpoint, port).
std::vector<std::pair<Word, unsigned>> path_edges(const CayleyTopology& t, const Path& p,
                                                  Word source = 0);

/// Every minimum-length hop sequence from 0 to `target`, sorted. Throws
/// InputError for target 0 or out of range.
std::vector<Path> shortest_paths(const CayleyTopology& t, Word target);

struct DisjointPathOptions {
    /// Longest detour considered, in hops beyond the shortest distance.
    unsigned max_extra_length = 4;
};

/// Q pairwise edge-disjoint simple paths from 0 to `target`. Candidates are
/// scanned by length (shortest first) and, within a length, in lexicographic
/// port order; each candidate disjoint from all accepted paths is accepted.
/// Throws InputError unless 1 <= q <= m, InfeasibleError (see
/// InsufficientPaths) when fewer than q paths exist within the length cap.
std::vector<Path> disjoint_paths(const CayleyTopology& t, Word target, unsigned q,
                                 const DisjointPathOptions& opts = {});

class InsufficientPaths : public InfeasibleError {
public:
    InsufficientPaths(Word target, unsigned requested, unsigned achievable);

    unsigned requested() const noexcept { return requested_; }
    unsigned achievable() const noexcept { return achievable_; }

private:
    unsigned requested_;
    unsigned achievable_;
};

/// Root forwarding table shared by every node under relative addressing.
/// entry(s, Yrel) is the first port of the s-th disjoint path from 0 to Yrel;
/// there are (N - 1) * Q entries.
class ForwardingTable {
public:
    ForwardingTable(unsigned dimension, unsigned q, std::vector<std::uint16_t> egress);

    unsigned dimension() const noexcept { return dimension_; }
    unsigned path_diversity() const noexcept { return q_; }
    std::uint64_t entry_count() const noexcept { return ((std::uint64_t{1} << dimension_) - 1) * q_; }

    /// Egress port for selector s (1..Q) and relative destination (nonzero).
    unsigned egress(unsigned selector, Word relative_destination) const;

private:
    unsigned dimension_;
    unsigned q_;
    std::vector<std::uint16_t> egress_;  // [(s - 1) * N + Yrel]
};

ForwardingTable forwarding_table(const CayleyTopology& t, unsigned q,
                                 const DisjointPathOptions& opts = {});

/// Hops taken when forwarding from x to y with table lookups. The source
/// switch picks its egress with `selector`; transit switches look up
/// selector 1, the shortest path to the remaining relative destination.
/// Throws InfeasibleError if the walk does not reach y within N steps.
std::vector<Word> forward_walk(const CayleyTopology& t, const ForwardingTable& table, Word x,
                               Word y, unsigned selector);

/// The s-th disjoint path for relative destination x ^ y. Throws InputError
/// for x == y and InfeasibleError when s exceeds the available diversity.
Path route(const CayleyTopology& t, Word x, Word y, unsigned selector,
           const DisjointPathOptions& opts = {});

/// CSV with header "selector,destination,egress_port"; destinations are
/// d-bit MSB-first binary strings.
std::string forwarding_table_csv(const ForwardingTable& table);

}  // namespace longhop
