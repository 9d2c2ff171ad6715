#include "longhop/routing.hpp"

#include <algorithm>
#include <unordered_set>

namespace longhop {

namespace {

constexpr std::uint8_t kUnseen = 0xFF;

std::vector<std::uint8_t> distances_from_root(const CayleyTopology& t) {
    const std::uint64_t n = t.node_count();
    std::vector<std::uint8_t> dist(n, kUnseen);
    std::vector<Word> frontier{0};
    std::vector<Word> next;
    dist[0] = 0;
    for (std::uint8_t level = 1; !frontier.empty(); ++level) {
        next.clear();
        for (Word x : frontier) {
            for (Word h : t.hops()) {
                if (dist[x ^ h] == kUnseen) {
                    dist[x ^ h] = level;
                    next.push_back(x ^ h);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

void check_target(const CayleyTopology& t, Word target) {
    if (target == 0) throw InputError("relative destination must be nonzero");
    if (target >= t.node_count()) throw InputError("destination out of range");
}

std::uint64_t edge_key(Word a, Word b, unsigned port, std::size_t m) {
    return std::min(a, b) * (m + 1) + port;
}

class DisjointSearch {
public:
    DisjointSearch(const CayleyTopology& t, const std::vector<std::uint8_t>& dist, Word target,
                   unsigned q)
        : t_(t), dist_(dist), target_(target), q_(q) {}

    std::vector<Path> run(unsigned max_extra) {
        const unsigned shortest = dist_[target_];
        for (unsigned len = shortest; len <= shortest + max_extra && accepted_.size() < q_; ++len) {
            length_ = len;
            ports_.clear();
            nodes_.assign(1, 0);
            dfs(0);
        }
        return accepted_;
    }

private:
    void dfs(Word cur) {
        if (accepted_.size() >= q_) return;
        const unsigned depth = static_cast<unsigned>(ports_.size());
        if (depth == length_) {
            if (cur == target_) offer();
            return;
        }
        const unsigned remaining = length_ - depth - 1;
        for (unsigned s = 1; s <= t_.degree(); ++s) {
            const Word next = cur ^ t_.hop(s);
            if (dist_[next ^ target_] > remaining) continue;
            if (std::find(nodes_.begin(), nodes_.end(), next) != nodes_.end()) continue;
            ports_.push_back(s);
            nodes_.push_back(next);
            dfs(next);
            ports_.pop_back();
            nodes_.pop_back();
            if (accepted_.size() >= q_) return;
        }
    }

    void offer() {
        const std::size_t m = t_.degree();
        std::vector<std::uint64_t> keys;
        keys.reserve(ports_.size());
        for (std::size_t i = 0; i < ports_.size(); ++i) {
            const std::uint64_t k = edge_key(nodes_[i], nodes_[i + 1], ports_[i], m);
            if (used_.contains(k)) return;
            keys.push_back(k);
        }
        used_.insert(keys.begin(), keys.end());
        accepted_.push_back(Path{ports_});
    }

    const CayleyTopology& t_;
    const std::vector<std::uint8_t>& dist_;
    Word target_;
    unsigned q_;
    unsigned length_ = 0;
    std::vector<unsigned> ports_;
    std::vector<Word> nodes_;
    std::unordered_set<std::uint64_t> used_;
    std::vector<Path> accepted_;
};

std::vector<Path> disjoint_paths_with(const CayleyTopology& t,
                                      const std::vector<std::uint8_t>& dist, Word target,
                                      unsigned q, const DisjointPathOptions& opts) {
    check_target(t, target);
    if (q == 0 || q > t.degree()) {
        throw InputError("path diversity Q=" + std::to_string(q) + " must be in [1, m=" +
                         std::to_string(t.degree()) + "]");
    }
    auto paths = DisjointSearch(t, dist, target, q).run(opts.max_extra_length);
    if (paths.size() < q) {
        throw InsufficientPaths(target, q, static_cast<unsigned>(paths.size()));
    }
    return paths;
}

}  // namespace

InsufficientPaths::InsufficientPaths(Word target, unsigned requested, unsigned achievable)
    : InfeasibleError("only " + std::to_string(achievable) + " of " + std::to_string(requested) +
                      " edge-disjoint paths to relative destination " + std::to_string(target) +
                      " within the length cap"),
      requested_(requested),
      achievable_(achievable) {}

Word path_target(const CayleyTopology& t, const Path& p) {
    Word x = 0;
    for (unsigned s : p.ports) x ^= t.hop(s);
    return x;
}

std::vector<std::pair<Word, unsigned>> path_edges(const CayleyTopology& t, const Path& p,
                                                  Word source) {
    std::vector<std::pair<Word, unsigned>> edges;
    Word x = source;
    for (unsigned s : p.ports) {
        const Word y = x ^ t.hop(s);
        edges.emplace_back(std::min(x, y), s);
        x = y;
    }
    return edges;
}

std::vector<Path> shortest_paths(const CayleyTopology& t, Word target) {
    check_target(t, target);
    const auto dist = distances_from_root(t);
    const unsigned len = dist[target];

    // Port subsets of size len whose hops XOR to the target; a minimal path
    // never repeats a port, so every order of such a subset is a path.
    std::vector<std::vector<unsigned>> subsets;
    std::vector<unsigned> chosen;
    auto search = [&](auto&& self, unsigned first, Word acc) -> void {
        const unsigned left = len - static_cast<unsigned>(chosen.size());
        if (left == 0) {
            if (acc == target) subsets.push_back(chosen);
            return;
        }
        for (unsigned s = first; s + left - 1 <= t.degree(); ++s) {
            const Word next = acc ^ t.hop(s);
            if (dist[next ^ target] > left - 1) continue;
            chosen.push_back(s);
            self(self, s + 1, next);
            chosen.pop_back();
        }
    };
    search(search, 1, 0);

    std::vector<Path> out;
    for (auto& subset : subsets) {
        do {
            out.push_back(Path{subset});
        } while (std::next_permutation(subset.begin(), subset.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Path> disjoint_paths(const CayleyTopology& t, Word target, unsigned q,
                                 const DisjointPathOptions& opts) {
    return disjoint_paths_with(t, distances_from_root(t), target, q, opts);
}

ForwardingTable::ForwardingTable(unsigned dimension, unsigned q, std::vector<std::uint16_t> egress)
    : dimension_(dimension), q_(q), egress_(std::move(egress)) {
    if (egress_.size() != (std::size_t{1} << dimension) * q) {
        throw InputError("forwarding table size mismatch");
    }
}

unsigned ForwardingTable::egress(unsigned selector, Word relative_destination) const {
    const Word n = Word{1} << dimension_;
    if (selector == 0 || selector > q_) {
        throw InputError("selector " + std::to_string(selector) + " outside [1, " +
                         std::to_string(q_) + "]");
    }
    if (relative_destination == 0 || relative_destination >= n) {
        throw InputError("relative destination out of range");
    }
    return egress_[(selector - 1) * n + relative_destination];
}

ForwardingTable forwarding_table(const CayleyTopology& t, unsigned q,
                                 const DisjointPathOptions& opts) {
    const auto dist = distances_from_root(t);
    const std::uint64_t n = t.node_count();
    std::vector<std::uint16_t> egress(n * q, 0);
    for (Word y = 1; y < n; ++y) {
        const auto paths = disjoint_paths_with(t, dist, y, q, opts);
        for (unsigned s = 0; s < q; ++s) {
            egress[s * n + y] = static_cast<std::uint16_t>(paths[s].ports.front());
        }
    }
    return ForwardingTable(t.dimension(), q, std::move(egress));
}

std::vector<Word> forward_walk(const CayleyTopology& t, const ForwardingTable& table, Word x,
                               Word y, unsigned selector) {
    std::vector<Word> visited{x};
    Word cur = x;
    unsigned sel = selector;
    const std::uint64_t n = t.node_count();
    while (cur != y) {
        if (visited.size() > n) {
            throw InfeasibleError("forwarding walk did not converge");
        }
        cur = t.neighbor(cur, table.egress(sel, cur ^ y));
        visited.push_back(cur);
        sel = 1;
    }
    return visited;
}

Path route(const CayleyTopology& t, Word x, Word y, unsigned selector,
           const DisjointPathOptions& opts) {
    if (x >= t.node_count() || y >= t.node_count()) throw InputError("node out of range");
    if (x == y) throw InputError("route: source equals destination");
    if (selector == 0) throw InputError("route: selectors start at 1");
    if (selector > t.degree()) {
        throw InfeasibleError("route: selector " + std::to_string(selector) +
                              " exceeds the port count m=" + std::to_string(t.degree()));
    }
    try {
        return disjoint_paths(t, x ^ y, selector, opts).back();
    } catch (const InsufficientPaths& e) {
        throw InfeasibleError("route: selector " + std::to_string(selector) +
                              " exceeds the available path diversity " +
                              std::to_string(e.achievable()));
    }
}

std::string forwarding_table_csv(const ForwardingTable& table) {
    std::string out = "selector,destination,egress_port\n";
    const Word n = Word{1} << table.dimension();
    for (unsigned s = 1; s <= table.path_diversity(); ++s) {
        for (Word y = 1; y < n; ++y) {
            out += std::to_string(s);
            out += ',';
            out += to_binary(y, table.dimension());
            out += ',';
            out += std::to_string(table.egress(s, y));
            out += '\n';
        }
    }
    return out;
}

}  // namespace longhop
