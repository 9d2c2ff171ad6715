#include "longhop/optimize.hpp"

#include "longhop/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace longhop {

std::string_view to_string(SearchMethod m) noexcept {
    return m == SearchMethod::brute ? "brute" : "greedy";
}

std::int64_t normalized_bisection(std::span<const Word> hops, unsigned d) {
    const Word n = Word{1} << d;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (Word r = 1; r < n; ++r) {
        std::int64_t cut = 0;
        for (Word h : hops) cut += parity(r & h);
        best = std::min(best, cut);
        if (best == 0) break;
    }
    return best;
}

namespace {

bool contains_basis(std::span<const Word> hops, unsigned d) {
    for (unsigned i = 0; i < d; ++i) {
        if (std::find(hops.begin(), hops.end(), Word{1} << i) == hops.end()) return false;
    }
    return true;
}

// Advances an ascending index combination over [0, pool); false when done.
bool next_combination(std::vector<std::size_t>& idx, std::size_t pool) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < pool - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

SearchReport brute_force_search(unsigned d, unsigned m, const BruteForceBudget& budget) {
    if (d == 0 || d > kMaxDimension) throw InputError("brute_force_search: invalid d");
    if (m < d) throw InputError("brute_force_search: m < d leaves the graph disconnected");
    if (d < 63 && m >= (Word{1} << d)) {
        throw InputError("brute_force_search: m must be < 2^d");
    }
    if (d > budget.max_dimension || m - d > budget.max_extra_hops) {
        throw InfeasibleError("brute_force_search: (d=" + std::to_string(d) + ", m=" +
                              std::to_string(m) + ") exceeds the search budget (d <= " +
                              std::to_string(budget.max_dimension) + ", m - d <= " +
                              std::to_string(budget.max_extra_hops) + ")");
    }

    std::vector<Word> base;
    for (unsigned i = 0; i < d; ++i) base.push_back(Word{1} << i);
    std::vector<Word> pool;
    for (Word w = 1; w < (Word{1} << d); ++w) {
        if (weight(w) > 1) pool.push_back(w);
    }

    const unsigned extra = m - d;
    std::vector<std::size_t> idx(extra);
    for (std::size_t i = 0; i < extra; ++i) idx[i] = i;

    std::vector<Word> hops = base;
    hops.resize(m);
    std::vector<Word> best_hops = base;
    std::int64_t best_b = -1;
    std::uint64_t evaluated = 0;
    do {
        for (std::size_t i = 0; i < extra; ++i) hops[d + i] = pool[idx[i]];
        const std::int64_t b = normalized_bisection(hops, d);
        ++evaluated;
        if (b > best_b) {
            best_b = b;
            best_hops = hops;
        }
    } while (extra > 0 && next_combination(idx, pool.size()));

    return {HopSet(d, std::move(best_hops)), best_b, evaluated, SearchMethod::brute, 0};
}

SearchReport greedy_improve(const HopSet& start, unsigned swap_width, unsigned max_rounds) {
    if (swap_width != 1 && swap_width != 2) {
        throw InputError("greedy_improve: swap width must be 1 or 2");
    }
    const unsigned d = start.dimension();
    const Word n = Word{1} << d;
    std::vector<Word> current(start.hops().begin(), start.hops().end());
    const bool basis_fixed = contains_basis(current, d);

    std::vector<std::size_t> replaceable;
    for (std::size_t s = 0; s < current.size(); ++s) {
        if (!basis_fixed || weight(current[s]) != 1) replaceable.push_back(s);
    }

    std::set<std::vector<Word>> seen;
    auto canonical = [](std::vector<Word> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    seen.insert(canonical(current));
    std::int64_t current_b = normalized_bisection(current, d);
    std::uint64_t evaluated = 1;
    unsigned rounds = 0;

    while (rounds < max_rounds && replaceable.size() >= swap_width) {
        std::vector<Word> unused;
        for (Word w = 1; w < n; ++w) {
            if (std::find(current.begin(), current.end(), w) == current.end()) unused.push_back(w);
        }
        if (unused.size() < swap_width) break;

        bool improved = false;
        std::vector<std::size_t> pos(swap_width);
        for (std::size_t i = 0; i < swap_width; ++i) pos[i] = i;
        do {
            std::vector<std::size_t> pick(swap_width);
            for (std::size_t i = 0; i < swap_width; ++i) pick[i] = i;
            do {
                std::vector<Word> candidate = current;
                for (std::size_t i = 0; i < swap_width; ++i) {
                    candidate[replaceable[pos[i]]] = unused[pick[i]];
                }
                if (!basis_fixed && gf2_rank(candidate) < d) continue;
                if (!seen.insert(canonical(candidate)).second) continue;
                ++evaluated;
                const std::int64_t b = normalized_bisection(candidate, d);
                if (b > current_b) {
                    current = std::move(candidate);
                    current_b = b;
                    improved = true;
                }
            } while (!improved && next_combination(pick, unused.size()));
        } while (!improved && next_combination(pos, replaceable.size()));

        if (!improved) break;
        ++rounds;
    }
    return {HopSet(d, std::move(current)), current_b, evaluated, SearchMethod::greedy, rounds};
}

}  // namespace longhop
