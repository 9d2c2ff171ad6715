#pragma once

// Search for hop sets maximizing the normalized bisection b.

#include "longhop/topology.hpp"

#include <cstdint>
#include <string_view>

namespace longhop {

enum class SearchMethod { brute, greedy };

std::string_view to_string(SearchMethod m) noexcept;

struct SearchReport {
    HopSet best_hops;
    std::int64_t best_b = 0;
    std::uint64_t evaluated = 0;  // distinct hop sets scored
    SearchMethod method = SearchMethod::brute;
    unsigned rounds = 0;  // accepted greedy improvements
};

struct BruteForceBudget {
    unsigned max_extra_hops = 3;  // m - d
    unsigned max_dimension = 5;
};

/// Exhaustive search with hops 1..d fixed to the basis 2^0..2^(d-1) and the
/// remaining m - d hops ranging over every ascending combination of the other
/// nonzero words. Returns the first maximizer in that order. Throws
/// InputError for m < d or m >= 2^d, InfeasibleError when over budget.
SearchReport brute_force_search(unsigned d, unsigned m, const BruteForceBudget& budget = {});

/// First-improvement local search. Each round scans replacements of
/// `swap_width` (1 or 2) replaceable hops, positions ascending then
/// replacement words ascending, and accepts the first candidate with strictly
/// larger b. Hops equal to basis words stay fixed when the set contains the
/// whole basis; otherwise every hop is replaceable and candidates must keep
/// rank d. Stops at a local optimum or after `max_rounds` accepted rounds.
SearchReport greedy_improve(const HopSet& start, unsigned swap_width, unsigned max_rounds);

/// b of a hop set, min over r > 0 of C_r.
std::int64_t normalized_bisection(std::span<const Word> hops, unsigned d);

}  // namespace longhop
