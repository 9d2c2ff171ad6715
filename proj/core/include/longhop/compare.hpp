#pragma once

// Closed-form cost models for comparing a Long Hop network against the
// hypercube, folded hypercube and fat tree at a common port count P, switch
// radix R and oversubscription 1.
//
// Fractional hypercube dimensions and fat-tree trunking factors describe
// interpolated configurations. Hop averages count the source itself as a
// destination at distance 0.

#include "longhop/codes.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace longhop {

enum class Family { LH, HC, FC, FT };

std::string_view to_string(Family f) noexcept;
/// Throws InputError for an unknown name.
Family family_from_string(std::string_view name);

struct ComparisonRow {
    Family family = Family::LH;
    /// LH: d. HC/FC: real dimension. FT: levels L.
    double dimension = 0.0;
    /// Parallel cables per logical link.
    double trunking = 1.0;
    /// LH only.
    unsigned hops_per_switch = 0;  // m
    unsigned min_distance = 0;     // Delta

    double switches = 0.0;
    double ports_per_switch = 0.0;
    double cables_per_port = 0.0;
    std::optional<unsigned> max_hops;
    std::optional<double> avg_hops;

    bool degenerate = false;
    std::string note;

    /// One-line description, e.g. "HC(dimension 15.000) Q=4.000".
    std::string describe() const;
};

/// Hypercube: P = Q 2^delta with Q = R / (delta + 1).
ComparisonRow model_hc(double ports, double radix);

/// Folded hypercube: P = 2 Q 2^delta with Q = R / (delta + 3).
ComparisonRow model_fc(double ports, double radix);

/// L-level fat tree with trunking Q >= 1: P = 2 (R/2)^L / Q^(L-1).
ComparisonRow model_ft(double ports, double radix, unsigned levels);

struct LhParams {
    unsigned dimension = 0;       // d
    unsigned hops_per_switch = 0;  // m
    unsigned min_distance = 0;    // Delta
    std::optional<unsigned> max_hops;
    std::optional<double> avg_hops;
};

/// Delta from min_distance, hop statistics from BFS on code_to_network(g).
LhParams lh_params_from_code(const GeneratorMatrix& g);

/// LH network of 2^d switches with Delta Q server ports and m Q topological
/// ports each, where Q = P / (Delta 2^d); ports <= 0 picks Q = R / (m + Delta).
/// Throws InfeasibleError when (m + Delta) Q exceeds the radix.
ComparisonRow model_lh(double ports, double radix, const LhParams& lh);
ComparisonRow model_lh(double ports, double radix, const GeneratorMatrix& g);

/// Mean folded d-cube distance over all 2^d destinations, source included.
double folded_cube_avg_hops(unsigned d);

struct ComparisonTable {
    double ports = 0.0;
    double radix = 0.0;
    std::vector<ComparisonRow> rows;  // rows[0] is LH

    const ComparisonRow& lh() const { return rows.front(); }
    /// Switches relative to LH = 100.
    double switches_norm(const ComparisonRow& r) const;
    /// Cabling relative to LH = 100.
    double cabling_norm(const ComparisonRow& r) const;
};

/// Rows LH, FT, FC, HC at the LH network's port count. The LH row sets P;
/// `ports` <= 0 lets the LH code choose it with full-radix trunking. P at or
/// below one switch yields single-switch rows flagged degenerate.
ComparisonTable compare(double ports, double radix, const LhParams& lh, unsigned ft_levels);

std::string format_text(const ComparisonTable& t);
/// Columns family,switches,ports_per_switch,switches_norm,cables_per_port,
/// cabling_norm,max_hops,avg_hops. Reals with 6 decimals; missing hop
/// statistics are empty fields.
std::string format_csv(const ComparisonTable& t);
std::string format_json(const ComparisonTable& t);
/// Inverse of format_json. Throws InputError on malformed documents.
ComparisonTable parse_comparison_json(std::string_view text);

}  // namespace longhop
