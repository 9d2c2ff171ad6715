#include "longhop/compare.hpp"
#include "longhop/error.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace longhop;

namespace {

LhParams lh13() {
    LhParams p;
    p.dimension = 13;
    p.hops_per_switch = 48;
    p.min_distance = 16;
    p.max_hops = 4;
    p.avg_hops = 2.915039;
    return p;
}

// Reed-Muller RM(1, r): the all-ones row plus the r coordinate rows.
GeneratorMatrix reed_muller1(unsigned r) {
    const std::size_t n = std::size_t{1} << r;
    std::vector<BitVector> rows(r + 1, BitVector(n));
    for (std::size_t c = 0; c < n; ++c) {
        rows[0].set(c, true);
        for (unsigned i = 0; i < r; ++i) rows[i + 1].set(c, (c >> i) & 1U);
    }
    return GeneratorMatrix(std::move(rows));
}

// |u|u+v| with u in the extended [24,12,8] Golay code and v in the [24,1,24]
// repetition code: a [48,13,16] code.
GeneratorMatrix golay_plotkin() {
    const std::vector<int> poly{1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};  // x^11+x^10+x^6+x^5+x^4+x^2+1
    std::vector<BitVector> rows(13, BitVector(48));
    for (unsigned i = 0; i < 12; ++i) {
        bool par = false;
        for (unsigned j = 0; j < poly.size(); ++j) {
            rows[i].set(i + j, poly[j]);
            rows[i].set(24 + i + j, poly[j]);
            par ^= poly[j] != 0;
        }
        rows[i].set(23, par);
        rows[i].set(47, par);
    }
    for (unsigned c = 24; c < 48; ++c) rows[12].set(c, true);
    return GeneratorMatrix(std::move(rows));
}

// Real delta with P = scale * R * 2^delta / (delta + overhead), by plain bisection.
double solve_dimension(double p, double r, double scale, double overhead) {
    double lo = 0.5, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (scale * r * std::exp2(mid) / (mid + overhead) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST(Compare, FamilyNames) {
    EXPECT_EQ(to_string(Family::FT), "FT");
    EXPECT_EQ(family_from_string("HC"), Family::HC);
    EXPECT_THROW(family_from_string("DF"), InputError);
}

TEST(Compare, HypercubeRow) {
    const auto r = model_hc(131072, 64);
    EXPECT_NEAR(r.dimension, 15.0, 1e-9);
    EXPECT_NEAR(r.trunking, 4.0, 1e-9);
    EXPECT_NEAR(r.switches, 32768.0, 1e-6);
    EXPECT_NEAR(r.ports_per_switch, 4.0, 1e-9);
    EXPECT_NEAR(r.cables_per_port, 7.5, 1e-9);
    EXPECT_EQ(r.max_hops, 15U);
    EXPECT_NEAR(*r.avg_hops, 7.5, 1e-9);
}

TEST(Compare, FoldedCubeRowMatchesIndependentSolve) {
    const double delta = solve_dimension(131072, 64, 2.0, 3.0);
    const auto r = model_fc(131072, 64);
    EXPECT_NEAR(r.dimension, delta, 1e-6);
    EXPECT_NEAR(r.switches, std::exp2(delta), 1e-3);
    EXPECT_NEAR(r.ports_per_switch, 2.0 * 64 / (delta + 3), 1e-6);
    EXPECT_NEAR(r.cables_per_port, (delta + 1) / 4, 1e-6);
    EXPECT_EQ(r.max_hops, 8U);
    ASSERT_TRUE(r.avg_hops);
    EXPECT_GT(*r.avg_hops, 5.5);
    EXPECT_LT(*r.avg_hops, 6.5);
}

TEST(Compare, PortsTimesSwitchesInvariant) {
    for (double p : {4096.0, 50000.0, 131072.0, 1e6}) {
        for (const auto& r : {model_hc(p, 64), model_fc(p, 64)}) {
            EXPECT_NEAR(r.switches * r.ports_per_switch, p, p * 1e-9);
        }
        if (p <= 2 * std::pow(32.0, 4)) {
            const auto ft = model_ft(p, 64, 4);
            EXPECT_NEAR(ft.switches * ft.ports_per_switch, p, p * 1e-9);
        }
    }
}

TEST(Compare, FatTreeRows) {
    const auto ft4 = model_ft(131072, 64, 4);
    EXPECT_NEAR(ft4.switches, 14336.0, 1e-6);
    EXPECT_NEAR(ft4.ports_per_switch, 64.0 / 7, 1e-9);
    EXPECT_NEAR(ft4.cables_per_port, 3.0, 1e-12);
    EXPECT_EQ(ft4.max_hops, 6U);

    const auto ft2 = model_ft(2048, 64, 2);
    EXPECT_NEAR(ft2.trunking, 1.0, 1e-12);
    EXPECT_NEAR(ft2.ports_per_switch, 64.0 / 3, 1e-9);
    EXPECT_NEAR(ft2.cables_per_port, 1.0, 1e-12);
    EXPECT_NEAR(ft2.switches, 96.0, 1e-9);
    EXPECT_EQ(ft2.max_hops, 2U);

    EXPECT_THROW(model_ft(4096, 64, 2), InfeasibleError);
    EXPECT_THROW(model_ft(1000, 64, 1), InputError);
}

TEST(Compare, LongHopArithmetic) {
    const auto r = model_lh(131072, 64, lh13());
    EXPECT_DOUBLE_EQ(r.switches, 8192.0);
    EXPECT_DOUBLE_EQ(r.ports_per_switch, 16.0);
    EXPECT_DOUBLE_EQ(r.cables_per_port, 1.5);
    EXPECT_EQ(r.max_hops, 4U);
    EXPECT_THROW(model_lh(1 << 20, 64, lh13()), InfeasibleError);
}

TEST(Compare, LongHopFromReedMullerCode) {
    const auto g = reed_muller1(3);
    const auto p = lh_params_from_code(g);
    EXPECT_EQ(p.dimension, 4U);
    EXPECT_EQ(p.hops_per_switch, 8U);
    EXPECT_EQ(p.min_distance, 4U);
    EXPECT_EQ(p.max_hops, 2U);
    // 8 hops reach 8 nodes at distance 1; the remaining 7 sit at distance 2.
    EXPECT_DOUBLE_EQ(*p.avg_hops, (8.0 + 14.0) / 16.0);

    const auto r = model_lh(0, 48, g);
    EXPECT_DOUBLE_EQ(r.trunking, 4.0);
    EXPECT_DOUBLE_EQ(r.ports_per_switch, 16.0);
    EXPECT_DOUBLE_EQ(r.switches, 16.0);
    EXPECT_DOUBLE_EQ(r.cables_per_port, 1.0);
}

TEST(Compare, LongHopFrom48_13_16Code) {
    const auto g = golay_plotkin();
    const auto p = lh_params_from_code(g);
    EXPECT_EQ(p.dimension, 13U);
    EXPECT_EQ(p.hops_per_switch, 48U);
    EXPECT_EQ(p.min_distance, 16U);
    EXPECT_EQ(p.max_hops, 4U);
    const auto r = model_lh(131072, 64, g);
    EXPECT_DOUBLE_EQ(r.switches, 8192.0);
    EXPECT_DOUBLE_EQ(r.ports_per_switch, 16.0);
    EXPECT_DOUBLE_EQ(r.cables_per_port, 1.5);
}

TEST(Compare, FoldedCubeAsLongHop) {
    for (unsigned d = 2; d <= 8; ++d) {
        std::vector<BitVector> rows(d, BitVector(d + 1));
        for (unsigned i = 0; i < d; ++i) {
            rows[i].set(i, true);
            rows[i].set(d, true);
        }
        const auto p = lh_params_from_code(GeneratorMatrix(std::move(rows)));
        EXPECT_EQ(p.min_distance, 2U);
        EXPECT_EQ(p.max_hops, (d + 1) / 2);
        EXPECT_NEAR(*p.avg_hops, folded_cube_avg_hops(d), 1e-12);
    }
    EXPECT_DOUBLE_EQ(folded_cube_avg_hops(3), 10.0 / 8.0);
}

TEST(Compare, TableOrderAndNorms) {
    const auto t = compare(131072, 64, lh13(), 4);
    ASSERT_EQ(t.rows.size(), 4U);
    EXPECT_EQ(t.rows[0].family, Family::LH);
    EXPECT_EQ(t.rows[1].family, Family::FT);
    EXPECT_EQ(t.rows[2].family, Family::FC);
    EXPECT_EQ(t.rows[3].family, Family::HC);
    EXPECT_DOUBLE_EQ(t.switches_norm(t.lh()), 100.0);
    EXPECT_NEAR(t.switches_norm(t.rows[3]), 400.0, 1e-9);
    EXPECT_NEAR(t.cabling_norm(t.rows[3]), 500.0, 1e-9);
    EXPECT_NEAR(t.switches_norm(t.rows[1]), 175.0, 1e-9);
    EXPECT_NEAR(t.cabling_norm(t.rows[1]), 200.0, 1e-9);
}

TEST(Compare, OutputFormats) {
    const auto t = compare(131072, 64, lh13(), 4);
    const auto text = format_text(t);
    EXPECT_NE(text.find("FB, DF: unsupported"), std::string::npos);
    EXPECT_NE(text.find("32768.000000"), std::string::npos);

    const auto csv = format_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "family,switches,ports_per_switch,switches_norm,cables_per_port,cabling_norm,"
              "max_hops,avg_hops");
    EXPECT_NE(csv.find("HC,32768.000000,4.000000,400.000000,7.500000,500.000000,15,7.500000"),
              std::string::npos);

    const auto back = parse_comparison_json(format_json(t));
    ASSERT_EQ(back.rows.size(), t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_EQ(back.rows[i].family, t.rows[i].family);
        EXPECT_DOUBLE_EQ(back.rows[i].switches, t.rows[i].switches);
        EXPECT_EQ(back.rows[i].max_hops, t.rows[i].max_hops);
        EXPECT_EQ(back.rows[i].avg_hops, t.rows[i].avg_hops);
    }
    EXPECT_EQ(format_json(back), format_json(t));
    EXPECT_THROW(parse_comparison_json("{\"rows\": 3"), InputError);
}

TEST(Compare, MissingHopStatisticsAreEmpty) {
    auto p = lh13();
    p.max_hops.reset();
    p.avg_hops.reset();
    const auto csv = format_csv(compare(131072, 64, p, 4));
    EXPECT_NE(csv.find("LH,8192.000000,16.000000,100.000000,1.500000,100.000000,,\n"),
              std::string::npos);
}

TEST(Compare, DegenerateSingleSwitch) {
    LhParams p;
    p.dimension = 2;
    p.hops_per_switch = 3;
    p.min_distance = 2;
    const auto t = compare(8, 64, p, 4);
    for (const auto& r : t.rows) {
        EXPECT_TRUE(r.degenerate);
        EXPECT_DOUBLE_EQ(r.switches, 1.0);
    }
}
