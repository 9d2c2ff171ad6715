#include "longhop/construct.hpp"
#include "longhop/error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace longhop;

namespace {

GeneratorMatrix from_rows(std::initializer_list<const char*> rows) {
    std::vector<BitVector> v;
    for (const char* r : rows) v.push_back(BitVector::from_string(r));
    return GeneratorMatrix(std::move(v));
}

}  // namespace

TEST(Construct, HammingCodeNetwork) {
    const auto g = from_rows({"1101000", "0110100", "1110010", "1010001"});
    const auto t = code_to_network(g);
    EXPECT_EQ(t.dimension(), 4U);
    EXPECT_EQ(std::vector<Word>(t.hops().begin(), t.hops().end()),
              (std::vector<Word>{13, 7, 14, 1, 2, 4, 8}));
    const auto s = bisection_fwht(t);
    EXPECT_EQ(s.b, 3);
    EXPECT_EQ(s.bisection_links(), 24U);
}

TEST(Construct, ParityCodeGivesFoldedCube) {
    const auto t = code_to_network(from_rows({"1001", "0101", "0011"}));
    EXPECT_EQ(std::vector<Word>(t.hops().begin(), t.hops().end()), (std::vector<Word>{1, 2, 4, 7}));
    EXPECT_EQ(bisection_scan(t).b, 2);
}

TEST(Construct, SimplexCodeGivesCompleteGraph) {
    const auto t = code_to_network(from_rows({"1010101", "0110011", "0001111"}));
    EXPECT_EQ(t.degree(), 7U);
    const auto s = bisection_scan(t);
    EXPECT_EQ(s.b, 4);
    EXPECT_EQ(bisection_bruteforce(edge_list(t)), 16U);
    EXPECT_EQ(distances(t).diameter, 1U);
}

TEST(Construct, RejectsDegenerateColumns) {
    EXPECT_THROW(code_to_network(from_rows({"1100", "0110"})), InputError);
    EXPECT_THROW(code_to_network(from_rows({"1001", "0100"})), InputError);
}

TEST(Construct, RoundTrip) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned k = 2 + static_cast<unsigned>(rng() % 6);
        const unsigned n = k + static_cast<unsigned>(rng() % 8);
        if (n >= (1U << k)) continue;
        const auto g = oracle::random_generator(rng, k, n);
        ASSERT_EQ(network_to_code(code_to_network(g)), g);
        const auto t = code_to_network(g);
        ASSERT_EQ(code_to_network(network_to_code(t)), t);
    }
}

TEST(Construct, BisectionEqualsMinimumDistance) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned k = 2 + static_cast<unsigned>(rng() % 8);
        const unsigned n = k + static_cast<unsigned>(rng() % 12);
        if (n >= (1U << k)) continue;
        const auto g = oracle::random_generator(rng, k, n);
        const auto t = code_to_network(g);
        ASSERT_EQ(static_cast<std::size_t>(bisection_fwht(t).b), min_distance(g));
        ASSERT_EQ(static_cast<std::size_t>(bisection_scan(t).b), oracle::pairwise_min_distance(g));
    }
}

TEST(Construct, CutIsCodewordWeight) {
    std::mt19937_64 rng(12);
    const auto g = oracle::random_generator(rng, 5, 11);
    const auto t = code_to_network(g);
    const auto s = bisection_scan(t);
    for (Word r = 1; r < 32; ++r) {
        BitVector msg(5);
        for (unsigned i = 0; i < 5; ++i) msg.set(i, (r >> i) & 1U);
        ASSERT_EQ(static_cast<std::size_t>(s.cuts[r]), encode(g, msg).weight());
    }
}

TEST(Construct, NormalizeBasis) {
    const HopSet h(3, {0b011, 0b010, 0b110, 0b101});
    const auto n = normalize_basis(h);
    EXPECT_EQ(n.size(), 4U);
    for (Word u : {Word{1}, Word{2}, Word{4}}) {
        EXPECT_NE(std::find(n.hops().begin(), n.hops().end(), u), n.hops().end());
    }
    EXPECT_EQ(bisection_scan(CayleyTopology(h)).b, bisection_scan(CayleyTopology(n)).b);
}

TEST(Construct, NormalizeBasisPreservesSpectrumMultiset) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned d = 2 + static_cast<unsigned>(rng() % 6);
        const unsigned m = std::min<unsigned>(d + 1 + static_cast<unsigned>(rng() % 4), (1U << d) - 1);
        const auto hops = oracle::random_hops(rng, d, m);
        const HopSet h(d, hops);
        const auto n = normalize_basis(h);
        auto a = bisection_fwht(CayleyTopology(h)).cuts;
        auto b = bisection_fwht(CayleyTopology(n)).cuts;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        ASSERT_EQ(a, b);
        ASSERT_EQ(distances(CayleyTopology(h)).histogram, distances(CayleyTopology(n)).histogram);
    }
}
