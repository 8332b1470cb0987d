#include <gtest/gtest.h>

#include <random>

#include "lrc/constructions.hpp"
#include "lrc/repair.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

Construction build(Family f, std::uint64_t q, std::size_t n, std::size_t r, unsigned m = 1, std::size_t k = 0) {
    ConstructionParams p;
    p.family = f;
    p.q = q;
    p.m = m;
    p.n = n;
    p.r = r;
    if (k) p.k = k;
    return construct(p);
}

// Every coordinate of 100 random codewords is erased in turn and repaired.
void exhaustive_repair(const Construction& c) {
    const auto& code = c.code;
    const auto prof = locality_profile(code);
    const Encoder enc(code);
    const GfMatrix& h = code.pcm();
    std::mt19937_64 rng(7);
    std::vector<elem_t> msg(code.k());
    for (int t = 0; t < 100; ++t) {
        for (auto& s : msg) s = rng() % code.field().size();
        const auto cw = enc.encode(msg);
        for (auto v : h.apply(cw)) ASSERT_EQ(v, 0u);
        for (std::size_t i = 0; i < code.n(); ++i) {
            ReceivedWord rx(cw.begin(), cw.end());
            rx[i].reset();
            auto tr = repair_single(code, rx, prof);
            ASSERT_TRUE(tr.success);
            ASSERT_EQ(tr.recovered, cw[i]);
            ASSERT_LE(tr.read_count, c.r);
            for (auto j : tr.reads) ASSERT_NE(j, i);
        }
    }
}

}  // namespace

TEST(Repair, AllFamiliesRecoverEveryCoordinate) {
    exhaustive_repair(build(Family::linearized, 2, 6, 2, 4, 2));
    exhaustive_repair(build(Family::vdm_d4, 5, 8, 3));
    exhaustive_repair(build(Family::vdm_d5, 23, 10, 4));
    exhaustive_repair(build(Family::d3_variant, 5, 8, 3));
    exhaustive_repair(build(Family::r2_d5_variant, 7, 6, 2));
}

TEST(Repair, ErasureCountErrors) {
    auto c = build(Family::vdm_d4, 5, 8, 3);
    auto prof = locality_profile(c.code);
    const auto cw = encode(c.code, std::vector<elem_t>{1, 2, 3, 4});
    ReceivedWord rx(cw.begin(), cw.end());
    EXPECT_THROW(repair_single(c.code, rx, prof), Error);
    rx[0].reset();
    rx[5].reset();
    try {
        repair_single(c.code, rx, prof);
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "multiple erasures");
    }
    EXPECT_THROW(repair_single(c.code, ReceivedWord(3), prof), Error);
}

TEST(Repair, CorruptedSymbolFailsSyndromeCheck) {
    auto c = build(Family::vdm_d4, 5, 8, 3);
    auto prof = locality_profile(c.code);
    auto cw = encode(c.code, std::vector<elem_t>{1, 2, 3, 4});
    cw[1] = (cw[1] + 1) % 5;
    ReceivedWord rx(cw.begin(), cw.end());
    rx[0].reset();
    EXPECT_FALSE(repair_single(c.code, rx, prof).success);
}

TEST(Simulate, ConstructionMetrics) {
    auto c = build(Family::vdm_d5, 23, 10, 4);
    auto m = simulate(c.code, locality_profile(c.code), 500, 3);
    EXPECT_EQ(*m.success_rate(), 1.0);
    EXPECT_LE(m.max_reads, 4u);
    EXPECT_LE(*m.mean_reads(), 4.0);
    EXPECT_EQ(m.baseline_reads, 5u);
}

TEST(Simulate, ZeroTrialsGiveNull) {
    auto c = build(Family::vdm_d4, 5, 8, 3);
    auto m = simulate(c.code, locality_profile(c.code), 0, 1);
    EXPECT_FALSE(m.success_rate());
    EXPECT_FALSE(m.mean_reads());
}

TEST(Simulate, MdsCodeReadsK) {
    // [6,3] Reed-Solomon over GF(7): every repair reads k symbols
    auto f = Field::make(7, 1);
    GfMatrix h(f, 3, 6);
    for (std::size_t c = 0; c < 6; ++c) {
        elem_t x = 1;
        for (std::size_t r = 0; r < 3; ++r, x = f->mul(x, static_cast<elem_t>(c + 1))) h.set(r, c, x);
    }
    LinearCode code(h);
    ASSERT_EQ(oracle::brute_distance(h), 4u);
    auto m = simulate(code, locality_profile(code), 200, 5);
    EXPECT_EQ(*m.success_rate(), 1.0);
    EXPECT_EQ(*m.mean_reads(), 3.0);
    EXPECT_EQ(m.max_reads, m.baseline_reads);
}

TEST(Simulate, Deterministic) {
    auto c = build(Family::linearized, 2, 6, 2, 4, 2);
    auto prof = locality_profile(c.code);
    auto a = simulate(c.code, prof, 300, 17), b = simulate(c.code, prof, 300, 17);
    EXPECT_EQ(a.total_reads, b.total_reads);
    EXPECT_EQ(a.successes, b.successes);
}
