#include <gtest/gtest.h>

#include <set>

#include "lrc/bounds.hpp"
#include "lrc/constructions.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

ConstructionParams params(Family f, std::uint64_t q, std::size_t n, std::size_t r) {
    ConstructionParams p;
    p.family = f;
    p.q = q;
    p.n = n;
    p.r = r;
    return p;
}

ConstructionParams linearized(std::uint64_t q, unsigned m, std::size_t n, std::size_t k, std::size_t r) {
    auto p = params(Family::linearized, q, n, r);
    p.m = m;
    p.k = k;
    return p;
}

// Full rank, d == singleton_like, locality exactly r.
void expect_optimal(const Construction& c, std::size_t k, std::size_t d) {
    const auto& code = c.code;
    EXPECT_EQ(code.k(), k);
    EXPECT_EQ(rank(code.pcm()), code.n() - code.k());
    EXPECT_EQ(min_distance(code), d);
    EXPECT_EQ(singleton_like(code.n(), code.k(), c.r), d);
    auto prof = locality_profile(code);
    EXPECT_TRUE(prof.all_repairable);
    EXPECT_EQ(prof.all_symbol, c.r);
    EXPECT_TRUE(c.conditions.ok());
}

}  // namespace

TEST(Linearized, SmallInstance) {
    auto c = construct(linearized(2, 4, 6, 2, 2));
    EXPECT_EQ(c.code.field().size(), 16u);
    expect_optimal(c, 2, 5);
    EXPECT_EQ(oracle::brute_distance(c.code.pcm()), 5u);
    // any delta-1 = 4 columns of H are independent
    EXPECT_FALSE(min_dependent_columns(c.code.pcm(), 4));
}

TEST(Linearized, LargerInstance) {
    auto c = construct(linearized(2, 9, 12, 3, 3));
    EXPECT_EQ(c.code.field().size(), 512u);
    expect_optimal(c, 3, 10);
    EXPECT_FALSE(min_dependent_columns(c.code.pcm(), 9));
}

TEST(Linearized, HypothesisChecksIncludeSampledPivots) {
    auto c = construct(linearized(2, 4, 6, 2, 2));
    std::set<std::string> names;
    for (const auto& ch : c.conditions.checks) names.insert(ch.name);
    EXPECT_TRUE(names.count("difference_independence"));
    EXPECT_TRUE(names.count("shifted_pivot_independence"));
}

TEST(Linearized, RepeatedDifferenceRejected) {
    auto field = Field::make(2, 4);
    auto p = linearized(2, 4, 6, 2, 2);
    // group 0 differences to the last entry: {3-1, 3-1} repeat
    p.alphas = AlphaAssignment{field, 2, 2, {3, 3, 1, 5, 9, 1}};
    EXPECT_THROW(construct(p), Error);
    auto rep = check_alpha_hypotheses(*p.alphas, Family::linearized, 2, 0);
    EXPECT_FALSE(rep.ok());
}

TEST(Linearized, FieldTooSmallForAutoAlpha) { EXPECT_THROW(construct(linearized(2, 3, 6, 2, 2)), Error); }

TEST(VdmD4, FiveEightThree) {
    auto c = construct(params(Family::vdm_d4, 5, 8, 3));
    EXPECT_EQ(c.code.pcm().rows(), 4u);
    expect_optimal(c, 4, 4);
    EXPECT_EQ(oracle::brute_distance(c.code.pcm()), 4u);
}

TEST(VdmD4, OtherFields) {
    expect_optimal(construct(params(Family::vdm_d4, 7, 12, 3)), 7, 4);
    auto c4 = construct(params(Family::vdm_d4, 4, 8, 3));
    EXPECT_EQ(c4.code.field().size(), 4u);
    expect_optimal(c4, 4, 4);
}

TEST(VdmD4, Preconditions) {
    EXPECT_THROW(construct(params(Family::vdm_d4, 3, 8, 3)), Error);  // q < r+1
    EXPECT_THROW(construct(params(Family::vdm_d4, 5, 9, 3)), Error);  // (r+1) does not divide n
    EXPECT_THROW(construct(params(Family::vdm_d4, 5, 6, 2)), Error);  // r < 3
    auto p = params(Family::vdm_d4, 5, 8, 3);
    p.k = 5;
    EXPECT_THROW(construct(p), Error);
    p.k = 4;
    EXPECT_NO_THROW(construct(p));
}

TEST(VdmD4, DuplicateWithinGroup) {
    auto f = Field::make(5, 1);
    AlphaAssignment a{f, 2, 3, {0, 1, 1, 3, 0, 1, 2, 3}};
    auto rep = check_alpha_hypotheses(a, Family::vdm_d4, 5, 0);
    ASSERT_TRUE(rep.first_failure());
    EXPECT_EQ(rep.first_failure()->name, "within_group_distinct");
}

TEST(VdmD5, TwentyThreeTenFour) {
    auto c = construct(params(Family::vdm_d5, 23, 10, 4));
    expect_optimal(c, 5, 5);
}

TEST(VdmD5, ExplicitGrid) {
    auto p = params(Family::vdm_d5, 23, 10, 4);
    p.alphas = AlphaAssignment{Field::make(23, 1), 2, 4, {0, 1, 2, 3, 4, 8, 9, 10, 11, 12}};
    auto c = construct(p);
    expect_optimal(c, 5, 5);
    for (const auto& ch : c.conditions.checks) EXPECT_TRUE(ch.passed) << ch.name;
}

TEST(VdmD5, AutoAlphaForPrimeTwoNPlusOne) {
    for (auto [n, q] : {std::pair<std::size_t, std::uint64_t>{15, 31}, {20, 41}, {30, 61}}) {
        auto c = construct(params(Family::vdm_d5, q, n, 4));
        EXPECT_TRUE(c.conditions.ok());
        EXPECT_EQ(min_distance(c.code), 5u) << n;
    }
}

TEST(VdmD5, SumCollisionRejected) {
    auto p = params(Family::vdm_d5, 23, 10, 4);
    // 0 + 3 = 1 + 2 across groups
    p.alphas = AlphaAssignment{Field::make(23, 1), 2, 4, {0, 3, 5, 6, 7, 1, 2, 15, 16, 17}};
    EXPECT_THROW(construct(p), Error);
    EXPECT_THROW(construct(params(Family::vdm_d5, 13, 10, 4)), Error);  // q < 2n+1
}

TEST(LowD, D3Variant) {
    expect_optimal(construct(params(Family::d3_variant, 5, 8, 3)), 5, 3);
    auto single = construct(params(Family::d3_variant, 5, 4, 3));
    EXPECT_EQ(single.alphas.l, 1u);
    EXPECT_EQ(min_distance(single.code), oracle::brute_distance(single.code.pcm()));
}

TEST(LowD, R2D5Variant) {
    auto c = construct(params(Family::r2_d5_variant, 7, 6, 2));
    expect_optimal(c, 2, 5);
    EXPECT_EQ(oracle::brute_distance(c.code.pcm()), 5u);
    EXPECT_THROW(construct(params(Family::r2_d5_variant, 7, 8, 3)), Error);
}

TEST(Rates, MatchClosedForms) {
    struct Case {
        Family f;
        std::uint64_t q;
        std::size_t n, r, extra;
    };
    for (auto c : {Case{Family::vdm_d4, 5, 8, 3, 2}, Case{Family::vdm_d4, 7, 12, 3, 2}, Case{Family::vdm_d4, 7, 15, 4, 2},
                   Case{Family::vdm_d5, 23, 10, 4, 3}, Case{Family::vdm_d5, 31, 15, 4, 3},
                   Case{Family::d3_variant, 5, 8, 3, 1}, Case{Family::d3_variant, 5, 15, 4, 1}}) {
        auto built = construct(params(c.f, c.q, c.n, c.r));
        // k/n == r/(r+1) - extra/n  <=>  k(r+1) == n r - extra (r+1)
        EXPECT_EQ(built.code.k() * (c.r + 1), c.n * c.r - c.extra * (c.r + 1));
    }
}

TEST(Search, FindsGridsMeetingTarget) {
    auto s = search_alphas(5, 8, 3, 2, 4);
    ASSERT_TRUE(s.alphas);
    EXPECT_EQ(s.phase, "sequential");
    EXPECT_GE(min_distance(LinearCode(vandermonde_pcm(*s.alphas, 2))), 4u);

    auto s3 = search_alphas(23, 10, 4, 3, 5);
    ASSERT_TRUE(s3.alphas);
    EXPECT_EQ(min_distance(LinearCode(vandermonde_pcm(*s3.alphas, 3))), 5u);
}

TEST(Search, ReportsUnreachableTargets) {
    auto s = search_alphas(5, 8, 3, 2, 5);
    EXPECT_FALSE(s.alphas);
    EXPECT_EQ(s.reason, "exceeds Singleton-like bound");
    EXPECT_EQ(s.candidates_examined, 0u);
}

TEST(Search, Deterministic) {
    SearchOptions o;
    o.seed = 99;
    o.max_sequential = 3;  // force the random phase
    auto a = search_alphas(11, 8, 3, 2, 4, o);
    auto b = search_alphas(11, 8, 3, 2, 4, o);
    ASSERT_TRUE(a.alphas);
    ASSERT_TRUE(b.alphas);
    EXPECT_EQ(a.alphas->grid, b.alphas->grid);
    EXPECT_EQ(a.phase, b.phase);
}
