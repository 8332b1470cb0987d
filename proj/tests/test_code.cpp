#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lrc/code.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

FieldRef gf2() { return Field::make(2, 1); }

LinearCode repetition3() { return LinearCode(GfMatrix(gf2(), 2, 3, {1, 1, 0, 1, 0, 1})); }

LinearCode hamming74() {
    return LinearCode(GfMatrix(gf2(), 3, 7, {1, 0, 1, 0, 1, 0, 1,  //
                                             0, 1, 1, 0, 0, 1, 1,  //
                                             0, 0, 0, 1, 1, 1, 1}));
}

LinearCode simplex(unsigned m) {
    const std::size_t n = (1u << m) - 1;
    GfMatrix g(gf2(), m, n);
    for (std::size_t c = 0; c < n; ++c)
        for (unsigned r = 0; r < m; ++r) g.set(r, c, ((c + 1) >> r) & 1);
    return code_from_generator(g);
}

}  // namespace

TEST(LinearCode, RejectsBadPcm) {
    EXPECT_THROW(LinearCode(GfMatrix(gf2(), 2, 3, {1, 1, 0, 1, 1, 0})), Error);  // rank 1
    EXPECT_THROW(LinearCode(GfMatrix(gf2(), 3, 3)), Error);
}

TEST(Generator, SingleParityAndHamming) {
    LinearCode spc(GfMatrix(gf2(), 1, 3, {1, 1, 1}));
    auto g = generator_from_pcm(spc);
    EXPECT_EQ(g.rows(), 2u);
    const auto ght = g * spc.pcm().transpose();
    for (auto v : ght.entries()) EXPECT_EQ(v, 0u);
    auto gh = generator_from_pcm(hamming74());
    EXPECT_EQ(rank(gh), 4u);
}

TEST(Generator, RandomCodesSatisfyGHt) {
    std::mt19937_64 rng(21);
    for (auto f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 3)})
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 3 + rng() % 6, k = 1 + rng() % (n - 1);
            LinearCode c(oracle::random_pcm(f, n, k, rng));
            auto g = generator_from_pcm(c);
            EXPECT_EQ(g.rows(), k);
            const auto ght = g * c.pcm().transpose();
            for (auto v : ght.entries()) EXPECT_EQ(v, 0u);
            EXPECT_TRUE(same_code(c, code_from_generator(g)));
            EXPECT_TRUE(same_code(dual_code(dual_code(c)), c));
        }
}

TEST(MinDistance, KnownCodes) {
    EXPECT_EQ(min_distance(repetition3()), 3u);
    EXPECT_EQ(min_distance(hamming74()), 3u);
    EXPECT_EQ(min_distance(simplex(3)), 4u);
    EXPECT_EQ(min_distance(simplex(4)), 8u);
    auto f5 = Field::make(5, 1);
    LinearCode c2(GfMatrix(f5, 4, 8, {1, 1, 1, 1, 0, 0, 0, 0,  //
                                      0, 0, 0, 0, 1, 1, 1, 1,  //
                                      0, 1, 2, 3, 0, 1, 2, 3,  //
                                      0, 1, 4, 4, 0, 1, 4, 4}));
    EXPECT_EQ(min_distance(c2, {}, DistanceMethod::enumeration), 4u);
    EXPECT_EQ(min_distance(c2, {}, DistanceMethod::column_search), 4u);
    EXPECT_EQ(oracle::brute_distance(c2.pcm()), 4u);
}

TEST(MinDistance, RoutesAgreeWithBruteForce) {
    std::mt19937_64 rng(22);
    for (auto f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)})
        for (int t = 0; t < 25; ++t) {
            const std::size_t n = 3 + rng() % (f->size() == 2 ? 9 : 5), k = 1 + rng() % (n - 1);
            LinearCode c(oracle::random_pcm(f, n, k, rng));
            const auto e = min_distance_with_witness(c, {}, DistanceMethod::enumeration);
            const auto s = min_distance_with_witness(c, {}, DistanceMethod::column_search);
            EXPECT_EQ(e.distance, s.distance);
            EXPECT_EQ(e.distance, oracle::brute_distance(c.pcm()));
            // the column-search witness is a dependent set of that size
            EXPECT_EQ(s.witness.columns.size(), s.distance);
            auto sub = c.pcm().select_columns(s.witness.columns);
            for (auto v : sub.apply(s.witness.combination)) EXPECT_EQ(v, 0u);
        }
}

TEST(MinDistance, CapExceededIsAnError) {
    SearchCaps tiny{8, 8};
    EXPECT_THROW(min_distance(hamming74(), tiny, DistanceMethod::enumeration), CapExceeded);
    EXPECT_THROW(min_distance(simplex(4), tiny, DistanceMethod::column_search), CapExceeded);
}

TEST(Locality, KnownCodes) {
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(symbol_locality(repetition3(), i).locality, 1u);
    LinearCode spc(GfMatrix(gf2(), 1, 5, {1, 1, 1, 1, 1}));
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(symbol_locality(spc, i).locality, 4u);
    auto prof = locality_profile(simplex(3));
    EXPECT_EQ(prof.all_symbol, 2u);
    for (auto l : prof.per_symbol) EXPECT_EQ(l, 2u);
    auto hp = locality_profile(hamming74());
    const auto brute = oracle::brute_localities(generator_from_pcm(hamming74()));
    for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(hp.per_symbol[i], *brute[i]);
    EXPECT_LE(hp.all_symbol, 3u);
}

TEST(Locality, UncoveredCoordinate) {
    // column 2 of H is zero: no parity check involves it
    LinearCode c(GfMatrix(gf2(), 1, 3, {1, 1, 0}));
    auto s = symbol_locality(c, 2);
    EXPECT_FALSE(s.repairable);
    EXPECT_EQ(s.locality, 3u);
    EXPECT_FALSE(locality_profile(c).all_repairable);
}

TEST(Locality, RoutesAgreeWithBruteForce) {
    std::mt19937_64 rng(23);
    for (auto f : {Field::make(2, 1), Field::make(3, 1), Field::make(5, 1)})
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 3 + rng() % (f->size() == 5 ? 3 : 5), k = 1 + rng() % (n - 1);
            LinearCode c(oracle::random_pcm(f, n, k, rng));
            auto a = locality_profile(c, {}, LocalityMethod::dual_enumeration);
            auto b = locality_profile(c, {}, LocalityMethod::generator_search);
            EXPECT_EQ(a.per_symbol, b.per_symbol);
            EXPECT_EQ(a.witness_rows, b.witness_rows);
            const auto brute = oracle::brute_localities(generator_from_pcm(c));
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_EQ(a.per_symbol[i], brute[i] ? *brute[i] : n);
                if (!a.witness_rows[i].empty()) {
                    // witness lies in the dual: orthogonal to the code
                    EXPECT_TRUE(oracle::in_kernel(generator_from_pcm(c), a.witness_rows[i]));
                    EXPECT_NE(a.witness_rows[i][i], 0u);
                    EXPECT_EQ(weight(a.witness_rows[i]), a.per_symbol[i] + 1);
                }
            }
        }
}

TEST(Enumeration, VisitsEveryNonzeroWordOnce) {
    auto f = Field::make(3, 2);
    GfMatrix basis(f, 2, 3, {1, 0, 2, 0, 1, 5});
    std::set<std::vector<elem_t>> seen;
    std::size_t count = 0;
    for_each_nonzero_combination(basis, 1000, [&](std::span<const elem_t> w) {
        seen.emplace(w.begin(), w.end());
        ++count;
        return true;
    });
    EXPECT_EQ(count, 80u);
    EXPECT_EQ(seen.size(), 80u);
    EXPECT_FALSE(seen.count(std::vector<elem_t>(3, 0)));
}
