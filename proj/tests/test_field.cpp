#include <gtest/gtest.h>

#include <random>

#include "lrc/field.hpp"
#include "lrc/linearized.hpp"
#include "oracles.hpp"

using namespace lrc;

TEST(FieldMake, PrimeField) {
    auto f = Field::make(2, 1);
    EXPECT_EQ(f->size(), 2u);
    EXPECT_EQ(f->header(), "q=2^1 mod=2");
}

TEST(FieldMake, DefaultModulusIsLeastIrreducible) {
    auto f = Field::make(2, 4);
    EXPECT_EQ(f->modulus_code(), 19u);  // x^4 + x + 1
    for (std::uint32_t p : {2u, 3u, 5u})
        for (unsigned m = 2; m <= 4; ++m) {
            auto g = Field::make(p, m);
            std::uint64_t pm = 1;
            for (unsigned i = 0; i < m; ++i) pm *= p;
            // every monic degree-m polynomial with smaller encoding is reducible
            for (std::uint64_t c = pm; c < g->modulus_code(); ++c) EXPECT_FALSE(oracle::irreducible_trial(c, p)) << c;
            EXPECT_TRUE(oracle::irreducible_trial(g->modulus_code(), p));
        }
}

TEST(FieldMake, RejectsNonPrimeCharacteristic) { EXPECT_THROW(Field::make(4, 1), Error); }

TEST(FieldMake, RejectsReducibleModulus) {
    EXPECT_THROW(Field::make(2, 2, poly::Poly{1, 0, 1}), Error);  // x^2 + 1 = (x+1)^2
    EXPECT_NO_THROW(Field::make(2, 4, poly::Poly{1, 0, 0, 1, 1}));  // x^4 + x^3 + 1
}

TEST(FieldMake, OfOrder) {
    EXPECT_EQ(Field::of_order(81)->degree(), 4u);
    EXPECT_THROW(Field::of_order(12), Error);
}

TEST(Poly, BenOrMatchesTrialDivision) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint64_t code = p; code < 2000; ++code) {
            poly::Poly f = poly::decode(code, p);
            if (f.back() != 1) continue;
            EXPECT_EQ(poly::is_irreducible(f, p), oracle::irreducible_trial(code, p)) << "p=" << p << " code=" << code;
        }
}

TEST(FieldArith, SmallExamples) {
    auto f5 = Field::make(5, 1);
    EXPECT_EQ(f5->add(3, 4), 2u);
    auto f16 = Field::make(2, 4);
    EXPECT_EQ(f16->mul(8, 2), 3u);  // x^3 * x = x + 1
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, unsigned>> {};

TEST_P(FieldAxioms, MatchesSchoolbookAndLaws) {
    auto [p, m] = GetParam();
    auto f = Field::make(p, m);
    const auto q = f->size();
    for (elem_t a = 0; a < q; ++a) {
        EXPECT_EQ(f->add(a, f->neg(a)), 0u);
        if (a) {
            EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
        }
        for (elem_t b = 0; b < q; ++b) {
            ASSERT_EQ(f->mul(a, b), oracle::slow_mul(a, b, p, m, f->modulus_code())) << a << "*" << b;
            // coefficientwise addition
            const auto da = oracle::to_digits(a, p, m), db = oracle::to_digits(b, p, m);
            oracle::Digits s(m);
            for (unsigned i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
            ASSERT_EQ(f->add(a, b), oracle::from_digits(s, p));
            ASSERT_EQ(f->sub(f->add(a, b), b), a);
        }
    }
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        elem_t a = rng() % q, b = rng() % q, c = rng() % q;
        EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
        const std::uint64_t e = rng() % 1000;
        elem_t slow = 1;
        for (std::uint64_t i = 0; i < e; ++i) slow = f->mul(slow, a);
        EXPECT_EQ(f->pow(a, e), slow);
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{5u, 1u}, std::pair{2u, 3u}, std::pair{2u, 4u},
                                           std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{7u, 2u}));

TEST(FieldArith, InverseOfZeroThrows) { EXPECT_THROW(Field::make(3, 2)->inv(0), Error); }

TEST(Frobenius, Examples) {
    auto f = Field::make(2, 4);
    EXPECT_EQ(f->frobenius(2, 2, 2), 3u);  // x^4 = x + 1
    // GF(4) inside GF(16) is fixed by x -> x^4
    for (elem_t a = 0; a < 16; ++a)
        if (f->pow(a, 4) == a) {
            EXPECT_EQ(f->frobenius(a, 4, 3), a);
        }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        elem_t a = rng() % 16, b = rng() % 16;
        EXPECT_EQ(f->frobenius(f->add(a, b), 2, 1), f->add(f->frobenius(a, 2, 1), f->frobenius(b, 2, 1)));
    }
    EXPECT_THROW(f->frobenius(1, 8, 1), Error);  // GF(8) is not a subfield of GF(16)
}

TEST(FeltOps, MixingFieldsThrows) {
    auto f = Field::make(2, 4), g = Field::make(3, 2);
    Felt a(f, 3), b(g, 3);
    EXPECT_THROW(a + b, Error);
    EXPECT_EQ((Felt(f, 8) * Felt(f, 2)).value(), 3u);
    EXPECT_EQ((a / a).value(), 1u);
}

TEST(Independence, Examples) {
    auto f = Field::make(2, 4);
    std::vector<elem_t> basis{1, 2, 4, 8};
    EXPECT_TRUE(linearly_independent_over_base(f, basis, 2));
    std::vector<elem_t> rep{2, 2, 4};
    EXPECT_FALSE(linearly_independent_over_base(f, rep, 2));
    std::vector<elem_t> with_zero{3, 0};
    EXPECT_EQ(moore_determinant(f, with_zero, 2), 0u);
    auto f4 = Field::make(2, 2);
    std::vector<elem_t> one_x{1, 2};
    EXPECT_NE(moore_determinant(f4, one_x, 2), 0u);
}

TEST(Independence, MatchesBruteForceAndMoore) {
    std::mt19937_64 rng(3);
    struct Case {
        std::uint32_t p;
        unsigned m;
        std::uint64_t base;
    };
    for (auto c : {Case{2, 4, 2}, Case{2, 4, 4}, Case{3, 4, 3}, Case{3, 4, 9}, Case{2, 6, 4}}) {
        auto f = Field::make(c.p, c.m);
        for (int t = 0; t < 60; ++t) {
            const std::size_t s = 1 + rng() % 4;
            std::vector<elem_t> e(s);
            for (auto& x : e) x = rng() % f->size();
            const bool want = oracle::independent_brute(*f, e, c.base);
            EXPECT_EQ(linearly_independent_over_base(f, e, c.base), want);
            EXPECT_EQ(moore_determinant(f, e, c.base) != 0, want);
            EXPECT_EQ(oracle::cofactor_det(moore_matrix(f, e, c.base)), moore_determinant(f, e, c.base));
        }
    }
}
