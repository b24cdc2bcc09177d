#include "support.hpp"

#include <gtest/gtest.h>

using namespace suffree;
using namespace testing_support;

TEST(D5, Transformations) {
    Dfa d = d5(6);
    EXPECT_EQ(d.alphabet(), (Alphabet{'a', 'b', 'c'}));
    EXPECT_EQ(d.delta('a').to_string(), "[5,2,3,1,4,5]");
    EXPECT_EQ(d.delta('b').to_string(), "[1,2,5,4,3,5]");
    EXPECT_EQ(d.delta('c').to_string(), "[5,2,3,4,1,5]");
    EXPECT_EQ(d.finals(), (std::vector<State>{1}));
    EXPECT_THROW(d5(5), InvalidInput);
}

TEST(D6, Transformations) {
    Dfa d = d6(5);
    EXPECT_EQ(d.delta('d').to_string(), "[4,4,2,3,4]");
    EXPECT_EQ(d.delta('e').to_string(), "[1,4,4,4,4]");
    EXPECT_EQ(d.finals(), (std::vector<State>{1, 3}));
    EXPECT_THROW(d6(3), InvalidInput);
}

TEST(D6, FourStateAlphabetAndAlias) {
    Dfa d = d6(4);
    EXPECT_EQ(d.alphabet(), (Alphabet{'b', 'c', 'd', 'e'}));
    Dfa aliased = d6(4, "a,-,-,-,-");
    EXPECT_EQ(aliased.alphabet(), (Alphabet{'a'}));
    EXPECT_EQ(aliased.delta('a'), d.delta('b'));
}

TEST(Witnesses, MinimalWithUniqueEmptyState) {
    for (std::size_t n = 6; n <= 9; ++n) {
        Dfa d = d5(n);
        EXPECT_TRUE(is_minimal(d));
        EXPECT_EQ(empty_states(d), (std::vector<State>{static_cast<State>(n - 1)}));
    }
    for (std::size_t n = 4; n <= 9; ++n) {
        Dfa d = d6(n);
        EXPECT_TRUE(is_minimal(d));
        EXPECT_EQ(brute_force_quotients(d), n);
        EXPECT_EQ(empty_states(d), (std::vector<State>{static_cast<State>(n - 1)}));
        if (n > 7) continue;
        const auto sg = transition_semigroup(d);
        for (const auto& t : sg.elements()) EXPECT_NE(t[0], 0u);
    }
}

TEST(Witnesses, SemigroupClasses) {
    for (std::size_t n = 6; n <= 7; ++n) {
        auto s = transition_semigroup(d5(n));
        EXPECT_TRUE(is_subsemigroup_of(s, SemigroupClass::Vsf));
        EXPECT_FALSE(is_subsemigroup_of(s, SemigroupClass::Wsf));
        // membership checked elementwise as well
        for (const auto& t : s.elements()) EXPECT_TRUE(in_vsf(t));
    }
    for (std::size_t n = 4; n <= 6; ++n) {
        auto s = transition_semigroup(d6(n));
        auto g = generate(n, wsf_generators(n));
        EXPECT_EQ(s.elements(), g.elements()) << n;
    }
}

TEST(BinaryProduct, Complexities) {
    auto p78 = binary_product_pair(7, 8);
    EXPECT_EQ(quotient_complexity(concat(p78.left, p78.right)), 385u);
    auto p89 = binary_product_pair(8, 9);
    EXPECT_EQ(quotient_complexity(concat(p89.left, p89.right)), 897u);
    auto p67 = binary_product_pair(6, 7);
    EXPECT_EQ(quotient_complexity(concat(p67.left, p67.right)), 161u);
}

TEST(BinaryProduct, ShapeAndValidation) {
    auto p = binary_product_pair(6, 7);
    EXPECT_EQ(p.left.delta('b').to_string(), "[1,5,2,5,5,5]");
    EXPECT_EQ(p.right.delta('b').to_string(), "[1,6,2,3,4,5,6]");
    EXPECT_TRUE(is_suffix_free(p.left).suffix_free);
    EXPECT_TRUE(is_minimal(p.left));
    EXPECT_TRUE(is_minimal(p.right));
    EXPECT_THROW(binary_product_pair(5, 7), InvalidInput);
    EXPECT_THROW(binary_product_pair(6, 2), InvalidInput);
}

TEST(PredWord, Examples) {
    EXPECT_EQ(pred_word(2, 8), "ca");
    EXPECT_EQ(pred_word(1, 8), "cabb");
    EXPECT_EQ(pred_word(6, 8), "cabbaaabb");
    EXPECT_EQ(pred_word(5, 8), "caaaa");
    EXPECT_THROW(pred_word(0, 8), InvalidInput);
    EXPECT_THROW(pred_word(7, 8), InvalidInput);
    EXPECT_THROW(pred_word(1, 5), InvalidInput);
}

TEST(PredWord, PropertiesHoldForEveryMiddleState) {
    for (std::size_t n = 6; n <= 8; ++n)
        for (State q = 1; q <= n - 2; ++q) {
            auto c = verify_pred_word(q, n);
            EXPECT_TRUE(c.holds(q)) << "n=" << n << " q=" << q << " w=" << c.word;
            // re-check the image of 0 with the stepping oracle
            EXPECT_EQ(step_word(d5(n, "b,c,a"), 0, c.word), q);
            EXPECT_EQ(step_word(d5(n), 1, c.word), 3u);
        }
}

TEST(VsfDfa, SemigroupIsVsf) {
    for (std::size_t n = 3; n <= 5; ++n) {
        auto s = transition_semigroup(vsf_dfa(n));
        EXPECT_EQ(s.elements(), enumerate_class(n, SemigroupClass::Vsf).elements) << n;
    }
    EXPECT_THROW(vsf_dfa(2), InvalidInput);
}
