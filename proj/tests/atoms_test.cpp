#include "support.hpp"

#include <gtest/gtest.h>

using namespace suffree;
using namespace testing_support;

namespace {

Dfa random_minimal(std::mt19937& rng, std::size_t n, std::size_t letters) {
    for (;;) {
        Dfa d = minimize(random_dfa(rng, n, letters));
        if (d.states() >= 2 && !d.finals().empty()) return d;
    }
}

std::uint64_t mask_of(const StateSet& s) {
    std::uint64_t m = 0;
    for (State q : s.members()) m |= std::uint64_t{1} << q;
    return m;
}

// membership in the atom with basis S: w in every quotient of S and in no other
bool in_atom(const Dfa& d, std::uint64_t basis, const std::string& w) {
    for (State q = 0; q < d.states(); ++q) {
        bool inside = d.is_final(step_word(d, q, w));
        if (inside != (((basis >> q) & 1U) != 0)) return false;
    }
    return true;
}

}  // namespace

TEST(AtomDfa, StatedComplexities) {
    EXPECT_EQ(atom_complexity(d6(5), StateSet(5, {0})), 5u);
    EXPECT_EQ(atom_complexity(d6(6), StateSet(6)), 17u);
    EXPECT_EQ(atom_complexity(d6(5), StateSet(5, {1, 2})), 16u);
}

TEST(AtomDfa, AcceptsExactlyTheAtom) {
    Dfa d = d6(5);
    for (const auto& basis : atoms(d)) {
        Dfa a = atom_dfa(d, basis);
        const auto m = mask_of(basis);
        for (const auto& w : words_up_to(d.alphabet(), 4)) ASSERT_EQ(a.accepts(w), in_atom(d, m, w)) << basis.to_string() << " " << w;
    }
}

TEST(AtomDfa, RejectsNonAtom) {
    EXPECT_THROW(atom_complexity(d6(5), StateSet(5, {0, 1})), InvalidInput);
    EXPECT_FALSE(is_atom(d6(5), StateSet(5, {4})));
    EXPECT_THROW(atom_dfa(d6(5), StateSet(6, {1})), InvalidInput);
}

TEST(Atoms, SmallExamples) {
    Dfa all(1, {'a'}, {Transformation{0}}, 0, {0});
    auto a = atoms(all);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].to_string(), "{0}");
    EXPECT_EQ(atoms(d6(6)).size(), 17u);
}

TEST(Atoms, CountMatchesReversalAndBruteForce) {
    std::mt19937 rng(71);
    for (int i = 0; i < 20; ++i) {
        Dfa d = random_minimal(rng, 5, 2);
        auto found = atoms(d);
        std::set<std::uint64_t> masks;
        for (const auto& s : found) masks.insert(mask_of(s));
        EXPECT_EQ(masks, brute_force_atom_masks(d)) << to_json(d);
        EXPECT_EQ(found.size(), quotient_complexity(reverse(d)));
    }
}

TEST(Atoms, DisjointAndQuotientsAreUnionsOfAtoms) {
    std::mt19937 rng(73);
    for (int i = 0; i < 20; ++i) {
        Dfa d = random_minimal(rng, 5, 2);
        auto found = atoms(d);
        for (const auto& w : words_up_to(d.alphabet(), 6)) {
            int hits = 0;
            std::uint64_t which = 0;
            for (const auto& s : found)
                if (in_atom(d, mask_of(s), w)) {
                    ++hits;
                    which = mask_of(s);
                }
            ASSERT_EQ(hits, 1) << w;
            for (State q = 0; q < d.states(); ++q)
                ASSERT_EQ(in_lang(from_state(d, q), w), ((which >> q) & 1U) != 0);
        }
    }
}

TEST(Atoms, SortedBySizeThenMembers) {
    auto a = atoms(d6(5));
    for (std::size_t i = 1; i < a.size(); ++i) EXPECT_TRUE(basis_less(a[i - 1], a[i]));
}

TEST(Atoms, MaximumComplexities) {
    const std::pair<std::size_t, std::size_t> expected[] = {{4, 5}, {6, 53}, {7, 166}};
    for (auto [n, best] : expected) {
        Dfa d = d6(n);
        std::size_t mx = 0;
        for (const auto& s : atoms(d)) mx = std::max(mx, atom_complexity(d, s));
        EXPECT_EQ(mx, best) << n;
    }
}

TEST(Atoms, EnumerationBudget) {
    AtomOptions opt;
    opt.max_states = 4;
    EXPECT_THROW(atoms(d6(5), opt), BudgetExceeded);
}

TEST(AtomBounds, Examples) {
    EXPECT_EQ(suffix_free_atom_bound(5, StateSet(5, {1, 2})), 16);
    EXPECT_EQ(suffix_free_atom_bound(5, StateSet(5, {0})), 5);
    EXPECT_EQ(suffix_free_atom_bound(6, StateSet(6)), 17);
    EXPECT_EQ(suffix_free_middle_atom_bound(9, 4), 1646);
    EXPECT_THROW(suffix_free_atom_bound(5, StateSet(5, {0, 1})), InvalidInput);
    EXPECT_THROW(suffix_free_atom_bound(5, StateSet(5, {4})), InvalidInput);
    EXPECT_THROW(suffix_free_atom_bound(3, StateSet(3)), InvalidInput);
    EXPECT_THROW(suffix_free_middle_atom_bound(6, 5), InvalidInput);
}

TEST(AtomBounds, AttainedByD6ForEveryBasisUpToSix) {
    for (std::size_t n = 4; n <= 6; ++n) {
        Dfa d = d6(n);
        for (const auto& s : atoms(d)) EXPECT_EQ(BigInt(atom_complexity(d, s)), suffix_free_atom_bound(n, s)) << n << " " << s.to_string();
    }
}

TEST(AtomBounds, ShiftedLeftIdealFormulaCoincides) {
    // middle basis of size k in n states against left ideals with n-1 states
    for (std::size_t n = 4; n <= 12; ++n)
        for (std::size_t k = 1; k <= n - 2; ++k)
            EXPECT_EQ(suffix_free_middle_atom_bound(n, k), left_ideal_atom_bound(n - 1, k)) << n << "," << k;
}

TEST(AtomBounds, BinomialAgainstPascal) {
    std::vector<std::vector<BigInt>> c(71, std::vector<BigInt>(71, 0));
    for (std::size_t n = 0; n <= 70; ++n) {
        c[n][0] = 1;
        for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    for (std::size_t n = 0; n <= 70; n += 7)
        for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), c[n][k]);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(pow2(100), BigInt(1) << 100);
}

TEST(Syntactic, Examples) {
    Dfa none(1, {'a'}, {Transformation{0}}, 0, {});
    EXPECT_EQ(syntactic_complexity(none), 1u);
    EXPECT_EQ(syntactic_complexity(d6(6)), 629u);
    EXPECT_EQ(syntactic_complexity(d6(7)), 7781u);
}
