#include "support.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace suffree;

namespace {

VerifyParams params(std::string family, std::size_t n, std::optional<std::size_t> m = {}) {
    VerifyParams p;
    p.family = std::move(family);
    p.n = n;
    p.m = m;
    return p;
}

}  // namespace

TEST(Verify, ProductAndUnion) {
    auto r = verify(Measure::Product, params("", 6, 6));
    EXPECT_EQ(r.family, "D5");
    ASSERT_TRUE(r.computed);
    EXPECT_EQ(*r.computed, 81);
    EXPECT_EQ(r.bound, 81);
    EXPECT_EQ(r.status(), "met");

    auto u = verify(Measure::Union, params("D5", 6, 6));
    EXPECT_EQ(*u.computed, 26);
    EXPECT_TRUE(u.met);
}

TEST(Verify, StarDefaultsByRange) {
    auto big = verify(Measure::Star, params("", 7));
    EXPECT_EQ(big.family, "D5");
    EXPECT_EQ(*big.computed, 33);
    auto small = verify(Measure::Star, params("", 5));
    EXPECT_EQ(small.family, "VSF");
    EXPECT_FALSE(small.asserted);
    EXPECT_EQ(small.status(), "info");
}

TEST(Verify, BinaryProductIsInformationalWhenNotCoprime) {
    auto r = verify(Measure::ProductBinary, params("", 8, 6));
    EXPECT_FALSE(r.asserted);
    EXPECT_NE(r.note.find("gcd"), std::string::npos);
    auto ok = verify(Measure::ProductBinary, params("", 7, 6));
    EXPECT_TRUE(ok.asserted);
    EXPECT_EQ(*ok.computed, 161);
    EXPECT_TRUE(ok.met);
}

TEST(Verify, InputErrorsThrowBudgetErrorsReport) {
    EXPECT_THROW(verify(Measure::Product, params("", 6)), InvalidInput);
    EXPECT_THROW(verify(Measure::Star, params("D6", 6)), InvalidInput);
    EXPECT_THROW(verify(Measure::Atom, params("", 6)), InvalidInput);
    auto p = params("", 8, 8);
    p.budget.max_states = 10;
    auto r = verify(Measure::Product, p);
    EXPECT_TRUE(r.error);
    EXPECT_EQ(r.status(), "error");
    EXPECT_EQ(exit_code({r}), 2);
}

TEST(Verify, AtomBasis) {
    auto p = params("", 6);
    p.basis = parse_basis("{1,3}", 6);
    auto r = verify(Measure::Atom, p);
    EXPECT_EQ(r.basis, "{1,3}");
    EXPECT_TRUE(r.met);
    EXPECT_EQ(parse_basis("1,3", 6), p.basis);
    EXPECT_EQ(parse_basis("{}", 6), StateSet(6));
    EXPECT_THROW(parse_basis("1,9", 6), InvalidInput);
}

TEST(Verify, AtomTableRows) {
    auto rows = verify_atom_table(5);
    ASSERT_EQ(rows.size(), 5u);
    const long expected[] = {9, 13, 16, 8};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(rows[k].basis, "|S|=" + std::to_string(k));
        EXPECT_EQ(*rows[k].computed, expected[k]);
        EXPECT_TRUE(rows[k].met);
    }
    EXPECT_EQ(rows.back().basis, "max");
    EXPECT_EQ(*rows.back().computed, 16);
    for (std::size_t n = 4; n <= 7; ++n)
        for (const auto& r : verify_atom_table(n)) EXPECT_EQ(r.status(), "met") << n << " " << r.basis;
    EXPECT_THROW(verify_atom_table(10), InvalidInput);
}

TEST(Verify, FormulaRowsMatchReference) {
    TableOptions opt;
    opt.construct_up_to = 0;
    for (const auto& [n, ref] : atom_table_reference()) {
        auto rows = verify_atom_table(n, opt);
        EXPECT_EQ(rows.front().family, "FORMULA");
        for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_EQ(rows[k].bound, ref[k]) << n << "," << k;
        for (const auto& r : rows) EXPECT_TRUE(r.met);
    }
}

TEST(Verify, SemigroupClassesAtSix) {
    auto rows = verify_semigroup_classes(6);
    EXPECT_GE(rows.size(), 6u);
    for (const auto& r : rows) EXPECT_EQ(r.status(), "met") << r.note;
    EXPECT_THROW(verify_semigroup_classes(3), InvalidInput);
}

TEST(Search, SmallDegrees) {
    auto four = search_subsemigroups(4);
    EXPECT_TRUE(four.complete);
    EXPECT_EQ(four.max_cardinality, 13u);
    ASSERT_TRUE(four.all_pairs_colliding_and_focused);
    EXPECT_FALSE(*four.all_pairs_colliding_and_focused);
    EXPECT_EQ(four.bsf_size, 15u);

    auto two = search_subsemigroups(2);
    EXPECT_EQ(two.distinct_semigroups, 1u);
    EXPECT_FALSE(two.all_pairs_colliding_and_focused);

    auto best = generate(4, four.max_generators_found);
    EXPECT_EQ(best.size(), 13u);
    EXPECT_THROW(search_subsemigroups(6), InvalidInput);
}

TEST(Search, Emitters) {
    auto s = search_subsemigroups(3);
    EXPECT_NE(search_to_text(s).find("max cardinality: 3"), std::string::npos);
    auto j = nlohmann::json::parse(search_to_json(s));
    EXPECT_EQ(j["max_cardinality"], 3);
}

TEST(Reports, JsonTextAndCsvAgree) {
    std::vector<ComplexityReport> reports{verify(Measure::Product, params("", 6, 6)),
                                          verify(Measure::Reversal, params("", 7))};
    auto j = nlohmann::json::parse(reports_to_json(reports));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["computed"], "81");
    EXPECT_EQ(j[0]["bound"], "81");
    EXPECT_EQ(j[1]["measure"], "REVERSAL");
    EXPECT_EQ(j[1]["status"], "met");
    auto text = reports_to_text(reports);
    EXPECT_NE(text.find("computed=81 bound=81"), std::string::npos);
    EXPECT_NE(text.find("REVERSAL family=D6 n=7"), std::string::npos);
    auto csv = reports_to_csv(reports);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_EQ(exit_code(reports), 0);
}

TEST(Reports, ExitCodeOnMiss) {
    ComplexityReport r;
    r.asserted = true;
    r.met = false;
    EXPECT_EQ(exit_code({r}), 1);
    r.asserted = false;
    EXPECT_EQ(exit_code({r}), 0);
}

TEST(Measures, ParseAndName) {
    EXPECT_EQ(parse_measure("product-binary"), Measure::ProductBinary);
    EXPECT_EQ(parse_measure("symmetric-difference"), Measure::SymDiff);
    EXPECT_EQ(parse_measure("atoms"), Measure::Atom);
    EXPECT_EQ(parse_measure("WSF_SIZE"), Measure::WsfSize);
    EXPECT_EQ(measure_name(Measure::ProductBinary), "PRODUCT_BINARY");
    EXPECT_THROW(parse_measure("kleene"), InvalidInput);
}

TEST(Measures, BoundFormulas) {
    EXPECT_EQ(bound::star(6), 17);
    EXPECT_EQ(bound::product(6, 6), 81);
    EXPECT_EQ(bound::union_(6, 6), 26);
    EXPECT_EQ(bound::intersection(6, 6), 18);
    EXPECT_EQ(bound::difference(6, 6), 22);
    EXPECT_EQ(bound::wsf_size(6), 629);
    EXPECT_EQ(bound::wsf_size(7), 7781);
    EXPECT_EQ(bound::atom_row(5, 1), 13);
    EXPECT_EQ(bound::atom_row(4, 1), 5);
    EXPECT_EQ(bound::reversal(40), BigInt(1) + (BigInt(1) << 38));
}

TEST(Sweep, DeterministicAcrossJobCounts) {
    SweepOptions opt;
    opt.lo = 4;
    opt.hi = 6;
    opt.tables.construct_up_to = 5;
    auto one = verify_all(opt);
    opt.jobs = 2;
    auto two = verify_all(opt);
    ASSERT_EQ(one.size(), two.size());
    for (auto* v : {&one, &two})
        for (auto& r : *v) r.runtime_ms = 0;
    EXPECT_EQ(reports_to_json(one), reports_to_json(two));
}
