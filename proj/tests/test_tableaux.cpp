#include "qcrystal/q_crystal.hpp"
#include "qcrystal/tableau_crystal.hpp"
#include "qcrystal/theorems.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qcrystal;

namespace {

StrictPartition sp(std::initializer_list<int> parts) { return StrictPartition(std::vector<int>(parts)); }

Tableau filled(const StrictPartition& lambda, int n, std::vector<Letter> row_major) {
    return Tableau(shape_from_partition(lambda), n, std::move(row_major));
}

} // namespace

TEST_CASE("strict partitions parse and validate") {
    CHECK(parse_strict_partition("2,1") == sp({2, 1}));
    CHECK(parse_strict_partition("(3,1)") == sp({3, 1}));
    CHECK_THROWS_AS(parse_strict_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_strict_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_strict_partition("2,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_strict_partition("0"), std::invalid_argument);
    CHECK(strict_partitions(3, 3) == std::vector<StrictPartition>{sp({1}), sp({2}), sp({3}), sp({2, 1})});
}

TEST_CASE("shapes of staircase skew diagrams") {
    const auto big = shape_from_partition(sp({7, 6, 4, 2}));
    CHECK(big->size() == 19);
    CHECK(big->row_lengths() == std::vector<int>{1, 2, 3, 4, 4, 3, 2});
    // Row 1 holds the single box in column 7; row 4 starts at column 4.
    CHECK(big->boxes().front() == Box{1, 7});
    CHECK(big->index_of(Box{4, 4}) != SkewShape::npos);
    const auto one = shape_from_partition(sp({1}));
    CHECK(std::vector<Box>(one->boxes().begin(), one->boxes().end()) == std::vector<Box>{{1, 1}});
    const auto two = shape_from_partition(sp({2}));
    CHECK(std::vector<Box>(two->boxes().begin(), two->boxes().end()) == std::vector<Box>{{1, 2}, {2, 1}});
}

TEST_CASE("semistandard tableaux counts") {
    CHECK(enumerate_ssyt(shape_from_partition(sp({2})), 2).size() == 4);
    CHECK(enumerate_ssyt(shape_from_partition(sp({2, 1})), 2).size() == 2);
    CHECK(enumerate_ssyt(shape_from_partition(sp({2, 1})), 3).size() == 8);
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_ssyt(shape_from_partition(sp({1})), n).size() == static_cast<std::size_t>(n));
    CHECK_THROWS_AS(filled(sp({2, 1}), 3, {2, 1, 1}), std::invalid_argument);
}

TEST_CASE("reading words") {
    CHECK(reading_row(filled(sp({1}), 2, {1})) == Word(2, {1}));
    CHECK(reading_row(filled(sp({2}), 2, {1, 2})) == Word(2, {1, 2}));
    // Y_(2,1): boxes (1,2), (2,1), (2,2).
    const Tableau t = filled(sp({2, 1}), 3, {1, 1, 2});
    CHECK(reading_row(t) == Word(3, {1, 2, 1}));
    CHECK(reading_col(t) == Word(3, {1, 2, 1}));
}

TEST_CASE("tableau operators pull back the changed letter") {
    const Tableau ones = filled(sp({2}), 2, {1, 1});
    auto f1 = tableau_operator(CrystalOp::f(Label::even(1)), ones);
    REQUIRE(f1.has_value());
    CHECK(reading_row(*f1) == Word(2, {2, 1}));
    auto fb = tableau_operator(CrystalOp::f(Label::bar(1)), ones);
    REQUIRE(fb.has_value());
    CHECK(reading_row(*fb) == Word(2, {1, 2}));
    CHECK_FALSE(tableau_operator(CrystalOp::e(Label::even(1)), ones).has_value());
}

TEST_CASE("highest weight tableaux") {
    const Tableau b2 = b_lambda(sp({2}), 2);
    CHECK(std::vector<Letter>(b2.entries().begin(), b2.entries().end()) == std::vector<Letter>{1, 1});
    CHECK(b2.weight() == Weight{2, 0});
    const Tableau b21 = b_lambda(sp({2, 1}), 3);
    CHECK(b21.entry(Box{1, 2}) == 1);
    CHECK(b21.entry(Box{2, 1}) == 1);
    CHECK(b21.entry(Box{2, 2}) == 2);
    CHECK(b21.weight() == Weight{2, 1, 0});
    CHECK(reading_row(b_lambda(sp({1}), 4)) == Word(4, {1}));
}

TEST_CASE("crystals of small shapes") {
    CHECK(same_crystal(crystal_of_shape(sp({1}), 3), vector_crystal(3)));
    CHECK(isomorphic(crystal_of_shape(sp({2}), 2), closure(Word(2, {1, 1}))).has_value());
    CHECK(crystal_of_shape(sp({2, 1}), 2).size() == 2);
}

TEST_CASE("one-row shapes with three or more boxes split into several pieces") {
    // Y_(3) has no two adjacent boxes, so every filling is semistandard and
    // B(Y_(3)) is all of B^3: components of sizes 6 and 2 for n = 2.
    const CrystalGraph g = crystal_of_shape(sp({3}), 2);
    CHECK(g.size() == 8);
    std::vector<std::size_t> sizes;
    for (const auto& c : connected_components(g))
        sizes.push_back(c.size());
    std::sort(sizes.rbegin(), sizes.rend());
    CHECK(sizes == std::vector<std::size_t>{6, 2});
    const Report r = check_theorem_b(sp({3}), 2);
    CHECK_FALSE(r.passed());
    CHECK_THROWS_AS(b_lambda(sp({3}), 2), VerificationFailure);
}

TEST_CASE("operators keep fillings semistandard and readings agree (|lambda| <= 6, n <= 3)") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lambda : strict_partitions(6, n)) {
            CHECK_NOTHROW(crystal_of_shape(lambda, n, Reading::Row));
            CHECK(check_reading_independence(lambda, n).passed());
        }
}

TEST_CASE("structure checks on shapes where they hold") {
    for (const auto& lambda : {sp({1}), sp({2}), sp({2, 1}), sp({3, 1})})
        CHECK(check_theorem_b(lambda, 3).passed());
    CHECK(check_theorem_e3(sp({1}), 3).passed());
    CHECK(verify_hw_formula(sp({1}), 3).passed());
    CHECK(verify_hw_formula(sp({2, 1}), 3).passed());
}

TEST_CASE("conjecture explorer is descriptive") {
    const ConjectureReport r = explore_conjecture(sp({1}), 2);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries.front().vector == Word(2, {1, 1}));
    CHECK(r.entries.front().expression == std::optional<std::string>("b_lambda ⊗ 1"));
    const ConjectureReport none = explore_conjecture(sp({2, 1}), 3, 0);
    CHECK(none.explored == 0);
    CHECK_FALSE(none.entries.empty());
    for (const auto& e : none.entries)
        CHECK_FALSE(e.expression.has_value());
}
