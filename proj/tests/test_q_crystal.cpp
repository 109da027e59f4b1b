#include "qcrystal/q_crystal.hpp"
#include "qcrystal/tableau_crystal.hpp"
#include "qcrystal/theorems.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

using namespace qcrystal;

namespace {

Word w(int n, std::initializer_list<Letter> ls) { return Word(n, ls); }

std::vector<Word> words_up_to(int n, std::size_t len) {
    std::vector<Word> out;
    for (std::size_t l = 0; l <= len; ++l)
        for (auto& x : all_words(n, l))
            out.push_back(std::move(x));
    return out;
}

using EdgeText = std::set<std::tuple<std::string, std::string, std::string>>;

EdgeText edge_text(const CrystalGraph& g) {
    EdgeText out;
    for (const auto& e : g.edges())
        out.emplace(g.node(e.source).word.to_string(), e.label.to_string(), g.node(e.target).word.to_string());
    return out;
}

} // namespace

TEST_CASE("odd operator 1bar on short words") {
    CHECK(fbar1(w(3, {1, 1})) == w(3, {1, 2}));
    CHECK(fbar1(w(3, {1, 3})) == w(3, {2, 3}));
    CHECK_FALSE(fbar1(w(3, {2, 2})).has_value());
    CHECK(ebar1(w(3, {1, 2})) == w(3, {1, 1}));
    CHECK(fbar1_fast(w(3, {1, 1})) == w(3, {1, 2}));
    CHECK_FALSE(fbar1_fast(w(3, {3, 3})).has_value());
    CHECK_FALSE(fbar1_fast(w(3, {1, 2, 3})).has_value());
}

TEST_CASE("conjugated odd operator 2bar (n = 3)") {
    CHECK(fbar_i(2, w(3, {2})) == w(3, {3}));
    CHECK_FALSE(fbar_i(2, w(3, {1})).has_value());
    CHECK_FALSE(fbar_i(2, w(3, {3})).has_value());
    CHECK(fbar_i(2, w(3, {2, 2})) == w(3, {2, 3}));
    CHECK(fbar_i(2, w(3, {3, 2})) == w(3, {3, 3}));
    CHECK(ebar_i(2, w(3, {3})) == w(3, {2}));
}

TEST_CASE("fast odd rule equals the recursive rule (n <= 4, length <= 6)") {
    for (int n = 2; n <= 4; ++n)
        for (const Word& x : words_up_to(n, 6)) {
            REQUIRE(fbar1_fast(x) == fbar1(x));
            REQUIRE(ebar1_fast(x) == ebar1(x));
        }
}

TEST_CASE("odd rule does not depend on the bracketing (length <= 4)") {
    for (const Word& x : all_words(3, 4)) {
        const auto ref = fbar1(x);
        CHECK(fbar1(x, Bracketing::right_nested(4)) == ref);
        CHECK(fbar1(x, Bracketing::join(Bracketing::left_nested(2), Bracketing::left_nested(2))) == ref);
    }
}

TEST_CASE("odd operators: nilpotence, pairing, weight shift") {
    for (int n = 2; n <= 4; ++n)
        for (const Word& x : words_up_to(n, 5)) {
            if (auto y = fbar1(x)) {
                CHECK_FALSE(fbar1(*y).has_value());
                CHECK(ebar1(*y) == x);
                CHECK(y->weight() == x.weight() - Weight::simple_root(n, 1));
            }
            if (auto y = ebar1(x)) {
                CHECK_FALSE(ebar1(*y).has_value());
                CHECK(y->weight() == x.weight() + Weight::simple_root(n, 1));
            }
            for (int i = 2; i < n; ++i)
                if (auto y = fbar_i(i, x)) {
                    CHECK(ebar_i(i, *y) == x);
                    CHECK(y->weight() == x.weight() - Weight::simple_root(n, i));
                }
        }
}

TEST_CASE("odd 3bar from two reduced words agrees (n = 4)") {
    const WordCrystal c(4);
    const ReducedWord a(4, {2, 3, 1, 2}), b(4, {2, 1, 3, 2});
    for (const Word& x : words_up_to(4, 4)) {
        CHECK(ebar_via(c, a, x) == ebar_via(c, b, x));
        CHECK(fbar_via(c, a, x) == fbar_via(c, b, x));
    }
}

TEST_CASE("highest weight words") {
    CHECK(is_highest_weight(w(3, {1, 1})));
    CHECK_FALSE(is_highest_weight(w(3, {2, 1})));
    for (std::size_t len = 1; len <= 5; ++len)
        CHECK(is_highest_weight(Word(4, std::vector<Letter>(len, 1))));
}

TEST_CASE("vector crystal is a chain with a doubled first arrow") {
    const CrystalGraph g = closure(w(3, {1}));
    CHECK(g.size() == 3);
    CHECK(edge_text(g) == EdgeText{{"1", "1", "2"}, {"1", "1bar", "2"}, {"2", "2", "3"}});
    const CrystalGraph single = closure(w(1, {1}));
    CHECK(single.size() == 1);
    CHECK(single.edges().empty());
}

TEST_CASE("B ⊗ B for n = 3 matches the hand-drawn nine-node graph") {
    const EdgeText expected{
        {"1⊗1", "1", "2⊗1"},    {"1⊗1", "1bar", "1⊗2"}, {"2⊗1", "2", "3⊗1"},    {"2⊗1", "1", "2⊗2"},
        {"2⊗1", "1bar", "2⊗2"}, {"3⊗1", "1", "3⊗2"},    {"3⊗1", "1bar", "3⊗2"}, {"1⊗2", "2", "1⊗3"},
        {"2⊗2", "2", "3⊗2"},    {"1⊗3", "1", "2⊗3"},    {"1⊗3", "1bar", "2⊗3"}, {"3⊗2", "2", "3⊗3"},
    };
    const CrystalGraph g = closure(w(3, {1, 1}));
    CHECK(g.size() == 9);
    CHECK(edge_text(g) == expected);
    CHECK(same_crystal(g, tensor_power(3, 2)));
    CHECK(same_crystal(tensor_product(vector_crystal(3), vector_crystal(3)), tensor_power(3, 2)));
}

TEST_CASE("components of small tensor powers") {
    CHECK(components(all_words(3, 2)).size() == 1);
    CHECK(components(all_words(2, 2)).front().size() == 4);
    auto sizes = [](int n, std::size_t len) {
        std::vector<std::size_t> s;
        for (const auto& c : connected_components(tensor_power(n, len)))
            s.push_back(c.size());
        std::sort(s.rbegin(), s.rend());
        return s;
    };
    // Reference sizes from an independent enumeration.
    CHECK(sizes(2, 2) == std::vector<std::size_t>{4});
    CHECK(sizes(3, 2) == std::vector<std::size_t>{9});
    CHECK(sizes(2, 3) == std::vector<std::size_t>{6, 2});
    CHECK(sizes(3, 3) == std::vector<std::size_t>{19, 8});
}

TEST_CASE("each component of B^N has one highest weight vector of strict weight (n <= 3, N <= 5)") {
    for (int n = 1; n <= 3; ++n)
        for (std::size_t len = 1; len <= 5; ++len)
            for (const CrystalGraph& comp : connected_components(tensor_power(n, len))) {
                const auto hw = highest_weight_nodes(comp);
                REQUIRE(hw.size() == 1);
                CHECK(comp.node(hw.front()).weight.is_strict_dominant());
                CHECK(comp.invariant_violations().empty());
            }
}

TEST_CASE("isomorphism of crystals") {
    const CrystalGraph g = closure(w(2, {1, 1}));
    const auto id = isomorphic(g, g);
    REQUIRE(id.has_value());
    for (std::size_t k = 0; k < g.size(); ++k)
        CHECK((*id)[k] == k);
    CHECK(isomorphic(g, crystal_of_shape(StrictPartition({2}), 2)).has_value());
    CHECK_FALSE(isomorphic(closure(w(2, {1})), g).has_value());
    CHECK_THROWS_AS(isomorphic(tensor_power(2, 3), g), std::invalid_argument);
}

TEST_CASE("B ⊗ B(1) decomposes as B(2) for n = 3") {
    const Decomposition d = decompose_product(vector_crystal(3), crystal_of_shape(StrictPartition({1}), 3));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components.front().graph.size() == 9);
    CHECK(d.components.front().label == StrictPartition({2}));
    CHECK(d.report.passed());
}
