#include "qcrystal/q_crystal.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qcrystal {

namespace {

void check_odd_rank(const Word& w) {
    if (w.rank() < 2)
        throw std::out_of_range("odd operators need rank >= 2");
}

std::optional<Word> odd_rule(bool raise, const Word& w, const Bracketing& br) {
    if (br.is_leaf()) {
        if (raise && w[0] == 2)
            return Word(w.rank(), {1});
        if (!raise && w[0] == 1)
            return Word(w.rank(), {2});
        return std::nullopt;
    }
    const std::size_t cut = br.left().size();
    const Word b1 = w.slice(0, cut);
    const Word b2 = w.slice(cut, w.size() - cut);
    const Weight wt2 = b2.weight();
    if (wt2.pairing(1) == 0 && wt2.pairing(2) == 0) {
        auto moved = odd_rule(raise, b1, br.left());
        if (!moved)
            return std::nullopt;
        return moved->concat(b2);
    }
    auto moved = odd_rule(raise, b2, br.right());
    if (!moved)
        return std::nullopt;
    return b1.concat(*moved);
}

std::optional<Word> odd_rule_checked(bool raise, const Word& w, const Bracketing& br) {
    check_odd_rank(w);
    if (br.size() != w.size())
        throw std::invalid_argument("bracketing size does not match word length");
    return odd_rule(raise, w, br);
}

std::optional<Word> odd_fast(bool raise, const Word& w) {
    check_odd_rank(w);
    for (std::size_t p = w.size(); p-- > 0;) {
        if (w[p] == 1)
            return raise ? std::nullopt : std::optional<Word>(w.with_letter(p, 2));
        if (w[p] == 2)
            return raise ? std::optional<Word>(w.with_letter(p, 1)) : std::nullopt;
    }
    return std::nullopt;
}

void check_odd_index(int i, const Word& w) {
    if (i < 1 || i >= w.rank())
        throw std::out_of_range("odd index " + std::to_string(i) + " outside 1..n-1");
}

} // namespace

std::optional<Word> fbar1(const Word& w, const Bracketing& br) { return odd_rule_checked(false, w, br); }
std::optional<Word> ebar1(const Word& w, const Bracketing& br) { return odd_rule_checked(true, w, br); }

std::optional<Word> fbar1(const Word& w) {
    if (w.empty()) {
        check_odd_rank(w);
        return std::nullopt;
    }
    return fbar1(w, Bracketing::left_nested(w.size()));
}

std::optional<Word> ebar1(const Word& w) {
    if (w.empty()) {
        check_odd_rank(w);
        return std::nullopt;
    }
    return ebar1(w, Bracketing::left_nested(w.size()));
}

std::optional<Word> fbar1_fast(const Word& w) { return odd_fast(false, w); }
std::optional<Word> ebar1_fast(const Word& w) { return odd_fast(true, w); }

std::optional<Word> ebar_i(int i, const Word& w) {
    check_odd_index(i, w);
    return ebar(WordCrystal(w.rank()), i, w);
}

std::optional<Word> fbar_i(int i, const Word& w) {
    check_odd_index(i, w);
    return fbar(WordCrystal(w.rank()), i, w);
}

bool is_highest_weight(const Word& w) { return is_highest_weight(WordCrystal(w.rank()), w); }

CrystalNode word_node(const Word& w) { return CrystalNode{w, w.weight(), std::nullopt}; }

CrystalGraph closure(const Word& seed) {
    const WordCrystal c(seed.rank());
    return graph_from_elements(c, closure_elements(c, seed), word_node);
}

CrystalGraph tensor_power(int rank, std::size_t length) {
    return graph_from_elements(WordCrystal(rank), all_words(rank, length), word_node);
}

CrystalGraph vector_crystal(int rank) { return tensor_power(rank, 1); }

std::vector<CrystalGraph> components(const std::vector<Word>& elements) {
    if (elements.empty())
        return {};
    const int rank = elements.front().rank();
    const WordCrystal c(rank);
    std::unordered_set<Word> pending(elements.begin(), elements.end());
    std::vector<Word> sorted(pending.begin(), pending.end());
    std::sort(sorted.begin(), sorted.end(), [](const Word& a, const Word& b) {
        const Weight wa = a.weight(), wb = b.weight();
        if (wa != wb)
            return wa > wb;
        return a < b;
    });
    std::vector<CrystalGraph> out;
    for (const Word& w : sorted) {
        if (!pending.contains(w))
            continue;
        auto members = closure_elements(c, w);
        for (const Word& m : members)
            if (pending.erase(m) == 0)
                throw std::invalid_argument("element set is not closed: " + m.to_string() +
                                            " reached from " + w.to_string());
        out.push_back(graph_from_elements(c, members, word_node));
    }
    return out;
}

} // namespace qcrystal
