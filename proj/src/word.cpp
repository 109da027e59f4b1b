#include "qcrystal/word.hpp"

#include <numeric>
#include <stdexcept>

namespace qcrystal {

namespace {

void check_letter(int rank, Letter x) {
    if (x < 1 || x > rank)
        throw std::invalid_argument("letter " + std::to_string(x) + " outside 1.." +
                                    std::to_string(rank));
}

} // namespace

Word::Word(int rank) : rank_(rank) {
    if (rank < 1)
        throw std::invalid_argument("rank must be at least 1");
}

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
    if (rank < 1)
        throw std::invalid_argument("rank must be at least 1");
    for (Letter x : letters_)
        check_letter(rank_, x);
}

Word::Word(int rank, std::initializer_list<Letter> letters)
    : Word(rank, std::vector<Letter>(letters)) {}

Weight Word::weight() const {
    std::vector<int> wt(static_cast<std::size_t>(rank_), 0);
    for (Letter x : letters_)
        ++wt[static_cast<std::size_t>(x - 1)];
    return Weight(std::move(wt));
}

Word Word::with_letter(std::size_t pos, Letter value) const {
    check_letter(rank_, value);
    Word w = *this;
    w.letters_.at(pos) = value;
    return w;
}

Word Word::slice(std::size_t offset, std::size_t count) const {
    if (offset + count > letters_.size())
        throw std::out_of_range("word slice out of range");
    Word w(rank_);
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(offset),
                      letters_.begin() + static_cast<std::ptrdiff_t>(offset + count));
    return w;
}

Word Word::concat(const Word& right) const {
    if (right.rank_ != rank_)
        throw std::invalid_argument("word rank mismatch");
    Word w = *this;
    w.letters_.insert(w.letters_.end(), right.letters_.begin(), right.letters_.end());
    return w;
}

std::string Word::to_string() const {
    if (letters_.empty())
        return "∅";
    std::string s;
    for (std::size_t p = 0; p < letters_.size(); ++p) {
        if (p)
            s += "⊗";
        s += std::to_string(letters_[p]);
    }
    return s;
}

std::vector<Word> all_words(int rank, std::size_t length) {
    std::vector<Word> out;
    std::vector<Letter> cur(length, 1);
    while (true) {
        out.emplace_back(rank, cur);
        std::size_t p = length;
        while (p > 0 && cur[p - 1] == rank)
            cur[--p] = 1;
        if (p == 0)
            break;
        ++cur[p - 1];
    }
    return out;
}

std::string Label::to_string() const {
    return std::to_string(index) + (odd ? "bar" : "");
}

std::string CrystalOp::to_string() const {
    return (raising ? "e" : "f") + label.to_string();
}

std::vector<Label> stored_labels(int rank) {
    std::vector<Label> out;
    for (int i = 1; i < rank; ++i)
        out.push_back(Label::even(i));
    if (rank >= 2)
        out.push_back(Label::bar(1));
    return out;
}

ReducedWord::ReducedWord(int rank, std::vector<int> indices)
    : rank_(rank), indices_(std::move(indices)) {
    if (rank < 1)
        throw std::invalid_argument("rank must be at least 1");
    for (int i : indices_)
        if (i < 1 || i >= rank)
            throw std::invalid_argument("simple reflection index " + std::to_string(i) +
                                        " out of range");
    const auto perm = permutation();
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                ++inversions;
    if (inversions != indices_.size())
        throw std::invalid_argument("expression is not reduced");
}

ReducedWord ReducedWord::inverse() const {
    ReducedWord r;
    r.rank_ = rank_;
    r.indices_.assign(indices_.rbegin(), indices_.rend());
    return r;
}

std::vector<int> ReducedWord::permutation() const {
    std::vector<int> perm(static_cast<std::size_t>(rank_));
    std::iota(perm.begin(), perm.end(), 1);
    // w = s_{i_1} ... s_{i_l}; w(j) computed by applying s_{i_l} first.
    for (std::size_t j = 0; j < perm.size(); ++j) {
        int x = perm[j];
        for (auto it = indices_.rbegin(); it != indices_.rend(); ++it) {
            if (x == *it)
                x = *it + 1;
            else if (x == *it + 1)
                x = *it;
        }
        perm[j] = x;
    }
    return perm;
}

ReducedWord conjugating_word(int rank, int i) {
    if (i < 2 || i >= rank)
        throw std::invalid_argument("conjugating word needs 2 <= i <= n-1");
    std::vector<int> idx;
    for (int k = 2; k <= i; ++k)
        idx.push_back(k);
    for (int k = 1; k <= i - 1; ++k)
        idx.push_back(k);
    return ReducedWord(rank, std::move(idx));
}

} // namespace qcrystal
