#pragma once

#include "qcrystal/weight.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qcrystal {

using Letter = int;

// An element of B^{\otimes N}; position 0 is the leftmost tensor factor.
class Word {
  public:
    Word() = default;
    explicit Word(int rank);
    Word(int rank, std::vector<Letter> letters);
    Word(int rank, std::initializer_list<Letter> letters);

    int rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t pos) const { return letters_[pos]; }
    std::span<const Letter> letters() const noexcept { return letters_; }

    Weight weight() const;
    Word with_letter(std::size_t pos, Letter value) const;
    Word slice(std::size_t offset, std::size_t count) const;
    Word concat(const Word& right) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    // "1⊗2⊗3"; the empty word prints as "∅"
    std::string to_string() const;

  private:
    int rank_ = 0;
    std::vector<Letter> letters_;
};

// All words of the given length over 1..rank, lexicographic.
std::vector<Word> all_words(int rank, std::size_t length);

// Edge labels stored in a q(n)-crystal: even i in 1..n-1, or the odd label ī.
struct Label {
    int index = 1;
    bool odd = false;

    static constexpr Label even(int i) { return Label{i, false}; }
    static constexpr Label bar(int i) { return Label{i, true}; }

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;

    // "1", "2", ..., "1bar"
    std::string to_string() const;
};

// A crystal operator: e_l (raising) or f_l (lowering) for a label l.
struct CrystalOp {
    Label label;
    bool raising = false;

    static constexpr CrystalOp e(Label l) { return CrystalOp{l, true}; }
    static constexpr CrystalOp f(Label l) { return CrystalOp{l, false}; }

    friend bool operator==(const CrystalOp&, const CrystalOp&) = default;

    // "e1", "f2", "e1bar", ...
    std::string to_string() const;
};

// Labels carried by a stored crystal graph: 1..n-1 then 1bar (none for n = 1).
std::vector<Label> stored_labels(int rank);

// A reduced expression s_{i_1} ... s_{i_l} in the symmetric group S_n.
class ReducedWord {
  public:
    ReducedWord() = default;
    // Throws std::invalid_argument when an index is out of range or the
    // expression is not reduced.
    ReducedWord(int rank, std::vector<int> indices);

    int rank() const noexcept { return rank_; }
    std::span<const int> indices() const noexcept { return indices_; }
    std::size_t length() const noexcept { return indices_.size(); }
    ReducedWord inverse() const;
    // One-line notation of the permutation (images of 1..n).
    std::vector<int> permutation() const;

  private:
    int rank_ = 0;
    std::vector<int> indices_;
};

// w = s_2 ... s_i s_1 ... s_{i-1}, the shortest element with w(alpha_i) = alpha_1.
ReducedWord conjugating_word(int rank, int i);

} // namespace qcrystal

template <> struct std::hash<qcrystal::Word> {
    std::size_t operator()(const qcrystal::Word& w) const noexcept {
        std::size_t h = static_cast<std::size_t>(w.size()) * 0x9e3779b97f4a7c15ULL;
        for (qcrystal::Letter x : w.letters())
            h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        return h;
    }
};
