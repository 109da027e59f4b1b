#pragma once

#include "qcrystal/crystal.hpp"
#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/gl_crystal.hpp"
#include "qcrystal/word.hpp"

#include <optional>
#include <vector>

namespace qcrystal {

// Odd operators on B^{\otimes N} by the recursive two-factor rule: on
// b1 ⊗ b2 act on b1 iff <k_1, wt b2> = <k_2, wt b2> = 0, otherwise on b2.
// On single letters f_1bar: 1 -> 2 and e_1bar: 2 -> 1.
std::optional<Word> fbar1(const Word& w, const Bracketing& br);
std::optional<Word> ebar1(const Word& w, const Bracketing& br);
std::optional<Word> fbar1(const Word& w);  // left-nested
std::optional<Word> ebar1(const Word& w);

// Closed form: look at the rightmost letter in {1, 2}.
std::optional<Word> fbar1_fast(const Word& w);
std::optional<Word> ebar1_fast(const Word& w);

// Conjugated odd operators; i = 1 gives e_1bar / f_1bar.
std::optional<Word> ebar_i(int i, const Word& w);
std::optional<Word> fbar_i(int i, const Word& w);

bool is_highest_weight(const Word& w);

// B^{\otimes N} as a QCrystal: signature rule for even operators, the
// closed form for odd ones.
class WordCrystal {
  public:
    using element_type = Word;
    explicit WordCrystal(int rank) : rank_(rank) {}

    int rank() const noexcept { return rank_; }
    std::optional<Word> e(int i, const Word& w) const { return e_even(i, w); }
    std::optional<Word> f(int i, const Word& w) const { return f_even(i, w); }
    std::optional<Word> ebar1(const Word& w) const { return ebar1_fast(w); }
    std::optional<Word> fbar1(const Word& w) const { return fbar1_fast(w); }
    int eps(int i, const Word& w) const { return qcrystal::eps(i, w); }
    int phi(int i, const Word& w) const { return qcrystal::phi(i, w); }
    Weight weight(const Word& w) const { return w.weight(); }

  private:
    int rank_;
};

CrystalNode word_node(const Word& w);

// Connected component of `seed` in B^{\otimes N}.
CrystalGraph closure(const Word& seed);

// The crystal on all words of length N over 1..rank.
CrystalGraph tensor_power(int rank, std::size_t length);
CrystalGraph vector_crystal(int rank);

// Partition of a closed set of words into components. Throws
// std::invalid_argument if the set is not closed under the operators.
std::vector<CrystalGraph> components(const std::vector<Word>& elements);

} // namespace qcrystal
