#pragma once

// Even part of the crystal structure on B^{\otimes N}: string lengths and
// Kashiwara operators e_i, f_i on words, computed two ways (the bracketing
// closed form, and the recursive two-factor tensor rule over an explicit
// bracketing), plus the Weyl group action.

#include "qcrystal/weight.hpp"
#include "qcrystal/word.hpp"

#include <cstddef>
#include <memory>
#include <optional>

namespace qcrystal {

Weight weight_of(const Word& w);

// Bracketing closed form: each factor contributes "-"^eps "+"^phi, adjacent
// "+-" pairs cancel, the survivors read -^a +^b.
int eps(int i, const Word& w);
int phi(int i, const Word& w);
std::optional<Word> e_even(int i, const Word& w);
std::optional<Word> f_even(int i, const Word& w);

// A full binary bracketing of N tensor factors; leaves are single letters.
class Bracketing {
  public:
    static Bracketing leaf();
    static Bracketing join(const Bracketing& left, const Bracketing& right);
    // (((b1 ⊗ b2) ⊗ b3) ⊗ ...)
    static Bracketing left_nested(std::size_t length);
    // (b1 ⊗ (b2 ⊗ (b3 ⊗ ...)))
    static Bracketing right_nested(std::size_t length);

    std::size_t size() const noexcept;
    bool is_leaf() const noexcept;
    const Bracketing& left() const;
    const Bracketing& right() const;

  private:
    struct Node;
    explicit Bracketing(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Two-factor rule applied recursively along `br`; string lengths of the
// factors are obtained by iterating the operators themselves.
std::optional<Word> e_even_tensor_rule(int i, const Word& w, const Bracketing& br);
std::optional<Word> f_even_tensor_rule(int i, const Word& w, const Bracketing& br);
std::optional<Word> e_even_tensor_rule(int i, const Word& w);  // left-nested
std::optional<Word> f_even_tensor_rule(int i, const Word& w);

// Simple reflection S_i and S_w (rightmost reflection first).
Word weyl_s(int i, const Word& w);
Word weyl_S(const ReducedWord& rw, const Word& w);

} // namespace qcrystal
