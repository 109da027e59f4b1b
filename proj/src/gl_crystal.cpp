#include "qcrystal/gl_crystal.hpp"

#include <stdexcept>
#include <vector>

namespace qcrystal {

namespace {

void check_even_index(int i, int rank) {
    if (i < 1 || i >= rank)
        throw std::out_of_range("even index " + std::to_string(i) + " outside 1..n-1");
}

struct Signature {
    std::vector<std::size_t> minus; // unmatched '-' positions, left to right
    std::vector<std::size_t> plus;  // unmatched '+' positions, left to right
};

Signature signature(int i, const Word& w) {
    Signature s;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == i + 1) {
            if (!s.plus.empty())
                s.plus.pop_back();
            else
                s.minus.push_back(p);
        } else if (w[p] == i) {
            s.plus.push_back(p);
        }
    }
    return s;
}

} // namespace

Weight weight_of(const Word& w) { return w.weight(); }

int eps(int i, const Word& w) {
    check_even_index(i, w.rank());
    return static_cast<int>(signature(i, w).minus.size());
}

int phi(int i, const Word& w) {
    check_even_index(i, w.rank());
    return static_cast<int>(signature(i, w).plus.size());
}

std::optional<Word> e_even(int i, const Word& w) {
    check_even_index(i, w.rank());
    const auto s = signature(i, w);
    if (s.minus.empty())
        return std::nullopt;
    return w.with_letter(s.minus.back(), i);
}

std::optional<Word> f_even(int i, const Word& w) {
    check_even_index(i, w.rank());
    const auto s = signature(i, w);
    if (s.plus.empty())
        return std::nullopt;
    return w.with_letter(s.plus.front(), i + 1);
}

struct Bracketing::Node {
    std::size_t size = 1;
    std::optional<Bracketing> left, right;
};

Bracketing Bracketing::leaf() { return Bracketing(std::make_shared<const Node>()); }

Bracketing Bracketing::join(const Bracketing& left, const Bracketing& right) {
    auto node = std::make_shared<Node>();
    node->size = left.size() + right.size();
    node->left = left;
    node->right = right;
    return Bracketing(std::move(node));
}

Bracketing Bracketing::left_nested(std::size_t length) {
    if (length == 0)
        throw std::invalid_argument("bracketing needs at least one factor");
    Bracketing b = leaf();
    for (std::size_t k = 1; k < length; ++k)
        b = join(b, leaf());
    return b;
}

Bracketing Bracketing::right_nested(std::size_t length) {
    if (length == 0)
        throw std::invalid_argument("bracketing needs at least one factor");
    Bracketing b = leaf();
    for (std::size_t k = 1; k < length; ++k)
        b = join(leaf(), b);
    return b;
}

std::size_t Bracketing::size() const noexcept { return node_->size; }
bool Bracketing::is_leaf() const noexcept { return !node_->left.has_value(); }
const Bracketing& Bracketing::left() const { return node_->left.value(); }
const Bracketing& Bracketing::right() const { return node_->right.value(); }

namespace {

std::optional<Word> tensor_rule(bool raise, int i, const Word& w, const Bracketing& br);

int string_length(bool raise, int i, const Word& w, const Bracketing& br) {
    int k = 0;
    for (auto cur = tensor_rule(raise, i, w, br); cur; cur = tensor_rule(raise, i, *cur, br))
        ++k;
    return k;
}

std::optional<Word> tensor_rule(bool raise, int i, const Word& w, const Bracketing& br) {
    if (br.is_leaf()) {
        const Letter x = w[0];
        if (raise && x == i + 1)
            return Word(w.rank(), {i});
        if (!raise && x == i)
            return Word(w.rank(), {i + 1});
        return std::nullopt;
    }
    const std::size_t cut = br.left().size();
    const Word b1 = w.slice(0, cut);
    const Word b2 = w.slice(cut, w.size() - cut);
    const int phi1 = string_length(false, i, b1, br.left());
    const int eps2 = string_length(true, i, b2, br.right());
    const bool on_left = raise ? phi1 >= eps2 : phi1 > eps2;
    if (on_left) {
        auto moved = tensor_rule(raise, i, b1, br.left());
        if (!moved)
            return std::nullopt;
        return moved->concat(b2);
    }
    auto moved = tensor_rule(raise, i, b2, br.right());
    if (!moved)
        return std::nullopt;
    return b1.concat(*moved);
}

std::optional<Word> tensor_rule_checked(bool raise, int i, const Word& w, const Bracketing& br) {
    check_even_index(i, w.rank());
    if (br.size() != w.size())
        throw std::invalid_argument("bracketing size does not match word length");
    if (w.empty())
        return std::nullopt;
    return tensor_rule(raise, i, w, br);
}

} // namespace

std::optional<Word> e_even_tensor_rule(int i, const Word& w, const Bracketing& br) {
    return tensor_rule_checked(true, i, w, br);
}

std::optional<Word> f_even_tensor_rule(int i, const Word& w, const Bracketing& br) {
    return tensor_rule_checked(false, i, w, br);
}

std::optional<Word> e_even_tensor_rule(int i, const Word& w) {
    if (w.empty())
        return std::nullopt;
    return e_even_tensor_rule(i, w, Bracketing::left_nested(w.size()));
}

std::optional<Word> f_even_tensor_rule(int i, const Word& w) {
    if (w.empty())
        return std::nullopt;
    return f_even_tensor_rule(i, w, Bracketing::left_nested(w.size()));
}

Word weyl_s(int i, const Word& w) {
    check_even_index(i, w.rank());
    const int m = w.weight().coroot_pairing(i);
    Word cur = w;
    for (int k = 0; k < (m >= 0 ? m : -m); ++k)
        cur = (m >= 0 ? f_even(i, cur) : e_even(i, cur)).value();
    return cur;
}

Word weyl_S(const ReducedWord& rw, const Word& w) {
    if (rw.rank() != w.rank())
        throw std::invalid_argument("reduced word rank mismatch");
    Word cur = w;
    const auto idx = rw.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
        cur = weyl_s(*it, cur);
    return cur;
}

} // namespace qcrystal
