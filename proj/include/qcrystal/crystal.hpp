#pragma once

// Algorithms shared by every abstract q(n)-crystal model: words, tableaux
// and explicit graphs. A model supplies the even operators e_i/f_i, the odd
// operators e_1bar/f_1bar and the weight map; everything else (string
// lengths, the Weyl group action, the conjugated operators e_ibar/f_ibar,
// highest-weight tests) is derived here.

#include "qcrystal/weight.hpp"
#include "qcrystal/word.hpp"

#include <concepts>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace qcrystal {

template <class C>
concept QCrystal = requires(const C& c, const typename C::element_type& b, int i) {
    typename C::element_type;
    { c.rank() } -> std::convertible_to<int>;
    { c.e(i, b) } -> std::same_as<std::optional<typename C::element_type>>;
    { c.f(i, b) } -> std::same_as<std::optional<typename C::element_type>>;
    { c.ebar1(b) } -> std::same_as<std::optional<typename C::element_type>>;
    { c.fbar1(b) } -> std::same_as<std::optional<typename C::element_type>>;
    { c.weight(b) } -> std::convertible_to<Weight>;
};

template <QCrystal C>
using element_t = typename C::element_type;

// max{k : e_i^k b != 0}; models may provide a closed form.
template <QCrystal C>
int string_eps(const C& c, int i, const element_t<C>& b) {
    if constexpr (requires { { c.eps(i, b) } -> std::convertible_to<int>; }) {
        return c.eps(i, b);
    } else {
        int k = 0;
        for (auto cur = c.e(i, b); cur; cur = c.e(i, *cur))
            ++k;
        return k;
    }
}

template <QCrystal C>
int string_phi(const C& c, int i, const element_t<C>& b) {
    if constexpr (requires { { c.phi(i, b) } -> std::convertible_to<int>; }) {
        return c.phi(i, b);
    } else {
        int k = 0;
        for (auto cur = c.f(i, b); cur; cur = c.f(i, *cur))
            ++k;
        return k;
    }
}

// S_i b = f_i^m b for m = <k_i - k_{i+1}, wt b> >= 0, else e_i^{-m} b.
template <QCrystal C>
element_t<C> weyl_s(const C& c, int i, element_t<C> b) {
    const int m = Weight(c.weight(b)).coroot_pairing(i);
    for (int k = 0; k < (m >= 0 ? m : -m); ++k) {
        auto next = m >= 0 ? c.f(i, b) : c.e(i, b);
        if (!next)
            throw std::logic_error("i-string shorter than its weight allows; not a gl(n)-crystal");
        b = std::move(*next);
    }
    return b;
}

// S_w for w = s_{i_1} ... s_{i_l}; S_{i_l} acts first.
template <QCrystal C>
element_t<C> weyl_S(const C& c, const ReducedWord& w, element_t<C> b) {
    const auto idx = w.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
        b = weyl_s(c, *it, std::move(b));
    return b;
}

// e_ibar = S_{w^{-1}} e_1bar S_w with the supplied reduced expression of w.
template <QCrystal C>
std::optional<element_t<C>> ebar_via(const C& c, const ReducedWord& w, const element_t<C>& b) {
    auto moved = c.ebar1(weyl_S(c, w, b));
    if (!moved)
        return std::nullopt;
    return weyl_S(c, w.inverse(), std::move(*moved));
}

template <QCrystal C>
std::optional<element_t<C>> fbar_via(const C& c, const ReducedWord& w, const element_t<C>& b) {
    auto moved = c.fbar1(weyl_S(c, w, b));
    if (!moved)
        return std::nullopt;
    return weyl_S(c, w.inverse(), std::move(*moved));
}

template <QCrystal C>
std::optional<element_t<C>> ebar(const C& c, int i, const element_t<C>& b) {
    if (i == 1)
        return c.ebar1(b);
    return ebar_via(c, conjugating_word(c.rank(), i), b);
}

template <QCrystal C>
std::optional<element_t<C>> fbar(const C& c, int i, const element_t<C>& b) {
    if (i == 1)
        return c.fbar1(b);
    return fbar_via(c, conjugating_word(c.rank(), i), b);
}

template <QCrystal C>
std::optional<element_t<C>> apply_e(const C& c, Label l, const element_t<C>& b) {
    return l.odd ? ebar(c, l.index, b) : c.e(l.index, b);
}

template <QCrystal C>
std::optional<element_t<C>> apply_f(const C& c, Label l, const element_t<C>& b) {
    return l.odd ? fbar(c, l.index, b) : c.f(l.index, b);
}

// Annihilated by e_i and e_ibar for every i = 1..n-1.
template <QCrystal C>
bool is_highest_weight(const C& c, const element_t<C>& b) {
    const int n = c.rank();
    for (int i = 1; i < n; ++i)
        if (c.e(i, b))
            return false;
    if (n >= 2 && c.ebar1(b))
        return false;
    if (n >= 3) {
        // S_w for successive i share a prefix; cheap enough to recompute.
        for (int i = 2; i < n; ++i)
            if (ebar(c, i, b))
                return false;
    }
    return true;
}

// Connected component of `seed` under e_i, f_i (i = 1..n-1), e_1bar and
// f_1bar, in breadth-first discovery order.
template <QCrystal C, class Hash = std::hash<element_t<C>>>
std::vector<element_t<C>> closure_elements(const C& c, const element_t<C>& seed) {
    std::vector<element_t<C>> order{seed};
    std::unordered_set<element_t<C>, Hash> seen{seed};
    std::deque<element_t<C>> queue{seed};
    const int n = c.rank();
    auto visit = [&](std::optional<element_t<C>> x) {
        if (x && seen.insert(*x).second) {
            order.push_back(*x);
            queue.push_back(std::move(*x));
        }
    };
    while (!queue.empty()) {
        const element_t<C> b = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i < n; ++i) {
            visit(c.f(i, b));
            visit(c.e(i, b));
        }
        if (n >= 2) {
            visit(c.fbar1(b));
            visit(c.ebar1(b));
        }
    }
    return order;
}

} // namespace qcrystal
