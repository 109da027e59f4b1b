#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qcrystal {

// Element of P = Z e_1 + ... + Z e_n, stored by coefficients.
// Index j in pairing(j) is 1-based so that pairing(j) = <k_j, mu>.
class Weight {
  public:
    Weight() = default;
    explicit Weight(int rank);
    explicit Weight(std::vector<int> entries);
    Weight(std::initializer_list<int> entries);

    static Weight epsilon(int rank, int j);
    static Weight simple_root(int rank, int i);

    int rank() const noexcept { return static_cast<int>(entries_.size()); }
    int pairing(int j) const { return entries_.at(static_cast<std::size_t>(j - 1)); }
    std::span<const int> entries() const noexcept { return entries_; }

    // <k_i - k_{i+1}, mu>
    int coroot_pairing(int i) const { return pairing(i) - pairing(i + 1); }
    int total() const noexcept;
    bool is_nonnegative() const noexcept;
    // Element of Lambda^+: decreasing, and equal neighbours only when both vanish.
    bool is_strict_dominant() const noexcept;

    // s_i: swap entries i and i+1.
    Weight reflected(int i) const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string to_string() const;

  private:
    std::vector<int> entries_;
};

} // namespace qcrystal

template <> struct std::hash<qcrystal::Weight> {
    std::size_t operator()(const qcrystal::Weight& w) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : w.entries())
            h ^= static_cast<std::size_t>(x + 0x51) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};
