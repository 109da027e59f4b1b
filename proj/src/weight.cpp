#include "qcrystal/weight.hpp"

#include <stdexcept>

namespace qcrystal {

Weight::Weight(int rank) {
    if (rank < 0)
        throw std::invalid_argument("weight rank must be non-negative");
    entries_.assign(static_cast<std::size_t>(rank), 0);
}

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {}

Weight::Weight(std::initializer_list<int> entries) : entries_(entries) {}

Weight Weight::epsilon(int rank, int j) {
    if (j < 1 || j > rank)
        throw std::out_of_range("epsilon index out of range");
    Weight w(rank);
    w.entries_[static_cast<std::size_t>(j - 1)] = 1;
    return w;
}

Weight Weight::simple_root(int rank, int i) {
    if (i < 1 || i >= rank)
        throw std::out_of_range("simple root index out of range");
    Weight w(rank);
    w.entries_[static_cast<std::size_t>(i - 1)] = 1;
    w.entries_[static_cast<std::size_t>(i)] = -1;
    return w;
}

int Weight::total() const noexcept {
    int s = 0;
    for (int x : entries_)
        s += x;
    return s;
}

bool Weight::is_nonnegative() const noexcept {
    for (int x : entries_)
        if (x < 0)
            return false;
    return true;
}

bool Weight::is_strict_dominant() const noexcept {
    if (!is_nonnegative())
        return false;
    for (std::size_t j = 0; j + 1 < entries_.size(); ++j) {
        if (entries_[j] < entries_[j + 1])
            return false;
        if (entries_[j] == entries_[j + 1] && entries_[j] != 0)
            return false;
    }
    return true;
}

Weight Weight::reflected(int i) const {
    if (i < 1 || i >= rank())
        throw std::out_of_range("reflection index out of range");
    Weight w = *this;
    std::swap(w.entries_[static_cast<std::size_t>(i - 1)], w.entries_[static_cast<std::size_t>(i)]);
    return w;
}

Weight& Weight::operator+=(const Weight& other) {
    if (other.rank() != rank())
        throw std::invalid_argument("weight rank mismatch");
    for (std::size_t j = 0; j < entries_.size(); ++j)
        entries_[j] += other.entries_[j];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (other.rank() != rank())
        throw std::invalid_argument("weight rank mismatch");
    for (std::size_t j = 0; j < entries_.size(); ++j)
        entries_[j] -= other.entries_[j];
    return *this;
}

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (j)
            s += ",";
        s += std::to_string(entries_[j]);
    }
    return s + ")";
}

} // namespace qcrystal
