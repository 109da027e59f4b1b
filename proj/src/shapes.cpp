#include "qcrystal/shapes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qcrystal {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t d = 0; d < parts_.size(); ++d) {
        if (parts_[d] <= 0)
            throw std::invalid_argument("strict partition parts must be positive");
        if (d > 0 && parts_[d] >= parts_[d - 1])
            throw std::invalid_argument("strict partition parts must strictly decrease");
    }
}

std::optional<StrictPartition> StrictPartition::from_weight(const Weight& w) {
    if (!w.is_strict_dominant())
        return std::nullopt;
    std::vector<int> parts;
    for (int x : w.entries())
        if (x > 0)
            parts.push_back(x);
    return StrictPartition(std::move(parts));
}

int StrictPartition::size() const noexcept {
    int s = 0;
    for (int x : parts_)
        s += x;
    return s;
}

Weight StrictPartition::to_weight(int rank) const {
    if (length() > rank)
        throw std::invalid_argument("partition " + to_string() + " has more than " +
                                    std::to_string(rank) + " parts");
    std::vector<int> w(static_cast<std::size_t>(rank), 0);
    std::copy(parts_.begin(), parts_.end(), w.begin());
    return Weight(std::move(w));
}

std::string StrictPartition::to_string() const {
    std::string s = "(";
    for (std::size_t d = 0; d < parts_.size(); ++d) {
        if (d)
            s += ",";
        s += std::to_string(parts_[d]);
    }
    return s + ")";
}

StrictPartition parse_strict_partition(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse partition '" + text + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("cannot parse partition '" + text + "'");
        parts.push_back(v);
    }
    if (parts.empty())
        throw std::invalid_argument("empty partition");
    return StrictPartition(std::move(parts));
}

std::vector<StrictPartition> strict_partitions(int max_size, int max_length) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> grow = [&](int remaining, int bound) {
        if (!cur.empty())
            out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_length)
            return;
        for (int p = std::min(remaining, bound); p >= 1; --p) {
            cur.push_back(p);
            grow(remaining - p, p - 1);
            cur.pop_back();
        }
    };
    grow(max_size, max_size);
    std::sort(out.begin(), out.end(), [](const StrictPartition& a, const StrictPartition& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a > b;
    });
    return out;
}

SkewShape::SkewShape(StrictPartition lambda) : lambda_(std::move(lambda)) {
    const auto parts = lambda_.parts();
    const int top = parts.empty() ? 0 : parts[0];
    for (int d = 1; d <= lambda_.length(); ++d)
        for (int i = d; i <= d + parts[static_cast<std::size_t>(d - 1)] - 1; ++i)
            boxes_.push_back(Box{i, top + d - i});
    std::sort(boxes_.begin(), boxes_.end());

    right_.assign(boxes_.size(), npos);
    below_.assign(boxes_.size(), npos);
    for (std::size_t k = 0; k < boxes_.size(); ++k) {
        const Box b = boxes_[k];
        if (auto it = std::lower_bound(boxes_.begin(), boxes_.end(), Box{b.row, b.col + 1});
            it != boxes_.end() && *it == Box{b.row, b.col + 1})
            right_[k] = static_cast<std::size_t>(it - boxes_.begin());
        if (auto it = std::lower_bound(boxes_.begin(), boxes_.end(), Box{b.row + 1, b.col});
            it != boxes_.end() && *it == Box{b.row + 1, b.col})
            below_[k] = static_cast<std::size_t>(it - boxes_.begin());
    }

    for (std::size_t k = 0; k < boxes_.size(); ++k)
        row_reading_.push_back(k);
    std::sort(row_reading_.begin(), row_reading_.end(), [&](std::size_t a, std::size_t b) {
        if (boxes_[a].row != boxes_[b].row)
            return boxes_[a].row < boxes_[b].row;
        return boxes_[a].col > boxes_[b].col;
    });
    column_reading_ = row_reading_;
    std::sort(column_reading_.begin(), column_reading_.end(), [&](std::size_t a, std::size_t b) {
        if (boxes_[a].col != boxes_[b].col)
            return boxes_[a].col > boxes_[b].col;
        return boxes_[a].row < boxes_[b].row;
    });
}

std::size_t SkewShape::index_of(Box b) const {
    auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
    if (it == boxes_.end() || *it != b)
        throw std::out_of_range("box not in shape");
    return static_cast<std::size_t>(it - boxes_.begin());
}

std::vector<int> SkewShape::row_lengths() const {
    std::vector<int> out;
    for (const Box& b : boxes_) {
        if (static_cast<int>(out.size()) < b.row)
            out.resize(static_cast<std::size_t>(b.row), 0);
        ++out[static_cast<std::size_t>(b.row - 1)];
    }
    return out;
}

std::shared_ptr<const SkewShape> shape_from_partition(const StrictPartition& lambda) {
    return std::make_shared<const SkewShape>(lambda);
}

Tableau::Tableau(std::shared_ptr<const SkewShape> shape, int rank, std::vector<Letter> entries)
    : shape_(std::move(shape)), rank_(rank), entries_(std::move(entries)) {
    if (!shape_)
        throw std::invalid_argument("tableau needs a shape");
    if (entries_.size() != shape_->size())
        throw std::invalid_argument("entry count does not match shape");
    for (Letter x : entries_)
        if (x < 1 || x > rank_)
            throw std::invalid_argument("tableau entry outside 1..n");
    if (!is_semistandard(*shape_, entries_))
        throw std::invalid_argument("filling is not semistandard");
}

bool Tableau::is_semistandard(const SkewShape& shape, std::span<const Letter> entries) {
    for (std::size_t k = 0; k < shape.size(); ++k) {
        if (auto r = shape.right_neighbour(k); r != SkewShape::npos && entries[k] > entries[r])
            return false;
        if (auto d = shape.lower_neighbour(k); d != SkewShape::npos && entries[k] >= entries[d])
            return false;
    }
    return true;
}

Weight Tableau::weight() const {
    std::vector<int> wt(static_cast<std::size_t>(rank_), 0);
    for (Letter x : entries_)
        ++wt[static_cast<std::size_t>(x - 1)];
    return Weight(std::move(wt));
}

std::span<const std::size_t> Tableau::reading_order(Reading r) const {
    return r == Reading::Row ? shape_->row_reading() : shape_->column_reading();
}

Word Tableau::read(Reading r) const {
    std::vector<Letter> letters;
    letters.reserve(entries_.size());
    for (std::size_t k : reading_order(r))
        letters.push_back(entries_[k]);
    return Word(rank_, std::move(letters));
}

Word reading_row(const Tableau& t) { return t.read(Reading::Row); }
Word reading_col(const Tableau& t) { return t.read(Reading::Column); }

std::vector<Tableau> enumerate_ssyt(const std::shared_ptr<const SkewShape>& shape, int rank) {
    if (rank < 1)
        throw std::invalid_argument("rank must be at least 1");
    const SkewShape& sh = *shape;
    const std::size_t m = sh.size();
    // Predecessors in row-major order: the box to the left and the box above.
    std::vector<std::size_t> left(m, SkewShape::npos), above(m, SkewShape::npos);
    for (std::size_t k = 0; k < m; ++k) {
        if (auto r = sh.right_neighbour(k); r != SkewShape::npos)
            left[r] = k;
        if (auto d = sh.lower_neighbour(k); d != SkewShape::npos)
            above[d] = k;
    }
    std::vector<Tableau> out;
    std::vector<Letter> cur(m, 0);
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == m) {
            out.emplace_back(shape, rank, cur);
            return;
        }
        Letter lo = 1;
        if (left[k] != SkewShape::npos)
            lo = std::max(lo, cur[left[k]]);
        if (above[k] != SkewShape::npos)
            lo = std::max(lo, cur[above[k]] + 1);
        for (Letter x = lo; x <= rank; ++x) {
            cur[k] = x;
            fill(k + 1);
        }
    };
    fill(0);
    return out;
}

} // namespace qcrystal
