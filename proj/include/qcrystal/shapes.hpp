#pragma once

// Strict partitions, the skew diagrams Y_lambda whose d-th anti-diagonal
// carries lambda_d boxes, and semistandard fillings of them.

#include "qcrystal/weight.hpp"
#include "qcrystal/word.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcrystal {

class StrictPartition {
  public:
    StrictPartition() = default;
    // Throws std::invalid_argument unless parts are positive and strictly decreasing.
    explicit StrictPartition(std::vector<int> parts);

    // The partition read off a weight in Lambda^+, trailing zeros dropped.
    static std::optional<StrictPartition> from_weight(const Weight& w);

    std::span<const int> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    // lambda as an element of P for the given rank; throws if length > rank.
    Weight to_weight(int rank) const;

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

// "2,1" or "(2,1)" -> StrictPartition; throws std::invalid_argument.
StrictPartition parse_strict_partition(const std::string& text);

// All strict partitions with 1 <= |lambda| <= max_size and at most max_length parts.
std::vector<StrictPartition> strict_partitions(int max_size, int max_length);

struct Box {
    int row = 1;
    int col = 1;
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

class SkewShape {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit SkewShape(StrictPartition lambda);

    const StrictPartition& partition() const noexcept { return lambda_; }
    // Boxes in row-major order.
    std::span<const Box> boxes() const noexcept { return boxes_; }
    std::size_t size() const noexcept { return boxes_.size(); }
    std::size_t index_of(Box b) const;
    std::size_t right_neighbour(std::size_t k) const noexcept { return right_[k]; }
    std::size_t lower_neighbour(std::size_t k) const noexcept { return below_[k]; }
    std::vector<int> row_lengths() const;

    // Box indices in reading order: rows top to bottom, each right to left.
    std::span<const std::size_t> row_reading() const noexcept { return row_reading_; }
    // Columns right to left, each top to bottom.
    std::span<const std::size_t> column_reading() const noexcept { return column_reading_; }

  private:
    StrictPartition lambda_;
    std::vector<Box> boxes_;
    std::vector<std::size_t> right_, below_;
    std::vector<std::size_t> row_reading_, column_reading_;
};

// Boxes {(i, lambda_1 + d - i) : 1 <= d <= r, d <= i <= d + lambda_d - 1}.
std::shared_ptr<const SkewShape> shape_from_partition(const StrictPartition& lambda);

enum class Reading { Row, Column };

// A semistandard filling: rows weakly increase, columns strictly increase.
class Tableau {
  public:
    // Throws std::invalid_argument on out-of-range entries or a
    // non-semistandard filling.
    Tableau(std::shared_ptr<const SkewShape> shape, int rank, std::vector<Letter> entries);

    static bool is_semistandard(const SkewShape& shape, std::span<const Letter> entries);

    const SkewShape& shape() const noexcept { return *shape_; }
    const std::shared_ptr<const SkewShape>& shape_ptr() const noexcept { return shape_; }
    int rank() const noexcept { return rank_; }
    // Entries aligned with shape().boxes().
    std::span<const Letter> entries() const noexcept { return entries_; }
    Letter entry(Box b) const { return entries_[shape_->index_of(b)]; }
    Weight weight() const;

    Word read(Reading r) const;
    std::span<const std::size_t> reading_order(Reading r) const;

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.rank_ == b.rank_ && a.entries_ == b.entries_ &&
               a.shape_->partition() == b.shape_->partition();
    }

  private:
    std::shared_ptr<const SkewShape> shape_;
    int rank_;
    std::vector<Letter> entries_;
};

Word reading_row(const Tableau& t);
Word reading_col(const Tableau& t);

// All semistandard fillings with entries 1..rank, lexicographic in the
// row-major filling.
std::vector<Tableau> enumerate_ssyt(const std::shared_ptr<const SkewShape>& shape, int rank);

} // namespace qcrystal
