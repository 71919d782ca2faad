#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace loopnr {

/// Carrier elements are the integers 0..n-1; index 0 is always the additive zero.
using Elem = std::uint32_t;

/// Largest carrier a table can hold (entries are stored as 16-bit values).
inline constexpr std::size_t kMaxCarrier = 65536;

/// Dense n x n operation table, row-major.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Elem fill = 0);

  /// Builds a table from nested rows. Throws ValidationError if the rows are
  /// not square or contain out-of-range entries.
  static Table from_rows(const std::vector<std::vector<Elem>>& rows);

  std::size_t size() const noexcept { return n_; }

  Elem operator()(Elem a, Elem b) const noexcept { return data_[static_cast<std::size_t>(a) * n_ + b]; }
  void set(Elem a, Elem b, Elem value) noexcept {
    data_[static_cast<std::size_t>(a) * n_ + b] = static_cast<std::uint16_t>(value);
  }

  std::span<const std::uint16_t> row(Elem a) const noexcept {
    return {data_.data() + static_cast<std::size_t>(a) * n_, n_};
  }

  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> data_;
};

}  // namespace loopnr
