#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bitmatch/bitstring.hpp"
#include "bitmatch/match_report.hpp"

namespace bitmatch {

/// Eight right-shifted copies of a pattern, stored as whole bytes.
///
/// Row i holds the pattern shifted i bits to the right, padded with zeros
/// on both sides; mask(i, h) has a 1 exactly where patt(i, h) carries a
/// pattern bit. A candidate alignment at bit offset s is then checked with
/// byte operations only: compare row s % 8 block by block against the text
/// bytes starting at s / 8, masking each one. Every 8-bit factor of the
/// pattern appears in exactly one fully-masked cell.
///
/// Rows are stored dense with ceil(m/8) + 1 columns; cells past last(i)
/// are zero. Immutable after construction and safe to share across
/// concurrent searches.
class ShiftedPatternTables {
 public:
  /// Builds the tables in O(m) time. Throws std::domain_error on an empty
  /// pattern.
  explicit ShiftedPatternTables(const BitString& pattern);

  std::size_t pattern_bits() const noexcept { return m_; }
  std::size_t columns() const noexcept { return cols_; }

  /// (8 - m % 8) % 8: the one row whose copy ends on a block boundary, so
  /// patt(gap(), last(gap())) is exactly the pattern's final 8 bits.
  std::size_t gap() const noexcept { return gap_; }

  std::uint8_t patt(std::size_t row, std::size_t col) const noexcept {
    return patt_[row * cols_ + col];
  }
  std::uint8_t mask(std::size_t row, std::size_t col) const noexcept {
    return mask_[row * cols_ + col];
  }

  /// Zero-based index of the final defined block of a row:
  /// ceil((m + row) / 8) - 1.
  std::size_t last(std::size_t row) const noexcept { return last_[row]; }

 private:
  std::size_t m_;
  std::size_t cols_;
  std::size_t gap_;
  std::array<std::size_t, kBlockBits> last_{};
  std::vector<std::uint8_t> patt_;
  std::vector<std::uint8_t> mask_;
};

inline ShiftedPatternTables preprocess(const BitString& pattern) {
  return ShiftedPatternTables(pattern);
}

/// True iff the pattern occurs at bit offset `shift` of `text`, decided by
/// masked byte comparisons of row shift % 8. Requires
/// shift <= text.bit_len() - m (std::out_of_range otherwise). Every text
/// block touched is recorded in `counter`.
bool row_matches_at(const ShiftedPatternTables& tables, const BitString& text, std::size_t shift,
                    InspectionCounter& counter);

}  // namespace bitmatch
