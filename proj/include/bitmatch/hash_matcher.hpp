#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "bitmatch/bitstring.hpp"
#include "bitmatch/match_report.hpp"
#include "bitmatch/pattern_tables.hpp"

namespace bitmatch {

/// Byte-indexed advancement table in the Wu-Manber single-pattern style,
/// built without hashing: an 8-bit window is its own table index.
///
/// For a byte b, advance(b) is the least u >= 0 such that sliding the
/// pattern u bits further right makes some factor of the pattern (or, past
/// its left end, a prefix aligned with the low bits of b) coincide with b;
/// m when no alignment exists. The entry for the pattern's final byte is
/// forced to zero, meaning "verify this alignment", and its true least
/// nonzero advancement is kept separately as suffix_shift(), applied after
/// every verification attempt. Both rules never skip an occurrence.
class HashShiftTable {
 public:
  /// Requires a pattern of at least one whole block (m >= 8,
  /// std::domain_error otherwise). Construction is O(m + 8 * 256).
  explicit HashShiftTable(ShiftedPatternTables tables);

  const ShiftedPatternTables& tables() const noexcept { return tables_; }

  /// Bits to advance the window end; 0 means verify here.
  std::size_t advance(std::uint8_t window) const noexcept { return hs_[window]; }

  /// Advancement applied after a verification attempt, in [1, m].
  std::size_t suffix_shift() const noexcept { return shift_; }

 private:
  ShiftedPatternTables tables_;
  std::array<std::size_t, 256> hs_{};
  std::size_t shift_ = 0;
};

inline HashShiftTable compute_hash(ShiftedPatternTables tables) {
  return HashShiftTable(std::move(tables));
}

/// Slides an 8-bit window over the text, jumping by advance(window) and
/// verifying a full alignment whenever the window equals the pattern's
/// final byte. Occurrences match oracle_search exactly. Window assembly
/// counts one block read when the window is block-aligned, two otherwise;
/// verification reads count as block comparisons as well.
/// Requires 8 <= m <= n.
MatchReport hash_search(const HashShiftTable& table, const BitString& text);
MatchReport hash_search(const BitString& pattern, const BitString& text);

}  // namespace bitmatch
