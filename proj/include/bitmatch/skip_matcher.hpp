#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bitmatch/bitstring.hpp"
#include "bitmatch/match_report.hpp"
#include "bitmatch/pattern_tables.hpp"

namespace bitmatch {

/// A cell of the shifted-copy tables: row index and block (column) index.
struct BucketEntry {
  std::size_t row;
  std::size_t col;

  friend auto operator<=>(const BucketEntry&, const BucketEntry&) = default;
};

/// For each byte value, the table cells that hold that byte as a
/// fully-masked factor of the block-aligned pattern suffix of length
/// 8 * floor(m / 8). Probing one text block against these buckets yields
/// every pattern alignment that could place the block inside a match, so
/// the search only needs to examine one text block per stride.
class SkipBuckets {
 public:
  /// Requires m >= 16 so the stride is at least one block
  /// (std::domain_error otherwise). Construction is O(m + 256).
  explicit SkipBuckets(ShiftedPatternTables tables);

  const ShiftedPatternTables& tables() const noexcept { return tables_; }

  /// Blocks between examined text positions: max(1, floor(m / 8) - 1).
  std::size_t advance_blocks() const noexcept { return advance_; }

  std::span<const BucketEntry> bucket(std::uint8_t block) const noexcept {
    return buckets_[block];
  }

  /// Entries across all buckets: m - 7 - m % 8.
  std::size_t entry_count() const noexcept { return entry_count_; }

 private:
  ShiftedPatternTables tables_;
  std::array<std::vector<BucketEntry>, 256> buckets_;
  std::size_t advance_;
  std::size_t entry_count_ = 0;
};

inline SkipBuckets precompute_skip(ShiftedPatternTables tables) {
  return SkipBuckets(std::move(tables));
}

/// Examines every advance_blocks()-th text block and verifies the
/// alignments its bucket proposes. Occurrences match oracle_search exactly,
/// deduplicated (distinct probes can anchor the same alignment). Each
/// probed block counts one read; verification reads count as block
/// comparisons as well. Requires 16 <= m <= n.
MatchReport skip_search(const SkipBuckets& buckets, const BitString& text);
MatchReport skip_search(const BitString& pattern, const BitString& text);

}  // namespace bitmatch
