#include "bitmatch/skip_matcher.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bitmatch {

SkipBuckets::SkipBuckets(ShiftedPatternTables tables) : tables_(std::move(tables)) {
  const std::size_t m = tables_.pattern_bits();
  if (m < 2 * kBlockBits) {
    throw std::domain_error("skip matcher requires pattern length >= " +
                            std::to_string(2 * kBlockBits) + " bits (got " + std::to_string(m) +
                            ")");
  }
  advance_ = std::max<std::size_t>(1, m / kBlockBits - 1);

  // The factor starting at bit j lives in cell (row, col) with
  // 8 * col - row == j; only factors of the block-aligned suffix
  // (m % 8 <= j <= m - 8) are bucketed.
  std::size_t row = 0;
  std::size_t col = 0;
  for (std::size_t j = 0; j + kBlockBits <= m; ++j) {
    if (j >= m % kBlockBits) {
      buckets_[tables_.patt(row, col)].push_back({row, col});
      ++entry_count_;
    }
    if (row == 0) {
      row = kBlockBits - 1;
      ++col;
    } else {
      --row;
    }
  }
}

MatchReport skip_search(const SkipBuckets& buckets, const BitString& text) {
  const ShiftedPatternTables& tables = buckets.tables();
  const std::size_t m = tables.pattern_bits();
  const std::size_t n = text.bit_len();
  if (m > n) {
    throw std::domain_error("pattern longer than text (m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  }

  MatchReport report;
  std::vector<std::size_t> found;
  const std::size_t advance = buckets.advance_blocks();
  for (std::size_t j = advance - 1; j < text.block_count(); j += advance) {
    ++report.inspections.text_block_reads;
    for (const BucketEntry& entry : buckets.bucket(text.block(j))) {
      if (entry.col > j) continue;
      const std::size_t start = (j - entry.col) * kBlockBits + entry.row;
      if (start + m > n) continue;
      if (row_matches_at(tables, text, start, report.inspections)) found.push_back(start);
    }
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  report.occurrences = std::move(found);
  return report;
}

MatchReport skip_search(const BitString& pattern, const BitString& text) {
  return skip_search(SkipBuckets(ShiftedPatternTables(pattern)), text);
}

}  // namespace bitmatch
