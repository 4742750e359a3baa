#include "bitmatch/hash_matcher.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace bitmatch {

HashShiftTable::HashShiftTable(ShiftedPatternTables tables) : tables_(std::move(tables)) {
  const std::size_t m = tables_.pattern_bits();
  if (m < kBlockBits) {
    throw std::domain_error("hash matcher requires pattern length >= " +
                            std::to_string(kBlockBits) + " bits (got " + std::to_string(m) + ")");
  }

  hs_.fill(m);

  // Alignments that slide the pattern past the window's left edge: the
  // window's low 8-i bits must carry the pattern's first 8-i bits, which
  // is precisely row i's first byte under its mask. Descending i keeps the
  // smallest advancement m - 8 + i per entry.
  for (std::size_t i = kBlockBits - 1; i >= 1; --i) {
    const std::uint8_t prefix = tables_.patt(i, 0);
    const std::uint8_t prefix_mask = tables_.mask(i, 0);
    for (unsigned b = 0; b < 256; ++b) {
      if ((b & prefix_mask) == prefix) hs_[b] = m - kBlockBits + i;
    }
  }

  // Whole-block factors. The factor starting at bit j sits in exactly one
  // fully-masked table cell; walking j upward writes decreasing
  // advancements m - 8 - j, so each byte keeps its minimum. j = m - 8
  // (the final byte itself) is deliberately left out: its least nonzero
  // advancement becomes suffix_shift below.
  if (m > kBlockBits) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t j = 0; j + kBlockBits < m; ++j) {
      hs_[tables_.patt(row, col)] = m - kBlockBits - j;
      if (row == 0) {
        row = kBlockBits - 1;
        ++col;
      } else {
        --row;
      }
    }
  }

  const std::uint8_t final_byte = tables_.patt(tables_.gap(), tables_.last(tables_.gap()));
  shift_ = hs_[final_byte];
  assert(shift_ >= 1 && shift_ <= m);
  hs_[final_byte] = 0;
}

MatchReport hash_search(const HashShiftTable& table, const BitString& text) {
  const ShiftedPatternTables& tables = table.tables();
  const std::size_t m = tables.pattern_bits();
  const std::size_t n = text.bit_len();
  if (m > n) {
    throw std::domain_error("pattern longer than text (m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  }

  MatchReport report;
  std::size_t end = m - 1;  // text bit aligned with the pattern's last bit
  while (end < n) {
    const std::size_t block = end / kBlockBits;
    const std::size_t tail = end % kBlockBits;
    std::uint8_t window;
    if (tail == kBlockBits - 1) {
      ++report.inspections.text_block_reads;
      window = text.block(block);
    } else {
      report.inspections.text_block_reads += 2;
      window = static_cast<std::uint8_t>((text.block(block - 1) << (tail + 1)) |
                                         (text.block(block) >> (kBlockBits - 1 - tail)));
    }

    const std::size_t advance = table.advance(window);
    if (advance > 0) {
      end += advance;
      continue;
    }

    // The window equals the pattern's final byte: verify the alignment
    // starting at end - m + 1, walking its row from the last block down.
    const std::size_t start = end + 1 - m;
    const std::size_t row = start % kBlockBits;
    const std::size_t base = start / kBlockBits;
    bool match = true;
    for (std::size_t h = tables.last(row) + 1; h-- > 0;) {
      ++report.inspections.text_block_reads;
      ++report.inspections.block_comparisons;
      if (tables.patt(row, h) != (text.block(base + h) & tables.mask(row, h))) {
        match = false;
        break;
      }
    }
    if (match) report.occurrences.push_back(start);
    end += table.suffix_shift();
  }
  return report;
}

MatchReport hash_search(const BitString& pattern, const BitString& text) {
  return hash_search(HashShiftTable(ShiftedPatternTables(pattern)), text);
}

}  // namespace bitmatch
