#include "bitmatch/matchers.hpp"

#include <stdexcept>
#include <string>

namespace bitmatch {

namespace {

void require_fits(std::size_t m, std::size_t n) {
  if (m == 0) throw std::domain_error("pattern must not be empty");
  if (m > n) {
    throw std::domain_error("pattern longer than text (m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

MatchReport oracle_search(const BitString& pattern, const BitString& text) {
  const std::size_t m = pattern.bit_len();
  const std::size_t n = text.bit_len();
  require_fits(m, n);

  MatchReport report;
  for (std::size_t s = 0; s + m <= n; ++s) {
    std::size_t i = 0;
    for (; i < m; ++i) {
      ++report.inspections.text_block_reads;
      ++report.inspections.block_comparisons;
      if (text.bit(s + i) != pattern.bit(i)) break;
    }
    if (i == m) report.occurrences.push_back(s);
  }
  return report;
}

MatchReport naive_search(const ShiftedPatternTables& tables, const BitString& text) {
  const std::size_t m = tables.pattern_bits();
  const std::size_t n = text.bit_len();
  require_fits(m, n);

  MatchReport report;
  std::size_t base = 0;  // text block under the row's first byte
  std::size_t row = 0;   // shift % 8
  for (std::size_t s = 0; s + m <= n; ++s) {
    std::size_t h = 0;
    while (h <= tables.last(row)) {
      ++report.inspections.text_block_reads;
      ++report.inspections.block_comparisons;
      if (tables.patt(row, h) != (text.block(base + h) & tables.mask(row, h))) break;
      ++h;
    }
    if (h > tables.last(row)) report.occurrences.push_back(s);
    if (++row == kBlockBits) {
      row = 0;
      ++base;
    }
  }
  return report;
}

MatchReport naive_search(const BitString& pattern, const BitString& text) {
  return naive_search(ShiftedPatternTables(pattern), text);
}

}  // namespace bitmatch
