#include "bitmatch/pattern_tables.hpp"

#include <stdexcept>
#include <string>

namespace bitmatch {

ShiftedPatternTables::ShiftedPatternTables(const BitString& pattern)
    : m_(pattern.bit_len()) {
  if (m_ == 0) throw std::domain_error("pattern must not be empty");
  cols_ = (m_ + kBlockBits - 1) / kBlockBits + 1;
  gap_ = (kBlockBits - m_ % kBlockBits) % kBlockBits;
  patt_.assign(kBlockBits * cols_, 0);
  mask_.assign(kBlockBits * cols_, 0);

  // Row 0 of the mask: m ones padded with zeros to whole blocks.
  std::vector<std::uint8_t> mask0(cols_, 0);
  for (std::size_t h = 0; h * kBlockBits < m_; ++h) {
    const std::size_t remaining = m_ - h * kBlockBits;
    mask0[h] = remaining >= kBlockBits
                   ? 0xFFu
                   : static_cast<std::uint8_t>(0xFFu << (kBlockBits - remaining));
  }

  const auto pattern_blocks = pattern.blocks();
  auto pattern_block = [&](std::size_t h) -> std::uint8_t {
    return h < pattern_blocks.size() ? pattern_blocks[h] : 0;
  };

  // Row i is row 0 shifted right i bits: each byte takes the low bits of
  // the byte above it and the high bits of the one before that.
  for (std::size_t i = 0; i < kBlockBits; ++i) {
    last_[i] = (m_ + i + kBlockBits - 1) / kBlockBits - 1;
    for (std::size_t h = 0; h <= last_[i]; ++h) {
      std::uint8_t patt_byte = static_cast<std::uint8_t>(pattern_block(h) >> i);
      std::uint8_t mask_byte = static_cast<std::uint8_t>(mask0[h] >> i);
      if (h > 0 && i > 0) {
        patt_byte |= static_cast<std::uint8_t>(pattern_block(h - 1) << (kBlockBits - i));
        mask_byte |= static_cast<std::uint8_t>(mask0[h - 1] << (kBlockBits - i));
      }
      patt_[i * cols_ + h] = patt_byte;
      mask_[i * cols_ + h] = mask_byte;
    }
  }
}

bool row_matches_at(const ShiftedPatternTables& tables, const BitString& text, std::size_t shift,
                    InspectionCounter& counter) {
  const std::size_t m = tables.pattern_bits();
  const std::size_t n = text.bit_len();
  if (shift > n || n - shift < m) {
    throw std::out_of_range("shift " + std::to_string(shift) + " out of range (need shift <= " +
                            std::to_string(n) + " - " + std::to_string(m) + ")");
  }
  const std::size_t row = shift % kBlockBits;
  const std::size_t base = shift / kBlockBits;
  for (std::size_t h = 0; h <= tables.last(row); ++h) {
    ++counter.text_block_reads;
    ++counter.block_comparisons;
    if (tables.patt(row, h) != (text.block(base + h) & tables.mask(row, h))) return false;
  }
  return true;
}

}  // namespace bitmatch
