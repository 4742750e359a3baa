#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bitmatch {

// Bits are processed in whole blocks of this many bits (one byte).
inline constexpr std::size_t kBlockBits = 8;

/// An immutable sequence of bits packed into bytes.
///
/// Bit 0 is the most significant bit of block 0, so a block printed as a
/// binary numeral reads left-to-right in bit order. Padding bits past
/// bit_len() in the final block are always zero, which lets searches
/// compare whole blocks without special-casing the tail.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1' characters. ASCII whitespace is ignored so
  /// inputs may be grouped for readability ("11001011 00101100 10110").
  /// Throws std::invalid_argument on any other character.
  static BitString from_bits(std::string_view bits);

  /// Wraps a block vector directly. blocks.size() must equal
  /// ceil(bit_len / 8); padding bits are forced to zero.
  static BitString from_blocks(std::vector<std::uint8_t> blocks, std::size_t bit_len);

  /// Loads a raw binary file; the file's bytes become the blocks verbatim
  /// and bit_len is 8 times the file size. A smaller bit_len_override trims
  /// the tail (padding re-zeroed); an override beyond the file's capacity
  /// throws std::invalid_argument. I/O failures throw std::runtime_error.
  static BitString load_raw(const std::filesystem::path& path,
                            std::optional<std::size_t> bit_len_override = std::nullopt);

  std::size_t bit_len() const noexcept { return bit_len_; }
  bool empty() const noexcept { return bit_len_ == 0; }

  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::span<const std::uint8_t> blocks() const noexcept { return blocks_; }
  std::uint8_t block(std::size_t index) const noexcept { return blocks_[index]; }

  /// Bit at position i (0 = MSB of block 0). Throws std::out_of_range.
  bool bit(std::size_t i) const;

  /// The 8 bits ending at end_bit inclusive, i.e. bits
  /// [end_bit - 7, end_bit], right-aligned in the returned byte. When
  /// end_bit lies on a block boundary (end_bit % 8 == 7) this is exactly
  /// block(end_bit / 8); otherwise the byte is assembled from the two
  /// neighbouring blocks. Requires 7 <= end_bit < bit_len().
  std::uint8_t extract_window(std::size_t end_bit) const;

  /// Copy of bits [start_bit, start_bit + len). Throws std::out_of_range
  /// if the range runs past the end.
  BitString substr(std::size_t start_bit, std::size_t len) const;

  /// The bits as a '0'/'1' string, no grouping.
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  BitString(std::vector<std::uint8_t> blocks, std::size_t bit_len)
      : bit_len_(bit_len), blocks_(std::move(blocks)) {}

  std::size_t bit_len_ = 0;
  std::vector<std::uint8_t> blocks_;
};

}  // namespace bitmatch
