#include "bitmatch/bitstring.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace bitmatch {

namespace {

std::size_t blocks_needed(std::size_t bit_len) {
  return (bit_len + kBlockBits - 1) / kBlockBits;
}

// Zeroes any bits past bit_len in the final block.
void clear_padding(std::vector<std::uint8_t>& blocks, std::size_t bit_len) {
  const std::size_t rem = bit_len % kBlockBits;
  if (rem != 0 && !blocks.empty()) {
    blocks.back() &= static_cast<std::uint8_t>(0xFFu << (kBlockBits - rem));
  }
}

}  // namespace

BitString BitString::from_bits(std::string_view bits) {
  std::vector<std::uint8_t> blocks;
  std::size_t n = 0;
  for (char c : bits) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string("bit string may contain only '0' and '1', found '") +
                                  c + "'");
    }
    if (n % kBlockBits == 0) blocks.push_back(0);
    if (c == '1') blocks.back() |= static_cast<std::uint8_t>(0x80u >> (n % kBlockBits));
    ++n;
  }
  return BitString(std::move(blocks), n);
}

BitString BitString::from_blocks(std::vector<std::uint8_t> blocks, std::size_t bit_len) {
  if (blocks.size() != blocks_needed(bit_len)) {
    throw std::invalid_argument("block count " + std::to_string(blocks.size()) +
                                " does not match bit length " + std::to_string(bit_len));
  }
  clear_padding(blocks, bit_len);
  return BitString(std::move(blocks), bit_len);
}

BitString BitString::load_raw(const std::filesystem::path& path,
                              std::optional<std::size_t> bit_len_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("read error on file: " + path.string());

  std::size_t bit_len = bytes.size() * kBlockBits;
  if (bit_len_override) {
    if (*bit_len_override > bit_len) {
      throw std::invalid_argument("bit length override " + std::to_string(*bit_len_override) +
                                  " exceeds the " + std::to_string(bit_len) +
                                  " bits held by the file");
    }
    bit_len = *bit_len_override;
    bytes.resize(blocks_needed(bit_len));
  }
  return from_blocks(std::move(bytes), bit_len);
}

bool BitString::bit(std::size_t i) const {
  if (i >= bit_len_) {
    throw std::out_of_range("bit index " + std::to_string(i) + " out of range for " +
                            std::to_string(bit_len_) + "-bit string");
  }
  return (blocks_[i / kBlockBits] >> (kBlockBits - 1 - i % kBlockBits)) & 1u;
}

std::uint8_t BitString::extract_window(std::size_t end_bit) const {
  if (end_bit + 1 < kBlockBits || end_bit >= bit_len_) {
    throw std::out_of_range("window end " + std::to_string(end_bit) + " out of range (need " +
                            std::to_string(kBlockBits - 1) + " <= end < " +
                            std::to_string(bit_len_) + ")");
  }
  const std::size_t j = end_bit / kBlockBits;
  const std::size_t tail = end_bit % kBlockBits;  // bits of the window inside block j, minus one
  if (tail == kBlockBits - 1) return blocks_[j];
  return static_cast<std::uint8_t>((blocks_[j - 1] << (tail + 1)) |
                                   (blocks_[j] >> (kBlockBits - 1 - tail)));
}

BitString BitString::substr(std::size_t start_bit, std::size_t len) const {
  if (start_bit > bit_len_ || bit_len_ - start_bit < len) {
    throw std::out_of_range("substring [" + std::to_string(start_bit) + ", +" +
                            std::to_string(len) + ") out of range for " +
                            std::to_string(bit_len_) + "-bit string");
  }
  std::vector<std::uint8_t> blocks(blocks_needed(len), 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (bit(start_bit + i)) blocks[i / kBlockBits] |= static_cast<std::uint8_t>(0x80u >> (i % kBlockBits));
  }
  return BitString(std::move(blocks), len);
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bit_len_);
  for (std::size_t i = 0; i < bit_len_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

}  // namespace bitmatch
