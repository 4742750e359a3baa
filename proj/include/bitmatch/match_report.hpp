#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bitmatch {

// Per-search accounting of how often the text is touched, in units of text
// blocks. text_block_reads counts every access, including the one or two
// blocks behind a window extraction; block_comparisons counts only the
// masked block-equality tests against the pattern copies.
struct InspectionCounter {
  std::uint64_t text_block_reads = 0;
  std::uint64_t block_comparisons = 0;
};

// Result of one search: every start offset (in bits) where the pattern
// occurs, strictly increasing, plus the access counts for this search.
struct MatchReport {
  std::vector<std::size_t> occurrences;
  InspectionCounter inspections;
};

}  // namespace bitmatch
