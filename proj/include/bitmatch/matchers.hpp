#pragma once

#include "bitmatch/bitstring.hpp"
#include "bitmatch/match_report.hpp"
#include "bitmatch/pattern_tables.hpp"

namespace bitmatch {

/// Bit-at-a-time reference search: tests every shift by comparing single
/// bits. Deliberately unoptimized; the block matchers are validated against
/// its output. Each text bit read counts as one block access.
/// Requires 1 <= m <= n (std::domain_error otherwise).
MatchReport oracle_search(const BitString& pattern, const BitString& text);

/// Block-model search testing every shift with the shifted-copy tables:
/// unit shift advancement, masked byte comparisons, no skipping.
/// Requires 1 <= m <= n.
MatchReport naive_search(const ShiftedPatternTables& tables, const BitString& text);
MatchReport naive_search(const BitString& pattern, const BitString& text);

}  // namespace bitmatch
