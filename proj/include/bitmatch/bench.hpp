#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bitmatch/algo.hpp"
#include "bitmatch/bitstring.hpp"

namespace bitmatch {

/// splitmix64 (Steele, Lea, Flood): a counter-style 64-bit generator with a
/// fixed published algorithm, so any other implementation seeded the same
/// way reproduces the exact bit streams and therefore the exact inspection
/// counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// One benchmark problem: search random patterns sampled from a random
/// binary text in which a zero bit appears with probability gamma %.
struct RandProblem {
  int gamma = 50;                            // percentage of zero bits, 0 < gamma < 100
  std::size_t text_bits = 4'000'000;
  std::vector<std::size_t> pattern_lengths;  // the m grid
  std::size_t patterns_per_length = 100;
  std::uint64_t seed = 1;
};

/// Deterministic output of generate(): the text, one pattern list per entry
/// of pattern_lengths (each pattern a contiguous substring of the text, so
/// every search has at least one occurrence), and the measured fraction of
/// zero bits.
struct GeneratedProblem {
  BitString text;
  std::vector<std::vector<BitString>> patterns;
  double zero_fraction = 0.0;
};

/// Text bits are drawn from SplitMix64(seed), pattern start offsets from an
/// independent SplitMix64 stream, so the text does not depend on how many
/// patterns are requested. Throws std::domain_error on an invalid problem
/// (gamma out of range, a pattern length of zero or longer than the text).
GeneratedProblem generate(const RandProblem& problem);

/// Aggregated result of one (algorithm, pattern length) cell.
struct BenchRecord {
  Algo algo;
  int gamma;
  std::size_t pattern_bits;
  double mean_search_ns;
  double mean_preprocess_ns;
  double mean_inspections_per_byte;  // text_block_reads / ceil(n/8), averaged over patterns
  std::size_t patterns;
  std::uint64_t seed;
};

/// Runs every algorithm over every pattern of every length. Preprocessing
/// is timed separately from the search call. Occurrence sets are
/// cross-checked against oracle_search on every hundredth pattern (and the
/// first of each cell); a mismatch throws std::logic_error. Inspection
/// counts are deterministic for a fixed seed; only the timing fields vary.
std::vector<BenchRecord> run_bench(const RandProblem& problem, const std::vector<Algo>& algos);

/// CSV with header algo,gamma,m,mean_time_ns,mean_inspections_per_byte,
/// patterns,seed. Metadata (zero fraction, per-cell preprocessing times)
/// goes into leading '#' comment lines.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records, double zero_fraction);

/// Plain-text matrix (pattern length rows, one inspections-per-byte column
/// per algorithm) for reading results at a glance.
void write_pretty(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace bitmatch
