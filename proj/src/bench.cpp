#include "bitmatch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bitmatch/hash_matcher.hpp"
#include "bitmatch/matchers.hpp"
#include "bitmatch/skip_matcher.hpp"

namespace bitmatch {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration<double, std::nano>(to - from).count();
}

void validate(const RandProblem& problem) {
  if (problem.gamma <= 0 || problem.gamma >= 100) {
    throw std::domain_error("gamma must be strictly between 0 and 100 (got " +
                            std::to_string(problem.gamma) + ")");
  }
  if (problem.patterns_per_length == 0) {
    throw std::domain_error("patterns_per_length must be positive");
  }
  for (std::size_t m : problem.pattern_lengths) {
    if (m == 0 || m > problem.text_bits) {
      throw std::domain_error("pattern length " + std::to_string(m) +
                              " must be in [1, text_bits=" + std::to_string(problem.text_bits) +
                              "]");
    }
  }
}

}  // namespace

GeneratedProblem generate(const RandProblem& problem) {
  validate(problem);

  GeneratedProblem out;
  const std::size_t n = problem.text_bits;
  std::vector<std::uint8_t> blocks((n + kBlockBits - 1) / kBlockBits, 0);
  SplitMix64 text_rng(problem.seed);
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (text_rng.next() % 100 < static_cast<std::uint64_t>(problem.gamma)) {
      ++zeros;
    } else {
      blocks[i / kBlockBits] |= static_cast<std::uint8_t>(0x80u >> (i % kBlockBits));
    }
  }
  out.text = BitString::from_blocks(std::move(blocks), n);
  out.zero_fraction = n == 0 ? 0.0 : static_cast<double>(zeros) / static_cast<double>(n);

  // Separate stream: pattern choices must not perturb the text.
  SplitMix64 pattern_rng(~problem.seed);
  out.patterns.reserve(problem.pattern_lengths.size());
  for (std::size_t m : problem.pattern_lengths) {
    std::vector<BitString> list;
    list.reserve(problem.patterns_per_length);
    for (std::size_t q = 0; q < problem.patterns_per_length; ++q) {
      const std::size_t start = pattern_rng.next() % (n - m + 1);
      list.push_back(out.text.substr(start, m));
    }
    out.patterns.push_back(std::move(list));
  }
  return out;
}

namespace {

struct SearchOutcome {
  MatchReport report;
  double preprocess_ns;
  double search_ns;
};

SearchOutcome run_one(Algo algo, const BitString& pattern, const BitString& text) {
  SearchOutcome out{};
  switch (algo) {
    case Algo::oracle: {
      out.preprocess_ns = 0.0;
      const auto t0 = Clock::now();
      out.report = oracle_search(pattern, text);
      out.search_ns = elapsed_ns(t0, Clock::now());
      break;
    }
    case Algo::naive: {
      const auto t0 = Clock::now();
      const ShiftedPatternTables tables(pattern);
      const auto t1 = Clock::now();
      out.report = naive_search(tables, text);
      const auto t2 = Clock::now();
      out.preprocess_ns = elapsed_ns(t0, t1);
      out.search_ns = elapsed_ns(t1, t2);
      break;
    }
    case Algo::hash: {
      const auto t0 = Clock::now();
      const HashShiftTable table{ShiftedPatternTables(pattern)};
      const auto t1 = Clock::now();
      out.report = hash_search(table, text);
      const auto t2 = Clock::now();
      out.preprocess_ns = elapsed_ns(t0, t1);
      out.search_ns = elapsed_ns(t1, t2);
      break;
    }
    case Algo::skip: {
      const auto t0 = Clock::now();
      const SkipBuckets buckets{ShiftedPatternTables(pattern)};
      const auto t1 = Clock::now();
      out.report = skip_search(buckets, text);
      const auto t2 = Clock::now();
      out.preprocess_ns = elapsed_ns(t0, t1);
      out.search_ns = elapsed_ns(t1, t2);
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_bench(const RandProblem& problem, const std::vector<Algo>& algos) {
  if (algos.empty()) throw std::domain_error("at least one algorithm is required");
  const GeneratedProblem gen = generate(problem);
  const double text_bytes = static_cast<double>(gen.text.block_count());

  std::vector<BenchRecord> records;
  for (std::size_t li = 0; li < problem.pattern_lengths.size(); ++li) {
    const std::size_t m = problem.pattern_lengths[li];
    const auto& patterns = gen.patterns[li];
    for (Algo algo : algos) {
      BenchRecord rec{};
      rec.algo = algo;
      rec.gamma = problem.gamma;
      rec.pattern_bits = m;
      rec.patterns = patterns.size();
      rec.seed = problem.seed;
      double sum_search = 0.0;
      double sum_preproc = 0.0;
      double sum_per_byte = 0.0;
      for (std::size_t q = 0; q < patterns.size(); ++q) {
        const SearchOutcome outcome = run_one(algo, patterns[q], gen.text);
        sum_search += outcome.search_ns;
        sum_preproc += outcome.preprocess_ns;
        sum_per_byte +=
            static_cast<double>(outcome.report.inspections.text_block_reads) / text_bytes;
        // Patterns are substrings of the text, so an empty result is
        // always a bug; a full oracle comparison runs on a 1% sample.
        if (outcome.report.occurrences.empty()) {
          throw std::logic_error(std::string(algo_name(algo)) +
                                 " found no occurrence of a planted pattern (m=" +
                                 std::to_string(m) + ", q=" + std::to_string(q) + ")");
        }
        if (q % 100 == 0 &&
            outcome.report.occurrences != oracle_search(patterns[q], gen.text).occurrences) {
          throw std::logic_error(std::string(algo_name(algo)) +
                                 " disagrees with the reference search (m=" + std::to_string(m) +
                                 ", q=" + std::to_string(q) + ")");
        }
      }
      const double count = static_cast<double>(patterns.size());
      rec.mean_search_ns = sum_search / count;
      rec.mean_preprocess_ns = sum_preproc / count;
      rec.mean_inspections_per_byte = sum_per_byte / count;
      records.push_back(rec);
    }
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records, double zero_fraction) {
  out << "# zero_fraction=" << std::fixed << std::setprecision(6) << zero_fraction << "\n";
  out << "# mean_preproc_ns per row: ";
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out << " ";
    out << algo_name(records[i].algo) << "/" << records[i].pattern_bits << "="
        << std::setprecision(0) << records[i].mean_preprocess_ns;
  }
  out << "\n";
  out << "algo,gamma,m,mean_time_ns,mean_inspections_per_byte,patterns,seed\n";
  for (const BenchRecord& rec : records) {
    out << algo_name(rec.algo) << "," << rec.gamma << "," << rec.pattern_bits << ","
        << std::setprecision(0) << rec.mean_search_ns << "," << std::setprecision(4)
        << rec.mean_inspections_per_byte << "," << rec.patterns << "," << rec.seed << "\n";
  }
  out.flush();
}

void write_pretty(std::ostream& out, const std::vector<BenchRecord>& records) {
  if (records.empty()) return;
  std::vector<Algo> algos;
  std::vector<std::size_t> lengths;
  for (const BenchRecord& rec : records) {
    if (std::find(algos.begin(), algos.end(), rec.algo) == algos.end()) algos.push_back(rec.algo);
    if (std::find(lengths.begin(), lengths.end(), rec.pattern_bits) == lengths.end()) {
      lengths.push_back(rec.pattern_bits);
    }
  }
  out << "inspections per text byte, gamma=" << records.front().gamma
      << ", patterns=" << records.front().patterns << ", seed=" << records.front().seed << "\n";
  out << std::setw(6) << "m";
  for (Algo algo : algos) out << std::setw(10) << algo_name(algo);
  out << "\n";
  for (std::size_t m : lengths) {
    out << std::setw(6) << m;
    for (Algo algo : algos) {
      const auto it = std::find_if(records.begin(), records.end(), [&](const BenchRecord& rec) {
        return rec.algo == algo && rec.pattern_bits == m;
      });
      if (it == records.end()) {
        out << std::setw(10) << "-";
      } else {
        out << std::setw(10) << std::fixed << std::setprecision(2)
            << it->mean_inspections_per_byte;
      }
    }
    out << "\n";
  }
  out.flush();
}

}  // namespace bitmatch
