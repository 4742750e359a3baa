// Command-line front end: search raw binary files for a bit pattern at any
// bit offset, dump the preprocessing tables, or run the benchmark suite.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bitmatch/algo.hpp"
#include "bitmatch/bench.hpp"
#include "bitmatch/bitstring.hpp"
#include "bitmatch/hash_matcher.hpp"
#include "bitmatch/matchers.hpp"
#include "bitmatch/pattern_tables.hpp"
#include "bitmatch/skip_matcher.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitError = 2;

std::string block_bits(std::uint8_t block) {
  std::string s(8, '0');
  for (int i = 0; i < 8; ++i) {
    if (block & (0x80u >> i)) s[i] = '1';
  }
  return s;
}

struct SearchOptions {
  std::string text_file;
  std::optional<std::size_t> text_bit_len;
  std::string pattern_file;
  std::optional<std::size_t> pattern_bit_len;
  std::string pattern_bits;
  std::string algo = "auto";
  bool count_inspections = false;
  bool json = false;
  bool verify = false;
};

struct BenchOptions {
  int gamma = 50;
  std::size_t text_bits = 4'000'000;
  std::string lengths = "20";
  std::size_t patterns = 100;
  std::uint64_t seed = 1;
  std::string algos = "naive,hash,skip";
  bool pretty = false;
};

struct TablesOptions {
  std::string pattern_file;
  std::optional<std::size_t> pattern_bit_len;
  std::string pattern_bits;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, sep)) out.push_back(item);
  return out;
}

// "20,60,100" or "20-500:40" (inclusive range with explicit step), mixable.
std::vector<std::size_t> parse_lengths(const std::string& spec) {
  std::vector<std::size_t> out;
  for (const std::string& token : split(spec, ',')) {
    const auto dash = token.find('-');
    if (dash == std::string::npos) {
      out.push_back(std::stoul(token));
      continue;
    }
    const auto colon = token.find(':', dash);
    if (colon == std::string::npos) {
      throw std::invalid_argument("range length spec needs a step: use first-last:step, got '" +
                                  token + "'");
    }
    const std::size_t first = std::stoul(token.substr(0, dash));
    const std::size_t last = std::stoul(token.substr(dash + 1, colon - dash - 1));
    const std::size_t step = std::stoul(token.substr(colon + 1));
    if (step == 0 || last < first) {
      throw std::invalid_argument("bad length range '" + token + "'");
    }
    for (std::size_t m = first; m <= last; m += step) out.push_back(m);
  }
  if (out.empty()) throw std::invalid_argument("no pattern lengths given");
  return out;
}

bitmatch::BitString load_pattern(const std::string& file, const std::string& bits,
                                 std::optional<std::size_t> bit_len) {
  if (!bits.empty() && !file.empty()) {
    throw std::invalid_argument("give either --pattern or --pattern-bits, not both");
  }
  if (!bits.empty()) return bitmatch::BitString::from_bits(bits);
  if (!file.empty()) return bitmatch::BitString::load_raw(file, bit_len);
  throw std::invalid_argument("a pattern is required (--pattern or --pattern-bits)");
}

bitmatch::Algo pick_algo(const std::string& name, std::size_t m) {
  if (name == "auto") {
    if (m >= 16) return bitmatch::Algo::skip;
    if (m >= 8) return bitmatch::Algo::hash;
    return bitmatch::Algo::oracle;
  }
  const auto algo = bitmatch::parse_algo(name);
  if (!algo) throw std::invalid_argument("unknown algorithm '" + name + "'");
  return *algo;
}

bitmatch::MatchReport dispatch(bitmatch::Algo algo, const bitmatch::BitString& pattern,
                               const bitmatch::BitString& text) {
  switch (algo) {
    case bitmatch::Algo::oracle: return bitmatch::oracle_search(pattern, text);
    case bitmatch::Algo::naive: return bitmatch::naive_search(pattern, text);
    case bitmatch::Algo::hash: return bitmatch::hash_search(pattern, text);
    case bitmatch::Algo::skip: return bitmatch::skip_search(pattern, text);
  }
  throw std::logic_error("unreachable");
}

int run_search(const SearchOptions& opt) {
  const auto pattern = load_pattern(opt.pattern_file, opt.pattern_bits, opt.pattern_bit_len);
  const auto text = bitmatch::BitString::load_raw(opt.text_file, opt.text_bit_len);
  const auto algo = pick_algo(opt.algo, pattern.bit_len());
  const auto report = dispatch(algo, pattern, text);

  if (opt.verify && report.occurrences != bitmatch::oracle_search(pattern, text).occurrences) {
    std::cerr << "error: " << bitmatch::algo_name(algo)
              << " disagrees with the reference search\n";
    return kExitError;
  }

  const double per_byte = text.block_count() == 0
                              ? 0.0
                              : static_cast<double>(report.inspections.text_block_reads) /
                                    static_cast<double>(text.block_count());
  if (opt.json) {
    nlohmann::json doc;
    doc["algo"] = bitmatch::algo_name(algo);
    doc["m"] = pattern.bit_len();
    doc["n"] = text.bit_len();
    doc["occurrences"] = report.occurrences;
    doc["inspections_per_byte"] = per_byte;
    std::cout << doc.dump() << "\n";
  } else {
    for (std::size_t s : report.occurrences) std::cout << s << "\n";
    if (opt.count_inspections) std::cerr << "inspections_per_byte=" << per_byte << "\n";
  }
  return report.occurrences.empty() ? kExitNotFound : kExitFound;
}

int run_bench(const BenchOptions& opt) {
  bitmatch::RandProblem problem;
  problem.gamma = opt.gamma;
  problem.text_bits = opt.text_bits;
  problem.pattern_lengths = parse_lengths(opt.lengths);
  problem.patterns_per_length = opt.patterns;
  problem.seed = opt.seed;

  std::vector<bitmatch::Algo> algos;
  for (const std::string& name : split(opt.algos, ',')) {
    const auto algo = bitmatch::parse_algo(name);
    if (!algo) throw std::invalid_argument("unknown algorithm '" + name + "'");
    algos.push_back(*algo);
  }

  const auto records = bitmatch::run_bench(problem, algos);
  // zero_fraction is recomputed via generate(); run_bench used the same seed
  // and problem, so the text is identical.
  const double zero_fraction = bitmatch::generate(problem).zero_fraction;
  if (opt.pretty) {
    bitmatch::write_pretty(std::cout, records);
  } else {
    bitmatch::write_csv(std::cout, records, zero_fraction);
  }
  return kExitFound;
}

int run_tables(const TablesOptions& opt) {
  const auto pattern = load_pattern(opt.pattern_file, opt.pattern_bits, opt.pattern_bit_len);
  const bitmatch::ShiftedPatternTables tables(pattern);

  std::cout << "Patt\n";
  for (std::size_t i = 0; i < bitmatch::kBlockBits; ++i) {
    std::cout << " " << i << " |";
    for (std::size_t h = 0; h <= tables.last(i); ++h) std::cout << " " << block_bits(tables.patt(i, h));
    std::cout << "\n";
  }
  std::cout << "Mask\n";
  for (std::size_t i = 0; i < bitmatch::kBlockBits; ++i) {
    std::cout << " " << i << " |";
    for (std::size_t h = 0; h <= tables.last(i); ++h) std::cout << " " << block_bits(tables.mask(i, h));
    std::cout << "\n";
  }
  std::cout << "Last\n";
  for (std::size_t i = 0; i < bitmatch::kBlockBits; ++i) {
    std::cout << " " << i << " | " << tables.last(i) << "\n";
  }
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search for a bit pattern at arbitrary bit offsets in binary data"};
  app.require_subcommand(1);

  SearchOptions search_opt;
  auto* search = app.add_subcommand("search", "find all occurrences of a pattern in a text file");
  search->add_option("--text", search_opt.text_file, "raw binary text file")->required();
  search->add_option("--text-bit-len", search_opt.text_bit_len,
                     "use only the first N bits of the text file");
  search->add_option("--pattern", search_opt.pattern_file, "raw binary pattern file");
  search->add_option("--pattern-bit-len", search_opt.pattern_bit_len,
                     "use only the first N bits of the pattern file");
  search->add_option("--pattern-bits", search_opt.pattern_bits, "pattern as a 0/1 string");
  search->add_option("--algo", search_opt.algo, "oracle|naive|hash|skip|auto")
      ->default_val("auto");
  search->add_flag("--count-inspections", search_opt.count_inspections,
                   "report text-byte accesses per text byte on stderr");
  search->add_flag("--json", search_opt.json, "emit a JSON document instead of plain offsets");
  search->add_flag("--verify", search_opt.verify,
                   "cross-check the result against the reference search");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "benchmark the matchers on random binary texts");
  bench->add_option("--gamma", bench_opt.gamma, "percentage of zero bits")->default_val(50);
  bench->add_option("--text-bits", bench_opt.text_bits, "text size in bits")
      ->default_val(4'000'000);
  bench->add_option("--lengths", bench_opt.lengths,
                    "pattern lengths: comma list and/or first-last:step ranges")
      ->default_val("20");
  bench->add_option("--patterns", bench_opt.patterns, "patterns per length")->default_val(100);
  bench->add_option("--seed", bench_opt.seed, "generator seed")->default_val(1);
  bench->add_option("--algos", bench_opt.algos, "comma list of algorithms")
      ->default_val("naive,hash,skip");
  bench->add_flag("--pretty", bench_opt.pretty, "aligned table instead of CSV");

  TablesOptions tables_opt;
  auto* tables = app.add_subcommand("tables", "print the pattern's preprocessing tables");
  tables->add_option("--pattern", tables_opt.pattern_file, "raw binary pattern file");
  tables->add_option("--pattern-bit-len", tables_opt.pattern_bit_len,
                     "use only the first N bits of the pattern file");
  tables->add_option("--pattern-bits", tables_opt.pattern_bits, "pattern as a 0/1 string");

  try {
    app.parse(argc, argv);
    if (search->parsed()) return run_search(search_opt);
    if (bench->parsed()) return run_bench(bench_opt);
    if (tables->parsed()) return run_tables(tables_opt);
    return kExitError;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
