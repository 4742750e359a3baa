#pragma once

#include <optional>
#include <string_view>

namespace bitmatch {

enum class Algo { oracle, naive, hash, skip };

constexpr std::string_view algo_name(Algo algo) {
  switch (algo) {
    case Algo::oracle: return "oracle";
    case Algo::naive: return "naive";
    case Algo::hash: return "hash";
    case Algo::skip: return "skip";
  }
  return "?";
}

constexpr std::optional<Algo> parse_algo(std::string_view name) {
  if (name == "oracle") return Algo::oracle;
  if (name == "naive") return Algo::naive;
  if (name == "hash") return Algo::hash;
  if (name == "skip") return Algo::skip;
  return std::nullopt;
}

}  // namespace bitmatch
