#include "p2b/chern_pair.hpp"

#include <charconv>

namespace p2b {

std::string to_string(const ChernPair& p) {
  return "(" + std::to_string(p.c1) + "," + std::to_string(p.c2) + ")";
}

namespace {

std::optional<Int> parse_int(std::string_view s) {
  if (s.empty())
    return std::nullopt;
  // from_chars rejects a leading '+', which is what we want; reject "-" alone too.
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    return std::nullopt;
  return value;
}

} // namespace

std::optional<ChernPair> parse_pair(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    return std::nullopt;
  auto c1 = parse_int(text.substr(0, comma));
  auto c2 = parse_int(text.substr(comma + 1));
  if (!c1 || !c2)
    return std::nullopt;
  return ChernPair{*c1, *c2};
}

} // namespace p2b
