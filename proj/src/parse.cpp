#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "densub/errors.hpp"
#include "densub/graph.hpp"

namespace densub {
namespace {

constexpr std::size_t kMaxFractionDigits = 9;

struct DecimalToken {
  bool negative = false;
  std::string digits;  // integer and fraction digits concatenated
  std::size_t fraction_digits = 0;
};

DecimalToken parse_decimal(std::string_view tok, std::size_t line) {
  DecimalToken out;
  std::string_view s = tok;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    out.negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  auto all_digits = [](std::string_view p) {
    return std::all_of(p.begin(), p.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) {
    throw ParseError("line " + std::to_string(line) + ": '" + std::string(tok) +
                     "' is not a number");
  }
  if (frac.size() > kMaxFractionDigits) {
    throw ParseError("line " + std::to_string(line) + ": weight '" + std::string(tok) +
                     "' has more than 9 fractional digits");
  }
  out.digits = std::string(whole) + std::string(frac);
  out.fraction_digits = frac.size();
  return out;
}

VertexId parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line) + ": '" + std::string(tok) +
                     "' is not a vertex id");
  }
  if (v >= std::numeric_limits<VertexId>::max()) {
    throw MalformedInput("line " + std::to_string(line) + ": vertex id too large");
  }
  return static_cast<VertexId>(v);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text, bool weighted) {
  struct RawEdge {
    VertexId u, v;
    DecimalToken w;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::size_t max_frac = 0;
  std::int64_t max_id = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() < 2 || toks.size() > 3 || (toks.size() == 3 && !weighted)) {
      throw MalformedInput("line " + std::to_string(line_no) + ": expected " +
                           (weighted ? "'u v' or 'u v w'" : "'u v'") + ", got " +
                           std::to_string(toks.size()) + " fields");
    }
    RawEdge e{parse_id(toks[0], line_no), parse_id(toks[1], line_no), {}, line_no};
    e.w = toks.size() == 3 ? parse_decimal(toks[2], line_no) : DecimalToken{false, "1", 0};
    max_frac = std::max(max_frac, e.w.fraction_digits);
    max_id = std::max<std::int64_t>(max_id, std::max(e.u, e.v));
    raw.push_back(std::move(e));
  }

  WeightUnits scale = 1;
  for (std::size_t i = 0; i < max_frac; ++i) scale *= 10;

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto& e : raw) {
    std::string digits = e.w.digits + std::string(max_frac - e.w.fraction_digits, '0');
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    WeightUnits units = 0;
    if (!digits.empty()) {
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), units);
      if (ec != std::errc{}) {
        throw MalformedInput("line " + std::to_string(e.line) + ": weight out of range");
      }
    }
    if (e.w.negative || units == 0) {
      throw MalformedInput("line " + std::to_string(e.line) + ": edge weight must be positive");
    }
    edges.push_back({e.u, e.v, units});
  }
  return WeightedGraph(static_cast<VertexId>(max_id + 1), std::move(edges), scale);
}

std::string serialize_graph(const WeightedGraph& g, bool weighted) {
  std::size_t decimals = 0;
  for (WeightUnits s = g.weight_scale(); s > 1; s /= 10) ++decimals;
  std::string out;
  for (std::size_t e = 0; e < g.m(); ++e) {
    Edge edge = g.edge(e);
    out += std::to_string(edge.u);
    out += ' ';
    out += std::to_string(edge.v);
    if (weighted) {
      std::string digits = std::to_string(edge.w);
      if (decimals > 0) {
        if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
        digits.insert(digits.size() - decimals, ".");
      }
      out += ' ';
      out += digits;
    }
    out += '\n';
  }
  return out;
}

}  // namespace densub
