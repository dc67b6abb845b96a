#include "wideness/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <charconv>
#include <memory>
#include <sstream>
#include <vector>

#include "wideness/error.hpp"

namespace wideness {

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::malformed, why); }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63) malformed("graph6 byte outside 63..126");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view bytes) {
  std::string_view s = trim(bytes);
  if (s.starts_with(kGraph6Header)) s.remove_prefix(sizeof(kGraph6Header) - 1);
  if (s.empty()) malformed("empty graph6 string");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (s[0] != '~') {
    n = static_cast<std::size_t>(sextet(s[0]));
    pos = 1;
  } else if (s.size() >= 2 && s[1] == '~') {
    throw Error(Errc::too_large, "graph6 orders of 2^18 and above are not supported");
  } else {
    if (s.size() < 4) malformed("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(s[i]));
    pos = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (s.size() - pos != body) malformed("graph6 bit string has the wrong length");

  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = sextet(s[pos + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  for (; bit < body * 6; ++bit)
    if ((sextet(s[pos + bit / 6]) >> (5 - bit % 6)) & 1) malformed("non-zero graph6 padding");
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw Error(Errc::too_large, "graph6 orders of 2^18 and above are not supported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    if (fields.empty()) continue;

    auto number = [&](std::string_view f) {
      std::size_t value = 0;
      const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
      if (ec != std::errc() || end != f.data() + f.size())
        malformed("line " + std::to_string(line_no) + ": bad number '" + std::string(f) + "'");
      return value;
    };

    if (!n) {
      if (fields.size() != 2 || fields[0] != "n") malformed("edge list must start with 'n <count>'");
      n = number(fields[1]);
      if (*n > kGraph6MaxOrder) throw Error(Errc::too_large, "edge list order too large");
      continue;
    }
    if (fields.size() != 2) malformed("line " + std::to_string(line_no) + ": expected 'u v'");
    const std::size_t u = number(fields[0]);
    const std::size_t v = number(fields[1]);
    if (u >= *n || v >= *n) throw Error(Errc::out_of_range, "line " + std::to_string(line_no) + ": vertex out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) malformed("edge list must start with 'n <count>'");
  return Graph::from_edge_list(*n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

GraphFormat detect_format(std::string_view text) {
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) continue;
    if (line[0] == '#') return GraphFormat::edge_list;
    if (line[0] == 'n' && (line.size() == 1 || is_space(line[1]))) return GraphFormat::edge_list;
    return GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text, std::optional<GraphFormat> format) {
  return format.value_or(detect_format(text)) == GraphFormat::graph6 ? parse_graph6(text)
                                                                     : parse_edge_list(text);
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

}  // namespace wideness
