#include "sbond/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sbond/error.hpp"

namespace sbond {

namespace {

constexpr int kGraph6Bias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

struct LineCursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;

  // Returns false at end of input.
  bool next(std::string_view& out, std::size_t& start) {
    if (pos >= text.size()) return false;
    start = pos;
    const auto nl = text.find('\n', pos);
    const auto stop = nl == std::string_view::npos ? text.size() : nl;
    out = text.substr(pos, stop - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line;
    return true;
  }
};

// Parses exactly `count` whitespace-separated non-negative integers from a line.
std::vector<int> parse_ints(std::string_view line, std::size_t count, std::size_t line_no, std::size_t line_start) {
  std::vector<int> values;
  std::size_t i = 0;
  while (true) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || value < 0) {
      throw ParseError("expected a non-negative integer", line_no, line_start + i);
    }
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      throw ParseError("unexpected character '" + std::string(1, line[i]) + "'", line_no, line_start + i);
    }
  }
  if (values.size() != count) {
    throw ParseError("expected " + std::to_string(count) + " integers, found " + std::to_string(values.size()), line_no,
                     line_start);
  }
  return values;
}

bool is_blank(std::string_view line) { return line.find_first_not_of(" \t\r") == std::string_view::npos; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineCursor cursor{text};
  std::string_view line;
  std::size_t start = 0;
  if (!cursor.next(line, start)) throw ParseError("empty input", 1, 0);
  const auto header = parse_ints(line, 2, cursor.line, start);
  const int n = header[0];
  const auto m = static_cast<std::size_t>(header[1]);
  if (n > kMaxVertices) throw ParseError("order exceeds 64", cursor.line, start);

  std::vector<Edge> pairs;
  pairs.reserve(m);
  while (pairs.size() < m) {
    if (!cursor.next(line, start)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()),
                       cursor.line + 1, text.size());
    }
    const auto uv = parse_ints(line, 2, cursor.line, start);
    if (uv[0] >= n || uv[1] >= n) throw ParseError("endpoint out of range", cursor.line, start);
    pairs.push_back({uv[0], uv[1]});
  }
  while (cursor.next(line, start)) {
    if (!is_blank(line)) throw ParseError("trailing content after edge list", cursor.line, start);
  }
  try {
    return Graph(n, pairs);
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 0);
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  if (text.starts_with(kGraph6Header)) offset = kGraph6Header.size();
  auto body = text.substr(offset);
  if (body.ends_with('\n')) body.remove_suffix(1);
  if (body.ends_with('\r')) body.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= body.size()) throw ParseError("truncated graph6 string", 1, offset + i);
    const int c = static_cast<unsigned char>(body[i]);
    if (c < kGraph6Bias || c > 126) throw ParseError("byte outside graph6 range", 1, offset + i);
    return c - kGraph6Bias;
  };

  std::size_t i = 0;
  int n = byte_at(i++);
  if (n == 63) {
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(i++);
    if (n < 63) throw ParseError("non-canonical long-form order", 1, offset);
  }
  if (n > kMaxVertices) throw ParseError("order exceeds 64", 1, offset);

  const std::size_t bits = n > 0 ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 : 0;
  const std::size_t groups = (bits + 5) / 6;
  if (body.size() != i + groups) {
    throw ParseError(body.size() < i + groups ? "truncated graph6 string" : "trailing bytes after graph6 data", 1,
                     offset + std::min(body.size(), i + groups));
  }

  std::vector<Edge> pairs;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int group = byte_at(i + bit / 6);
      if ((group >> (5 - bit % 6)) & 1) pairs.push_back({u, v});
    }
  }
  if (groups > 0) {
    const int pad = static_cast<int>(groups * 6 - bits);
    if (byte_at(i + groups - 1) & ((1 << pad) - 1)) {
      throw ParseError("non-zero padding bits", 1, offset + i + groups - 1);
    }
  }
  return Graph(n, pairs);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto text = buffer.str();
  if (path.extension() == ".g6") return parse_graph6(text);
  return parse_edge_list(text);
}

}  // namespace sbond
