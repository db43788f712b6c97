#include "snarklab/io.hpp"

#include <charconv>
#include <sstream>

namespace snarklab {

ParseError::ParseError(const std::string& what, int line, int offset)
    : std::runtime_error(what + " (line " + std::to_string(line) + ", offset " +
                         std::to_string(offset) + ")"),
      line_(line),
      offset_(offset) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool significant(std::string_view line) {
  line = trim(line);
  return !line.empty() && line.front() != '#';
}

// Parses whitespace-separated non-negative integers; returns false on junk.
bool parse_ints(std::string_view line, std::vector<long long>& out, int& bad_offset) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || value < 0 ||
        (p != line.data() + line.size() && *p != ' ' && *p != '\t')) {
      bad_offset = static_cast<int>(i);
      return false;
    }
    out.push_back(value);
    i = static_cast<std::size_t>(p - line.data());
  }
  return true;
}

MultiGraph graph6_line(std::string_view s, int line_no) {
  constexpr std::string_view header = ">>graph6<<";
  int base = 0;
  if (s.substr(0, header.size()) == header) {
    s.remove_prefix(header.size());
    base = static_cast<int>(header.size());
  }
  if (s.empty()) throw ParseError("empty graph6 string", line_no, base);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 63 || s[i] > 126)
      throw ParseError("invalid graph6 character", line_no, base + static_cast<int>(i));
  std::size_t pos = 0;
  long long n;
  auto six = [&](std::size_t count) {
    if (pos + count > s.size())
      throw ParseError("truncated graph6 size field", line_no, base + static_cast<int>(s.size()));
    long long v = 0;
    for (std::size_t k = 0; k < count; ++k) v = (v << 6) | (s[pos++] - 63);
    return v;
  };
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else if (s.size() > 1 && s[1] != 126) {
    pos = 1;
    n = six(3);
  } else {
    pos = 2;
    n = six(6);
  }
  if (n > 1'000'000) throw ParseError("graph6 order too large", line_no, base);
  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != need)
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " characters, expected " +
                         std::to_string(need),
                     line_no, base + static_cast<int>(pos));
  MultiGraph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int c = s[pos + k / 6] - 63;
      if (c & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  for (long long r = k; r < need * 6; ++r) {
    int c = s[pos + r / 6] - 63;
    if (c & (1 << (5 - r % 6)))
      throw ParseError("nonzero graph6 padding", line_no, base + static_cast<int>(pos + r / 6));
  }
  return g;
}

}  // namespace

std::string write_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw GraphError("graph6 cannot encode parallel edges");
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  std::vector<bool> bit;
  bit.reserve(n * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bit.push_back(g.adjacent(i, j));
  while (bit.size() % 6) bit.push_back(false);
  for (std::size_t k = 0; k < bit.size(); k += 6) {
    int c = 0;
    for (int b = 0; b < 6; ++b) c = (c << 1) | bit[k + b];
    out += static_cast<char>(c + 63);
  }
  return out;
}

MultiGraph read_graph6(std::string_view text) {
  auto lines = split_lines(text);
  int line_no = 0;
  for (auto line : lines) {
    ++line_no;
    if (!significant(line)) continue;
    return graph6_line(trim(line), line_no);
  }
  throw ParseError("no graph6 data", line_no, 0);
}

std::string write_multi_text(const MultiGraph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

namespace {

// Parses one multi_text record starting at lines[i]; advances i past it.
MultiGraph multi_text_record(const std::vector<std::string_view>& lines, std::size_t& i) {
  std::vector<long long> nums;
  int bad = 0;
  while (i < lines.size() && !significant(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("missing \"n m\" header", static_cast<int>(i), 0);
  const int header_line = static_cast<int>(i) + 1;
  if (!parse_ints(lines[i], nums, bad))
    throw ParseError("invalid header", header_line, bad);
  if (nums.size() != 2) throw ParseError("header must be \"n m\"", header_line, 0);
  if (nums[0] > 10'000'000 || nums[1] > 30'000'000)
    throw ParseError("header values too large", header_line, 0);
  MultiGraph g(static_cast<int>(nums[0]));
  const long long m = nums[1];
  ++i;
  for (long long k = 0; k < m; ++k) {
    while (i < lines.size() && !significant(lines[i])) ++i;
    if (i == lines.size())
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k),
                       static_cast<int>(i), 0);
    const int line_no = static_cast<int>(i) + 1;
    if (!parse_ints(lines[i], nums, bad)) throw ParseError("invalid edge line", line_no, bad);
    if (nums.size() != 2) throw ParseError("edge line must be \"u v\"", line_no, 0);
    if (nums[0] >= g.order() || nums[1] >= g.order())
      throw ParseError("vertex out of range", line_no, 0);
    if (nums[0] == nums[1]) throw ParseError("loop", line_no, 0);
    g.add_edge(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    ++i;
  }
  return g;
}

}  // namespace

MultiGraph read_multi_text(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  auto g = multi_text_record(lines, i);
  while (i < lines.size()) {
    if (significant(lines[i]))
      throw ParseError("trailing data after graph", static_cast<int>(i) + 1, 0);
    ++i;
  }
  return g;
}

Format detect_format(std::string_view text) {
  for (auto line : split_lines(text)) {
    if (!significant(line)) continue;
    std::vector<long long> nums;
    int bad = 0;
    return parse_ints(line, nums, bad) && nums.size() == 2 ? Format::multi_text : Format::graph6;
  }
  return Format::graph6;
}

std::vector<Record> read_catalogue(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<Record> out;
  if (detect_format(text) == Format::graph6) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!significant(lines[i])) continue;
      const int line_no = static_cast<int>(i) + 1;
      try {
        out.push_back({line_no, graph6_line(trim(lines[i]), line_no)});
      } catch (const ParseError& e) {
        out.push_back({line_no, e});
      }
    }
    return out;
  }
  std::size_t i = 0;
  while (true) {
    while (i < lines.size() && !significant(lines[i])) ++i;
    if (i == lines.size()) break;
    const int line_no = static_cast<int>(i) + 1;
    try {
      out.push_back({line_no, multi_text_record(lines, i)});
    } catch (const ParseError& e) {
      out.push_back({line_no, e});
      // Resynchronise at the next line that looks like a header.
      ++i;
      while (i < lines.size()) {
        std::vector<long long> nums;
        int bad = 0;
        if (significant(lines[i]) && parse_ints(lines[i], nums, bad) && nums.size() == 2 &&
            !significant(lines[i - 1]))
          break;
        ++i;
      }
    }
  }
  return out;
}

std::string write_graph(const MultiGraph& g, Format f) {
  return f == Format::graph6 ? write_graph6(g) + "\n" : write_multi_text(g);
}

}  // namespace snarklab
