#include "gyro/cayley_table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gyro/error.hpp"

namespace gyro {

CayleyTable::CayleyTable(std::size_t order, std::vector<Elem> entries, std::vector<std::string> labels)
    : order_(order), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (order_ == 0) throw std::invalid_argument("cayley table: order must be positive");
  if (entries_.size() != order_ * order_) throw std::invalid_argument("cayley table: expected n*n entries");
  for (Elem e : entries_)
    if (e >= order_) throw std::invalid_argument("cayley table: entry out of range");
  if (!labels_.empty() && labels_.size() != order_)
    throw std::invalid_argument("cayley table: label count differs from order");
}

CayleyTable CayleyTable::withEntry(Elem a, Elem b, Elem value) const {
  auto e = entries_;
  e.at(static_cast<std::size_t>(a) * order_ + b) = value;
  return CayleyTable(order_, std::move(e), labels_);
}

namespace detail {

std::vector<TextLine> tokenize(std::string_view text) {
  std::vector<TextLine> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    TextLine line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start), start + 1);
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::uint64_t parseUnsigned(const TextLine& line, std::size_t index) {
  const auto [tok, col] = line.tokens.at(index);
  std::uint64_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line.number, col, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

CayleyTable parseCayleyTable(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'gyro <n>'");

  const auto& header = lines.front();
  if (header.tokens[0].first != "gyro" || header.tokens.size() != 2)
    throw ParseError(header.number, header.tokens[0].second, "expected header 'gyro <n>'");
  const auto order = detail::parseUnsigned(header, 1);
  if (order == 0) throw ParseError(header.number, header.tokens[1].second, "order must be positive");

  std::size_t next = 1;
  std::vector<std::string> labels;
  if (next < lines.size() && lines[next].tokens[0].first == "labels") {
    const auto& l = lines[next];
    if (l.tokens.size() != order + 1)
      throw ParseError(l.number, l.tokens[0].second,
                       "expected " + std::to_string(order) + " labels, got " + std::to_string(l.tokens.size() - 1));
    for (std::size_t i = 1; i < l.tokens.size(); ++i) labels.emplace_back(l.tokens[i].first);
    ++next;
  }

  if (lines.size() - next != order) {
    const std::size_t at = lines.size() > next + order ? lines[next + order].number : lines.back().number + 1;
    throw ParseError(at, 1,
                     "expected " + std::to_string(order) + " table rows, got " + std::to_string(lines.size() - next));
  }

  std::vector<Elem> entries;
  entries.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    const auto& line = lines[next + r];
    if (line.tokens.size() != order)
      throw ParseError(line.number, line.tokens.back().second,
                       "row " + std::to_string(r) + " has " + std::to_string(line.tokens.size()) + " entries, expected " +
                           std::to_string(order));
    for (std::size_t c = 0; c < order; ++c) {
      const auto v = detail::parseUnsigned(line, c);
      if (v >= order)
        throw ParseError(line.number, line.tokens[c].second,
                         "entry " + std::to_string(v) + " out of range 0.." + std::to_string(order - 1));
      entries.push_back(static_cast<Elem>(v));
    }
  }
  return CayleyTable(order, std::move(entries), std::move(labels));
}

CayleyTable loadCayleyTable(const std::string& path) { return parseCayleyTable(detail::readFile(path)); }

std::string serializeCayleyTable(const CayleyTable& t) {
  std::string out = "gyro " + std::to_string(t.order()) + "\n";
  if (!t.labels().empty()) {
    out += "labels";
    for (const auto& l : t.labels()) out += " " + l;
    out += "\n";
  }
  for (Elem a = 0; a < t.order(); ++a) {
    const auto row = t.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b) out += ' ';
      out += std::to_string(row[b]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace gyro
