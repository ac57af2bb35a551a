#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gyro {

using Elem = std::uint32_t;

/// Multiplication table of a finite groupoid on 0..n-1. Entry (a, b) is a + b.
/// Element 0 is always the candidate identity.
class CayleyTable {
 public:
  CayleyTable() = default;
  /// Throws std::invalid_argument if `entries` is not n*n or holds a value >= n.
  CayleyTable(std::size_t order, std::vector<Elem> entries, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Elem at(Elem a, Elem b) const noexcept { return entries_[static_cast<std::size_t>(a) * order_ + b]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Elem> entries() const noexcept { return entries_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Copy with a single entry replaced.
  CayleyTable withEntry(Elem a, Elem b, Elem value) const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Elem> entries_;
  std::vector<std::string> labels_;
};

/// Reads the `gyro <n>` text format. Throws ParseError with line/column.
CayleyTable parseCayleyTable(std::string_view text);
CayleyTable loadCayleyTable(const std::string& path);

/// Canonical form: single spaces, no trailing whitespace, no comments.
std::string serializeCayleyTable(const CayleyTable& t);

namespace detail {

/// Line-oriented tokenizer shared by the table and action file readers.
/// Strips `#` comments and skips blank lines.
struct TextLine {
  std::size_t number;
  std::vector<std::pair<std::string_view, std::size_t>> tokens;  // token, column (1-based)
};

std::vector<TextLine> tokenize(std::string_view text);
std::uint64_t parseUnsigned(const TextLine& line, std::size_t index);
std::string readFile(const std::string& path);

}  // namespace detail

}  // namespace gyro
