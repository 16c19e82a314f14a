#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partgraph {

/// Raised by parse_partition; token() is the offending piece of input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A partition of n in weakly decreasing form. Always non-empty.
class Partition {
 public:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// (n)
  static Partition row(int n) { return Partition(std::vector<int>{n}); }
  /// (1^n)
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int n() const noexcept { return n_; }
  int largest_part() const noexcept { return parts_.front(); }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Ordering of the canonical enumeration: reverse-lexicographic, so (n)
/// comes first and (1^n) last.
inline bool canonical_before(const Partition& a, const Partition& b) {
  auto pa = a.parts();
  auto pb = b.parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const { return canonical_before(a, b); }
};

/// Stable vertex identity: position of a partition in the canonical order of Par(n).
struct PartitionIndex {
  int n = 0;
  std::size_t index = 0;
  friend bool operator==(const PartitionIndex&, const PartitionIndex&) = default;
};

/// All partitions of n in canonical order.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::domain_error("enumerate_partitions: n must be >= 1, got " + std::to_string(n));
  std::vector<Partition> out;
  std::vector<int> cur{n};
  for (;;) {
    out.emplace_back(cur);
    // Rightmost part larger than 1.
    std::size_t k = cur.size();
    int ones = 0;
    while (k > 0 && cur[k - 1] == 1) {
      --k;
      ++ones;
    }
    if (k == 0) break;
    const int m = cur[k - 1] - 1;
    cur.resize(k);
    cur[k - 1] = m;
    int rest = ones + 1;
    while (rest > 0) {
      const int p = std::min(m, rest);
      cur.push_back(p);
      rest -= p;
    }
  }
  return out;
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest_part()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

inline bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

/// "4,2,1"
inline std::string format_partition(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

/// Strict inverse of format_partition. Input is never re-sorted.
inline Partition parse_partition(std::string_view text) {
  if (text.empty()) throw ParseError("empty partition text", "");
  std::vector<int> parts;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("malformed part '" + std::string(tok) + "'", std::string(tok));
    if (value < 1)
      throw ParseError("non-positive part '" + std::string(tok) + "'", std::string(tok));
    if (!parts.empty() && value > parts.back())
      throw ParseError("part '" + std::string(tok) + "' breaks weakly decreasing order",
                       std::string(tok));
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace partgraph
