#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/rational.hpp"

namespace mirabolic {

/// Ordered tuple of positive integers.  Unlike a partition, the order of
/// the parts is significant.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw domain_error("composition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Partition of a non-negative integer: parts listed in non-increasing
/// order.  The empty partition is the partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw domain_error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw domain_error("partition parts must be non-increasing");
    }
  }

  /// Sorts the given parts into non-increasing order.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
  }

  static Partition rectangle(int part, int count) {
    if (part <= 0 || count < 0) throw domain_error("invalid rectangular partition");
    return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Largest part; 0 for the empty partition.
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Drops the first (largest) part.
  Partition tail() const {
    if (parts_.empty()) throw domain_error("empty partition has no tail");
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Conjugate partition: entry j counts the parts of `p` that are >= j+1.
inline Partition transpose(const Partition& p) {
  std::vector<int> result;
  const auto& parts = p.parts();
  result.reserve(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()));
  for (int j = 1; j <= p.largest(); ++j) {
    int count = 0;
    for (int part : parts)
      if (part >= j) ++count;
    result.push_back(count);
  }
  return Partition(std::move(result));
}

/// Componentwise sum after padding with zeros.  This is the partition of
/// the nilpotent orbit induced from the orbits of the summands on a block
/// diagonal subalgebra.
inline Partition induced_sum(const std::vector<Partition>& summands) {
  std::size_t length = 0;
  for (const auto& p : summands) length = std::max(length, p.size());
  std::vector<int> result(length, 0);
  for (const auto& p : summands)
    for (std::size_t i = 0; i < p.size(); ++i) result[i] += p.parts()[i];
  while (!result.empty() && result.back() == 0) result.pop_back();
  return Partition(std::move(result));
}

inline Partition induced_sum(const Partition& a, const Partition& b) {
  return induced_sum(std::vector<Partition>{a, b});
}

/// Dominance order on partitions of the same integer: `a` is dominated by
/// `b` when every prefix sum of `a` is at most the matching prefix sum of
/// `b`.
inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.n() != b.n())
    throw domain_error("dominance order compares partitions of the same integer");
  long sum_a = 0, sum_b = 0;
  const std::size_t length = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < length; ++i) {
    sum_a += i < a.size() ? a.parts()[i] : 0;
    sum_b += i < b.size() ? b.parts()[i] : 0;
    if (sum_a > sum_b) return false;
  }
  return true;
}

namespace detail {

/// Shared reader for the partition/composition grammar:
///   part ::= int ('^' int)?
/// with parts separated by whitespace and/or commas.  Returns the parts in
/// the order written, with exponents expanded in place.
inline std::vector<int> parse_part_list(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_separators = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == ','))
      ++pos;
  };
  auto read_int = [&]() -> long {
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) throw parse_error("expected an integer", start);
    if (pos - start > 9) throw parse_error("integer too large", start);
    return std::stol(std::string(text.substr(start, pos - start)));
  };

  skip_separators();
  // "()" is the written form of the empty partition.
  if (pos + 1 < text.size() && text[pos] == '(' && text[pos + 1] == ')') {
    pos += 2;
    skip_separators();
    if (pos != text.size()) throw parse_error("unexpected characters after ()", pos);
    return parts;
  }
  while (pos < text.size()) {
    const std::size_t entry_start = pos;
    long base = read_int();
    long repeat = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      repeat = read_int();
    }
    if (base == 0) throw domain_error("partition parts must be positive");
    if (repeat == 0) throw domain_error("exponent in a part list must be positive");
    if (repeat > 100000) throw parse_error("exponent too large", entry_start);
    for (long r = 0; r < repeat; ++r) parts.push_back(static_cast<int>(base));
    skip_separators();
  }
  return parts;
}

}  // namespace detail

/// Parses exponential or plain notation ("4^2 2 1^3", "3,1,2") into a
/// partition; parts are sorted into non-increasing order.
inline Partition parse_partition_text(std::string_view text) {
  return Partition::from_unsorted(detail::parse_part_list(text));
}

/// Same grammar, but the order of the parts is preserved.
inline Composition parse_composition_text(std::string_view text) {
  return Composition(detail::parse_part_list(text));
}

/// Canonical exponential form: bases in decreasing order, "^1" omitted,
/// single spaces between entries.  The empty partition prints as "()".
inline std::string to_exponential_string(const Partition& p) {
  if (p.empty()) return "()";
  std::string out;
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(parts[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Comma-joined plain form, e.g. "2,2,1".  The empty composition prints as
/// "()".
inline std::string to_string(const Composition& c) {
  if (c.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.parts()[i]);
  }
  return out;
}

}  // namespace mirabolic
