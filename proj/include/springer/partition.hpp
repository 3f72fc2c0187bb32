#ifndef SPRINGER_PARTITION_HPP
#define SPRINGER_PARTITION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/poly.hpp"

namespace springer {

/// Integer partition with parts stored weakly decreasing, all >= 1. Used for
/// Jordan types of unipotent elements and for cycle types of permutations.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("Partition: negative part");
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (k^mult), e.g. rectangle(2, 3) = (2,2,2).
  static Partition rectangle(int k, int mult) { return Partition(std::vector<int>(static_cast<std::size_t>(mult), k)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  /// n(lambda) = sum_i (i-1) lambda_i.
  int n_statistic() const {
    int s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
    return s;
  }

  /// Multiplicity m_i of the part i.
  int multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j) {
      int cnt = 0;
      for (int p : parts_)
        if (p >= j) ++cnt;
      c.push_back(cnt);
    }
    return Partition(std::move(c));
  }

  /// Order of the centralizer in S_n of a permutation of this cycle type:
  /// prod_i i^{m_i} m_i!.
  Integer centralizer_order() const {
    Integer z = 1;
    for (auto [part, mult] : multiplicities()) {
      for (int k = 0; k < mult; ++k) z *= part;
      for (int k = 2; k <= mult; ++k) z *= k;
    }
    return z;
  }

  /// Multiset union.
  Partition merged(const Partition& o) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), o.parts_.begin(), o.parts_.end());
    return Partition(std::move(v));
  }

  /// "(2,2)"; the empty partition prints as "()".
  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  /// Lexicographic on parts: (1,1,1,1) < (2,1,1) < (2,2) < (3,1) < (4).
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in increasing lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Parses "2,2,1"; the empty string and "0" give the empty partition.
inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

}  // namespace springer

#endif  // SPRINGER_PARTITION_HPP
