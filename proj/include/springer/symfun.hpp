#ifndef SPRINGER_SYMFUN_HPP
#define SPRINGER_SYMFUN_HPP

// Type A representation side: semistandard tableaux, the charge statistic,
// Kostka-Foulkes polynomials, symmetric group characters, and graded Springer
// characters (Green polynomials) of GL_n.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "springer/partition.hpp"
#include "springer/poly.hpp"

namespace springer {

/// Semistandard tableau stored row by row (English notation, top row first).
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  /// Rows from bottom to top, each read left to right.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
  }

  bool is_semistandard() const {
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) return false;
        if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c]) return false;
      }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r) s += '/';
      for (int v : rows[r]) s += std::to_string(v);
    }
    return s;
  }
};

/// All semistandard tableaux of the given shape and content. The entries
/// equal to v form a horizontal strip added on top of the tableau built from
/// 1..v-1; strips are generated with row lengths in lexicographic order.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& weight) {
  if (shape.size() != weight.size()) throw std::invalid_argument("enumerate_ssyt: |shape| != |weight|");
  std::vector<Tableau> out;
  const int rows = shape.length();
  std::vector<int> fill(static_cast<std::size_t>(rows), 0);
  std::vector<std::vector<int>> content(static_cast<std::size_t>(rows));

  std::function<void(int)> place = [&](int v) {
    if (v > weight.length()) {
      Tableau t{shape, content};
      out.push_back(std::move(t));
      return;
    }
    const int need = weight[static_cast<std::size_t>(v - 1)];
    // choose how many v's go in each row r: 0 <= k_r <= bound_r, where the
    // strip condition gives fill[r] + k_r <= old fill[r-1] (row above).
    std::vector<int> old = fill;
    std::function<void(int, int)> rec = [&](int r, int left) {
      if (r == rows) {
        if (left == 0) place(v + 1);
        return;
      }
      int cap = shape[static_cast<std::size_t>(r)] - old[r];
      if (r > 0) cap = std::min(cap, old[r - 1] - old[r]);
      cap = std::min(cap, left);
      for (int k = 0; k <= cap; ++k) {
        for (int i = 0; i < k; ++i) content[r].push_back(v);
        fill[r] = old[r] + k;
        rec(r + 1, left - k);
        content[r].resize(static_cast<std::size_t>(old[r]));
        fill[r] = old[r];
      }
    };
    rec(0, need);
  };
  place(1);
  return out;
}

/// Charge of a word whose content is a partition. Standard subwords are
/// extracted repeatedly: starting from the rightmost 1, each next letter r+1
/// is found by scanning leftwards cyclically; its index increases by one
/// exactly when the scan wraps around. The charge is the sum of all indices.
inline int charge(std::vector<int> word) {
  int total = 0;
  std::map<int, int> count;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("charge: letters must be positive");
    ++count[x];
  }
  for (auto it = count.begin(); it != count.end(); ++it) {
    if (it->first != std::distance(count.begin(), it) + 1) throw std::invalid_argument("charge: content is not a partition");
    if (std::next(it) != count.end() && std::next(it)->second > it->second)
      throw std::invalid_argument("charge: content is not a partition");
  }
  while (!word.empty()) {
    const int top = *std::max_element(word.begin(), word.end());
    const int len = static_cast<int>(word.size());
    std::vector<bool> used(word.size(), false);
    int pos = -1;
    for (int p = len - 1; p >= 0; --p)
      if (word[p] == 1) {
        pos = p;
        break;
      }
    used[pos] = true;
    int index = 0;
    for (int letter = 2; letter <= top; ++letter) {
      int found = -1;
      for (int p = pos - 1; p >= 0; --p)
        if (!used[p] && word[p] == letter) {
          found = p;
          break;
        }
      if (found < 0) {
        ++index;
        for (int p = len - 1; p > pos; --p)
          if (!used[p] && word[p] == letter) {
            found = p;
            break;
          }
      }
      if (found < 0) break;
      used[found] = true;
      pos = found;
      total += index;
    }
    std::vector<int> rest;
    for (int p = 0; p < len; ++p)
      if (!used[p]) rest.push_back(word[p]);
    word = std::move(rest);
  }
  return total;
}

inline int charge(const Tableau& t) { return charge(t.reading_word()); }

namespace detail {

// Thread-safe memo table: concurrent readers, exclusive inserts.
template <class K, class V>
class Memo {
 public:
  template <class F>
  V get(const K& key, F&& compute) {
    {
      std::shared_lock lock(mu_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mu_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<K, V> table_;
};

}  // namespace detail

/// K_{lambda mu}(q) as the charge generating function over SSYT(lambda, mu).
inline IntPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu) {
  static detail::Memo<std::pair<Partition, Partition>, IntPolynomial> memo;
  return memo.get({lambda, mu}, [&] {
    IntPolynomial k;
    for (const auto& t : enumerate_ssyt(lambda, mu)) k.add_to_coeff(static_cast<std::size_t>(charge(t)), 1);
    return k;
  });
}

namespace detail {

// chi^lambda on rho via beta-numbers: removing a border strip of length r is
// moving a bead from position b to b - r; its height is the number of beads
// strictly between.
inline Integer mn_recurse(std::vector<int> beads, const std::vector<int>& rho, std::size_t idx) {
  if (idx == rho.size()) return 1;
  const int r = rho[idx];
  Integer total = 0;
  for (std::size_t k = 0; k < beads.size(); ++k) {
    const int b = beads[k];
    const int target = b - r;
    if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int between = 0;
    for (int x : beads)
      if (x > target && x < b) ++between;
    beads[k] = target;
    const Integer sub = mn_recurse(beads, rho, idx + 1);
    beads[k] = b;
    if (between % 2) total -= sub;
    else total += sub;
  }
  return total;
}

}  // namespace detail

/// Irreducible character chi^lambda of S_n at the class of cycle type rho
/// (Murnaghan-Nakayama).
inline Integer char_sn(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw std::invalid_argument("char_sn: |lambda| != |rho|");
  static detail::Memo<std::pair<Partition, Partition>, Integer> memo;
  return memo.get({lambda, rho}, [&] {
    const int len = lambda.length();
    std::vector<int> beads;
    for (int i = 0; i < len; ++i) beads.push_back(lambda[static_cast<std::size_t>(i)] + (len - 1 - i));
    return detail::mn_recurse(beads, rho.parts(), 0);
  });
}

/// Class function of S_n with values in Z[q], keyed by cycle type.
struct GradedCharacter {
  int n = 0;
  std::map<Partition, IntPolynomial> values;

  const IntPolynomial& operator[](const Partition& rho) const { return values.at(rho); }
  const IntPolynomial& at_identity() const { return values.at(Partition::rectangle(1, n)); }
};

/// Graded character sum_d Tr(w, H^{2d}(B_u)) q^d of the Springer
/// representation for u of Jordan type mu in GL_n:
///   sum_lambda chi^lambda(rho) q^{n(mu)} K_{lambda mu}(1/q).
inline GradedCharacter springer_graded_char(const Partition& mu) {
  static detail::Memo<Partition, GradedCharacter> memo;
  return memo.get(mu, [&] {
    GradedCharacter g;
    g.n = mu.size();
    const int top = mu.n_statistic();
    std::vector<std::pair<Partition, IntPolynomial>> ktilde;
    for (const auto& lambda : partitions_of(g.n)) {
      IntPolynomial k = kostka_foulkes(lambda, mu);
      if (!k.is_zero()) ktilde.emplace_back(lambda, k.reflect(top));
    }
    for (const auto& rho : partitions_of(g.n)) {
      IntPolynomial v;
      for (const auto& [lambda, kt] : ktilde) v += kt * char_sn(lambda, rho);
      g.values.emplace(rho, std::move(v));
    }
    return g;
  });
}

/// Green polynomial value Q^mu_rho(zeta^j) in Q(zeta_e).
inline Cyclotomic green_at_root(const Partition& mu, const Partition& rho, int e, long long j) {
  if (mu.size() != rho.size()) throw std::invalid_argument("green_at_root: |mu| != |rho|");
  return eval_at_root(springer_graded_char(mu)[rho], e, j);
}

enum class Reading { Printed, Amended };

/// Closed form for Q^{(m^e)}_rho(zeta): e^{l(rho)} when the divisibility
/// condition holds, else 0. The printed condition asks e to divide every
/// multiplicity of rho, the amended one every part of rho.
inline Integer remark38_closed_form(int m, int e, const Partition& rho, Reading reading) {
  if (rho.size() != e * m) throw std::invalid_argument("remark38_closed_form: |rho| != e*m");
  bool ok = true;
  if (reading == Reading::Printed) {
    for (auto [part, mult] : rho.multiplicities())
      if (mult % e != 0) ok = false;
  } else {
    for (int p : rho.parts())
      if (p % e != 0) ok = false;
  }
  if (!ok) return 0;
  Integer v = 1;
  for (int i = 0; i < rho.length(); ++i) v *= e;
  return v;
}

/// Number of standard Young tableaux of the given shape (hook length formula).
inline Integer standard_tableaux_count(const Partition& lambda) {
  Integer num = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c)
      hooks *= lambda[static_cast<std::size_t>(r)] - c + conj[static_cast<std::size_t>(c)] - r - 1;
  return num / hooks;
}

}  // namespace springer

#endif  // SPRINGER_SYMFUN_HPP
