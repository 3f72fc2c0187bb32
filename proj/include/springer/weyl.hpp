#ifndef SPRINGER_WEYL_HPP
#define SPRINGER_WEYL_HPP

// Weyl group elements and finite-group machinery.
//
// Composition convention: elements act on the left, and (x * y)(v) = x(y(v)),
// so in x^{-1} w x the factor x is applied first. Counts of the form
// #{x : x^{-1} w x in S} do not depend on this, products inside cosets do.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "springer/linalg.hpp"
#include "springer/partition.hpp"
#include "springer/poly.hpp"
#include "springer/rootsys.hpp"

namespace springer {

/// Raised when a group is too large to enumerate under the configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumerationBound = 10'000'000;

// ---------------------------------------------------------------------------
// Permutations of {0, ..., n-1}

class Perm {
 public:
  Perm() = default;
  explicit Perm(int n) : img_(static_cast<std::size_t>(n)) { std::iota(img_.begin(), img_.end(), 0); }

  static Perm from_images(std::vector<int> img) {
    Perm p;
    p.img_ = std::move(img);
    std::vector<bool> hit(p.img_.size(), false);
    for (int v : p.img_) {
      if (v < 0 || v >= static_cast<int>(hit.size()) || hit[v]) throw std::invalid_argument("Perm: not a bijection");
      hit[v] = true;
    }
    return p;
  }

  /// Cycles use 1-based letters, e.g. {{1,2,3},{4,5,6}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) {
        const int from = c[i] - 1, to = c[(i + 1) % c.size()] - 1;
        if (from < 0 || from >= n || to < 0 || to >= n || used[from])
          throw std::invalid_argument("Perm::from_cycles: bad cycle");
        used[from] = true;
        p.img_[from] = to;
      }
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.img_.resize(b.img_.size());
    for (std::size_t i = 0; i < b.img_.size(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
  }
  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
    return r;
  }
  Perm pow(long k) const {
    Perm base = k < 0 ? inverse() : *this, acc(size());
    for (unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k); e; e >>= 1) {
      if (e & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i)) return false;
    return true;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> c;
      for (int i = static_cast<int>(s); !seen[i]; i = img_[i]) {
        seen[i] = true;
        c.push_back(i);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  Partition cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lens));
  }

  long order() const {
    long o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<long>(c.size()));
    return o;
  }

  /// Cycle notation with 1-based letters; fixed points omitted, identity "()".
  std::string to_string() const {
    std::string out;
    const bool spaced = size() >= 10;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) out += (spaced && i ? " " : "") + std::to_string(c[i] + 1);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

// ---------------------------------------------------------------------------
// Signed permutations: e_i -> sign * e_j, stored as img_[i] = sign * (j + 1).

class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(int n) : img_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) img_[i] = i + 1;
  }
  explicit SignedPerm(const Perm& p) : img_(static_cast<std::size_t>(p.size())) {
    for (int i = 0; i < p.size(); ++i) img_[i] = p(i) + 1;
  }

  static SignedPerm from_images(std::vector<int> img) {
    SignedPerm p;
    p.img_ = std::move(img);
    std::vector<bool> hit(p.img_.size(), false);
    for (int v : p.img_) {
      const int a = std::abs(v) - 1;
      if (v == 0 || a >= static_cast<int>(hit.size()) || hit[a]) throw std::invalid_argument("SignedPerm: not a bijection");
      hit[a] = true;
    }
    return p;
  }

  /// A negative cycle (i_1 ... i_L) maps e_{i_1} -> ... -> e_{i_L} -> -e_{i_1}.
  struct Cycle {
    std::vector<int> letters;  // 1-based
    bool negative = false;
  };

  static SignedPerm from_cycles(int n, const std::vector<Cycle>& cycles) {
    SignedPerm p(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.letters.size(); ++i) {
        const int from = c.letters[i] - 1, to = c.letters[(i + 1) % c.letters.size()] - 1;
        if (from < 0 || from >= n || to < 0 || to >= n || used[from])
          throw std::invalid_argument("SignedPerm::from_cycles: bad cycle");
        used[from] = true;
        const bool flip = c.negative && i + 1 == c.letters.size();
        p.img_[from] = flip ? -(to + 1) : to + 1;
      }
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int target(int i) const { return std::abs(img_[i]) - 1; }
  int sign(int i) const { return img_[i] < 0 ? -1 : 1; }
  const std::vector<int>& images() const { return img_; }

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm r;
    r.img_.resize(b.img_.size());
    for (std::size_t i = 0; i < b.img_.size(); ++i) {
      const int mid = b.img_[i];
      const int out = a.img_[std::abs(mid) - 1];
      r.img_[i] = mid < 0 ? -out : out;
    }
    return r;
  }
  SignedPerm inverse() const {
    SignedPerm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
      const int v = img_[i];
      r.img_[std::abs(v) - 1] = v < 0 ? -static_cast<int>(i + 1) : static_cast<int>(i + 1);
    }
    return r;
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i + 1)) return false;
    return true;
  }
  int negative_count() const {
    return static_cast<int>(std::count_if(img_.begin(), img_.end(), [](int v) { return v < 0; }));
  }

  std::vector<Cycle> cycles() const {
    std::vector<Cycle> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s]) continue;
      Cycle c;
      int sgn = 1;
      for (int i = static_cast<int>(s); !seen[i]; i = target(i)) {
        seen[i] = true;
        c.letters.push_back(i + 1);
        sgn *= sign(i);
      }
      c.negative = sgn < 0;
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Cycle lengths of positive and of negative cycles.
  std::pair<Partition, Partition> signed_cycle_type() const {
    std::vector<int> pos, neg;
    for (const auto& c : cycles()) (c.negative ? neg : pos).push_back(static_cast<int>(c.letters.size()));
    return {Partition(std::move(pos)), Partition(std::move(neg))};
  }

  long order() const {
    long o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<long>(c.letters.size()) * (c.negative ? 2 : 1));
    return o;
  }

  /// Signed cycle notation: "(12)" positive, "-(12)" negative; positive fixed
  /// points omitted, identity "()".
  std::string to_string() const {
    std::string out;
    const bool spaced = size() >= 10;
    for (const auto& c : cycles()) {
      if (c.letters.size() == 1 && !c.negative) continue;
      if (c.negative) out += '-';
      out += '(';
      for (std::size_t i = 0; i < c.letters.size(); ++i) out += (spaced && i ? " " : "") + std::to_string(c.letters[i]);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  /// Ambient matrix (row-major): column i is sign(i) e_{target(i)}.
  std::vector<long> matrix() const {
    const std::size_t n = img_.size();
    std::vector<long> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[static_cast<std::size_t>(target(static_cast<int>(i))) * n + i] = sign(static_cast<int>(i));
    return m;
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> img_;
};

/// Parses "(123)(45)" or "(1 2 3)-(4 5)"; letters are 1-based. Digits run
/// together are read as single-digit letters.
inline std::vector<SignedPerm::Cycle> parse_cycles(const std::string& text) {
  std::vector<SignedPerm::Cycle> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    SignedPerm::Cycle c;
    if (text[i] == '-') {
      c.negative = true;
      ++i;
    }
    if (i >= text.size() || text[i] != '(') throw std::invalid_argument("parse_cycles: expected '(' in '" + text + "'");
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("parse_cycles: unbalanced parenthesis");
    const std::string body = text.substr(i + 1, close - i - 1);
    const bool spaced = body.find_first_of(" ,") != std::string::npos;
    if (spaced) {
      std::stringstream ss(body);
      std::string tok;
      while (ss >> tok) {
        std::erase(tok, ',');
        if (!tok.empty()) c.letters.push_back(std::stoi(tok));
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("parse_cycles: bad letter");
        c.letters.push_back(ch - '0');
      }
    }
    if (!c.letters.empty()) out.push_back(std::move(c));
    i = close + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weyl group elements in the reflection representation

/// A Weyl group element as an integer matrix on the ambient space of its root
/// system, with an optional (signed) permutation form for classical families.
class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(int dim, std::vector<long> matrix, std::optional<SignedPerm> perm_form = std::nullopt)
      : dim_(dim), m_(std::move(matrix)), perm_(std::move(perm_form)) {
    if (m_.size() != static_cast<std::size_t>(dim) * dim) throw std::invalid_argument("WeylElt: bad matrix size");
    if (perm_ && perm_->matrix() != m_) throw std::invalid_argument("WeylElt: permutation form disagrees with matrix");
  }
  static WeylElt identity(int dim) {
    std::vector<long> m(static_cast<std::size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i) * dim + i] = 1;
    return WeylElt(dim, std::move(m));
  }
  static WeylElt from_signed_perm(const SignedPerm& p) { return WeylElt(p.size(), p.matrix(), p); }
  static WeylElt from_perm(const Perm& p) { return from_signed_perm(SignedPerm(p)); }

  int dim() const { return dim_; }
  long entry(int r, int c) const { return m_[static_cast<std::size_t>(r) * dim_ + c]; }
  const std::vector<long>& matrix() const { return m_; }
  const std::optional<SignedPerm>& perm_form() const { return perm_; }

  IntVector apply(const IntVector& v) const {
    IntVector out(dim_, 0);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) out[r] += entry(r, c) * v[c];
    return out;
  }

  friend WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("WeylElt: dimension mismatch");
    const int n = a.dim_;
    std::vector<long> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const long x = a.entry(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] += x * b.entry(k, j);
      }
    WeylElt r;
    r.dim_ = n;
    r.m_ = std::move(m);
    if (a.perm_ && b.perm_) r.perm_ = *a.perm_ * *b.perm_;
    return r;
  }

  bool is_identity() const { return *this == identity(dim_); }

  long order(long limit = 1000) const {
    WeylElt p = *this;
    for (long k = 1; k <= limit; ++k) {
      if (p.is_identity()) return k;
      p = p * *this;
    }
    throw std::runtime_error("WeylElt::order: order exceeds limit");
  }

  WeylElt inverse() const {
    if (perm_) return from_signed_perm(perm_->inverse());
    const long o = order();
    WeylElt r = identity(dim_);
    for (long k = 1; k < o; ++k) r = r * *this;
    return r;
  }

  WeylElt pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    WeylElt r = identity(dim_);
    if (perm_) r = from_signed_perm(SignedPerm(dim_));
    for (long i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  RationalMatrix rational_matrix() const {
    RationalMatrix m(dim_, dim_, Rational(0));
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) m(r, c) = entry(r, c);
    return m;
  }

  std::string to_string() const {
    if (perm_) return perm_->to_string();
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < dim_; ++r) {
      os << (r ? "; " : "");
      for (int c = 0; c < dim_; ++c) os << (c ? " " : "") << entry(r, c);
    }
    os << ']';
    return os.str();
  }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.dim_ == b.dim_ && a.m_ == b.m_; }

 private:
  int dim_ = 0;
  std::vector<long> m_;
  std::optional<SignedPerm> perm_;
};

struct EltHash {
  std::size_t operator()(const Perm& p) const { return hash_range(p.images()); }
  std::size_t operator()(const SignedPerm& p) const { return hash_range(p.images()); }
  std::size_t operator()(const WeylElt& w) const { return hash_range(w.matrix()); }

 private:
  template <class V>
  static std::size_t hash_range(const V& v) {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 0x100000001b3ULL;
    return h;
  }
};

template <class Elt>
concept GroupElement = requires(const Elt& a, const Elt& b) {
  { a * b } -> std::convertible_to<Elt>;
  { a.inverse() } -> std::convertible_to<Elt>;
  { a == b } -> std::convertible_to<bool>;
  { EltHash{}(a) } -> std::convertible_to<std::size_t>;
};

/// Explicit list of elements of a finite group, closed under product and
/// inverse, with optional left-coset representatives inside a parent group.
template <GroupElement Elt>
class SubgroupTable {
 public:
  SubgroupTable() = default;
  explicit SubgroupTable(std::vector<Elt> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  /// Closure of `generators` under multiplication (breadth-first, so the
  /// ordering is deterministic).
  static SubgroupTable generate(const std::vector<Elt>& generators, const Elt& identity,
                                std::size_t bound = kDefaultEnumerationBound) {
    std::vector<Elt> elems{identity};
    std::unordered_set<Elt, EltHash> seen{identity};
    for (std::size_t q = 0; q < elems.size(); ++q)
      for (const auto& g : generators) {
        Elt x = g * elems[q];
        if (seen.insert(x).second) {
          if (elems.size() >= bound) throw BoundExceeded("subgroup generation exceeded the enumeration bound");
          elems.push_back(std::move(x));
        }
      }
    return SubgroupTable(std::move(elems));
  }

  const std::vector<Elt>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Elt& x) const { return index_.count(x) > 0; }
  std::size_t index_of(const Elt& x) const { return index_.at(x); }

  bool is_closed() const {
    for (const auto& a : elements_) {
      if (!contains(a.inverse())) return false;
      for (const auto& b : elements_)
        if (!contains(a * b)) return false;
    }
    return true;
  }

  /// Left cosets x H of this subgroup H in `parent`, one representative each
  /// (the first in the parent's ordering).
  void compute_coset_reps(const SubgroupTable& parent) {
    coset_reps_.clear();
    std::unordered_set<Elt, EltHash> covered;
    for (const auto& x : parent.elements()) {
      if (covered.count(x)) continue;
      coset_reps_.push_back(x);
      for (const auto& h : elements_) covered.insert(x * h);
    }
    if (coset_reps_.size() * order() != parent.order())
      throw std::logic_error("compute_coset_reps: index does not divide parent order");
  }
  const std::vector<Elt>& coset_reps() const { return coset_reps_; }

 private:
  std::vector<Elt> elements_;
  std::unordered_map<Elt, std::size_t, EltHash> index_;
  std::vector<Elt> coset_reps_;
};

// ---------------------------------------------------------------------------
// Enumeration

inline Integer weyl_group_order(Family f, int r) {
  Integer fact = 1;
  auto factorial = [](int k) {
    Integer x = 1;
    for (int i = 2; i <= k; ++i) x *= i;
    return x;
  };
  switch (f) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: fact = factorial(r); return fact * (Integer(1) << r);
    case Family::D: fact = factorial(r); return fact * (Integer(1) << (r - 1));
    case Family::E: return r == 6 ? Integer(51840) : r == 7 ? Integer(2903040) : Integer(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

inline std::vector<WeylElt> simple_reflections(const RootSystem& rs) {
  std::vector<WeylElt> gens;
  for (const auto& a : rs.simple_roots()) {
    WeylElt s(rs.ambient_dim(), rs.reflection_matrix(a));
    if (rs.family() <= Family::D) {
      // classical reflections are signed permutations
      std::vector<int> img(static_cast<std::size_t>(s.dim()));
      for (int c = 0; c < s.dim(); ++c)
        for (int r = 0; r < s.dim(); ++r)
          if (s.entry(r, c) != 0) img[c] = static_cast<int>(s.entry(r, c)) * (r + 1);
      s = WeylElt::from_signed_perm(SignedPerm::from_images(std::move(img)));
    }
    gens.push_back(std::move(s));
  }
  return gens;
}

/// All elements of W(rs). Classical families are enumerated directly as
/// (signed) permutations in lexicographic order; exceptional families by
/// closure from the simple reflections.
inline SubgroupTable<WeylElt> enumerate_group(const RootSystem& rs, std::size_t bound = kDefaultEnumerationBound) {
  const Integer order = weyl_group_order(rs.family(), rs.rank());
  if (order > Integer(std::to_string(bound)))
    throw BoundExceeded("|W(" + rs.name() + ")| = " + order.get_str() + " exceeds the enumeration bound " + std::to_string(bound));
  if (rs.family() > Family::D) {
    return SubgroupTable<WeylElt>::generate(simple_reflections(rs), WeylElt::identity(rs.ambient_dim()), bound);
  }
  const int n = rs.ambient_dim();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<WeylElt> elems;
  elems.reserve(static_cast<std::size_t>(order.get_ui()));
  const bool signs = rs.family() != Family::A;
  do {
    const int masks = signs ? (1 << n) : 1;
    for (int mask = 0; mask < masks; ++mask) {
      if (rs.family() == Family::D && __builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) img[i] = ((mask >> i) & 1 ? -1 : 1) * (perm[i] + 1);
      elems.push_back(WeylElt::from_signed_perm(SignedPerm::from_images(std::move(img))));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SubgroupTable<WeylElt>(std::move(elems));
}

/// Parabolic subgroup generated by the reflections in the given simple roots.
inline SubgroupTable<WeylElt> parabolic_subgroup(const RootSystem& rs, const std::vector<int>& simple_subset,
                                                 std::size_t bound = kDefaultEnumerationBound) {
  const auto all = simple_reflections(rs);
  std::vector<WeylElt> gens;
  for (int i : simple_subset) gens.push_back(all.at(i));
  WeylElt id = WeylElt::identity(rs.ambient_dim());
  if (rs.family() <= Family::D) id = WeylElt::from_signed_perm(SignedPerm(rs.ambient_dim()));
  return SubgroupTable<WeylElt>::generate(gens, id, bound);
}

// ---------------------------------------------------------------------------
// Regular elements of classical Weyl groups

/// Catalog element for type A_{n-1}, B_n/C_n, D_n. Variants follow the
/// classical list: A (a) n/e e-cycles, (b) (n-1)/e e-cycles; B/C (a) odd e | n,
/// positive e-cycles, (b) even e | 2n, 2n/e negative cycles of length e/2;
/// D (a) odd e | n, (b) odd e | n-1 plus a fixed point, (c) n even, even e | n,
/// negative cycles of length e/2, (d) even e | 2n-2, (2n-2)/e negative cycles
/// of length e/2 and a 1-cycle whose sign makes the number of negative cycles even.
inline WeylElt regular_element(Family family, int rank, int e, char variant) {
  check_family_rank(family, rank);
  if (e < 1) throw std::invalid_argument("regular_element: e must be >= 1");
  variant = static_cast<char>(std::tolower(static_cast<unsigned char>(variant)));
  auto fail = [&](const std::string& why) -> WeylElt {
    throw std::invalid_argument(std::string("regular element ") + family_letter(family) + std::to_string(rank) +
                                " e=" + std::to_string(e) + " variant " + variant + ": " + why);
  };
  auto block_cycles = [](int start, int count, int len, bool negative) {
    std::vector<SignedPerm::Cycle> cs;
    for (int c = 0; c < count; ++c) {
      SignedPerm::Cycle cyc;
      cyc.negative = negative;
      for (int i = 0; i < len; ++i) cyc.letters.push_back(start + c * len + i + 1);
      cs.push_back(std::move(cyc));
    }
    return cs;
  };
  const bool odd = e % 2 == 1;
  switch (family) {
    case Family::A: {
      const int n = rank + 1;
      if (variant == 'a') {
        if (n % e != 0) return fail("e must divide n = " + std::to_string(n));
        return WeylElt::from_signed_perm(SignedPerm::from_cycles(n, block_cycles(0, n / e, e, false)));
      }
      if (variant == 'b') {
        if ((n - 1) % e != 0) return fail("e must divide n-1 = " + std::to_string(n - 1));
        return WeylElt::from_signed_perm(SignedPerm::from_cycles(n, block_cycles(0, (n - 1) / e, e, false)));
      }
      return fail("type A has variants a, b");
    }
    case Family::B:
    case Family::C: {
      const int n = rank;
      if (variant == 'a') {
        if (!odd || n % e != 0) return fail("e must be an odd divisor of n = " + std::to_string(n));
        return WeylElt::from_signed_perm(SignedPerm::from_cycles(n, block_cycles(0, n / e, e, false)));
      }
      if (variant == 'b') {
        if (odd || (2 * n) % e != 0) return fail("e must be an even divisor of 2n = " + std::to_string(2 * n));
        return WeylElt::from_signed_perm(SignedPerm::from_cycles(n, block_cycles(0, 2 * n / e, e / 2, true)));
      }
      return fail("types B and C have variants a, b");
    }
    case Family::D: {
      const int n = rank;
      if (variant == 'a') {
        if (!odd || n % e != 0) return fail("e must be an odd divisor of n = " + std::to_string(n));
        return WeylElt::from_signed_perm(SignedPerm::from_cycles(n, block_cycles(0, n / e, e, false)));
      }
      if (variant == 'b') {
        if (!odd || (n - 1) % e != 0) return fail("e must be an odd divisor of n-1 = " + std::to_string(n - 1));
        return WeylElt::from_signed_perm(SignedPerm::from_cycles(n, block_cycles(0, (n - 1) / e, e, false)));
      }
      if (variant == 'c') {
        if (n % 2 != 0) return fail("n must be even");
        if (odd || n % e != 0) return fail("e must be an even divisor of n = " + std::to_string(n));
        return WeylElt::from_signed_perm(SignedPerm::from_cycles(n, block_cycles(0, 2 * n / e, e / 2, true)));
      }
      if (variant == 'd') {
        if (odd || (2 * n - 2) % e != 0) return fail("e must be an even divisor of 2n-2 = " + std::to_string(2 * n - 2));
        const int count = (2 * n - 2) / e;
        auto cs = block_cycles(0, count, e / 2, true);
        cs.push_back(SignedPerm::Cycle{{n}, count % 2 == 1});
        return WeylElt::from_signed_perm(SignedPerm::from_cycles(n, cs));
      }
      return fail("type D has variants a, b, c, d");
    }
    default:
      return fail("the catalog covers the classical families only");
  }
}

/// Characteristic polynomial det(x - a) of a signed permutation: a positive
/// L-cycle contributes x^L - 1, a negative one x^L + 1.
inline IntPolynomial characteristic_polynomial(const SignedPerm& a) {
  IntPolynomial p(1);
  for (const auto& c : a.cycles()) {
    const auto len = c.letters.size();
    p *= IntPolynomial::monomial(len) + IntPolynomial(c.negative ? 1 : -1);
  }
  return p;
}

/// Multiplicity of Phi_e in p.
inline int cyclotomic_multiplicity(IntPolynomial p, int e) {
  const IntPolynomial phi = cyclotomic_poly(e);
  int k = 0;
  while (!p.is_zero()) {
    auto [q, r] = p.divmod(phi);
    if (!r.is_zero()) break;
    p = q;
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Eigenspaces and regularity

/// Basis of V(a, zeta^j) = ker(a - zeta^j I) over Q(zeta_e).
inline std::vector<std::vector<Cyclotomic>> eigenspace(const WeylElt& a, int e, long j) {
  const int n = a.dim();
  const Cyclotomic zero(e);
  Matrix<Cyclotomic> m(n, n, zero);
  const Cyclotomic z = Cyclotomic::zeta_power(e, j);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m(r, c) = Cyclotomic(e, Rational(a.entry(r, c)));
      if (r == c) m(r, c) -= z;
    }
  return kernel_basis(m);
}

/// True iff V(a, zeta^j) is contained in no hyperplane H_alpha for the listed
/// roots: for every such alpha some basis vector pairs nonzero with alpha.
inline bool eigenspace_avoids(const std::vector<std::vector<Cyclotomic>>& basis, const RootSystem& rs,
                              const std::vector<std::size_t>& root_indices) {
  for (std::size_t idx : root_indices) {
    const auto ga = rs.dual(rs.roots()[idx].ambient);
    bool hit = false;
    for (const auto& v : basis) {
      Cyclotomic s(v.front().conductor());
      for (std::size_t k = 0; k < v.size(); ++k)
        if (ga[k] != 0) s += v[k] * ga[k];
      if (!s.is_zero()) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

inline std::vector<std::size_t> all_root_indices(const RootSystem& rs) {
  std::vector<std::size_t> v(rs.roots().size());
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

/// Regularity of a (of order e) with respect to a set of roots.
inline bool is_regular_wrt(const WeylElt& a, int e, const RootSystem& rs, const std::vector<std::size_t>& roots,
                           long j = 1) {
  return eigenspace_avoids(eigenspace(a, e, j), rs, roots);
}

inline bool is_regular(const WeylElt& a, int e, const RootSystem& rs, long j = 1) {
  return is_regular_wrt(a, e, rs, all_root_indices(rs), j);
}

/// a (regular in W_{L'} of order e) is L-regular iff V(a, zeta) lies in no
/// H_alpha for alpha in Phi - Phi_L.
inline bool is_L_regular(const WeylElt& a, int e, const LeviConfig& cfg, long j = 1) {
  return is_regular_wrt(a, e, *cfg.parent, cfg.outside_L(), j);
}

// ---------------------------------------------------------------------------
// Conjugacy classes

/// Class label of a permutation: its cycle type.
inline std::string class_label(const Perm& p) { return p.cycle_type().to_string(); }

/// Class labels for signed permutations. For B/C the signed cycle type
/// "(pos)|(neg)". For D, classes with only positive cycles, all of even
/// length, split in two; the suffix "+" or "-" records the parity of sign
/// changes needed to conjugate to the standard representative.
inline std::string signed_class_label(const SignedPerm& w, bool type_d) {
  auto [pos, neg] = w.signed_cycle_type();
  std::string label = pos.to_string() + "|" + neg.to_string();
  if (!type_d || !neg.empty() || pos.empty()) return label;
  for (int p : pos.parts())
    if (p % 2 != 0) return label;
  int negatives = 0;
  for (const auto& c : w.cycles()) {
    int t = 1;
    for (std::size_t k = 0; k + 1 < c.letters.size(); ++k) {
      t *= w.sign(c.letters[k] - 1);
      if (t < 0) ++negatives;
    }
  }
  return label + (negatives % 2 == 0 ? "+" : "-");
}

/// Conjugacy data for a group: a class label for every element and the
/// centralizer order of every class.
template <GroupElement Elt>
struct ClassData {
  std::function<std::string(const Elt&)> label;
  std::vector<std::string> labels;                  // all classes, in display order
  std::map<std::string, Integer> centralizer_order;
  Integer group_order;

  Integer centralizer(const std::string& l) const { return centralizer_order.at(l); }
};

/// S_n: cycle types, centralizer orders z_rho, classes in increasing
/// lexicographic order of the cycle type.
inline ClassData<Perm> symmetric_class_data(int n) {
  ClassData<Perm> cd;
  cd.label = [](const Perm& p) { return class_label(p); };
  cd.group_order = 1;
  for (int i = 2; i <= n; ++i) cd.group_order *= i;
  for (const auto& rho : partitions_of(n)) {
    cd.labels.push_back(rho.to_string());
    cd.centralizer_order.emplace(rho.to_string(), rho.centralizer_order());
  }
  return cd;
}

/// Classes of an explicitly enumerated group given a labeling function that
/// is constant on classes; class sizes are counted from the table.
template <GroupElement Elt>
ClassData<Elt> table_class_data(const SubgroupTable<Elt>& group, std::function<std::string(const Elt&)> label) {
  ClassData<Elt> cd;
  cd.label = std::move(label);
  cd.group_order = static_cast<unsigned long>(group.order());
  std::map<std::string, unsigned long> sizes;
  for (const auto& x : group.elements()) ++sizes[cd.label(x)];
  for (auto& [l, s] : sizes) {
    cd.labels.push_back(l);
    cd.centralizer_order.emplace(l, cd.group_order / s);
  }
  return cd;
}

/// Explicit orbit partition under conjugation; labels "c0", "c1", ... in order
/// of first appearance. Intended for small groups (exceptional types at desk
/// scale).
template <GroupElement Elt>
ClassData<Elt> orbit_class_data(const SubgroupTable<Elt>& group) {
  auto class_of = std::make_shared<std::unordered_map<Elt, int, EltHash>>();
  int next = 0;
  for (const auto& x : group.elements()) {
    if (class_of->count(x)) continue;
    for (const auto& g : group.elements()) class_of->emplace(g * x * g.inverse(), next);
    ++next;
  }
  return table_class_data<Elt>(group, [class_of](const Elt& x) { return "c" + std::to_string(class_of->at(x)); });
}

// ---------------------------------------------------------------------------
// Class functions, coset counts, induction

template <class T>
struct ClassFunction {
  std::vector<std::string> labels;
  std::map<std::string, T> values;

  const T& at(const std::string& label) const { return values.at(label); }
  std::vector<T> ordered() const {
    std::vector<T> out;
    for (const auto& l : labels) out.push_back(values.at(l));
    return out;
  }
};

/// |H|^{-1} #{x in W : x^{-1} w x in S}, where S (e.g. a coset a^j W_L) is
/// given explicitly and |H| = h_order. Computed as
/// sum_{y in S, y ~ w} |C_W(w)| / |H|, iterating S rather than W.
template <GroupElement Elt>
Rational coset_count(const Elt& w, const std::vector<Elt>& coset, const ClassData<Elt>& classes, const Integer& h_order) {
  const std::string lw = classes.label(w);
  Integer hits = 0;
  for (const auto& y : coset)
    if (classes.label(y) == lw) ++hits;
  return make_rational(hits * classes.centralizer(lw), h_order);
}

/// The coset a^j H as an explicit list (a^j * h for h in H).
template <GroupElement Elt>
std::vector<Elt> left_translate(const Elt& g, const std::vector<Elt>& subgroup) {
  std::vector<Elt> out;
  out.reserve(subgroup.size());
  for (const auto& h : subgroup) out.push_back(g * h);
  return out;
}

/// Frobenius induction: (Ind chi)(w) = |H|^{-1} sum_{x in W, x^{-1}wx in H} chi(x^{-1}wx),
/// evaluated as |C_W(w)| / |H| * sum_{h in H, h ~ w} chi(h). `chi` gives the
/// value on each element of H (same order as `subgroup`).
template <GroupElement Elt, class T>
ClassFunction<T> induced_character(const std::vector<Elt>& subgroup, const std::vector<T>& chi,
                                   const ClassData<Elt>& classes, const T& zero) {
  if (chi.size() != subgroup.size()) throw std::invalid_argument("induced_character: value count mismatch");
  std::map<std::string, T> sums;
  for (const auto& l : classes.labels) sums.emplace(l, zero);
  for (std::size_t i = 0; i < subgroup.size(); ++i) sums.at(classes.label(subgroup[i])) += chi[i];
  ClassFunction<T> out;
  out.labels = classes.labels;
  const Rational inv_h = make_rational(1, static_cast<unsigned long>(subgroup.size()));
  for (const auto& l : classes.labels) {
    T v = sums.at(l);
    v *= Rational(classes.centralizer(l)) * inv_h;
    out.values.emplace(l, std::move(v));
  }
  return out;
}

}  // namespace springer

#endif  // SPRINGER_WEYL_HPP
