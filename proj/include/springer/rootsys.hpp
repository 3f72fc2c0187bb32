#ifndef SPRINGER_ROOTSYS_HPP
#define SPRINGER_ROOTSYS_HPP

// Root systems of all crystallographic families, built by closing the simple
// roots under the simple reflections.
//
// Coordinates:
//  - A_{n-1} lives in Q^n with alpha_i = e_i - e_{i+1};
//  - B_n, C_n, D_n live in Q^n with the usual simple roots (alpha_n = e_n,
//    2 e_n, e_{n-1} + e_n respectively);
//  - E, F, G live in the abstract basis of simple roots, with the
//    symmetrized inner product as Gram matrix.
//
// E-type node numbering: chain alpha_1 - alpha_2 - alpha_4 - alpha_5 - ...
// with alpha_3 attached to alpha_4 (not the Bourbaki numbering). Indices in
// the API are 0-based, so alpha_k is index k-1.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/linalg.hpp"
#include "springer/poly.hpp"

namespace springer {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw std::invalid_argument("unknown root system family '" + s + "'");
}

using IntVector = std::vector<long>;

struct Root {
  std::vector<int> coeffs;  // in the basis of simple roots
  IntVector ambient;        // ambient coordinates
};

class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return dim_; }
  std::string name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

  const std::vector<IntVector>& simple_roots() const { return simple_; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  Rational inner(const IntVector& u, const IntVector& v) const {
    Rational s = 0;
    for (int i = 0; i < dim_; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) s += gram_[i][j] * u[i] * v[j];
    }
    return s;
  }

  /// G * v, so that the pairing of a vector x with v is x . (G v).
  std::vector<Rational> dual(const IntVector& v) const {
    std::vector<Rational> out(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) out[i] += gram_[i][j] * v[j];
    return out;
  }

  /// Index of the root with the given ambient coordinates, or -1.
  int find_root(const IntVector& v) const {
    auto it = lookup_.find(v);
    return it == lookup_.end() ? -1 : it->second;
  }

  /// Matrix (ambient coordinates, row-major) of the reflection in `alpha`.
  std::vector<long> reflection_matrix(const IntVector& alpha) const {
    const Rational norm = inner(alpha, alpha);
    const auto ga = dual(alpha);
    std::vector<long> m(static_cast<std::size_t>(dim_) * dim_, 0);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        // column c is s(e_c) = e_c - 2 (e_c, alpha) / (alpha, alpha) alpha
        Rational v = (r == c ? 1 : 0) - 2 * ga[c] / norm * alpha[r];
        if (v.get_den() != 1) throw std::logic_error("reflection matrix is not integral");
        m[static_cast<std::size_t>(r) * dim_ + c] = v.get_num().get_si();
      }
    return m;
  }

  friend RootSystem build_root_system(Family family, int rank);

 private:
  Family family_ = Family::A;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<IntVector> simple_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<IntVector, int> lookup_;
};

/// Number of roots for a family/rank pair.
inline long expected_root_count(Family f, int r) {
  switch (f) {
    case Family::A: return static_cast<long>(r) * (r + 1);
    case Family::B:
    case Family::C: return 2L * r * r;
    case Family::D: return 2L * r * (r - 1);
    case Family::E: return r == 6 ? 72 : r == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

inline void check_family_rank(Family f, int r) {
  bool ok = r >= 1;
  switch (f) {
    case Family::A: break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok)
    throw std::invalid_argument(std::string("invalid root system ") + family_letter(f) + std::to_string(r));
}

inline RootSystem build_root_system(Family family, int rank) {
  check_family_rank(family, rank);
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  const bool classical = family <= Family::D;
  rs.dim_ = family == Family::A ? rank + 1 : rank;
  const int n = rs.dim_;

  auto unit = [n](int i) {
    IntVector v(n, 0);
    v[i] = 1;
    return v;
  };

  if (classical) {
    rs.gram_.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) rs.gram_[i][i] = 1;
    const int chain = family == Family::A ? rank : rank - 1;
    for (int i = 0; i < chain; ++i) {
      IntVector v(n, 0);
      v[i] = 1;
      v[i + 1] = -1;
      rs.simple_.push_back(v);
    }
    if (family == Family::B) rs.simple_.push_back(unit(n - 1));
    if (family == Family::C) {
      IntVector v(n, 0);
      v[n - 1] = 2;
      rs.simple_.push_back(v);
    }
    if (family == Family::D) {
      IntVector v(n, 0);
      v[n - 2] = 1;
      v[n - 1] = 1;
      rs.simple_.push_back(v);
    }
  } else {
    for (int i = 0; i < n; ++i) rs.simple_.push_back(unit(i));
    rs.gram_.assign(n, std::vector<Rational>(n, Rational(0)));
    auto bond = [&rs](int i, int j, const Rational& v) {
      rs.gram_[i][j] = v;
      rs.gram_[j][i] = v;
    };
    if (family == Family::E) {
      for (int i = 0; i < n; ++i) rs.gram_[i][i] = 2;
      // 1-based edges: 1-2, 2-4, 3-4, 4-5, 5-6, 6-7, 7-8
      const int edges[][2] = {{1, 2}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
      for (auto [a, b] : edges)
        if (a <= n && b <= n) bond(a - 1, b - 1, -1);
    } else if (family == Family::F) {
      rs.gram_[0][0] = 2;
      rs.gram_[1][1] = 2;
      rs.gram_[2][2] = 1;
      rs.gram_[3][3] = 1;
      bond(0, 1, -1);
      bond(1, 2, -1);
      bond(2, 3, Rational(-1, 2));
    } else {
      rs.gram_[0][0] = 2;
      rs.gram_[1][1] = 6;
      bond(0, 1, -3);
    }
  }

  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational a = 2 * rs.inner(rs.simple_[i], rs.simple_[j]) / rs.inner(rs.simple_[j], rs.simple_[j]);
      rs.cartan_[i][j] = static_cast<int>(a.get_num().get_si());
    }

  // Closure in simple-root coordinates: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    if (seen.insert(c).second) queue.push_back(c);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int i = 0; i < rank; ++i) {
      std::vector<int> c = queue[q];
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += c[j] * rs.cartan_[j][i];
      c[i] -= pairing;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  // Deterministic order: positive roots by height then lexicographic, then negatives.
  std::vector<std::vector<int>> positive;
  for (const auto& c : seen)
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) positive.push_back(c);
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha != hb ? ha < hb : a < b;
  });
  auto add_root = [&rs, n](const std::vector<int>& c) {
    IntVector amb(n, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int k = 0; k < n; ++k) amb[k] += c[i] * rs.simple_[i][k];
    rs.lookup_.emplace(amb, static_cast<int>(rs.roots_.size()));
    rs.roots_.push_back(Root{c, amb});
  };
  for (const auto& c : positive) add_root(c);
  for (const auto& c : positive) {
    std::vector<int> neg(c.size());
    std::transform(c.begin(), c.end(), neg.begin(), [](int x) { return -x; });
    add_root(neg);
  }
  if (static_cast<long>(rs.roots_.size()) != expected_root_count(family, rank) || seen.size() != rs.roots_.size())
    throw std::logic_error("root closure produced an unexpected number of roots for " + rs.name());
  return rs;
}

/// Dynkin type of the sub-diagram on `subset` (0-based simple-root indices),
/// e.g. "D5", "A2+A1"; the empty set gives "trivial".
inline std::string dynkin_type(const RootSystem& rs, const std::vector<int>& subset) {
  if (subset.empty()) return "trivial";
  const auto& A = rs.cartan();
  std::vector<bool> in(rs.rank(), false);
  for (int i : subset) in[i] = true;
  std::vector<bool> done(rs.rank(), false);
  std::vector<std::pair<int, std::string>> comps;  // (rank, name)
  for (int s : subset) {
    if (done[s]) continue;
    std::vector<int> comp{s};
    done[s] = true;
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (int j = 0; j < rs.rank(); ++j)
        if (in[j] && !done[j] && A[comp[q]][j] != 0) {
          done[j] = true;
          comp.push_back(j);
        }
    const int k = static_cast<int>(comp.size());
    int max_bond = 1;
    std::map<int, int> degree;
    for (int a : comp)
      for (int b : comp)
        if (a != b && A[a][b] != 0) {
          ++degree[a];
          max_bond = std::max(max_bond, A[a][b] * A[b][a]);
        }
    std::string name;
    if (max_bond == 3) {
      name = "G2";
    } else if (max_bond == 2) {
      if (k == 4) {
        // F4 has the double bond in the middle; B4/C4 at an end.
        int a = -1, b = -1;
        for (int x : comp)
          for (int y : comp)
            if (x < y && A[x][y] * A[y][x] == 2) a = x, b = y;
        if (degree[a] == 2 && degree[b] == 2) name = "F4";
      }
      if (name.empty()) {
        // B if the end node of the double bond is short, C if it is long.
        int end = -1, other = -1;
        for (int x : comp)
          for (int y : comp)
            if (x != y && A[x][y] * A[y][x] == 2 && degree[x] == 1) end = x, other = y;
        if (k == 2) {
          name = "B2";
        } else {
          const bool short_end = rs.inner(rs.simple_roots()[end], rs.simple_roots()[end]) <
                                 rs.inner(rs.simple_roots()[other], rs.simple_roots()[other]);
          name = std::string(short_end ? "B" : "C") + std::to_string(k);
        }
      }
    } else {
      int branch = -1;
      for (int a : comp)
        if (degree[a] == 3) branch = a;
      if (branch < 0) {
        name = "A" + std::to_string(k);
      } else {
        std::vector<int> arms;
        for (int nb : comp) {
          if (nb == branch || A[branch][nb] == 0) continue;
          int len = 0, prev = branch, cur = nb;
          while (cur >= 0) {
            ++len;
            int next = -1;
            for (int x : comp)
              if (x != prev && x != cur && A[cur][x] != 0) next = x;
            prev = cur;
            cur = next;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) name = "D" + std::to_string(k);
        else name = "E" + std::to_string(k);
      }
    }
    comps.emplace_back(k, name);
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) out += (i ? "+" : "") + comps[i].second;
  return out;
}

/// Levi data attached to a subset Pi_L of the simple roots.
struct LeviConfig {
  std::shared_ptr<const RootSystem> parent;
  std::vector<int> pi_L;                 // 0-based simple-root indices
  std::vector<std::size_t> phi_L;        // root indices in Phi_L
  std::vector<int> pi_prime;             // simple roots orthogonal to Pi_L
  std::vector<std::size_t> phi_Lprime;   // root indices in Phi_{L'}
  std::string prime_type;                // Dynkin type of Pi'

  bool in_phi_L(std::size_t root) const { return std::binary_search(phi_L.begin(), phi_L.end(), root); }

  /// Indices of Phi - Phi_L.
  std::vector<std::size_t> outside_L() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parent->roots().size(); ++i)
      if (!in_phi_L(i)) out.push_back(i);
    return out;
  }
};

/// Roots supported on the given set of simple roots.
inline std::vector<std::size_t> subsystem_roots(const RootSystem& rs, const std::vector<int>& simple_subset) {
  std::vector<bool> allowed(rs.rank(), false);
  for (int i : simple_subset) allowed[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rs.roots().size(); ++r) {
    const auto& c = rs.roots()[r].coeffs;
    bool ok = true;
    for (int i = 0; i < rs.rank() && ok; ++i)
      if (c[i] != 0 && !allowed[i]) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

inline LeviConfig levi_config(std::shared_ptr<const RootSystem> rs, std::vector<int> pi_L) {
  std::sort(pi_L.begin(), pi_L.end());
  pi_L.erase(std::unique(pi_L.begin(), pi_L.end()), pi_L.end());
  for (int i : pi_L)
    if (i < 0 || i >= rs->rank()) throw std::invalid_argument("levi_config: simple-root index out of range");
  LeviConfig cfg;
  cfg.parent = rs;
  cfg.pi_L = pi_L;
  cfg.phi_L = subsystem_roots(*rs, pi_L);
  for (int i = 0; i < rs->rank(); ++i) {
    bool orth = true;
    for (int j : pi_L)
      if (rs->inner(rs->simple_roots()[i], rs->simple_roots()[j]) != 0) orth = false;
    if (orth) cfg.pi_prime.push_back(i);
  }
  cfg.phi_Lprime = subsystem_roots(*rs, cfg.pi_prime);
  cfg.prime_type = dynkin_type(*rs, cfg.pi_prime);
  return cfg;
}

inline LeviConfig levi_config(const RootSystem& rs, std::vector<int> pi_L) {
  return levi_config(std::make_shared<const RootSystem>(rs), std::move(pi_L));
}

}  // namespace springer

#endif  // SPRINGER_ROOTSYS_HPP
