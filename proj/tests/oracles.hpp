#ifndef SPRINGER_TESTS_ORACLES_HPP
#define SPRINGER_TESTS_ORACLES_HPP

// Independent reference computations used by the tests: brute-force
// tableau counts, a Molien-type coinvariant formula, naive coset counts over
// all of S_n, and an explicit matrix model of the Gamma-induced module built
// from Young's seminormal representations.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "springer/springer.hpp"

namespace oracle {

using namespace springer;

/// SSYT count by trying every arrangement of the content in the shape.
inline long brute_ssyt_count(const Partition& shape, const Partition& weight) {
  std::vector<int> letters;
  for (int v = 1; v <= weight.length(); ++v)
    for (int c = 0; c < weight[static_cast<std::size_t>(v - 1)]; ++c) letters.push_back(v);
  long count = 0;
  do {
    Tableau t{shape, {}};
    std::size_t pos = 0;
    for (int r = 0; r < shape.length(); ++r) {
      t.rows.emplace_back(letters.begin() + static_cast<long>(pos), letters.begin() + static_cast<long>(pos + shape[r]));
      pos += shape[r];
    }
    if (t.is_semistandard()) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

/// Graded character of the coinvariant algebra of S_n at w:
/// prod_{i=1}^n (1 - q^i) / prod_{cycles c of w} (1 - q^{|c|}).
inline IntPolynomial molien_coinvariant(const Partition& rho) {
  IntPolynomial num(1);
  for (int i = 1; i <= rho.size(); ++i) num *= IntPolynomial(1) - IntPolynomial::monomial(static_cast<std::size_t>(i));
  IntPolynomial den(1);
  for (int p : rho.parts()) den *= IntPolynomial(1) - IntPolynomial::monomial(static_cast<std::size_t>(p));
  return num.divexact(den);
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do out.push_back(Perm::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// |H|^{-1} #{x in S_n : x^{-1} w x in g H} by looping over all x.
inline Rational naive_coset_count(const Perm& w, const Perm& g, const SubgroupTable<Perm>& H, const std::vector<Perm>& W) {
  const Perm gi = g.inverse();
  long hits = 0;
  for (const auto& x : W)
    if (H.contains(gi * x.inverse() * w * x)) ++hits;
  return make_rational(hits, static_cast<unsigned long>(H.order()));
}

/// Standard representative of the class with cycle type rho.
inline Perm class_rep(const Partition& rho) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int p : rho.parts()) {
    std::vector<int> c;
    for (int i = 0; i < p; ++i) c.push_back(next++);
    cycles.push_back(c);
  }
  return Perm::from_cycles(rho.size(), cycles);
}

// ---------------------------------------------------------------------------
// Young's seminormal form

struct StandardTableau {
  std::vector<std::pair<int, int>> cell;  // cell[k] = (row, col) of entry k+1
};

inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<StandardTableau> out;
  const int n = shape.size();
  std::vector<int> fill(static_cast<std::size_t>(shape.length()), 0);
  StandardTableau cur;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      if (fill[r] >= shape[r]) continue;
      if (r > 0 && fill[r - 1] <= fill[r]) continue;
      cur.cell.emplace_back(r, fill[r]);
      ++fill[r];
      rec(k + 1);
      --fill[r];
      cur.cell.pop_back();
    }
  };
  rec(0);
  return out;
}

using Mat = RationalMatrix;

/// Matrices of s_k = (k, k+1), k = 0..n-2, on the seminormal basis. With r
/// the content of k+1 minus the content of k in T and T' = s_k T, the diagonal
/// entry is 1/r, and the off-diagonal coefficient of v_{T'} in s_k v_T is 1
/// when k+1 sits in a lower row of T than k, and 1 - 1/r^2 otherwise.
inline std::vector<Mat> seminormal_generators(const Partition& shape) {
  const auto tabs = standard_tableaux(shape);
  const std::size_t d = tabs.size();
  const int n = shape.size();
  std::map<std::vector<std::pair<int, int>>, std::size_t> index;
  for (std::size_t t = 0; t < d; ++t) index[tabs[t].cell] = t;
  std::vector<Mat> gens;
  for (int k = 0; k + 1 < n; ++k) {
    Mat m(d, d, Rational(0));
    for (std::size_t t = 0; t < d; ++t) {
      const auto [r1, c1] = tabs[t].cell[k];
      const auto [r2, c2] = tabs[t].cell[k + 1];
      if (r1 == r2) {
        m(t, t) = 1;
        continue;
      }
      if (c1 == c2) {
        m(t, t) = -1;
        continue;
      }
      const Rational r = Rational((c2 - r2) - (c1 - r1));
      auto swapped = tabs[t].cell;
      std::swap(swapped[k], swapped[k + 1]);
      const std::size_t u = index.at(swapped);
      m(t, t) = 1 / r;
      // column t is the image of v_t
      if (r2 > r1) m(u, t) = 1;
      else m(u, t) = 1 - 1 / (r * r);
    }
    gens.push_back(std::move(m));
  }
  return gens;
}

/// Matrix of a permutation of {0..n-1} in the seminormal representation,
/// via a reduced word obtained by bubble sort.
inline Mat seminormal_matrix(const std::vector<Mat>& gens, std::size_t dim, const Perm& p) {
  std::vector<int> img = p.images();
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < img.size(); ++k)
      if (img[k] > img[k + 1]) {
        std::swap(img[k], img[k + 1]);
        word.push_back(static_cast<int>(k));
        swapped = true;
      }
  }
  // img = p o s_{w1} o s_{w2} ... = id, so p = s_{wl} ... s_{w1}
  Mat m = Mat::identity(dim, Rational(0), Rational(1));
  for (int k : word) m = gens[static_cast<std::size_t>(k)] * m;
  return m;
}

/// Graded S_m-module isomorphic to H*(B_nu): for every lambda and degree d,
/// [q^d] q^{n(nu)} K_{lambda nu}(1/q) copies of the seminormal module.
struct GradedModule {
  int m = 0;
  struct Summand {
    int degree;
    std::size_t offset;
    std::size_t dim;
    std::vector<Mat> gens;
  };
  std::vector<Summand> summands;
  std::size_t dim = 0;
  std::vector<int> degree_of;  // per basis vector

  explicit GradedModule(const Partition& nu) : m(nu.size()) {
    const int top = nu.n_statistic();
    for (const auto& lambda : partitions_of(m)) {
      const IntPolynomial kt = kostka_foulkes(lambda, nu).reflect(top);
      const auto gens = seminormal_generators(lambda);
      const std::size_t d = standard_tableaux(lambda).size();
      for (std::size_t deg = 0; deg < kt.coefficients().size(); ++deg)
        for (long c = 0; c < kt.coefficients()[deg].get_si(); ++c) {
          summands.push_back({static_cast<int>(deg), dim, d, gens});
          dim += d;
          for (std::size_t i = 0; i < d; ++i) degree_of.push_back(static_cast<int>(deg));
        }
    }
  }

  Mat matrix(const Perm& p) const {
    Mat out(dim, dim, Rational(0));
    if (m <= 1) {
      for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1;
      return out;
    }
    for (const auto& s : summands) {
      const Mat b = seminormal_matrix(s.gens, s.dim, p);
      for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) out(s.offset + i, s.offset + j) = b(i, j);
    }
    return out;
  }
};

/// The W~_L-module (x)_b H*(B_{nu_b}) on letters blocks: y acts by carrying
/// the factor of block b to the factor of block y(b), through the permutation
/// of b obtained by identifying blocks of equal size in increasing order.
class TensorModel {
 public:
  TensorModel(const TypeALayout& lay) : lay_(lay) {
    for (const auto& nu : lay.nu) factors_.emplace_back(nu);
    block_of_.assign(static_cast<std::size_t>(lay.n), -1);
    for (std::size_t b = 0; b < lay.blocks.size(); ++b)
      for (int x : lay.blocks[b]) block_of_[x] = static_cast<int>(b);
    dim_ = 1;
    for (const auto& f : factors_) dim_ *= f.dim;
  }

  std::size_t dim() const { return dim_; }

  /// Multi-index of a basis vector, factor by factor.
  std::vector<std::size_t> digits(std::size_t v) const {
    std::vector<std::size_t> d(factors_.size());
    for (std::size_t b = factors_.size(); b-- > 0;) {
      d[b] = v % factors_[b].dim;
      v /= factors_[b].dim;
    }
    return d;
  }

  std::size_t index(const std::vector<std::size_t>& d) const {
    std::size_t v = 0;
    for (std::size_t b = 0; b < factors_.size(); ++b) v = v * factors_[b].dim + d[b];
    return v;
  }

  int degree(std::size_t v) const {
    const auto d = digits(v);
    int deg = 0;
    for (std::size_t b = 0; b < d.size(); ++b) deg += factors_[b].degree_of[d[b]];
    return deg;
  }

  Mat matrix(const Perm& y) const {
    // per block: target block and the matrix V_b -> V_{y(b)}
    std::vector<std::size_t> target(factors_.size());
    std::vector<Mat> piece;
    for (std::size_t b = 0; b < factors_.size(); ++b) {
      const auto& letters = lay_.blocks[b];
      const int c = block_of_[y(letters.front())];
      target[b] = static_cast<std::size_t>(c);
      const auto& dest = lay_.blocks[static_cast<std::size_t>(c)];
      std::vector<int> img(letters.size());
      for (std::size_t s = 0; s < letters.size(); ++s) {
        const int to = y(letters[s]);
        img[s] = static_cast<int>(std::find(dest.begin(), dest.end(), to) - dest.begin());
      }
      piece.push_back(factors_[b].matrix(Perm::from_images(img)));
    }
    Mat out(dim_, dim_, Rational(0));
    for (std::size_t v = 0; v < dim_; ++v) {
      // image of the basis tensor v: product over b of column d_b of piece_b,
      // placed in factor target[b]
      const auto d = digits(v);
      std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(factors_.size());
      for (std::size_t b = 0; b < factors_.size(); ++b)
        for (std::size_t r = 0; r < piece[b].rows(); ++r)
          if (piece[b](r, d[b]) != 0) cols[target[b]].emplace_back(r, piece[b](r, d[b]));
      std::vector<std::size_t> out_digits(factors_.size());
      std::function<void(std::size_t, Rational)> expand = [&](std::size_t b, Rational coef) {
        if (b == factors_.size()) {
          out(index(out_digits), v) += coef;
          return;
        }
        for (const auto& [r, x] : cols[b]) {
          out_digits[b] = r;
          expand(b + 1, coef * x);
        }
      };
      expand(0, Rational(1));
    }
    return out;
  }

  /// Graded trace sum_n Tr(y | V_n) q^n.
  IntPolynomial graded_trace(const Perm& y) const {
    const Mat m = matrix(y);
    std::map<int, Rational> t;
    for (std::size_t v = 0; v < dim_; ++v) t[degree(v)] += m(v, v);
    IntPolynomial p;
    for (const auto& [deg, x] : t) {
      if (x.get_den() != 1) throw std::logic_error("non-integral trace");
      p.add_to_coeff(static_cast<std::size_t>(deg), x.get_num());
    }
    return p;
  }

 private:
  const TypeALayout& lay_;
  std::vector<GradedModule> factors_;
  std::vector<int> block_of_;
  std::size_t dim_ = 1;
};

/// Trace of (a^i, w) on Gamma-Ind_{W_L}^W V^{(zeta)} computed from the action
/// w' (x) x -> w w' a^{-i} (x) zeta^{i n} a^i x on the basis (coset rep, basis
/// vector of V): only cosets with w r a^{-i} in r W_L contribute, with the
/// block zeta^{i n} rho(h a^i), h = r^{-1} w r a^{-i}.
inline Cyclotomic matrix_model_trace(const TypeALayout& lay, const TensorModel& V, const Perm& w, int i, long j_root = 1) {
  const SubgroupTable<Perm> WL(lay.W_L);
  const auto W = all_perms(lay.n);
  std::vector<Perm> reps;
  for (const auto& x : W) {
    bool fresh = true;
    for (const auto& r : reps)
      if (WL.contains(r.inverse() * x)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(x);
  }
  const Perm ai = lay.a.pow(i);
  const Perm ai_inv = ai.inverse();
  IntPolynomial total;
  for (const auto& r : reps) {
    const Perm h = r.inverse() * w * r * ai_inv;
    if (!WL.contains(h)) continue;
    total += V.graded_trace(h * ai);
  }
  return eval_at_root(total, lay.e, static_cast<long long>(i) * j_root);
}

}  // namespace oracle

#endif  // SPRINGER_TESTS_ORACLES_HPP
