#ifndef SPRINGER_VERIFY_HPP
#define SPRINGER_VERIFY_HPP

// Checkers for the induction identities in type A and for the L-regular
// element catalog. Every checker returns a VerificationReport; a failing
// report always carries at least one counterexample.

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "springer/config.hpp"
#include "springer/partition.hpp"
#include "springer/poly.hpp"
#include "springer/rootsys.hpp"
#include "springer/symfun.hpp"
#include "springer/weyl.hpp"

namespace springer {

struct Counterexample {
  std::string cls;
  std::string index;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string check;
  std::map<std::string, std::string> config;
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  long long elapsed_ms = 0;

  void fail(std::string cls, std::string index, std::string lhs, std::string rhs) {
    pass = false;
    counterexamples.push_back({std::move(cls), std::move(index), std::move(lhs), std::move(rhs)});
  }
};

struct SweepOptions {
  int jobs = 1;
  std::size_t bound = kDefaultEnumerationBound;
};

namespace detail {

class Stopwatch {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Runs fn(0..count-1) on up to `jobs` threads; results are stored by index,
/// so the output does not depend on scheduling.
template <class R>
std::vector<R> parallel_map(std::size_t count, int jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(count);
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::vector<long> primitive_exponents(int e) {
  std::vector<long> js;
  for (int j = 1; j <= e; ++j)
    if (std::gcd(j, e) == 1) js.push_back(j % e);
  return js;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Type A layouts of a validated configuration

struct TypeALayout {
  int n = 0;
  int e = 1;
  InductionCase kind = InductionCase::A;
  std::vector<std::vector<int>> blocks;  // every Levi block, singletons included
  std::vector<Partition> nu;             // Jordan type on each block
  Perm a;
  Partition mu;                          // Jordan type of u in GL_n
  std::vector<Perm> W_L;

  Integer index_of_semidirect() const {
    return detail::factorial(n) / (Integer(static_cast<unsigned long>(W_L.size())) * e);
  }
};

inline std::vector<Perm> young_subgroup(int n, const std::vector<std::vector<int>>& blocks, std::size_t bound) {
  Integer order = 1;
  for (const auto& b : blocks) order *= detail::factorial(static_cast<int>(b.size()));
  if (order > Integer(std::to_string(bound))) throw BoundExceeded("|W_L| = " + order.get_str() + " exceeds the enumeration bound");
  std::vector<Perm> gens;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i + 1 < b.size(); ++i) gens.push_back(Perm::from_cycles(n, {{b[i] + 1, b[i + 1] + 1}}));
  return SubgroupTable<Perm>::generate(gens, Perm(n), bound).elements();
}

/// Validates `cfg` (type A) and extracts its block structure.
inline TypeALayout type_a_layout(const InductionConfig& cfg, std::size_t bound = kDefaultEnumerationBound) {
  if (cfg.root_system().family() != Family::A) throw ConfigError("type A configuration required");
  TypeALayout lay;
  lay.kind = validate_config(cfg);
  lay.n = cfg.root_system().ambient_dim();
  if (detail::factorial(lay.n) > Integer(std::to_string(bound)))
    throw BoundExceeded("|S_" + std::to_string(lay.n) + "| exceeds the enumeration bound " + std::to_string(bound));
  lay.e = cfg.e;
  lay.blocks = type_a_blocks(lay.n, cfg.levi.pi_L);
  std::size_t comp = 0;
  std::vector<int> parts;
  for (const auto& b : lay.blocks) {
    const int s = static_cast<int>(b.size());
    Partition p{s};
    if (s > 1 && !cfg.u.regular) p = cfg.u.blocks.at(comp);
    if (s > 1) ++comp;
    if (s == 1) p = Partition{1};
    lay.nu.push_back(p);
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
  }
  lay.mu = Partition(parts);
  const auto& sp = cfg.a.perm_form();
  if (!sp || sp->negative_count() != 0) throw ConfigError("a must be a permutation");
  std::vector<int> img(static_cast<std::size_t>(lay.n));
  for (int i = 0; i < lay.n; ++i) img[i] = sp->target(i);
  lay.a = Perm::from_images(std::move(img));
  lay.W_L = young_subgroup(lay.n, lay.blocks, bound);
  return lay;
}

inline std::map<std::string, std::string> describe(const TypeALayout& lay) {
  std::map<std::string, std::string> c;
  c["family"] = "A";
  c["n"] = std::to_string(lay.n);
  c["e"] = std::to_string(lay.e);
  c["case"] = case_name(lay.kind);
  c["a"] = lay.a.to_string();
  std::string blocks, nus;
  for (std::size_t b = 0; b < lay.blocks.size(); ++b) {
    blocks += (b ? "+" : "") + std::to_string(lay.blocks[b].size());
    nus += (b ? ":" : "") + detail::join_ints(lay.nu[b].parts());
  }
  c["blocks"] = blocks;
  c["nu"] = nus;
  c["mu"] = lay.mu.to_string();
  return c;
}

// ---------------------------------------------------------------------------
// Extension of the Levi graded character to the semidirect product

/// Graded trace of y in Gamma x| W_L on H*(B_u^L), where H*(B_u^L) is the
/// tensor product of the block modules and y permutes blocks as it permutes
/// their letters. For a block orbit of length L under y with representative
/// block b, y^L preserves b and the orbit contributes g_b(y^L|_b)(q^L). In
/// case (a) every nontrivial block is fixed by a, which gives the trivial
/// extension; in case (b) this is the cyclic permutation of tensor factors.
class ExtendedGradedCharacter {
 public:
  ExtendedGradedCharacter() = default;
  ExtendedGradedCharacter(int n, std::vector<std::vector<int>> blocks, std::vector<GradedCharacter> chars, Perm a, int e)
      : n_(n), blocks_(std::move(blocks)), chars_(std::move(chars)), a_(std::move(a)), e_(e), block_of_(n, -1) {
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (int x : blocks_[b]) block_of_[x] = static_cast<int>(b);
  }

  explicit ExtendedGradedCharacter(const TypeALayout& lay) {
    std::vector<GradedCharacter> chars;
    for (const auto& p : lay.nu) chars.push_back(springer_graded_char(p));
    *this = ExtendedGradedCharacter(lay.n, lay.blocks, std::move(chars), lay.a, lay.e);
  }

  int e() const { return e_; }
  const Perm& generator() const { return a_; }

  IntPolynomial value(const Perm& y) const {
    IntPolynomial out(1);
    std::vector<bool> seen(blocks_.size(), false);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (seen[b]) continue;
      int len = 0;
      for (int c = static_cast<int>(b); !seen[c]; c = block_of_[y(blocks_[c].front())]) {
        seen[c] = true;
        ++len;
      }
      if (blocks_[b].size() == 1) continue;
      out *= chars_[b][restricted_type(y, static_cast<int>(b), len)].substitute_power(len);
    }
    return out;
  }

  /// Class-invariant description of y: for each block orbit, its length
  /// and the cycle type of the return map.
  std::string orbit_label(const Perm& y) const {
    std::vector<std::string> parts;
    std::vector<bool> seen(blocks_.size(), false);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (seen[b]) continue;
      int len = 0;
      for (int c = static_cast<int>(b); !seen[c]; c = block_of_[y(blocks_[c].front())]) {
        seen[c] = true;
        ++len;
      }
      parts.push_back(std::to_string(len) + "x" + restricted_type(y, static_cast<int>(b), len).to_string());
    }
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += p;
    return s;
  }

 private:
  Partition restricted_type(const Perm& y, int b, int len) const {
    const auto& letters = blocks_[b];
    std::map<int, int> pos;
    for (std::size_t k = 0; k < letters.size(); ++k) pos[letters[k]] = static_cast<int>(k);
    std::vector<int> img(letters.size());
    for (std::size_t k = 0; k < letters.size(); ++k) {
      int x = letters[k];
      for (int t = 0; t < len; ++t) x = y(x);
      img[k] = pos.at(x);
    }
    return Perm::from_images(std::move(img)).cycle_type();
  }

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<GradedCharacter> chars_;
  Perm a_;
  int e_ = 1;
  std::vector<int> block_of_;
};

/// Extension for W_L = (S_m)^e inside S_{em}, e copies of the module with
/// graded character g, with a rotating the copies.
inline ExtendedGradedCharacter tensor_cyclic_extension(const GradedCharacter& g, int e) {
  const int m = g.n;
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(e));
  for (int t = 0; t < e; ++t)
    for (int s = 0; s < m; ++s) blocks[t].push_back(t * m + s);
  return ExtendedGradedCharacter(e * m, blocks, std::vector<GradedCharacter>(static_cast<std::size_t>(e), g),
                                 case_b_permutation(0, m, e), e);
}

/// Graded trace of (y_1, ..., y_e) * a^i on the e-fold tensor power of a
/// graded S_m-module with character g, where a^i moves factor t to t + i:
/// each cycle of the shift contributes g at the ordered product of the y's
/// along the cycle, with q replaced by q^{cycle length}.
inline IntPolynomial tensor_cyclic_trace(const GradedCharacter& g, const std::vector<Perm>& ys, int i) {
  const int e = static_cast<int>(ys.size());
  IntPolynomial out(1);
  std::vector<bool> seen(ys.size(), false);
  for (int t0 = 0; t0 < e; ++t0) {
    if (seen[t0]) continue;
    Perm prod(g.n);
    int len = 0;
    for (int t = t0; !seen[t]; t = (t + i) % e) {
      seen[t] = true;
      ++len;
    }
    // (y a^i)^len on factor t0 applies y_{t0+i}, then y_{t0+2i}, ...
    for (int s = 1; s <= len; ++s) prod = ys[((t0 + s * i) % e + e) % e] * prod;
    out *= g[prod.cycle_type()].substitute_power(len);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coset sums

/// For the coset a^i W_L: per S_n class, the number of elements in the
/// class and the sum of their extension values.
struct CosetClassSums {
  std::map<std::string, Integer> count;
  std::map<std::string, IntPolynomial> ext_sum;
};

inline CosetClassSums coset_class_sums(const TypeALayout& lay, const ExtendedGradedCharacter* ext, int i) {
  CosetClassSums s;
  const Perm ai = lay.a.pow(i);
  for (const auto& h : lay.W_L) {
    const Perm y = ai * h;
    const std::string l = class_label(y);
    s.count[l] += 1;
    if (ext) s.ext_sum[l] += ext->value(y);
  }
  return s;
}

/// Trace of (a^i, w) on the Gamma-induced module, with zeta replaced by
/// zeta^{j_root}: |W_L|^{-1} sum over x in W with x^{-1} w x in a^i W_L of
/// Ext(x^{-1} w x)(zeta^{i j_root}).
inline Cyclotomic gamma_ind_trace(const ExtendedGradedCharacter& ext, const std::vector<Perm>& W_L, const Perm& w, int i,
                                  long j_root = 1) {
  const Perm ai = ext.generator().pow(i);
  const Partition rho = w.cycle_type();
  IntPolynomial sum;
  for (const auto& h : W_L) {
    const Perm y = ai * h;
    if (y.cycle_type() == rho) sum += ext.value(y);
  }
  Cyclotomic v = eval_at_root(sum, ext.e(), static_cast<long long>(i) * j_root);
  v *= make_rational(rho.centralizer_order(), static_cast<unsigned long>(W_L.size()));
  return v;
}

// ---------------------------------------------------------------------------
// Gamma x| W_L as an explicit list, and the characters psi~

struct SemidirectTable {
  std::vector<Perm> elements;    // a^i h
  std::vector<int> coset_index;  // i
};

inline SemidirectTable semidirect_table(const TypeALayout& lay) {
  SemidirectTable t;
  Perm ai(lay.n);
  for (int i = 0; i < lay.e; ++i) {
    for (const auto& h : lay.W_L) {
      t.elements.push_back(ai * h);
      t.coset_index.push_back(i);
    }
    ai = lay.a * ai;
  }
  return t;
}

/// Pull-back of psi^{(-k)}: value zeta^{-k i} on a^i W_L.
inline std::vector<Cyclotomic> psi_tilde(int k, int e, const SemidirectTable& t) {
  std::vector<Cyclotomic> v;
  v.reserve(t.elements.size());
  for (int i : t.coset_index) v.push_back(Cyclotomic::zeta_power(e, -static_cast<long long>(k) * i));
  return v;
}

/// sum of the coefficients of q^n over n = k mod e.
inline Integer residue_sum(const IntPolynomial& p, int e, int k) {
  Integer s = 0;
  const auto& c = p.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n)
    if (static_cast<int>(n % e) == positive_mod(k, e)) s += c[n];
  return s;
}

// ---------------------------------------------------------------------------
// Checks

namespace detail {

inline bool u_is_regular(const TypeALayout& lay) {
  for (std::size_t b = 0; b < lay.blocks.size(); ++b)
    if (lay.nu[b] != Partition{static_cast<int>(lay.blocks[b].size())}) return false;
  return true;
}

inline std::vector<CosetClassSums> all_coset_sums(const TypeALayout& lay, const ExtendedGradedCharacter* ext, int jobs) {
  return parallel_map<CosetClassSums>(static_cast<std::size_t>(lay.e), jobs,
                                      [&](std::size_t i) { return coset_class_sums(lay, ext, static_cast<int>(i)); });
}

inline Integer get_or_zero(const std::map<std::string, Integer>& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? Integer(0) : it->second;
}

}  // namespace detail

/// Gamma-induced trace identity: for every class w, coset index i and
/// primitive exponent j, the trace of (a^i, w) on the induced module equals
/// the Green polynomial of the merged Jordan type at zeta^{ij}.
inline VerificationReport check_theorem17(const InductionConfig& cfg, const SweepOptions& opt = {}) {
  detail::Stopwatch sw;
  const TypeALayout lay = type_a_layout(cfg, opt.bound);
  VerificationReport rep;
  rep.check = "theorem17";
  rep.config = describe(lay);
  const ExtendedGradedCharacter ext(lay);
  const auto sums = detail::all_coset_sums(lay, &ext, opt.jobs);
  const GradedCharacter Q = springer_graded_char(lay.mu);
  for (const auto& rho : partitions_of(lay.n)) {
    const std::string l = rho.to_string();
    for (int i = 0; i < lay.e; ++i) {
      auto it = sums[i].ext_sum.find(l);
      const IntPolynomial s = it == sums[i].ext_sum.end() ? IntPolynomial() : it->second;
      for (long j : detail::primitive_exponents(lay.e)) {
        Cyclotomic lhs = eval_at_root(s, lay.e, static_cast<long long>(i) * j);
        lhs *= make_rational(rho.centralizer_order(), static_cast<unsigned long>(lay.W_L.size()));
        const Cyclotomic rhs = eval_at_root(Q[rho], lay.e, static_cast<long long>(i) * j);
        if (lhs != rhs) rep.fail(l, "i=" + std::to_string(i) + ",j=" + std::to_string(j), lhs.to_string(), rhs.to_string());
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

/// Dimensions of the Gamma-eigenspaces V_{e,k} of H*(B_u): all equal to
/// [W : Gamma x| W_L] dim H*(B_u^L).
inline VerificationReport check_prop33_dims(const InductionConfig& cfg, const SweepOptions& opt = {}) {
  detail::Stopwatch sw;
  const TypeALayout lay = type_a_layout(cfg, opt.bound);
  VerificationReport rep;
  rep.check = "prop33";
  rep.config = describe(lay);
  Integer dim_levi = 1;
  for (const auto& p : lay.nu) dim_levi *= springer_graded_char(p).at_identity().sum_of_coefficients();
  const Integer expected = lay.index_of_semidirect() * dim_levi;
  const IntPolynomial poincare = springer_graded_char(lay.mu).at_identity();
  std::string dims;
  for (int k = 0; k < lay.e; ++k) {
    const Integer d = residue_sum(poincare, lay.e, k);
    dims += (k ? "," : "") + d.get_str();
    if (d != expected) rep.fail(Partition::rectangle(1, lay.n).to_string(), "k=" + std::to_string(k), d.get_str(), expected.get_str());
  }
  rep.notes.push_back("dims (" + dims + "); [W:W~_L] dim H*(B_u^L) = " + expected.get_str());
  rep.elapsed_ms = sw.ms();
  return rep;
}

/// Green polynomial values at roots of unity against coset counts, plus
/// Galois invariance, for u regular in L.
inline VerificationReport check_prop37(const InductionConfig& cfg, const SweepOptions& opt = {}) {
  detail::Stopwatch sw;
  const TypeALayout lay = type_a_layout(cfg, opt.bound);
  if (!detail::u_is_regular(lay)) throw ConfigError("prop37 requires u regular in L");
  VerificationReport rep;
  rep.check = "prop37";
  rep.config = describe(lay);
  const auto sums = detail::all_coset_sums(lay, nullptr, opt.jobs);
  const auto classes = partitions_of(lay.n);
  const auto units = detail::primitive_exponents(lay.e);
  const auto per_class = detail::parallel_map<std::vector<Counterexample>>(classes.size(), opt.jobs, [&](std::size_t c) {
    std::vector<Counterexample> bad;
    const Partition& rho = classes[c];
    const std::string l = rho.to_string();
    for (int j = 0; j < lay.e; ++j) {
      const Cyclotomic lhs = green_at_root(lay.mu, rho, lay.e, j);
      const Rational count = make_rational(detail::get_or_zero(sums[j].count, l) * rho.centralizer_order(),
                                           static_cast<unsigned long>(lay.W_L.size()));
      const Cyclotomic rhs(lay.e, count);
      if (lhs != rhs || !lhs.is_integer())
        bad.push_back({l, "j=" + std::to_string(j), lhs.to_string(), rhs.to_string()});
      for (long g : units) {
        const Cyclotomic conj = green_at_root(lay.mu, rho, lay.e, static_cast<long long>(j) * g);
        if (conj != lhs) bad.push_back({l, "j=" + std::to_string(j) + ",galois=" + std::to_string(g), conj.to_string(), lhs.to_string()});
      }
    }
    return bad;
  });
  for (const auto& bad : per_class)
    for (const auto& c : bad) rep.fail(c.cls, c.index, c.lhs, c.rhs);
  rep.elapsed_ms = sw.ms();
  return rep;
}

/// Graded pieces of H*(B_u) collected by degree mod e against the induced
/// characters Ind_{Gamma x| W_L}^W psi~^{(-k)}, for u regular in L.
inline VerificationReport check_cor35(const InductionConfig& cfg, const SweepOptions& opt = {}) {
  detail::Stopwatch sw;
  const TypeALayout lay = type_a_layout(cfg, opt.bound);
  if (!detail::u_is_regular(lay)) throw ConfigError("cor35 requires u regular in L");
  VerificationReport rep;
  rep.check = "cor35";
  rep.config = describe(lay);
  const SemidirectTable table = semidirect_table(lay);
  const auto classes = symmetric_class_data(lay.n);
  const GradedCharacter Q = springer_graded_char(lay.mu);
  const auto induced = detail::parallel_map<ClassFunction<Cyclotomic>>(static_cast<std::size_t>(lay.e), opt.jobs, [&](std::size_t k) {
    return induced_character(table.elements, psi_tilde(static_cast<int>(k), lay.e, table), classes, Cyclotomic(lay.e));
  });
  for (int k = 0; k < lay.e; ++k) {
    std::string row;
    for (const auto& rho : partitions_of(lay.n)) {
      const Cyclotomic lhs(lay.e, Rational(residue_sum(Q[rho], lay.e, k)));
      const Cyclotomic& rhs = induced[k].at(rho.to_string());
      row += (row.empty() ? "" : ",") + lhs.to_string();
      if (lhs != rhs) rep.fail(rho.to_string(), "k=" + std::to_string(k), lhs.to_string(), rhs.to_string());
    }
    rep.notes.push_back("k=" + std::to_string(k) + ": (" + row + ")");
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

/// Case (a) with arbitrary u in L: degree-mod-e pieces of H*(B_u) against the
/// induction from Gamma x W_L of sum_j psi^{(-k+j)} (x) H^{2j}(B_u^L).
inline VerificationReport check_prop332_case_a(const InductionConfig& cfg, const SweepOptions& opt = {}) {
  detail::Stopwatch sw;
  const TypeALayout lay = type_a_layout(cfg, opt.bound);
  if (lay.kind != InductionCase::A) throw ConfigError("prop332 requires a case (a) configuration");
  for (const auto& h : lay.W_L)
    if (lay.a * h != h * lay.a) throw ConfigError("prop332 requires a to centralize W_L");
  VerificationReport rep;
  rep.check = "prop332";
  rep.config = describe(lay);
  const SemidirectTable table = semidirect_table(lay);
  const auto classes = symmetric_class_data(lay.n);
  const GradedCharacter Q = springer_graded_char(lay.mu);
  const ExtendedGradedCharacter ext(lay);
  // the Levi character does not see the a^i factor
  std::vector<IntPolynomial> levi_values;
  std::size_t per_coset = lay.W_L.size();
  for (std::size_t x = 0; x < per_coset; ++x) levi_values.push_back(ext.value(lay.W_L[x]));
  const auto induced = detail::parallel_map<ClassFunction<Cyclotomic>>(static_cast<std::size_t>(lay.e), opt.jobs, [&](std::size_t k) {
    std::vector<Cyclotomic> chi;
    chi.reserve(table.elements.size());
    for (std::size_t x = 0; x < table.elements.size(); ++x) {
      const int i = table.coset_index[x];
      const IntPolynomial& g = levi_values[x % per_coset];
      Cyclotomic v(lay.e);
      for (std::size_t j = 0; j < g.coefficients().size(); ++j)
        v += Cyclotomic::zeta_power(lay.e, (static_cast<long long>(j) - static_cast<long long>(k)) * i) * Rational(g.coefficients()[j]);
      chi.push_back(std::move(v));
    }
    return induced_character(table.elements, chi, classes, Cyclotomic(lay.e));
  });
  for (int k = 0; k < lay.e; ++k)
    for (const auto& rho : partitions_of(lay.n)) {
      const Cyclotomic lhs(lay.e, Rational(residue_sum(Q[rho], lay.e, k)));
      const Cyclotomic& rhs = induced[k].at(rho.to_string());
      if (lhs != rhs) rep.fail(rho.to_string(), "k=" + std::to_string(k), lhs.to_string(), rhs.to_string());
    }
  std::string dims;
  for (int k = 0; k < lay.e; ++k) dims += (k ? "," : "") + induced[k].at(Partition::rectangle(1, lay.n).to_string()).to_string();
  rep.notes.push_back("dims (" + dims + ")");
  rep.elapsed_ms = sw.ms();
  return rep;
}

/// Induction theorem at q = 1: H*(B_u) equals Ind_{W_L}^W H*(B_u^L) as
/// ungraded characters, for a Young subgroup with Jordan type nu_b on block b.
inline VerificationReport check_induction_e1(const std::vector<Partition>& block_types, const SweepOptions& opt = {}) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.check = "induction_e1";
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<GradedCharacter> chars;
  std::vector<int> parts;
  std::string desc;
  for (const auto& nu : block_types) {
    if (nu.size() < 1) throw ConfigError("blocks must be nonempty");
    std::vector<int> b(static_cast<std::size_t>(nu.size()));
    std::iota(b.begin(), b.end(), n);
    n += nu.size();
    blocks.push_back(std::move(b));
    chars.push_back(springer_graded_char(nu));
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    desc += (desc.empty() ? "" : ":") + detail::join_ints(nu.parts());
  }
  if (detail::factorial(n) > Integer(std::to_string(opt.bound))) throw BoundExceeded("|S_n| exceeds the enumeration bound");
  const Partition mu(parts);
  rep.config = {{"family", "A"}, {"n", std::to_string(n)}, {"nu", desc}, {"mu", mu.to_string()}};
  const auto W_L = young_subgroup(n, blocks, opt.bound);
  const ExtendedGradedCharacter ext(n, blocks, chars, Perm(n), 1);
  std::vector<Rational> chi;
  for (const auto& h : W_L) chi.emplace_back(ext.value(h).sum_of_coefficients());
  const auto ind = induced_character(W_L, chi, symmetric_class_data(n), Rational(0));
  const GradedCharacter Q = springer_graded_char(mu);
  for (const auto& rho : partitions_of(n)) {
    const Rational lhs(Q[rho].sum_of_coefficients());
    const Rational& rhs = ind.at(rho.to_string());
    if (lhs != rhs) rep.fail(rho.to_string(), "q=1", lhs.get_str(), rhs.get_str());
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

/// The closed form for Q^{(m^e)}(zeta) under both readings against coset
/// counts for the block rotation a (j = 1). The amended reading decides the
/// status; disagreements of the printed reading are listed in a note.
inline VerificationReport check_remark38(int m, int e, const SweepOptions& opt = {}) {
  detail::Stopwatch sw;
  const InductionConfig cfg = make_cyclic_config(0, m, e);
  const TypeALayout lay = type_a_layout(cfg, opt.bound);
  VerificationReport rep;
  rep.check = "remark38";
  rep.config = describe(lay);
  const CosetClassSums sums = coset_class_sums(lay, nullptr, 1 % e);
  std::vector<std::string> printed_diff;
  auto classes = partitions_of(lay.n);
  std::reverse(classes.begin(), classes.end());
  for (const auto& rho : classes) {
    const std::string l = rho.to_string();
    const Rational count = make_rational(detail::get_or_zero(sums.count, l) * rho.centralizer_order(),
                                         static_cast<unsigned long>(lay.W_L.size()));
    const Integer amended = remark38_closed_form(m, e, rho, Reading::Amended);
    const Integer printed = remark38_closed_form(m, e, rho, Reading::Printed);
    if (Rational(amended) != count) rep.fail(l, "amended", amended.get_str(), count.get_str());
    if (Rational(printed) != count) printed_diff.push_back(l);
  }
  std::string note = rep.pass ? "amended reading matches" : "amended reading differs";
  if (printed_diff.empty()) {
    note += "; printed reading matches";
  } else {
    note += "; printed reading differs on classes [";
    for (std::size_t i = 0; i < printed_diff.size(); ++i) note += (i ? ", " : "") + printed_diff[i];
    note += "]";
  }
  rep.notes.push_back(note);
  rep.elapsed_ms = sw.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Regular and L-regular elements

namespace detail {

inline std::string root_string(const Root& r) {
  std::string s;
  for (int c : r.coeffs) s += (c < 0 ? "-" : "") + std::to_string(std::abs(c));
  return s;
}

/// First root of Phi - Phi_L whose hyperplane contains V(a, zeta), if any.
inline std::optional<std::size_t> L_regularity_witness(const WeylElt& a, int e, const LeviConfig& lv) {
  const auto basis = eigenspace(a, e, 1);
  for (std::size_t idx : lv.outside_L())
    if (!eigenspace_avoids(basis, *lv.parent, {idx})) return idx;
  return std::nullopt;
}

inline std::vector<int> divisors_from(int n, int lo) {
  std::vector<int> d;
  for (int e = lo; e <= n; ++e)
    if (n % e == 0) d.push_back(e);
  return d;
}

// Element of W(rs) from a signed permutation in ambient coordinates.
inline WeylElt classical_element(const SignedPerm& p) { return WeylElt::from_signed_perm(p); }

/// Coxeter element of a chain of simple roots, in chain order.
inline WeylElt chain_coxeter(const RootSystem& rs, const std::vector<int>& chain) {
  const auto s = simple_reflections(rs);
  WeylElt c = WeylElt::identity(rs.ambient_dim());
  for (int i : chain) c = c * s[i];
  return c;
}

/// Simple roots of a type A component in chain order.
inline std::vector<int> chain_order(const RootSystem& rs, const std::vector<int>& comp) {
  if (comp.size() == 1) return comp;
  int start = -1;
  for (int x : comp) {
    int deg = 0;
    for (int y : comp)
      if (x != y && rs.cartan()[x][y] != 0) ++deg;
    if (deg == 1) {
      start = x;
      break;
    }
  }
  std::vector<int> chain{start};
  while (chain.size() < comp.size())
    for (int y : comp)
      if (std::find(chain.begin(), chain.end(), y) == chain.end() && rs.cartan()[chain.back()][y] != 0) {
        chain.push_back(y);
        break;
      }
  return chain;
}

}  // namespace detail

/// Catalog elements for A/B/C/D of rank <= max_rank: order e and regular.
inline void check_regular_catalog(VerificationReport& rep, Family f, int max_rank) {
  const int min_rank = f == Family::A ? 1 : f == Family::D ? 3 : 2;
  const std::string variants = f == Family::A ? "ab" : f == Family::D ? "abcd" : "ab";
  int built = 0;
  for (int r = min_rank; r <= max_rank; ++r) {
    const RootSystem rs = build_root_system(f, r);
    for (int e = 2; e <= 2 * r + 2; ++e)
      for (char v : variants) {
        WeylElt a;
        try {
          a = regular_element(f, r, e, v);
        } catch (const std::invalid_argument&) {
          continue;
        }
        ++built;
        const std::string cls = rs.name() + " " + a.to_string();
        const long order = a.order();
        if (order != e) rep.fail(cls, "e=" + std::to_string(e), "order " + std::to_string(order), "order " + std::to_string(e));
        else if (!is_regular(a, e, rs)) rep.fail(cls, "e=" + std::to_string(e), "not regular", "regular");
      }
  }
  rep.notes.push_back(std::string(1, family_letter(f)) + ": " + std::to_string(built) + " catalog elements checked");
}

/// Part (i): W of type A/B/D, W_L of the same type on the last coordinates,
/// W_{L'} of type A on the first n-m coordinates, a a product of e-cycles.
inline void check_lemma15_part1(VerificationReport& rep, Family f, int max_rank) {
  int tested[2] = {0, 0}, regular[2] = {0, 0};  // by parity of e
  const int min_rank = f == Family::A ? 2 : f == Family::D ? 4 : 3;
  for (int r = min_rank; r <= max_rank; ++r) {
    auto rs = std::make_shared<const RootSystem>(build_root_system(f, r));
    const int n = rs->ambient_dim();
    // W_L on the trailing letters/coordinates
    const int min_m = f == Family::A ? 1 : f == Family::D ? 3 : 1;
    for (int m = min_m; m <= r - 1; ++m) {
      const int letters = f == Family::A ? n - (m + 1) : n - m;  // letters moved by W_{L'}
      if (letters < 2) continue;
      std::vector<int> pi_L;
      for (int i = r - m; i < r; ++i) pi_L.push_back(i);
      const LeviConfig lv = levi_config(rs, pi_L);
      const std::string expect = "A" + std::to_string(letters - 1);
      const std::string where = rs->name() + " W_L=" + dynkin_type(*rs, pi_L);
      if (lv.prime_type != expect) {
        rep.fail(where, "Pi'", lv.prime_type, expect);
        continue;
      }
      for (int e : detail::divisors_from(letters, 2)) {
        std::vector<SignedPerm::Cycle> cycles;
        for (int c = 0; c < letters / e; ++c) {
          SignedPerm::Cycle cyc;
          for (int i = 0; i < e; ++i) cyc.letters.push_back(c * e + i + 1);
          cycles.push_back(cyc);
        }
        const WeylElt a = WeylElt::from_signed_perm(SignedPerm::from_cycles(n, cycles));
        ++tested[e % 2];
        const auto witness = detail::L_regularity_witness(a, e, lv);
        if (!witness) {
          ++regular[e % 2];
          continue;
        }
        const std::string cls = where + " a=" + a.to_string();
        rep.fail(cls, "e=" + std::to_string(e), "not L-regular (root " + detail::root_string(rs->roots()[*witness]) + ")",
                 "L-regular");
      }
    }
  }
  rep.notes.push_back(std::string("(i) ") + family_letter(f) + ": L-regular for odd e in " + std::to_string(regular[1]) + " of " +
                      std::to_string(tested[1]) + " cases, for even e in " + std::to_string(regular[0]) + " of " +
                      std::to_string(tested[0]) + " cases");
}

/// Part (ii): every connected Pi_L with Pi' nonempty (|Pi'| <= max_prime),
/// every regular element of W_{L'}; counts the L-regular ones.
inline void check_lemma15_part2(VerificationReport& rep, Family f, int rank, std::size_t max_prime) {
  auto rs = std::make_shared<const RootSystem>(build_root_system(f, rank));
  int candidates = 0, found = 0, levis = 0, skipped = 0;
  for (unsigned mask = 1; mask + 1 < (1u << rank); ++mask) {
    std::vector<int> pi_L;
    for (int i = 0; i < rank; ++i)
      if (mask >> i & 1) pi_L.push_back(i);
    if (diagram_components(*rs, pi_L).size() != 1) continue;
    const LeviConfig lv = levi_config(rs, pi_L);
    if (lv.pi_prime.empty()) continue;
    if (lv.pi_prime.size() > max_prime) {
      ++skipped;
      continue;
    }
    ++levis;
    const auto sub = parabolic_subgroup(*rs, lv.pi_prime);
    for (const auto& a : sub.elements()) {
      const long e = a.order();
      if (e < 2 || !is_regular_wrt(a, static_cast<int>(e), *rs, lv.phi_Lprime)) continue;
      ++candidates;
      if (is_L_regular(a, static_cast<int>(e), lv)) {
        ++found;
        rep.fail(rs->name() + " Pi_L=" + detail::join_ints(pi_L) + " a=" + a.to_string(), "e=" + std::to_string(e), "L-regular",
                 "no L-regular element");
      }
    }
  }
  std::string note = "(ii) " + rs->name() + ": " + std::to_string(levis) + " Levi subsystems, " + std::to_string(candidates) +
                     " regular elements of W_{L'}, " + std::to_string(found) + " L-regular";
  if (skipped) note += " (" + std::to_string(skipped) + " Levi subsystems with |Pi'| > " + std::to_string(max_prime) + " not swept)";
  if (found == 0) note += "; no L-regular elements";
  rep.notes.push_back(note);
}

/// Part (iii): E6/E7 with Pi_L = {alpha_k, ..., alpha_r}, k >= 3. For Pi' of
/// type A_j the elements are powers of a Coxeter element of the chain; for
/// A_j + A_1 the product of such elements of common order e; for D_5 the
/// Coxeter element of the A_4 chain alpha_1, alpha_2, alpha_4, alpha_5 (a
/// positive 5-cycle). Also reports how many regular elements of W_{L'} are
/// L-regular.
inline void check_lemma15_part3(VerificationReport& rep, int rank) {
  auto rs = std::make_shared<const RootSystem>(build_root_system(Family::E, rank));
  for (int k = 3; k <= rank; ++k) {
    std::vector<int> pi_L;
    for (int i = k; i <= rank; ++i) pi_L.push_back(i - 1);
    const LeviConfig lv = levi_config(rs, pi_L);
    const std::string where = rs->name() + " Pi_L={a" + std::to_string(k) + "..a" + std::to_string(rank) + "} Pi'=" + lv.prime_type;
    std::vector<std::pair<WeylElt, int>> elements;
    const auto comps = diagram_components(*rs, lv.pi_prime);
    if (lv.prime_type == "D5") {
      elements.emplace_back(detail::chain_coxeter(*rs, {0, 1, 3, 4}), 5);
    } else {
      std::vector<std::vector<int>> chains;
      for (const auto& c : comps) chains.push_back(detail::chain_order(*rs, c));
      for (int e = 2; e <= rank + 1; ++e) {
        bool ok = true;
        WeylElt a = WeylElt::identity(rs->ambient_dim());
        for (const auto& ch : chains) {
          const int h = static_cast<int>(ch.size()) + 1;
          if (h % e != 0) ok = false;
          else a = a * detail::chain_coxeter(*rs, ch).pow(h / e);
        }
        if (ok) elements.emplace_back(a, e);
      }
    }
    if (elements.empty()) rep.notes.push_back("(iii) " + where + ": no type-(a) element of common order e >= 2");
    for (const auto& [a, e] : elements) {
      const std::string cls = where + " a=" + a.to_string();
      if (a.order() != e || !is_regular_wrt(a, e, *rs, lv.phi_Lprime)) {
        rep.fail(cls, "e=" + std::to_string(e), "not regular in W_{L'}", "regular");
        continue;
      }
      const auto witness = detail::L_regularity_witness(a, e, lv);
      if (witness)
        rep.fail(cls, "e=" + std::to_string(e), "not L-regular (root " + detail::root_string(rs->roots()[*witness]) + ")", "L-regular");
    }
    int reg = 0, lreg = 0;
    const auto sub = parabolic_subgroup(*rs, lv.pi_prime);
    for (const auto& a : sub.elements()) {
      const long e = a.order();
      if (e < 2 || !is_regular_wrt(a, static_cast<int>(e), *rs, lv.phi_Lprime)) continue;
      ++reg;
      if (is_L_regular(a, static_cast<int>(e), lv)) ++lreg;
    }
    rep.notes.push_back("(iii) " + where + ": " + std::to_string(lreg) + " of " + std::to_string(reg) +
                        " regular elements of W_{L'} are L-regular");
  }
}

/// Regular-element catalog and L-regularity classification. With no family
/// given, runs everything: catalog and (i) for A/B/D up to rank 7, (ii) for
/// G2, F4 and E8 (Levi subsystems with |Pi'| <= 2), (iii) for E6 and E7.
inline VerificationReport check_lemma15_catalog(std::optional<Family> family = std::nullopt, std::optional<int> rank = std::nullopt,
                                                int max_rank = 7) {
  detail::Stopwatch sw;
  VerificationReport rep;
  rep.check = "lemma15";
  rep.config["family"] = family ? std::string(1, family_letter(*family)) : "all";
  if (rank) rep.config["rank"] = std::to_string(*rank);
  auto want = [&](Family f, int r) { return (!family || *family == f) && (!rank || *rank == r || f <= Family::D); };
  const int classical_max = rank ? *rank : max_rank;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    if (want(f, classical_max)) {
      check_regular_catalog(rep, f, classical_max);
      if (f != Family::C) check_lemma15_part1(rep, f, classical_max);
    }
  if (want(Family::G, 2)) check_lemma15_part2(rep, Family::G, 2, 8);
  if (want(Family::F, 4)) check_lemma15_part2(rep, Family::F, 4, 8);
  if (want(Family::E, 8)) check_lemma15_part2(rep, Family::E, 8, 2);
  if (want(Family::E, 6)) check_lemma15_part3(rep, 6);
  if (want(Family::E, 7)) check_lemma15_part3(rep, 7);
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace springer

#endif  // SPRINGER_VERIFY_HPP
