#ifndef SPRINGER_CONFIG_HPP
#define SPRINGER_CONFIG_HPP

// Induction configurations: a Levi subsystem Pi_L, a cyclic group generated
// by a in N_W(W_L), and a unipotent class of L given by Jordan types.

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/linalg.hpp"
#include "springer/partition.hpp"
#include "springer/rootsys.hpp"
#include "springer/weyl.hpp"

namespace springer {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class InductionCase { A, B };

inline std::string case_name(InductionCase c) { return c == InductionCase::A ? "a" : "b"; }

/// Jordan types of u in L: either regular in L, or one partition per
/// connected component of Pi_L (in order of smallest simple-root index).
/// Blocks of L outside Pi_L are GL_1 factors and carry (1).
struct UnipotentSpec {
  bool regular = true;
  std::vector<Partition> blocks;

  static UnipotentSpec regular_in_L() { return {}; }
  static UnipotentSpec per_block(std::vector<Partition> b) { return {false, std::move(b)}; }

  std::string to_string() const {
    if (regular) return "regular";
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) s += ':';
      const auto& p = blocks[i].parts();
      for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    }
    return s;
  }
};

/// Parses "regular" or per-block partitions separated by ':', e.g. "1,1:2".
inline UnipotentSpec parse_unipotent_spec(const std::string& text) {
  if (text.empty() || text == "regular") return UnipotentSpec::regular_in_L();
  std::vector<Partition> blocks;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) blocks.push_back(parse_partition(tok));
  return UnipotentSpec::per_block(std::move(blocks));
}

struct InductionConfig {
  LeviConfig levi;
  int e = 1;
  WeylElt a;
  UnipotentSpec u;

  const RootSystem& root_system() const { return *levi.parent; }
};

/// Connected components of the Dynkin sub-diagram on `subset`, each sorted,
/// listed by smallest index.
inline std::vector<std::vector<int>> diagram_components(const RootSystem& rs, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  std::vector<bool> done(rs.rank(), false);
  std::vector<bool> in(rs.rank(), false);
  for (int i : subset) in[i] = true;
  std::vector<std::vector<int>> comps;
  for (int s : subset) {
    if (done[s]) continue;
    std::vector<int> comp{s};
    done[s] = true;
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (int j = 0; j < rs.rank(); ++j)
        if (in[j] && !done[j] && rs.cartan()[comp[q]][j] != 0) {
          done[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Basis of the orthogonal complement of span(roots) in V.
inline std::vector<std::vector<Rational>> orthogonal_complement(const RootSystem& rs, const std::vector<IntVector>& roots) {
  const int n = rs.ambient_dim();
  if (roots.empty()) {
    std::vector<std::vector<Rational>> basis;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> v(n, Rational(0));
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  RationalMatrix m(roots.size(), n, Rational(0));
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const auto g = rs.dual(roots[r]);
    for (int c = 0; c < n; ++c) m(r, c) = g[c];
  }
  return kernel_basis(m);
}

/// w fixes every vector of `basis`.
inline bool fixes_pointwise(const WeylElt& w, const std::vector<std::vector<Rational>>& basis) {
  const auto m = w.rational_matrix();
  for (const auto& v : basis)
    if (m.apply(v) != v) return false;
  return true;
}

/// Membership in the parabolic subgroup generated by the reflections in
/// `simple_subset`: such a subgroup is the pointwise stabilizer of the
/// orthogonal complement of the span of its roots.
inline bool in_parabolic(const WeylElt& w, const RootSystem& rs, const std::vector<int>& simple_subset) {
  std::vector<IntVector> roots;
  for (int i : simple_subset) roots.push_back(rs.simple_roots()[i]);
  return fixes_pointwise(w, orthogonal_complement(rs, roots));
}

namespace detail {

inline int component_of_root(const RootSystem& rs, const std::vector<std::vector<int>>& comps, int root) {
  const auto& c = rs.roots()[root].coeffs;
  int found = -1;
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (int i : comps[k])
      if (c[i] != 0) {
        if (found >= 0 && found != static_cast<int>(k)) return -1;
        found = static_cast<int>(k);
      }
  return found;
}

}  // namespace detail

/// Classifies a configuration as case (a) or case (b), or throws ConfigError
/// naming the first violated condition.
inline InductionCase validate_config(const InductionConfig& cfg) {
  const RootSystem& rs = cfg.root_system();
  const LeviConfig& lv = cfg.levi;
  const auto& a = cfg.a;
  if (a.dim() != rs.ambient_dim()) throw ConfigError("a does not act on the ambient space of " + rs.name());
  if (cfg.e < 1) throw ConfigError("e must be positive");
  for (const auto& r : rs.simple_roots())
    if (rs.find_root(a.apply(r)) < 0) throw ConfigError("a does not permute the roots of " + rs.name());
  long order = 0;
  try {
    order = a.order(1000);
  } catch (const std::runtime_error&) {
    throw ConfigError("a has infinite or very large order");
  }
  if (order != cfg.e)
    throw ConfigError("a has order " + std::to_string(order) + " but e = " + std::to_string(cfg.e));
  for (int i : lv.pi_L) {
    const int img = rs.find_root(a.apply(rs.simple_roots()[i]));
    if (!lv.in_phi_L(static_cast<std::size_t>(img)))
      throw ConfigError("a does not normalize W_L: a(alpha_" + std::to_string(i + 1) + ") is not in Phi_L");
  }

  const auto comps = diagram_components(rs, lv.pi_L);
  const bool non_regular_u = !cfg.u.regular;
  if (non_regular_u) {
    if (rs.family() != Family::A) throw ConfigError("per-block Jordan types are supported in type A only");
    if (cfg.u.blocks.size() != comps.size())
      throw ConfigError("u gives " + std::to_string(cfg.u.blocks.size()) + " block partitions but Pi_L has " +
                        std::to_string(comps.size()) + " components");
    for (std::size_t k = 0; k < comps.size(); ++k)
      if (cfg.u.blocks[k].size() != static_cast<int>(comps[k].size()) + 1)
        throw ConfigError("Jordan type " + cfg.u.blocks[k].to_string() + " does not fit block " + std::to_string(k + 1) +
                          " of size " + std::to_string(comps[k].size() + 1));
  }

  if (!lv.pi_prime.empty()) {
    // case (a)
    if (comps.size() > 1)
      throw ConfigError("case (a) requires L simple modulo center, but Pi_L has " + std::to_string(comps.size()) +
                        " components");
    if (!in_parabolic(a, rs, lv.pi_prime)) throw ConfigError("case (a) requires a in W_{L'}, which fails");
    if (!is_regular_wrt(a, cfg.e, rs, lv.phi_Lprime))
      throw ConfigError("case (a) requires a regular in W_{L'}, which fails");
    if (!is_L_regular(a, cfg.e, lv)) throw ConfigError("case (a) requires a to be L-regular, which fails");
    return InductionCase::A;
  }

  // case (b): W_{L'} = 1
  std::vector<int> image(comps.size(), -1);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (int i : comps[k]) {
      const int img = rs.find_root(a.apply(rs.simple_roots()[i]));
      const int c = detail::component_of_root(rs, comps, img);
      if (c < 0 || (image[k] >= 0 && image[k] != c))
        throw ConfigError("case (b): a does not permute the components of Pi_L");
      image[k] = c;
    }
  }
  int fixed = 0;
  std::vector<bool> cycled(comps.size(), false);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    int len = 1;
    for (int c = image[k]; c != static_cast<int>(k); c = image[c]) ++len;
    if (len == 1) {
      ++fixed;
      for (int i : comps[k])
        if (a.apply(rs.simple_roots()[i]) != rs.simple_roots()[i])
          throw ConfigError("case (b): a must act trivially on the fixed component X_0");
    } else if (len != cfg.e) {
      throw ConfigError("case (b): a permutes components in orbits of length " + std::to_string(len) +
                        ", not e = " + std::to_string(cfg.e));
    } else {
      cycled[k] = true;
      if (dynkin_type(rs, comps[k])[0] != 'A') throw ConfigError("case (b): cyclically permuted components must be of type A");
      if (non_regular_u && cfg.u.blocks[k] != cfg.u.blocks[image[k]])
        throw ConfigError("case (b): Jordan types must agree on the e copies of each block");
    }
  }
  if (fixed > 1) throw ConfigError("case (b): at most one component X_0 may be fixed by a");
  if (cfg.e > 1 && std::none_of(cycled.begin(), cycled.end(), [](bool b) { return b; }))
    throw ConfigError("case (b): a must permute some components cyclically");
  for (int i = 1; i < cfg.e; ++i)
    if (in_parabolic(a.pow(i), rs, lv.pi_L))
      throw ConfigError("case (b): <a> meets W_L nontrivially (a^" + std::to_string(i) + " lies in W_L)");
  std::vector<IntVector> block_roots;
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (cycled[k])
      for (std::size_t r : subsystem_roots(rs, comps[k])) block_roots.push_back(rs.roots()[r].ambient);
  for (std::size_t b : lv.outside_L()) {
    const auto& beta = rs.roots()[b].ambient;
    const bool paired = std::any_of(block_roots.begin(), block_roots.end(),
                                    [&](const IntVector& alpha) { return rs.inner(beta, alpha) != 0; });
    if (!paired) {
      std::ostringstream os;
      os << "case (b): root (";
      for (std::size_t k = 0; k < beta.size(); ++k) os << (k ? "," : "") << beta[k];
      os << ") outside Phi_L is orthogonal to the cyclically permuted blocks";
      throw ConfigError(os.str());
    }
  }
  return InductionCase::B;
}

// ---------------------------------------------------------------------------
// Type A layouts

/// Letters (0-based) of every Levi block of GL_n, singleton blocks included,
/// in increasing order.
inline std::vector<std::vector<int>> type_a_blocks(int n, const std::vector<int>& pi_L) {
  std::vector<bool> joined(static_cast<std::size_t>(n), false);  // letter i joined to i+1
  for (int i : pi_L) joined[i] = true;
  std::vector<std::vector<int>> blocks{{0}};
  for (int i = 1; i < n; ++i) {
    if (joined[i - 1]) blocks.back().push_back(i);
    else blocks.push_back({i});
  }
  return blocks;
}

/// Simple roots joining consecutive letters inside each block.
inline std::vector<int> pi_L_from_blocks(const std::vector<int>& sizes) {
  std::vector<int> pi;
  int start = 0;
  for (int s : sizes) {
    for (int i = 0; i + 1 < s; ++i) pi.push_back(start + i);
    start += s;
  }
  return pi;
}

inline std::shared_ptr<const RootSystem> gl_root_system(int n) {
  if (n < 2) throw ConfigError("GL_n configurations need n >= 2");
  return std::make_shared<const RootSystem>(build_root_system(Family::A, n - 1));
}

/// Block rotation for the layout X_0 + e copies of GL_m: letters of X_0 (the
/// first k) are fixed, letter s of copy t goes to letter s of copy t+1 mod e.
inline Perm case_b_permutation(int k, int m, int e) {
  const int n = k + e * m;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) img[i] = i;
  for (int t = 0; t < e; ++t)
    for (int s = 0; s < m; ++s) img[k + t * m + s] = k + ((t + 1) % e) * m + s;
  return Perm::from_images(std::move(img));
}

inline WeylElt case_b_element(int k, int m, int e) { return WeylElt::from_perm(case_b_permutation(k, m, e)); }

/// Reads the block layout of a type A Levi as X_0 + e copies of GL_m and
/// returns the block rotation.
inline WeylElt case_b_element(const LeviConfig& levi, int e) {
  if (levi.parent->family() != Family::A) throw ConfigError("case_b_element: type A only");
  const auto blocks = type_a_blocks(levi.parent->ambient_dim(), levi.pi_L);
  const int r = static_cast<int>(blocks.size());
  auto uniform = [&](int from) {
    for (int i = from; i < r; ++i)
      if (blocks[i].size() != blocks[from].size()) return false;
    return true;
  };
  if (r == e && uniform(0)) return case_b_element(0, static_cast<int>(blocks[0].size()), e);
  if (r == e + 1 && uniform(1))
    return case_b_element(static_cast<int>(blocks[0].size()), static_cast<int>(blocks[1].size()), e);
  throw ConfigError("case (b): Levi blocks are not of the form X_0 + " + std::to_string(e) + " equal blocks");
}

/// Per-block Jordan types for the layout X_0 + e copies of GL_m; blocks of
/// size one have no simple roots and are omitted.
inline UnipotentSpec cyclic_spec(int k, const Partition& nu0, int m, const Partition& nu, int e) {
  std::vector<Partition> b;
  if (k >= 2) b.push_back(nu0);
  if (m >= 2)
    for (int t = 0; t < e; ++t) b.push_back(nu);
  return UnipotentSpec::per_block(std::move(b));
}

inline UnipotentSpec case_a_spec(int m, const Partition& nu) {
  return UnipotentSpec::per_block(m >= 2 ? std::vector<Partition>{nu} : std::vector<Partition>{});
}

/// GL_{k+em} with L = GL_k x GL_m^e (X_0 first) and a the block rotation.
/// For m = 1 the layout has no cyclically permuted root subsystem and
/// validates as case (a) instead.
inline InductionConfig make_cyclic_config(int k, int m, int e, UnipotentSpec u = {}) {
  if (k < 0 || m < 1 || e < 1) throw ConfigError("cyclic layout needs k >= 0, m >= 1, e >= 1");
  const int n = k + e * m;
  std::vector<int> sizes;
  if (k > 0) sizes.push_back(k);
  for (int t = 0; t < e; ++t) sizes.push_back(m);
  InductionConfig cfg;
  cfg.levi = levi_config(gl_root_system(n), pi_L_from_blocks(sizes));
  cfg.e = e;
  cfg.a = case_b_element(k, m, e);
  cfg.u = std::move(u);
  return cfg;
}

/// Case (a) in GL_n: W_L = S_m on the last m letters, a a product of
/// (n-m)/e disjoint e-cycles on the first n-m letters, u of type nu in GL_m.
inline InductionConfig make_case_a_config(int n, int m, int e, UnipotentSpec u = {}) {
  if (m < 1 || m >= n) throw ConfigError("case (a) layout needs 1 <= m < n");
  if (e < 1 || (n - m) % e != 0) throw ConfigError("case (a) layout needs e dividing n - m");
  std::vector<int> sizes(static_cast<std::size_t>(n - m), 1);
  sizes.push_back(m);
  std::vector<std::vector<int>> cycles;
  for (int c = 0; c < (n - m) / e; ++c) {
    std::vector<int> cyc;
    for (int i = 0; i < e; ++i) cyc.push_back(c * e + i + 1);
    cycles.push_back(std::move(cyc));
  }
  InductionConfig cfg;
  cfg.levi = levi_config(gl_root_system(n), pi_L_from_blocks(sizes));
  cfg.e = e;
  cfg.a = WeylElt::from_perm(Perm::from_cycles(n, cycles));
  cfg.u = std::move(u);
  return cfg;
}

/// Case (b) style layout from a Jordan type mu = (k) + (m^e) with u regular
/// in L. Among admissible splittings the largest m is chosen.
inline InductionConfig config_from_mu(const Partition& mu, int e) {
  if (e < 1) throw ConfigError("e must be positive");
  const auto mult = mu.multiplicities();
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const auto [m, count] = *it;
    if (count < e) continue;
    std::vector<int> rest;
    for (auto [p, c] : mult)
      for (int i = 0; i < c - (p == m ? e : 0); ++i) rest.push_back(p);
    if (rest.size() <= 1) return make_cyclic_config(rest.empty() ? 0 : rest[0], m, e);
  }
  throw ConfigError("Jordan type " + mu.to_string() + " is not of the form (k) + (m^" + std::to_string(e) + ")");
}

}  // namespace springer

#endif  // SPRINGER_CONFIG_HPP
