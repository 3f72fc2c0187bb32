#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "springer/config.hpp"
#include "springer/rootsys.hpp"
#include "springer/weyl.hpp"

using namespace springer;

namespace {

std::vector<std::pair<Family, int>> all_types() {
  std::vector<std::pair<Family, int>> t;
  for (int r = 1; r <= 8; ++r) t.emplace_back(Family::A, r);
  for (int r = 2; r <= 8; ++r) t.emplace_back(Family::B, r);
  for (int r = 2; r <= 8; ++r) t.emplace_back(Family::C, r);
  for (int r = 3; r <= 8; ++r) t.emplace_back(Family::D, r);
  for (int r = 6; r <= 8; ++r) t.emplace_back(Family::E, r);
  t.emplace_back(Family::F, 4);
  t.emplace_back(Family::G, 2);
  return t;
}

long roots_of_type(const std::string& type) {
  if (type == "trivial") return 0;
  long total = 0;
  std::stringstream ss(type);
  std::string part;
  while (std::getline(ss, part, '+')) total += expected_root_count(parse_family(part.substr(0, 1)), std::stoi(part.substr(1)));
  return total;
}

}  // namespace

TEST(RootSystem, Examples) {
  EXPECT_EQ(build_root_system(Family::A, 3).roots().size(), 12u);
  EXPECT_EQ(build_root_system(Family::B, 2).roots().size(), 8u);
  EXPECT_EQ(build_root_system(Family::E, 7).roots().size(), 126u);
  EXPECT_THROW(build_root_system(Family::E, 5), std::invalid_argument);
  EXPECT_THROW(build_root_system(Family::G, 3), std::invalid_argument);
}

TEST(RootSystem, CountsClosureAndSignCoherence) {
  for (auto [f, r] : all_types()) {
    const RootSystem rs = build_root_system(f, r);
    SCOPED_TRACE(rs.name());
    EXPECT_EQ(static_cast<long>(rs.roots().size()), expected_root_count(f, r));
    for (const auto& s : simple_reflections(rs))
      for (const auto& root : rs.roots()) EXPECT_GE(rs.find_root(s.apply(root.ambient)), 0);
    for (const auto& root : rs.roots()) {
      bool pos = false, neg = false;
      for (int c : root.coeffs) {
        pos |= c > 0;
        neg |= c < 0;
      }
      EXPECT_NE(pos, neg);
    }
  }
}

TEST(RootSystem, CartanFromInnerProducts) {
  for (auto [f, r] : all_types()) {
    const RootSystem rs = build_root_system(f, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const auto& a = rs.simple_roots()[i];
        const auto& b = rs.simple_roots()[j];
        EXPECT_EQ(Rational(rs.cartan()[i][j]), 2 * rs.inner(a, b) / rs.inner(b, b)) << rs.name();
      }
  }
}

TEST(Levi, Examples) {
  const auto a3 = std::make_shared<const RootSystem>(build_root_system(Family::A, 3));
  const LeviConfig lv = levi_config(a3, {2});
  EXPECT_EQ(lv.pi_prime, std::vector<int>{0});
  EXPECT_EQ(lv.prime_type, "A1");

  const auto e7 = std::make_shared<const RootSystem>(build_root_system(Family::E, 7));
  EXPECT_EQ(levi_config(e7, {6}).prime_type, "D5");

  for (auto [f, r] : all_types()) {
    const auto rs = std::make_shared<const RootSystem>(build_root_system(f, r));
    std::vector<int> all(static_cast<std::size_t>(r));
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(levi_config(rs, all).pi_prime.empty());
  }
}

TEST(Levi, E6E7Labelling) {
  // alpha_3 hangs off alpha_4, the chain is alpha_1 - alpha_2 - alpha_4 - ...
  const RootSystem e7 = build_root_system(Family::E, 7);
  const auto& c = e7.cartan();
  EXPECT_EQ(c[0][1], -1);
  EXPECT_EQ(c[1][3], -1);
  EXPECT_EQ(c[2][3], -1);
  EXPECT_EQ(c[0][2], 0);
  EXPECT_EQ(c[1][2], 0);
  EXPECT_EQ(c[3][4], -1);
  EXPECT_EQ(c[5][6], -1);
  const auto e6 = std::make_shared<const RootSystem>(build_root_system(Family::E, 6));
  EXPECT_EQ(levi_config(e6, {4, 5}).prime_type, "A2+A1");
  EXPECT_EQ(levi_config(e6, {5}).prime_type, "A4");
}

TEST(Levi, PrimeIsOrthogonalAndOutsideL) {
  for (auto [f, r] : all_types()) {
    if (r > 6) continue;
    const auto rs = std::make_shared<const RootSystem>(build_root_system(f, r));
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> pi;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) pi.push_back(i);
      const LeviConfig lv = levi_config(rs, pi);
      for (int p : lv.pi_prime)
        for (int l : pi) EXPECT_EQ(rs->inner(rs->simple_roots()[p], rs->simple_roots()[l]), 0);
      for (auto idx : lv.phi_Lprime) EXPECT_FALSE(lv.in_phi_L(idx));
      // |Phi_L| matches the Dynkin type read off the Cartan submatrix
      EXPECT_EQ(static_cast<long>(lv.phi_L.size()), roots_of_type(dynkin_type(*rs, pi))) << dynkin_type(*rs, pi);
      // Phi_L is closed under the reflections of W_L
      for (int i : pi) {
        const WeylElt s(rs->ambient_dim(), rs->reflection_matrix(rs->simple_roots()[i]));
        for (auto idx : lv.phi_L) EXPECT_TRUE(lv.in_phi_L(static_cast<std::size_t>(rs->find_root(s.apply(rs->roots()[idx].ambient)))));
      }
    }
  }
}
