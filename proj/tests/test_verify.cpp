#include <gtest/gtest.h>

#include "oracles.hpp"
#include "springer/report.hpp"

using namespace springer;

namespace {

Perm cyc(int n, std::vector<std::vector<int>> cycles) { return Perm::from_cycles(n, cycles); }

InductionConfig s4_config(const Partition& nu = {2}) { return make_cyclic_config(0, 2, 2, cyclic_spec(0, {}, 2, nu, 2)); }

/// Small layouts, both cases, with general Jordan types per block.
std::vector<InductionConfig> small_configs() {
  return {
      s4_config(),
      s4_config({1, 1}),
      make_cyclic_config(1, 2, 2, cyclic_spec(1, {}, 2, {1, 1}, 2)),
      make_cyclic_config(0, 1, 3),
      make_cyclic_config(1, 1, 2),
      make_case_a_config(5, 2, 3, case_a_spec(2, {1, 1})),
      make_case_a_config(5, 3, 2, case_a_spec(3, {2, 1})),
      make_case_a_config(4, 2, 2, case_a_spec(2, {2})),
  };
}

std::string fingerprint(VerificationReport r) {
  r.elapsed_ms = 0;
  return to_json(r).dump();
}

}  // namespace

TEST(Extension, TensorCyclicExample) {
  // (y, y) a on V (x) V with V = H*(B_(1,1)) of S_2: trace of y^2 = 1 on V at q^2
  const GradedCharacter g = springer_graded_char({1, 1});
  const Perm s = Perm::from_images({1, 0});
  EXPECT_EQ(tensor_cyclic_trace(g, {Perm(2), Perm(2)}, 1), (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(tensor_cyclic_trace(g, {s, Perm(2)}, 1), (IntPolynomial{1, 0, -1}));
  EXPECT_EQ(tensor_cyclic_trace(g, {Perm(2), Perm(2)}, 0), (IntPolynomial{1, 2, 1}));
  // u regular per block: trivial one-dimensional module
  EXPECT_EQ(tensor_cyclic_trace(springer_graded_char({2}), {s, Perm(2)}, 1), IntPolynomial(1));
}

TEST(Extension, OrbitFormulaMatchesTensorTrace) {
  for (auto [m, e] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (const auto& nu : partitions_of(m)) {
      const GradedCharacter g = springer_graded_char(nu);
      const ExtendedGradedCharacter ext = tensor_cyclic_extension(g, e);
      const std::vector<Perm> Sm = oracle::all_perms(m);
      // W_L = S_m^e embedded block by block; y = (y_1, ..., y_e) a^i
      std::vector<std::size_t> pick(static_cast<std::size_t>(e), 0);
      for (;;) {
        std::vector<int> img(static_cast<std::size_t>(e * m));
        std::vector<Perm> ys;
        for (int t = 0; t < e; ++t) {
          ys.push_back(Sm[pick[t]]);
          for (int s = 0; s < m; ++s) img[t * m + s] = t * m + Sm[pick[t]](s);
        }
        const Perm h = Perm::from_images(img);
        for (int i = 0; i < e; ++i) EXPECT_EQ(ext.value(h * ext.generator().pow(i)), tensor_cyclic_trace(g, ys, i));
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == Sm.size()) pick[k++] = 0;
        if (k == pick.size()) break;
      }
    }
  }
}

TEST(Extension, AgreesWithExplicitMatrixModel) {
  for (const auto& cfg : small_configs()) {
    const TypeALayout lay = type_a_layout(cfg);
    const oracle::TensorModel V(lay);
    const ExtendedGradedCharacter ext(lay);
    for (int i = 0; i < lay.e; ++i)
      for (const auto& h : lay.W_L) {
        const Perm y = lay.a.pow(i) * h;
        EXPECT_EQ(ext.value(y), V.graded_trace(y)) << y.to_string();
      }
  }
}

TEST(GammaInd, S4Values) {
  const TypeALayout lay = type_a_layout(s4_config());
  const ExtendedGradedCharacter ext(lay);
  EXPECT_EQ(gamma_ind_trace(ext, lay.W_L, cyc(4, {{1, 2}, {3, 4}}), 1), Cyclotomic(2, 4));
  EXPECT_EQ(gamma_ind_trace(ext, lay.W_L, cyc(4, {{1, 2, 3, 4}}), 1), Cyclotomic(2, 2));
  EXPECT_EQ(gamma_ind_trace(ext, lay.W_L, Perm(4), 0), Cyclotomic(2, 6));
  EXPECT_EQ(gamma_ind_trace(ext, lay.W_L, cyc(4, {{1, 2}}), 1), Cyclotomic(2, 0));
}

TEST(GammaInd, MatchesMatrixModel) {
  for (const auto& cfg : small_configs()) {
    const TypeALayout lay = type_a_layout(cfg);
    const oracle::TensorModel V(lay);
    ASSERT_LE(V.dim() * static_cast<std::size_t>(lay.index_of_semidirect().get_ui() * lay.e), 200u);
    const ExtendedGradedCharacter ext(lay);
    for (const auto& rho : partitions_of(lay.n))
      for (int i = 0; i < lay.e; ++i)
        for (long j : detail::primitive_exponents(lay.e)) {
          const Perm w = oracle::class_rep(rho);
          EXPECT_EQ(gamma_ind_trace(ext, lay.W_L, w, i, j), oracle::matrix_model_trace(lay, V, w, i, j))
              << lay.mu.to_string() << " " << rho.to_string() << " i=" << i;
        }
  }
}

TEST(GammaInd, MatchesGreenPolynomial) {
  for (const auto& cfg : small_configs()) {
    const TypeALayout lay = type_a_layout(cfg);
    const ExtendedGradedCharacter ext(lay);
    const GradedCharacter Q = springer_graded_char(lay.mu);
    for (const auto& rho : partitions_of(lay.n))
      for (int i = 0; i < lay.e; ++i)
        EXPECT_EQ(gamma_ind_trace(ext, lay.W_L, oracle::class_rep(rho), i), eval_at_root(Q[rho], lay.e, i));
  }
}

TEST(Checks, SmallConfigsPass) {
  for (const auto& cfg : small_configs()) {
    const TypeALayout lay = type_a_layout(cfg);
    EXPECT_TRUE(check_theorem17(cfg).pass) << lay.mu.to_string();
    EXPECT_TRUE(check_prop33_dims(cfg).pass) << lay.mu.to_string();
    if (detail::u_is_regular(lay)) {
      EXPECT_TRUE(check_prop37(cfg).pass);
      EXPECT_TRUE(check_cor35(cfg).pass);
    } else {
      EXPECT_THROW(check_prop37(cfg), ConfigError);
    }
    if (lay.kind == InductionCase::A) EXPECT_TRUE(check_prop332_case_a(cfg).pass) << lay.mu.to_string();
    else EXPECT_THROW(check_prop332_case_a(cfg), ConfigError);
  }
}

TEST(Checks, DimensionExamples) {
  auto note = [](const VerificationReport& r) { return r.notes.front(); };
  EXPECT_EQ(note(check_prop33_dims(s4_config())), "dims (3,3); [W:W~_L] dim H*(B_u^L) = 3");
  EXPECT_EQ(note(check_prop33_dims(s4_config({1, 1}))), "dims (12,12); [W:W~_L] dim H*(B_u^L) = 12");
  EXPECT_EQ(note(check_prop33_dims(make_case_a_config(5, 2, 3, case_a_spec(2, {1, 1})))),
            "dims (40,40,40); [W:W~_L] dim H*(B_u^L) = 40");
}

TEST(Checks, Cor35S4Table) {
  const VerificationReport r = check_cor35(s4_config());
  ASSERT_TRUE(r.pass);
  ASSERT_EQ(r.notes.size(), 2u);
  EXPECT_EQ(r.notes[0], "k=0: (3,1,3,0,1)");
  EXPECT_EQ(r.notes[1], "k=1: (3,1,-1,0,-1)");
}

TEST(Checks, TraceDecompositionIsConsistent) {
  // (1/e) sum_i zeta^{-ki} trace(a^i, w) is the degree-mod-e piece used by the
  // induced-character checks
  for (const auto& cfg : small_configs()) {
    const TypeALayout lay = type_a_layout(cfg);
    const ExtendedGradedCharacter ext(lay);
    const GradedCharacter Q = springer_graded_char(lay.mu);
    for (const auto& rho : partitions_of(lay.n))
      for (int k = 0; k < lay.e; ++k) {
        Cyclotomic s(lay.e);
        for (int i = 0; i < lay.e; ++i)
          s += Cyclotomic::zeta_power(lay.e, -static_cast<long long>(k) * i) * gamma_ind_trace(ext, lay.W_L, oracle::class_rep(rho), i);
        s *= Rational(1, lay.e);
        EXPECT_EQ(s, Cyclotomic(lay.e, Rational(residue_sum(Q[rho], lay.e, k))));
      }
  }
}

TEST(Checks, InductionAtOne) {
  EXPECT_TRUE(check_induction_e1({{2, 1}, {2}}).pass);
  EXPECT_TRUE(check_induction_e1({{1, 1, 1}, {2, 1}, {1}}).pass);
  EXPECT_TRUE(check_induction_e1({{3, 1}}).pass);
  // all blocks of size one: the regular character
  EXPECT_TRUE(check_induction_e1({{1}, {1}, {1}, {1}}).pass);
}

TEST(Checks, Remark38Readings) {
  const VerificationReport r = check_remark38(2, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.notes.front(), "amended reading matches; printed reading differs on classes [(4), (1,1,1,1)]");
  EXPECT_TRUE(check_remark38(1, 3).pass);
}

TEST(Checks, JobsDoNotChangeResults) {
  const auto cfg = make_cyclic_config(1, 2, 2);
  SweepOptions one, three;
  three.jobs = 3;
  EXPECT_EQ(fingerprint(check_prop37(cfg, one)), fingerprint(check_prop37(cfg, three)));
  EXPECT_EQ(fingerprint(check_theorem17(cfg, one)), fingerprint(check_theorem17(cfg, three)));
  EXPECT_EQ(fingerprint(check_cor35(cfg, one)), fingerprint(check_cor35(cfg, three)));
}

TEST(Checks, BoundIsEnforced) {
  SweepOptions tight;
  tight.bound = 100;
  EXPECT_THROW(check_prop37(make_cyclic_config(1, 2, 2), tight), BoundExceeded);
}

TEST(Checks, FailuresCarryCounterexamples) {
  const VerificationReport r = check_lemma15_catalog(Family::B, 4);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.counterexamples.empty());
  const VerificationReport f4 = check_lemma15_catalog(Family::F, 4);
  EXPECT_TRUE(f4.pass);
  EXPECT_TRUE(f4.counterexamples.empty());
  EXPECT_NE(f4.notes.back().find("no L-regular elements"), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  VerificationReport r = check_cor35(s4_config());
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(nlohmann::json::parse(j.dump()).dump(), j.dump());
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
  r.fail("(4)", "k=1", "1", "2");
  std::ostringstream csv;
  write_report(csv, {r}, Format::Csv);
  EXPECT_NE(csv.str().find("cor35,fail,(4),k=1,1,2"), std::string::npos);
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
}
