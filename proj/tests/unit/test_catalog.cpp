#include <gtest/gtest.h>

#include "e8jac/catalog.hpp"
#include "oracles.hpp"

using namespace e8jac;

namespace {

InvariantElement S(const char* text) { return parse_display(text); }

JacobiQExpansion B(const char* name, int order) { return build(name, order); }

std::vector<long long> even_norms(int hi) {
  std::vector<long long> v;
  for (int n = 0; n <= hi; n += 2) v.push_back(n);
  return v;
}

}  // namespace

TEST(Names, Canonicalization) {
  EXPECT_EQ(canonical_name("φ_{-4,2}"), "phi_-4_2");
  EXPECT_EQ(canonical_name("phi_{-4,2}"), "phi_-4_2");
  EXPECT_EQ(canonical_name("ψ_{-8,4}"), "psi_-8_4");
  EXPECT_EQ(canonical_name("A_2"), "A2");
  EXPECT_EQ(canonical_name("B_{-2,3}"), "B_-2_3");
  EXPECT_EQ(canonical_name("U_{10,3}"), "U_10_3");
  EXPECT_EQ(canonical_name("A_{0,3}"), "A_0_3");
  EXPECT_EQ(B("φ_{-4,2}", 0), B("phi_-4_2", 0));
}

TEST(Registry, UnknownAndDeclared) {
  EXPECT_THROW(build("phi_-6_2", 1), std::invalid_argument);
  EXPECT_THROW(build("B6", 1), Error);
  EXPECT_FALSE(form_info("B6").constructible);
  EXPECT_FALSE(form_info("phi_-18_5").constructible);
}

TEST(Registry, MemoizedTruncation) {
  auto a = B("phi_-4_2", 3);
  EXPECT_EQ(B("phi_-4_2", 1), a.truncated(1));
}

TEST(Index2, PrintedCoefficients) {
  EXPECT_EQ(B("phi_-4_2", 0)[0], S("2Σ_2 − Σ_4 − 240"));
  EXPECT_EQ(B("phi_-2_2", 0)[0], S("Σ_2 + Σ_4 − 480"));
  EXPECT_EQ(B("phi_0_2", 0)[0], S("Σ_2 + 120"));
  auto a2 = B("A2", 2);
  EXPECT_EQ(a2[0], S("1"));
  EXPECT_EQ(a2[1], S("Σ_4"));
  auto b2 = B("B2", 2);
  EXPECT_EQ(b2[0], S("1"));
  EXPECT_EQ(b2[1], S("−(8/5)Σ_2 − (3/5)Σ_4 + 24"));
  EXPECT_EQ(b2[2], S("Σ_8'' − (24/5)Σ_8' − (224/5)Σ_6 − (72/5)Σ_4 − (32/5)Σ_2 + 24"));
  EXPECT_EQ(B("U_12_2", 1)[1], S("Σ_2 + 120"));
  EXPECT_EQ(B("V_14_2", 1)[1], S("Σ_2 − 240"));
  EXPECT_EQ(B("W_16_2", 1)[1], S("Σ_2 − 240"));
}

TEST(Index2, HeatChain) {
  auto f = B("phi_-4_2", 2);
  EXPECT_EQ(heat(f) * Rational(3), B("phi_-2_2", 2));
}

TEST(Index2, B2RestrictsToE6) { EXPECT_EQ(value_at_zero(B("B2", 3)), eisenstein(6, 3)); }

TEST(Index3, PrintedCoefficients) {
  EXPECT_EQ(B("B_-2_3", 0)[0], S("3Σ_2 + 3Σ_4 + 5Σ_6 − 2640"));
  EXPECT_EQ(B("phi_-4_3", 0)[0], S("Σ_2 + Σ_4 − Σ_6 − 240"));
  EXPECT_EQ(B("phi_-2_3", 0)[0], S("Σ_2 + Σ_6 − 480"));
  EXPECT_EQ(B("phi_0_3", 0)[0], S("Σ_2"));
  EXPECT_EQ(B("phi_-8_3", 0)[0], S("Σ_8' − 4Σ_6 + 6Σ_4 − 4Σ_2 + 240"));
  EXPECT_EQ(B("phi_-6_3", 0)[0], S("Σ_8' − 6Σ_4 + 8Σ_2 − 720"));
  EXPECT_EQ(B("A3", 1)[1], S("Σ_6"));
  EXPECT_EQ(B("B3", 1)[1], S("−(7/20)Σ_6 − (27/20)Σ_4 − (9/20)Σ_2 + 12"));
  EXPECT_EQ(B("U_10_3", 1)[1], S("Σ_4 − (2/3)Σ_2 − 80"));
  EXPECT_EQ(B("U_12_3", 1)[1], S("Σ_4 − 2Σ_2 + 240"));
  EXPECT_EQ(B("V_12_3", 1)[1], S("Σ_2"));
  EXPECT_EQ(B("U_14_3", 1)[1], S("Σ_4 + 2Σ_2 − 720"));
  auto u16 = B("U_16_3", 2);
  EXPECT_TRUE(u16[0].is_zero());
  EXPECT_TRUE(u16[1].is_zero());
}

TEST(Index3, A3IsNormalizedThetaLift) {
  // z = 0 value E4 forces the scalar 1/sigma_3(3) = 1/28
  build("A3", 1);
  EXPECT_EQ(resolved_constant("X3"), ratio(1, oracle::sigma3(3)));
  EXPECT_EQ(value_at_zero(B("A3", 3)), eisenstein(4, 3));
}

TEST(Index3, B3RestrictsToE6) { EXPECT_EQ(value_at_zero(B("B3", 3)), eisenstein(6, 3)); }

TEST(Index4, ThetaQuotient) {
  auto f = build_phi16_4(1);
  EXPECT_EQ(f[0], S("Σ_16' − 8Σ_14' + 28Σ_12 − 56Σ_10 + 14Σ_8'' + 56Σ_8' − 56Σ_6 + 28Σ_4 − 8Σ_2 + 240"));
  EXPECT_EQ(eval_zero(f[0]), 0);
  EXPECT_EQ(f, B("phi_-16_4", 1));
}

TEST(Index4, HeatCascade) {
  EXPECT_EQ(B("phi_-14_4", 0)[0],
            S("Σ_16' − 2Σ_14' − 14Σ_12 + 70Σ_10 − 28Σ_8'' − 112Σ_8' + 154Σ_6 − 98Σ_4 + 34Σ_2 − 1200"));
  EXPECT_EQ(B("phi_-12_4", 0)[0], S("Σ_14' − 4Σ_12 + 3Σ_10 + 2Σ_8'' + 8Σ_8' − 25Σ_6 + 24Σ_4 − 11Σ_2 + 480"));
  EXPECT_EQ(B("phi_-10_4", 0)[0], S("Σ_12 − 4Σ_10 + Σ_8'' + 4Σ_8' − 5Σ_4 + 4Σ_2 − 240"));
  EXPECT_EQ(B("phi_-8_4", 0)[0], S("Σ_10 − (7/10)Σ_8'' − (28/10)Σ_8' + 4Σ_6 − Σ_4 − Σ_2 + 120"));
  EXPECT_EQ(B("phi_-6_4", 0)[0], S("Σ_8'' + 4Σ_8' − 14Σ_6 + 12Σ_4 − 2Σ_2 − 240"));
  EXPECT_EQ(B("phi_-4_4", 0)[0], S("Σ_6 − 2Σ_4 + Σ_2"));
  EXPECT_EQ(B("phi_-2_4", 0)[0], S("−7Σ_4 + 8Σ_2 − 240"));
  EXPECT_EQ(B("phi_0_4", 1)[0], S("2Σ_2 − 120"));
}

TEST(Index4, NamedForms) {
  EXPECT_EQ(B("psi_-8_4", 0)[0], S("Σ_8' − Σ_8''"));
  EXPECT_EQ(B("A4", 1)[1], S("Σ_8''"));
  EXPECT_EQ(B("B4", 1)[1], S("(1/15)Σ_8'' − (28/15)Σ_6 − (4/15)Σ_2 − 8"));
  EXPECT_EQ(B("C_8_4", 1)[1], S("(1/5)Σ_8'' + (4/5)Σ_8' − 4Σ_6 + 6Σ_4 − 4Σ_2 + 240"));
  EXPECT_EQ(B("U_10_4", 1)[1], S("Σ_6 − 3Σ_4 + 3Σ_2 − 240"));
  EXPECT_EQ(B("U_12_4", 1)[1], S("Σ_6 − 3Σ_4 + 3Σ_2 − 240"));
  EXPECT_EQ(value_at_zero(B("B4", 2)), eisenstein(6, 2));
}

TEST(Index4, CancellationRemovesSigma16) {
  const DominantWeight m16 = sigma_weight("16'");
  for (const auto& name : {"U_10_4", "U_12_4", "cusp_8_4", "cusp_10_4", "cusp_12_4"}) {
    auto f = B(name, 2);
    EXPECT_EQ(f[2].coeff(m16), 0) << name;
    EXPECT_TRUE(resolved_constant(name).has_value()) << name;
  }
}

TEST(Cascade, PrintedSystems) {
  auto a = solve_cascade(3, -8, even_norms(8));
  ASSERT_EQ(a.nullspace.size(), 1u);
  EXPECT_EQ(a.nullspace[0], (RVector{1, -4, 6, -4, 1}));
  auto b = solve_cascade(4, -16, even_norms(16));
  ASSERT_EQ(b.nullspace.size(), 1u);
  EXPECT_EQ(b.nullspace[0], (RVector{1, -8, 28, -56, 70, -56, 28, -8, 1}));
  EXPECT_TRUE(solve_cascade(3, -10, even_norms(8)).nullspace.empty());
  EXPECT_TRUE(solve_cascade(3, -6, even_norms(6)).nullspace.empty());
  EXPECT_TRUE(solve_cascade(4, -18, even_norms(16)).nullspace.empty());
  EXPECT_TRUE(solve_cascade(4, -14, even_norms(14)).nullspace.empty());
}

TEST(Cascade, AgreesWithPhiMinus4_2) {
  // display coefficients by norm, with the constant divided by 240
  auto s = solve_cascade(2, -4, even_norms(4));
  ASSERT_EQ(s.nullspace.size(), 1u);
  auto q0 = to_display(B("phi_-4_2", 0)[0]);
  RVector expect(3, Rational(0));
  for (const auto& t : q0) {
    if (t.label.empty()) expect[0] = t.coeff / 240;
    else expect[static_cast<std::size_t>(sigma_weight(t.label).norm() / 2)] = t.coeff;
  }
  const Rational k = expect[2] / s.nullspace[0][2];
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(s.nullspace[0][j] * k, expect[j]);
}

TEST(Cascade, RejectsBadInput) {
  EXPECT_THROW(solve_cascade(2, 0, {0, 2}), std::invalid_argument);
  EXPECT_THROW(solve_cascade(2, -4, {2, 4}), std::invalid_argument);
  EXPECT_THROW(solve_cascade(2, -4, {0, 4, 2}), std::invalid_argument);
}

TEST(Holomorphic, SingularWeightDimensions) {
  const std::size_t expect[] = {1, 1, 1, 2};
  for (int t = 1; t <= 4; ++t) EXPECT_EQ(holomorphic_subspace(4, t, 3).size(), expect[t - 1]) << t;
}

TEST(Holomorphic, WeightFourIndexTwoIsA2) {
  auto b = holomorphic_subspace(4, 2, 3);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], B("A2", 3));
}

TEST(Holomorphic, A4AndX4Span) {
  auto b = holomorphic_subspace(4, 4, 2);
  ASSERT_EQ(b.size(), 2u);
  // A4 and X4 lie in the span: the 4x? coefficient matrix of {b0, b1, A4, X4} has rank 2
  std::set<std::pair<int, DominantWeight>> keys;
  std::vector<JacobiQExpansion> fs = {b[0], b[1], B("A4", 2), B("X4", 2)};
  for (const auto& f : fs)
    for (int n = 0; n <= 2; ++n)
      for (const auto& [m, c] : f[n].terms()) keys.insert({n, m});
  RMatrix rows;
  for (const auto& f : fs) {
    RVector v;
    for (const auto& [n, m] : keys) v.push_back(f[n].coeff(m));
    rows.push_back(v);
  }
  EXPECT_EQ(rank(rows, keys.size()), 2u);
  EXPECT_NE(B("A4", 2), B("X4", 2));
}

TEST(Holomorphic, InsufficientOrder) {
  try {
    holomorphic_subspace(6, 3, 0);
    FAIL();
  } catch (const InsufficientOrderError& e) {
    EXPECT_EQ(e.required(), 1);
    EXPECT_NE(std::string(e.what()).find("q^1"), std::string::npos);
  }
}

TEST(FreeModule, GeneratorCountsAndRank) {
  auto r = rank_series(4);
  for (int t = 1; t <= 4; ++t) {
    auto rep = verify_free_module(t, 16, default_order(t));
    EXPECT_TRUE(rep.ok()) << t;
    EXPECT_EQ(Integer(static_cast<unsigned long>(rep.generators)), r[static_cast<std::size_t>(t)]) << t;
  }
}

TEST(FreeModule, Examples) {
  auto r2 = verify_free_module(2, 0, 3);
  EXPECT_EQ(r2.rows.back().weight, 0);
  EXPECT_EQ(r2.rows.back().predicted, 2u);
  auto r3 = verify_free_module(3, -8, 3);
  EXPECT_EQ(r3.rows.front().predicted, 1u);
  auto r1 = verify_free_module(1, 16, 3);
  for (const auto& row : r1.rows) EXPECT_EQ(row.predicted, static_cast<std::size_t>(dim_modular(row.weight - 4)));
}

TEST(FreeModule, ReportsDependency) {
  // the relation search used for rank-deficient weights
  RMatrix m = {{1, 2, 3}, {2, 4, 6}};
  auto deps = row_dependencies(m, 3);
  ASSERT_EQ(deps.size(), 1u);
  EXPECT_EQ(deps[0][0] * 1 + deps[0][1] * 2, 0);
}

TEST(Tables, RankSeries) {
  auto r = rank_series(14);
  const long expect[] = {1, 1, 3, 5, 10, 15, 27, 39, 63, 90, 135, 187, 270, 364, 505};
  for (int i = 0; i <= 14; ++i) EXPECT_EQ(r[static_cast<std::size_t>(i)], expect[i]);
}

TEST(Tables, DimensionBounds) {
  auto t = dimension_bound_table(40);
  const int expect[] = {1, 0, 1, 1, 2, 1, 3, 2, 4, 4, 6, 5, 9, 8, 12, 13, 17, 17, 24};
  ASSERT_EQ(t.size(), 19u);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t[i].weight, 4 + 2 * static_cast<int>(i));
    EXPECT_EQ(t[i].upper, expect[i]) << t[i].weight;
  }
  EXPECT_FALSE(t[1].notes.empty());
  EXPECT_THROW(dimension_bound_table(42), std::invalid_argument);
}

TEST(Tables, PullbackMax) {
  std::map<std::string, long long> t;
  for (auto& [l, v] : pullback_max_table()) t[l] = v;
  EXPECT_EQ(t.size(), 26u);
  EXPECT_EQ(t["2"], 2);
  EXPECT_EQ(t["22'"], 9);
  EXPECT_EQ(t["36'"], 12);
}

// Structural properties on every constructible registry entry.
class EveryForm : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryForm, Properties) {
  const FormInfo& info = form_info(GetParam());
  const int order = default_order(info.index);
  JacobiQExpansion f = build(info.name, order);
  // classification, conclusive at this order
  const int needed = info.kind == FormKind::weak          ? 0
                     : info.kind == FormKind::holomorphic ? holomorphy_depth(info.index)
                                                          : cusp_depth(info.index);
  ASSERT_GE(order, needed);
  EXPECT_EQ(classify(f).kind, info.kind);
  EXPECT_TRUE(t_support_check(f[0], info.index).ok);
  EXPECT_TRUE(coset_bound_violations(f).empty());
  if (info.weight == 0) {
    EXPECT_TRUE(weight0_identity(f));
    EXPECT_TRUE(value_at_zero(heat(f)).is_zero());
  }
  auto qp = oracle::quasi_periodicity(f, 100, 12345);
  EXPECT_EQ(qp.checked, 100);
  EXPECT_TRUE(qp.counterexample.empty()) << qp.counterexample;
}

namespace {
std::vector<std::string> constructible_names() {
  std::vector<std::string> v;
  for (const auto& i : catalog_forms())
    if (i.constructible) v.push_back(i.name);
  return v;
}
std::string param_name(const ::testing::TestParamInfo<std::string>& p) {
  std::string s;
  for (char c : p.param) s += std::isalnum(static_cast<unsigned char>(c)) ? c : (c == '-' ? 'm' : '_');
  return s;
}
}  // namespace

INSTANTIATE_TEST_SUITE_P(Catalog, EveryForm, ::testing::ValuesIn(constructible_names()), param_name);
