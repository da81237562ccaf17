#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "pentagram/maps.hpp"
#include "pentagram/spectral.hpp"

using namespace pentagram;

namespace {

// Numeric Lax data rebuilt from the defining recipe: K_j has (-1)^d in the
// corner, the diagonal D(lambda) below it and the coefficient column on the
// right; L_j is its inverse, here by adjugate.
QMatrix numeric_display(const CoefficientArray& p, long j, const LaxVariant& v, const Scalar& lambda) {
  const int d = p.d;
  QMatrix k(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(d + 1));
  k(0, static_cast<std::size_t>(d)) = d % 2 == 0 ? 1 : -1;
  std::vector<Scalar> diag(static_cast<std::size_t>(d), Scalar(1));
  std::vector<Scalar> col;
  for (int i = 1; i <= d; ++i) col.push_back(p.coeff(j, i));
  switch (v.kind) {
    case LaxVariant::Kind::kDented:
    case LaxVariant::Kind::kPartial:
      diag[static_cast<std::size_t>(v.m)] = lambda;
      break;
    case LaxVariant::Kind::kShortDiagonal3D:
      diag = {lambda, 1, lambda};
      break;
    case LaxVariant::Kind::kCorrugated3D:
      diag[2] = lambda;
      break;
    case LaxVariant::Kind::kTilde:
      for (int i = 1; i <= d; ++i) {
        diag[static_cast<std::size_t>(i - 1)] = p.coeff(j + 1, i - 1) / (p.coeff(j, i) * p.coeff(j + 1, d));
        col[static_cast<std::size_t>(i - 1)] = 1;
      }
      diag[static_cast<std::size_t>(v.m)] *= lambda;
      break;
  }
  for (int i = 1; i <= d; ++i) {
    k(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = diag[static_cast<std::size_t>(i - 1)];
    k(static_cast<std::size_t>(i), static_cast<std::size_t>(d)) = col[static_cast<std::size_t>(i - 1)];
  }
  return k;
}

QMatrix adjugate_inverse(const QMatrix& a) {
  const std::size_t n = a.rows();
  const Scalar det = oracle::cofactor_det(a);
  QMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      QMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == c) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j)
          if (j != r) minor(mi, mj++) = a(i, j);
        ++mi;
      }
      const Scalar cof = oracle::cofactor_det(minor) / det;
      out(r, c) = (r + c) % 2 == 0 ? cof : Scalar(-cof);
    }
  return out;
}

Scalar numeric_r(const CoefficientArray& p, const LaxVariant& v, const Scalar& k, const Scalar& lambda) {
  QMatrix t = QMatrix::identity(static_cast<std::size_t>(p.d + 1));
  for (long j = 0; j < p.n; ++j) t = adjugate_inverse(numeric_display(p, j, v, lambda)) * t;
  for (std::size_t i = 0; i < t.rows(); ++i) t(i, i) -= k;
  return oracle::cofactor_det(t);
}

Scalar product(const CoefficientArray& p, int k) {
  Scalar out = 1;
  for (const auto& row : p.a) out *= row[static_cast<std::size_t>(k - 1)];
  return out;
}

CoefficientArray sample_for(const LaxVariant& v, int n, std::uint64_t seed) {
  if (v.kind == LaxVariant::Kind::kCorrugated3D) return random_corrugated_polygon(3, n, seed);
  return random_generic_polygon(3, n, seed);
}

MapSpec map_for(const LaxVariant& v) {
  switch (v.kind) {
    case LaxVariant::Kind::kShortDiagonal3D: return MapSpec::short_diagonal();
    case LaxVariant::Kind::kCorrugated3D: return MapSpec::corrugated();
    default: return MapSpec::dented(v.m);
  }
}

const std::vector<LaxVariant> kTabulated{LaxVariant::dented(1), LaxVariant::dented(2), LaxVariant::short_diagonal(),
                                         LaxVariant::corrugated()};

}  // namespace

TEST(Lax, ClosedFormInverseMultipliesBack) {
  for (int d = 2; d <= 5; ++d) {
    CompanionDisplay disp;
    for (int i = 0; i < d; ++i) {
      disp.diagonal.push_back(LaurentPoly::monomial(Scalar(i + 2, 3), i % 3 - 1));
      disp.column.push_back(LaurentPoly(i) + LaurentPoly::lambda(2));
    }
    const LaurentMatrix k = companion_matrix(disp), l = companion_inverse(disp);
    const auto id = LaurentMatrix::identity(static_cast<std::size_t>(d + 1));
    EXPECT_EQ(k * l, id);
    EXPECT_EQ(l * k, id);
  }
  CompanionDisplay bad{{LaurentPoly(1) + LaurentPoly::lambda(), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly(1)}};
  EXPECT_EQ(code_of([&] { companion_inverse(bad); }), ErrorCode::kDivisionByZero);
}

TEST(Lax, EveryVariantInvertsItsDisplay) {
  const CoefficientArray g3 = random_generic_polygon(3, 7, 1);
  const CoefficientArray c3 = random_corrugated_polygon(3, 7, 1);
  const CoefficientArray p4 = random_partially_corrugated_polygon(4, 7, 1, 3, 1);
  const std::vector<std::pair<CoefficientArray, LaxVariant>> cases{
      {g3, LaxVariant::dented(1)}, {g3, LaxVariant::dented(2)}, {g3, LaxVariant::tilde(1)},
      {g3, LaxVariant::tilde(2)},  {g3, LaxVariant::short_diagonal()}, {c3, LaxVariant::corrugated()},
      {p4, LaxVariant::partial(1, 3)}};
  for (const auto& [p, v] : cases) {
    for (long j = 0; j < p.n; ++j) {
      const LaurentMatrix l = lax_matrix(p, j, v);
      EXPECT_EQ(companion_matrix(lax_display(p, j, v)) * l, LaurentMatrix::identity(l.rows())) << v.describe();
    }
  }
}

TEST(Lax, VariantPreconditions) {
  const CoefficientArray g3 = random_generic_polygon(3, 7, 1);
  const CoefficientArray g4 = random_generic_polygon(4, 7, 1);
  EXPECT_EQ(code_of([&] { lax_display(g3, 0, LaxVariant::dented(3)); }), ErrorCode::kVariantMismatch);
  EXPECT_EQ(code_of([&] { lax_display(g4, 0, LaxVariant::short_diagonal()); }), ErrorCode::kVariantMismatch);
  EXPECT_EQ(code_of([&] { lax_display(g3, 0, LaxVariant::corrugated()); }), ErrorCode::kVariantMismatch);
  EXPECT_EQ(code_of([&] { lax_display(g4, 0, LaxVariant::partial(1, 3)); }), ErrorCode::kVariantMismatch);
  CoefficientArray quasi = g3;
  quasi.quasi = QuasiPeriodicData{{1, 2, 1, 1}};
  EXPECT_EQ(code_of([&] { lax_display(quasi, 0, LaxVariant::dented(1)); }), ErrorCode::kVariantMismatch);
}

TEST(Lax, DentedDisplayAtLambdaOneIsTheTransferMatrix) {
  const CoefficientArray p = random_generic_polygon(4, 7, 3);
  for (int m = 1; m <= 3; ++m)
    for (long j = 0; j < p.n; ++j) EXPECT_EQ(numeric_display(p, j, LaxVariant::dented(m), 1), transfer_matrix(p, j));
}

TEST(Spectral, MatchesNumericDeterminantsAtRationalPoints) {
  const std::vector<Scalar> ks{0, 1, Scalar(-2, 3), 5};
  const std::vector<Scalar> lambdas{1, Scalar(1, 2), -3};
  for (const auto& v : {LaxVariant::dented(1), LaxVariant::dented(2), LaxVariant::tilde(1), LaxVariant::short_diagonal(),
                        LaxVariant::corrugated()}) {
    const CoefficientArray p = sample_for(v, 5, 2);
    const LaurentBivariate r = spectral_function(p, v);
    for (const auto& k : ks)
      for (const auto& l : lambdas) EXPECT_EQ(r.evaluate(k, l), numeric_r(p, v, k, l)) << v.describe();
  }
  const CoefficientArray p4 = random_partially_corrugated_polygon(4, 6, 1, 3, 2);
  const LaurentBivariate r4 = spectral_function(p4, LaxVariant::partial(1, 3));
  EXPECT_EQ(r4.evaluate(Scalar(1, 3), 2), numeric_r(p4, LaxVariant::partial(1, 3), Scalar(1, 3), 2));
}

TEST(Spectral, AtLambdaOneItIsTheInverseMonodromyCharacteristicPolynomial) {
  const CoefficientArray p = random_generic_polygon(3, 7, 4);
  QMatrix inv = adjugate_inverse(monodromy(p));
  const LaurentBivariate r = spectral_function(p, LaxVariant::dented(1));
  for (const Scalar& k : {Scalar(0), Scalar(2), Scalar(-1, 4)}) {
    QMatrix t = inv;
    for (std::size_t i = 0; i < t.rows(); ++i) t(i, i) -= k;
    EXPECT_EQ(r.evaluate(k, 1), oracle::cofactor_det(t));
  }
}

TEST(Spectral, IndependentOfTheStartingVertex) {
  const CoefficientArray p = random_generic_polygon(3, 7, 5);
  const LaurentBivariate r = spectral_function(p, LaxVariant::dented(1));
  for (long s = 1; s < p.n; ++s) {
    EXPECT_EQ(characteristic_function(monodromy_product(p, LaxVariant::dented(1), s)), r);
    EXPECT_EQ(spectral_function(shift_indices(p, s), LaxVariant::dented(1)), r);
  }
}

TEST(Spectral, FaddeevLeVerrierOnAKnownMatrix) {
  // [[1, lambda], [1, 0]]: det(T - k) = k^2 - k - lambda.
  LaurentMatrix t(2, 2);
  t(0, 0) = 1;
  t(0, 1) = LaurentPoly::lambda();
  t(1, 0) = 1;
  const LaurentBivariate r = characteristic_function(t);
  EXPECT_EQ(r, LaurentBivariate({-LaurentPoly::lambda(), LaurentPoly(-1), LaurentPoly(1)}));
}

TEST(Conservation, DentedShortDiagonalAndCorrugatedMaps) {
  for (const auto& v : kTabulated) {
    for (int n : {5, 7}) {
      CoefficientArray p, img;
      first_generic_seed(
          [&](std::uint64_t seed) {
            p = sample_for(v, n, seed);
            img = apply_map(p, map_for(v)).coeffs;
          },
          3);
      EXPECT_EQ(spectral_function(img, v), spectral_function(p, v)) << v.describe() << " n=" << n;
    }
  }
}

TEST(Conservation, DentedMapsInDimensionFour) {
  for (int m = 1; m <= 3; ++m) {
    const CoefficientArray p = random_generic_polygon(4, 7, 6);
    const CoefficientArray img = apply_map(p, MapSpec::dented(m)).coeffs;
    EXPECT_EQ(spectral_function(img, LaxVariant::dented(m)), spectral_function(p, LaxVariant::dented(m))) << m;
  }
}

TEST(Conservation, PartiallyCorrugatedMap) {
  const CoefficientArray p = random_partially_corrugated_polygon(4, 7, 1, 3, 9);
  const CoefficientReport img = partially_corrugated_map(p, {2, 3, 3});
  ASSERT_TRUE(img.periodic);
  EXPECT_EQ(spectral_function(img.coeffs, LaxVariant::partial(1, 3)), spectral_function(p, LaxVariant::partial(1, 3)));
}

TEST(Conservation, OtherMapsDoNotConserveTheDentedFunction) {
  const CoefficientArray p = random_generic_polygon(3, 7, 3);
  const CoefficientArray img = apply_map(p, MapSpec::dented(2)).coeffs;
  EXPECT_FALSE(spectral_function(img, LaxVariant::dented(1)) == spectral_function(p, LaxVariant::dented(1)));
}

TEST(Windows, TabulatedShapesHoldForOddN) {
  for (const auto& v : kTabulated) {
    for (int n : {5, 7, 9}) {
      const CoefficientArray p = sample_for(v, n, 7);
      const InvariantSet inv = extract_invariants(spectral_function(p, v), v, n);
      EXPECT_TRUE(inv.tabulated);
      EXPECT_EQ(inv.families.size(), 3u);
    }
  }
  EXPECT_FALSE(table_windows(LaxVariant::dented(1), 3, 6).has_value());
  EXPECT_FALSE(table_windows(LaxVariant::dented(1), 4, 7).has_value());
}

TEST(Windows, DentedOneAtSevenByHand) {
  // q = 3: k^3 window lambda^-3..lambda^0, k^2 lambda^-7..lambda^-3, k^1 lambda^-7..lambda^-5.
  const auto w = table_windows(LaxVariant::dented(1), 3, 7);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->windows[0].offset, 3);
  EXPECT_EQ(w->windows[0].upper, 3);
  EXPECT_EQ(w->windows[1].offset, 7);
  EXPECT_EQ(w->windows[1].upper, 4);
  EXPECT_EQ(w->windows[2].offset, 7);
  EXPECT_EQ(w->windows[2].upper, 2);
  EXPECT_EQ(w->constant_exponent, -7);
}

TEST(Windows, StrayMonomialIsAStructureMismatch) {
  const CoefficientArray p = random_generic_polygon(3, 7, 7);
  auto by_k = spectral_function(p, LaxVariant::dented(1)).by_k();
  by_k[2] += LaurentPoly::lambda(5);
  try {
    extract_invariants(LaurentBivariate(by_k), LaxVariant::dented(1), 7);
    FAIL() << "expected a structure mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructureMismatch);
    EXPECT_NE(std::string(e.what()).find("k^2 lambda^5"), std::string::npos) << e.what();
  }
}

TEST(Windows, UntabulatedVariantsReadTheirWindowsOffR) {
  const CoefficientArray p = random_generic_polygon(4, 7, 7);
  const InvariantSet inv = extract_invariants(spectral_function(p, LaxVariant::dented(2)), LaxVariant::dented(2), 7);
  EXPECT_FALSE(inv.tabulated);
  EXPECT_EQ(inv.families.size(), 4u);
  EXPECT_EQ(inv.families[0].name, "C4");
  EXPECT_TRUE(casimirs(inv, p).empty());
}

TEST(Casimirs, ProductFormulasAgainstDirectProducts) {
  for (const auto& v : kTabulated) {
    for (int n : {5, 7, 9}) {
      const CoefficientArray p = sample_for(v, n, 8);
      const InvariantSet inv = extract_invariants(spectral_function(p, v), v, n);
      const Scalar sign_n = n % 2 == 0 ? 1 : -1;
      for (const Casimir& c : casimirs(inv, p)) {
        if (!c.product_formula) continue;
        EXPECT_EQ(c.value, *c.product_formula) << v.describe() << " " << c.name << " n=" << n;
        if (c.name == "I_0") EXPECT_EQ(c.value, product(p, 3));
        if (c.name.front() == 'G') EXPECT_EQ(c.value, product(p, 1));
        if (c.name.front() == 'J') EXPECT_EQ(c.value, sign_n * product(p, 2));
      }
    }
  }
}

TEST(Casimirs, NamedEntriesPerVariant) {
  auto names = [](const LaxVariant& v, int n) {
    const CoefficientArray p = sample_for(v, n, 9);
    std::vector<std::string> out;
    for (const auto& c : casimirs(extract_invariants(spectral_function(p, v), v, n), p)) out.push_back(c.name);
    return out;
  };
  EXPECT_EQ(names(LaxVariant::dented(1), 7), (std::vector<std::string>{"I_0", "J_0", "G_3"}));
  EXPECT_EQ(names(LaxVariant::dented(2), 7), (std::vector<std::string>{"I_0", "J_4", "G_2"}));
  EXPECT_EQ(names(LaxVariant::short_diagonal(), 7), (std::vector<std::string>{"I_0", "J_3", "G_0"}));
  EXPECT_EQ(names(LaxVariant::corrugated(), 9).size(), 6u);
}

TEST(Branches, QuarticRootOfLambda) {
  // k^4 = lambda: one cycle of length four at each end, genus zero.
  const LaurentBivariate r({-LaurentPoly::lambda(), 0, 0, 0, 1});
  for (auto at : {BranchLocation::kZero, BranchLocation::kInfinity}) {
    const BranchData b = newton_branches(r, at);
    ASSERT_EQ(b.cycles.size(), 1u);
    EXPECT_EQ(b.cycles[0].e, 4);
    EXPECT_EQ(b.cycles[0].multiplicity, 1);
    EXPECT_EQ(b.cycles[0].exponent, Scalar(1, 4));
    EXPECT_TRUE(b.simple());
  }
  EXPECT_EQ(finite_branch_count(r), 0);
  EXPECT_EQ(genus(r), 0);
}

TEST(Branches, RepeatedFactorHasZeroDiscriminant) {
  // (k - 1)^4 has every sheet glued together.
  const LaurentBivariate r({1, -4, 6, -4, 1});
  EXPECT_EQ(code_of([&] { finite_branches(r); }), ErrorCode::kZeroDiscriminant);
  EXPECT_EQ(code_of([&] { genus(r); }), ErrorCode::kZeroDiscriminant);
}

TEST(Branches, NodeIsNotSimple) {
  // k^2 = lambda (lambda - 1)^2: the discriminant has a double root at 1.
  const LaurentPoly rhs = LaurentPoly::lambda(3) - LaurentPoly::monomial(2, 2) + LaurentPoly::lambda();
  const LaurentBivariate r({-rhs, 0, 1});
  const FiniteBranches fb = finite_branches(r);
  EXPECT_FALSE(fb.squarefree);
  EXPECT_EQ(fb.count, 2);
  EXPECT_EQ(code_of([&] { genus(r); }), ErrorCode::kNonSimpleBranching);
}

TEST(Branches, EllipticCurve) {
  // k^2 = lambda^3 - lambda - 1 has genus one: four branch points in all,
  // three finite and one at infinity.
  const LaurentPoly rhs = LaurentPoly::lambda(3) - LaurentPoly::lambda() - LaurentPoly(1);
  const LaurentBivariate r({-rhs, 0, 1});
  const GenusReport g = genus_report(r);
  EXPECT_EQ(g.finite, 3);
  EXPECT_EQ(g.at_infinity.ramification(), 1);
  EXPECT_EQ(g.genus, 1);
}

TEST(Branches, SheetsAreAccountedForAtBothEnds) {
  for (const auto& v : kTabulated) {
    const CoefficientArray p = sample_for(v, 7, 10);
    const LaurentBivariate r = spectral_function(p, v);
    for (auto at : {BranchLocation::kZero, BranchLocation::kInfinity}) {
      const BranchData b = newton_branches(r, at);
      EXPECT_EQ(b.sheets(), 4) << v.describe();
      EXPECT_TRUE(b.simple()) << v.describe();
    }
  }
}

TEST(Genus, TabulatedValues) {
  struct Case {
    LaxVariant v;
    int n;
    int genus;
  };
  const std::vector<Case> cases{{LaxVariant::dented(1), 5, 6},       {LaxVariant::dented(1), 7, 9},
                                {LaxVariant::dented(1), 9, 11},      {LaxVariant::dented(2), 5, 6},
                                {LaxVariant::dented(2), 7, 9},       {LaxVariant::short_diagonal(), 5, 6},
                                {LaxVariant::short_diagonal(), 7, 9}, {LaxVariant::corrugated(), 5, 4},
                                {LaxVariant::corrugated(), 7, 6},    {LaxVariant::corrugated(), 9, 6}};
  for (const auto& c : cases) {
    const CoefficientArray p = sample_for(c.v, c.n, 11);
    EXPECT_EQ(genus(spectral_function(p, c.v)), c.genus) << c.v.describe() << " n=" << c.n;
  }
}

TEST(Genus, FiniteBranchCountIsThreeN) {
  for (int n : {5, 7}) {
    const CoefficientArray p = random_generic_polygon(3, n, 12);
    EXPECT_EQ(finite_branch_count(spectral_function(p, LaxVariant::dented(1))), 3 * n);
  }
}

TEST(Genus, CorrugatedInvariantCountPlusGenusIsTwoN) {
  for (int n : {5, 7, 9}) {
    const CoefficientArray p = random_corrugated_polygon(3, n, 13);
    const LaurentBivariate r = spectral_function(p, LaxVariant::corrugated());
    const InvariantSet inv = extract_invariants(r, LaxVariant::corrugated(), n);
    EXPECT_EQ(static_cast<int>(inv.count()) + genus(r), 2 * n) << n;
  }
}

TEST(Normalizations, TildeIsARescaledDentedFunction) {
  for (int d = 3; d <= 4; ++d) {
    const CoefficientArray p = random_generic_polygon(d, 7, 14);
    for (int m = 1; m <= d - 1; ++m)
      EXPECT_EQ(spectral_function(p, LaxVariant::tilde(m)), rescale_k(spectral_function(p, LaxVariant::dented(m)), product(p, d)));
  }
}

TEST(Normalizations, ReciprocalIsAnInvolution) {
  // A^{-1} (A^{-1} T^{-1})^{-1} = T.
  const CoefficientArray p = random_generic_polygon(3, 7, 15);
  const LaurentBivariate r = spectral_function(p, LaxVariant::dented(1));
  EXPECT_EQ(reciprocal_spectral(reciprocal_spectral(r, 2), 2), r);
  EXPECT_EQ(code_of([] { reciprocal_spectral(LaurentBivariate({LaurentPoly(1) + LaurentPoly::lambda(), 0, 1}), 1); }),
            ErrorCode::kDivisionByZero);
}

TEST(Normalizations, ReciprocalMatchesTheInverseMatrix) {
  const CoefficientArray p = random_generic_polygon(3, 5, 15);
  const Scalar a(3, 2), lambda(2), k(-1, 3);
  QMatrix t = QMatrix::identity(4);
  for (long j = 0; j < p.n; ++j) t = adjugate_inverse(numeric_display(p, j, LaxVariant::dented(1), lambda)) * t;
  QMatrix inv = adjugate_inverse(t);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) inv(r, c) /= a;
  for (std::size_t i = 0; i < 4; ++i) inv(i, i) -= k;
  const LaurentBivariate rec = reciprocal_spectral(spectral_function(p, LaxVariant::dented(1)), a);
  EXPECT_EQ(rec.evaluate(k, lambda), oracle::cofactor_det(inv));
}

TEST(Gauge, CorrugatedLaxBecomesTheTwoParameterDisplay) {
  for (int d = 3; d <= 4; ++d) {
    const CoefficientArray p = random_corrugated_polygon(d, 7, 16);
    const GstvGauge g = gauge_gstv(p);
    ASSERT_EQ(g.matrices.size(), 7u);
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(g.matrices[j], gstv_display(d, g.x[j], g.y[j]));
    EXPECT_EQ(gstv_spectral_function(g), reciprocal_spectral(spectral_function(p, LaxVariant::dented(1)), product(p, d)));
  }
}

TEST(Gauge, UnitCoefficientsGiveUnitParameters) {
  for (int d = 3; d <= 4; ++d) {
    std::vector<Vec> rows(5, Vec(static_cast<std::size_t>(d), Scalar(0)));
    for (auto& row : rows) row.front() = row.back() = 1;
    const GstvGauge g = gauge_gstv(make_coefficients(d, 5, rows));
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_EQ(g.x[j], 1);
      EXPECT_EQ(g.y[j], 1);
    }
  }
}

TEST(Gauge, DisplaySignDependsOnParity) {
  EXPECT_EQ(gstv_display(3, 2, 5)(0, 3), LaurentPoly(-3));
  EXPECT_EQ(gstv_display(4, 2, 5)(0, 4), LaurentPoly(7));
  EXPECT_EQ(gstv_display(4, 2, 5)(1, 0), LaurentPoly::lambda());
}

TEST(Gauge, Preconditions) {
  EXPECT_EQ(code_of([] { gauge_gstv(random_generic_polygon(3, 7, 1)); }), ErrorCode::kVariantMismatch);
  std::vector<Vec> rows(5, Vec{1, 0, 1});
  rows[2][2] = 0;
  EXPECT_EQ(code_of([&] { gauge_gstv(make_coefficients(3, 5, rows)); }), ErrorCode::kDivisionByZero);
}

TEST(Lax, TildeIsADiagonalGaugeOfTheDentedMatrix) {
  for (int d = 3; d <= 4; ++d) {
    const CoefficientArray p = random_generic_polygon(d, 7, 17);
    auto h = [&](long j) {
      LaurentMatrix out = LaurentMatrix::identity(static_cast<std::size_t>(d + 1));
      for (int i = 1; i <= d; ++i) out(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = LaurentPoly(p.coeff(j, i));
      return out;
    };
    auto h_inv = [&](long j) {
      LaurentMatrix out = LaurentMatrix::identity(static_cast<std::size_t>(d + 1));
      for (int i = 1; i <= d; ++i)
        out(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = LaurentPoly(Scalar(1 / p.coeff(j, i)));
      return out;
    };
    for (int m = 1; m <= d - 1; ++m)
      for (long j = 0; j < p.n; ++j) {
        const LaurentMatrix rhs = (h_inv(j + 1) * lax_matrix(p, j, LaxVariant::dented(m)) * h(j)).scaled(LaurentPoly(p.coeff(j + 1, d)));
        EXPECT_EQ(lax_matrix(p, j, LaxVariant::tilde(m)), rhs) << "d=" << d << " m=" << m << " j=" << j;
      }
  }
}

TEST(Branches, DentedOneHasACubeRootCycleGovernedByG) {
  // At lambda -> infinity three sheets form one cycle k ~ C lambda^{-n/3}
  // with C^3 G_q = 1.
  const int n = 7;
  const CoefficientArray p = random_generic_polygon(3, n, 18);
  const LaurentBivariate r = spectral_function(p, LaxVariant::dented(1));
  const Scalar g = extract_invariants(r, LaxVariant::dented(1), n).value("G", n / 2);
  const BranchData inf = newton_branches(r, BranchLocation::kInfinity);
  bool found = false;
  for (const auto& c : inf.cycles) {
    if (c.e != 3) continue;
    found = true;
    EXPECT_EQ(c.multiplicity, 1);
    EXPECT_EQ(c.exponent, Scalar(-n, 3));
    ASSERT_EQ(c.leading.degree(), 3);
    EXPECT_EQ(c.leading.coeff(1), 0);
    EXPECT_EQ(c.leading.coeff(2), 0);
    EXPECT_EQ(-c.leading.coeff(0) / c.leading.coeff(3), 1 / g);
  }
  EXPECT_TRUE(found);
}
