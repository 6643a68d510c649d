#include <gtest/gtest.h>

#include "dhga/dhga.hpp"

using namespace dhga;

TEST(SpinorIdeal, IdempotentPropertiesForEverySpec) {
  for (const auto& spec : all_specs()) {
    auto rep = check_idempotent_props(build_idempotent(spec));
    for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << spec.n << " " << c.name;
    EXPECT_NO_THROW(rep.require());
  }
}

TEST(SpinorIdeal, IdempotentTermCounts) {
  EXPECT_EQ(build_idempotent(IdempotentSpec::make(3, SpinorKind::Spinor)).value.terms().size(), 4u);
  EXPECT_EQ(build_idempotent(IdempotentSpec::make(4, SpinorKind::SemiSpinor)).value.terms().size(), 8u);
  EXPECT_EQ(build_idempotent(IdempotentSpec::make(4, SpinorKind::DoubleSpinor)).value.terms().size(), 4u);
}

TEST(SpinorIdeal, SpinorIdempotentExpansion) {
  const Signature sig(3);
  const auto t = build_idempotent(IdempotentSpec::make(3, SpinorKind::Spinor)).value;
  EXPECT_EQ(t, parse_mv("1/4 + 1/4 e0 + 1/4i e12 + 1/4i e012", sig));
}

TEST(SpinorIdeal, SpecDimensions) {
  auto s = IdempotentSpec::make(7, SpinorKind::Spinor);
  EXPECT_EQ(s.d, 4);
  EXPECT_EQ(s.dprime, 3);
  auto semi = IdempotentSpec::make(6, SpinorKind::SemiSpinor);
  EXPECT_EQ(semi.dprime, 3);
  auto dbl = IdempotentSpec::make(6, SpinorKind::DoubleSpinor);
  EXPECT_EQ(dbl.dprime, 2);
  EXPECT_THROW(IdempotentSpec::make(4, SpinorKind::Spinor), Error);
  EXPECT_THROW(IdempotentSpec::make(5, SpinorKind::SemiSpinor), Error);
  EXPECT_EQ(all_specs().size(), 7u);
}

TEST(SpinorIdeal, LeftIdealIsClosed) {
  for (const auto& spec : all_specs()) {
    const auto t = build_idempotent(spec).value;
    Rng rng = trial_rng(61, std::uint64_t(spec.n));
    ExactMV U = random_mv(rng, spec.signature(), 6, true);
    EXPECT_EQ(U * t * t, U * t);
  }
}

TEST(SpinorIdeal, InjectivityFullRank) {
  for (const auto& spec : all_specs()) {
    auto rep = verify_injectivity(build_idempotent(spec));
    EXPECT_TRUE(rep.full_rank()) << spec.n;
    EXPECT_EQ(rep.columns, spec.qprime().even_dimension());
  }
}

TEST(SpinorIdeal, PsiRoundTrip) {
  for (const auto& spec : all_specs(6)) {
    const auto t = build_idempotent(spec);
    const auto basis = spec.qprime().even_basis();
    Rng rng = trial_rng(62, std::uint64_t(spec.n));
    ExactMV Psi(spec.signature());
    for (int k = 0; k < 5; ++k)
      Psi.add_term(basis[uniform_int(rng, 0, int(basis.size()) - 1)], GaussRational(random_rational(rng, true)));
    EXPECT_EQ(Psi_from_psi(psi_from_Psi(Psi, t), t), Psi);
  }
}

TEST(SpinorIdeal, PsiFromPsiRejectsOutsideIdeal) {
  const auto t = build_idempotent(IdempotentSpec::make(3, SpinorKind::Spinor));
  EXPECT_THROW(Psi_from_psi(make_blade(Signature(3), {1}), t), Error);
  EXPECT_THROW(psi_from_Psi(make_blade(Signature(3), {1}), t), Error);
}

TEST(SpinorIdeal, DecompositionWorkedExample) {
  const Signature sig(5);
  ExactMV S = parse_mv("e + e12 + e45 + e1234 + e012345", sig);
  auto dec = decompose_S(S, QPrimeSpec::make(5, SpinorKind::Spinor));
  EXPECT_EQ(dec.S0, parse_mv("e + e12", sig));
  ASSERT_NE(dec.find({4}), nullptr);
  EXPECT_EQ(dec.find({4})->coeff, parse_mv("-e5 + e123 - e01235", sig));
  EXPECT_EQ(dec.reassemble(), S);
}

TEST(SpinorIdeal, DecompositionRejectsMixedParity) {
  const Signature sig(5);
  EXPECT_THROW(decompose_S(parse_mv("e + e4", sig), QPrimeSpec::make(5, SpinorKind::Spinor)), Error);
}

TEST(SpinorIdeal, WavefunctionTransformIntertwines) {
  for (const auto& spec : all_specs()) {
    const auto q = spec.qprime();
    const auto t = build_idempotent(spec).value;
    for (int trial = 0; trial < 4; ++trial) {
      Rng rng = trial_rng(63, std::uint64_t(spec.n * 10 + trial));
      const Parity parity = spec.n % 2 == 1 && trial % 2 ? Parity::Odd : Parity::Even;
      auto S = random_spin_element(rng, spec.n, parity);
      FieldMV Psi = random_Psi(rng, spec);
      FieldMV hat = transform_wavefunction(S, Psi, q);
      EXPECT_EQ(hat * t, S.value * Psi * t);
      EXPECT_TRUE(hat.in_qprime_even(q));
    }
  }
}
