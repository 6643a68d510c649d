#include <gtest/gtest.h>

#include "dhga/dhga.hpp"

using namespace dhga;

namespace {

Matrix<Rational> quarter_turn() {
  Matrix<Rational> p = Matrix<Rational>::identity(4);
  p(1, 1) = 0;
  p(2, 2) = 0;
  p(1, 2) = 1;
  p(2, 1) = -1;
  return p;
}

}  // namespace

TEST(Lorentz, OrthogonalityAndDeterminant) {
  EXPECT_TRUE(is_orthogonal(quarter_turn()));
  EXPECT_TRUE(LorentzMatrix<Rational>::make(quarter_turn()).special());
  Matrix<Rational> flip = Matrix<Rational>::identity(4);
  flip(1, 1) = -1;
  EXPECT_TRUE(is_orthogonal(flip));
  EXPECT_FALSE(LorentzMatrix<Rational>::make(flip).special());
  Matrix<Rational> bad = Matrix<Rational>::identity(4);
  bad(0, 1) = 1;
  EXPECT_THROW(LorentzMatrix<Rational>::make(bad), Error);
}

TEST(Lorentz, InverseIsEtaTransposeEta) {
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = trial_rng(51, trial);
    auto P = random_lorentz(rng, 3 + trial % 5);
    EXPECT_EQ(P * P.inverse(), LorentzMatrix<Rational>::identity(P.n()));
  }
}

TEST(Lorentz, WorkedRotationAdjoint) {
  const Signature sig(3);
  auto s = classify_spin(ExactMV::one(sig) - make_blade(sig, {1, 2}));
  EXPECT_EQ(s.certificate, PinClass::Spin);
  EXPECT_EQ(s.norm, GaussRational(2));
  EXPECT_EQ(adjoint_matrix(s).matrix(), quarter_turn());
  EXPECT_EQ(conjugation_matrix(s).matrix(), quarter_turn().transpose());
}

TEST(Lorentz, OddReflectionAdjoint) {
  const Signature sig(3);
  auto s = classify_spin(ExactMV::generator(sig, 0));
  EXPECT_EQ(s.certificate, PinClass::PinMinusSpin);
  Matrix<Rational> expected = Matrix<Rational>::identity(4);
  for (int i = 1; i <= 3; ++i) expected(i, i) = -1;
  EXPECT_EQ(adjoint_matrix(s).matrix(), expected);
}

TEST(Lorentz, ClassifyRejectsNonGroupElements) {
  const Signature sig(3);
  EXPECT_THROW(classify_spin(ExactMV::one(sig) + ExactMV::generator(sig, 0)), Error);
  EXPECT_THROW(classify_spin(ExactMV::one(sig) + make_blade(sig, {0, 1, 2, 3}, GaussRational(2))), Error);
  EXPECT_THROW(classify_spin(make_blade(sig, {1}, GaussRational::i())), Error);
  EXPECT_THROW(classify_spin(ExactMV(sig)), Error);
}

TEST(Lorentz, HomomorphismAndSignCollapse) {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng = trial_rng(52, trial);
    const int n = 3 + trial % 3;
    auto a = random_spin_element(rng, n, Parity::Even);
    auto b = random_spin_element(rng, n, n % 2 ? Parity::Odd : Parity::Even);
    auto ab = classify_spin(a.value * b.value);
    EXPECT_EQ(adjoint_matrix(ab), adjoint_matrix(a) * adjoint_matrix(b));
    EXPECT_EQ(adjoint_matrix(classify_spin(-a.value)), adjoint_matrix(a));
    EXPECT_TRUE(adjoint_matrix(a).special());
  }
}

TEST(Lorentz, LiftRoundTripExact) {
  for (int trial = 0; trial < 40; ++trial) {
    Rng rng = trial_rng(53, trial);
    const int n = 3 + trial % 5;
    std::optional<int> det;
    if (n % 2 == 0) det = 1;
    auto P = random_lorentz(rng, n, det);
    auto S = lift(P);
    EXPECT_EQ(adjoint_matrix(S), P);
    EXPECT_GT(S.value.terms().begin()->second.re, 0);
  }
}

TEST(Lorentz, LiftOfWorkedRotationNeedsIrrationalNormalizer) {
  auto P = LorentzMatrix<Rational>::make(quarter_turn());
  auto S = lift(P);
  EXPECT_EQ(adjoint_matrix(S), P);
  EXPECT_FALSE(S.is_unit());
  EXPECT_THROW(lift_unit(P), Error);
  auto f = lift(LorentzMatrix<double>::make(to_double(quarter_turn())));
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(f.value.coeff(Blade::identity()).real(), r, 1e-12);
  EXPECT_NEAR(f.value.coeff(Blade::from_indices({1, 2})).real(), -r, 1e-12);
}

TEST(Lorentz, BoostLiftKeepsTrackedNorm) {
  auto P = LorentzMatrix<Rational>::make(plane_boost(3, 1, Rational(5, 3), Rational(4, 3)));
  auto S = lift(P);
  EXPECT_EQ(adjoint_matrix(S), P);
  EXPECT_EQ(S.value * S.value.reversion(), scale(ExactMV::one(Signature(3)), S.norm));
  EXPECT_THROW(lift_unit(P), Error);
  auto Q = LorentzMatrix<Rational>::make(plane_boost(3, 1, Rational(17, 8), Rational(15, 8)));
  auto U = lift_unit(Q);
  EXPECT_TRUE(U.is_unit());
  EXPECT_EQ(U.value, parse_mv("5/4 + 3/4 e01", Signature(3)));
}

TEST(Lorentz, ScalarKernelOnSpin) {
  for (int n = 3; n <= 6; ++n) {
    const Signature sig(n);
    EXPECT_TRUE(kernel_check(classify_spin(ExactMV::one(sig))));
    EXPECT_TRUE(kernel_check(classify_spin(scale(ExactMV::one(sig), GaussRational(-3)))));
  }
}

TEST(Lorentz, PseudoscalarLiesInPinKernelForEvenN) {
  for (int n : {4, 6}) {
    const Signature sig(n);
    ExactMV omega = ExactMV::basis(sig, Blade(sig.full_mask()));
    auto s = classify_spin(omega);
    EXPECT_EQ(s.parity, Parity::Odd);
    EXPECT_EQ(adjoint_matrix(s), LorentzMatrix<Rational>::identity(n));
    EXPECT_FALSE(kernel_check(s));
  }
}

TEST(Lorentz, FloatAgreesWithExact) {
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = trial_rng(54, trial);
    const int n = 3 + trial % 3;
    auto s = random_spin_element(rng, n, Parity::Even);
    auto f = to_float_unit(s);
    EXPECT_LE(max_abs_difference(adjoint_matrix(f).matrix(), to_double(adjoint_matrix(s).matrix())), 1e-10);
  }
}
