#include <gtest/gtest.h>

#include "dhga/dhga.hpp"

using namespace dhga;

namespace {

ExactMV rnd(Rng& rng, int n, bool complex = true) { return random_mv(rng, Signature(n), 6, complex); }

}  // namespace

TEST(Multivector, GeneratorRelations) {
  for (int n = 1; n <= 7; ++n) {
    const Signature sig(n);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        auto ea = ExactMV::generator(sig, a);
        auto eb = ExactMV::generator(sig, b);
        ExactMV expected = a == b ? scale(ExactMV::one(sig), GaussRational(2 * sig.metric(a))) : ExactMV(sig);
        EXPECT_EQ(ea * eb + eb * ea, expected);
      }
  }
}

TEST(Multivector, RingAxiomsOnRandomElements) {
  for (int trial = 0; trial < 40; ++trial) {
    Rng rng = trial_rng(11, trial);
    const int n = 1 + trial % 7;
    ExactMV u = rnd(rng, n), v = rnd(rng, n), w = rnd(rng, n);
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_EQ(u * (v + w), u * v + u * w);
    EXPECT_EQ((u + v) * w, u * w + v * w);
    EXPECT_EQ(u - u, ExactMV(Signature(n)));
  }
}

TEST(Multivector, InvolutionsAreAntiOrAutomorphisms) {
  for (int trial = 0; trial < 40; ++trial) {
    Rng rng = trial_rng(12, trial);
    const int n = 1 + trial % 7;
    ExactMV u = rnd(rng, n), v = rnd(rng, n);
    EXPECT_EQ((u * v).reversion(), v.reversion() * u.reversion());
    EXPECT_EQ((u * v).grade_involution(), u.grade_involution() * v.grade_involution());
    EXPECT_EQ((u * v).hermitian_conjugate(), v.hermitian_conjugate() * u.hermitian_conjugate());
    EXPECT_EQ(u.reversion().reversion(), u);
    EXPECT_EQ(u.hermitian_conjugate().hermitian_conjugate(), u);
  }
}

TEST(Multivector, ReversionSigns) {
  const Signature sig(3);
  EXPECT_EQ(make_blade(sig, {1, 2}).reversion(), make_blade(sig, {1, 2}, -1));
  EXPECT_EQ(make_blade(sig, {0}).reversion(), make_blade(sig, {0}));
  EXPECT_EQ(make_blade(sig, {0, 1, 2}).reversion(), make_blade(sig, {0, 1, 2}, -1));
  EXPECT_EQ(make_blade(sig, {0, 1, 2, 3}).reversion(), make_blade(sig, {0, 1, 2, 3}));
}

TEST(Multivector, HermitianConjugateOfGenerators) {
  const Signature sig(4);
  for (int mu = 0; mu <= 4; ++mu)
    EXPECT_EQ(ExactMV::generator(sig, mu).hermitian_conjugate(),
              scale(ExactMV::generator(sig, mu), GaussRational(sig.metric(mu))));
  ExactMV ie1 = make_blade(sig, {1}, GaussRational::i());
  EXPECT_EQ(ie1.hermitian_conjugate(), ie1);
  ExactMV ie01 = make_blade(sig, {0, 1}, GaussRational::i());
  EXPECT_EQ(ie01.hermitian_conjugate(), scale(ie01, GaussRational(-1)));
}

TEST(Multivector, ParityParts) {
  Rng rng = trial_rng(13, 0);
  ExactMV u = rnd(rng, 5);
  EXPECT_EQ(u.even_part() + u.odd_part(), u);
  EXPECT_TRUE(u.even_part().is_even());
  EXPECT_TRUE(u.odd_part().is_odd());
  EXPECT_EQ(u.grade_involution(), u.even_part() - u.odd_part());
}

TEST(Multivector, InverseOfKnownElements) {
  const Signature sig(3);
  EXPECT_EQ(inverse(make_blade(sig, {0})), make_blade(sig, {0}));
  EXPECT_EQ(inverse(make_blade(sig, {1, 2})), make_blade(sig, {1, 2}, -1));
  ExactMV a = ExactMV::one(sig) - make_blade(sig, {1, 2});
  ExactMV b = ExactMV::one(sig) + make_blade(sig, {1, 2});
  EXPECT_EQ(a * b, scale(ExactMV::one(sig), GaussRational(2)));
  EXPECT_EQ(inverse(a), scale(b, GaussRational(Rational(1, 2))));
  ExactMV idem = scale(ExactMV::one(sig) + make_blade(sig, {0}), GaussRational(Rational(1, 2)));
  EXPECT_THROW(inverse(idem), Error);
}

TEST(Multivector, FloatInverseOfNormalizedRotor) {
  const Signature sig(3);
  const double r = 1 / std::sqrt(2.0);
  FloatMV s(sig), expected(sig);
  s.add_term(Blade::identity(), r);
  s.add_term(Blade::from_indices({1, 2}), -r);
  expected.add_term(Blade::identity(), r);
  expected.add_term(Blade::from_indices({1, 2}), r);
  EXPECT_TRUE(approx_equal(inverse(s), expected, 1e-12));
  EXPECT_TRUE(approx_equal(s.reversion(), expected, 1e-12));
}

TEST(Multivector, InverseIsTwoSidedOnRandomInvertibles) {
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng = trial_rng(14, trial);
    const int n = 1 + trial % 4;
    ExactMV u = rnd(rng, n);
    try {
      ExactMV v = inverse(u);
      EXPECT_EQ(u * v, ExactMV::one(Signature(n)));
      EXPECT_EQ(v * u, ExactMV::one(Signature(n)));
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(Multivector, SignatureMismatchThrows) {
  EXPECT_THROW(ExactMV::one(Signature(3)) + ExactMV::one(Signature(4)), Error);
  EXPECT_THROW(ExactMV::one(Signature(3)) * ExactMV::one(Signature(4)), Error);
}

TEST(Multivector, QPrimeMembership) {
  const auto q = QPrimeSpec::make(5, SpinorKind::Spinor);
  const Signature sig(5);
  EXPECT_EQ(q.generators, (std::vector<int>{0, 1, 2, 3, 5}));
  EXPECT_TRUE(make_blade(sig, {0, 5}).in_qprime_even(q));
  EXPECT_FALSE(make_blade(sig, {0, 4}).in_qprime_even(q));
  EXPECT_FALSE(make_blade(sig, {5}).in_qprime_even(q));
  EXPECT_EQ(q.even_basis().size(), q.even_dimension());
  EXPECT_EQ(QPrimeSpec::make(6, SpinorKind::DoubleSpinor).generators, (std::vector<int>{0, 1, 2, 3, 5, 6}));
  EXPECT_EQ(QPrimeSpec::make(6, SpinorKind::SemiSpinor).generators, (std::vector<int>{0, 1, 2, 3, 5}));
}
