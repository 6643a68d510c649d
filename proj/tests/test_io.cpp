#include <gtest/gtest.h>

#include "dhga/dhga.hpp"

using namespace dhga;

TEST(Io, ParsesGrammarForms) {
  const Signature sig(3);
  EXPECT_EQ(parse_mv("e", sig), ExactMV::one(sig));
  EXPECT_EQ(parse_mv("3", sig), scale(ExactMV::one(sig), GaussRational(3)));
  EXPECT_EQ(parse_mv("e12", sig), make_blade(sig, {1, 2}));
  EXPECT_EQ(parse_mv("e0.1.2", sig), make_blade(sig, {0, 1, 2}));
  EXPECT_EQ(parse_mv("2/3*e1", sig), make_blade(sig, {1}, GaussRational(Rational(2, 3))));
  EXPECT_EQ(parse_mv("i e2", sig), make_blade(sig, {2}, GaussRational::i()));
  EXPECT_EQ(parse_mv("1/2i e2", sig), make_blade(sig, {2}, GaussRational(Rational(0), Rational(1, 2))));
  EXPECT_EQ(parse_mv("(1 - 2i)e03", sig), make_blade(sig, {0, 3}, GaussRational(Rational(1), Rational(-2))));
  EXPECT_EQ(parse_mv("e - e12", sig), ExactMV::one(sig) - make_blade(sig, {1, 2}));
  EXPECT_EQ(parse_mv("e21", sig), make_blade(sig, {1, 2}, -1));
  EXPECT_EQ(parse_mv("e11", sig), scale(ExactMV::one(sig), GaussRational(-1)));
}

TEST(Io, ParseErrorsCarryPosition) {
  const Signature sig(3);
  try {
    parse_mv("e1 + + e2", sig);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_mv("e1e2", sig), ParseError);
  EXPECT_THROW(parse_mv("e4", sig), ParseError);
  EXPECT_THROW(parse_mv("1/0 e1", sig), ParseError);
  EXPECT_THROW(parse_mv("", sig), ParseError);
}

TEST(Io, FormatParseRoundTrip) {
  for (int trial = 0; trial < 60; ++trial) {
    Rng rng = trial_rng(41, trial);
    const int n = 1 + trial % 7;
    ExactMV u = random_mv(rng, Signature(n), 8, true);
    EXPECT_EQ(parse_mv(format_mv(u), Signature(n)), u) << format_mv(u);
  }
}

TEST(Io, JsonRoundTrip) {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng = trial_rng(42, trial);
    const int n = 1 + trial % 7;
    ExactMV u = random_mv(rng, Signature(n), 8, true);
    EXPECT_EQ(mv_from_json(json::parse(mv_to_json(u).dump())), u);
    Polynomial p = random_polynomial(rng, n + 1, {0, n}, 3);
    EXPECT_EQ(poly_from_json(json::parse(poly_to_json(p).dump())), p);
  }
}

TEST(Io, MatrixJson) {
  Rng rng = trial_rng(43, 0);
  auto P = random_lorentz(rng, 4);
  auto j = matrix_to_json(P.matrix());
  EXPECT_FALSE(matrix_json_is_float(j));
  EXPECT_EQ(matrix_from_json_exact(j), P.matrix());
  auto f = matrix_to_json(to_double(P.matrix()));
  EXPECT_TRUE(matrix_json_is_float(f));
  EXPECT_LE(max_abs_difference(matrix_from_json_float(f), to_double(P.matrix())), 1e-15);
  EXPECT_THROW(matrix_from_json_exact(json{{"n", 2}, {"rows", json::array()}}), Error);
}

TEST(Io, JsonWireFormat) {
  const Signature sig(3);
  json j = mv_to_json(make_blade(sig, {1, 2}, GaussRational(Rational(-1, 2))));
  EXPECT_EQ(j.at("sig"), 3);
  EXPECT_EQ(j.at("terms")[0].at("blade"), json::array({1, 2}));
  EXPECT_EQ(j.at("terms")[0].at("re"), "-1/2");
  EXPECT_EQ(j.at("terms")[0].at("im"), "0");
}
