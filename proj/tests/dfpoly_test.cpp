#include "polyb/dfpoly.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

#include "polyb/pistols.hpp"
#include "polyb/polybernoulli.hpp"

using polyb::Exponent;
using polyb::Integer;
using polyb::MultiPoly;
using polyb::UniPoly;

namespace {

MultiPoly random_poly(std::mt19937& rng, int terms = 6, unsigned max_exp = 4) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<long> coeff(-20, 20);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) p.add_term({exp(rng), exp(rng), exp(rng)}, coeff(rng));
  return p;
}

const std::array<std::array<int, 3>, 6> kPermutations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

TEST(MultiPoly, MultiplicationBasics) {
  std::mt19937 rng(7);
  const auto a = random_poly(rng);
  EXPECT_TRUE(polyb::mp_mul(a, MultiPoly()).is_zero());
  EXPECT_EQ(polyb::mp_mul(a, MultiPoly::constant(1)), a);

  const auto product = (MultiPoly::x() + MultiPoly::z()) * (MultiPoly::y() + MultiPoly::z());
  MultiPoly expected;
  expected.add_term({1, 1, 0}, 1);
  expected.add_term({1, 0, 1}, 1);
  expected.add_term({0, 1, 1}, 1);
  expected.add_term({0, 0, 2}, 1);
  EXPECT_EQ(product, expected);
}

TEST(MultiPoly, MultiplicationIsCommutativeAndMatchesEvaluation) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> point(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    const auto ab = polyb::mp_mul(a, b);
    EXPECT_EQ(ab, polyb::mp_mul(b, a));
    const Integer x = point(rng), y = point(rng), z = point(rng);
    EXPECT_EQ(polyb::mp_eval(ab, x, y, z), polyb::mp_eval(a, x, y, z) * polyb::mp_eval(b, x, y, z));
  }
}

TEST(MultiPoly, CancellationLeavesNoZeroTerms) {
  auto p = MultiPoly::x() - MultiPoly::x();
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, MultiPoly());
}

TEST(MultiPoly, ShiftZ) {
  const auto z2 = MultiPoly::monomial(1, {0, 0, 2});
  MultiPoly expected;
  expected.add_term({0, 0, 2}, 1);
  expected.add_term({0, 0, 1}, 2);
  expected.add_term({0, 0, 0}, 1);
  EXPECT_EQ(polyb::mp_shift_z(z2), expected);
  EXPECT_EQ(polyb::mp_shift_z(MultiPoly::constant(9)), MultiPoly::constant(9));
}

TEST(MultiPoly, ShiftZAgreesWithEvaluation) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> point(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng, 8, 6);
    const auto shifted = polyb::mp_shift_z(a);
    const Integer x = point(rng), y = point(rng), z = point(rng);
    EXPECT_EQ(polyb::mp_eval(shifted, x, y, 0), polyb::mp_eval(a, x, y, 1));
    EXPECT_EQ(polyb::mp_eval(shifted, x, y, z), polyb::mp_eval(a, x, y, z + 1));
  }
}

TEST(MultiPoly, TermLinesRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 10, 8);
    EXPECT_EQ(polyb::parse_term_lines(polyb::to_term_lines(a)), a);
  }
  EXPECT_THROW(polyb::parse_term_lines("3 1 2\n"), polyb::DomainError);
  EXPECT_THROW(polyb::parse_term_lines("3x 1 2 3\n"), polyb::DomainError);
}

TEST(MultiPoly, DisplayString) {
  EXPECT_EQ(polyb::to_display_string(polyb::dumont_foata_poly(4)),
            "x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2");
  EXPECT_EQ(polyb::to_display_string(MultiPoly()), "0");
  EXPECT_EQ(polyb::to_display_string(MultiPoly::constant(-3) + MultiPoly::z()), "z - 3");
}

TEST(MultiPoly, EvalExamples) {
  EXPECT_EQ(polyb::mp_eval(polyb::dumont_foata_poly(4), 1, 1, 1), 3);
  EXPECT_EQ(polyb::mp_eval(MultiPoly(), 5, -2, 7), 0);
  EXPECT_EQ(polyb::mp_eval(polyb::dumont_foata_poly(6), 1, 1, 1), 17);
}

TEST(FPolynomial, InitialValues) {
  EXPECT_EQ(polyb::f_polynomial(2), MultiPoly::constant(1));
  EXPECT_TRUE(polyb::f_polynomial(1).is_zero());
  EXPECT_TRUE(polyb::f_polynomial(3).is_zero());
  EXPECT_TRUE(polyb::f_polynomial(9).is_zero());
  EXPECT_THROW(polyb::f_polynomial(0), polyb::DomainError);
  MultiPoly f4;
  f4.add_term({1, 1, 0}, 1);
  f4.add_term({0, 1, 1}, 1);
  f4.add_term({1, 0, 1}, 1);
  EXPECT_EQ(polyb::f_polynomial(4), f4);
}

TEST(DumontFoataPoly, Conventions) {
  EXPECT_EQ(polyb::dumont_foata_poly(0), MultiPoly::constant(1));
  EXPECT_TRUE(polyb::dumont_foata_poly(5).is_zero());
  const auto xyz = MultiPoly::monomial(1, {1, 1, 1});
  const auto xy_yz_zx = MultiPoly::monomial(1, {1, 1, 0}) + MultiPoly::monomial(1, {0, 1, 1}) +
                        MultiPoly::monomial(1, {1, 0, 1});
  EXPECT_EQ(polyb::dumont_foata_poly(4), xyz * xy_yz_zx);
}

TEST(DumontFoataPoly, ThreeRoutesAgree) {
  for (unsigned n = 0; n <= 12; n += 2) {
    const auto by_rec = polyb::dumont_foata_poly(n);
    EXPECT_EQ(polyb::dumont_foata_by_enumeration(n), by_rec) << n;
    EXPECT_EQ(polyb::specialize_xy_one(by_rec), polyb::gandhi_poly(n)) << n;
  }
}

TEST(DumontFoataPoly, SymmetricUnderAllPermutations) {
  for (unsigned n = 2; n <= 20; n += 2) {
    const auto g = polyb::dumont_foata_poly(n);
    const auto f = polyb::f_polynomial(n);
    for (const auto& perm : kPermutations) {
      EXPECT_EQ(polyb::mp_permute(g, perm), g) << n;
      EXPECT_EQ(polyb::mp_permute(f, perm), f) << n;
    }
  }
}

TEST(DumontFoataPoly, TotalDegree) {
  for (unsigned n = 2; n <= 20; n += 2) EXPECT_EQ(polyb::dumont_foata_poly(n).total_degree(), n + 1);
}

TEST(Gandhi, Examples) {
  EXPECT_EQ(polyb::gandhi_poly(0), UniPoly({1}));
  EXPECT_TRUE(polyb::gandhi_poly(1).is_zero());
  EXPECT_EQ(polyb::gandhi_poly(2), UniPoly({0, 1}));
  EXPECT_EQ(polyb::gandhi_poly(4), UniPoly({0, 1, 2}));
  EXPECT_EQ(polyb::gandhi_poly(4).eval(1), 3);
}

TEST(Gandhi, AtOneGivesGenocchi) {
  for (unsigned n = 0; n <= 30; n += 2) EXPECT_EQ(polyb::gandhi_poly(n).eval(1), polyb::genocchi(n)) << n;
  for (unsigned n = 1; n <= 15; n += 2) EXPECT_TRUE(polyb::gandhi_poly(n).is_zero());
}

TEST(UniPoly, ShiftMatchesEvaluation) {
  const UniPoly p({3, -2, 0, 5});
  for (long z = -3; z <= 3; ++z) EXPECT_EQ(p.shifted().eval(z), p.eval(z + 1));
}
