#include <gtest/gtest.h>

#include <random>

#include "hecke/cyclotomic.hpp"
#include "hecke/matrix.hpp"
#include "hecke/scalar.hpp"

using namespace hecke;

namespace {

Scalar Q(long k = 1) { return Scalar::q(k); }

TEST(Rational, ParsePrint) {
  EXPECT_EQ(rat_to_string(rat(-3, 2)), "-3/2");
  EXPECT_EQ(rat_to_string(rat(4, 2)), "2");
  EXPECT_EQ(rat_from_string("-3/2"), rat(-3, 2));
  EXPECT_THROW(rat_from_string("1/0"), Error);
}

TEST(Cyclotomic, EmbedExamples) {
  EXPECT_EQ(cyc_embed(0, 4, 4), CycRat(1));
  EXPECT_EQ(cyc_embed(2, 4, 4), CycRat(-1));
  EXPECT_EQ(CycRat::zeta(3, 1) + CycRat::zeta(3, 2), CycRat(-1));
}

TEST(Cyclotomic, PhiVanishesAtZeta) {
  for (long m : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 12L}) {
    const auto& phi = detail::cyclotomic_polynomial(m);
    CycRat z = CycRat::zeta(m);
    CycRat acc(0);
    for (std::size_t i = phi.size(); i-- > 0;) acc = acc * z + CycRat(phi[i]);
    EXPECT_TRUE(acc.is_zero()) << "Phi_" << m << " at zeta_" << m;
  }
}

TEST(Cyclotomic, PromotionConsistency) {
  // zeta_3 seen inside Q(zeta_6) and inside Q(zeta_12) agree.
  EXPECT_EQ(CycRat::zeta(3).promoted(6), CycRat::zeta(6, 2));
  EXPECT_EQ(CycRat::zeta(3).promoted(12), CycRat::zeta(12, 4));
  EXPECT_EQ(CycRat::zeta(4) * CycRat::zeta(4), CycRat(-1));
  EXPECT_EQ(CycRat::zeta(2), CycRat(-1));
  // Mixed-order product lands in the lcm field: zeta_4 * zeta_3 = zeta_12^7.
  EXPECT_EQ(CycRat::zeta(4) * CycRat::zeta(3), CycRat::zeta(12, 7));
}

TEST(Cyclotomic, InverseRoundTrip) {
  CycRat a = CycRat::zeta(5, 2) + CycRat(rat(1, 3));
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_THROW(CycRat(0).inverse(), Error);
}

TEST(Scalar, CanonicalReductionExamples) {
  // (q - q^-1) * (1 - q^-2)^-1 = q
  Scalar lhs = (Q(1) - Q(-1)) * (Scalar::one() - Q(-2)).inverse();
  EXPECT_EQ(lhs, Q(1));
  // (q^2 - 1)/(q - 1) = q + 1
  EXPECT_EQ((Q(2) - Scalar::one()) / (Q(1) - Scalar::one()), Q(1) + Scalar::one());
}

TEST(Scalar, CanonicalInvariants) {
  Scalar s = (Q(3) + Q(-5)) / (Q(2) + Scalar(rat(1, 2)));
  // den monic with nonzero constant term; num coprime to den.
  EXPECT_TRUE(s.den().lead().is_one());
  EXPECT_FALSE(s.den().coeff(0).is_zero());
  EXPECT_TRUE(qp_gcd(s.num(), s.den()).is_one() || s.num().is_zero());
  // Zero has the unique representation (0, 1, 0).
  Scalar z = s - s;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.shift(), 0);
  EXPECT_TRUE(z.den().is_one());
}

TEST(Scalar, SubstituteQ) {
  // [2]_q = q + q^-1 vanishes at q = zeta_4.
  Scalar two_q = Q(1) + Q(-1);
  EXPECT_TRUE(two_q.substitute_q(CycRat::zeta(4)).is_zero());
  EXPECT_EQ(two_q.substitute_q(CycRat(1)), CycRat(2));
  // Reduced seminormal coefficient (q - q^-1)/(1 - q^-2) = q is regular at q = 1.
  Scalar coeff = (Q(1) - Q(-1)) / (Scalar::one() - Q(-2));
  EXPECT_EQ(coeff.substitute_q(CycRat(1)), CycRat(1));
  // 1/(q - 1) has a genuine pole at q = 1.
  EXPECT_THROW((Scalar::one() / (Q(1) - Scalar::one())).substitute_q(CycRat(1)), Error);
}

TEST(Scalar, PrintParseRoundTripExamples) {
  EXPECT_EQ(Q(1).to_string(), "q");
  EXPECT_EQ((Q(1) - Q(-1)).to_string(), "q - q^-1");
  EXPECT_EQ(Scalar(rat(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ(parse_scalar("q - q^-1"), Q(1) - Q(-1));
  EXPECT_EQ(parse_scalar("(q^2 - 1)/(q^2 + 1)"), (Q(2) - Scalar::one()) / (Q(2) + Scalar::one()));
  EXPECT_EQ(parse_scalar("z + z^2", 3), Scalar(CycRat(-1)));
  EXPECT_EQ(parse_scalar("-1"), Scalar(-1));
  EXPECT_EQ(parse_scalar("1/2*q^2"), Scalar(rat(1, 2)) * Q(2));
  EXPECT_THROW(parse_scalar("q +"), Error);
  EXPECT_THROW(parse_scalar("(q"), Error);
}

Scalar random_scalar(std::mt19937& rng, long zeta_order) {
  std::uniform_int_distribution<int> coin(0, 3), cdist(-4, 4), edist(0, 3);
  auto random_poly = [&]() {
    std::vector<CycRat> c;
    int deg = edist(rng);
    for (int i = 0; i <= deg; ++i) {
      CycRat v(cdist(rng));
      if (coin(rng) == 0) v = v + CycRat::zeta(zeta_order, 1) * CycRat(cdist(rng));
      c.push_back(v);
    }
    return QPoly(std::move(c));
  };
  QPoly num = random_poly();
  QPoly den;
  do {
    den = random_poly();
  } while (den.is_zero());
  return Scalar(num, den, cdist(rng));
}

TEST(Scalar, FieldAxiomsRandomized) {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 40; ++trial) {
    Scalar a = random_scalar(rng, 4), b = random_scalar(rng, 4), c = random_scalar(rng, 4);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + Scalar::zero(), a);
    EXPECT_EQ(a * Scalar::one(), a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar::one());
    // Print/parse round trip on the same values.
    EXPECT_EQ(parse_scalar(a.to_string(), 4), a);
  }
}

TEST(Matrix, RankNullspaceInverse) {
  // [[1, q], [q^-1, 1]] has determinant 0: rank 1, nullspace dimension 1.
  Matrix m(2, 2);
  m.at(0, 0) = Scalar::one();
  m.at(0, 1) = Q(1);
  m.at(1, 0) = Q(-1);
  m.at(1, 1) = Scalar::one();
  EXPECT_EQ(m.rank(), 1);
  auto ns = m.nullspace();
  ASSERT_EQ(ns.size(), 1u);
  // Check the nullspace vector really is killed.
  for (long i = 0; i < 2; ++i) {
    Scalar acc = m.at(i, 0) * ns[0][0] + m.at(i, 1) * ns[0][1];
    EXPECT_TRUE(acc.is_zero());
  }

  Matrix a(2, 2);
  a.at(0, 0) = Q(1);
  a.at(0, 1) = Scalar::one();
  a.at(1, 0) = Scalar::zero();
  a.at(1, 1) = Q(-1);
  Matrix inv = a.inverse();
  EXPECT_EQ(a * inv, Matrix::identity(2));
  EXPECT_THROW(m.inverse(), Error);
}

TEST(Matrix, SolveAndKron) {
  Matrix a(3, 2);
  a.at(0, 0) = Scalar::one();
  a.at(1, 1) = Scalar::one();
  a.at(2, 0) = Q(1);
  Matrix b(3, 1);
  b.at(0, 0) = Q(2);
  b.at(1, 0) = Scalar::one();
  b.at(2, 0) = Q(3);
  auto x = a.solve(b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, b);
  b.at(2, 0) = Q(5);
  EXPECT_FALSE(a.solve(b).has_value());

  Matrix id2 = Matrix::identity(2);
  EXPECT_EQ(kron(id2, id2), Matrix::identity(4));
}

TEST(Matrix, CommutantOfDistinctDiagonalIsDiagonal) {
  // diag(q, -q^-1) has distinct eigenvalues, so its commutant is the
  // diagonal matrices: dimension 2.
  Matrix d = Matrix::diagonal({Q(1), -Q(-1)});
  EXPECT_EQ(commutant_dimension({d}), 2);
  // The full matrix algebra: commutant of the identity alone is everything.
  EXPECT_EQ(commutant_dimension({Matrix::identity(2)}), 4);
}

}  // namespace
