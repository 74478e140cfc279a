#include <gtest/gtest.h>

#include <set>

#include "hecke/cyclotomic_algebra.hpp"

using namespace hecke;

namespace {

PlacedShape single_page(const Scalar& token, std::vector<long> outer) {
  return PlacedShape({PageRef{token, SkewShape(Partition(std::move(outer)), Partition())}});
}

TEST(Semisimplicity, GenericAndViolations) {
  EXPECT_TRUE(check_semisimple(generic_cyclotomic_spec(2, 2), 2).semisimple);
  EXPECT_TRUE(check_semisimple(generic_cyclotomic_spec(3, 3), 3).semisimple);

  CyclotomicSpec bad{2, {Scalar::one(), Scalar::q(2)}, std::nullopt};
  SemisimplicityCertificate cert = check_semisimple(bad, 2);
  EXPECT_FALSE(cert.semisimple);
  EXPECT_EQ(cert.condition, "parameter_ratio");
  EXPECT_EQ(cert.i, 2);
  EXPECT_EQ(cert.j, 1);
  EXPECT_EQ(cert.k, 1);

  // At a primitive fourth root of unity, q + q^-1 = 0.
  CyclotomicSpec spec_i = generic_cyclotomic_spec(1, 2);
  spec_i.q_value = CycRat::zeta(4, 1);
  SemisimplicityCertificate cert_i = check_semisimple(spec_i, 2);
  EXPECT_FALSE(cert_i.semisimple);
  EXPECT_EQ(cert_i.condition, "q_integer_vanishes");
  EXPECT_EQ(cert_i.k, 2);
}

TEST(Transport, CornerConditionAndRelations) {
  CyclotomicSpec r1{1, {Scalar::one()}, std::nullopt};
  TransportedModule m = transport_to_cyclotomic(build_module(single_page(Scalar::one(), {2, 1})), r1);
  EXPECT_EQ(m.T(1), Matrix::diagonal({Scalar::one(), Scalar::one()}));
  EXPECT_TRUE(m.relations.all_hold());
  EXPECT_TRUE(m.simple);

  CyclotomicSpec r2{2, {Scalar::one(), Scalar::q(3)}, std::nullopt};
  PlacedShape pair({PageRef{Scalar::one(), SkewShape(Partition({1}), Partition())},
                    PageRef{Scalar::q(3), SkewShape(Partition({1}), Partition())}});
  TransportedModule m2 = transport_to_cyclotomic(build_module(pair), r2);
  Matrix id = Matrix::identity(2);
  EXPECT_TRUE(((m2.T(1) - id) * (m2.T(1) - Scalar::q(3) * id)).is_zero());

  CyclotomicSpec wrong{1, {Scalar::q(4)}, std::nullopt};
  try {
    transport_to_cyclotomic(build_module(single_page(Scalar::one(), {2, 1})), wrong);
    FAIL() << "corner condition should fail";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::nw_condition_fails);
  }
}

TEST(JucysMurphy, WordsAndDiagonalAction) {
  auto words = jm_elements(3);
  EXPECT_EQ(words[0], (std::vector<long>{1}));
  EXPECT_EQ(words[1], (std::vector<long>{2, 1, 2}));
  EXPECT_EQ(words[2], (std::vector<long>{3, 2, 1, 2, 3}));

  CyclotomicSpec r1{1, {Scalar::q(3)}, std::nullopt};
  TransportedModule row = transport_to_cyclotomic(build_module(single_page(Scalar::q(3), {2})), r1);
  EXPECT_EQ(evaluate_word(row, jm_elements(2)[1]).at(0, 0), Scalar::q(5));

  CyclotomicSpec one{1, {Scalar::one()}, std::nullopt};
  TransportedModule hook = transport_to_cyclotomic(build_module(single_page(Scalar::one(), {2, 1})), one);
  for (long i = 1; i <= 3; ++i) {
    Matrix mi = evaluate_word(hook, jm_elements(3)[static_cast<std::size_t>(i - 1)]);
    EXPECT_TRUE(mi.is_diagonal());
    EXPECT_EQ(mi, hook.X(i));
  }
}

TEST(Inventory, CountsAndDimensionSums) {
  Inventory s3 = modules_inventory(generic_cyclotomic_spec(1, 3), 3);
  ASSERT_EQ(s3.entries.size(), 3u);
  std::multiset<long> dims;
  for (const auto& e : s3.entries) dims.insert(e.module.dim());
  EXPECT_EQ(dims, (std::multiset<long>{1, 1, 2}));
  EXPECT_EQ(s3.dim_square_sum, 6);

  Inventory r2 = modules_inventory(generic_cyclotomic_spec(2, 2), 2, 2);
  EXPECT_EQ(r2.entries.size(), 5u);
  EXPECT_EQ(r2.dim_square_sum, 8);
  for (const auto& e : r2.entries) EXPECT_TRUE(e.module.simple);

  Inventory tiny = modules_inventory(generic_cyclotomic_spec(1, 1), 1);
  EXPECT_EQ(tiny.entries.size(), 1u);
  EXPECT_EQ(tiny.dim_square_sum, 1);

  CyclotomicSpec bad{2, {Scalar::one(), Scalar::q(2)}, std::nullopt};
  try {
    modules_inventory(bad, 2);
    FAIL() << "non-semisimple spec must be rejected";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::not_semisimple);
  }
}

TEST(Center, PartitionFromDiagonals) {
  EXPECT_EQ(partition_from_diagonals({{0, 1}, {1, 1}, {2, 1}}), Partition({3}));
  EXPECT_EQ(partition_from_diagonals({{-1, 1}, {0, 1}, {1, 1}}), Partition({2, 1}));
  EXPECT_EQ(partition_from_diagonals({{-1, 1}, {0, 2}, {1, 1}}), Partition({2, 2}));
  EXPECT_EQ(partition_from_diagonals({{-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}}),
            Partition({3, 1, 1}));
  EXPECT_EQ(partition_from_diagonals({}), Partition());
  EXPECT_THROW(partition_from_diagonals({{0, 2}}), Error);
  EXPECT_THROW(partition_from_diagonals({{1, 1}}), Error);
  EXPECT_THROW(partition_from_diagonals({{-1, 1}, {1, 1}}), Error);
}

TEST(Center, ReconstructRoundTrip) {
  CyclotomicSpec spec = generic_cyclotomic_spec(2, 2);
  Inventory inv = modules_inventory(spec, 2);
  std::vector<std::vector<Scalar>> seen;
  for (const auto& e : inv.entries) {
    CentralCharacter ch = central_character(e.module.base);
    CenterMatch match = center_reconstruct(ch.elementary, spec, 2);
    EXPECT_EQ(match.tuple, e.tuple);
    EXPECT_EQ(match.contents, ch.values);
    for (const auto& prev : seen) EXPECT_NE(prev, ch.elementary);
    seen.push_back(ch.elementary);
  }

  // n = 1: a_1 = u_1 recovers a single box on page 1.
  CenterMatch single = center_reconstruct({spec.u[0]}, spec, 1);
  EXPECT_EQ(single.tuple.tuple[0], Partition({1}));
  EXPECT_TRUE(single.tuple.tuple[1].empty());

  std::vector<Scalar> junk{Scalar::q(1)};
  try {
    center_reconstruct(junk, spec, 1);
    FAIL() << "unrealizable values must be rejected";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::no_match);
  }
}

TEST(Center, SymmetricWordsActByScalars) {
  CyclotomicSpec spec = generic_cyclotomic_spec(2, 2);
  Inventory inv = modules_inventory(spec, 2);
  for (const auto& e : inv.entries) {
    CentralCharacter ch = central_character(e.module.base);
    long dim = e.module.dim();
    std::vector<Matrix> jm;
    for (const auto& w : jm_elements(2)) jm.push_back(evaluate_word(e.module, w));
    for (std::size_t k = 0; k < 2; ++k) {
      Matrix ek(dim, dim);
      for (long b = 0; b < dim; ++b) {
        std::vector<Scalar> column;
        for (const Matrix& mi : jm) column.push_back(mi.at(b, b));
        ek.at(b, b) = elementary_symmetric(column)[k];
      }
      EXPECT_EQ(ek, ch.elementary[k] * Matrix::identity(dim));
    }
  }
}

TEST(GroupAlgebra, ReflectionRelationsAtQOne) {
  GroupAlgebraReport r22 = group_algebra_check(2, 2);
  EXPECT_EQ(r22.shapes.size(), 5u);
  EXPECT_TRUE(r22.all_pass());
  for (const auto& s : r22.shapes) EXPECT_TRUE(s.specialized);

  GroupAlgebraReport s3 = group_algebra_check(1, 3);
  EXPECT_EQ(s3.shapes.size(), 3u);
  EXPECT_TRUE(s3.all_pass());
}

TEST(FixedSubalgebra, ClosureDimensions) {
  FixedDimensionReport r222 = fixed_subalgebra_dimension(generic_hrpn_spec(2, 2, 2), 2);
  EXPECT_EQ(r222.closure, 4);
  EXPECT_EQ(r222.expected, 4);
  EXPECT_EQ(r222.grading, 4);
  EXPECT_TRUE(r222.ok());

  FixedDimensionReport r332 = fixed_subalgebra_dimension(generic_hrpn_spec(3, 3, 2), 2);
  EXPECT_EQ(r332.closure, 6);
  EXPECT_TRUE(r332.ok());

  // p = 1 is the whole algebra.
  FixedDimensionReport whole = fixed_subalgebra_dimension(generic_hrpn_spec(2, 1, 2), 2);
  EXPECT_EQ(whole.closure, 8);
  EXPECT_TRUE(whole.ok());
}

TEST(HrpnSpecs, DerivedParameters) {
  HrpnSpec spec = generic_hrpn_spec(4, 2, 2);
  EXPECT_EQ(spec.d, 2);
  std::vector<Scalar> u = spec.derived_u();
  ASSERT_EQ(u.size(), 4u);
  EXPECT_EQ(u[0], Scalar::one());
  EXPECT_EQ(u[1], -Scalar::one());
  EXPECT_EQ(u[2], Scalar::q(5));
  EXPECT_EQ(u[3], -Scalar::q(5));
  EXPECT_NO_THROW(spec.validate());

  HrpnSpec broken = spec;
  broken.xi = CycRat(1);  // not primitive for p = 2
  EXPECT_THROW(broken.validate(), Error);
}

}  // namespace
