#include <hecke/clifford.hpp>
#include <hecke/foldings.hpp>

#include <gtest/gtest.h>

#include <vector>

namespace hecke {
namespace {

TEST(GeneratorMaps, IdentityMapPasses) {
  GeneratorMap m = jm_substitution(2);
  for (auto& [name, word] : m.images) word = {{name, 1}};
  // With every generator mapped to itself the relation list must hold on
  // any honest module, here a transported one with X's assigned directly.
  CyclotomicSpec spec = generic_cyclotomic_spec(2, 2);
  TransportedModule mod = transport_to_cyclotomic(
      build_module(shape_for_tuple(spec, RTuple{{Partition({1}), Partition({1})}})), spec);
  EvalContext ctx{"self", {}};
  for (long i = 2; i <= 2; ++i) ctx.assign.emplace("T" + std::to_string(i), mod.T(i));
  for (long j = 1; j <= 2; ++j) ctx.assign.emplace("X" + std::to_string(j), mod.X(j));
  MapReport rep = check_generator_map(m, {ctx});
  EXPECT_TRUE(rep.all_hold());
}

// The substitution X^{eps_i} -> T_i...T_1...T_i satisfies every source
// relation on the whole r = 2, n = 3 inventory.
TEST(GeneratorMaps, DiagonalWordSubstitutionOnInventory) {
  CyclotomicSpec spec = generic_cyclotomic_spec(2, 3);
  Inventory inv = modules_inventory(spec, 3);
  GeneratorMap m = jm_substitution(3);
  std::vector<EvalContext> contexts;
  for (const InventoryEntry& e : inv.entries)
    contexts.push_back(transported_context(e.module, e.tuple.to_json().dump()));
  MapReport rep = check_generator_map(m, contexts);
  EXPECT_TRUE(rep.all_hold());
  EXPECT_EQ(rep.checks.size(), m.relations.size() * contexts.size());
}

// The image words land on the matrices the substitution names: a matrix
// cross-check of the word evaluation path.
TEST(GeneratorMaps, SubstitutionMatchesDiagonalGenerators) {
  CyclotomicSpec spec = generic_cyclotomic_spec(1, 3);
  Inventory inv = modules_inventory(spec, 3);
  GeneratorMap m = jm_substitution(3);
  for (const InventoryEntry& e : inv.entries) {
    EvalContext ctx = transported_context(e.module, "m");
    for (long i = 1; i <= 3; ++i) {
      Matrix img = detail::evaluate_generator_word(m.images.at("X" + std::to_string(i)),
                                                   ctx.assign, e.module.dim());
      EXPECT_EQ(img, e.module.X(i));
    }
  }
}

TEST(GeneratorMaps, ReportsFailingRelationByName) {
  GeneratorMap m;
  m.relations = {detail::commutator("commute A B", "A", "B")};
  m.images["A"] = {{"A", 1}};
  m.images["B"] = {{"B", 1}};
  Matrix a = Matrix::diagonal({Scalar::q(1), Scalar::q(-1)});
  Matrix b(2, 2);
  b.at(0, 1) = Scalar::one();
  b.at(1, 0) = Scalar::one();
  EvalContext ctx{"pair", {{"A", a}, {"B", b}}};
  try {
    check_generator_map(m, {ctx});
    FAIL() << "expected a relation failure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::relation_fails);
    EXPECT_NE(std::string(e.what()).find("commute A B"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("pair"), std::string::npos);
  }
}

// The p-fixed generator images satisfy the p-fixed relation list on every
// decomposed piece at r = p = 2, n = 2.
TEST(GeneratorMaps, FixedImagesHoldOnDecomposedPieces) {
  HrpnSpec spec = generic_hrpn_spec(2, 2, 2);
  Inventory inv = modules_inventory(spec.cyclotomic(), 2);
  GeneratorMap m = fixed_generator_map(2);
  std::vector<EvalContext> contexts;
  for (const InventoryEntry& e : inv.entries) {
    DecompositionReport rep = decompose_fixed(e.module, spec);
    for (const DecompositionPiece& pc : rep.pieces) {
      if (pc.dim == 0) continue;
      EvalContext ctx{e.tuple.to_json().dump() + "#" + std::to_string(pc.j), {}};
      for (std::size_t g = 0; g < pc.restricted.size(); ++g)
        ctx.assign.emplace("a" + std::to_string(g), pc.restricted[g]);
      contexts.push_back(std::move(ctx));
    }
  }
  ASSERT_FALSE(contexts.empty());
  EXPECT_TRUE(check_generator_map(m, contexts).all_hold());
}

TEST(Obstruction, PrintedMatricesAndTwoFailedCandidates) {
  ObstructionCertificate cert = g2_obstruction();

  EXPECT_EQ(cert.rho_t1, Matrix::diagonal({Scalar::q(1), -Scalar::q(-1)}));
  Scalar trace = cert.rho_t2.at(0, 0) + cert.rho_t2.at(1, 1);
  Scalar det = cert.rho_t2.at(0, 0) * cert.rho_t2.at(1, 1) -
               cert.rho_t2.at(0, 1) * cert.rho_t2.at(1, 0);
  EXPECT_EQ(trace, Scalar::q(1) - Scalar::q(-1));
  EXPECT_EQ(det, -Scalar::one());

  EXPECT_EQ(cert.commutant_dim, 2);
  EXPECT_TRUE(cert.family_diagonal);
  ASSERT_EQ(cert.candidates.size(), 2u);
  for (const ObstructionCandidate& c : cert.candidates) {
    EXPECT_TRUE(c.candidate.is_diagonal());
    EXPECT_FALSE(c.residual.is_zero());
  }
  EXPECT_TRUE(cert.all_fail());

  Json j = cert.to_json();
  EXPECT_TRUE(j["all_fail"].get<bool>());
  EXPECT_EQ(j["candidates"].size(), 2u);
}

// The candidate list covers both eigenvalue orders and nothing else.
TEST(Obstruction, CandidatesAreTheTwoSpectralOrders) {
  ObstructionCertificate cert = g2_obstruction();
  Scalar q = Scalar::q(1);
  Scalar mqi = -Scalar::q(-1);
  EXPECT_EQ(cert.candidates[0].candidate, Matrix::diagonal({q, mqi}));
  EXPECT_EQ(cert.candidates[1].candidate, Matrix::diagonal({mqi, q}));
}

}  // namespace
}  // namespace hecke
