#pragma once
/*
 * Generator-defined homomorphisms checked against explicit relation lists:
 * words in named generators with scalar coefficients, evaluated in matrix
 * contexts.  Carries the standard presentations used by the library, the
 * substitution sending X^{eps_i} to T_i...T_2 T_1 T_2...T_i, and the exact
 * two-candidate obstruction for extending the rank-two representation of
 * the bonded pair T_1, T_2 to a third generator commuting with T_1.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <hecke/cyclotomic_algebra.hpp>

namespace hecke {

// Product of named generators with (possibly negative) exponents.
using GeneratorWord = std::vector<std::pair<std::string, long>>;

struct WordTerm {
  Scalar coeff;
  GeneratorWord word;  // empty word is the identity
};

// A formal combination that must evaluate to zero.
struct Relation {
  std::string name;
  std::vector<WordTerm> terms;
};

struct GeneratorMap {
  std::vector<Relation> relations;              // source presentation
  std::map<std::string, GeneratorWord> images;  // source generator -> target word
};

struct EvalContext {
  std::string name;
  std::map<std::string, Matrix> assign;  // target generator -> matrix
};

namespace detail {

inline Matrix evaluate_generator_word(const GeneratorWord& w,
                                      const std::map<std::string, Matrix>& assign, long dim) {
  Matrix out = Matrix::identity(dim);
  for (const auto& [name, exp] : w) {
    auto it = assign.find(name);
    require(it != assign.end(), errc::invalid_argument, "no matrix assigned to generator " + name);
    out = out * it->second.pow(exp);
  }
  return out;
}

}  // namespace detail

struct MapCheck {
  std::string relation;
  std::string context;
  Matrix residual;

  bool holds() const { return residual.is_zero(); }
};

struct MapReport {
  std::vector<MapCheck> checks;

  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds()) return false;
    return true;
  }
};

// Replaces every source generator by its image word and replays the source
// relations in each context.  Throws naming the first failed relation and
// context; the returned report carries every residual that was checked.
inline MapReport check_generator_map(const GeneratorMap& m,
                                     const std::vector<EvalContext>& contexts) {
  for (const Relation& rel : m.relations)
    for (const WordTerm& t : rel.terms)
      for (const auto& [name, exp] : t.word) {
        (void)exp;
        require(m.images.count(name) == 1, errc::invalid_argument,
                "source generator " + name + " has no image");
      }

  MapReport rep;
  for (const EvalContext& ctx : contexts) {
    require(!ctx.assign.empty(), errc::invalid_argument, "empty evaluation context");
    long dim = ctx.assign.begin()->second.rows();
    std::map<std::string, Matrix> source;
    for (const auto& [name, word] : m.images)
      source.emplace(name, detail::evaluate_generator_word(word, ctx.assign, dim));
    for (const Relation& rel : m.relations) {
      Matrix acc(dim, dim);
      for (const WordTerm& t : rel.terms)
        acc = acc + t.coeff * detail::evaluate_generator_word(t.word, source, dim);
      rep.checks.push_back({rel.name, ctx.name, std::move(acc)});
      require(rep.checks.back().holds(), errc::relation_fails,
              "relation " + rel.name + " fails in context " + ctx.name);
    }
  }
  return rep;
}

namespace detail {

inline std::string gen_t(long i) { return "T" + std::to_string(i); }
inline std::string gen_x(long i) { return "X" + std::to_string(i); }

inline Relation commutator(std::string name, const std::string& a, const std::string& b) {
  return {std::move(name),
          {{Scalar::one(), {{a, 1}, {b, 1}}}, {-Scalar::one(), {{b, 1}, {a, 1}}}}};
}

inline Relation quadratic(const std::string& g) {
  return {"quadratic " + g,
          {{Scalar::one(), {{g, 2}}},
           {-(Scalar::q(1) - Scalar::q(-1)), {{g, 1}}},
           {-Scalar::one(), {}}}};
}

inline Relation braid(const std::string& a, const std::string& b) {
  return {"braid " + a + " " + b,
          {{Scalar::one(), {{a, 1}, {b, 1}, {a, 1}}},
           {-Scalar::one(), {{b, 1}, {a, 1}, {b, 1}}}}};
}

inline Relation mixed_braid(const std::string& a, const std::string& b) {
  return {"mixed braid " + a + " " + b,
          {{Scalar::one(), {{a, 1}, {b, 1}, {a, 1}, {b, 1}}},
           {-Scalar::one(), {{b, 1}, {a, 1}, {b, 1}, {a, 1}}}}};
}

}  // namespace detail

// Presentation on X1..Xn, T2..Tn, mirroring the relation list that module
// verification replays on matrices.
inline std::vector<Relation> affine_presentation(long n) {
  require(n >= 1, errc::invalid_argument, "need n >= 1");
  using namespace detail;
  std::vector<Relation> rels;
  for (long i = 2; i <= n; ++i) rels.push_back(quadratic(gen_t(i)));
  for (long i = 2; i + 1 <= n; ++i) rels.push_back(braid(gen_t(i), gen_t(i + 1)));
  for (long i = 2; i <= n; ++i)
    for (long j = i + 2; j <= n; ++j)
      rels.push_back(commutator("commute " + gen_t(i) + " " + gen_t(j), gen_t(i), gen_t(j)));
  if (n >= 2) rels.push_back(mixed_braid(gen_x(1), gen_t(2)));
  for (long i = 3; i <= n; ++i)
    rels.push_back(commutator("commute " + gen_x(1) + " " + gen_t(i), gen_x(1), gen_t(i)));
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j)
      rels.push_back(commutator("commute " + gen_x(i) + " " + gen_x(j), gen_x(i), gen_x(j)));
  for (long i = 2; i <= n; ++i)
    rels.push_back({"recursion " + gen_x(i),
                    {{Scalar::one(), {{gen_x(i), 1}}},
                     {-Scalar::one(), {{gen_t(i), 1}, {gen_x(i - 1), 1}, {gen_t(i), 1}}}}});
  for (long i = 2; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      if (j == i - 1 || j == i) continue;
      rels.push_back(
          commutator("commute " + gen_x(j) + " " + gen_t(i), gen_x(j), gen_t(i)));
    }
  return rels;
}

// The substitution X^{eps_i} -> T_i...T_2 T_1 T_2...T_i, identity on the
// T generators; target generators are T1..Tn.
inline GeneratorMap jm_substitution(long n) {
  GeneratorMap m;
  m.relations = affine_presentation(n);
  for (long i = 2; i <= n; ++i) m.images[detail::gen_t(i)] = {{detail::gen_t(i), 1}};
  std::vector<std::vector<long>> words = jm_elements(n);
  for (long i = 1; i <= n; ++i) {
    GeneratorWord w;
    for (long letter : words[static_cast<std::size_t>(i - 1)])
      w.push_back({detail::gen_t(letter), 1});
    m.images[detail::gen_x(i)] = std::move(w);
  }
  return m;
}

inline EvalContext transported_context(const TransportedModule& m, std::string name) {
  EvalContext ctx{std::move(name), {}};
  for (long i = 1; i <= m.n(); ++i) ctx.assign.emplace(detail::gen_t(i), m.T(i));
  return ctx;
}

// Presentation on the p-fixed generators: Xp1 stands for the p-th power of
// the first diagonal generator, X21 for the diagonal step from position 1
// to 2, plus T2..Tn.  Only identities valid in the ambient algebra for
// every p appear.
inline std::vector<Relation> fixed_presentation(long n) {
  require(n >= 2, errc::invalid_argument, "need n >= 2");
  using namespace detail;
  std::vector<Relation> rels;
  for (long i = 2; i <= n; ++i) rels.push_back(quadratic(gen_t(i)));
  for (long i = 2; i + 1 <= n; ++i) rels.push_back(braid(gen_t(i), gen_t(i + 1)));
  for (long i = 2; i <= n; ++i)
    for (long j = i + 2; j <= n; ++j)
      rels.push_back(commutator("commute " + gen_t(i) + " " + gen_t(j), gen_t(i), gen_t(j)));
  rels.push_back(commutator("commute Xp1 X21", "Xp1", "X21"));
  rels.push_back(mixed_braid("Xp1", gen_t(2)));
  for (long i = 3; i <= n; ++i)
    rels.push_back(commutator("commute Xp1 " + gen_t(i), "Xp1", gen_t(i)));
  for (long i = 4; i <= n; ++i)
    rels.push_back(commutator("commute X21 " + gen_t(i), "X21", gen_t(i)));
  return rels;
}

// Images of the p-fixed generators in terms of the subalgebra generators
// a_0 = T_1^p, a_1 = T_1^{-1} T_2 T_1, a_i = T_i: the p-th power maps to
// a_0, the diagonal step to a_1 a_2, and T_i to a_i.
inline GeneratorMap fixed_generator_map(long n) {
  GeneratorMap m;
  m.relations = fixed_presentation(n);
  m.images["Xp1"] = {{"a0", 1}};
  m.images["X21"] = {{"a1", 1}, {"a2", 1}};
  for (long i = 2; i <= n; ++i)
    m.images[detail::gen_t(i)] = {{"a" + std::to_string(i), 1}};
  return m;
}

/*
 * Obstruction certificate: the printed rank-two representation rho of the
 * pair T_1, T_2 admits no extension by a matrix N with N rho(T_1) =
 * rho(T_1) N, N^2 = (q - q^{-1})N + 1 and the braid identity against
 * rho(T_2).  The centralizer of rho(T_1) is recomputed rather than assumed
 * diagonal, the quadratic and spectrum constraints are replayed on each
 * candidate, and the braid residual is reported entry by entry.
 */
struct ObstructionCandidate {
  Matrix candidate;
  Matrix residual;  // N rho(T_2) N - rho(T_2) N rho(T_2)
};

struct ObstructionCertificate {
  Matrix rho_t1, rho_t2;
  long commutant_dim;    // of the centralizer of rho(T_1); 2 = the diagonal family
  bool family_diagonal;  // every centralizer basis element is diagonal
  std::vector<ObstructionCandidate> candidates;

  bool all_fail() const {
    if (candidates.empty()) return false;
    for (const auto& c : candidates)
      if (c.residual.is_zero()) return false;
    return true;
  }

  Json to_json() const {
    auto mat = [](const Matrix& m) {
      Json rows = Json::array();
      for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
      }
      return rows;
    };
    Json jc = Json::array();
    for (const auto& c : candidates)
      jc.push_back(Json{{"candidate", mat(c.candidate)}, {"residual", mat(c.residual)}});
    return Json{{"rho_t1", mat(rho_t1)},
                {"rho_t2", mat(rho_t2)},
                {"commutant_dim", commutant_dim},
                {"family_diagonal", family_diagonal},
                {"all_fail", all_fail()},
                {"candidates", std::move(jc)}};
  }
};

inline ObstructionCertificate g2_obstruction() {
  Scalar q = Scalar::q(1);
  Scalar qi = Scalar::q(-1);
  Matrix id = Matrix::identity(2);

  Matrix t1 = Matrix::diagonal({q, -qi});
  Matrix t2(2, 2);
  t2.at(0, 0) = parse_scalar("(2 - q^-2)/(q + q^-1)");
  t2.at(0, 1) = parse_scalar("(q^2 - 1 + q^-2)/(q + q^-1)");
  t2.at(1, 0) = parse_scalar("3/(q + q^-1)");
  t2.at(1, 1) = parse_scalar("(q^2 - 2)/(q + q^-1)");
  require((t2 * t2 - (q - qi) * t2 - id).is_zero(), errc::relation_fails,
          "printed matrix fails its quadratic relation");

  ObstructionCertificate cert{t1, t2, 0, true, {}};
  std::vector<Matrix> central = hom_space_basis({t1}, {t1});
  cert.commutant_dim = static_cast<long>(central.size());
  for (const Matrix& b : central)
    if (!b.is_diagonal()) cert.family_diagonal = false;

  // Any solution commutes with t1 (diagonal family above), is invertible
  // with eigenvalues q and -q^{-1} by the quadratic, and shares the
  // spectrum of t2 by conjugacy: two candidates remain.
  Scalar trace = t2.at(0, 0) + t2.at(1, 1);
  Scalar det = t2.at(0, 0) * t2.at(1, 1) - t2.at(0, 1) * t2.at(1, 0);
  for (const Matrix& n : {Matrix::diagonal({q, -qi}), Matrix::diagonal({-qi, q})}) {
    require((n * t1 - t1 * n).is_zero(), errc::relation_fails, "candidate leaves the centralizer");
    require((n * n - (q - qi) * n - id).is_zero(), errc::relation_fails,
            "candidate fails the quadratic relation");
    require(n.at(0, 0) + n.at(1, 1) == trace &&
                n.at(0, 0) * n.at(1, 1) - n.at(0, 1) * n.at(1, 0) == det,
            errc::relation_fails, "candidate has the wrong spectrum");
    Matrix residual = n * t2 * n - t2 * n * t2;
    require(!residual.is_zero(), errc::unexpected_homomorphism,
            "a candidate satisfies the braid relation");
    cert.candidates.push_back({n, std::move(residual)});
  }
  return cert;
}

}  // namespace hecke
