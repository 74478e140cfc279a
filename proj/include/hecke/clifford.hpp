#pragma once
/*
 * The order-p token symmetry g (scale X^{eps_1} by xi, fix T_2..T_n) acting
 * on transported modules: twisting, tableau intertwiners, factor sets,
 * inertia idempotents, and the resulting decomposition of a simple module
 * over the fixed subalgebra.  Also small explicit algebras with a finite
 * group action, their skew group rings, and the corner / pairing checks
 * used to certify that machinery on desk-scale testbeds.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <hecke/cyclotomic_algebra.hpp>

namespace hecke {

// A module pulled back through g^{-k}: same underlying space and basis
// order as the source, T_1 and every X^{eps_j} scaled by xi^{-k}.  The
// stored shape is the token-scaled image of the source shape, which is the
// placement whose freshly built module this one is isomorphic to.
struct TwistedModule {
  PlacedShape shape;
  std::vector<Matrix> t;  // T_1 .. T_n
  std::vector<Matrix> x;  // X^{eps_1} .. X^{eps_n}

  long n() const { return static_cast<long>(t.size()); }
  long dim() const { return t.front().rows(); }
  const Matrix& T(long i) const { return t[static_cast<std::size_t>(i - 1)]; }
  const Matrix& X(long j) const { return x[static_cast<std::size_t>(j - 1)]; }
  std::vector<Matrix> generators() const { return t; }
};

inline TwistedModule twist_module(const TransportedModule& m, const CycRat& xi, long k) {
  Scalar f = Scalar::from_cyc(xi.pow(-k));
  TwistedModule out{m.base.shape.applied_g(xi, k), {}, {}};
  out.t.push_back(f * m.T(1));
  for (long i = 2; i <= m.n(); ++i) out.t.push_back(m.T(i));
  for (long j = 1; j <= m.n(); ++j) out.x.push_back(f * m.X(j));
  return out;
}

// Permutation matrix realizing v_L -> v_{gL} for g applied kappa times,
// on a module whose shape is fixed by that power.  The box under (token,
// row, col) goes to (xi^{-kappa} token, row, col); entries ride along.
// Verified before returning: commutes with every T_i, skews every X^{eps_j}
// by xi^kappa.
inline Matrix tableau_intertwiner(const CalibratedModule& m, const CycRat& xi, long kappa) {
  require(m.shape.applied_g(xi, kappa) == m.shape, errc::not_inertial,
          "the requested symmetry power does not fix the shape");
  const auto& pages = m.shape.pages();
  Scalar f = Scalar::from_cyc(xi.pow(-kappa));
  std::vector<long> box_map(static_cast<std::size_t>(m.shape.box_count()), -1);
  for (long b = 0; b < m.shape.box_count(); ++b) {
    const BoxCoord& bc = m.shape.boxes()[static_cast<std::size_t>(b)];
    Scalar target = pages[static_cast<std::size_t>(bc.page)].token * f;
    for (std::size_t pg = 0; pg < pages.size(); ++pg)
      if (pages[pg].token == target) {
        box_map[static_cast<std::size_t>(b)] =
            m.shape.box_index(static_cast<long>(pg), bc.row, bc.col);
        break;
      }
    require(box_map[static_cast<std::size_t>(b)] >= 0, errc::not_inertial,
            "box has no image page despite the shape being fixed");
  }

  long d = m.dim();
  Matrix phi(d, d);
  for (long col = 0; col < d; ++col) {
    StandardTableau mapped;
    for (long b : m.basis[static_cast<std::size_t>(col)].box_of_entry)
      mapped.box_of_entry.push_back(box_map[static_cast<std::size_t>(b)]);
    auto it = std::find(m.basis.begin(), m.basis.end(), mapped);
    require(it != m.basis.end(), errc::not_inertial, "relabeled tableau left the basis");
    phi.at(static_cast<long>(it - m.basis.begin()), col) = Scalar::one();
  }

  Scalar skew = Scalar::from_cyc(xi.pow(kappa));
  for (long i = 2; i <= m.n; ++i)
    require((phi * m.T(i) - m.T(i) * phi).is_zero(), errc::relation_fails,
            "tableau intertwiner does not commute with T" + std::to_string(i));
  for (long j = 1; j <= m.n; ++j)
    require((phi * m.X(j) - skew * (m.X(j) * phi)).is_zero(), errc::relation_fails,
            "tableau intertwiner fails the twisting identity on X" + std::to_string(j));
  return phi;
}

// Schur solve for P with P a_i = b_i P over the paired generator lists.
// Empty solution space gives nullopt; a line gives its basis element with
// the first nonzero entry in row-major order scaled to 1 (and the element
// must be invertible); anything bigger means the inputs were not simple.
inline std::optional<Matrix> solve_intertwiner(const std::vector<Matrix>& a,
                                               const std::vector<Matrix>& b) {
  std::vector<Matrix> basis = hom_space_basis(a, b);
  if (basis.empty()) return std::nullopt;
  require(basis.size() == 1, errc::not_schur,
          "intertwiner space has dimension " + std::to_string(basis.size()));
  Matrix phi = std::move(basis.front());
  Scalar lead = Scalar::zero();
  for (long i = 0; i < phi.rows() && lead.is_zero(); ++i)
    for (long j = 0; j < phi.cols() && lead.is_zero(); ++j)
      if (!phi.at(i, j).is_zero()) lead = phi.at(i, j);
  phi = lead.inverse() * phi;
  require(phi.rows() == phi.cols() && phi.rank() == phi.rows(), errc::not_schur,
          "one-dimensional intertwiner space with a singular element");
  return phi;
}

// Scalar table alpha with phi_l phi_m = alpha(l, m) phi_{l+m mod K}, for
// intertwiners indexed by a cyclic group.  The table is recomputed from the
// products, never assumed, and the cocycle identity is asserted.
struct FactorSet {
  std::vector<std::vector<Scalar>> alpha;

  bool trivial() const {
    for (const auto& row : alpha)
      for (const Scalar& v : row)
        if (v != Scalar::one()) return false;
    return true;
  }
};

inline FactorSet factor_set(const std::vector<Matrix>& phis) {
  long K = static_cast<long>(phis.size());
  if (K <= 1) return FactorSet{{}};
  FactorSet out;
  out.alpha.assign(static_cast<std::size_t>(K),
                   std::vector<Scalar>(static_cast<std::size_t>(K), Scalar::zero()));
  for (long l = 0; l < K; ++l)
    for (long mrun = 0; mrun < K; ++mrun) {
      Matrix prod = phis[static_cast<std::size_t>(l)] * phis[static_cast<std::size_t>(mrun)];
      const Matrix& target = phis[static_cast<std::size_t>((l + mrun) % K)];
      Scalar ratio = Scalar::zero();
      for (long i = 0; i < target.rows() && ratio.is_zero(); ++i)
        for (long j = 0; j < target.cols() && ratio.is_zero(); ++j)
          if (!target.at(i, j).is_zero()) ratio = prod.at(i, j) / target.at(i, j);
      require(!ratio.is_zero() && (prod - ratio * target).is_zero(), errc::not_proportional,
              "product of intertwiners is not proportional to the expected one");
      out.alpha[static_cast<std::size_t>(l)][static_cast<std::size_t>(mrun)] = ratio;
    }
  auto a = [&](long g, long h) -> const Scalar& {
    return out.alpha[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
  };
  for (long g = 0; g < K; ++g)
    for (long h = 0; h < K; ++h)
      for (long k = 0; k < K; ++k)
        require(a(g, h) * a((g + h) % K, k) == a(h, k) * a(g, (h + k) % K),
                errc::not_proportional, "factor set fails the cocycle identity");
  return out;
}

// Coefficients of p_j = (1/|K|) sum_l xi^{-j l kappa} g^{l kappa} over the
// group basis (1, g^kappa, ..., g^{(|K|-1) kappa}).  The 1/|K| prefactor
// makes them honest idempotents: p_j p_k = delta_{jk} p_j and sum p_j = 1,
// checked here by convolution before returning.
inline std::vector<std::vector<CycRat>> idempotents(long kappa, long K_order, const CycRat& xi) {
  require(K_order >= 1 && kappa >= 1, errc::invalid_argument, "bad inertia data");
  CycRat zk = xi.pow(kappa);
  require(zk.pow(K_order) == CycRat(1), errc::invalid_argument,
          "xi^kappa is not a |K|-th root of unity");
  for (long l = 1; l < K_order; ++l)
    require(zk.pow(l) != CycRat(1), errc::invalid_argument,
            "xi^kappa is not a primitive |K|-th root of unity");

  CycRat inv(Rat(1, K_order));
  std::vector<std::vector<CycRat>> p;
  for (long j = 0; j < K_order; ++j) {
    std::vector<CycRat> coeff;
    for (long l = 0; l < K_order; ++l) coeff.push_back(inv * zk.pow(-j * l));
    p.push_back(std::move(coeff));
  }

  auto convolve = [&](const std::vector<CycRat>& a, const std::vector<CycRat>& b) {
    std::vector<CycRat> c(static_cast<std::size_t>(K_order), CycRat(0));
    for (long l = 0; l < K_order; ++l)
      for (long mrun = 0; mrun < K_order; ++mrun) {
        CycRat& slot = c[static_cast<std::size_t>((l + mrun) % K_order)];
        slot = slot + a[static_cast<std::size_t>(l)] * b[static_cast<std::size_t>(mrun)];
      }
    return c;
  };
  std::vector<CycRat> total(static_cast<std::size_t>(K_order), CycRat(0));
  for (long j = 0; j < K_order; ++j) {
    for (long k = 0; k < K_order; ++k) {
      std::vector<CycRat> c = convolve(p[static_cast<std::size_t>(j)],
                                       p[static_cast<std::size_t>(k)]);
      const std::vector<CycRat>& expect =
          j == k ? p[static_cast<std::size_t>(j)]
                 : std::vector<CycRat>(static_cast<std::size_t>(K_order), CycRat(0));
      require(c == expect, errc::invalid_argument, "inertia idempotents fail orthogonality");
    }
    for (long l = 0; l < K_order; ++l)
      total[static_cast<std::size_t>(l)] =
          total[static_cast<std::size_t>(l)] +
          p[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
  }
  std::vector<CycRat> unit(static_cast<std::size_t>(K_order), CycRat(0));
  unit[0] = CycRat(1);
  require(total == unit, errc::invalid_argument, "inertia idempotents do not sum to 1");
  return p;
}

// Images of the fixed-subalgebra generators a_0 = T_1^p, a_1 = T_1^{-1} T_2 T_1,
// a_i = T_i on a transported module.
inline std::vector<Matrix> fixed_generator_images(const TransportedModule& m, long p) {
  std::vector<Matrix> a;
  a.push_back(m.T(1).pow(p));
  if (m.n() >= 2) {
    a.push_back(m.T(1).inverse() * m.T(2) * m.T(1));
    for (long i = 2; i <= m.n(); ++i) a.push_back(m.T(i));
  }
  return a;
}

struct DecompositionPiece {
  long j;
  Matrix projector;
  Matrix basis;                    // ambient-dim x piece-dim column basis
  std::vector<Matrix> restricted;  // fixed-subalgebra generators on the piece
  long dim;
  bool simple;
};

struct DecompositionReport {
  PlacedShape shape;
  long kappa;
  long group_order;
  std::vector<DecompositionPiece> pieces;

  Json to_json() const {
    Json jp = Json::array();
    for (const DecompositionPiece& pc : pieces)
      jp.push_back(Json{{"j", pc.j}, {"dim", pc.dim}, {"simple", pc.simple}});
    return Json{{"shape", shape.to_json()},
                {"kappa", kappa},
                {"K", group_order},
                {"pieces", std::move(jp)}};
  }
};

// Splits a simple transported module over the fixed subalgebra: realizes
// g^kappa as the tableau intertwiner, forms the inertia projectors from the
// group-algebra idempotents, and restricts the a-generators to each image.
// Every projector identity and every invariance is checked exactly; each
// nonzero piece is certified simple through its commutant.
inline DecompositionReport decompose_fixed(const TransportedModule& m, const HrpnSpec& spec) {
  spec.validate();
  require(m.spec.u == spec.derived_u(), errc::invalid_argument,
          "module was transported with different parameters");
  require(m.simple, errc::invalid_argument, "decomposition needs a simple module");

  Inertia in = m.base.shape.inertia(spec.p, spec.xi);
  long d = m.dim();
  Matrix id = Matrix::identity(d);
  Matrix phi = tableau_intertwiner(m.base, spec.xi, in.kappa);
  require(phi.pow(in.group_order) == id, errc::relation_fails,
          "realized symmetry power has the wrong order");

  std::vector<std::vector<CycRat>> coeff = idempotents(in.kappa, in.group_order, spec.xi);
  std::vector<Matrix> powers{id};
  for (long l = 1; l < in.group_order; ++l) powers.push_back(powers.back() * phi);
  std::vector<Matrix> proj;
  for (long j = 0; j < in.group_order; ++j) {
    Matrix pj(d, d);
    for (long l = 0; l < in.group_order; ++l)
      pj = pj + Scalar::from_cyc(coeff[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]) *
                    powers[static_cast<std::size_t>(l)];
    proj.push_back(std::move(pj));
  }

  Matrix total(d, d);
  for (long j = 0; j < in.group_order; ++j) {
    require((proj[static_cast<std::size_t>(j)] * proj[static_cast<std::size_t>(j)] -
             proj[static_cast<std::size_t>(j)])
                .is_zero(),
            errc::relation_fails, "projector is not idempotent");
    for (long k = 0; k < in.group_order; ++k)
      if (j != k)
        require((proj[static_cast<std::size_t>(j)] * proj[static_cast<std::size_t>(k)]).is_zero(),
                errc::relation_fails, "projectors are not orthogonal");
    total = total + proj[static_cast<std::size_t>(j)];
  }
  require(total == id, errc::relation_fails, "projectors do not sum to the identity");

  std::vector<Matrix> agens = fixed_generator_images(m, spec.p);
  DecompositionReport rep{m.base.shape, in.kappa, in.group_order, {}};
  long total_dim = 0;
  for (long j = 0; j < in.group_order; ++j) {
    const Matrix& pj = proj[static_cast<std::size_t>(j)];
    for (const Matrix& a : agens)
      require((a * pj - pj * a).is_zero(), errc::not_invariant,
              "fixed-subalgebra generator leaks across a projector image");
    std::vector<long> cols = pj.column_basis();
    long pd = static_cast<long>(cols.size());
    Matrix basis(d, pd);
    for (long i = 0; i < d; ++i)
      for (long c = 0; c < pd; ++c) basis.at(i, c) = pj.at(i, cols[static_cast<std::size_t>(c)]);
    std::vector<Matrix> restricted;
    for (const Matrix& a : agens) {
      if (pd == 0) break;
      std::optional<Matrix> r = basis.solve(a * basis);
      require(r.has_value(), errc::not_invariant, "piece is not closed under the a-generators");
      restricted.push_back(std::move(*r));
    }
    bool simple = pd > 0 && commutant_dimension(restricted) == 1;
    total_dim += pd;
    rep.pieces.push_back({j, pj, std::move(basis), std::move(restricted), pd, simple});
  }
  require(total_dim == d, errc::relation_fails, "piece dimensions do not add up");
  return rep;
}

// Partition of the inventory into orbits of the token symmetry, each orbit
// a sorted index list.  Entries are matched by exact shape equality.
inline std::vector<std::vector<std::size_t>> g_orbit_classes(const Inventory& inv,
                                                             const HrpnSpec& spec) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(inv.entries.size(), false);
  for (std::size_t i = 0; i < inv.entries.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (long k = 0; k < spec.p; ++k) {
      PlacedShape moved = inv.entries[i].shape.applied_g(spec.xi, k);
      for (std::size_t j = 0; j < inv.entries.size(); ++j)
        if (!seen[j] && inv.entries[j].shape == moved) {
          seen[j] = true;
          orbit.push_back(j);
          break;
        }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// True when every nonzero piece of one decomposition is isomorphic to a
// distinct piece of the other, witnessed by solved intertwiners.  Pieces
// within one decomposition are pairwise non-isomorphic, so greedy matching
// is safe.
inline bool constituents_match(const DecompositionReport& a, const DecompositionReport& b) {
  std::vector<bool> used(b.pieces.size(), false);
  for (const DecompositionPiece& pa : a.pieces) {
    if (pa.dim == 0) continue;
    bool matched = false;
    for (std::size_t j = 0; j < b.pieces.size(); ++j) {
      if (used[j] || b.pieces[j].dim != pa.dim) continue;
      if (solve_intertwiner(pa.restricted, b.pieces[j].restricted).has_value()) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

/*
 * Explicit finite-dimensional algebras.  Structure constants are stored as
 * mul[i][j] = coordinates of e_i e_j; verify() replays associativity and
 * the unit laws on all basis triples, which is cheap at testbed sizes.
 */
struct FiniteDimAlgebra {
  long dim;
  std::vector<std::vector<std::vector<Scalar>>> mul;
  std::vector<Scalar> unit;

  std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    std::vector<Scalar> c(static_cast<std::size_t>(dim), Scalar::zero());
    for (long i = 0; i < dim; ++i) {
      if (a[static_cast<std::size_t>(i)].is_zero()) continue;
      for (long j = 0; j < dim; ++j) {
        if (b[static_cast<std::size_t>(j)].is_zero()) continue;
        Scalar w = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        const auto& row = mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (long k = 0; k < dim; ++k)
          c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] + w * row[static_cast<std::size_t>(k)];
      }
    }
    return c;
  }

  std::vector<Scalar> basis_vector(long i) const {
    std::vector<Scalar> v(static_cast<std::size_t>(dim), Scalar::zero());
    v[static_cast<std::size_t>(i)] = Scalar::one();
    return v;
  }

  void verify() const {
    require(dim >= 1 && static_cast<long>(mul.size()) == dim &&
                static_cast<long>(unit.size()) == dim,
            errc::invalid_argument, "malformed structure constants");
    for (const auto& row : mul) {
      require(static_cast<long>(row.size()) == dim, errc::invalid_argument,
              "malformed structure constants");
      for (const auto& v : row)
        require(static_cast<long>(v.size()) == dim, errc::invalid_argument,
                "malformed structure constants");
    }
    for (long i = 0; i < dim; ++i) {
      require(multiply(unit, basis_vector(i)) == basis_vector(i), errc::invalid_argument,
              "unit fails on the left");
      require(multiply(basis_vector(i), unit) == basis_vector(i), errc::invalid_argument,
              "unit fails on the right");
      for (long j = 0; j < dim; ++j)
        for (long k = 0; k < dim; ++k)
          require(multiply(multiply(basis_vector(i), basis_vector(j)), basis_vector(k)) ==
                      multiply(basis_vector(i), multiply(basis_vector(j), basis_vector(k))),
                  errc::invalid_argument, "associativity fails on a basis triple");
    }
  }

  Json to_json() const {
    Json jm = Json::array();
    for (const auto& row : mul) {
      Json jr = Json::array();
      for (const auto& v : row) {
        Json jv = Json::array();
        for (const Scalar& s : v) jv.push_back(s.to_string());
        jr.push_back(std::move(jv));
      }
      jm.push_back(std::move(jr));
    }
    Json ju = Json::array();
    for (const Scalar& s : unit) ju.push_back(s.to_string());
    return Json{{"dim", dim}, {"mul", std::move(jm)}, {"unit", std::move(ju)}};
  }

  static FiniteDimAlgebra from_json(const Json& j, long zeta_order = 1) {
    FiniteDimAlgebra a;
    a.dim = j.at("dim").get<long>();
    for (const Json& jr : j.at("mul")) {
      std::vector<std::vector<Scalar>> row;
      for (const Json& jv : jr) {
        std::vector<Scalar> v;
        for (const Json& js : jv) v.push_back(parse_scalar(js.get<std::string>(), zeta_order));
        row.push_back(std::move(v));
      }
      a.mul.push_back(std::move(row));
    }
    for (const Json& js : j.at("unit"))
      a.unit.push_back(parse_scalar(js.get<std::string>(), zeta_order));
    a.verify();
    return a;
  }
};

namespace detail {

inline std::vector<Scalar> apply_matrix(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(static_cast<std::size_t>(m.rows()), Scalar::zero());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[static_cast<std::size_t>(j)].is_zero())
        out[static_cast<std::size_t>(i)] =
            out[static_cast<std::size_t>(i)] + m.at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace detail

// A finite group given by its multiplication table (element 0 is the
// identity) acting on algebra coordinates, one matrix per element.
struct GroupAction {
  std::vector<std::vector<long>> table;
  std::vector<Matrix> act;

  long order() const { return static_cast<long>(table.size()); }

  void verify(const FiniteDimAlgebra& a) const {
    long g = order();
    require(g >= 1 && static_cast<long>(act.size()) == g, errc::invalid_argument,
            "need one action matrix per group element");
    for (const auto& row : table) {
      require(static_cast<long>(row.size()) == g, errc::invalid_argument, "malformed group table");
      for (long v : row)
        require(v >= 0 && v < g, errc::invalid_argument, "malformed group table");
    }
    for (long h = 0; h < g; ++h) {
      require(table[0][static_cast<std::size_t>(h)] == h &&
                  table[static_cast<std::size_t>(h)][0] == h,
              errc::invalid_argument, "element 0 is not the identity");
      require(act[static_cast<std::size_t>(h)].rows() == a.dim &&
                  act[static_cast<std::size_t>(h)].cols() == a.dim,
              errc::invalid_argument, "action matrix has the wrong size");
    }
    require(act[0] == Matrix::identity(a.dim), errc::action_not_automorphism,
            "identity element must act trivially");
    for (long h = 0; h < g; ++h)
      for (long k = 0; k < g; ++k)
        require(act[static_cast<std::size_t>(h)] * act[static_cast<std::size_t>(k)] ==
                    act[static_cast<std::size_t>(table[static_cast<std::size_t>(h)]
                                                      [static_cast<std::size_t>(k)])],
                errc::action_not_automorphism, "action matrices do not follow the group table");
    for (long h = 0; h < g; ++h) {
      const Matrix& m = act[static_cast<std::size_t>(h)];
      require(detail::apply_matrix(m, a.unit) == a.unit, errc::action_not_automorphism,
              "group element moves the unit");
      for (long i = 0; i < a.dim; ++i)
        for (long j = 0; j < a.dim; ++j) {
          std::vector<Scalar> lhs = detail::apply_matrix(
              m, a.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          std::vector<Scalar> rhs = a.multiply(detail::apply_matrix(m, a.basis_vector(i)),
                                               detail::apply_matrix(m, a.basis_vector(j)));
          require(lhs == rhs, errc::action_not_automorphism,
                  "group element does not act by an algebra map");
        }
    }
  }
};

// Basis (r_i, h) with product (r_i, h)(r_j, k) = (r_i h(r_j), hk); index
// layout h * dim + i.  Associativity of the result is re-verified.
inline FiniteDimAlgebra skew_group_ring(const FiniteDimAlgebra& a, const GroupAction& action) {
  a.verify();
  action.verify(a);
  long g = action.order();
  long sdim = a.dim * g;
  auto idx = [&](long h, long i) { return h * a.dim + i; };

  FiniteDimAlgebra s;
  s.dim = sdim;
  s.mul.assign(static_cast<std::size_t>(sdim),
               std::vector<std::vector<Scalar>>(
                   static_cast<std::size_t>(sdim),
                   std::vector<Scalar>(static_cast<std::size_t>(sdim), Scalar::zero())));
  s.unit.assign(static_cast<std::size_t>(sdim), Scalar::zero());
  for (long i = 0; i < a.dim; ++i)
    s.unit[static_cast<std::size_t>(idx(0, i))] = a.unit[static_cast<std::size_t>(i)];

  for (long h = 0; h < g; ++h)
    for (long i = 0; i < a.dim; ++i)
      for (long k = 0; k < g; ++k)
        for (long j = 0; j < a.dim; ++j) {
          std::vector<Scalar> moved =
              detail::apply_matrix(action.act[static_cast<std::size_t>(h)], a.basis_vector(j));
          std::vector<Scalar> prod = a.multiply(a.basis_vector(i), moved);
          long target = action.table[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
          auto& row = s.mul[static_cast<std::size_t>(idx(h, i))][static_cast<std::size_t>(idx(k, j))];
          for (long t = 0; t < a.dim; ++t)
            row[static_cast<std::size_t>(idx(target, t))] = prod[static_cast<std::size_t>(t)];
        }
  s.verify();
  return s;
}

// Dimension of the center, from the nullspace of z e_j - e_j z over all j.
inline long center_dimension(const FiniteDimAlgebra& a) {
  Matrix sys(a.dim * a.dim, a.dim);
  for (long j = 0; j < a.dim; ++j)
    for (long k = 0; k < a.dim; ++k)
      for (long i = 0; i < a.dim; ++i)
        sys.at(j * a.dim + k, i) =
            a.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
            a.mul[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  return static_cast<long>(sys.nullspace().size());
}

// Corner picture for the averaging idempotent e = (1/|G|) sum_h (1, h) in
// the skew group ring S = R x| G: the fixed subalgebra R^G should map
// isomorphically onto e S e via s -> s e, and r -> r e should identify R
// with the left ideal S e.  All spans are computed exactly.
struct CornerCheck {
  long fixed_dim;      // dim R^G
  long corner_dim;     // dim e S e
  long ideal_dim;      // dim S e
  bool corner_map_multiplicative;
  bool corner_map_iso;
  bool ideal_map_iso;

  bool ok() const { return corner_map_multiplicative && corner_map_iso && ideal_map_iso; }

  Json to_json() const {
    return Json{{"fixed_dim", fixed_dim},
                {"corner_dim", corner_dim},
                {"ideal_dim", ideal_dim},
                {"corner_map_multiplicative", corner_map_multiplicative},
                {"corner_map_iso", corner_map_iso},
                {"ideal_map_iso", ideal_map_iso}};
  }
};

inline CornerCheck fixed_corner_check(const FiniteDimAlgebra& a, const GroupAction& action) {
  FiniteDimAlgebra s = skew_group_ring(a, action);
  long g = action.order();

  std::vector<Scalar> e(static_cast<std::size_t>(s.dim), Scalar::zero());
  Scalar inv = Scalar::from_cyc(CycRat(Rat(1, g)));
  for (long h = 0; h < g; ++h)
    for (long i = 0; i < a.dim; ++i)
      e[static_cast<std::size_t>(h * a.dim + i)] = inv * a.unit[static_cast<std::size_t>(i)];
  require(s.multiply(e, e) == e, errc::invalid_argument, "averaging element is not idempotent");

  // Fixed subalgebra: common kernel of (act(h) - 1).
  Matrix fix(g * a.dim, a.dim);
  for (long h = 0; h < g; ++h)
    for (long i = 0; i < a.dim; ++i)
      for (long j = 0; j < a.dim; ++j)
        fix.at(h * a.dim + i, j) = action.act[static_cast<std::size_t>(h)].at(i, j) -
                                   (i == j ? Scalar::one() : Scalar::zero());
  std::vector<std::vector<Scalar>> fixed = fix.nullspace();
  long fixed_dim = static_cast<long>(fixed.size());

  auto embed = [&](const std::vector<Scalar>& r) {
    std::vector<Scalar> v(static_cast<std::size_t>(s.dim), Scalar::zero());
    for (long i = 0; i < a.dim; ++i) v[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
    return v;
  };

  RowSpan corner(s.dim);
  for (long m = 0; m < s.dim; ++m)
    corner.add(s.multiply(e, s.multiply(s.basis_vector(m), e)));
  long corner_dim = corner.dimension();

  RowSpan ideal(s.dim);
  for (long m = 0; m < s.dim; ++m) ideal.add(s.multiply(s.basis_vector(m), e));
  long ideal_dim = ideal.dimension();

  // s -> s e lands in the corner, is injective, and hits all of it.
  bool corner_iso = true;
  RowSpan corner_probe = corner;
  RowSpan image(s.dim);
  std::vector<std::vector<Scalar>> theta;
  for (const auto& f : fixed) {
    std::vector<Scalar> im = s.multiply(embed(f), e);
    if (corner_probe.add(im)) corner_iso = false;  // left the corner
    image.add(im);
    theta.push_back(std::move(im));
  }
  if (image.dimension() != fixed_dim || image.dimension() != corner_dim) corner_iso = false;

  bool multiplicative = true;
  for (std::size_t bidx = 0; bidx < fixed.size(); ++bidx)
    for (std::size_t cidx = 0; cidx < fixed.size(); ++cidx) {
      std::vector<Scalar> lhs = s.multiply(embed(a.multiply(fixed[bidx], fixed[cidx])), e);
      std::vector<Scalar> rhs = s.multiply(theta[bidx], theta[cidx]);
      if (lhs != rhs) multiplicative = false;
    }

  // r -> r e is injective on all of R and spans the left ideal.
  RowSpan psi(s.dim);
  for (long i = 0; i < a.dim; ++i) psi.add(s.multiply(s.basis_vector(i), e));
  bool ideal_iso = psi.dimension() == a.dim && ideal_dim == a.dim;

  return CornerCheck{fixed_dim, corner_dim, ideal_dim, multiplicative, corner_iso, ideal_iso};
}

// Pairing dimension between projective modules with a common factor set:
// rank of the group-averaging projector on M tensor N^*, with the dual
// action rho*(h) = (rho(h)^{-1})^t.  Counts the isomorphisms, so simple
// inputs give 0 or 1.
inline long schur_pairing(const std::vector<Matrix>& rho_m, const std::vector<Matrix>& rho_n,
                          const std::vector<std::vector<long>>& table,
                          const std::vector<std::vector<Scalar>>& alpha) {
  long g = static_cast<long>(table.size());
  require(g >= 1 && static_cast<long>(rho_m.size()) == g && static_cast<long>(rho_n.size()) == g,
          errc::invalid_argument, "need one matrix per group element");
  auto al = [&](long h, long k) -> Scalar {
    if (alpha.empty()) return Scalar::one();
    return alpha[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
  };
  for (long h = 0; h < g; ++h)
    for (long k = 0; k < g; ++k) {
      long hk = table[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
      require(rho_m[static_cast<std::size_t>(h)] * rho_m[static_cast<std::size_t>(k)] ==
                  al(h, k) * rho_m[static_cast<std::size_t>(hk)],
              errc::relation_fails, "left input is not a module for the factor set");
      require(rho_n[static_cast<std::size_t>(h)] * rho_n[static_cast<std::size_t>(k)] ==
                  al(h, k) * rho_n[static_cast<std::size_t>(hk)],
              errc::relation_fails, "right input is not a module for the factor set");
    }

  std::vector<Matrix> tau;
  for (long h = 0; h < g; ++h)
    tau.push_back(kron(rho_m[static_cast<std::size_t>(h)],
                       rho_n[static_cast<std::size_t>(h)].inverse().transpose()));
  for (long h = 0; h < g; ++h)
    for (long k = 0; k < g; ++k)
      require(tau[static_cast<std::size_t>(h)] * tau[static_cast<std::size_t>(k)] ==
                  tau[static_cast<std::size_t>(table[static_cast<std::size_t>(h)]
                                                    [static_cast<std::size_t>(k)])],
              errc::relation_fails, "factor sets do not cancel on the tensor product");

  long tdim = tau.front().rows();
  Matrix avg(tdim, tdim);
  Scalar inv = Scalar::from_cyc(CycRat(Rat(1, g)));
  for (const Matrix& t : tau) avg = avg + inv * t;
  require((avg * avg - avg).is_zero(), errc::relation_fails,
          "averaging operator is not idempotent");
  return avg.rank();
}

}  // namespace hecke
