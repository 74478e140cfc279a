#pragma once

// Calibrated modules over the affine Hecke algebra of type A, realized as
// explicit matrices on the span of standard tableaux of a placed shape.
// The generator family is T_2..T_n together with the commuting diagonal
// family X^{eps_1}..X^{eps_n}; matrices act on column vectors, so entry
// (i, j) is the coefficient of basis vector i in the image of vector j.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/shapes.hpp"

namespace hecke {

struct CalibratedModule {
  PlacedShape shape;
  std::vector<StandardTableau> basis;
  long n;
  std::vector<Matrix> t;  // t[i-2] is the action of T_i, i = 2..n
  std::vector<Matrix> x;  // x[j-1] is the action of X^{eps_j}, diagonal

  long dim() const { return static_cast<long>(basis.size()); }

  const Matrix& T(long i) const {
    require(i >= 2 && i <= n, errc::invalid_argument, "T index out of range");
    return t[static_cast<std::size_t>(i - 2)];
  }

  const Matrix& X(long j) const {
    require(j >= 1 && j <= n, errc::invalid_argument, "X index out of range");
    return x[static_cast<std::size_t>(j - 1)];
  }

  // All generator matrices, for commutant computations.
  std::vector<Matrix> generators() const {
    std::vector<Matrix> g = t;
    g.insert(g.end(), x.begin(), x.end());
    return g;
  }
};

// The basis is ordered by the content sequences of the tableaux, compared
// entrywise as strings with shorter strings first. This pins down every
// serialized matrix.
inline std::vector<std::string> content_key(const PlacedShape& s, const StandardTableau& t) {
  std::vector<std::string> key;
  for (const Scalar& c : contents_of(s, t)) key.push_back(c.to_string());
  return key;
}

inline CalibratedModule build_module(const PlacedShape& shape) {
  std::vector<StandardTableau> tabs = standard_tableaux(shape);
  require(!tabs.empty(), errc::empty_shape, "shape has no standard tableaux");

  std::vector<std::vector<std::string>> keys;
  keys.reserve(tabs.size());
  for (const StandardTableau& t : tabs) keys.push_back(content_key(shape, t));
  std::vector<long> order(tabs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<long>(i);
  std::sort(order.begin(), order.end(),
            [&](long a, long b) { return shortlex_less(keys[a], keys[b]); });
  std::vector<StandardTableau> sorted;
  sorted.reserve(tabs.size());
  for (long i : order) sorted.push_back(tabs[static_cast<std::size_t>(i)]);

  CalibratedModule m{shape, std::move(sorted), shape.box_count(), {}, {}};

  std::map<std::vector<long>, long> index_of;
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    index_of[m.basis[i].box_of_entry] = static_cast<long>(i);

  long d = m.dim();
  std::vector<std::vector<Scalar>> contents;
  contents.reserve(m.basis.size());
  for (const StandardTableau& t : m.basis) contents.push_back(contents_of(shape, t));

  for (long j = 1; j <= m.n; ++j) {
    Matrix xj = Matrix::identity(d);
    for (long b = 0; b < d; ++b)
      xj.at(b, b) = contents[static_cast<std::size_t>(b)][static_cast<std::size_t>(j - 1)];
    m.x.push_back(std::move(xj));
  }

  Scalar qmqinv = Scalar::q(1) - Scalar::q(-1);
  for (long i = 2; i <= m.n; ++i) {
    Matrix ti(d, d);
    for (long col = 0; col < d; ++col) {
      const StandardTableau& L = m.basis[static_cast<std::size_t>(col)];
      const Scalar& prev = contents[static_cast<std::size_t>(col)][static_cast<std::size_t>(i - 2)];
      const Scalar& cur = contents[static_cast<std::size_t>(col)][static_cast<std::size_t>(i - 1)];
      Scalar denom = Scalar::one() - prev / cur;
      require(!denom.is_zero(), errc::denominator_vanishes,
              "entries " + std::to_string(i - 1) + " and " + std::to_string(i) +
                  " have equal contents");
      Scalar diag = qmqinv / denom;
      ti.at(col, col) = diag;
      StandardTableau swapped;
      if (apply_transposition(shape, L, i, swapped)) {
        auto it = index_of.find(swapped.box_of_entry);
        require(it != index_of.end(), errc::invalid_argument, "transposed tableau missing");
        ti.at(it->second, col) = Scalar::q(-1) + diag;
      }
    }
    m.t.push_back(std::move(ti));
  }
  return m;
}

// Diagonal action of the monomial with exponent vector lambda.
inline Matrix act_X_lambda(const CalibratedModule& m, const std::vector<long>& lambda) {
  require(static_cast<long>(lambda.size()) == m.n, errc::shape_mismatch,
          "exponent vector length mismatch");
  Matrix out = Matrix::identity(m.dim());
  for (long b = 0; b < m.dim(); ++b) {
    Scalar v = Scalar::one();
    std::vector<Scalar> c = contents_of(m.shape, m.basis[static_cast<std::size_t>(b)]);
    for (long j = 0; j < m.n; ++j)
      v = v * c[static_cast<std::size_t>(j)].pow(lambda[static_cast<std::size_t>(j)]);
    out.at(b, b) = v;
  }
  return out;
}

struct RelationCheck {
  std::string name;
  Matrix residual;
  bool holds() const { return residual.is_zero(); }
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds()) return false;
    return true;
  }

  std::vector<std::string> failed_names() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.holds()) out.push_back(c.name);
    return out;
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json jc;
      jc["relation"] = c.name;
      jc["holds"] = c.holds();
      if (!c.holds()) {
        Json rows = Json::array();
        for (long i = 0; i < c.residual.rows(); ++i) {
          Json row = Json::array();
          for (long j = 0; j < c.residual.cols(); ++j) row.push_back(c.residual.at(i, j).to_string());
          rows.push_back(row);
        }
        jc["residual"] = rows;
      }
      arr.push_back(jc);
    }
    Json out;
    out["checks"] = arr;
    out["all_hold"] = all_hold();
    return out;
  }
};

// Defining relations of the affine algebra, checked as exact matrix
// identities. The division-free form of the cross relation is used:
// X^{eps_i} T_i - T_i X^{eps_{i-1}} = (q - q^{-1}) X^{eps_i}.
inline RelationReport verify_affine_relations(const CalibratedModule& m) {
  RelationReport rep;
  long d = m.dim();
  Matrix id = Matrix::identity(d);
  Scalar qmqinv = Scalar::q(1) - Scalar::q(-1);
  auto push = [&](std::string name, Matrix residual) {
    rep.checks.push_back({std::move(name), std::move(residual)});
  };

  for (long i = 2; i <= m.n; ++i)
    push("quadratic T" + std::to_string(i), m.T(i) * m.T(i) - qmqinv * m.T(i) - id);
  for (long i = 2; i + 1 <= m.n; ++i)
    push("braid T" + std::to_string(i) + " T" + std::to_string(i + 1),
         m.T(i) * m.T(i + 1) * m.T(i) - m.T(i + 1) * m.T(i) * m.T(i + 1));
  for (long i = 2; i <= m.n; ++i)
    for (long j = i + 2; j <= m.n; ++j)
      push("commute T" + std::to_string(i) + " T" + std::to_string(j),
           m.T(i) * m.T(j) - m.T(j) * m.T(i));
  if (m.n >= 2)
    push("mixed braid X1 T2",
         m.X(1) * m.T(2) * m.X(1) * m.T(2) - m.T(2) * m.X(1) * m.T(2) * m.X(1));
  for (long i = 3; i <= m.n; ++i)
    push("commute X1 T" + std::to_string(i), m.X(1) * m.T(i) - m.T(i) * m.X(1));
  for (long i = 1; i <= m.n; ++i)
    for (long j = i + 1; j <= m.n; ++j)
      push("commute X" + std::to_string(i) + " X" + std::to_string(j),
           m.X(i) * m.X(j) - m.X(j) * m.X(i));
  for (long i = 2; i <= m.n; ++i)
    push("recursion X" + std::to_string(i), m.X(i) - m.T(i) * m.X(i - 1) * m.T(i));
  for (long i = 2; i <= m.n; ++i)
    push("cross X" + std::to_string(i) + " T" + std::to_string(i),
         m.X(i) * m.T(i) - m.T(i) * m.X(i - 1) - qmqinv * m.X(i));
  for (long i = 2; i <= m.n; ++i)
    for (long j = 1; j <= m.n; ++j) {
      if (j == i - 1 || j == i) continue;
      push("commute X" + std::to_string(j) + " T" + std::to_string(i),
           m.X(j) * m.T(i) - m.T(i) * m.X(j));
    }
  return rep;
}

inline bool is_simple(const CalibratedModule& m) {
  return commutant_dimension(m.generators()) == 1;
}

// e_1..e_k of a list of scalars, via the product of (t + c_i).
inline std::vector<Scalar> elementary_symmetric(const std::vector<Scalar>& values) {
  std::vector<Scalar> e(values.size() + 1, Scalar::zero());
  e[0] = Scalar::one();
  std::size_t used = 0;
  for (const Scalar& v : values) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] = e[k] + e[k - 1] * v;
  }
  return std::vector<Scalar>(e.begin() + 1, e.end());
}

struct CentralCharacter {
  std::vector<Scalar> values;      // the content multiset, canonically sorted
  std::vector<Scalar> elementary;  // e_1..e_n of the multiset

  friend bool operator==(const CentralCharacter& a, const CentralCharacter& b) {
    return a.values == b.values;
  }
  friend bool operator!=(const CentralCharacter& a, const CentralCharacter& b) {
    return !(a == b);
  }

  Json to_json() const {
    Json jv = Json::array();
    for (const Scalar& v : values) jv.push_back(v.to_string());
    Json je = Json::array();
    for (const Scalar& v : elementary) je.push_back(v.to_string());
    Json out;
    out["values"] = jv;
    out["elementary"] = je;
    return out;
  }
};

inline std::vector<Scalar> sorted_by_string(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end(), [](const Scalar& a, const Scalar& b) {
    return shortlex_less(a.to_string(), b.to_string());
  });
  return values;
}

// The content multiset, which the symmetric functions of the X family act
// through. Every basis tableau must give the same multiset.
inline CentralCharacter central_character(const CalibratedModule& m) {
  CentralCharacter out;
  out.values = sorted_by_string(contents_of(m.shape, m.basis.front()));
  for (const StandardTableau& t : m.basis) {
    std::vector<Scalar> other = sorted_by_string(contents_of(m.shape, t));
    require(other == out.values, errc::inconsistent_character,
            "content multiset depends on the tableau");
  }
  out.elementary = elementary_symmetric(out.values);
  return out;
}

}  // namespace hecke
