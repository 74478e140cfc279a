#pragma once

// Cyclotomic quotients of the affine algebra and their fixed-point
// subalgebras.  A calibrated module whose northwest corner contents all lie
// in the parameter list transports to the quotient by setting T_1 to the
// diagonal X^{eps_1}; everything downstream (Jucys-Murphy words, the module
// inventory over r-tuples of partitions, central character recovery, the
// q = 1 group algebra check, and the Z/p fixed subalgebra dimension) works
// inside the resulting faithful matrix images.

#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hecke/seminormal.hpp"

namespace hecke {

struct CyclotomicSpec {
  long r;
  std::vector<Scalar> u;
  std::optional<CycRat> q_value;  // absent means generic q

  void validate() const {
    require(r >= 1, errc::invalid_argument, "need r >= 1");
    require(static_cast<long>(u.size()) == r, errc::invalid_argument, "need r parameters");
    for (const Scalar& v : u)
      require(!v.is_zero(), errc::invalid_argument, "zero cyclotomic parameter");
  }

  Json to_json() const {
    Json ju = Json::array();
    for (const Scalar& v : u) ju.push_back(v.to_string());
    Json out;
    out["r"] = r;
    out["u"] = ju;
    out["q"] = q_value ? q_value->to_string() : "q";
    return out;
  }
};

// Generic parameters: powers of q spaced so widely that no ratio can meet
// a power q^{2k} with |k| <= n.
inline CyclotomicSpec generic_cyclotomic_spec(long r, long n) {
  CyclotomicSpec spec{r, {}, std::nullopt};
  for (long j = 0; j < r; ++j) spec.u.push_back(Scalar::q((2 * n + 1) * j));
  spec.validate();
  return spec;
}

struct HrpnSpec {
  long r, p, d;
  std::vector<Scalar> x;
  CycRat xi;

  // u_{l p + k + 1} = xi^k x_l: the parameter list is partitioned into d
  // blocks of p, each block an orbit of multiplication by xi.
  std::vector<Scalar> derived_u() const {
    std::vector<Scalar> u;
    for (long l = 0; l < d; ++l)
      for (long k = 0; k < p; ++k)
        u.push_back(Scalar::from_cyc(xi.pow(k)) * x[static_cast<std::size_t>(l)]);
    return u;
  }

  void validate() const {
    require(p >= 1 && d >= 1 && r == p * d, errc::invalid_argument, "need r = p d");
    require(static_cast<long>(x.size()) == d, errc::invalid_argument, "need d parameters");
    for (const Scalar& v : x)
      require(!v.is_zero(), errc::invalid_argument, "zero parameter");
    require(xi.pow(p) == CycRat(1), errc::invalid_argument, "xi must be a p-th root of unity");
    for (long k = 1; k < p; ++k)
      require(xi.pow(k) != CycRat(1), errc::invalid_argument, "xi must be a primitive p-th root");
    // prod_j (t - u_j) = prod_l (t^p - x_l^p), coefficient by coefficient.
    std::vector<Scalar> lhs{Scalar::one()};
    for (const Scalar& uj : derived_u()) {
      std::vector<Scalar> next(lhs.size() + 1, Scalar::zero());
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        next[i] = next[i] + lhs[i];           // t * coefficient
        next[i + 1] = next[i + 1] - uj * lhs[i];
      }
      lhs = std::move(next);
    }
    std::vector<Scalar> rhs{Scalar::one()};
    for (const Scalar& xl : x) {
      Scalar c = xl.pow(p);
      std::vector<Scalar> next(rhs.size() + p, Scalar::zero());
      for (std::size_t i = 0; i < rhs.size(); ++i) {
        next[i] = next[i] + rhs[i];
        next[i + p] = next[i + p] - c * rhs[i];
      }
      rhs = std::move(next);
    }
    require(lhs == rhs, errc::invalid_argument, "parameter blocks are not xi-orbits");
  }

  CyclotomicSpec cyclotomic() const { return CyclotomicSpec{r, derived_u(), std::nullopt}; }

  Json to_json() const {
    Json jx = Json::array();
    for (const Scalar& v : x) jx.push_back(v.to_string());
    Json out;
    out["r"] = r;
    out["p"] = p;
    out["d"] = d;
    out["x"] = jx;
    out["xi"] = xi.to_string();
    return out;
  }
};

inline HrpnSpec generic_hrpn_spec(long r, long p, long n) {
  require(p >= 1 && r % p == 0, errc::invalid_argument, "p must divide r");
  long d = r / p;
  HrpnSpec spec{r, p, d, {}, CycRat::zeta(p, 1)};
  for (long l = 0; l < d; ++l) spec.x.push_back(Scalar::q((2 * n + 1) * l));
  spec.validate();
  return spec;
}

struct RTuple {
  std::vector<Partition> tuple;

  long boxes() const {
    long n = 0;
    for (const Partition& p : tuple) n += p.size();
    return n;
  }

  friend bool operator==(const RTuple& a, const RTuple& b) { return a.tuple == b.tuple; }
  friend bool operator!=(const RTuple& a, const RTuple& b) { return !(a == b); }

  Json to_json() const {
    Json out = Json::array();
    for (const Partition& p : tuple) out.push_back(p.parts);
    return out;
  }
};

// One page per nonempty component, token u_i.
inline PlacedShape shape_for_tuple(const CyclotomicSpec& spec, const RTuple& t) {
  require(static_cast<long>(t.tuple.size()) == spec.r, errc::invalid_argument,
          "tuple length must equal r");
  std::vector<PageRef> pages;
  for (long i = 0; i < spec.r; ++i) {
    const Partition& p = t.tuple[static_cast<std::size_t>(i)];
    if (p.empty()) continue;
    pages.push_back(PageRef{spec.u[static_cast<std::size_t>(i)], SkewShape(p, Partition())});
  }
  return PlacedShape(pages);
}

// All r-tuples of partitions with n boxes in total, in a fixed order:
// box counts per component in descending lexicographic order, partitions
// in enumeration order within each component.
inline std::vector<RTuple> r_tuples(long r, long n) {
  std::vector<RTuple> out;
  std::vector<Partition> current(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, long idx, long remaining) -> void {
    if (idx == r - 1) {
      for (const Partition& p : partitions_of(remaining)) {
        current[static_cast<std::size_t>(idx)] = p;
        out.push_back(RTuple{current});
      }
      return;
    }
    for (long take = remaining; take >= 0; --take)
      for (const Partition& p : partitions_of(take)) {
        current[static_cast<std::size_t>(idx)] = p;
        self(self, idx + 1, remaining - take);
      }
  };
  rec(rec, 0, n);
  return out;
}

struct SemisimplicityCertificate {
  bool semisimple;
  std::string condition;  // empty when semisimple
  long i = 0, j = 0, k = 0;

  Json to_json() const {
    Json out;
    out["semisimple"] = semisimple;
    if (!semisimple) {
      out["condition"] = condition;
      out["i"] = i;
      out["j"] = j;
      out["k"] = k;
    }
    return out;
  }
};

namespace detail {

inline bool scalar_vanishes(const Scalar& s, const std::optional<CycRat>& q_value) {
  if (!q_value) return s.is_zero();
  return s.substitute_q(*q_value) == CycRat(0);
}

}  // namespace detail

// The quotient is split semisimple when the q-integers [1]..[n] are nonzero
// and no parameter ratio u_i / u_j lands in {1, q^2, ..., q^(2n)}.
inline SemisimplicityCertificate check_semisimple(const CyclotomicSpec& spec, long n) {
  spec.validate();
  for (long k = 2; k <= n; ++k) {
    Scalar qint = Scalar::zero();
    for (long j = 0; j < k; ++j) qint = qint + Scalar::q(k - 1 - 2 * j);
    if (detail::scalar_vanishes(qint, spec.q_value))
      return {false, "q_integer_vanishes", 0, 0, k};
  }
  for (long i = 1; i <= spec.r; ++i)
    for (long j = 1; j <= spec.r; ++j) {
      if (i == j) continue;
      Scalar ratio = spec.u[static_cast<std::size_t>(i - 1)] /
                     spec.u[static_cast<std::size_t>(j - 1)];
      for (long k = 0; k <= n; ++k)
        if (detail::scalar_vanishes(ratio - Scalar::q(2 * k), spec.q_value))
          return {false, "parameter_ratio", i, j, k};
    }
  return {true, "", 0, 0, 0};
}

struct TransportedModule {
  CalibratedModule base;
  CyclotomicSpec spec;
  Matrix t1;
  RelationReport relations;
  bool simple;

  long n() const { return base.n; }
  long dim() const { return base.dim(); }
  const Matrix& T(long i) const { return i == 1 ? t1 : base.T(i); }
  const Matrix& X(long j) const { return base.X(j); }

  std::vector<Matrix> generators() const {
    std::vector<Matrix> g{t1};
    g.insert(g.end(), base.t.begin(), base.t.end());
    return g;
  }
};

// Quotient relations on the transported generator family.  Works for any
// module type exposing T(i), dim() and n(), so twisted variants can be
// re-verified with the same relation list.
template <class Module>
RelationReport verify_cyclotomic_relations(const CyclotomicSpec& spec, const Module& m) {
  RelationReport rep;
  long d = m.dim();
  Matrix id = Matrix::identity(d);
  Scalar qmqinv = Scalar::q(1) - Scalar::q(-1);
  auto push = [&](std::string name, Matrix residual) {
    rep.checks.push_back({std::move(name), std::move(residual)});
  };

  Matrix prod = id;
  for (const Scalar& uj : spec.u) prod = prod * (m.T(1) - uj * id);
  push("cyclotomic T1", prod);
  for (long i = 2; i <= m.n(); ++i)
    push("quadratic T" + std::to_string(i), m.T(i) * m.T(i) - qmqinv * m.T(i) - id);
  if (m.n() >= 2)
    push("mixed braid T1 T2",
         m.T(1) * m.T(2) * m.T(1) * m.T(2) - m.T(2) * m.T(1) * m.T(2) * m.T(1));
  for (long i = 2; i + 1 <= m.n(); ++i)
    push("braid T" + std::to_string(i) + " T" + std::to_string(i + 1),
         m.T(i) * m.T(i + 1) * m.T(i) - m.T(i + 1) * m.T(i) * m.T(i + 1));
  for (long i = 1; i <= m.n(); ++i)
    for (long j = i + 2; j <= m.n(); ++j)
      push("commute T" + std::to_string(i) + " T" + std::to_string(j),
           m.T(i) * m.T(j) - m.T(j) * m.T(i));
  return rep;
}

// Sets T_1 to the diagonal X^{eps_1}.  Requires every northwest corner
// content of the shape to appear among the parameters, and re-verifies the
// quotient relations on the result.
inline TransportedModule transport_to_cyclotomic(const CalibratedModule& m,
                                                 const CyclotomicSpec& spec) {
  spec.validate();
  for (long b : m.shape.nw_corners()) {
    Scalar c = m.shape.content(b);
    bool found = false;
    for (const Scalar& uj : spec.u)
      if (c == uj) {
        found = true;
        break;
      }
    require(found, errc::nw_condition_fails,
            "northwest corner content " + c.to_string() + " is not a parameter");
  }
  TransportedModule out{m, spec, m.X(1), {}, false};
  out.relations = verify_cyclotomic_relations(spec, out);
  require(out.relations.all_hold(), errc::relation_fails,
          "transported module fails a quotient relation");
  out.simple = commutant_dimension(out.generators()) == 1;
  return out;
}

// Jucys-Murphy words: M_i = T_i ... T_2 T_1 T_2 ... T_i.
inline std::vector<std::vector<long>> jm_elements(long n) {
  std::vector<std::vector<long>> words;
  for (long i = 1; i <= n; ++i) {
    std::vector<long> w;
    for (long k = i; k >= 1; --k) w.push_back(k);
    for (long k = 2; k <= i; ++k) w.push_back(k);
    words.push_back(std::move(w));
  }
  return words;
}

inline Matrix evaluate_word(const TransportedModule& m, const std::vector<long>& word) {
  Matrix out = Matrix::identity(m.dim());
  for (long letter : word) out = out * m.T(letter);
  return out;
}

struct InventoryEntry {
  RTuple tuple;
  PlacedShape shape;
  TransportedModule module;
};

struct Inventory {
  CyclotomicSpec spec;
  long n;
  std::vector<InventoryEntry> entries;
  long dim_square_sum;
  long expected;  // r^n n!

  Json to_json() const {
    Json list = Json::array();
    for (const auto& e : entries) {
      Json je;
      je["tuple"] = e.tuple.to_json();
      je["dim"] = e.module.dim();
      je["simple"] = e.module.simple;
      list.push_back(je);
    }
    Json out;
    out["spec"] = spec.to_json();
    out["n"] = n;
    out["modules"] = list;
    out["dim_square_sum"] = dim_square_sum;
    out["expected"] = expected;
    return out;
  }
};

// One simple module per r-tuple of partitions with n boxes; the squared
// dimensions must exhaust r^n n!.
inline Inventory modules_inventory(const CyclotomicSpec& spec, long n, long jobs = 1) {
  spec.validate();
  SemisimplicityCertificate cert = check_semisimple(spec, n);
  require(cert.semisimple, errc::not_semisimple,
          "inventory requires a semisimple specialization (" + cert.condition + ")");

  std::vector<RTuple> tuples = r_tuples(spec.r, n);
  std::vector<std::optional<InventoryEntry>> slots(tuples.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < tuples.size(); i += step) {
      PlacedShape shape = shape_for_tuple(spec, tuples[i]);
      TransportedModule mod = transport_to_cyclotomic(build_module(shape), spec);
      slots[i] = InventoryEntry{tuples[i], std::move(shape), std::move(mod)};
    }
  };
  long threads = jobs < 1 ? 1 : jobs;
  if (threads == 1 || tuples.size() <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (long t = 0; t < threads; ++t)
      pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
    for (auto& th : pool) th.join();
  }

  Inventory inv{spec, n, {}, 0, 0};
  for (auto& s : slots) {
    inv.dim_square_sum += s->module.dim() * s->module.dim();
    inv.entries.push_back(std::move(*s));
  }
  inv.expected = 1;
  for (long i = 0; i < n; ++i) inv.expected *= spec.r;
  for (long i = 2; i <= n; ++i) inv.expected *= i;
  require(inv.dim_square_sum == inv.expected, errc::invalid_argument,
          "squared dimensions do not exhaust the algebra");
  return inv;
}

// Recover a partition from the multiset of its diagonal indices by peeling
// principal hooks; each hook covers a contiguous diagonal interval through
// 0 exactly once.
inline Partition partition_from_diagonals(std::map<long, long> mult) {
  std::vector<long> arm, leg;
  long prev_lo = 0, prev_hi = 0;
  while (!mult.empty()) {
    long lo = mult.begin()->first;
    long hi = mult.rbegin()->first;
    require(lo <= 0 && hi >= 0, errc::no_match, "diagonal interval misses 0");
    if (!arm.empty())
      require(lo > prev_lo && hi < prev_hi, errc::no_match, "hooks are not nested");
    for (long k = lo; k <= hi; ++k) {
      auto it = mult.find(k);
      require(it != mult.end(), errc::no_match, "diagonal interval has a gap");
      if (--it->second == 0) mult.erase(it);
    }
    arm.push_back(hi);
    leg.push_back(-lo);
    prev_lo = lo;
    prev_hi = hi;
  }
  long depth = static_cast<long>(arm.size());
  std::vector<long> rows;
  for (long i = 1; i <= depth; ++i) rows.push_back(arm[static_cast<std::size_t>(i - 1)] + i);
  for (long i = depth + 1;; ++i) {
    long cnt = 0;
    for (long j = 1; j <= depth; ++j)
      if (leg[static_cast<std::size_t>(j - 1)] + j >= i) ++cnt;
    if (cnt == 0) break;
    rows.push_back(cnt);
  }
  return Partition(rows);
}

struct CenterMatch {
  RTuple tuple;
  std::vector<Scalar> contents;  // sorted as in central_character

  Json to_json() const {
    Json jc = Json::array();
    for (const Scalar& c : contents) jc.push_back(c.to_string());
    Json out;
    out["tuple"] = tuple.to_json();
    out["contents"] = jc;
    return out;
  }
};

// Inverts the central character: from the elementary symmetric values
// a_1..a_n, factor t^n - a_1 t^(n-1) + ... over the candidate contents
// u_i q^(2k) with |k| <= n, attribute each root to its parameter coset,
// and rebuild each component partition from diagonal multiplicities.
inline CenterMatch center_reconstruct(const std::vector<Scalar>& a, const CyclotomicSpec& spec,
                                      long n) {
  spec.validate();
  require(static_cast<long>(a.size()) == n, errc::invalid_argument, "need n symmetric values");

  std::vector<Scalar> coeffs{Scalar::one()};
  for (long k = 0; k < n; ++k) {
    Scalar c = a[static_cast<std::size_t>(k)];
    coeffs.push_back(k % 2 == 0 ? -c : c);
  }

  struct Candidate {
    long page;  // 1-based parameter index
    long diag;
    Scalar value;
  };
  std::vector<Candidate> candidates;
  for (long i = 1; i <= spec.r; ++i)
    for (long k = -n; k <= n; ++k)
      candidates.push_back({i, k, spec.u[static_cast<std::size_t>(i - 1)] * Scalar::q(2 * k)});

  std::vector<Candidate> roots;
  for (long round = 0; round < n; ++round) {
    bool found = false;
    for (const Candidate& cand : candidates) {
      // Synthetic division by (t - value); the final entry is the remainder.
      std::vector<Scalar> div(coeffs.size(), Scalar::zero());
      div[0] = coeffs[0];
      for (std::size_t j = 1; j < coeffs.size(); ++j)
        div[j] = coeffs[j] + cand.value * div[j - 1];
      if (!div.back().is_zero()) continue;
      div.pop_back();
      coeffs = std::move(div);
      roots.push_back(cand);
      found = true;
      break;
    }
    require(found, errc::no_match, "symmetric values do not factor over the candidate contents");
  }

  // A root attributable to two different parameters cannot be resolved.
  for (const Candidate& root : roots) {
    for (const Candidate& cand : candidates) {
      if (cand.page == root.page) continue;
      require(cand.value != root.value, errc::ambiguous,
              "content " + root.value.to_string() + " matches two parameters");
    }
  }

  std::vector<std::map<long, long>> diagonals(static_cast<std::size_t>(spec.r));
  for (const Candidate& root : roots) ++diagonals[static_cast<std::size_t>(root.page - 1)][root.diag];
  RTuple tuple;
  for (long i = 0; i < spec.r; ++i)
    tuple.tuple.push_back(partition_from_diagonals(diagonals[static_cast<std::size_t>(i)]));

  CenterMatch match{std::move(tuple), {}};
  std::vector<Scalar> contents;
  for (const Candidate& root : roots) contents.push_back(root.value);
  match.contents = sorted_by_string(std::move(contents));
  std::vector<Scalar> check = elementary_symmetric(match.contents);
  require(check == a, errc::no_match, "recovered contents do not reproduce the values");
  return match;
}

inline Matrix substitute_q_matrix(const Matrix& m, const CycRat& v) {
  Matrix out(m.rows(), m.cols());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      out.at(i, j) = Scalar::from_cyc(m.at(i, j).substitute_q(v));
  return out;
}

// Parameters 1, zeta, ..., zeta^(r-1) at q = 1: the reflection group case.
inline CyclotomicSpec group_algebra_spec(long r) {
  CyclotomicSpec spec{r, {}, std::nullopt};
  for (long j = 0; j < r; ++j) spec.u.push_back(Scalar::from_cyc(CycRat::zeta(r, j)));
  spec.validate();
  return spec;
}

struct ShapeSpecialization {
  RTuple tuple;
  bool specialized;     // false means a denominator vanished at q = 1
  std::string reason;   // only when skipped
  RelationReport relations;

  Json to_json() const {
    Json out;
    out["tuple"] = tuple.to_json();
    out["status"] = specialized ? "PASS" : "SKIP";
    if (specialized)
      out["relations"] = relations.to_json();
    else
      out["reason"] = reason;
    return out;
  }
};

struct GroupAlgebraReport {
  long r, n;
  std::vector<ShapeSpecialization> shapes;

  bool all_pass() const {
    for (const auto& s : shapes)
      if (!s.specialized || !s.relations.all_hold()) return false;
    return true;
  }

  Json to_json() const {
    Json list = Json::array();
    for (const auto& s : shapes) list.push_back(s.to_json());
    Json out;
    out["r"] = r;
    out["n"] = n;
    out["shapes"] = list;
    out["all_pass"] = all_pass();
    return out;
  }
};

// Builds the inventory at generic q with parameters zeta^j, substitutes
// q = 1 entrywise, and checks the reflection group relations on the result.
inline GroupAlgebraReport group_algebra_check(long r, long n, long jobs = 1) {
  CyclotomicSpec spec = group_algebra_spec(r);
  Inventory inv = modules_inventory(spec, n, jobs);
  GroupAlgebraReport rep{r, n, {}};
  CycRat one(1);
  for (const InventoryEntry& e : inv.entries) {
    ShapeSpecialization out{e.tuple, true, "", {}};
    std::vector<Matrix> s;
    try {
      for (long i = 1; i <= n; ++i) s.push_back(substitute_q_matrix(e.module.T(i), one));
    } catch (const Error& err) {
      if (err.code() != errc::specialization_pole) throw;
      out.specialized = false;
      out.reason = err.what();
      rep.shapes.push_back(std::move(out));
      continue;
    }
    long dim = e.module.dim();
    Matrix id = Matrix::identity(dim);
    auto push = [&](std::string name, Matrix residual) {
      out.relations.checks.push_back({std::move(name), std::move(residual)});
    };
    Matrix power = id;
    for (long k = 0; k < r; ++k) power = power * s[0];
    push("order s1", power - id);
    for (long i = 2; i <= n; ++i)
      push("involution s" + std::to_string(i),
           s[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(i - 1)] - id);
    if (n >= 2)
      push("mixed braid s1 s2", s[0] * s[1] * s[0] * s[1] - s[1] * s[0] * s[1] * s[0]);
    for (long i = 2; i + 1 <= n; ++i)
      push("braid s" + std::to_string(i) + " s" + std::to_string(i + 1),
           s[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(i)] *
                   s[static_cast<std::size_t>(i - 1)] -
               s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i - 1)] *
                   s[static_cast<std::size_t>(i)]);
    for (long i = 1; i <= n; ++i)
      for (long j = i + 2; j <= n; ++j)
        push("commute s" + std::to_string(i) + " s" + std::to_string(j),
             s[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(j - 1)] -
                 s[static_cast<std::size_t>(j - 1)] * s[static_cast<std::size_t>(i - 1)]);
    rep.shapes.push_back(std::move(out));
  }
  return rep;
}

struct FixedDimensionReport {
  long r, p, n;
  long ambient;   // r^n n!
  long closure;   // dimension of the generated subalgebra
  long expected;  // r^n n! / p
  long grading;   // weight-zero basis count, computed combinatorially

  bool ok() const { return closure == expected && closure == grading; }

  Json to_json() const {
    Json out;
    out["r"] = r;
    out["p"] = p;
    out["n"] = n;
    out["ambient_dimension"] = ambient;
    out["closure_dimension"] = closure;
    out["expected"] = expected;
    out["grading_count"] = grading;
    out["ok"] = ok();
    return out;
  }
};

namespace detail {

inline std::vector<Scalar> flatten_blocks(const std::vector<Matrix>& blocks) {
  std::vector<Scalar> out;
  for (const Matrix& b : blocks)
    for (long i = 0; i < b.rows(); ++i)
      for (long j = 0; j < b.cols(); ++j) out.push_back(b.at(i, j));
  return out;
}

}  // namespace detail

// Dimension of the subalgebra generated by T_1^p, T_1^{-1} T_2 T_1 and
// T_2..T_n inside the faithful direct sum of the inventory modules.
inline FixedDimensionReport fixed_subalgebra_dimension(const HrpnSpec& spec, long n,
                                                       long jobs = 1) {
  spec.validate();
  Inventory inv = modules_inventory(spec.cyclotomic(), n, jobs);

  // Generators as block tuples over the inventory.
  std::vector<std::vector<Matrix>> gens;
  std::vector<Matrix> a0;
  for (const InventoryEntry& e : inv.entries) a0.push_back(e.module.T(1).pow(spec.p));
  gens.push_back(std::move(a0));
  if (n >= 2) {
    std::vector<Matrix> a1;
    for (const InventoryEntry& e : inv.entries)
      a1.push_back(e.module.T(1).inverse() * e.module.T(2) * e.module.T(1));
    gens.push_back(std::move(a1));
    for (long i = 2; i <= n; ++i) {
      std::vector<Matrix> ai;
      for (const InventoryEntry& e : inv.entries) ai.push_back(e.module.T(i));
      gens.push_back(std::move(ai));
    }
  }

  long width = 0;
  for (const InventoryEntry& e : inv.entries) width += e.module.dim() * e.module.dim();
  RowSpan span(width);
  std::vector<std::vector<Matrix>> worklist;
  std::vector<Matrix> unit;
  for (const InventoryEntry& e : inv.entries) unit.push_back(Matrix::identity(e.module.dim()));
  span.add(detail::flatten_blocks(unit));
  worklist.push_back(std::move(unit));

  long steps = 0;
  for (std::size_t w = 0; w < worklist.size(); ++w) {
    require(++steps <= inv.expected + 1, errc::closure_diverged, "span closure did not stabilize");
    for (const auto& g : gens) {
      std::vector<Matrix> prod;
      prod.reserve(g.size());
      for (std::size_t b = 0; b < g.size(); ++b) prod.push_back(worklist[w][b] * g[b]);
      if (span.add(detail::flatten_blocks(prod))) worklist.push_back(std::move(prod));
    }
  }

  FixedDimensionReport rep{spec.r, spec.p, n, inv.expected, span.dimension(),
                           inv.expected / spec.p, 0};
  // Weight count: exponent vectors in {0..r-1}^n with digit sum divisible
  // by p, one per permutation.
  std::vector<long> residue_count(static_cast<std::size_t>(spec.p), 0);
  residue_count[0] = 1;
  for (long step = 0; step < n; ++step) {
    std::vector<long> next(static_cast<std::size_t>(spec.p), 0);
    for (long rcl = 0; rcl < spec.p; ++rcl)
      for (long digit = 0; digit < spec.r; ++digit)
        next[static_cast<std::size_t>((rcl + digit) % spec.p)] +=
            residue_count[static_cast<std::size_t>(rcl)];
    residue_count = std::move(next);
  }
  long factorial = 1;
  for (long i = 2; i <= n; ++i) factorial *= i;
  rep.grading = residue_count[0] * factorial;
  return rep;
}

}  // namespace hecke
