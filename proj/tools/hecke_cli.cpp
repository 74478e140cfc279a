/*
 * Batch front end.  Every command writes one JSON report (stdout, or the
 * file named by --out) and a short human summary on stderr, so stdout
 * stays parseable.  Exit codes: 0 all checks pass, 1 a mathematical check
 * failed, 2 invalid input.
 *
 * Scalar strings on the command line use the library grammar (integers,
 * q, z, ^, + - * /, parentheses); z is read as a primitive r-th root of
 * unity for the r in effect.
 */

#include <CLI11.hpp>

#include <hecke/clifford.hpp>
#include <hecke/foldings.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hecke;

int exit_code_for(errc c) {
  switch (c) {
    case errc::invalid_argument:
    case errc::parse_error:
    case errc::shape_mismatch:
    case errc::page_collision:
    case errc::zero_token:
    case errc::empty_shape:
      return 2;
    default:
      return 1;
  }
}

struct RunConfig {
  long r = 0, p = 1, n = 0;
  std::vector<std::string> u, x;
  std::string q, shape, out;
  long seed = 0, jobs = 1;

  long zeta_order() const { return r >= 1 ? r : 1; }
};

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) fail(errc::invalid_argument, "cannot open output file " + cfg.out);
  f << j.dump(2) << "\n";
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

PlacedShape parse_shape(const RunConfig& cfg) {
  require(!cfg.shape.empty(), errc::invalid_argument, "this command needs --shape");
  std::string text = cfg.shape;
  if (text.front() == '@') {
    std::ifstream f(text.substr(1));
    require(static_cast<bool>(f), errc::invalid_argument, "cannot read shape file " + text.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(errc::parse_error, std::string("shape is not valid JSON: ") + e.what());
  }
  return PlacedShape::from_json(j, cfg.zeta_order());
}

std::vector<Scalar> parse_scalars(const std::vector<std::string>& texts, long zeta_order) {
  std::vector<Scalar> out;
  for (const std::string& t : texts) out.push_back(parse_scalar(t, zeta_order));
  return out;
}

CyclotomicSpec cyclotomic_spec_for(const RunConfig& cfg, long n) {
  long r = cfg.r >= 1 ? cfg.r : static_cast<long>(cfg.u.size());
  require(r >= 1, errc::invalid_argument, "need --r or --u");
  require(n >= 1, errc::invalid_argument, "need a positive box count");
  CyclotomicSpec spec = cfg.u.empty()
                            ? generic_cyclotomic_spec(r, n)
                            : CyclotomicSpec{r, parse_scalars(cfg.u, r), std::nullopt};
  if (!cfg.q.empty()) {
    Scalar v = parse_scalar(cfg.q, r);
    CycRat c = v.substitute_q(CycRat(1));
    require(Scalar::from_cyc(c) == v, errc::invalid_argument,
            "--q must be a constant scalar, not a function of q");
    spec.q_value = c;
  }
  spec.validate();
  return spec;
}

CyclotomicSpec cyclotomic_spec(const RunConfig& cfg) {
  require(cfg.n >= 1, errc::invalid_argument, "need --n");
  return cyclotomic_spec_for(cfg, cfg.n);
}

HrpnSpec hrpn_spec(const RunConfig& cfg) {
  require(cfg.r >= 1 && cfg.n >= 1, errc::invalid_argument, "need --r and --n");
  require(cfg.p >= 1 && cfg.r % cfg.p == 0, errc::invalid_argument, "--p must divide --r");
  if (cfg.x.empty()) return generic_hrpn_spec(cfg.r, cfg.p, cfg.n);
  HrpnSpec spec{cfg.r, cfg.p, cfg.r / cfg.p, parse_scalars(cfg.x, cfg.zeta_order()),
                CycRat::zeta(cfg.p)};
  spec.validate();
  return spec;
}

int cmd_tableaux(const RunConfig& cfg) {
  PlacedShape s = parse_shape(cfg);
  std::vector<StandardTableau> tabs = standard_tableaux(s);
  Json jt = Json::array();
  for (const StandardTableau& t : tabs) jt.push_back(tableau_to_json(s, t));
  emit(cfg, Json{{"shape", s.to_json()},
                 {"boxes", s.box_count()},
                 {"count", static_cast<long>(tabs.size())},
                 {"tableaux", std::move(jt)}});
  std::cerr << tabs.size() << " standard tableaux on " << s.box_count() << " boxes\n";
  return 0;
}

int cmd_rep(const RunConfig& cfg) {
  PlacedShape s = parse_shape(cfg);
  CalibratedModule m = build_module(s);
  RelationReport rel = verify_affine_relations(m);
  bool simple = is_simple(m);

  Json basis = Json::array();
  for (const StandardTableau& t : m.basis) basis.push_back(tableau_to_json(s, t));
  Json gens;
  for (long i = 2; i <= m.n; ++i) gens["T" + std::to_string(i)] = matrix_json(m.T(i));
  for (long j = 1; j <= m.n; ++j) gens["X" + std::to_string(j)] = matrix_json(m.X(j));
  emit(cfg, Json{{"shape", s.to_json()},
                 {"dim", m.dim()},
                 {"basis", std::move(basis)},
                 {"generators", std::move(gens)},
                 {"relations", rel.to_json()},
                 {"all_hold", rel.all_hold()},
                 {"simple", simple}});
  std::cerr << "dimension " << m.dim() << ", relations "
            << (rel.all_hold() ? "hold" : "FAIL") << ", " << (simple ? "simple" : "NOT simple")
            << "\n";
  return rel.all_hold() && simple ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  PlacedShape s = parse_shape(cfg);
  CalibratedModule m = build_module(s);
  RelationReport rel = verify_affine_relations(m);
  bool simple = is_simple(m);
  CentralCharacter cc = central_character(m);

  Json out{{"shape", s.to_json()},
           {"dim", m.dim()},
           {"relations", rel.to_json()},
           {"all_hold", rel.all_hold()},
           {"simple", simple},
           {"central_character", cc.to_json()},
           {"seed", cfg.seed}};

  bool control_ok = true;
  if (m.n >= 2) {
    // Seeded negative control: one perturbed generator entry must break at
    // least one relation, so the verifier is not vacuous.
    std::mt19937_64 rng(static_cast<unsigned long long>(cfg.seed));
    CalibratedModule bent = m;
    long which = static_cast<long>(rng() % static_cast<unsigned long long>(bent.t.size() + bent.x.size()));
    long row = static_cast<long>(rng() % static_cast<unsigned long long>(m.dim()));
    long col = static_cast<long>(rng() % static_cast<unsigned long long>(m.dim()));
    Matrix& target = which < static_cast<long>(bent.t.size())
                         ? bent.t[static_cast<std::size_t>(which)]
                         : bent.x[static_cast<std::size_t>(which - static_cast<long>(bent.t.size()))];
    std::string name = which < static_cast<long>(bent.t.size())
                           ? "T" + std::to_string(which + 2)
                           : "X" + std::to_string(which - static_cast<long>(bent.t.size()) + 1);
    target.at(row, col) = target.at(row, col) + Scalar::one();
    RelationReport bent_rel = verify_affine_relations(bent);
    control_ok = !bent_rel.all_hold();
    out["negative_control"] = Json{{"perturbed", name},
                                   {"row", row},
                                   {"col", col},
                                   {"relations_fail", control_ok}};
  }

  bool transported_ok = true;
  if (cfg.r >= 1 || !cfg.u.empty()) {
    CyclotomicSpec spec = cyclotomic_spec_for(cfg, m.n);
    TransportedModule tm = transport_to_cyclotomic(m, spec);
    out["cyclotomic"] = Json{{"spec", spec.to_json()},
                             {"relations", tm.relations.to_json()},
                             {"all_hold", tm.relations.all_hold()},
                             {"simple", tm.simple}};
    transported_ok = tm.relations.all_hold() && tm.simple;
  }

  emit(cfg, out);
  bool ok = rel.all_hold() && simple && control_ok && transported_ok;
  std::cerr << "dimension " << m.dim() << ": " << (ok ? "all checks pass" : "CHECK FAILED")
            << "\n";
  return ok ? 0 : 1;
}

int cmd_inventory(const RunConfig& cfg) {
  CyclotomicSpec spec = cyclotomic_spec(cfg);
  SemisimplicityCertificate cert = check_semisimple(spec, cfg.n);
  if (!cert.semisimple) {
    emit(cfg, Json{{"spec", spec.to_json()}, {"semisimple", cert.to_json()}});
    std::cerr << "parameters are not semisimple (" << cert.condition << ")\n";
    return 1;
  }
  Inventory inv = modules_inventory(spec, cfg.n, cfg.jobs);
  Json out = inv.to_json();
  out["semisimple"] = cert.to_json();
  emit(cfg, out);
  std::cerr << inv.entries.size() << " modules, sum of squared dimensions "
            << inv.dim_square_sum << " = " << inv.expected << "\n";
  return 0;
}

int cmd_decompose(const RunConfig& cfg) {
  HrpnSpec spec = hrpn_spec(cfg);
  Inventory inv = modules_inventory(spec.cyclotomic(), cfg.n, cfg.jobs);

  std::vector<DecompositionReport> reports;
  for (const InventoryEntry& e : inv.entries) reports.push_back(decompose_fixed(e.module, spec));

  std::vector<std::vector<std::size_t>> orbits = g_orbit_classes(inv, spec);
  long dim_square_sum = 0;
  bool all_simple = true;
  bool mates_match = true;
  for (const auto& orbit : orbits) {
    const DecompositionReport& rep = reports[orbit.front()];
    for (const DecompositionPiece& pc : rep.pieces) {
      dim_square_sum += pc.dim * pc.dim;
      if (pc.dim > 0 && !pc.simple) all_simple = false;
    }
    for (std::size_t k = 1; k < orbit.size(); ++k)
      if (!constituents_match(rep, reports[orbit[k]])) mates_match = false;
  }
  long expected = inv.expected / spec.p;

  Json jm = Json::array();
  for (std::size_t i = 0; i < inv.entries.size(); ++i) {
    Json je = reports[i].to_json();
    je["tuple"] = inv.entries[i].tuple.to_json();
    jm.push_back(std::move(je));
  }
  bool ok = dim_square_sum == expected && all_simple && mates_match;
  emit(cfg, Json{{"spec", spec.to_json()},
                 {"n", cfg.n},
                 {"modules", std::move(jm)},
                 {"orbit_classes", static_cast<long>(orbits.size())},
                 {"dim_square_sum", dim_square_sum},
                 {"expected", expected},
                 {"orbit_mates_isomorphic", mates_match},
                 {"all_pieces_simple", all_simple}});
  std::cerr << orbits.size() << " orbit classes, sum of squared piece dimensions "
            << dim_square_sum << " = " << expected << (ok ? "" : " MISMATCH") << "\n";
  return ok ? 0 : 1;
}

int cmd_center(const RunConfig& cfg) {
  CyclotomicSpec spec = cyclotomic_spec(cfg);
  SemisimplicityCertificate cert = check_semisimple(spec, cfg.n);
  if (!cert.semisimple) {
    emit(cfg, Json{{"spec", spec.to_json()}, {"semisimple", cert.to_json()}});
    std::cerr << "parameters are not semisimple (" << cert.condition << ")\n";
    return 1;
  }
  Inventory inv = modules_inventory(spec, cfg.n, cfg.jobs);

  bool all_round_trip = true;
  std::vector<CentralCharacter> chars;
  Json entries = Json::array();
  for (const InventoryEntry& e : inv.entries) {
    CentralCharacter cc = central_character(e.module.base);
    CenterMatch match = center_reconstruct(cc.elementary, spec, cfg.n);
    bool ok = match.tuple == e.tuple;
    if (!ok) all_round_trip = false;
    entries.push_back(Json{{"tuple", e.tuple.to_json()},
                           {"character", cc.to_json()},
                           {"round_trip", ok}});
    chars.push_back(std::move(cc));
  }
  bool distinct = true;
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i + 1; j < chars.size(); ++j)
      if (chars[i] == chars[j]) distinct = false;

  bool ok = all_round_trip && distinct;
  emit(cfg, Json{{"spec", spec.to_json()},
                 {"n", cfg.n},
                 {"entries", std::move(entries)},
                 {"characters_distinct", distinct},
                 {"all_round_trip", all_round_trip}});
  std::cerr << inv.entries.size() << " central characters, "
            << (ok ? "distinct and reconstructed" : "CHECK FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_fixed_dim(const RunConfig& cfg) {
  HrpnSpec spec = hrpn_spec(cfg);
  FixedDimensionReport rep = fixed_subalgebra_dimension(spec, cfg.n, cfg.jobs);
  emit(cfg, rep.to_json());
  std::cerr << "closure dimension " << rep.closure << ", expected " << rep.expected
            << ", grading count " << rep.grading << (rep.ok() ? "" : " MISMATCH") << "\n";
  return rep.ok() ? 0 : 1;
}

FiniteDimAlgebra diagonal_pairs_algebra() {
  FiniteDimAlgebra a;
  a.dim = 2;
  a.mul.assign(2, std::vector<std::vector<Scalar>>(2, {Scalar::zero(), Scalar::zero()}));
  a.mul[0][0][0] = Scalar::one();
  a.mul[1][1][1] = Scalar::one();
  a.unit = {Scalar::one(), Scalar::one()};
  return a;
}

FiniteDimAlgebra cyclic_algebra(long m) {
  FiniteDimAlgebra a;
  a.dim = m;
  a.mul.assign(static_cast<std::size_t>(m),
               std::vector<std::vector<Scalar>>(
                   static_cast<std::size_t>(m),
                   std::vector<Scalar>(static_cast<std::size_t>(m), Scalar::zero())));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      a.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
           [static_cast<std::size_t>((i + j) % m)] = Scalar::one();
  a.unit.assign(static_cast<std::size_t>(m), Scalar::zero());
  a.unit[0] = Scalar::one();
  return a;
}

GroupAction involution(Matrix flip) {
  return GroupAction{{{0, 1}, {1, 0}}, {Matrix::identity(flip.rows()), std::move(flip)}};
}

int cmd_skewring_check(const RunConfig& cfg) {
  struct Bed {
    std::string name;
    FiniteDimAlgebra algebra;
    GroupAction action;
    long expected_fixed;
    long expected_corner;
  };
  Matrix swap(2, 2);
  swap.at(0, 1) = Scalar::one();
  swap.at(1, 0) = Scalar::one();
  Matrix invert(4, 4);
  invert.at(0, 0) = Scalar::one();
  invert.at(3, 1) = Scalar::one();
  invert.at(2, 2) = Scalar::one();
  invert.at(1, 3) = Scalar::one();
  std::vector<Bed> beds;
  beds.push_back({"diagonal pairs, swap", diagonal_pairs_algebra(), involution(swap), 1, 1});
  beds.push_back({"diagonal pairs, trivial", diagonal_pairs_algebra(),
                  involution(Matrix::identity(2)), 2, 2});
  beds.push_back({"cyclic order four, inversion", cyclic_algebra(4), involution(invert), 3, 3});

  bool all_ok = true;
  Json jbeds = Json::array();
  for (const Bed& bed : beds) {
    CornerCheck c = fixed_corner_check(bed.algebra, bed.action);
    bool ok = c.ok() && c.fixed_dim == bed.expected_fixed && c.corner_dim == bed.expected_corner;
    if (!ok) all_ok = false;
    Json jb = c.to_json();
    jb["name"] = bed.name;
    jb["ok"] = ok;
    jbeds.push_back(std::move(jb));
  }

  // Matrix-ring sanity on the swap testbed: the skew ring is 4-dimensional
  // with a one-dimensional center.
  FiniteDimAlgebra s = skew_group_ring(diagonal_pairs_algebra(), involution(swap));
  long center = center_dimension(s);
  if (center != 1) all_ok = false;

  auto character = [](long m, long a) {
    std::vector<Matrix> rho;
    for (long l = 0; l < m; ++l) {
      Matrix v(1, 1);
      v.at(0, 0) = Scalar::from_cyc(CycRat::zeta(m).pow(a * l));
      rho.push_back(std::move(v));
    }
    return rho;
  };
  std::vector<std::vector<long>> t3(3, std::vector<long>(3, 0));
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) t3[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % 3;
  Json jpair = Json::array();
  struct Pairing {
    long left, right, expected;
  };
  for (const Pairing& pr : {Pairing{1, 1, 1}, Pairing{1, 2, 0}, Pairing{0, 0, 1}}) {
    long got = schur_pairing(character(3, pr.left), character(3, pr.right), t3, {});
    if (got != pr.expected) all_ok = false;
    jpair.push_back(Json{{"group_order", 3},
                         {"left", pr.left},
                         {"right", pr.right},
                         {"dim", got},
                         {"expected", pr.expected}});
  }

  emit(cfg, Json{{"testbeds", std::move(jbeds)},
                 {"skew_ring_center_dim", center},
                 {"pairings", std::move(jpair)},
                 {"all_ok", all_ok}});
  std::cerr << beds.size() << " testbeds, " << (all_ok ? "all pass" : "CHECK FAILED") << "\n";
  return all_ok ? 0 : 1;
}

int cmd_g2(const RunConfig& cfg) {
  ObstructionCertificate cert = g2_obstruction();
  emit(cfg, cert.to_json());
  std::cerr << cert.candidates.size() << " candidates, "
            << (cert.all_fail() ? "all fail the braid relation" : "UNEXPECTED PASS") << "\n";
  return cert.all_fail() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calibrated representations: build, verify, decompose, report"};
  app.require_subcommand(1);

  RunConfig cfg;
  int (*run)(const RunConfig&) = nullptr;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", cfg.out, "write the JSON report to this file instead of stdout");
    cmd->add_option("--jobs", cfg.jobs, "worker threads for independent module builds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "seed for the randomized negative control");
  };
  auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--shape", cfg.shape, "placed shape as inline JSON, or @file");
  };
  auto add_rn = [&](CLI::App* cmd, bool with_p) {
    cmd->add_option("--r", cfg.r, "number of cyclotomic parameters")->check(CLI::PositiveNumber);
    cmd->add_option("--n", cfg.n, "number of boxes")->check(CLI::PositiveNumber);
    if (with_p)
      cmd->add_option("--p", cfg.p, "order of the token symmetry (divides r)")
          ->check(CLI::PositiveNumber);
  };

  CLI::App* c = app.add_subcommand("tableaux", "enumerate standard tableaux of a placed shape");
  add_shape(c);
  c->add_option("--r", cfg.r, "root-of-unity order for z in shape tokens")
      ->check(CLI::PositiveNumber);
  add_common(c);
  c->callback([&] { run = cmd_tableaux; });

  c = app.add_subcommand("rep", "seminormal generator matrices of a placed shape");
  add_shape(c);
  c->add_option("--r", cfg.r, "root-of-unity order for z in shape tokens")
      ->check(CLI::PositiveNumber);
  add_common(c);
  c->callback([&] { run = cmd_rep; });

  c = app.add_subcommand("verify", "replay the defining relations on a shape's module");
  add_shape(c);
  add_rn(c, false);
  c->add_option("--u", cfg.u, "cyclotomic parameters (transport T_1 and verify the quotient)")
      ->delimiter(',');
  c->add_option("--q", cfg.q, "constant value for q in semisimplicity checks");
  add_common(c);
  c->callback([&] { run = cmd_verify; });

  c = app.add_subcommand("inventory", "all simple modules for a cyclotomic parameter list");
  add_rn(c, false);
  c->add_option("--u", cfg.u, "cyclotomic parameters (default: separated generic powers of q)")
      ->delimiter(',');
  c->add_option("--q", cfg.q, "constant value for q in semisimplicity checks");
  add_common(c);
  c->callback([&] { run = cmd_inventory; });

  c = app.add_subcommand("decompose", "split every inventory module over the fixed subalgebra");
  add_rn(c, true);
  c->add_option("--x", cfg.x, "fixed-subalgebra parameter seeds (default: generic powers of q)")
      ->delimiter(',');
  add_common(c);
  c->callback([&] { run = cmd_decompose; });

  c = app.add_subcommand("center", "central characters and their reconstruction");
  add_rn(c, false);
  c->add_option("--u", cfg.u, "cyclotomic parameters (default: separated generic powers of q)")
      ->delimiter(',');
  c->add_option("--q", cfg.q, "constant value for q in semisimplicity checks");
  add_common(c);
  c->callback([&] { run = cmd_center; });

  c = app.add_subcommand("fixed-dim", "dimension of the fixed subalgebra by span closure");
  add_rn(c, true);
  c->add_option("--x", cfg.x, "fixed-subalgebra parameter seeds (default: generic powers of q)")
      ->delimiter(',');
  add_common(c);
  c->callback([&] { run = cmd_fixed_dim; });

  c = app.add_subcommand("skewring-check", "corner and pairing checks on explicit testbeds");
  add_common(c);
  c->callback([&] { run = cmd_skewring_check; });

  c = app.add_subcommand("g2", "two-candidate obstruction certificate for the bonded pair");
  add_common(c);
  c->callback([&] { run = cmd_g2; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run(cfg);
  } catch (const Error& e) {
    Json err{{"error", Json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
    try {
      emit(cfg, err);
    } catch (...) {
      std::cout << err.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
