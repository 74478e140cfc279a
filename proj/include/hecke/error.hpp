#pragma once

/*
 * Typed errors for the whole library.  Every throwing site names a
 * condition from the errc enum so callers (and the CLI exit-code
 * mapping) can react without parsing message strings.
 */

#include <stdexcept>
#include <string>

namespace hecke {

enum class errc {
  invalid_argument,
  parse_error,
  division_by_zero,
  shape_mismatch,
  singular_matrix,
  not_contained,
  page_collision,
  zero_token,
  empty_shape,
  denominator_vanishes,
  inconsistent_character,
  nw_condition_fails,
  not_semisimple,
  no_match,
  ambiguous,
  specialization_pole,
  closure_diverged,
  not_inertial,
  not_schur,
  not_proportional,
  not_invariant,
  action_not_automorphism,
  relation_fails,
  unexpected_homomorphism,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse_error: return "parse_error";
    case errc::division_by_zero: return "division_by_zero";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::singular_matrix: return "singular_matrix";
    case errc::not_contained: return "not_contained";
    case errc::page_collision: return "page_collision";
    case errc::zero_token: return "zero_token";
    case errc::empty_shape: return "empty_shape";
    case errc::denominator_vanishes: return "denominator_vanishes";
    case errc::inconsistent_character: return "inconsistent_character";
    case errc::nw_condition_fails: return "nw_condition_fails";
    case errc::not_semisimple: return "not_semisimple";
    case errc::no_match: return "no_match";
    case errc::ambiguous: return "ambiguous";
    case errc::specialization_pole: return "specialization_pole";
    case errc::closure_diverged: return "closure_diverged";
    case errc::not_inertial: return "not_inertial";
    case errc::not_schur: return "not_schur";
    case errc::not_proportional: return "not_proportional";
    case errc::not_invariant: return "not_invariant";
    case errc::action_not_automorphism: return "action_not_automorphism";
    case errc::relation_fails: return "relation_fails";
    case errc::unexpected_homomorphism: return "unexpected_homomorphism";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace hecke
