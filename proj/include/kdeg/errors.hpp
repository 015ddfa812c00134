#pragma once

#include <stdexcept>
#include <string>

namespace kdeg {

// Two scalars from incompatible domains met in one operation
// (different prime moduli, or a modulus mixed with an exact integer
// that cannot be promoted).
struct domain_mismatch : std::runtime_error {
  explicit domain_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's domain: zero polynomial where a nonzero
// one is required, all-zero tuple, zero vector, t = 0 scaling, ...
struct degenerate_input : std::invalid_argument {
  explicit degenerate_input(const std::string& what) : std::invalid_argument(what) {}
};

// A (q, n, ...) combination an operation deliberately does not cover.
struct scope_error : std::invalid_argument {
  explicit scope_error(const std::string& what) : std::invalid_argument(what) {}
};

// A probe could not complete (persistent indeterminacy hits, or
// run disagreement that survived escalation).
struct probe_failure : std::runtime_error {
  explicit probe_failure(const std::string& what) : std::runtime_error(what) {}
};

// An identity that must hold exactly (an exact division, a guaranteed
// factorization step) failed; indicates a bug, not bad input.
struct internal_inconsistency : std::logic_error {
  explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

// A chart inversion was requested at a point where a normalization
// entry vanishes.
struct chart_out_of_domain : std::runtime_error {
  explicit chart_out_of_domain(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kdeg
