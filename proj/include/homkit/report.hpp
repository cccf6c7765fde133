#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homkit/linalg.hpp"

namespace homkit {

// Counterexample for a failed axiom: the first failing basis tuple in
// lexicographic order plus the residual vector (lhs - rhs).
struct Witness {
  std::vector<std::size_t> indices;
  Vec residual;
};

enum class CheckStatus { pass, fail, skip };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::optional<Witness> witness;
  std::string note;  // set for skipped checks
};

// Per-axiom pass/fail record. A report passes iff every check passes
// (skipped checks only fail the report under strict interpretation).
class VerificationReport {
 public:
  void add_pass(std::string name);
  void add_fail(std::string name, Witness w);
  void add_skip(std::string name, std::string note);
  void merge(const std::string& prefix, const VerificationReport& other);

  bool all_pass() const;
  bool all_pass_strict() const;  // skips count as failures
  bool has_failure() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  std::string summary() const;  // short human-readable line

  // When set, verifiers stop adding checks after the first failure; used by
  // perturbation sweeps where only detection matters.
  bool stop_on_failure = false;
  bool should_stop() const { return stop_on_failure && has_failure(); }

 private:
  std::vector<Check> checks_;
};

// Compares lhs and rhs over all index tuples in the given dimension box,
// lexicographically, and records a single check. The callbacks produce the
// two sides as vectors for one basis tuple.
using TupleMap = std::function<Vec(std::span<const std::size_t>)>;

void check_tuples(VerificationReport& rep, std::string name,
                  std::span<const std::size_t> dims, const TupleMap& lhs,
                  const TupleMap& rhs);

// Single-identity convenience: compares two matrices entrywise and reports
// the first differing column as the witness tuple.
void check_matrix_equal(VerificationReport& rep, std::string name, const Matrix& lhs,
                        const Matrix& rhs);

}  // namespace homkit
