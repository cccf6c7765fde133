#include "homkit/report.hpp"

#include <sstream>

namespace homkit {

void VerificationReport::add_pass(std::string name) {
  checks_.push_back({std::move(name), CheckStatus::pass, std::nullopt, ""});
}

void VerificationReport::add_fail(std::string name, Witness w) {
  checks_.push_back({std::move(name), CheckStatus::fail, std::move(w), ""});
}

void VerificationReport::add_skip(std::string name, std::string note) {
  checks_.push_back({std::move(name), CheckStatus::skip, std::nullopt, std::move(note)});
}

void VerificationReport::merge(const std::string& prefix, const VerificationReport& other) {
  for (const Check& c : other.checks_) {
    Check copy = c;
    copy.name = prefix + c.name;
    checks_.push_back(std::move(copy));
    if (should_stop()) return;
  }
}

bool VerificationReport::all_pass() const {
  for (const Check& c : checks_) {
    if (c.status == CheckStatus::fail) return false;
  }
  return true;
}

bool VerificationReport::all_pass_strict() const {
  for (const Check& c : checks_) {
    if (c.status != CheckStatus::pass) return false;
  }
  return true;
}

bool VerificationReport::has_failure() const { return !all_pass(); }

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const Check& c : checks_) {
    switch (c.status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::skip: ++skip; break;
    }
  }
  std::ostringstream os;
  os << (fail == 0 ? "pass" : "FAIL") << " (" << pass << " passed";
  if (fail) os << ", " << fail << " failed";
  if (skip) os << ", " << skip << " skipped";
  os << ")";
  return os.str();
}

void check_tuples(VerificationReport& rep, std::string name,
                  std::span<const std::size_t> dims, const TupleMap& lhs,
                  const TupleMap& rhs) {
  if (rep.should_stop()) return;
  std::vector<std::size_t> idx(dims.size(), 0);
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  for (std::size_t n = 0; n < total; ++n) {
    Vec l = lhs(idx);
    Vec r = rhs(idx);
    Vec residual = vec_sub(l, r);
    if (!is_zero_vec(residual)) {
      rep.add_fail(std::move(name), Witness{idx, std::move(residual)});
      return;
    }
    // lexicographic increment
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  rep.add_pass(std::move(name));
}

void check_matrix_equal(VerificationReport& rep, std::string name, const Matrix& lhs,
                        const Matrix& rhs) {
  if (rep.should_stop()) return;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw Error(Error::Kind::input, "check_matrix_equal shape mismatch: " + name);
  }
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    Vec diff = vec_sub(lhs.col(j), rhs.col(j));
    if (!is_zero_vec(diff)) {
      rep.add_fail(std::move(name), Witness{{j}, std::move(diff)});
      return;
    }
  }
  rep.add_pass(std::move(name));
}

}  // namespace homkit
