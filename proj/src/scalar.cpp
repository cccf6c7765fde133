#include "homkit/scalar.hpp"

#include <charconv>

namespace homkit {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > 0xFFFFFFFFull) {
    throw Error(Error::Kind::input, "prime modulus too large (need p < 2^32)");
  }
  if (!is_prime_u64(p)) {
    throw Error(Error::Kind::input, "modulus " + std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.p_ = p;
  return f;
}

std::string FieldSpec::str() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

std::optional<FieldSpec> FieldSpec::parse(std::string_view s) {
  if (s == "Q" || s == "q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (s.size() > prefix.size() &&
      (s.substr(0, 3) == "Fp:" || s.substr(0, 3) == "fp:")) {
    std::uint64_t p = 0;
    auto body = s.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size()) return std::nullopt;
    if (p > 0xFFFFFFFFull || !is_prime_u64(p)) return std::nullopt;
    FieldSpec f;
    f.p_ = p;
    return f;
  }
  return std::nullopt;
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; p < 2^32 so signed 64-bit intermediates suffice
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(Error::Kind::singular, "element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  return f.is_rational() ? Scalar(mpq_class(0)) : Scalar(Fp{0, f.modulus()});
}

Scalar Scalar::one(const FieldSpec& f) {
  return f.is_rational() ? Scalar(mpq_class(1)) : Scalar(Fp{1 % f.modulus(), f.modulus()});
}

Scalar Scalar::from_int(long n, const FieldSpec& f) {
  if (f.is_rational()) return Scalar(mpq_class(n));
  std::uint64_t p = f.modulus();
  std::int64_t r = static_cast<std::int64_t>(n) % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Scalar(Fp{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(Error::Kind::input, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
  FieldSpec f = FieldSpec::prime(p);
  return Scalar(Fp{r % f.modulus(), f.modulus()});
}

FieldSpec Scalar::field() const {
  return is_fp() ? FieldSpec::prime(fp().p) : FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  return is_fp() ? fp().r == 0 : q() == 0;
}

bool Scalar::is_one() const {
  return is_fp() ? fp().r == 1 : q() == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  bool ok = is_fp() == o.is_fp() && (!is_fp() || fp().p == o.fp().p);
  if (!ok) throw Error(Error::Kind::input, "scalar field mismatch");
}

Scalar Scalar::operator-() const {
  if (is_fp()) {
    const Fp& a = fp();
    return Scalar(Fp{a.r == 0 ? 0 : a.p - a.r, a.p});
  }
  return Scalar(mpq_class(-q()));
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (is_fp()) {
    Fp& a = std::get<Fp>(v_);
    a.r += o.fp().r;
    if (a.r >= a.p) a.r -= a.p;
  } else {
    q() += o.q();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (is_fp()) {
    Fp& a = std::get<Fp>(v_);
    a.r = (a.r >= o.fp().r) ? a.r - o.fp().r : a.r + a.p - o.fp().r;
  } else {
    q() -= o.q();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (is_fp()) {
    Fp& a = std::get<Fp>(v_);
    a.r = (a.r * o.fp().r) % a.p;
  } else {
    q() *= o.q();
  }
  return *this;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  require_same_field(a);
  if (is_fp()) {
    Fp& s = std::get<Fp>(v_);
    s.r = (s.r + a.fp().r * b.fp().r) % s.p;
  } else {
    mpq_class prod = a.q() * b.q();
    q() += prod;
  }
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Error::Kind::singular, "division by zero");
  if (is_fp()) return Scalar(Fp{mod_inverse(fp().r, fp().p), fp().p});
  return Scalar(mpq_class(1 / q()));
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_fp() != o.is_fp()) return false;
  if (is_fp()) return fp() == o.fp();
  return q() == o.q();
}

std::string Scalar::str() const {
  if (is_fp()) return std::to_string(fp().r);
  return q().get_str();
}

std::optional<Scalar> Scalar::parse(std::string_view s, const FieldSpec& f) {
  if (s.empty()) return std::nullopt;
  if (f.is_rational()) {
    // accept optional sign, digits, optional "/digits"
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    bool saw_digit = false, saw_slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] == '/') {
        if (saw_slash || !saw_digit || j + 1 == s.size()) return std::nullopt;
        saw_slash = true;
        saw_digit = false;
      } else if (s[j] >= '0' && s[j] <= '9') {
        saw_digit = true;
      } else {
        return std::nullopt;
      }
    }
    if (!saw_digit) return std::nullopt;
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return std::nullopt;
  std::uint64_t v = 0;
  auto body = s.substr(i);
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size()) return std::nullopt;
  v %= f.modulus();
  if (neg && v != 0) v = f.modulus() - v;
  return Scalar::residue(v, f.modulus());
}

}  // namespace homkit
