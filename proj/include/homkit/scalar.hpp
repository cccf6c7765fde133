#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "homkit/error.hpp"

namespace homkit {

bool is_prime_u64(std::uint64_t n);

// Ground field of the whole kit: the rationals Q or a prime field F_p.
// Kernel and quotient computations rely on exact division, so a field
// (rather than a general commutative ring) is required throughout.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }

  bool operator==(const FieldSpec&) const = default;

  std::string str() const;  // "Q" or "Fp:<p>"
  static std::optional<FieldSpec> parse(std::string_view s);

 private:
  std::uint64_t p_ = 0;  // 0 means Q
};

// Exact field element. Arithmetic never rounds; repeating a computation
// yields bit-identical results.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(long n, const FieldSpec& f);
  static Scalar rational(long num, long den = 1);
  static Scalar rational(mpq_class q);
  static Scalar residue(std::uint64_t r, std::uint64_t p);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws Error(singular) on /0
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  // *this += a*b, avoiding temporaries in hot loops
  void add_mul(const Scalar& a, const Scalar& b);

  Scalar inverse() const;  // throws Error(singular) on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "a/b" (denominator 1 omitted) for Q, decimal residue for F_p
  std::string str() const;
  static std::optional<Scalar> parse(std::string_view s, const FieldSpec& f);

 private:
  struct Fp {
    std::uint64_t r;
    std::uint64_t p;
    bool operator==(const Fp&) const = default;
  };

  explicit Scalar(Fp fp) : v_(fp) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  const mpq_class& q() const { return std::get<mpq_class>(v_); }
  mpq_class& q() { return std::get<mpq_class>(v_); }
  const Fp& fp() const { return std::get<Fp>(v_); }

  bool is_fp() const { return std::holds_alternative<Fp>(v_); }
  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Fp> v_;
};

}  // namespace homkit
