#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace lpa {

/// Coefficient field of a computation session: the rationals, or a prime
/// field GF(p) with p < 2^31. All arithmetic is exact; there is no floating
/// point anywhere in this library.
class Field {
 public:
  Field() : p_(0) {}  // the rationals
  static Field rationals() { return Field(0); }
  static Field gf(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t modulus() const { return p_; }

  friend bool operator==(const Field&, const Field&) = default;

  /// "q" for the rationals, "gf:<p>" for prime fields.
  std::string to_string() const;
  static Field parse(std::string_view text);

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;  // 0 encodes the rationals
};

/// An element of the session field. Rationals are kept in lowest terms with
/// positive denominator (GMP canonical form); GF(p) values live in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long n);
  static Scalar from_fraction(const Field& f, const mpz_class& num,
                              const mpz_class& den);
  /// Accepts "n" or "n/d" with optional leading sign.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

  /// Rational value; only meaningful for rational sessions.
  const mpq_class& rational() const { return q_; }
  /// Residue in [0, p); only meaningful for GF(p) sessions.
  std::uint64_t residue() const { return r_; }

  std::string to_string() const;

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace lpa
