#include "lpa/field.hpp"

#include <charconv>
#include <stdexcept>

namespace lpa {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (!is_prime_u32(p))
    throw std::invalid_argument("GF modulus must be a prime < 2^31: " +
                                std::to_string(p));
  if (p > 0x7fffffffu)
    throw std::invalid_argument("GF modulus must be < 2^31");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "gf:" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    std::uint32_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc{} || ptr != body.data() + body.size())
      throw std::invalid_argument("bad field spec: " + std::string(text));
    return gf(p);
  }
  throw std::invalid_argument("bad field spec (want q or gf:<p>): " +
                              std::string(text));
}

Scalar Scalar::one(const Field& f) {
  Scalar s(f);
  if (f.is_rational())
    s.q_ = 1;
  else
    s.r_ = 1 % f.modulus();
  return s;
}

Scalar Scalar::from_int(const Field& f, long n) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = n;
  } else {
    long long m = n % static_cast<long long>(f.modulus());
    if (m < 0) m += f.modulus();
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_fraction(const Field& f, const mpz_class& num,
                             const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = mpq_class(num) / mpq_class(den);
    s.q_.canonicalize();
    return s;
  }
  const std::uint64_t p = f.modulus();
  mpz_class nm = num % p, dm = den % p;
  if (nm < 0) nm += p;
  if (dm < 0) dm += p;
  std::uint64_t n64 = nm.get_ui(), d64 = dm.get_ui();
  if (d64 == 0) throw std::domain_error("denominator is 0 mod p");
  s.r_ = n64 * mod_pow(d64, p - 2, p) % p;
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos)
      return from_fraction(f, mpz_class(std::string(text)), 1);
    return from_fraction(f, mpz_class(std::string(text.substr(0, slash))),
                         mpz_class(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad scalar literal: " + std::string(text));
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.modulus();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, field_.modulus() - 2, field_.modulus());
  return s;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("scalar field mismatch: " +
                                field_.to_string() + " vs " +
                                o.field_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.modulus();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = (r_ + field_.modulus() - o.r_) % field_.modulus();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.modulus();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace lpa
