#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dsg {

/// An exact field element. Over QQ the value is a canonical reduced
/// fraction; over GF(p) it is an integer residue in [0, p).
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(mpq_class value) : value_(std::move(value)) {}

  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_{0};
};

/// Coefficient field: QQ (characteristic 0) or GF(p) for a prime p < 2^31.
/// All coefficient arithmetic is routed through the field so that residues
/// stay canonical.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  Coeff zero() const { return Coeff(); }
  Coeff one() const { return Coeff(mpq_class(1)); }
  Coeff from_int(long v) const;
  // Throws DomainError on a zero denominator or one divisible by p.
  Coeff from_rational(const mpq_class& q) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;  // throws DomainError on zero
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  Coeff reduce(mpz_class v) const;

  std::uint32_t p_ = 0;
};

std::string to_string(const Coeff& c);

}  // namespace dsg
