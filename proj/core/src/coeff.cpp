#include "dsg/coeff.hpp"

#include "dsg/errors.hpp"

namespace dsg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw DomainError("GF(" + std::to_string(p) + "): modulus must be a prime below 2^31");
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Coeff Field::reduce(mpz_class v) const {
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return Coeff(mpq_class(r));
}

Coeff Field::from_int(long v) const {
  if (p_ == 0) return Coeff(mpq_class(v));
  return reduce(mpz_class(v));
}

Coeff Field::from_rational(const mpq_class& q) const {
  if (sgn(q.get_den()) == 0) throw DomainError("zero denominator");
  if (p_ == 0) {
    mpq_class c(q);
    c.canonicalize();
    return Coeff(std::move(c));
  }
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class den = q.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("denominator " + den.get_str() + " is not invertible in " + name());
  return reduce(q.get_num() * inv);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return Coeff(a.value() + b.value());
  return reduce(a.value().get_num() + b.value().get_num());
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return Coeff(a.value() - b.value());
  return reduce(a.value().get_num() - b.value().get_num());
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return Coeff(a.value() * b.value());
  return reduce(a.value().get_num() * b.value().get_num());
}

Coeff Field::neg(const Coeff& a) const {
  if (p_ == 0) return Coeff(-a.value());
  return reduce(-a.value().get_num());
}

Coeff Field::inv(const Coeff& a) const {
  if (a.is_zero()) throw DomainError("division by zero");
  if (p_ == 0) return Coeff(1 / a.value());
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.value().get_num_mpz_t(), m.get_mpz_t());
  return Coeff(mpq_class(r));
}

std::string to_string(const Coeff& c) { return c.value().get_str(); }

}  // namespace dsg
