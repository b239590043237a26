#include "loday/field.hpp"

#include <cctype>

#include "loday/errors.hpp"

namespace loday {

namespace {

mpz_class mod_p(const mpz_class& v, long p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

Field Field::prime_field(long p) {
  if (p < 2) throw structural_error("prime field modulus must be >= 2");
  mpz_class m(p);
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw structural_error("prime field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::from_long(long v) const {
  if (is_rationals()) return Scalar(v);
  return Scalar(mod_p(mpz_class(v), p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a + b;
  return Scalar(mod_p(a.get_num() + b.get_num(), p_));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a - b;
  return Scalar(mod_p(a.get_num() - b.get_num(), p_));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a * b;
  return Scalar(mod_p(a.get_num() * b.get_num(), p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rationals()) return -a;
  return Scalar(mod_p(-a.get_num(), p_));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw structural_error("division by zero");
  if (is_rationals()) return Scalar(1) / a;
  mpz_class r;
  mpz_class m(p_);
  if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), m.get_mpz_t()) == 0)
    throw structural_error("residue not invertible");
  return Scalar(mod_p(r, p_));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

Scalar Field::reduce(const mpq_class& raw) const {
  if (is_rationals()) {
    mpq_class v = raw;
    v.canonicalize();
    return v;
  }
  mpz_class den = mod_p(raw.get_den(), p_);
  if (den == 0) throw structural_error("denominator not a unit in F_p");
  mpz_class inv_den;
  mpz_class m(p_);
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  return Scalar(mod_p(raw.get_num() * inv_den, p_));
}

std::optional<Scalar> Field::parse(std::string_view text) const {
  // Grammar: '-'? digits over F_p; '-'? digits ('/' digits)? over Q.
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  std::string num(text.substr(0, i));
  if (i == text.size()) {
    mpz_class n(num, 10);
    if (is_rationals()) return Scalar(n);
    return Scalar(mod_p(n, p_));
  }
  if (is_prime_field() || text[i] != '/') return std::nullopt;
  ++i;
  std::size_t den_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size() || i == den_begin) return std::nullopt;
  mpz_class den(std::string(text.substr(den_begin)), 10);
  if (den == 0) return std::nullopt;
  mpq_class v(mpz_class(num, 10), den);
  v.canonicalize();
  return v;
}

std::string Field::to_string(const Scalar& a) const {
  if (is_rationals()) return a.get_str();
  return a.get_num().get_str();
}

std::string Field::name() const {
  if (is_rationals()) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace loday
