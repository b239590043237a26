#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace loday {

/// Exact field element. Rationals are arbitrary-precision GMP rationals in
/// canonical lowest terms; prime-field residues are stored as integers in
/// [0, p) with denominator 1. All arithmetic goes through a Field so the
/// same storage serves both cases.
using Scalar = mpq_class;

/// The base field: the rationals or a prime field F_p.
///
/// A Field is a small value object; every matrix and structure tensor
/// carries one. Scalars are kept normalized (lowest terms over Q, canonical
/// residue over F_p), which makes equality a plain comparison.
class Field {
 public:
  /// Defaults to the rationals.
  Field() : p_(0) {}

  static Field rationals() { return Field(0); }

  /// F_p for prime p. Throws structural_error when p is not prime.
  static Field prime_field(long p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// 0 for the rationals, p for F_p.
  long characteristic() const { return p_; }

  bool operator==(const Field&) const = default;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;

  /// Multiplicative inverse; throws structural_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }

  /// Brings an arbitrary exact rational into this field. Over F_p the
  /// denominator must be a unit mod p; throws structural_error otherwise.
  Scalar reduce(const mpq_class& raw) const;

  /// Parses the serialized form: "n" or "n/d" (lowest terms not required)
  /// over Q, a decimal residue over F_p. Returns nullopt on malformed text
  /// or a zero denominator.
  std::optional<Scalar> parse(std::string_view text) const;

  /// Canonical serialization: "n" or "n/d" with d > 0 in lowest terms over
  /// Q, the decimal residue over F_p. Round-trips bit-for-bit with parse.
  std::string to_string(const Scalar& a) const;

  /// "Q" or "F<p>"; used in report metadata.
  std::string name() const;

 private:
  explicit Field(long p) : p_(p) {}

  long p_ = 0;  // 0 = rationals
};

}  // namespace loday
