#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace projcx {

class Scalar;

// Exact coefficient field: the rationals or a prime field F_p with p < 2^31.
// All arithmetic is exact; there is no floating point anywhere downstream.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);

  // Parses "Q" or "Fp:<p>" (e.g. "Fp:2").
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  // 0 for the rationals, p otherwise.
  std::int64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_ratio(std::int64_t num, std::int64_t den) const;
  // Accepts "n" or "a/b"; over F_p the quotient is taken in the field.
  Scalar parse_scalar(const std::string& text) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

// A field element that knows its field.  Mixing elements of different fields
// throws; the zero-argument constructor yields rational 0 and is meant only
// for container resizing followed by assignment.
class Scalar {
 public:
  Scalar() : p_(0), v_(mpq_class(0)) {}

  const Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

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
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "a/b" with positive denominator over Q, the canonical residue over F_p.
  std::string to_string() const;

  // Residue in [0,p) over F_p; numerator/denominator access over Q.
  std::int64_t residue() const;
  const mpq_class& rational() const;

 private:
  friend class Field;
  Scalar(std::int64_t p, std::int64_t r) : p_(p), v_(r) {}
  explicit Scalar(mpq_class q) : p_(0), v_(std::move(q)) {}

  void check_same(const Scalar& o) const;

  std::int64_t p_;  // 0 for Q
  std::variant<std::int64_t, mpq_class> v_;
};

}  // namespace projcx
