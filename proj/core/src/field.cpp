#include "projcx/field.hpp"

#include <stdexcept>

namespace projcx {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// Inverse of a mod p via extended Euclid; a nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_pos(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return mod_pos(t, p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime < 2^31");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      return prime(std::stoll(text.substr(3)));
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field literal: " + text);
    }
  }
  throw std::invalid_argument("bad field literal: " + text + " (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(n)));
  return Scalar(p_, mod_pos(n, p_));
}

Scalar Field::from_ratio(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (p_ == 0) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(std::move(q));
  }
  std::int64_t d = mod_pos(den, p_);
  if (d == 0) throw std::domain_error("denominator vanishes mod p");
  return Scalar(p_, mod_pos(num, p_) * mod_inverse(d, p_) % p_);
}

Scalar Field::parse_scalar(const std::string& text) const {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (p_ == 0) {
        mpq_class q(text);
        q.canonicalize();
        return Scalar(std::move(q));
      }
      return from_int(std::stoll(text));
    }
    if (p_ == 0) {
      mpq_class q(text);
      q.canonicalize();
      return Scalar(std::move(q));
    }
    return from_ratio(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad scalar literal: " + text);
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw std::logic_error("scalars from different fields");
}

bool Scalar::is_zero() const {
  if (p_ == 0) return std::get<mpq_class>(v_) == 0;
  return std::get<std::int64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (p_ == 0) return std::get<mpq_class>(v_) == 1;
  return std::get<std::int64_t>(v_) == 1 % p_;
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  return Scalar(p_, (p_ - std::get<std::int64_t>(v_)) % p_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
  return Scalar(p_, mod_inverse(std::get<std::int64_t>(v_), p_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  else
    v_ = (std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_)) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  else
    v_ = mod_pos(std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_), p_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  else
    v_ = std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_) % p_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.p_ == 0) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  return std::get<std::int64_t>(a.v_) == std::get<std::int64_t>(b.v_);
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(std::get<std::int64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

std::int64_t Scalar::residue() const {
  if (p_ == 0) throw std::logic_error("residue of a rational scalar");
  return std::get<std::int64_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw std::logic_error("rational value of an F_p scalar");
  return std::get<mpq_class>(v_);
}

}  // namespace projcx
