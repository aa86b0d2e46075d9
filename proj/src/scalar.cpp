#include "alglen/scalar.hpp"

#include <cctype>

#include "alglen/errors.hpp"

namespace alglen {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Extended Euclid inverse of a modulo prime p, a != 0 mod p.
u64 invmod(u64 a, u64 p) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<u64>(t);
}

}  // namespace

// Deterministic Miller-Rabin; the base set below decides primality for
// every 64-bit integer.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (!is_prime_u64(p)) {
    throw validation_error("non-prime modulus " + std::to_string(p));
  }
  Field f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string Field::str() const {
  return kind == Kind::rational ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long long n) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(n));
  } else {
    long long r = n % static_cast<long long>(f.p);
    if (r < 0) r += static_cast<long long>(f.p);
    s.r_ = static_cast<u64>(r);
  }
  return s;
}

Scalar Scalar::of_fraction(long long num, long long den) {
  if (den == 0) throw error("zero denominator");
  Scalar s;
  s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::of_residue(const Field& f, u64 value) {
  if (f.is_rational()) throw error("of_residue requires a prime field");
  Scalar s;
  s.field_ = f;
  s.r_ = value % f.p;
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_.get_num() == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw dimension_mismatch("mixed fields in scalar operation");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = q_ + o.q_;
  } else {
    u64 t = r_ + o.r_;
    s.r_ = t >= field_.p ? t - field_.p : t;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = mulmod(r_, o.r_, field_.p);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  if (o.is_zero()) throw error("division by zero");
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = q_ / o.q_;
  } else {
    s.r_ = mulmod(r_, invmod(o.r_, field_.p), field_.p);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  // trim surrounding whitespace
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s = text.substr(b, e - b);
  if (s.empty()) throw parse_error("empty scalar");

  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  std::size_t num_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == num_begin) throw parse_error("malformed scalar '" + text + "'");
  std::string num = s.substr(num_begin, pos - num_begin);

  std::string den = "1";
  if (pos < s.size()) {
    if (s[pos] != '/') throw parse_error("malformed scalar '" + text + "'");
    ++pos;
    std::size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin || pos != s.size()) {
      throw parse_error("malformed scalar '" + text + "'");
    }
    den = s.substr(den_begin);
  }

  if (f.is_rational()) {
    mpq_class q;
    mpz_class n(num), d(den);
    if (d == 0) throw parse_error("zero denominator in '" + text + "'");
    q = mpq_class(n) / mpq_class(d);
    if (neg) q = -q;
    Scalar out;
    out.field_ = f;
    out.q_ = q;
    return out;
  }

  mpz_class n(num), d(den), p(static_cast<unsigned long>(f.p));
  mpz_class nr = n % p, dr = d % p;
  u64 a = nr.get_ui(), b2 = dr.get_ui();
  if (b2 == 0) throw parse_error("denominator is zero in GF(" + std::to_string(f.p) + ")");
  u64 v = mulmod(a, invmod(b2, f.p), f.p);
  if (neg && v != 0) v = f.p - v;
  return of_residue(f, v);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw error("not a rational scalar");
  return q_;
}

u64 Scalar::residue() const {
  if (field_.is_rational()) throw error("not a prime-field scalar");
  return r_;
}

}  // namespace alglen
