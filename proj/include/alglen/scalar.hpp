#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace alglen {

bool is_prime_u64(std::uint64_t n);

// Ground field descriptor: the rationals or a prime field Z/p.
struct Field {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint64_t p = 0;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);  // validates that p is prime

  bool is_rational() const { return kind == Kind::rational; }
  bool operator==(const Field&) const = default;
  std::string str() const;
};

// Exact field element. Rational payloads are canonical GMP rationals
// (reduced, positive denominator, 0 stored as 0/1); prime-field payloads
// are residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long long n);
  static Scalar of_fraction(long long num, long long den);
  static Scalar of_residue(const Field& f, std::uint64_t value);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws error on division by zero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Text form: "-2/3", "5"; prime-field residues as plain decimals.
  std::string str() const;

  // Strict parse of the syntax above. Prime fields also accept "a/b"
  // (meaning a * b^-1 mod p). Throws parse_error.
  static Scalar parse(const std::string& text, const Field& f);

  const mpq_class& rational() const;
  std::uint64_t residue() const;

 private:
  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;

  void require_same_field(const Scalar& o) const;
};

}  // namespace alglen
