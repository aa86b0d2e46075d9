#include <doctest.h>

#include "alglen/errors.hpp"
#include "alglen/rng.hpp"
#include "alglen/scalar.hpp"

using namespace alglen;

TEST_CASE("rational parsing and printing") {
  Field q = Field::rationals();
  CHECK(Scalar::parse("-2/3", q).str() == "-2/3");
  CHECK(Scalar::parse("5", q).str() == "5");
  CHECK(Scalar::parse("4/6", q).str() == "2/3");
  CHECK(Scalar::parse("0/7", q).str() == "0");
  CHECK(Scalar::parse(" 1/2 ", q).str() == "1/2");
  CHECK(Scalar::parse("+3", q).str() == "3");
  CHECK_THROWS_AS(Scalar::parse("", q), parse_error);
  CHECK_THROWS_AS(Scalar::parse("a", q), parse_error);
  CHECK_THROWS_AS(Scalar::parse("1/-2", q), parse_error);
  CHECK_THROWS_AS(Scalar::parse("1/", q), parse_error);
  CHECK_THROWS_AS(Scalar::parse("1/2/3", q), parse_error);
  CHECK_THROWS_AS(Scalar::parse("1/0", q), parse_error);
  CHECK_THROWS_AS(Scalar::parse("1.5", q), parse_error);
}

TEST_CASE("rational arithmetic is exact and canonical") {
  Field q = Field::rationals();
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    long long an = rng.range(-50, 50), ad = rng.range(1, 30);
    long long bn = rng.range(-50, 50), bd = rng.range(1, 30);
    if (bn == 0) bn = 1;
    Scalar a = Scalar::of_fraction(an, ad);
    Scalar b = Scalar::of_fraction(bn, bd);
    CHECK((a / b) * b == a);
    CHECK(a - a == Scalar::zero(q));
    // canonical: denominator positive, reduced
    Scalar ab = a * b;
    const mpq_class& r = ab.rational();
    CHECK(r.get_den() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    CHECK(g == 1);
  }
  CHECK_THROWS_AS(Scalar::of_fraction(1, 2) / Scalar::zero(q), error);
}

TEST_CASE("prime fields") {
  Field f5 = Field::prime(5);
  CHECK(f5.str() == "GF(5)");
  CHECK_THROWS_AS(Field::prime(9), validation_error);
  CHECK_THROWS_AS(Field::prime(1), validation_error);

  Scalar a = Scalar::parse("7", f5);
  CHECK(a.residue() == 2);
  CHECK(Scalar::parse("-1", f5).residue() == 4);
  CHECK(Scalar::parse("3/2", f5).residue() == 4);  // 3 * inverse(2) = 3*3 = 9 = 4
  CHECK_THROWS_AS(Scalar::parse("1/5", f5), parse_error);

  Scalar b = Scalar::of_int(f5, 3);
  CHECK((a + b).residue() == 0);
  CHECK((a * b).residue() == 1);
  CHECK((a / b).residue() == 4);  // 2 * inverse(3) = 2*2
  CHECK((-b).residue() == 2);
}

TEST_CASE("mixed fields are rejected") {
  Scalar a = Scalar::of_int(Field::rationals(), 1);
  Scalar b = Scalar::of_int(Field::prime(5), 1);
  CHECK_THROWS_AS(a + b, dimension_mismatch);
  CHECK(a != b);
}

TEST_CASE("primality testing") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(97));
  CHECK(is_prime_u64(1000003));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(1000001));  // 101 * 9901
}
