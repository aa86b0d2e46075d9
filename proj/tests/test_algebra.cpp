#include <doctest.h>

#include "alglen/algebra.hpp"
#include "alglen/errors.hpp"
#include "alglen/families.hpp"
#include "alglen/rng.hpp"

using namespace alglen;

namespace {

const Field kQ = Field::rationals();

Vec qvec(const Algebra& a, const std::vector<long long>& entries) {
  Vec v;
  for (long long e : entries) v.push_back(Scalar::of_int(a.field(), e));
  return v;
}

Vec random_vec(const Algebra& a, Rng& rng) {
  Vec v;
  for (int i = 0; i < a.dim(); ++i) v.push_back(Scalar::of_int(a.field(), rng.range(-2, 2)));
  return v;
}

}  // namespace

TEST_CASE("basis products follow the multiplication law") {
  Algebra b5 = make({Family::leibniz_B, 5});
  CHECK(b5.multiply(b5.basis_vector(0), b5.basis_vector(0)) == b5.basis_vector(1));  // x1x1 = x2
  CHECK(is_zero(b5.multiply(b5.basis_vector(4), b5.basis_vector(4))));               // x5x5 = 0

  Algebra z4 = make({Family::zinbiel_Z, 4});
  Vec x1x1 = z4.multiply(z4.basis_vector(0), z4.basis_vector(0));
  CHECK(x1x1 == scale(Scalar::of_fraction(1, 2), z4.basis_vector(1)));  // x1x1 = (1/2) x2
}

TEST_CASE("multiply is bilinear") {
  Algebra a = make({Family::vinberg_R4, 0});
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Vec u = random_vec(a, rng), v = random_vec(a, rng), w = random_vec(a, rng);
    Scalar alpha = Scalar::of_int(kQ, rng.range(-3, 3));
    Vec left = a.multiply(add(scale(alpha, u), v), w);
    Vec right = add(scale(alpha, a.multiply(u, w)), a.multiply(v, w));
    CHECK(left == right);
    Vec left2 = a.multiply(w, add(scale(alpha, u), v));
    Vec right2 = add(scale(alpha, a.multiply(w, u)), a.multiply(w, v));
    CHECK(left2 == right2);
  }
}

TEST_CASE("word evaluation distinguishes bracketings") {
  Algebra c = make({Family::novikov_C4, 0});
  Word x1 = Word::leaf(0);
  std::vector<Vec> assign = {c.basis_vector(0)};

  Word right_comb = Word::product(x1, Word::product(x1, x1));  // x1*(x1*x1)
  CHECK(c.evaluate_word(right_comb, assign) == c.basis_vector(2));  // = x3

  Word left_comb = Word::product(Word::product(x1, x1), x1);  // (x1*x1)*x1
  CHECK(c.evaluate_word(left_comb, assign) == c.basis_vector(3));  // = x4

  CHECK(c.evaluate_word(x1, assign) == c.basis_vector(0));
  CHECK_THROWS_AS(c.evaluate_word(Word::leaf(1), assign), validation_error);
}

TEST_CASE("word evaluation is the product of subtree evaluations") {
  Algebra a = make({Family::valya_V6, 0});
  Rng rng(5);
  std::vector<Vec> assign = {random_vec(a, rng), random_vec(a, rng), random_vec(a, rng)};
  // random small trees over three generators
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Word> pool = {Word::leaf(0), Word::leaf(1), Word::leaf(2)};
    for (int step = 0; step < 4; ++step) {
      Word l = pool[rng.below(pool.size())];
      Word r = pool[rng.below(pool.size())];
      Word node = Word::product(l, r);
      pool.push_back(node);
      CHECK(a.evaluate_word(node, assign) ==
            a.multiply(a.evaluate_word(l, assign), a.evaluate_word(r, assign)));
    }
  }
}

TEST_CASE("unit detection") {
  Algebra f2 = make({Family::coordinatewise, 2});
  REQUIRE(f2.is_unital());
  CHECK(*f2.unit() == qvec(f2, {1, 1}));

  Algebra b4 = make({Family::leibniz_B, 4});
  CHECK_FALSE(b4.is_unital());

  Algebra m2 = make({Family::matrix_full, 2});
  REQUIRE(m2.is_unital());
  CHECK(*m2.unit() == qvec(m2, {1, 0, 0, 1}));  // E11 + E22

  Algebra bare = make({Family::bare_01245, 0});
  REQUIRE(bare.is_unital());
  CHECK(*bare.unit() == qvec(bare, {1, 0, 0, 0, 0}));
}

TEST_CASE("detected unit acts as identity on random vectors") {
  Algebra m2 = make({Family::matrix_full, 2});
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    Vec v = random_vec(m2, rng);
    CHECK(m2.multiply(*m2.unit(), v) == v);
    CHECK(m2.multiply(v, *m2.unit()) == v);
  }
}

TEST_CASE("commutator algebra") {
  Algebra f3 = make({Family::coordinatewise, 3});
  Algebra f3m = f3.commutator_algebra();
  CHECK(f3m.name() == "F^3^(-)");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(is_zero(f3m.multiply(f3m.basis_vector(i), f3m.basis_vector(j))));
    }
  }
  CHECK_FALSE(f3m.is_unital());

  Algebra m2 = make({Family::matrix_full, 2});
  Algebra gl2 = m2.commutator_algebra();
  // [E11, E12] = E12
  CHECK(gl2.multiply(gl2.basis_vector(0), gl2.basis_vector(1)) == gl2.basis_vector(1));
  // [G1, G2] = -E11 - E12 - E21 + E22 for G1 = E11 - E12, G2 = E21 + E22
  Vec g1 = qvec(gl2, {1, -1, 0, 0});
  Vec g2 = qvec(gl2, {0, 0, 1, 1});
  CHECK(gl2.multiply(g1, g2) == qvec(gl2, {-1, -1, -1, 1}));
}

TEST_CASE("validation rejects malformed definitions") {
  auto one = Scalar::one(kQ);
  // index out of range
  CHECK_THROWS_AS(Algebra("bad", kQ, 3, {{0, 0, 5, one}}), validation_error);
  // duplicate (i, j, k)
  CHECK_THROWS_AS(Algebra("bad", kQ, 3, {{0, 0, 1, one}, {0, 0, 1, one}}), validation_error);
  // zero coefficients are dropped, not stored
  Algebra ok("ok", kQ, 2, {{0, 0, 1, Scalar::zero(kQ)}});
  CHECK(ok.entry_count() == 0);
  // field mismatch between scalar and algebra
  CHECK_THROWS_AS(Algebra("bad", Field::prime(5), 2, {{0, 0, 1, one}}), validation_error);
}

TEST_CASE("json round trip") {
  Algebra b3 = make({Family::leibniz_B, 3});
  CHECK(b3.entry_count() == 2);
  auto j = b3.to_json();
  Algebra again = Algebra::from_json(j);
  CHECK(again.name() == b3.name());
  CHECK(again.dim() == b3.dim());
  CHECK(again.to_json() == j);

  Algebra z4 = make({Family::zinbiel_Z, 4});
  CHECK(Algebra::from_json(z4.to_json()).to_json() == z4.to_json());
}

TEST_CASE("json validation errors") {
  nlohmann::json base = {
      {"name", "t"},
      {"field", {{"type", "rational"}}},
      {"dim", 3},
      {"products", nlohmann::json::array()},
  };

  {
    nlohmann::json j = base;
    j["products"] = {{{"left", 1}, {"right", 1}, {"out", {{"6", "1"}}}}};
    CHECK_THROWS_AS(Algebra::from_json(j), validation_error);  // out of range
  }
  {
    nlohmann::json j = base;
    j["products"] = {{{"left", 1}, {"right", 1}, {"out", {{"2", "1"}}}},
                     {{"left", 1}, {"right", 1}, {"out", {{"3", "1"}}}}};
    CHECK_THROWS_AS(Algebra::from_json(j), validation_error);  // duplicate pair
  }
  {
    nlohmann::json j = base;
    j["products"] = {{{"left", 1}, {"right", 1}, {"out", {{"2", "x"}}}}};
    CHECK_THROWS_AS(Algebra::from_json(j), parse_error);  // malformed scalar
  }
  {
    nlohmann::json j = base;
    j["field"] = {{"type", "prime"}, {"p", 12}};
    CHECK_THROWS_AS(Algebra::from_json(j), validation_error);  // non-prime modulus
  }
}
