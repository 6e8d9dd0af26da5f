#include <doctest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"

using namespace hecketl;
using testing_support::random_laurent;

TEST_CASE("constructors and rendering") {
  CHECK(Laurent().is_zero());
  CHECK(Laurent(1).is_one());
  CHECK(Laurent(0).is_zero());
  CHECK(Laurent::q() == Laurent::v() * Laurent::v());
  CHECK(Laurent::qc().to_string() == "v + v^-1");
  CHECK((Laurent::q() + 2 + Laurent::monomial(-2)).to_string() == "v^2 + 2 + v^-2");
  CHECK((-Laurent::v_inv()).to_string() == "-v^-1");
  CHECK(Laurent::monomial(3, -7).to_string() == "-7v^3");
  CHECK(Laurent::monomial(0, 0).is_zero());
}

TEST_CASE("from_terms merges duplicates and drops zeros") {
  auto p = Laurent::from_terms({{1, 2}, {-1, 3}, {1, -2}, {0, 0}, {-1, 1}});
  CHECK(p == Laurent::monomial(-1, 4));
  CHECK(p.size() == 1);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Laurent());
    CHECK(a * 1 == a);
    CHECK(a + Laurent() == a);
    Laurent acc = a;
    acc.add_product(b, c);
    CHECK(acc == a + b * c);
  }
}

TEST_CASE("bar is an involutive ring automorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Laurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
  }
  CHECK(Laurent::v().bar() == Laurent::v_inv());
  CHECK(Laurent::qc().bar() == Laurent::qc());
}

TEST_CASE("shift, coefficient access, and negative part") {
  const Laurent p = parse_laurent("3v^2 - v + 5 + 2v^-1 - v^-4");
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(-4) == -1);
  CHECK(p.coeff(7) == 0);
  CHECK(p.min_exponent() == -4);
  CHECK(p.max_exponent() == 2);
  CHECK(p.negative_part() == parse_laurent("2v^-1 - v^-4"));
  CHECK(p.shifted(3) == p * Laurent::monomial(3));
  CHECK_THROWS_AS(Laurent().min_exponent(), std::domain_error);
}

TEST_CASE("subring membership") {
  CHECK(parse_laurent("1 + v^-3").in_A_minus());
  CHECK_FALSE(parse_laurent("1 + v^-3").in_v_inv_A_minus());
  CHECK(parse_laurent("v^-1").in_v_inv_A_minus());
  CHECK_FALSE(parse_laurent("v").in_A_minus());
  CHECK(Laurent().in_v_inv_A_minus());
  CHECK(parse_laurent("v + 2").has_nonneg_coeffs());
  CHECK_FALSE(parse_laurent("v - 2").has_nonneg_coeffs());
}

TEST_CASE("exact division recovers factors and rejects remainders") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Laurent a = random_laurent(rng);
    const Laurent b = random_laurent(rng);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS_AS(exact_div(Laurent::v() + 1, Laurent(2)), std::domain_error);
  CHECK_THROWS_AS(exact_div(Laurent::q() + 1, Laurent::v() + 1), std::domain_error);
  CHECK_THROWS_AS(exact_div(Laurent(1), Laurent()), std::domain_error);
}

TEST_CASE("text and JSON round trips") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Laurent a = random_laurent(rng, 6, 8, 1000);
    CHECK(parse_laurent(a.to_string()) == a);
    CHECK(laurent_from_json(to_json(a)) == a);
  }
  CHECK(to_json(parse_laurent("v^2 + 2 + v^-2")).dump() == "[[2,1],[0,2],[-2,1]]");
  const Laurent big = Laurent::monomial(1, Integer("123456789012345678901234567890"));
  CHECK(to_json(big).dump() == R"([[1,"123456789012345678901234567890"]])");
  CHECK(laurent_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(parse_laurent("v^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("v2"), std::invalid_argument);
}

TEST_CASE("evaluation modulo a prime is a ring homomorphism") {
  constexpr std::uint64_t p = 1000003;
  constexpr std::uint64_t x = 12345;
  // x^-1 mod p by Fermat.
  std::uint64_t inv = 1;
  for (std::uint64_t e = p - 2, b = x; e; e >>= 1, b = b * b % p)
    if (e & 1) inv = inv * b % p;
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Laurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK((a * b).eval_mod(x, inv, p) == a.eval_mod(x, inv, p) * b.eval_mod(x, inv, p) % p);
    CHECK((a + b).eval_mod(x, inv, p) == (a.eval_mod(x, inv, p) + b.eval_mod(x, inv, p)) % p);
  }
}
