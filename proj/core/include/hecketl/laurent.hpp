#pragma once

// Exact arithmetic in A = Z[v, v^-1].

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hecketl {

using Integer = boost::multiprecision::cpp_int;

struct LaurentTerm {
  int exponent = 0;
  Integer coeff;

  friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

/// Laurent polynomial in v with integer coefficients.
///
/// Stored as a sparse list of (exponent, coefficient) pairs sorted by
/// ascending exponent; zero coefficients are never stored, so the empty list
/// is the zero polynomial and equality is structural.
class Laurent {
 public:
  Laurent() = default;
  Laurent(int constant) : Laurent(Integer(constant)) {}  // NOLINT: implicit by design of ring literals
  Laurent(const Integer& constant);                      // NOLINT

  /// c * v^e.
  static Laurent monomial(int exponent, Integer coeff = 1);
  static Laurent v() { return monomial(1); }
  static Laurent v_inv() { return monomial(-1); }
  /// q = v^2.
  static Laurent q() { return monomial(2); }
  /// q_c = [2] = v + v^-1.
  static Laurent qc();
  /// Builds from arbitrary (exponent, coeff) pairs; merges duplicates.
  static Laurent from_terms(std::vector<LaurentTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<LaurentTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of v^e (zero if absent).
  Integer coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// this += a * b without a temporary for the product.
  void add_product(const Laurent& a, const Laurent& b);

  /// Multiplies by v^k.
  Laurent shifted(int k) const;
  /// v -> v^-1.
  Laurent bar() const;

  /// Terms with exponent < 0.
  Laurent negative_part() const;

  /// a / b when b divides a exactly in A; throws std::domain_error otherwise.
  friend Laurent exact_div(const Laurent& a, const Laurent& b);

  /// All exponents <= 0 (membership in A^- = Z[v^-1]).
  bool in_A_minus() const;
  /// All exponents <= -1 (membership in v^-1 A^-).
  bool in_v_inv_A_minus() const;
  bool has_nonneg_coeffs() const;

  /// Evaluation at an integer point modulo a prime; v must be invertible mod p.
  std::uint64_t eval_mod(std::uint64_t v_value, std::uint64_t v_inverse, std::uint64_t prime) const;

  /// Descending exponents, e.g. "v^2 + 2 + v^-2".
  std::string to_string() const;

 private:
  explicit Laurent(std::vector<LaurentTerm> sorted) : terms_(std::move(sorted)) {}

  std::vector<LaurentTerm> terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

/// [[exponent, coefficient], ...] sorted by descending exponent. Coefficients
/// that fit in 64 bits are JSON integers, larger ones decimal strings.
nlohmann::ordered_json to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::ordered_json& j);

/// Parses the text rendering produced by to_string ("v^2 + 2 + v^-2",
/// "-v^-1", "0"). Throws std::invalid_argument on malformed input.
Laurent parse_laurent(const std::string& text);

}  // namespace hecketl
