#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bei/field.hpp"

namespace bei {

inline constexpr int kMaxVariables = 32;

/// Exponent vector over the variables x_1..x_n, y_1..y_n of a ring with n
/// vertices: slot t-1 holds x_t, slot n+t-1 holds y_t. Unused slots are zero.
///
/// The defaulted comparison is lexicographic on the slots, which is exactly the
/// lex order x_1 > ... > x_n > y_1 > ... > y_n.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exp{};

  int degree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_one() const { return degree() == 0; }

  auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial variable(int index);

inline int x_var(int t) { return t - 1; }
inline int y_var(int num_vertices, int t) { return num_vertices + t - 1; }
std::string variable_name(int index, int num_vertices);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial over F_p: terms strictly decreasing in lex order, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  /// Combines like terms, drops zeros and sorts.
  static Poly from_terms(std::vector<Term> terms, const PrimeField& field);
  static Poly monomial(const Monomial& m, std::uint32_t coeff = 1);
  /// Terms must already be strictly decreasing with nonzero coefficients.
  static Poly from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  friend Poly sub_mul(const Poly&, std::uint32_t, const Monomial&, const Poly&, const PrimeField&);
  friend Poly scale(const Poly&, std::uint32_t, const PrimeField&);
  std::vector<Term> terms_;
};

Poly add(const Poly& f, const Poly& g, const PrimeField& field);
Poly sub(const Poly& f, const Poly& g, const PrimeField& field);
/// f - c * m * g.
Poly sub_mul(const Poly& f, std::uint32_t c, const Monomial& m, const Poly& g,
             const PrimeField& field);
Poly scale(const Poly& f, std::uint32_t c, const PrimeField& field);
Poly mul_monomial(const Poly& f, const Monomial& m);
Poly make_monic(const Poly& f, const PrimeField& field);
/// Sets the listed variables to zero.
Poly drop_variables(const Poly& f, const Monomial& vars_mask);

/// Human-readable form, e.g. "x1*y2 - x2*y1".
std::string to_string(const Poly& f, int num_vertices, const PrimeField& field);
std::string to_string(const Monomial& m, int num_vertices);
/// Inverse of to_string. Throws InputError on malformed text.
Poly parse_poly(std::string_view text, int num_vertices, const PrimeField& field);

}  // namespace bei
