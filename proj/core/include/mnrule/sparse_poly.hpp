#pragma once

#include "mnrule/linear_combination.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mnrule {

/// Exponent vector of a monomial in x1, x2, ...; never has trailing zeros.
using Monomial = std::vector<int>;

Monomial trim(Monomial m);
int degree(const Monomial& m);

/// Graded order, higher degree first, then lexicographically larger first,
/// e.g. x1^2 > x1*x2 > x2^2 > x1 > 1.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in x1, x2, ... with exact integer coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;
  SparsePoly(Integer constant);  // NOLINT: integers promote to constants
  SparsePoly(int constant) : SparsePoly(Integer(constant)) {}  // NOLINT

  static SparsePoly monomial(Monomial exponents, Integer coeff = 1);
  /// The variable x_i (1-based).
  static SparsePoly variable(int i);

  void add_term(const Monomial& m, const Integer& coeff);
  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const { return coefficient({}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Largest variable index that occurs; 0 for constants.
  int num_variables() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Components keyed by degree.
  std::map<int, SparsePoly> homogeneous_components() const;
  /// Exponentwise maximum over all monomials.
  Monomial max_exponents() const;

  /// The polynomial with x_i and x_{i+1} interchanged.
  SparsePoly swap_variables(int i) const;

  const LinearCombination<Monomial, GradedLexDescending>& terms() const { return terms_; }

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Integer& s);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Integer(-1); }
  friend SparsePoly operator*(SparsePoly a, const Integer& s) { return a *= s; }
  friend SparsePoly operator*(SparsePoly a, int s) { return a *= Integer(s); }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Text form such as "3*x1^2*x3 - x2"; the zero polynomial prints as "0".
  std::string to_string() const;
  /// Parses the text form written by to_string (spaces optional, coefficients
  /// may precede or follow "*"). Throws InvalidArgument on malformed input.
  static SparsePoly parse(std::string_view text);

 private:
  LinearCombination<Monomial, GradedLexDescending> terms_;
};

/// Power of a polynomial by repeated multiplication.
SparsePoly pow(const SparsePoly& base, int exponent);

/// Divided difference (f - t_i f) / (x_i - x_{i+1}), computed monomialwise:
/// x_i^a x_{i+1}^b maps to the complete sum of degree a-b-1 in x_i, x_{i+1}
/// (negated with a and b exchanged when a < b), so the quotient is always exact.
SparsePoly divided_difference(const SparsePoly& f, int i);

}  // namespace mnrule
