// Rational functions in the shifted Cartan variables h1..hn.
//
// Variable v (0-based) stands for the shifted generator h_{v+1} - (v+1); the
// pair symbol h_ij is h_i - h_j.  A value is kept reduced in the factored form
//
//   scalar * prod L^e * num / den
//
// where each L is a monic linear form with a nonzero exponent, num and den are
// monic cofactors, and no factor of the numerator side shares a common factor
// with the denominator side.
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redalg/poly.hpp"

namespace redalg {

class RatFunc {
 public:
  RatFunc() : scalar_(0) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}
  RatFunc(const Rational& c);
  RatFunc(const Poly& p);
  static RatFunc fraction(const Poly& num, const Poly& den);

  // h_i and h_ij with 1-based indices.
  static RatFunc h(int i);
  static RatFunc h(int i, int j);
  // h_ij + k as a single linear factor.
  static RatFunc hk(int i, int j, long k);

  bool is_zero() const { return sgn(scalar_) == 0; }
  bool is_constant() const;
  bool is_one() const { return is_constant() && scalar_ == 1; }
  // Value of a constant function.
  const Rational& constant() const;

  // Canonical reduced numerator and monic denominator, expanded.
  Poly numerator() const;
  Poly denominator() const;

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc pow(int e) const;
  // f(h + delta)
  RatFunc shifted(std::span<const int> delta) const;
  // h_j -> h_{perm[j]}, 0-based
  RatFunc permuted(std::span<const int> perm) const;
  // Value at a point given in the variables themselves (not at a weight).
  Rational value_at(std::span<const Rational> point) const;

  // Highest variable index used, -1 for constants.
  int max_var() const;

  // Canonical printing in h_ij / h_i notation.
  std::string to_string() const;

  // Structural access for tests.
  const std::vector<std::pair<Poly, int>>& linear_factors() const { return lin_; }

 private:
  void reduce();
  Poly expand_side(bool positive) const;

  Rational scalar_;
  std::vector<std::pair<Poly, int>> lin_;  // sorted by form
  Poly num_{1};
  Poly den_{1};
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a weight hit a vanishing denominator factor.
class SingularEvaluation : public std::domain_error {
 public:
  SingularEvaluation(const std::string& factor)
      : std::domain_error("singular evaluation: factor " + factor + " vanishes"), factor_(factor) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

using WeightPoint = std::vector<Rational>;

RatFunc shift(const RatFunc& f, std::span<const int> delta);
// perm is 0-based: perm[j] is the image of j.
RatFunc weyl_permute(const RatFunc& f, std::span<const int> perm);

enum class Direction { up, down };
RatFunc pochhammer(const RatFunc& f, int a, Direction dir);

// h_i evaluates to mu_i - i.
Rational evaluate(const RatFunc& f, const WeightPoint& mu);
// h_ij(lambda) = lambda_i - lambda_j + j - i
Rational shifted_root_value(const WeightPoint& lambda, int i, int j);
bool is_nonsingular(const WeightPoint& lambda);
bool is_dominant(const WeightPoint& lambda);

// Textual form: integers, h1..hn, h12.., + - * / ^ and parentheses.
RatFunc parse_ratfunc(const std::string& text, int n);

}  // namespace redalg
