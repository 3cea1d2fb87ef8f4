// Sparse multivariate polynomials over Q in at most seven variables.
#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace redalg {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVars = 7;

// Byte 7 holds the total degree, byte 6-v the exponent of variable v.
// Unsigned comparison of two packed monomials is therefore graded lex
// with variable 0 largest.
using Monomial = std::uint64_t;

namespace mono {

inline int degree(Monomial m) { return int(m >> 56); }
inline int exponent(Monomial m, int v) { return int((m >> (8 * (6 - v))) & 0xffu); }
inline Monomial var(int v, int e = 1) {
  return (Monomial(e) << 56) | (Monomial(e) << (8 * (6 - v)));
}
bool divides(Monomial a, Monomial b);
Monomial make(std::span<const int> exps);

}  // namespace mono

class Poly {
 public:
  struct Term {
    Monomial m;
    Rational c;
  };

  Poly() = default;
  Poly(long c);
  Poly(const Rational& c);
  static Poly variable(int v);
  // Builds from unsorted, possibly repeated terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_linear() const;
  Rational constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Monomial leading_monomial() const { return terms_.front().m; }
  const Rational& leading_coeff() const { return terms_.front().c; }
  int total_degree() const;
  int degree_in(int v) const;
  // Highest variable index present, -1 for constants.
  int max_var() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  // h_v -> h_v + delta_v
  Poly shifted(std::span<const int> delta) const;
  // h_v -> h_{perm[v]}
  Poly permuted(std::span<const int> perm) const;
  Rational evaluate(std::span<const Rational> point) const;
  std::optional<Poly> divide_exact(const Poly& d) const;
  // False only when the monic linear form certainly does not divide this
  // polynomial (checked modulo a large prime on the form's zero set).
  bool may_vanish_on(const Poly& form) const;
  // Divides by the leading coefficient; returns it through lc when given.
  Poly monic(Rational* lc = nullptr) const;
  Poly pow(int e) const;

  // Debug form in variables h1..h7.
  std::string to_string() const;

 private:
  void add_scaled(const Poly& o, const Rational& s, Monomial shift);
  std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
};

Poly gcd(const Poly& a, const Poly& b);

}  // namespace redalg
