// Polynomial modules over the even and odd algebras and their contravariant
// forms.  A module element is a class sum_nu :X^nu: f_nu modulo the left ideal
// generated by the D letters; f_nu sits to the right.
#pragma once

#include <map>
#include <string>

#include "redalg/algebra.hpp"

namespace redalg {

template <Parity P>
class PolyModuleElement {
 public:
  explicit PolyModuleElement(int n = 1);
  static PolyModuleElement vacuum(int n) { return monomial(MultiIndex(n)); }
  static PolyModuleElement monomial(const MultiIndex& nu, const RatFunc& f = RatFunc(1));

  int n() const { return n_; }
  const std::map<MultiIndex, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const MultiIndex& nu) const;
  void add_term(const MultiIndex& nu, const RatFunc& f);

  PolyModuleElement& operator+=(const PolyModuleElement& o);
  friend PolyModuleElement operator+(PolyModuleElement a, const PolyModuleElement& b) { return a += b; }
  PolyModuleElement operator*(const RatFunc& f) const;
  friend bool operator==(const PolyModuleElement&, const PolyModuleElement&) = default;

  std::string to_string() const;

 private:
  int n_;
  std::map<MultiIndex, RatFunc> terms_;
};

template <Parity P>
PolyModuleElement<P> act(const Element<P>& u, const PolyModuleElement<P>& p);

// (u, v) = degree-zero part of eps(u) * v
template <Parity P>
RatFunc contravariant_form(const PolyModuleElement<P>& u, const PolyModuleElement<P>& v);

// prod nu_k! * prod_{i<j} (h_ij - nu_j)^{up nu_i+1} / h_ij^{up nu_i+1}
RatFunc closed_norm_even(const MultiIndex& nu);
// prod_{i<j} ((h_ij - nu_j) / h_ij)^{1 - nu_i}; nu must be binary
RatFunc closed_norm_odd(const MultiIndex& nu);

template <Parity P>
RatFunc closed_norm(const MultiIndex& nu) {
  return P == Parity::even ? closed_norm_even(nu) : closed_norm_odd(nu);
}

// Diagonal pairing: nu! f g (even), f g (odd).
template <Parity P>
RatFunc free_pairing(const PolyModuleElement<P>& u, const PolyModuleElement<P>& v);

// Applies the ordered product of shifted one-root projectors to the classical
// monomial x^nu2 and pairs the result with x^nu1.
template <Parity P>
RatFunc form_via_shifted_projector(const MultiIndex& nu1, const MultiIndex& nu2);

class InvalidWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact value of the closed-form norm at h_i = mu_i - i.  Throws InvalidWeight
// when some h_ij(mu + nu) is a negative integer.
Rational evaluate_norm(const MultiIndex& nu, const WeightPoint& mu, Parity parity);

}  // namespace redalg
