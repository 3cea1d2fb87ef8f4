// Zhelobenko automorphisms q_i of the even and odd algebras and their inverses
// xi_i.  On generators, with t = h_{i,i+1}:
//
//   q_i(x^i) = x^{i+1} t/(t-1)      q_i(x^{i+1}) = x^i
//   q_i(D_i) = ((t-1)/t) D_{i+1}    q_i(D_{i+1}) = D_i
//
// other generators are fixed and coefficients are permuted by s_i.  The odd
// generators z, Gd carry the same coefficients.
#pragma once

#include <vector>

#include "redalg/forms.hpp"

namespace redalg {

struct WeylWord {
  std::vector<int> letters;  // simple reflections, 1-based
  // reduced word 1, 2 1, 3 2 1, ... of the longest element
  static WeylWord longest(int n);
  WeylWord reversed() const { return {{letters.rbegin(), letters.rend()}}; }
};

template <Parity P>
Element<P> qcheck(int i, const Element<P>& u);
template <Parity P>
Element<P> xicheck(int i, const Element<P>& u);

// Letters are applied in reading order: w = [c1, c2, ...] gives q_{c1} first.
template <Parity P>
Element<P> qcheck_word(const WeylWord& w, const Element<P>& u);
// Inverse of qcheck_word(w, .).
template <Parity P>
Element<P> xicheck_word(const WeylWord& w, const Element<P>& u);
template <Parity P>
Element<P> qcheck_w0(const Element<P>& u) {
  return qcheck_word(WeylWord::longest(u.n()), u);
}
template <Parity P>
Element<P> xicheck_w0(const Element<P>& u) {
  return xicheck_word(WeylWord::longest(u.n()), u);
}

// Coefficient part of q_w: the permutation of h by w (0-based image table).
std::vector<int> weyl_permutation(const WeylWord& w, int n);

// Closed form of xi_{w0}(:x^nu:): the single term :x^{w0 nu}: with coefficient
// q_{w0}(prod_{i<j} (h_ij - nu_j)^{up nu_i+1} / h_ij^{up nu_i+1}).
PolyModuleElement<Parity::even> xi_w0_closed(const MultiIndex& nu);

// (:x^nu:, :x^nu2:) = q_{w0} < :w0(x^nu):, xi_{w0}(:x^nu2:) >
template <Parity P>
RatFunc form_via_zhelobenko(const MultiIndex& nu, const MultiIndex& nu2);

}  // namespace redalg
