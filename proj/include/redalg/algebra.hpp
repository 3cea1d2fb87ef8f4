// Normal-ordered elements of the even algebra (generators x^i, D_i) and of its
// Grassmann counterpart (generators z^i, Gd_i).  D_i is the rescaled derivative
// d_i * phi'_i^{-1}.  A term X^a D^b c stands for
//
//   (x^n)^{a_n} ... (x^1)^{a_1} (D_1)^{b_1} ... (D_n)^{b_n} c
//
// with the coefficient c to the right.  Coefficients commute with a monomial M
// by f(h) M = M f(h + wt M), where wt x^i = e_i and wt D_i = -e_i.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "redalg/multi_index.hpp"
#include "redalg/ratfunc.hpp"

namespace redalg {

enum class Parity { even, odd };

inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct TermKey {
  MultiIndex a;  // x exponents
  MultiIndex b;  // D exponents
  auto operator<=>(const TermKey&) const = default;
};

using TermMap = std::map<TermKey, RatFunc>;
using Shift = std::array<int, kMaxN>;

// wt(X^a D^b) = a - b
Shift weight_of(const MultiIndex& a, const MultiIndex& b);

template <Parity P>
class Element {
 public:
  explicit Element(int n = 1) : n_(n) { check_n(n); }

  static Element unit(int n) { return scalar(n, RatFunc(1)); }
  static Element scalar(int n, const RatFunc& c);
  // 1-based generator indices
  static Element x(int n, int i);
  static Element dbar(int n, int i);
  // plain derivative d_i = D_i phi'_i
  static Element d(int n, int i);
  static Element monomial(int n, const MultiIndex& a, const MultiIndex& b, const RatFunc& c = RatFunc(1));

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const MultiIndex& a, const MultiIndex& b) const;
  void add_term(const TermKey& k, const RatFunc& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  // right multiplication by a coefficient
  Element operator*(const RatFunc& c) const;
  friend bool operator==(const Element& a, const Element& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j) {
      if (i->first != j->first || !(i->second == j->second)) return false;
    }
    return true;
  }

  std::string to_string() const;

 private:
  static void check_n(int n);
  int n_;
  TermMap terms_;
};

using DiffElement = Element<Parity::even>;
using GDiffElement = Element<Parity::odd>;

template <Parity P>
Element<P> diamond_mul(const Element<P>& u, const Element<P>& v);
// f * u with the coefficient on the left
template <Parity P>
Element<P> left_scalar(const RatFunc& f, const Element<P>& u);
template <Parity P>
Element<P> power(const Element<P>& u, int k);
template <Parity P>
Element<P> epsilon(const Element<P>& u);
template <Parity P>
RatFunc hc_project(const Element<P>& u);

// phi'_j = prod_{k<j} h_jk / (h_jk - 1), 1-based
RatFunc phi_prime(int j);

// Terms X^a d^b c in the plain derivative basis.
template <Parity P>
struct PlainElement {
  int n = 1;
  TermMap terms;
  friend bool operator==(const PlainElement& a, const PlainElement& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

template <Parity P>
Element<P> to_dbar(const PlainElement<P>& u);
template <Parity P>
PlainElement<P> from_dbar(const Element<P>& u);

// Textual elements: x1, D1, d1 (even) or z1, Gd1, gd1 (odd), h symbols and
// rationals joined by + - * / ^.  Products are taken in the algebra; division is
// only by coefficients.  Throws ParseError.
template <Parity P>
Element<P> parse_element(const std::string& text, int n);

// Letters of a product to be normal ordered.
struct Letter {
  enum class Kind { x, dbar, d, coeff };
  Kind kind;
  int index = 0;  // 1-based
  RatFunc coeff;
  static Letter gen(Kind k, int i) { return {k, i, RatFunc(1)}; }
  static Letter scalar(const RatFunc& c) { return {Kind::coeff, 0, c}; }
};

// Literal leftmost-pair rewriting of a word.
template <Parity P>
Element<P> normal_order(int n, const std::vector<Letter>& word);

// Internal single-step products used by other modules.
namespace detail {

// x^i * X^a = X^{a+e_i} * coef; false when the product vanishes.
template <Parity P>
bool left_mul_x(int i, const MultiIndex& a, MultiIndex& out, RatFunc& coef);
// D^b * D_j = D^{b+e_j} * coef; false when the product vanishes.
template <Parity P>
bool right_mul_d(const MultiIndex& b, int j, MultiIndex& out, RatFunc& coef);
// D^b * D^beta = D^{b+beta} * coef
template <Parity P>
bool append_d(const MultiIndex& b, const MultiIndex& beta, MultiIndex& out, RatFunc& coef);
// X^a * X^alpha = X^{a+alpha} * coef
template <Parity P>
bool append_x(const MultiIndex& a, const MultiIndex& alpha, MultiIndex& out, RatFunc& coef);
// D^b * X^a in normal order; module_only drops terms that still carry a D.
template <Parity P>
const TermMap& d_times_x(const MultiIndex& b, const MultiIndex& a, bool module_only);

}  // namespace detail

}  // namespace redalg
