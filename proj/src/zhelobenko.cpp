#include "redalg/zhelobenko.hpp"

#include <numeric>
#include <tuple>

#include "redalg/memo.hpp"

namespace redalg {

WeylWord WeylWord::longest(int n) {
  WeylWord w;
  for (int m = 1; m < n; ++m) {
    for (int c = m; c >= 1; --c) w.letters.push_back(c);
  }
  return w;
}

std::vector<int> weyl_permutation(const WeylWord& w, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int c : w.letters) {
    if (c < 1 || c >= n) throw std::out_of_range("simple reflection index out of range");
    for (int& p : perm) {
      if (p == c - 1) p = c;
      else if (p == c) p = c - 1;
    }
  }
  return perm;
}

namespace {

void check_index(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("simple reflection index must be between 1 and n-1");
}

std::vector<int> swap_perm(int i, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i - 1], p[i]);
  return p;
}

template <Parity P>
Element<P> image_of_x(int i, bool inverse, int n, int j) {
  const RatFunc t = RatFunc::h(i, i + 1);
  if (!inverse) {
    if (j == i) return Element<P>::x(n, i + 1) * (t / (t - RatFunc(1)));
    if (j == i + 1) return Element<P>::x(n, i);
  } else {
    if (j == i) return Element<P>::x(n, i + 1);
    if (j == i + 1) return Element<P>::x(n, i) * ((t + RatFunc(1)) / t);
  }
  return Element<P>::x(n, j);
}

template <Parity P>
Element<P> image_of_d(int i, bool inverse, int n, int j) {
  const RatFunc t = RatFunc::h(i, i + 1);
  if (!inverse) {
    if (j == i) return left_scalar((t - RatFunc(1)) / t, Element<P>::dbar(n, i + 1));
    if (j == i + 1) return Element<P>::dbar(n, i);
  } else {
    if (j == i) return Element<P>::dbar(n, i + 1);
    if (j == i + 1) return left_scalar(t / (t + RatFunc(1)), Element<P>::dbar(n, i));
  }
  return Element<P>::dbar(n, j);
}

using ImageKey = std::tuple<int, bool, MultiIndex, MultiIndex>;

template <Parity P>
Memo<ImageKey, Element<P>>& image_memo() {
  static Memo<ImageKey, Element<P>> m;
  return m;
}

// Image of the monomial X^a D^b (coefficient 1), peeling the leftmost letter.
template <Parity P>
const Element<P>& monomial_image(int i, bool inverse, const MultiIndex& a, const MultiIndex& b) {
  return image_memo<P>().get({i, inverse, a, b}, [&] {
    const int n = a.size();
    if (a.is_zero() && b.is_zero()) return Element<P>::unit(n);
    MultiIndex ra = a, rb = b;
    Element<P> first(n);
    if (!a.is_zero()) {
      int j = n;
      while (a[j - 1] == 0) --j;
      ra.add(j - 1, -1);
      first = image_of_x<P>(i, inverse, n, j);
    } else {
      int j = 1;
      while (b[j - 1] == 0) ++j;
      rb.add(j - 1, -1);
      first = image_of_d<P>(i, inverse, n, j);
    }
    return diamond_mul(first, monomial_image<P>(i, inverse, ra, rb));
  });
}

template <Parity P>
Element<P> apply(int i, bool inverse, const Element<P>& u) {
  const int n = u.n();
  check_index(i, n);
  const auto perm = swap_perm(i, n);
  Element<P> res(n);
  for (const auto& [k, c] : u.terms()) res += monomial_image<P>(i, inverse, k.a, k.b) * c.permuted(perm);
  return res;
}

}  // namespace

template <Parity P>
Element<P> qcheck(int i, const Element<P>& u) {
  return apply(i, false, u);
}

template <Parity P>
Element<P> xicheck(int i, const Element<P>& u) {
  return apply(i, true, u);
}

template <Parity P>
Element<P> qcheck_word(const WeylWord& w, const Element<P>& u) {
  Element<P> r = u;
  for (int c : w.letters) r = qcheck(c, r);
  return r;
}

template <Parity P>
Element<P> xicheck_word(const WeylWord& w, const Element<P>& u) {
  Element<P> r = u;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = xicheck(*it, r);
  return r;
}

namespace {

MultiIndex reversed(const MultiIndex& nu) {
  MultiIndex r(nu.size());
  for (int k = 0; k < nu.size(); ++k) r.set(k, nu[nu.size() - 1 - k]);
  return r;
}

std::vector<int> reversal(int n) {
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = n - 1 - k;
  return p;
}

}  // namespace

PolyModuleElement<Parity::even> xi_w0_closed(const MultiIndex& nu) {
  const int n = nu.size();
  RatFunc c(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      RatFunc t = RatFunc::h(i, j);
      c *= pochhammer(t - RatFunc(nu[j - 1]), nu[i - 1] + 1, Direction::up) / pochhammer(t, nu[i - 1] + 1, Direction::up);
    }
  }
  return PolyModuleElement<Parity::even>::monomial(reversed(nu), c.permuted(reversal(n)));
}

template <Parity P>
RatFunc form_via_zhelobenko(const MultiIndex& nu, const MultiIndex& nu2) {
  if (nu.size() != nu2.size()) throw std::invalid_argument("multi-indices of different length");
  if (P == Parity::odd && (!nu.is_binary() || !nu2.is_binary())) {
    throw std::invalid_argument("odd multi-indices must be binary");
  }
  const int n = nu.size();
  const MultiIndex target = reversed(nu);
  Element<P> image = xicheck_w0(Element<P>::monomial(n, nu2, MultiIndex(n)));
  RatFunc c = image.coefficient(target, MultiIndex(n));
  if (c.is_zero()) return c;
  if (P == Parity::even) {
    for (int k = 0; k < n; ++k) {
      for (int m = 2; m <= nu[k]; ++m) c *= RatFunc(m);
    }
  } else {
    // reversing k anticommuting letters
    int k = nu.degree();
    if ((k * (k - 1) / 2) % 2) c = -c;
  }
  return c.permuted(reversal(n));
}

#define REDALG_ZHELOBENKO(P)                                                  \
  template Element<P> qcheck(int, const Element<P>&);                        \
  template Element<P> xicheck(int, const Element<P>&);                       \
  template Element<P> qcheck_word(const WeylWord&, const Element<P>&);       \
  template Element<P> xicheck_word(const WeylWord&, const Element<P>&);      \
  template RatFunc form_via_zhelobenko<P>(const MultiIndex&, const MultiIndex&);

REDALG_ZHELOBENKO(Parity::even)
REDALG_ZHELOBENKO(Parity::odd)

}  // namespace redalg
