#include "redalg/algebra.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "redalg/memo.hpp"

namespace redalg {

Shift weight_of(const MultiIndex& a, const MultiIndex& b) {
  Shift s{};
  for (int i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
  return s;
}

RatFunc phi_prime(int j) {
  RatFunc r(1);
  for (int k = 1; k < j; ++k) r *= RatFunc::h(j, k) / RatFunc::hk(j, k, -1);
  return r;
}

namespace {

constexpr int kTable = kMaxN + 1;

template <Parity P>
constexpr int sigma() {
  return P == Parity::even ? 1 : -1;
}

// Relation coefficients, all to the left of the reordered pair.
template <Parity P>
struct Rel {
  struct Tables {
    std::array<std::array<RatFunc, kTable>, kTable> xx, dd, cross, diag;
  };
  static const Tables& tables() {
    static const Tables t = [] {
      Tables t;
      const RatFunc one(1);
      for (int i = 1; i <= kMaxN; ++i) {
        for (int j = 1; j <= kMaxN; ++j) {
          if (i == j) {
            t.diag[i][j] = RatFunc(sigma<P>());
            continue;
          }
          // x^i x^j = xx[i][j] x^j x^i for i<j
          if (P == Parity::even) t.xx[i][j] = RatFunc::hk(i, j, 1) / RatFunc::h(i, j);
          else t.xx[i][j] = -RatFunc::hk(i, j, -1) / RatFunc::h(i, j);
          // D_j D_l = dd[j][l] D_l D_j for j>l, stored at [j][l] with l = i < j
          if (P == Parity::even) t.dd[j][i] = RatFunc::h(i, j) / RatFunc::hk(i, j, -1);
          else t.dd[j][i] = -RatFunc::h(i, j) / RatFunc::hk(i, j, 1);
          // D_k x^i = cross[k][i] x^i D_k for i<k
          RatFunc c = RatFunc::h(i, j) * RatFunc::hk(i, j, -2) / RatFunc::hk(i, j, -1).pow(2);
          t.cross[j][i] = P == Parity::even ? c : -c;
          // coefficient of x^j D_j in D_i x^i
          t.diag[i][j] = RatFunc(sigma<P>()) / RatFunc::hk(i, j, 1);
        }
      }
      return t;
    }();
    return t;
  }
};

using XKey = std::tuple<int, MultiIndex>;
struct XVal {
  bool nonzero;
  MultiIndex out;
  RatFunc coef;
};

template <Parity P>
Memo<XKey, XVal>& x_memo() {
  static Memo<XKey, XVal> m;
  return m;
}
template <Parity P>
Memo<XKey, XVal>& d_memo() {
  static Memo<XKey, XVal> m;
  return m;
}

using DKey = std::tuple<MultiIndex, MultiIndex, bool>;
template <Parity P>
Memo<DKey, TermMap>& dx_memo() {
  static Memo<DKey, TermMap> m;
  return m;
}
template <Parity P>
Memo<std::tuple<int, MultiIndex, bool>, TermMap>& d1_memo() {
  static Memo<std::tuple<int, MultiIndex, bool>, TermMap> m;
  return m;
}

void accumulate(TermMap& m, const TermKey& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

template <Parity P>
TermMap left_x_map(int t, const TermMap& in) {
  TermMap out;
  for (const auto& [k, r] : in) {
    MultiIndex a;
    RatFunc s;
    if (!detail::left_mul_x<P>(t, k.a, a, s)) continue;
    // x^t X^a D^b r = X^{a'} s D^b r = X^{a'} D^b s(h - b) r
    accumulate(out, {a, k.b}, s.shifted(weight_of(MultiIndex(k.b.size()), k.b)) * r);
  }
  return out;
}

// f placed to the left of every term
TermMap left_coeff_map(const RatFunc& f, const TermMap& in) {
  TermMap out;
  for (const auto& [k, r] : in) accumulate(out, k, f.shifted(weight_of(k.a, k.b)) * r);
  return out;
}

template <Parity P>
const TermMap& d_single(int k, const MultiIndex& a, bool module_only) {
  return d1_memo<P>().get({k, a, module_only}, [&] {
    const int n = a.size();
    TermMap res;
    if (a.is_zero()) {
      if (!module_only) res.emplace(TermKey{a, MultiIndex::unit(n, k - 1)}, RatFunc(1));
      return res;
    }
    int top = n;
    while (a[top - 1] == 0) --top;
    MultiIndex rest = a;
    rest.add(top - 1, -1);
    const auto& tabs = Rel<P>::tables();
    if (top > k) {
      res = left_x_map<P>(top, d_single<P>(k, rest, module_only));
      if (sigma<P>() < 0) {
        for (auto& [key, c] : res) c = -c;
      }
    } else if (top < k) {
      res = left_coeff_map(tabs.cross[k][top], left_x_map<P>(top, d_single<P>(k, rest, module_only)));
    } else {
      res.emplace(TermKey{rest, MultiIndex(n)}, RatFunc(1));
      for (int j = 1; j <= n; ++j) {
        TermMap part = left_coeff_map(tabs.diag[k][j], left_x_map<P>(j, d_single<P>(j, rest, module_only)));
        for (const auto& [key, c] : part) accumulate(res, key, c);
      }
    }
    return res;
  });
}

}  // namespace

namespace detail {

template <Parity P>
bool left_mul_x(int i, const MultiIndex& a, MultiIndex& out, RatFunc& coef) {
  if (P == Parity::odd && a[i - 1] > 0) return false;
  const XVal& v = x_memo<P>().get({i, a}, [&] {
    const int n = a.size();
    const auto& tabs = Rel<P>::tables();
    RatFunc c(1);
    Shift tail = weight_of(a, MultiIndex(n));
    for (int j = n; j > i; --j) {
      for (int copy = 0; copy < a[j - 1]; ++copy) {
        Shift s = tail;
        s[i - 1] += 1;
        c *= tabs.xx[i][j].shifted(s);
        tail[j - 1] -= 1;
      }
    }
    MultiIndex o = a;
    o.add(i - 1, 1);
    return XVal{true, o, c};
  });
  out = v.out;
  coef = v.coef;
  return true;
}

template <Parity P>
bool right_mul_d(const MultiIndex& b, int j, MultiIndex& out, RatFunc& coef) {
  if (P == Parity::odd && b[j - 1] > 0) return false;
  const XVal& v = d_memo<P>().get({j, b}, [&] {
    const int n = b.size();
    const auto& tabs = Rel<P>::tables();
    RatFunc c(1);
    Shift rw{};
    for (int l = n; l > j; --l) {
      for (int copy = 0; copy < b[l - 1]; ++copy) {
        Shift s = rw;
        s[j - 1] -= 1;
        s[l - 1] -= 1;
        c *= tabs.dd[l][j].shifted(s);
        rw[l - 1] -= 1;
      }
    }
    MultiIndex o = b;
    o.add(j - 1, 1);
    return XVal{true, o, c};
  });
  out = v.out;
  coef = v.coef;
  return true;
}

template <Parity P>
bool append_d(const MultiIndex& b, const MultiIndex& beta, MultiIndex& out, RatFunc& coef) {
  const int n = b.size();
  out = b;
  coef = RatFunc(1);
  for (int j = 1; j <= n; ++j) {
    for (int copy = 0; copy < beta[j - 1]; ++copy) {
      MultiIndex nb;
      RatFunc s;
      if (!right_mul_d<P>(out, j, nb, s)) return false;
      coef = coef.shifted(weight_of(MultiIndex(n), MultiIndex::unit(n, j - 1))) * s;
      out = nb;
    }
  }
  return true;
}

// X^a x-letters appended on the right: X^a X^alpha = X^{a+alpha} coef
template <Parity P>
bool append_x(const MultiIndex& a, const MultiIndex& alpha, MultiIndex& out, RatFunc& coef) {
  // X^alpha = (x^n)^.. (x^1)^..; build a * alpha by left-multiplying the
  // letters of X^a onto X^alpha, innermost (x^1) first.
  const int n = a.size();
  out = alpha;
  coef = RatFunc(1);
  for (int i = 1; i <= n; ++i) {
    for (int copy = 0; copy < a[i - 1]; ++copy) {
      MultiIndex na;
      RatFunc s;
      if (!left_mul_x<P>(i, out, na, s)) return false;
      // x^i (X^out coef) = X^na s coef
      coef = s * coef;
      out = na;
    }
  }
  return true;
}

template <Parity P>
const TermMap& d_times_x(const MultiIndex& b, const MultiIndex& a, bool module_only) {
  return dx_memo<P>().get({b, a, module_only}, [&] {
    const int n = a.size();
    TermMap res;
    if (b.is_zero()) {
      res.emplace(TermKey{a, MultiIndex(n)}, RatFunc(1));
      return res;
    }
    int k = n;
    while (b[k - 1] == 0) --k;
    MultiIndex bp = b;
    bp.add(k - 1, -1);
    for (const auto& [key, r] : d_single<P>(k, a, module_only)) {
      for (const auto& [key2, r2] : d_times_x<P>(bp, key.a, module_only)) {
        // X^{a2} D^{b2} r2 D^beta r = X^{a2} (D^{b2} D^beta) r2(h - beta) r
        MultiIndex acc;
        RatFunc sd;
        if (!detail::append_d<P>(key2.b, key.b, acc, sd)) continue;
        accumulate(res, {key2.a, acc}, sd * r2.shifted(weight_of(MultiIndex(n), key.b)) * r);
      }
    }
    return res;
  });
}

template bool left_mul_x<Parity::even>(int, const MultiIndex&, MultiIndex&, RatFunc&);
template bool left_mul_x<Parity::odd>(int, const MultiIndex&, MultiIndex&, RatFunc&);
template bool right_mul_d<Parity::even>(const MultiIndex&, int, MultiIndex&, RatFunc&);
template bool right_mul_d<Parity::odd>(const MultiIndex&, int, MultiIndex&, RatFunc&);
template bool append_x<Parity::even>(const MultiIndex&, const MultiIndex&, MultiIndex&, RatFunc&);
template bool append_x<Parity::odd>(const MultiIndex&, const MultiIndex&, MultiIndex&, RatFunc&);
template bool append_d<Parity::even>(const MultiIndex&, const MultiIndex&, MultiIndex&, RatFunc&);
template bool append_d<Parity::odd>(const MultiIndex&, const MultiIndex&, MultiIndex&, RatFunc&);
template const TermMap& d_times_x<Parity::even>(const MultiIndex&, const MultiIndex&, bool);
template const TermMap& d_times_x<Parity::odd>(const MultiIndex&, const MultiIndex&, bool);

}  // namespace detail
}  // namespace redalg
