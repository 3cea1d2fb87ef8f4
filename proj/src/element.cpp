#include <sstream>

#include "redalg/algebra.hpp"
#include "redalg/expr.hpp"
#include "redalg/memo.hpp"

namespace redalg {

namespace {

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

Shift negated(const MultiIndex& b) { return weight_of(MultiIndex(b.size()), b); }

template <Parity P>
const char* x_name() {
  return P == Parity::even ? "x" : "z";
}
template <Parity P>
const char* d_name() {
  return P == Parity::even ? "D" : "Gd";
}

}  // namespace

template <Parity P>
void Element<P>::check_n(int n) {
  if (n < 1 || n > kMaxN) throw std::out_of_range("n must be between 1 and 7");
}

template <Parity P>
Element<P> Element<P>::scalar(int n, const RatFunc& c) {
  return monomial(n, MultiIndex(n), MultiIndex(n), c);
}

template <Parity P>
Element<P> Element<P>::x(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
  return monomial(n, MultiIndex::unit(n, i - 1), MultiIndex(n));
}

template <Parity P>
Element<P> Element<P>::dbar(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
  return monomial(n, MultiIndex(n), MultiIndex::unit(n, i - 1));
}

template <Parity P>
Element<P> Element<P>::d(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
  return monomial(n, MultiIndex(n), MultiIndex::unit(n, i - 1), phi_prime(i));
}

template <Parity P>
Element<P> Element<P>::monomial(int n, const MultiIndex& a, const MultiIndex& b, const RatFunc& c) {
  Element e(n);
  if (a.size() != n || b.size() != n) throw std::invalid_argument("multi-index length differs from n");
  if (P == Parity::odd && (!a.is_binary() || !b.is_binary())) return e;
  e.add_term({a, b}, c);
  return e;
}

template <Parity P>
RatFunc Element<P>::coefficient(const MultiIndex& a, const MultiIndex& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? RatFunc(0) : it->second;
}

template <Parity P>
void Element<P>::add_term(const TermKey& k, const RatFunc& c) {
  accumulate(terms_, k, c);
}

template <Parity P>
Element<P> Element<P>::operator-() const {
  Element r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

template <Parity P>
Element<P>& Element<P>::operator+=(const Element& o) {
  if (o.n_ != n_) throw std::invalid_argument("elements over different n");
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

template <Parity P>
Element<P>& Element<P>::operator-=(const Element& o) {
  return *this += -o;
}

template <Parity P>
Element<P> Element<P>::operator*(const RatFunc& c) const {
  Element r(n_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

template <Parity P>
std::string Element<P>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest degree first, then by key
  std::vector<const typename TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* l, auto* r) {
    int dl = l->first.a.degree() + l->first.b.degree();
    int dr = r->first.a.degree() + r->first.b.degree();
    if (dl != dr) return dl > dr;
    return l->first > r->first;
  });
  bool first = true;
  for (const auto* t : order) {
    const auto& [k, c] = *t;
    std::string word;
    auto put = [&](const std::string& s) {
      if (!word.empty()) word += "*";
      word += s;
    };
    for (int i = n_; i >= 1; --i) {
      int e = k.a[i - 1];
      if (e == 0) continue;
      put(std::string(x_name<P>()) + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    for (int i = 1; i <= n_; ++i) {
      int e = k.b[i - 1];
      if (e == 0) continue;
      put(std::string(d_name<P>()) + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    std::string term;
    bool negative = false;
    if (c.is_constant()) {
      Rational v = c.constant();
      if (v < 0) {
        negative = true;
        v = -v;
      }
      if (word.empty()) term = v.get_str();
      else if (v == 1) term = word;
      else term = v.get_str() + "*" + word;
    } else {
      std::string cs = c.to_string();
      if (word.empty()) term = cs;
      else term = word + "*(" + cs + ")";
      if (term[0] == '-') {
        negative = true;
        term = term.substr(1);
      }
    }
    if (first) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

template <Parity P>
Element<P> diamond_mul(const Element<P>& u, const Element<P>& v) {
  if (u.n() != v.n()) throw std::invalid_argument("elements over different n");
  const int n = u.n();
  Element<P> res(n);
  for (const auto& [k1, c1] : u.terms()) {
    for (const auto& [k2, c2] : v.terms()) {
      // X^{a1} D^{b1} c1 X^{a2} D^{b2} c2
      RatFunc tail = c1.shifted(weight_of(k2.a, k2.b)) * c2;
      for (const auto& [k, r] : detail::d_times_x<P>(k1.b, k2.a, false)) {
        MultiIndex a, b;
        RatFunc sx, sd;
        if (!detail::append_x<P>(k1.a, k.a, a, sx)) continue;
        if (!detail::append_d<P>(k.b, k2.b, b, sd)) continue;
        MultiIndex beta_b2 = k.b + k2.b;
        RatFunc coef = sx.shifted(negated(beta_b2)) * sd * r.shifted(negated(k2.b)) * tail;
        res.add_term({a, b}, coef);
      }
    }
  }
  return res;
}

template <Parity P>
Element<P> left_scalar(const RatFunc& f, const Element<P>& u) {
  Element<P> res(u.n());
  for (const auto& [k, c] : u.terms()) res.add_term(k, f.shifted(weight_of(k.a, k.b)) * c);
  return res;
}

template <Parity P>
Element<P> power(const Element<P>& u, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  Element<P> r = Element<P>::unit(u.n());
  for (int i = 0; i < k; ++i) r = diamond_mul(r, u);
  return r;
}

namespace {

template <Parity P>
Element<P> epsilon_of_x(int n, int i) {
  return Element<P>::d(n, i);
}

template <Parity P>
Element<P> epsilon_of_d(int n, int i) {
  return Element<P>::monomial(n, MultiIndex::unit(n, i - 1), MultiIndex(n),
                              phi_prime(i).inverse().shifted(weight_of(MultiIndex::unit(n, i - 1), MultiIndex(n))));
}

template <Parity P>
const Element<P>& epsilon_monomial(const TermKey& key) {
  static Memo<TermKey, Element<P>> memo;
  return memo.get(key, [&] {
    const int n = key.a.size();
    Element<P> r = Element<P>::unit(n);
    for (int i = n; i >= 1; --i) {
      for (int c = 0; c < key.b[i - 1]; ++c) r = diamond_mul(r, epsilon_of_d<P>(n, i));
    }
    for (int i = 1; i <= n; ++i) {
      for (int c = 0; c < key.a[i - 1]; ++c) r = diamond_mul(r, epsilon_of_x<P>(n, i));
    }
    return r;
  });
}

// D^b = d^b * g_b, with d^b in the same ascending order
template <Parity P>
RatFunc dbar_to_plain_factor(const MultiIndex& b) {
  static Memo<MultiIndex, RatFunc> memo;
  return memo.get(b, [&] {
    const int n = b.size();
    RatFunc g(1);
    MultiIndex rest = b;
    for (int j = 1; j <= n; ++j) {
      for (int c = 0; c < b[j - 1]; ++c) {
        rest.add(j - 1, -1);
        g *= phi_prime(j).inverse().shifted(negated(rest));
      }
    }
    return g;
  });
}

}  // namespace

template <Parity P>
Element<P> epsilon(const Element<P>& u) {
  Element<P> res(u.n());
  for (const auto& [k, c] : u.terms()) res += left_scalar(c, epsilon_monomial<P>(k));
  return res;
}

template <Parity P>
RatFunc hc_project(const Element<P>& u) {
  return u.coefficient(MultiIndex(u.n()), MultiIndex(u.n()));
}

template <Parity P>
Element<P> to_dbar(const PlainElement<P>& u) {
  Element<P> res(u.n);
  for (const auto& [k, c] : u.terms) res.add_term(k, c / dbar_to_plain_factor<P>(k.b));
  return res;
}

template <Parity P>
PlainElement<P> from_dbar(const Element<P>& u) {
  PlainElement<P> res{u.n(), {}};
  for (const auto& [k, c] : u.terms()) accumulate(res.terms, k, dbar_to_plain_factor<P>(k.b) * c);
  return res;
}

// ---------------------------------------------------------------------------
// Literal rewriting.

namespace {

struct Gen {
  bool is_x;
  int index;
  auto operator<=>(const Gen&) const = default;
};
using Word = std::vector<Gen>;

Shift word_weight(int n, const Word& w, std::size_t from) {
  Shift s{};
  (void)n;
  for (std::size_t p = from; p < w.size(); ++p) s[w[p].index - 1] += w[p].is_x ? 1 : -1;
  return s;
}

// Leftmost adjacent pair out of normal order, or -1.
int leftmost_disorder(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const Gen& l = w[p];
    const Gen& r = w[p + 1];
    if (l.is_x && r.is_x && l.index < r.index) return int(p);
    if (!l.is_x && !r.is_x && l.index > r.index) return int(p);
    if (!l.is_x && r.is_x) return int(p);
  }
  return -1;
}

bool has_odd_square(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p] == w[p + 1]) return true;
  }
  return false;
}

}  // namespace

template <Parity P>
Element<P> normal_order(int n, const std::vector<Letter>& word) {
  Element<P> res(n);
  // Expand plain derivatives and move coefficient letters to the right end.
  Word w;
  std::vector<RatFunc> pending;  // coefficient placed after w[pending_pos]
  std::vector<std::size_t> pending_pos;
  for (const Letter& l : word) {
    if (l.kind != Letter::Kind::coeff && (l.index < 1 || l.index > n)) {
      throw std::out_of_range("generator index out of range");
    }
    switch (l.kind) {
      case Letter::Kind::x:
        w.push_back({true, l.index});
        break;
      case Letter::Kind::dbar:
        w.push_back({false, l.index});
        break;
      case Letter::Kind::d:
        w.push_back({false, l.index});
        pending.push_back(phi_prime(l.index));
        pending_pos.push_back(w.size());
        break;
      case Letter::Kind::coeff:
        pending.push_back(l.coeff);
        pending_pos.push_back(w.size());
        break;
    }
  }
  RatFunc coef(1);
  for (std::size_t q = 0; q < pending.size(); ++q) coef *= pending[q].shifted(word_weight(n, w, pending_pos[q]));

  std::map<Word, RatFunc> work;
  work.emplace(w, coef);
  constexpr int s = P == Parity::even ? 1 : -1;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word cur = node.key();
    const RatFunc c = node.mapped();
    if (c.is_zero()) continue;
    if (P == Parity::odd && has_odd_square(cur)) continue;
    int p = leftmost_disorder(cur);
    if (p < 0) {
      MultiIndex a(n), b(n);
      for (const Gen& g : cur) (g.is_x ? a : b).add(g.index - 1, 1);
      res.add_term({a, b}, c);
      continue;
    }
    // Replace cur[p] cur[p+1] by a sum of (left coefficient, replacement letters).
    const Gen l = cur[p], r = cur[p + 1];
    std::vector<std::pair<RatFunc, Word>> repl;
    auto swapped = [&] { return Word{r, l}; };
    if (l.is_x && r.is_x) {
      RatFunc k = P == Parity::even ? RatFunc::hk(l.index, r.index, 1) / RatFunc::h(l.index, r.index)
                                    : -RatFunc::hk(l.index, r.index, -1) / RatFunc::h(l.index, r.index);
      repl.push_back({k, swapped()});
    } else if (!l.is_x && !r.is_x) {
      // D_j D_l with j>l
      int lo = r.index, hi = l.index;
      RatFunc k = P == Parity::even ? RatFunc::h(lo, hi) / RatFunc::hk(lo, hi, -1)
                                    : -RatFunc::h(lo, hi) / RatFunc::hk(lo, hi, 1);
      repl.push_back({k, swapped()});
    } else {
      // D_k x^i
      int k = l.index, i = r.index;
      if (i > k) {
        repl.push_back({RatFunc(s), swapped()});
      } else if (i < k) {
        RatFunc cr = RatFunc::h(i, k) * RatFunc::hk(i, k, -2) / RatFunc::hk(i, k, -1).pow(2);
        repl.push_back({s * cr, swapped()});
      } else {
        repl.push_back({RatFunc(1), Word{}});
        for (int j = 1; j <= n; ++j) {
          RatFunc cj = j == k ? RatFunc(s) : RatFunc(s) / RatFunc::hk(k, j, 1);
          repl.push_back({cj, Word{{true, j}, {false, j}}});
        }
      }
    }
    for (auto& [lc, mid] : repl) {
      Word next(cur.begin(), cur.begin() + p);
      next.insert(next.end(), mid.begin(), mid.end());
      std::size_t after = next.size();
      next.insert(next.end(), cur.begin() + p + 2, cur.end());
      (void)after;
      RatFunc moved = lc.shifted(word_weight(n, next, std::size_t(p))) * c;
      auto it = work.find(next);
      if (it == work.end()) work.emplace(std::move(next), moved);
      else it->second += moved;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

template <Parity P>
Element<P> eval_element(const Expr& e, int n) {
  using E = Element<P>;
  switch (e.kind) {
    case Expr::Kind::number:
      return E::scalar(n, RatFunc(Rational(e.value)));
    case Expr::Kind::symbol: {
      int idx = 0;
      for (char ch : e.digits) idx = idx * 10 + (ch - '0');
      auto check = [&](int i) {
        if (i < 1 || i > n) throw ParseError("index out of range in '" + e.letters + e.digits + "'", e.pos);
      };
      const std::string& L = e.letters;
      if (L == "h") return E::scalar(n, parse_ratfunc(L + e.digits, n));
      const bool even = P == Parity::even;
      if ((even && L == "x") || (!even && L == "z")) {
        check(idx);
        return E::x(n, idx);
      }
      if ((even && L == "D") || (!even && L == "Gd")) {
        check(idx);
        return E::dbar(n, idx);
      }
      if ((even && L == "d") || (!even && L == "gd")) {
        check(idx);
        return E::d(n, idx);
      }
      throw ParseError("unknown symbol '" + L + e.digits + "'", e.pos);
    }
    case Expr::Kind::add:
      return eval_element<P>(*e.lhs, n) + eval_element<P>(*e.rhs, n);
    case Expr::Kind::sub:
      return eval_element<P>(*e.lhs, n) - eval_element<P>(*e.rhs, n);
    case Expr::Kind::neg:
      return -eval_element<P>(*e.lhs, n);
    case Expr::Kind::mul:
      return diamond_mul(eval_element<P>(*e.lhs, n), eval_element<P>(*e.rhs, n));
    case Expr::Kind::div: {
      E d = eval_element<P>(*e.rhs, n);
      const MultiIndex z(n);
      if (d.terms().size() > 1 || (d.terms().size() == 1 && d.terms().begin()->first != TermKey{z, z})) {
        throw ParseError("division is only by coefficients", e.pos);
      }
      RatFunc c = hc_project(d);
      if (c.is_zero()) throw ParseError("division by zero", e.pos);
      return eval_element<P>(*e.lhs, n) * c.inverse();
    }
    case Expr::Kind::pow: {
      E b = eval_element<P>(*e.lhs, n);
      if (e.exponent < 0) {
        const MultiIndex z(n);
        RatFunc c = hc_project(b);
        if (b.terms().size() != 1 || b.terms().begin()->first != TermKey{z, z} || c.is_zero()) {
          throw ParseError("negative powers only of nonzero coefficients", e.pos);
        }
        return E::scalar(n, c.pow(e.exponent));
      }
      if (P == Parity::odd && e.exponent > 1 && e.lhs->kind == Expr::Kind::symbol && e.lhs->letters != "h") {
        throw ParseError("odd generator raised to a power above 1", e.pos);
      }
      return power(b, e.exponent);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

template <Parity P>
Element<P> parse_element(const std::string& text, int n) {
  if (n < 1 || n > kMaxN) throw std::out_of_range("n must be between 1 and 7");
  return eval_element<P>(*parse_expression(text), n);
}

// ---------------------------------------------------------------------------

std::vector<MultiIndex> multi_indices(int n, int d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur.set(pos, left);
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur.set(pos, v);
      self(self, pos + 1, left - v);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

std::vector<MultiIndex> binary_indices(int n) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= n; ++d) {
    for (const auto& m : multi_indices(n, d)) {
      if (m.is_binary()) out.push_back(m);
    }
  }
  return out;
}

#define REDALG_INSTANTIATE(P)                                                  \
  template class Element<P>;                                                   \
  template Element<P> diamond_mul(const Element<P>&, const Element<P>&);       \
  template Element<P> left_scalar(const RatFunc&, const Element<P>&);          \
  template Element<P> power(const Element<P>&, int);                           \
  template Element<P> epsilon(const Element<P>&);                              \
  template RatFunc hc_project(const Element<P>&);                              \
  template Element<P> to_dbar(const PlainElement<P>&);                         \
  template PlainElement<P> from_dbar(const Element<P>&);                       \
  template Element<P> normal_order(int, const std::vector<Letter>&);           \
  template Element<P> parse_element(const std::string&, int);

REDALG_INSTANTIATE(Parity::even)
REDALG_INSTANTIATE(Parity::odd)

}  // namespace redalg
