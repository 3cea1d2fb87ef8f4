#include "redalg/forms.hpp"

#include <sstream>

namespace redalg {

template <Parity P>
PolyModuleElement<P>::PolyModuleElement(int n) : n_(n) {
  if (n < 1 || n > kMaxN) throw std::out_of_range("n must be between 1 and 7");
}

template <Parity P>
PolyModuleElement<P> PolyModuleElement<P>::monomial(const MultiIndex& nu, const RatFunc& f) {
  PolyModuleElement r(nu.size());
  r.add_term(nu, f);
  return r;
}

template <Parity P>
RatFunc PolyModuleElement<P>::coefficient(const MultiIndex& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

template <Parity P>
void PolyModuleElement<P>::add_term(const MultiIndex& nu, const RatFunc& f) {
  if (nu.size() != n_) throw std::invalid_argument("multi-index length differs from n");
  if (P == Parity::odd && !nu.is_binary()) throw std::invalid_argument("odd module index must be binary");
  if (f.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(nu, f);
  if (fresh) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

template <Parity P>
PolyModuleElement<P>& PolyModuleElement<P>::operator+=(const PolyModuleElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("module elements over different n");
  for (const auto& [nu, f] : o.terms_) add_term(nu, f);
  return *this;
}

template <Parity P>
PolyModuleElement<P> PolyModuleElement<P>::operator*(const RatFunc& f) const {
  PolyModuleElement r(n_);
  for (const auto& [nu, c] : terms_) r.add_term(nu, c * f);
  return r;
}

template <Parity P>
std::string PolyModuleElement<P>::to_string() const {
  Element<P> e(n_);
  for (const auto& [nu, f] : terms_) e.add_term({nu, MultiIndex(n_)}, f);
  return e.to_string();
}

template <Parity P>
PolyModuleElement<P> act(const Element<P>& u, const PolyModuleElement<P>& p) {
  if (u.n() != p.n()) throw std::invalid_argument("element and module over different n");
  const int n = u.n();
  PolyModuleElement<P> res(n);
  for (const auto& [k, c] : u.terms()) {
    for (const auto& [nu, f] : p.terms()) {
      // X^a D^b c X^nu f = X^a (D^b X^nu) c(h + nu) f
      RatFunc tail = c.shifted(weight_of(nu, MultiIndex(n))) * f;
      for (const auto& [t, r] : detail::d_times_x<P>(k.b, nu, true)) {
        MultiIndex a;
        RatFunc sx;
        if (!detail::append_x<P>(k.a, t.a, a, sx)) continue;
        res.add_term(a, sx * r * tail);
      }
    }
  }
  return res;
}

template <Parity P>
RatFunc contravariant_form(const PolyModuleElement<P>& u, const PolyModuleElement<P>& v) {
  if (u.n() != v.n()) throw std::invalid_argument("module elements over different n");
  const int n = u.n();
  Element<P> eu(n);
  for (const auto& [nu, f] : u.terms()) eu.add_term({nu, MultiIndex(n)}, f);
  return act(epsilon(eu), v).coefficient(MultiIndex(n));
}

RatFunc closed_norm_even(const MultiIndex& nu) {
  const int n = nu.size();
  RatFunc r(1);
  for (int k = 0; k < n; ++k) {
    for (int m = 2; m <= nu[k]; ++m) r *= RatFunc(m);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      RatFunc t = RatFunc::h(i, j);
      r *= pochhammer(t - RatFunc(nu[j - 1]), nu[i - 1] + 1, Direction::up) /
           pochhammer(t, nu[i - 1] + 1, Direction::up);
    }
  }
  return r;
}

RatFunc closed_norm_odd(const MultiIndex& nu) {
  if (!nu.is_binary()) throw std::invalid_argument("odd norm needs a binary multi-index");
  const int n = nu.size();
  RatFunc r(1);
  for (int i = 1; i <= n; ++i) {
    if (nu[i - 1] == 1) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (nu[j - 1] == 0) continue;
      r *= RatFunc::hk(i, j, -1) / RatFunc::h(i, j);
    }
  }
  return r;
}

template <Parity P>
RatFunc free_pairing(const PolyModuleElement<P>& u, const PolyModuleElement<P>& v) {
  if (u.n() != v.n()) throw std::invalid_argument("module elements over different n");
  RatFunc r(0);
  for (const auto& [nu, f] : u.terms()) {
    auto it = v.terms().find(nu);
    if (it == v.terms().end()) continue;
    RatFunc c = f * it->second;
    if (P == Parity::even) {
      for (int k = 0; k < nu.size(); ++k) {
        for (int m = 2; m <= nu[k]; ++m) c *= RatFunc(m);
      }
    }
    r += c;
  }
  return r;
}

namespace {

using Classical = std::map<MultiIndex, RatFunc>;

void add_to(Classical& v, const MultiIndex& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

// x^i d/dx^j (even) or z^i d/dz^j (odd, descending monomial basis).
template <Parity P>
Classical raise(const Classical& v, int i, int j) {
  Classical out;
  for (const auto& [m, c] : v) {
    if (m[j - 1] == 0) continue;
    MultiIndex r = m;
    if (P == Parity::even) {
      RatFunc k(m[j - 1]);
      r.add(j - 1, -1);
      r.add(i - 1, 1);
      add_to(out, r, c * k);
    } else {
      if (i != j && m[i - 1] == 1) continue;
      // removing z^j passes the factors with larger index
      int sign = 0;
      for (int l = j + 1; l <= m.size(); ++l) sign += m[l - 1];
      r.add(j - 1, -1);
      for (int l = i + 1; l <= m.size(); ++l) sign += r[l - 1];
      r.add(i - 1, 1);
      add_to(out, r, sign % 2 ? -c : c);
    }
  }
  return out;
}

}  // namespace

template <Parity P>
RatFunc form_via_shifted_projector(const MultiIndex& nu1, const MultiIndex& nu2) {
  if (nu1.size() != nu2.size()) throw std::invalid_argument("multi-indices of different length");
  if (P == Parity::odd && (!nu1.is_binary() || !nu2.is_binary())) {
    throw std::invalid_argument("odd multi-indices must be binary");
  }
  const int n = nu2.size();
  Classical v;
  v.emplace(nu2, RatFunc(1));
  for (int m = n; m >= 2; --m) {
    for (int i = m - 1; i >= 1; --i) {
      // one-root factor for (i, m); the weight of v stays nu2
      const int j = m;
      RatFunc base = RatFunc::hk(i, j, nu2[i - 1] - nu2[j - 1] + 1);
      Classical acc = v, up = v;
      RatFunc fact(1);
      for (int k = 1;; ++k) {
        up = raise<P>(up, i, j);
        if (up.empty()) break;
        Classical down = up;
        for (int s = 0; s < k; ++s) down = raise<P>(down, j, i);
        fact *= RatFunc(-k) * (base + RatFunc(k - 1));
        for (const auto& [mono, c] : down) add_to(acc, mono, c / fact);
      }
      v = std::move(acc);
    }
  }
  auto it = v.find(nu1);
  if (it == v.end()) return RatFunc(0);
  RatFunc r = it->second;
  if (P == Parity::even) {
    for (int k = 0; k < n; ++k) {
      for (int m = 2; m <= nu1[k]; ++m) r *= RatFunc(m);
    }
  }
  return r;
}

Rational evaluate_norm(const MultiIndex& nu, const WeightPoint& mu, Parity parity) {
  const int n = nu.size();
  if (int(mu.size()) != n) throw InvalidWeight("weight has the wrong length");
  WeightPoint lambda = mu;
  for (int i = 0; i < n; ++i) lambda[i] += nu[i];
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Rational v = shifted_root_value(lambda, i, j);
      if (v < 0 && v.get_den() == 1) {
        throw InvalidWeight("singular weight: h" + std::to_string(i) + std::to_string(j) + " = " + v.get_str() +
                            " at mu + nu");
      }
    }
  }
  RatFunc f = parity == Parity::even ? closed_norm_even(nu) : closed_norm_odd(nu);
  try {
    return evaluate(f, mu);
  } catch (const SingularEvaluation& e) {
    throw std::logic_error(std::string("closed form singular at a regular weight: ") + e.what());
  }
}

#define REDALG_FORMS(P)                                                                     \
  template class PolyModuleElement<P>;                                                      \
  template PolyModuleElement<P> act(const Element<P>&, const PolyModuleElement<P>&);        \
  template RatFunc contravariant_form(const PolyModuleElement<P>&, const PolyModuleElement<P>&); \
  template RatFunc free_pairing(const PolyModuleElement<P>&, const PolyModuleElement<P>&);  \
  template RatFunc form_via_shifted_projector<P>(const MultiIndex&, const MultiIndex&);

REDALG_FORMS(Parity::even)
REDALG_FORMS(Parity::odd)

}  // namespace redalg
