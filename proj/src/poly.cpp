#include "redalg/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace redalg {

namespace mono {

bool divides(Monomial a, Monomial b) {
  for (int i = 0; i < 8; ++i) {
    if (((a >> (8 * i)) & 0xffu) > ((b >> (8 * i)) & 0xffu)) return false;
  }
  return true;
}

Monomial make(std::span<const int> exps) {
  Monomial m = 0;
  int d = 0;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    m |= Monomial(exps[v]) << (8 * (6 - int(v)));
    d += exps[v];
  }
  if (d > 255) throw std::overflow_error("monomial degree exceeds 255");
  return m | (Monomial(d) << 56);
}

}  // namespace mono

namespace {

void check_sum(Monomial a, Monomial b) {
  if (mono::degree(a) + mono::degree(b) > 255) throw std::overflow_error("monomial degree exceeds 255");
}

}  // namespace

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({0, c});
}

Poly Poly::variable(int v) {
  if (v < 0 || v >= kMaxVars) throw std::out_of_range("polynomial variable index");
  Poly p;
  p.terms_.push_back({mono::var(v), Rational(1)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (sgn(p.terms_.back().c) == 0) p.terms_.pop_back();
    } else if (sgn(t.c) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m == 0); }

bool Poly::is_linear() const {
  if (terms_.empty()) return false;
  return mono::degree(terms_.front().m) == 1;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m == 0) return terms_.back().c;
  return Rational(0);
}

int Poly::total_degree() const { return terms_.empty() ? -1 : mono::degree(terms_.front().m); }

int Poly::degree_in(int v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, mono::exponent(t.m, v));
  return d;
}

int Poly::max_var() const {
  Monomial all = 0;
  for (const auto& t : terms_) all |= t.m;
  for (int v = kMaxVars - 1; v >= 0; --v) {
    if (mono::exponent(all, v) != 0) return v;
  }
  return -1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

// this += s * x^shift * o
void Poly::add_scaled(const Poly& o, const Rational& s, Monomial shift) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->m > b->m + shift)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || a->m < b->m + shift) {
      out.push_back({b->m + shift, b->c * s});
      ++b;
    } else {
      Rational c = a->c + b->c * s;
      if (sgn(c) != 0) out.push_back({a->m, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, Rational(1), 0);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, Rational(-1), 0);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.c *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1 && a.terms_[0].m == 0) return b * a.terms_[0].c;
  if (b.terms_.size() == 1 && b.terms_[0].m == 0) return a * b.terms_[0].c;
  check_sum(a.leading_monomial(), b.leading_monomial());
  std::vector<Poly::Term> ts;
  ts.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) ts.push_back({x.m + y.m, x.c * y.c});
  }
  return Poly::from_terms(std::move(ts));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].m != b.terms_[i].m) return a.terms_[i].m <=> b.terms_[i].m;
    int c = cmp(a.terms_[i].c, b.terms_[i].c);
    if (c != 0) return c <=> 0;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Poly Poly::shifted(std::span<const int> delta) const {
  bool trivial = true;
  for (int d : delta) trivial = trivial && d == 0;
  if (trivial || is_constant()) return *this;
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    std::vector<Term> cur{{0, t.c}};
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono::exponent(t.m, v);
      if (e == 0) continue;
      int d = v < int(delta.size()) ? delta[v] : 0;
      if (d == 0) {
        for (auto& c : cur) c.m += mono::var(v, e);
        continue;
      }
      // (h_v + d)^e = sum_k binom(e,k) d^(e-k) h_v^k
      std::vector<Term> next;
      Integer binom = 1;
      for (int k = 0; k <= e; ++k) {
        if (k > 0) binom = binom * (e - k + 1) / k;
        Integer dp;
        mpz_pow_ui(dp.get_mpz_t(), Integer(d).get_mpz_t(), (unsigned long)(e - k));
        Rational f(binom * dp);
        for (const auto& c : cur) next.push_back({c.m + (k ? mono::var(v, k) : 0), c.c * f});
      }
      cur = std::move(next);
    }
    for (auto& c : cur) acc.push_back(std::move(c));
  }
  return from_terms(std::move(acc));
}

Poly Poly::permuted(std::span<const int> perm) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  std::array<int, kMaxVars> e{};
  for (const auto& t : terms_) {
    e.fill(0);
    for (int v = 0; v < kMaxVars; ++v) {
      int x = mono::exponent(t.m, v);
      if (x == 0) continue;
      int w = v < int(perm.size()) ? perm[v] : v;
      e[w] += x;
    }
    ts.push_back({mono::make(e), t.c});
  }
  return from_terms(std::move(ts));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational r = 0;
  for (const auto& t : terms_) {
    Rational x = t.c;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono::exponent(t.m, v);
      if (e == 0) continue;
      if (v >= int(point.size())) throw std::invalid_argument("evaluation point has too few coordinates");
      for (int k = 0; k < e; ++k) x *= point[v];
    }
    r += x;
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly();
  const Monomial md = d.leading_monomial();
  const Rational& cd = d.leading_coeff();
  if (d.terms_.size() == 1) {
    Poly q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!mono::divides(md, t.m)) return std::nullopt;
      q.terms_.push_back({t.m - md, t.c / cd});
    }
    return q;
  }
  if (mono::degree(leading_monomial()) < mono::degree(md)) return std::nullopt;
  std::map<Monomial, Rational, std::greater<>> r;
  for (const auto& t : terms_) r.emplace_hint(r.end(), t.m, t.c);
  std::vector<Term> qt;
  while (!r.empty()) {
    auto lead = r.begin();
    Monomial mr = lead->first;
    if (!mono::divides(md, mr)) return std::nullopt;
    Monomial s = mr - md;
    Rational c = lead->second / cd;
    r.erase(lead);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      Monomial m = d.terms_[k].m + s;
      auto [it, fresh] = r.try_emplace(m);
      if (fresh) it->second = -c * d.terms_[k].c;
      else {
        it->second -= c * d.terms_[k].c;
        if (sgn(it->second) == 0) r.erase(it);
      }
    }
    qt.push_back({s, std::move(c)});
  }
  Poly q;
  q.terms_ = std::move(qt);
  return q;
}

namespace {

constexpr std::uint64_t kPrime = 0x1fffffffffffffffULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = (unsigned __int128)a * b;
  std::uint64_t lo = std::uint64_t(p & kPrime), hi = std::uint64_t(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Residue of a rational, or nullopt when the denominator vanishes mod p.
std::optional<std::uint64_t> residue(const Rational& q) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mulmod(num, powmod(den, kPrime - 2));
}

}  // namespace

bool Poly::may_vanish_on(const Poly& form) const {
  if (is_zero()) return true;
  if (!form.is_linear()) return true;
  // Solve the form for its leading variable; others take fixed pseudo-random values.
  int lead = -1;
  for (int v = 0; v < kMaxVars && lead < 0; ++v) {
    if (mono::exponent(form.leading_monomial(), v) > 0) lead = v;
  }
  if (lead < 0) return true;
  static constexpr std::array<std::uint64_t, 2 * kMaxVars> seeds = {
      0x2545f4914f6cdd1dULL % kPrime, 0x9e3779b97f4a7c15ULL % kPrime, 0x632be59bd9b4e019ULL % kPrime,
      0x8cb92ba72f3d8dd7ULL % kPrime, 0x4f1bbcdcbfa53e0bULL % kPrime, 0xd6e8feb86659fd93ULL % kPrime,
      0xa0761d6478bd642fULL % kPrime, 0xe7037ed1a0b428dbULL % kPrime, 0x8ebc6af09c88c6e3ULL % kPrime,
      0x589965cc75374cc3ULL % kPrime, 0x1d8e4e27c47d124fULL % kPrime, 0x3c6ef372fe94f82aULL % kPrime,
      0xbb67ae8584caa73bULL % kPrime, 0x510e527fade682d1ULL % kPrime};
  for (int round = 0; round < 2; ++round) {
    std::array<std::uint64_t, kMaxVars> pt{};
    for (int v = 0; v < kMaxVars; ++v) pt[v] = seeds[(v + round * kMaxVars) % seeds.size()];
    // form = lead_var + rest with unit leading coefficient after monic()
    std::optional<std::uint64_t> lc = residue(form.leading_coeff());
    if (!lc || *lc == 0) return true;
    std::uint64_t rest = 0;
    for (std::size_t k = 1; k < form.terms_.size(); ++k) {
      auto c = residue(form.terms_[k].c);
      if (!c) return true;
      std::uint64_t val = *c;
      for (int v = 0; v < kMaxVars; ++v) {
        if (mono::exponent(form.terms_[k].m, v)) val = mulmod(val, pt[v]);
      }
      rest = (rest + val) % kPrime;
    }
    pt[lead] = mulmod((kPrime - rest) % kPrime, powmod(*lc, kPrime - 2));
    std::array<std::vector<std::uint64_t>, kMaxVars> pw;
    std::uint64_t acc = 0;
    for (const auto& t : terms_) {
      auto c = residue(t.c);
      if (!c) return true;
      std::uint64_t val = *c;
      for (int v = 0; v < kMaxVars; ++v) {
        int e = mono::exponent(t.m, v);
        if (!e) continue;
        auto& p = pw[v];
        if (p.empty()) p.push_back(1);
        while (int(p.size()) <= e) p.push_back(mulmod(p.back(), pt[v]));
        val = mulmod(val, p[e]);
      }
      acc = (acc + val) % kPrime;
    }
    if (acc != 0) return false;
  }
  return true;
}

Poly Poly::monic(Rational* lc) const {
  if (is_zero()) {
    if (lc) *lc = 0;
    return *this;
  }
  Rational c = leading_coeff();
  if (lc) *lc = c;
  if (c == 1) return *this;
  Poly r = *this;
  r *= Rational(1) / c;
  return r;
}

Poly Poly::pow(int e) const {
  Poly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = c == 1 && t.m != 0;
    if (!unit) os << c.get_str();
    bool lead = unit;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono::exponent(t.m, v);
      if (e == 0) continue;
      if (!lead) os << "*";
      lead = false;
      os << "h" << (v + 1);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---- gcd by recursive primitive remainder sequences ----

namespace {

using Uni = std::vector<Poly>;  // coefficients by degree in the main variable

Uni to_uni(const Poly& p, int v) {
  Uni u;
  std::vector<std::vector<Poly::Term>> buckets;
  for (const auto& t : p.terms()) {
    int e = mono::exponent(t.m, v);
    if (int(buckets.size()) <= e) buckets.resize(e + 1);
    buckets[e].push_back({t.m - (e ? mono::var(v, e) : 0), t.c});
  }
  for (auto& b : buckets) u.push_back(Poly::from_terms(std::move(b)));
  return u;
}

Poly from_uni(const Uni& u, int v) {
  std::vector<Poly::Term> ts;
  for (std::size_t e = 0; e < u.size(); ++e) {
    for (const auto& t : u[e].terms()) ts.push_back({t.m + (e ? mono::var(v, int(e)) : 0), t.c});
  }
  return Poly::from_terms(std::move(ts));
}

void trim(Uni& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly content(const Uni& u) {
  Poly g;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Poly(1);
  }
  return g;
}

void make_primitive(Uni& u, const Poly& c) {
  if (c.is_constant()) return;
  for (auto& x : u) x = *x.divide_exact(c);
}

Uni prem(Uni a, const Uni& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t da = a.size() - 1;
    Poly la = a.back();
    for (auto& x : a) x = x * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + da - db] -= la * b[k];
    trim(a);
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();
  int v = std::max(a.max_var(), b.max_var());
  Uni ua = to_uni(a, v), ub = to_uni(b, v);
  if (ua.size() == 1) return gcd(a, content(ub));
  if (ub.size() == 1) return gcd(content(ua), b);
  Poly ca = content(ua), cb = content(ub);
  Poly c = gcd(ca, cb);
  make_primitive(ua, ca);
  make_primitive(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  for (;;) {
    Uni r = prem(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = Uni{Poly(1)};
      break;
    }
    ua = std::move(ub);
    ub = std::move(r);
    make_primitive(ub, content(ub));
  }
  return (c * from_uni(ub, v)).monic();
}

}  // namespace redalg
