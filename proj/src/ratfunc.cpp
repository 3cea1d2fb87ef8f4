#include "redalg/ratfunc.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace redalg {

namespace {

void add_exponent(std::vector<std::pair<Poly, int>>& lin, const Poly& form, int e) {
  auto it = std::lower_bound(lin.begin(), lin.end(), form,
                             [](const std::pair<Poly, int>& a, const Poly& b) { return a.first < b; });
  if (it != lin.end() && it->first == form) {
    it->second += e;
    if (it->second == 0) lin.erase(it);
  } else if (e != 0) {
    lin.insert(it, {form, e});
  }
}

void sort_forms(std::vector<std::pair<Poly, int>>& lin) {
  std::sort(lin.begin(), lin.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

RatFunc::RatFunc(const Rational& c) : scalar_(c) {}

RatFunc::RatFunc(const Poly& p) : scalar_(p.is_zero() ? 0 : 1), num_(p.is_zero() ? Poly(1) : p) { reduce(); }

RatFunc RatFunc::fraction(const Poly& num, const Poly& den) { return RatFunc(num) / RatFunc(den); }

RatFunc RatFunc::h(int i) { return RatFunc(Poly::variable(i - 1)); }

RatFunc RatFunc::h(int i, int j) { return hk(i, j, 0); }

RatFunc RatFunc::hk(int i, int j, long k) {
  if (i == j) return RatFunc(k);
  return RatFunc(Poly::variable(i - 1) - Poly::variable(j - 1) + Poly(k));
}

bool RatFunc::is_constant() const { return lin_.empty() && num_.is_constant() && den_.is_constant(); }

const Rational& RatFunc::constant() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return scalar_;
}

void RatFunc::reduce() {
  if (sgn(scalar_) == 0) {
    lin_.clear();
    num_ = Poly(1);
    den_ = Poly(1);
    return;
  }
  for (;;) {
    Rational c;
    num_ = num_.monic(&c);
    scalar_ *= c;
    den_ = den_.monic(&c);
    scalar_ /= c;
    bool moved = false;
    if (num_.is_linear()) {
      add_exponent(lin_, num_, 1);
      num_ = Poly(1);
      moved = true;
    }
    if (den_.is_linear()) {
      add_exponent(lin_, den_, -1);
      den_ = Poly(1);
      moved = true;
    }
    for (auto& [form, e] : lin_) {
      while (e < 0 && !num_.is_constant() && num_.may_vanish_on(form)) {
        auto q = num_.divide_exact(form);
        if (!q) break;
        num_ = std::move(*q);
        ++e;
        moved = true;
      }
      while (e > 0 && !den_.is_constant() && den_.may_vanish_on(form)) {
        auto q = den_.divide_exact(form);
        if (!q) break;
        den_ = std::move(*q);
        --e;
        moved = true;
      }
    }
    std::erase_if(lin_, [](const auto& p) { return p.second == 0; });
    if (!num_.is_constant() && !den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
        moved = true;
      }
    }
    if (!moved) break;
  }
}

Poly RatFunc::expand_side(bool positive) const {
  Poly r = positive ? num_ * scalar_ : den_;
  for (const auto& [form, e] : lin_) {
    if (positive && e > 0) r = r * form.pow(e);
    if (!positive && e < 0) r = r * form.pow(-e);
  }
  return r;
}

Poly RatFunc::numerator() const { return is_zero() ? Poly() : expand_side(true); }
Poly RatFunc::denominator() const { return is_zero() ? Poly(1) : expand_side(false); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.scalar_ = -r.scalar_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero rational function");
  RatFunc r = *this;
  r.scalar_ = 1 / scalar_;
  for (auto& [form, e] : r.lin_) e = -e;
  std::swap(r.num_, r.den_);
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (lin_ == o.lin_ && num_ == o.num_ && den_ == o.den_) {
    scalar_ += o.scalar_;
    if (sgn(scalar_) == 0) reduce();
    return *this;
  }
  std::vector<std::pair<Poly, int>> common;
  Poly pa = num_ * scalar_, pb = o.num_ * o.scalar_;
  auto a = lin_.begin();
  auto b = o.lin_.begin();
  while (a != lin_.end() || b != o.lin_.end()) {
    const Poly* form;
    int ea = 0, eb = 0;
    if (b == o.lin_.end() || (a != lin_.end() && a->first < b->first)) {
      form = &a->first;
      ea = a->second;
      ++a;
    } else if (a == lin_.end() || b->first < a->first) {
      form = &b->first;
      eb = b->second;
      ++b;
    } else {
      form = &a->first;
      ea = a->second;
      eb = b->second;
      ++a;
      ++b;
    }
    int m = std::min(ea, eb);
    if (m != 0) common.push_back({*form, m});
    if (ea > m) pa = pa * form->pow(ea - m);
    if (eb > m) pb = pb * form->pow(eb - m);
  }
  Poly s, d;
  if (den_ == o.den_) {
    s = pa + pb;
    d = den_;
  } else {
    s = pa * o.den_ + pb * den_;
    d = den_ * o.den_;
  }
  if (s.is_zero()) return *this = RatFunc();
  scalar_ = 1;
  lin_ = std::move(common);
  num_ = std::move(s);
  den_ = std::move(d);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  scalar_ *= o.scalar_;
  if (sgn(scalar_) == 0) {
    reduce();
    return *this;
  }
  for (const auto& [form, e] : o.lin_) add_exponent(lin_, form, e);
  bool cof = !o.num_.is_constant() || !o.den_.is_constant();
  if (!o.num_.is_constant()) num_ = num_ * o.num_;
  if (!o.den_.is_constant()) den_ = den_ * o.den_;
  bool check = cof || !num_.is_constant() || !den_.is_constant();
  if (check) reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.scalar_ == b.scalar_ && a.lin_ == b.lin_ && a.num_ == b.num_ && a.den_ == b.den_) return true;
  if (a.is_zero() || b.is_zero()) return false;
  return (a - b).is_zero();
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RatFunc(1);
  RatFunc r = *this;
  mpq_class s = 1;
  for (int k = 0; k < e; ++k) s *= scalar_;
  r.scalar_ = s;
  for (auto& [form, x] : r.lin_) x *= e;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

RatFunc RatFunc::shifted(std::span<const int> delta) const {
  if (is_constant()) return *this;
  RatFunc r = *this;
  for (auto& [form, e] : r.lin_) form = form.shifted(delta);
  sort_forms(r.lin_);
  r.num_ = num_.shifted(delta);
  r.den_ = den_.shifted(delta);
  return r;
}

RatFunc RatFunc::permuted(std::span<const int> perm) const {
  if (is_constant()) return *this;
  RatFunc r;
  r.scalar_ = scalar_;
  for (const auto& [form, e] : lin_) {
    Rational c;
    Poly f = form.permuted(perm).monic(&c);
    for (int k = 0; k < std::abs(e); ++k) {
      if (e > 0) r.scalar_ *= c;
      else r.scalar_ /= c;
    }
    r.lin_.push_back({std::move(f), e});
  }
  sort_forms(r.lin_);
  Rational c;
  r.num_ = num_.permuted(perm).monic(&c);
  r.scalar_ *= c;
  r.den_ = den_.permuted(perm).monic(&c);
  r.scalar_ /= c;
  return r;
}

int RatFunc::max_var() const {
  int m = std::max(num_.max_var(), den_.max_var());
  for (const auto& [form, e] : lin_) m = std::max(m, form.max_var());
  return m;
}

// ---- printing ----

namespace {

using Namer = std::function<std::string(int)>;

std::string poly_text(const Poly& p, const Namer& name) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? "-" : "+");
    first = false;
    bool unit = c == 1 && t.m != 0;
    if (!unit) os << c.get_str();
    bool need_star = !unit;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono::exponent(t.m, v);
      if (e == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string plain_name(int v) { return "h" + std::to_string(v + 1); }

// Recognizes h_i - h_j + k (i<j) or h_i + k; returns {i, j, k} with j = 0 for the latter.
bool root_form(const Poly& form, int& i, int& j, Rational& k) {
  i = j = -1;
  k = 0;
  for (const auto& t : form.terms()) {
    if (t.m == 0) {
      k = t.c;
      continue;
    }
    int v = -1;
    for (int w = 0; w < kMaxVars; ++w) {
      if (mono::exponent(t.m, w)) v = w;
    }
    if (t.c == 1 && i < 0) i = v;
    else if (t.c == -1 && j < 0) j = v;
    else return false;
  }
  if (i < 0) return false;
  if (j >= 0 && j < i) return false;
  ++i;
  j = j < 0 ? 0 : j + 1;
  return true;
}

std::string constant_suffix(const Rational& k) {
  if (sgn(k) == 0) return "";
  if (sgn(k) > 0) return "+" + k.get_str();
  return k.get_str();
}

struct FactorText {
  std::string text;
  bool bare;  // a single symbol without constant
};

FactorText linear_text(const Poly& form) {
  int i, j;
  Rational k;
  if (root_form(form, i, j, k)) {
    std::string sym = "h" + std::to_string(i) + (j ? std::to_string(j) : "");
    if (sgn(k) == 0) return {sym, true};
    return {"(" + sym + constant_suffix(k) + ")", false};
  }
  return {"(" + poly_text(form, plain_name) + ")", false};
}

std::string with_power(const FactorText& f, int e) {
  if (e == 1) return f.text;
  return f.text + "^" + std::to_string(e);
}

bool translation_invariant(const Poly& p) {
  std::array<int, kMaxVars> ones;
  ones.fill(1);
  return p.shifted(ones) == p;
}

std::string cofactor_text(const Poly& p, int last_var) {
  if (last_var >= 0 && translation_invariant(p)) {
    std::vector<Poly::Term> kept;
    for (const auto& t : p.terms()) {
      if (mono::exponent(t.m, last_var) == 0) kept.push_back(t);
    }
    Poly q = Poly::from_terms(std::move(kept));
    std::string tail = std::to_string(last_var + 1);
    return "(" + poly_text(q, [&](int v) { return "h" + std::to_string(v + 1) + tail; }) + ")";
  }
  return "(" + poly_text(p, plain_name) + ")";
}

struct ForPrint {
  Poly form;
  int i, j;
  Rational k;
};

bool print_less(const ForPrint& a, const ForPrint& b) {
  // root forms first, pair symbols before single variables, then by indices
  auto key = [](const ForPrint& c) { return std::tuple(c.i > 0 ? 0 : 1, c.j > 0 ? 0 : 1, c.i, c.j); };
  if (key(a) != key(b)) return key(a) < key(b);
  if (a.i == 0) return a.form < b.form;
  return a.k < b.k;
}

const std::array<Rational, kMaxVars>& probe_point() {
  static const std::array<Rational, kMaxVars> p = {Rational(7, 13),  Rational(11, 17), Rational(19, 23),
                                                   Rational(29, 31), Rational(37, 41), Rational(43, 47),
                                                   Rational(53, 59)};
  return p;
}

// Cheap necessary test that form divides p: p vanishes at a point of the hyperplane.
bool may_divide(const Poly& p, const Poly& form) {
  std::array<Rational, kMaxVars> pt = probe_point();
  int lead = -1;
  for (int v = 0; v < kMaxVars; ++v) {
    if (mono::exponent(form.leading_monomial(), v)) lead = v;
  }
  pt[lead] = 0;
  Rational rest = form.evaluate(pt);
  pt[lead] = -rest;
  return sgn(p.evaluate(pt)) == 0;
}

int extract(Poly& p, const Poly& form) {
  int e = 0;
  while (!p.is_constant() && may_divide(p, form)) {
    auto q = p.divide_exact(form);
    if (!q) break;
    p = std::move(*q);
    ++e;
  }
  return e;
}

}  // namespace

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  Rational s;
  Poly n = numerator().monic(&s);
  Poly d = denominator();
  int last = std::max(n.max_var(), d.max_var());
  int deg = std::max(n.total_degree(), d.total_degree());
  int bound = std::min(40, 2 * deg + 6);

  std::vector<ForPrint> cands;
  auto add_cand = [&](const Poly& f) {
    for (const auto& c : cands) {
      if (c.form == f) return;
    }
    ForPrint fp{f, 0, 0, 0};
    if (!root_form(f, fp.i, fp.j, fp.k)) fp.i = fp.j = 0;
    cands.push_back(std::move(fp));
  };
  bool inv = translation_invariant(n) && translation_invariant(d);
  for (int i = 0; i <= last; ++i) {
    for (int k = -bound; k <= bound; ++k) {
      for (int j = i + 1; j <= last; ++j) add_cand(Poly::variable(i) - Poly::variable(j) + Poly(k));
      if (!inv) add_cand(Poly::variable(i) + Poly(k));
    }
  }
  std::sort(cands.begin(), cands.end(), print_less);

  std::vector<std::string> top, bottom;
  Integer p = s.get_num(), q = s.get_den();
  if (abs(p) != 1) top.push_back(Integer(abs(p)).get_str());
  if (q != 1) bottom.push_back(q.get_str());
  for (const auto& c : cands) {
    if (n.is_constant() && d.is_constant()) break;
    int en = extract(n, c.form);
    int ed = extract(d, c.form);
    if (en) top.push_back(with_power(linear_text(c.form), en));
    if (ed) bottom.push_back(with_power(linear_text(c.form), ed));
  }
  auto rest = [&](const Poly& p) { return p.is_linear() ? linear_text(p).text : cofactor_text(p, last); };
  if (!n.is_constant()) top.push_back(rest(n));
  if (!d.is_constant()) bottom.push_back(rest(d));
  // constant leftovers are 1 because both sides were monic

  std::string out = sgn(p) < 0 ? "-" : "";
  if (top.empty()) {
    out += "1";
  } else {
    for (std::size_t k = 0; k < top.size(); ++k) out += (k ? "*" : "") + top[k];
  }
  if (bottom.empty()) return out;
  out += "/";
  if (bottom.size() == 1) return out + bottom[0];
  out += "(";
  for (std::size_t k = 0; k < bottom.size(); ++k) out += (k ? "*" : "") + bottom[k];
  return out + ")";
}

Rational RatFunc::value_at(std::span<const Rational> point) const {
  if (is_zero()) return 0;
  Rational top = scalar_, bottom = 1;
  for (const auto& [form, e] : lin_) {
    Rational v = form.evaluate(point);
    if (e < 0 && sgn(v) == 0) throw SingularEvaluation(with_power(linear_text(form), -e));
    for (int k = 0; k < std::abs(e); ++k) {
      if (e > 0) top *= v;
      else bottom *= v;
    }
  }
  top *= num_.evaluate(point);
  Rational dv = den_.evaluate(point);
  if (sgn(dv) == 0) throw SingularEvaluation(cofactor_text(den_, -1));
  bottom *= dv;
  return top / bottom;
}

RatFunc shift(const RatFunc& f, std::span<const int> delta) { return f.shifted(delta); }

RatFunc weyl_permute(const RatFunc& f, std::span<const int> perm) { return f.permuted(perm); }

RatFunc pochhammer(const RatFunc& f, int a, Direction dir) {
  RatFunc r(1);
  for (int k = 0; k < a; ++k) r *= f + RatFunc(dir == Direction::up ? k : -k);
  return r;
}

Rational evaluate(const RatFunc& f, const WeightPoint& mu) {
  int need = f.max_var() + 1;
  if (need > int(mu.size())) throw std::invalid_argument("weight has fewer entries than variables in use");
  std::vector<Rational> pt(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) pt[i] = mu[i] - Rational(long(i) + 1);
  return f.value_at(pt);
}

Rational shifted_root_value(const WeightPoint& lambda, int i, int j) {
  return lambda[i - 1] - lambda[j - 1] + Rational(j - i);
}

bool is_nonsingular(const WeightPoint& lambda) {
  int n = int(lambda.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Rational v = shifted_root_value(lambda, i, j);
      if (v.get_den() == 1 && sgn(v) <= 0) return false;
    }
  }
  return true;
}

bool is_dominant(const WeightPoint& lambda) {
  int n = int(lambda.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rational d = lambda[i] - lambda[j];
      if (d.get_den() != 1 || sgn(d) < 0) return false;
    }
  }
  return true;
}

}  // namespace redalg
