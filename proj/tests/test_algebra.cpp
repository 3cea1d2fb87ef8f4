#include <doctest.h>

#include "gen.hpp"
#include "redalg/algebra.hpp"
#include "redalg/expr.hpp"

using namespace redalg;

namespace {

template <Parity P>
Element<P> E(const char* s, int n) {
  return parse_element<P>(s, n);
}
RatFunc R(const char* s, int n) { return parse_ratfunc(s, n); }

MultiIndex mi(std::initializer_list<int> v) { return MultiIndex(v); }

template <Parity P>
bool homogeneous(const Element<P>& u, const Shift& w) {
  for (const auto& [k, c] : u.terms()) {
    if (weight_of(k.a, k.b) != w) return false;
  }
  return true;
}

template <Parity P>
Shift weight_sum(const TermKey& a, const TermKey& b) {
  Shift s = weight_of(a.a, a.b), t = weight_of(b.a, b.b);
  for (int i = 0; i < kMaxN; ++i) s[i] += t[i];
  return s;
}

// Word letters of a random monomial-ish word.
std::vector<Letter> random_word(gen::Rng& r, int n, int len) {
  std::vector<Letter> w;
  for (int k = 0; k < len; ++k) {
    int roll = r.uniform(0, 9);
    int i = r.uniform(1, n);
    if (roll < 4) w.push_back(Letter::gen(Letter::Kind::x, i));
    else if (roll < 7) w.push_back(Letter::gen(Letter::Kind::dbar, i));
    else if (roll < 9) w.push_back(Letter::gen(Letter::Kind::d, i));
    else w.push_back(Letter::scalar(gen::root_ratfunc(r, n)));
  }
  return w;
}

template <Parity P>
Element<P> product_of_word(int n, const std::vector<Letter>& w) {
  Element<P> r = Element<P>::unit(n);
  for (const Letter& l : w) {
    switch (l.kind) {
      case Letter::Kind::x:
        r = diamond_mul(r, Element<P>::x(n, l.index));
        break;
      case Letter::Kind::dbar:
        r = diamond_mul(r, Element<P>::dbar(n, l.index));
        break;
      case Letter::Kind::d:
        r = diamond_mul(r, Element<P>::d(n, l.index));
        break;
      case Letter::Kind::coeff:
        r = diamond_mul(r, Element<P>::scalar(n, l.coeff));
        break;
    }
  }
  return r;
}

}  // namespace

TEST_CASE("even products: defining relations") {
  using D = DiffElement;
  // x1 x2 = x2 x1 (h12+1)/h12
  CHECK(diamond_mul(D::x(2, 1), D::x(2, 2)) == D::monomial(2, mi({1, 1}), mi({0, 0}), R("(h12+1)/h12", 2)));
  // D1 x1 = 1 + x1 D1 for n = 1
  CHECK(diamond_mul(D::dbar(1, 1), D::x(1, 1)) == D::unit(1) + D::monomial(1, mi({1}), mi({1})));
  // (x1)^2 x2 = x2 (x1)^2 (h12+2)/h12
  CHECK(diamond_mul(power(D::x(2, 1), 2), D::x(2, 2)) ==
        D::monomial(2, mi({2, 1}), mi({0, 0}), R("(h12+1)*(h12+2)/(h12*(h12+1))", 2)));
  // D2 x1 = x1 D2 t(t+2)/(t+1)^2 with the coefficient on the right, t = h12;
  // with the coefficient on the left it reads t(t-2)/(t-1)^2
  D lhs = diamond_mul(D::dbar(2, 2), D::x(2, 1));
  CHECK(lhs == D::monomial(2, mi({1, 0}), mi({0, 1}), R("h12*(h12+2)/(h12+1)^2", 2)));
  CHECK(lhs == left_scalar(R("h12*(h12-2)/(h12-1)^2", 2), D::monomial(2, mi({1, 0}), mi({0, 1}))));
  // D1 x2 = x2 D1
  CHECK(diamond_mul(D::dbar(2, 1), D::x(2, 2)) == D::monomial(2, mi({0, 1}), mi({1, 0})));
  // D1 x1 = 1 + x1 D1 + x2 D2 / (h12 + 1) with left coefficient
  CHECK(diamond_mul(D::dbar(2, 1), D::x(2, 1)) ==
        D::unit(2) + D::monomial(2, mi({1, 0}), mi({1, 0})) +
            left_scalar(R("1/(h12+1)", 2), D::monomial(2, mi({0, 1}), mi({0, 1}))));
}

TEST_CASE("normal_order examples") {
  using D = DiffElement;
  using K = Letter::Kind;
  CHECK(normal_order<Parity::even>(2, {Letter::gen(K::x, 2), Letter::gen(K::x, 1)}) ==
        D::monomial(2, mi({1, 1}), mi({0, 0})));
  CHECK(normal_order<Parity::even>(2, {Letter::gen(K::x, 1), Letter::gen(K::x, 2)}) ==
        D::monomial(2, mi({1, 1}), mi({0, 0}), R("(h12+1)/h12", 2)));
  CHECK(normal_order<Parity::even>(3, {}) == D::unit(3));
  CHECK_THROWS(normal_order<Parity::even>(2, {Letter::gen(K::x, 3)}));
}

TEST_CASE("odd products: defining relations") {
  using G = GDiffElement;
  CHECK(diamond_mul(G::x(2, 1), G::x(2, 2)) == G::monomial(2, mi({1, 1}), mi({0, 0}), R("-(h12-1)/h12", 2)));
  CHECK(diamond_mul(G::x(2, 1), G::x(2, 1)).is_zero());
  CHECK(diamond_mul(G::dbar(2, 2), G::dbar(2, 2)).is_zero());
  CHECK(diamond_mul(G::dbar(1, 1), G::x(1, 1)) == G::unit(1) - G::monomial(1, mi({1}), mi({1})));
  G lhs = diamond_mul(G::dbar(2, 2), G::x(2, 1));
  CHECK(lhs == G::monomial(2, mi({1, 0}), mi({0, 1}), R("-h12*(h12+2)/(h12+1)^2", 2)));
  CHECK(hc_project(diamond_mul(G::dbar(1, 1), G::x(1, 1))) == RatFunc(1));
}

TEST_CASE("epsilon examples") {
  using D = DiffElement;
  CHECK(epsilon(D::x(2, 1)) == D::dbar(2, 1));
  CHECK(epsilon(D::x(2, 1)) == D::d(2, 1));
  // eps(D2) = x2 phi'_2^{-1}(h + e2)
  D e = epsilon(D::dbar(2, 2));
  CHECK(e == D::monomial(2, mi({0, 1}), mi({0, 0}), R("h21/(h21+1)", 2)));
  CHECK(epsilon(e) == D::dbar(2, 2));
  CHECK(epsilon(GDiffElement::x(3, 1)) == GDiffElement::dbar(3, 1));
}

TEST_CASE("plain and rescaled derivative bases") {
  using D = DiffElement;
  CHECK(D::d(2, 1) == D::dbar(2, 1));
  CHECK(D::d(2, 2) == D::dbar(2, 2) * R("h21/(h21-1)", 2));
  auto p = from_dbar(D::dbar(2, 2));
  CHECK(p.terms.at({mi({0, 0}), mi({0, 1})}) == R("(h21-1)/h21", 2));
  gen::Rng r(3);
  for (int t = 0; t < 40; ++t) {
    int n = r.uniform(1, 4);
    auto u = gen::element<Parity::even>(r, n, 3, 4);
    CHECK(to_dbar(from_dbar(u)) == u);
    auto g = gen::element<Parity::odd>(r, n, 3, 4);
    CHECK(to_dbar(from_dbar(g)) == g);
  }
}

TEST_CASE("hc_project") {
  using D = DiffElement;
  CHECK(hc_project(D::monomial(1, mi({1}), mi({1}))).is_zero());
  CHECK(hc_project(diamond_mul(D::dbar(1, 1), D::x(1, 1))) == RatFunc(1));
  RatFunc f = R("(h12+3)/h23", 3);
  CHECK(hc_project(D::scalar(3, f)) == f);
}

TEST_CASE("commutation of powers of even generators") {
  using D = DiffElement;
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int a = 1; a <= 3; ++a) {
          for (int b = 1; b <= 3; ++b) {
            D lhs = diamond_mul(power(D::x(n, i), a), power(D::x(n, j), b));
            D ordered = diamond_mul(power(D::x(n, j), b), power(D::x(n, i), a));
            RatFunc t = RatFunc::h(i, j);
            RatFunc c = pochhammer(t + RatFunc(1), a, Direction::up) /
                        pochhammer(t - RatFunc(b - 1), a, Direction::up);
            CHECK(lhs == ordered * c);
          }
        }
      }
    }
  }
}

TEST_CASE("descending products are already normal") {
  gen::Rng r(17);
  for (int t = 0; t < 60; ++t) {
    int n = r.uniform(1, 5);
    std::vector<int> idx;
    int len = r.uniform(0, 5);
    for (int k = 0; k < len; ++k) idx.push_back(r.uniform(1, n));
    std::sort(idx.rbegin(), idx.rend());
    DiffElement p = DiffElement::unit(n);
    MultiIndex a(n);
    for (int i : idx) {
      p = diamond_mul(p, DiffElement::x(n, i));
      a.add(i - 1, 1);
    }
    CHECK(p == DiffElement::monomial(n, a, MultiIndex(n)));
    // strictly descending odd words
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    GDiffElement g = GDiffElement::unit(n);
    MultiIndex ga(n);
    for (int i : idx) {
      g = diamond_mul(g, GDiffElement::x(n, i));
      ga.add(i - 1, 1);
    }
    CHECK(g == GDiffElement::monomial(n, ga, MultiIndex(n)));
  }
}

TEST_CASE_TEMPLATE("rewriting agrees with memoized multiplication", T, std::integral_constant<Parity, Parity::even>,
                   std::integral_constant<Parity, Parity::odd>) {
  constexpr Parity P = T::value;
  gen::Rng r(P == Parity::even ? 41 : 43);
  for (int t = 0; t < 80; ++t) {
    int n = r.uniform(1, 4);
    auto w = random_word(r, n, r.uniform(0, 6));
    CHECK(normal_order<P>(n, w) == product_of_word<P>(n, w));
  }
}

TEST_CASE_TEMPLATE("rewriting agrees with multiplication on all short words", T,
                   std::integral_constant<Parity, Parity::even>, std::integral_constant<Parity, Parity::odd>) {
  constexpr Parity P = T::value;
  for (int n = 2; n <= 3; ++n) {
    std::vector<Letter> gens;
    for (int i = 1; i <= n; ++i) {
      gens.push_back(Letter::gen(Letter::Kind::x, i));
      gens.push_back(Letter::gen(Letter::Kind::dbar, i));
    }
    const int g = int(gens.size());
    for (int len = 1; len <= 3; ++len) {
      int total = 1;
      for (int k = 0; k < len; ++k) total *= g;
      for (int code = 0; code < total; ++code) {
        std::vector<Letter> w;
        for (int k = 0, c = code; k < len; ++k, c /= g) w.push_back(gens[c % g]);
        // right-nested product exercises multi-letter right factors
        Element<P> r = Element<P>::unit(n);
        for (int k = len - 1; k >= 0; --k) r = diamond_mul(product_of_word<P>(n, {w[k]}), r);
        CHECK(normal_order<P>(n, w) == r);
      }
    }
  }
}

TEST_CASE_TEMPLATE("property: associativity, unit, grading, linearity", T,
                   std::integral_constant<Parity, Parity::even>, std::integral_constant<Parity, Parity::odd>) {
  constexpr Parity P = T::value;
  gen::Rng r(P == Parity::even ? 1001 : 1002);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 200; ++t) {
      auto u = gen::element<P>(r, n, 2, 3);
      auto v = gen::element<P>(r, n, 2, 3);
      auto w = gen::element<P>(r, n, 1, 3);
      CHECK(diamond_mul(diamond_mul(u, v), w) == diamond_mul(u, diamond_mul(v, w)));
      if (t % 10 == 0) {
        auto one = Element<P>::unit(n);
        CHECK(diamond_mul(one, u) == u);
        CHECK(diamond_mul(u, one) == u);
        RatFunc f = gen::root_ratfunc(r, n);
        CHECK(diamond_mul(u, v * f) == diamond_mul(u, v) * f);
        for (const auto& [k1, c1] : u.terms()) {
          for (const auto& [k2, c2] : v.terms()) {
            auto p = diamond_mul(Element<P>::monomial(n, k1.a, k1.b), Element<P>::monomial(n, k2.a, k2.b));
            CHECK(homogeneous(p, weight_sum<P>(k1, k2)));
          }
        }
      }
    }
  }
}

TEST_CASE_TEMPLATE("property: epsilon is an involutive anti-automorphism", T,
                   std::integral_constant<Parity, Parity::even>, std::integral_constant<Parity, Parity::odd>) {
  constexpr Parity P = T::value;
  gen::Rng r(P == Parity::even ? 77 : 78);
  for (int t = 0; t < 50; ++t) {
    int n = r.uniform(1, 4);
    auto u = gen::element<P>(r, n, 3, 4);
    auto v = gen::element<P>(r, n, 2, 2);
    CHECK(epsilon(epsilon(u)) == u);
    CHECK(epsilon(diamond_mul(u, v)) == diamond_mul(epsilon(v), epsilon(u)));
    // weight negation
    for (const auto& [k, c] : u.terms()) {
      Shift w = weight_of(k.a, k.b);
      for (auto& x : w) x = -x;
      CHECK(homogeneous(epsilon(Element<P>::monomial(n, k.a, k.b)), w));
    }
  }
}

TEST_CASE("odd epsilon is an involution on all basis words") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : binary_indices(n)) {
      for (const auto& b : binary_indices(n)) {
        auto m = GDiffElement::monomial(n, a, b);
        CHECK(epsilon(epsilon(m)) == m);
      }
    }
  }
}

TEST_CASE("element text round trip and errors") {
  gen::Rng r(8);
  for (int t = 0; t < 40; ++t) {
    int n = r.uniform(1, 3);
    auto u = gen::element<Parity::even>(r, n, 3, 3);
    CHECK(E<Parity::even>(u.to_string().c_str(), n) == u);
    auto g = gen::element<Parity::odd>(r, n, 3, 3);
    CHECK(E<Parity::odd>(g.to_string().c_str(), n) == g);
  }
  CHECK(E<Parity::even>("x1^2*x3*D2*((h12+1)/h12)", 3).terms().size() == 1);
  CHECK(E<Parity::even>("x2*x1*D1*D2", 2).to_string() == "x2*x1*D1*D2");
  CHECK_THROWS_AS(E<Parity::even>("x4", 3), ParseError);
  CHECK_THROWS_AS(E<Parity::odd>("z1^2", 2), ParseError);
  CHECK_THROWS_AS(E<Parity::even>("x1/x2", 2), ParseError);
  CHECK_THROWS_AS(E<Parity::odd>("x1", 2), ParseError);
}

TEST_CASE("index enumeration") {
  CHECK(multi_indices(2, 2) == std::vector<MultiIndex>{mi({2, 0}), mi({1, 1}), mi({0, 2})});
  CHECK(multi_indices(3, 4).size() == 15);
  CHECK(binary_indices(3).size() == 8);
}
