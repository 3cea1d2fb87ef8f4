#include <doctest.h>

#include "gen.hpp"
#include "redalg/zhelobenko.hpp"

using namespace redalg;

namespace {

RatFunc R(const char* s, int n) { return parse_ratfunc(s, n); }
MultiIndex mi(std::initializer_list<int> v) { return MultiIndex(v); }

template <Parity P>
std::vector<Element<P>> generators(int n) {
  std::vector<Element<P>> g;
  for (int i = 1; i <= n; ++i) {
    g.push_back(Element<P>::x(n, i));
    g.push_back(Element<P>::dbar(n, i));
    g.push_back(Element<P>::scalar(n, RatFunc::h(i)));
  }
  return g;
}

template <Parity P>
Element<P> from_module(const PolyModuleElement<P>& p) {
  Element<P> e(p.n());
  for (const auto& [nu, f] : p.terms()) e.add_term({nu, MultiIndex(p.n())}, f);
  return e;
}

template <Parity P>
PolyModuleElement<P> to_module(const Element<P>& e) {
  PolyModuleElement<P> p(e.n());
  for (const auto& [k, f] : e.terms()) {
    REQUIRE(k.b.is_zero());
    p.add_term(k.a, f);
  }
  return p;
}

template <Parity P>
PolyModuleElement<P> random_module(gen::Rng& r, int n, int terms, int deg) {
  PolyModuleElement<P> p(n);
  for (int t = 0; t < terms; ++t) {
    MultiIndex nu(n);
    int d = r.uniform(0, deg);
    for (int k = 0; k < d; ++k) {
      int i = r.uniform(0, n - 1);
      if (P == Parity::even || nu[i] == 0) nu.add(i, 1);
    }
    p.add_term(nu, gen::root_ratfunc(r, n));
  }
  return p;
}

std::vector<int> swap_of(int i, int n) {
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  std::swap(p[i - 1], p[i]);
  return p;
}

using Even = std::integral_constant<Parity, Parity::even>;
using Odd = std::integral_constant<Parity, Parity::odd>;

}  // namespace

TEST_CASE("Zhelobenko images of generators") {
  using E = DiffElement;
  CHECK(qcheck(1, E::x(2, 1)) == E::x(2, 2) * R("h12/(h12-1)", 2));
  CHECK(qcheck(1, E::x(3, 3)) == E::x(3, 3));
  CHECK(qcheck(1, E::x(2, 2)) == E::x(2, 1));
  CHECK(qcheck(1, E::dbar(2, 1)) == left_scalar(R("(h12-1)/h12", 2), E::dbar(2, 2)));
  CHECK(qcheck(2, E::scalar(3, RatFunc::h(2))) == E::scalar(3, RatFunc::h(3)));
  CHECK(xicheck(1, E::x(2, 1)) == E::x(2, 2));
  CHECK_THROWS_AS(qcheck(2, E::x(2, 1)), std::out_of_range);
  CHECK_THROWS_AS(xicheck(0, E::x(2, 1)), std::out_of_range);
}

TEST_CASE("Zhelobenko action on gl2 monomials") {
  using E = DiffElement;
  const RatFunc t = RatFunc::h(1, 2);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      E u = diamond_mul(power(E::x(2, 2), a), power(E::x(2, 1), b));
      CHECK(u == E::monomial(2, mi({b, a}), MultiIndex(2)));
      RatFunc f = pochhammer(t, a + 1, Direction::up) / pochhammer(t - RatFunc(b), a + 1, Direction::up);
      CHECK(qcheck(1, u) == E::monomial(2, mi({a, b}), MultiIndex(2), f));
      RatFunc g = pochhammer(t + RatFunc(1), a, Direction::up) / pochhammer(t - RatFunc(b), a, Direction::up);
      CHECK(xicheck(1, u) == E::monomial(2, mi({a, b}), MultiIndex(2), g));
    }
  }
}

TEST_CASE("Zhelobenko transformation laws on monomials") {
  // q_i(X^nu) = X^{s_i nu} t^{up nu_{i+1}+1} / (t - nu_i)^{up nu_{i+1}+1}
  for (int n = 2; n <= 4; ++n) {
    for (int d = 0; d <= 3; ++d) {
      for (const auto& nu : multi_indices(n, d)) {
        for (int i = 1; i < n; ++i) {
          const RatFunc t = RatFunc::h(i, i + 1);
          MultiIndex s = nu;
          s.set(i - 1, nu[i]);
          s.set(i, nu[i - 1]);
          auto u = DiffElement::monomial(n, nu, MultiIndex(n));
          RatFunc f = pochhammer(t, nu[i] + 1, Direction::up) / pochhammer(t - RatFunc(nu[i - 1]), nu[i] + 1, Direction::up);
          CHECK(qcheck(i, u) == DiffElement::monomial(n, s, MultiIndex(n), f));
          RatFunc g = pochhammer(t + RatFunc(nu[i]), nu[i - 1] + 1, Direction::down) /
                      pochhammer(t, nu[i - 1] + 1, Direction::down);
          CHECK(xicheck(i, u) == DiffElement::monomial(n, s, MultiIndex(n), g));
        }
      }
    }
  }
}

TEST_CASE_TEMPLATE("Zhelobenko maps are homomorphisms on generator pairs", T, Even, Odd) {
  constexpr Parity P = T::value;
  for (int n = 2; n <= 3; ++n) {
    auto g = generators<P>(n);
    for (int i = 1; i < n; ++i) {
      for (const auto& u : g) {
        for (const auto& v : g) {
          auto uv = diamond_mul(u, v);
          CHECK(qcheck(i, uv) == diamond_mul(qcheck(i, u), qcheck(i, v)));
          CHECK(xicheck(i, uv) == diamond_mul(xicheck(i, u), xicheck(i, v)));
        }
      }
    }
  }
}

TEST_CASE_TEMPLATE("property: Zhelobenko maps on random elements", T, Even, Odd) {
  constexpr Parity P = T::value;
  gen::Rng r(P == Parity::even ? 71 : 72);
  for (int t = 0; t < 30; ++t) {
    int n = r.uniform(2, 3);
    int i = r.uniform(1, n - 1);
    auto u = gen::element<P>(r, n, 2, 2);
    auto v = gen::element<P>(r, n, 2, 2);
    CHECK(qcheck(i, diamond_mul(u, v)) == diamond_mul(qcheck(i, u), qcheck(i, v)));
    CHECK(xicheck(i, qcheck(i, u)) == u);
    CHECK(qcheck(i, xicheck(i, u)) == u);
    CHECK(qcheck(i, u + v) == qcheck(i, u) + qcheck(i, v));
    // squares are conjugation by h_{i,i+1}
    const RatFunc h = RatFunc::h(i, i + 1);
    CHECK(qcheck(i, qcheck(i, u)) == left_scalar(RatFunc(1) / h, u) * h);
  }
}

TEST_CASE_TEMPLATE("Zhelobenko inversion relation", T, Even, Odd) {
  constexpr Parity P = T::value;
  using E = Element<P>;
  CHECK(qcheck(1, qcheck(1, E::x(2, 1))) == E::x(2, 1) * R("h12/(h12+1)", 2));
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i < n; ++i) {
      const RatFunc h = RatFunc::h(i, i + 1);
      for (const auto& g : generators<P>(n)) CHECK(qcheck(i, qcheck(i, g)) == left_scalar(RatFunc(1) / h, g) * h);
    }
  }
}

TEST_CASE_TEMPLATE("Zhelobenko braid relations", T, Even, Odd) {
  constexpr Parity P = T::value;
  for (int n = 3; n <= 4; ++n) {
    auto g = generators<P>(n);
    for (int i = 1; i + 1 < n; ++i) {
      for (const auto& u : g) {
        CHECK(qcheck_word(WeylWord{{i, i + 1, i}}, u) == qcheck_word(WeylWord{{i + 1, i, i + 1}}, u));
        CHECK(xicheck_word(WeylWord{{i, i + 1, i}}, u) == xicheck_word(WeylWord{{i + 1, i, i + 1}}, u));
      }
    }
    if (n == 4) {
      for (const auto& u : g) CHECK(qcheck_word(WeylWord{{1, 3}}, u) == qcheck_word(WeylWord{{3, 1}}, u));
    }
  }
  // braid relation on a few products of degree two
  gen::Rng r(P == Parity::even ? 81 : 82);
  for (int t = 0; t < 5; ++t) {
    auto u = gen::element<P>(r, 3, 2, 2);
    CHECK(qcheck_word(WeylWord{{1, 2, 1}}, u) == qcheck_word(WeylWord{{2, 1, 2}}, u));
  }
}

TEST_CASE("longest word") {
  CHECK(WeylWord::longest(2).letters == std::vector<int>{1});
  CHECK(WeylWord::longest(3).letters == std::vector<int>{1, 2, 1});
  CHECK(WeylWord::longest(4).letters == std::vector<int>{1, 2, 1, 3, 2, 1});
  CHECK(WeylWord::longest(1).letters.empty());
  CHECK(weyl_permutation(WeylWord::longest(4), 4) == std::vector<int>{3, 2, 1, 0});
  CHECK(qcheck_w0(DiffElement::x(2, 1)) == qcheck(1, DiffElement::x(2, 1)));
  CHECK_THROWS_AS(weyl_permutation(WeylWord{{3}}, 3), std::out_of_range);
}

TEST_CASE_TEMPLATE("longest-element maps are mutually inverse", T, Even, Odd) {
  constexpr Parity P = T::value;
  for (int n = 2; n <= 3; ++n) {
    for (int d = 0; d <= 3; ++d) {
      for (const auto& a : multi_indices(n, d)) {
        for (int db = 0; db + d <= 3; ++db) {
          for (const auto& b : multi_indices(n, db)) {
            if (P == Parity::odd && (!a.is_binary() || !b.is_binary())) continue;
            auto u = Element<P>::monomial(n, a, b);
            CHECK(xicheck_w0(qcheck_w0(u)) == u);
            CHECK(qcheck_w0(xicheck_w0(u)) == u);
          }
        }
      }
    }
  }
}

TEST_CASE("closed form of the inverse longest-element map") {
  CHECK(xi_w0_closed(mi({1, 0})) == PolyModuleElement<Parity::even>::monomial(mi({0, 1})));
  CHECK(xi_w0_closed(mi({0, 1})) == PolyModuleElement<Parity::even>::monomial(mi({1, 0}), R("(h12+1)/h12", 2)));
  CHECK(xi_w0_closed(mi({0, 0, 0})) == PolyModuleElement<Parity::even>::vacuum(3));
  for (int n = 2; n <= 4; ++n) {
    for (int d = 0; d <= 3; ++d) {
      for (const auto& nu : multi_indices(n, d)) {
        auto img = xicheck_w0(DiffElement::monomial(n, nu, MultiIndex(n)));
        CHECK(to_module(img) == xi_w0_closed(nu));
      }
    }
  }
}

TEST_CASE("form through the Zhelobenko maps") {
  CHECK(form_via_zhelobenko<Parity::even>(mi({0, 1}), mi({0, 1})) == R("(h12-1)/h12", 2));
  CHECK(form_via_zhelobenko<Parity::odd>(mi({1, 1}), mi({1, 1})) == RatFunc(1));
  CHECK(form_via_zhelobenko<Parity::even>(mi({1, 0}), mi({0, 1})).is_zero());
  CHECK(form_via_zhelobenko<Parity::odd>(mi({0, 1, 1}), mi({1, 1, 0})).is_zero());
  for (int n = 2; n <= 3; ++n) {
    for (int d = 0; d <= 3; ++d) {
      for (const auto& nu : multi_indices(n, d)) {
        auto m = PolyModuleElement<Parity::even>::monomial(nu);
        CHECK(form_via_zhelobenko<Parity::even>(nu, nu) == contravariant_form(m, m));
      }
    }
    for (const auto& nu : binary_indices(n)) {
      auto m = PolyModuleElement<Parity::odd>::monomial(nu);
      CHECK(form_via_zhelobenko<Parity::odd>(nu, nu) == contravariant_form(m, m));
    }
  }
}

TEST_CASE_TEMPLATE("property: covariance of the form under Zhelobenko maps", T, Even, Odd) {
  constexpr Parity P = T::value;
  gen::Rng r(P == Parity::even ? 91 : 92);
  for (int t = 0; t < 25; ++t) {
    int n = r.uniform(2, 3);
    int c = r.uniform(1, n - 1);
    auto x = random_module<P>(r, n, 2, 3);
    auto y = random_module<P>(r, n, 2, 3);
    RatFunc lhs = contravariant_form(x, y).permuted(swap_of(c, n));
    auto xx = to_module(xicheck(c, from_module(x)));
    auto yy = to_module(qcheck(c, from_module(y)));
    CHECK(lhs == contravariant_form(xx, yy));
  }
}
