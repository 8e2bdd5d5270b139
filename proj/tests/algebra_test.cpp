#include <doctest.h>

#include "doubler/algebra.hpp"
#include "test_support.hpp"

using namespace test;
using doubler::ErrorCode;
using doubler::SplitMix64;

namespace {

const std::vector<TowerPtr>& sample_towers() {
  static const std::vector<TowerPtr> towers = [] {
    std::vector<TowerPtr> out;
    for (std::size_t depth = 0; depth <= 5; ++depth) {
      for (long d : {-1L, -2L}) {
        out.push_back(cd(d, depth));
        out.push_back(cs(d, depth));
      }
    }
    out.push_back(tower("cd:3,cd:-2,cd:0"));
    out.push_back(tower("cd:-2,cs:-3,cd:-1/2,cs:-5"));
    return out;
  }();
  return towers;
}

}  // namespace

TEST_CASE("elements and linear operations") {
  const auto t1 = cd(-1, 1);
  const auto t2 = cd(-1, 2);
  CHECK_NOTHROW(elem(t1, {Rational(3, 5), Rational(4, 5)}));
  CHECK(code_of([&] { (void)elem(t2, {1, 2, 3}); }) == ErrorCode::DimensionMismatch);

  const Element scalar = elem(std::make_shared<const TowerSpec>(), {7});
  CHECK(scalar.dim() == 1);
  CHECK(doubler::conjugate(scalar) == scalar);
  CHECK(doubler::mul(scalar, scalar).coord(1) == Rational(49));

  const Element x = elem(t1, {Rational(1, 2), 1});
  CHECK(x + Element::zero(t1) == x);
  CHECK(Rational(2) * x == elem(t1, {1, 2}));
  CHECK(x - x == Element::zero(t1));
  CHECK(-x == elem(t1, {Rational(-1, 2), -1}));

  const Element other = elem(cs(-1, 1), {Rational(1, 2), 1});
  CHECK(code_of([&] { (void)(x + other); }) == ErrorCode::TowerMismatch);
  CHECK(code_of([&] { (void)doubler::mul(x, other); }) == ErrorCode::TowerMismatch);
  // Equal tower values in different objects are the same tower.
  CHECK(x + elem(cd(-1, 1), {0, 1}) == elem(t1, {Rational(1, 2), 2}));
}

TEST_CASE("basis elements") {
  const auto t = cd(-1, 2);
  CHECK(code_of([&] { (void)Element::basis(t, 0); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { (void)Element::basis(t, 5); }) == ErrorCode::IndexOutOfRange);
  CHECK(doubler::trace(Element::basis(t, 2)) == Rational(0));
  for (const auto& tw : {cd(-2, 1), cs(-3, 1), tower("cd:5")}) {
    const Element e2 = Element::basis(tw, 2);
    CHECK(doubler::mul(e2, e2) == tw->level(1).d * Element::basis(tw, 1));
  }
}

TEST_CASE("conjugation") {
  const auto t = cd(-1, 2);
  CHECK(doubler::conjugate(elem(t, {1, 2, 3, 4})) == elem(t, {1, -2, -3, -4}));
  SplitMix64 rng(11);
  for (const auto& tw : sample_towers()) {
    const Element x = doubler::random_element(tw, rng, 4);
    const Element y = doubler::random_element(tw, rng, 4);
    CHECK(doubler::conjugate(doubler::conjugate(x)) == x);
    CHECK(doubler::conjugate(x + Rational(3) * y) ==
          doubler::conjugate(x) + Rational(3) * doubler::conjugate(y));
    CHECK((doubler::conjugate(x) == x) == x.is_scalar());
  }
}

TEST_CASE("quaternion-like products") {
  const auto t = cd(-1, 2);
  const Element e1 = Element::basis(t, 1), e2 = Element::basis(t, 2), e3 = Element::basis(t, 3),
                e4 = Element::basis(t, 4);
  CHECK(e3 * e2 == e4);
  CHECK(e2 * e3 == -e4);
  CHECK(e2 * e2 == -e1);
  CHECK(e3 * e3 == -e1);
  CHECK(e4 * e4 == -e1);
}

TEST_CASE("products agree with the nested-pair oracle") {
  SplitMix64 rng(2024);
  for (const auto& tw : sample_towers()) {
    CAPTURE(tw->to_string());
    const auto levels = oracle_levels(*tw);
    for (int trial = 0; trial < 5; ++trial) {
      const Element x = doubler::random_element(tw, rng, 4);
      const Element y = doubler::random_element(tw, rng, 4);
      CHECK(coords_of(doubler::mul(x, y)) ==
            oracle::mul_flat(coords_of(x), coords_of(y), levels));
    }
  }
}

TEST_CASE("Conway-Smith b = 0 branch") {
  // x = (a, 0) multiplies as (ac, conj(a) d).
  const auto t = cs(-1, 3);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> xc = coords_of(doubler::random_element(t, rng, 4));
    for (std::size_t i = 4; i < 8; ++i) xc[i] = 0;
    const Element x = elem(t, xc);
    const Element y = doubler::random_element(t, rng, 4);
    CHECK(coords_of(x * y) == oracle::mul_flat(xc, coords_of(y), oracle_levels(*t)));
  }
}

TEST_CASE("identity element") {
  SplitMix64 rng(3);
  for (const auto& tw : sample_towers()) {
    const Element one = Element::basis(tw, 1);
    const Element x = doubler::random_element(tw, rng, 4);
    CHECK(one * x == x);
    CHECK(x * one == x);
  }
}

TEST_CASE("depth-1 Conway-Smith equals Cayley-Dickson") {
  SplitMix64 rng(9);
  for (long d : {-1L, -2L, -7L}) {
    const auto a = cd(d, 1);
    const auto b = cs(d, 1);
    for (int trial = 0; trial < 50; ++trial) {
      const Element x = doubler::random_element(a, rng, 6);
      const Element y = doubler::random_element(a, rng, 6);
      CHECK(coords_of(x * y) == coords_of(elem(b, coords_of(x)) * elem(b, coords_of(y))));
    }
  }
}

TEST_CASE("trace") {
  const auto t = cd(-1, 1);
  CHECK(doubler::trace(Element::basis(t, 1)) == Rational(2));
  CHECK(doubler::trace(elem(t, {Rational(3, 5), Rational(4, 5)})) == Rational(6, 5));
  const auto t3 = cs(-1, 3);
  for (std::size_t i = 2; i <= 8; ++i) CHECK(doubler::trace(Element::basis(t3, i)) == Rational(0));
}

TEST_CASE("norm by form and by multiplication") {
  CHECK(doubler::norm_form(Element::basis(cd(-1, 2), 1)) == Rational(1));
  CHECK(doubler::norm_via_mul(Element::basis(cs(-1, 2), 1)) == Rational(1));
  CHECK(doubler::norm_form(elem(cd(-1, 1), {Rational(3, 5), Rational(4, 5)})) == Rational(1));
  CHECK(doubler::norm_form(elem(tower("cd:-2,cd:-3"), {1, 1, 1, 1})) == Rational(12));

  SplitMix64 rng(77);
  for (const auto& tw : sample_towers()) {
    CAPTURE(tw->to_string());
    for (int trial = 0; trial < 10; ++trial) {
      const Element x = doubler::random_element(tw, rng, 4);
      const Rational n = doubler::norm_form(x);
      CHECK(doubler::norm_via_mul(x) == n);
      CHECK(doubler::norm_form(doubler::conjugate(x)) == n);
      CHECK((x + doubler::conjugate(x)).is_scalar());
      // x x = t(x) x - n(x)
      CHECK(x * x == doubler::trace(x) * x - Element::scalar(tw, n));
      if (tw->all_negative() && !x.is_zero()) CHECK(n.sign() > 0);
    }
  }
}

TEST_CASE("inverse") {
  const auto t = cd(-1, 1);
  CHECK(doubler::inverse(Element::basis(t, 1)) == Element::basis(t, 1));
  CHECK(doubler::inverse(elem(t, {Rational(3, 5), Rational(4, 5)})) ==
        elem(t, {Rational(3, 5), Rational(-4, 5)}));
  CHECK(code_of([] { (void)doubler::inverse(elem(tower("cd:1"), {1, 1})); }) ==
        ErrorCode::NotInvertible);
  CHECK(code_of([] { (void)doubler::inverse(Element::zero(cs(-1, 2))); }) ==
        ErrorCode::NotInvertible);

  SplitMix64 rng(41);
  for (const auto& tw : {cs(-1, 4), cs(-2, 5), cd(-1, 3), tower("cd:2,cd:-3,cd:5")}) {
    const Element one = Element::basis(tw, 1);
    for (int trial = 0; trial < 5; ++trial) {
      const Element x = doubler::random_element(tw, rng, 4);
      if (doubler::norm_form(x).is_zero()) continue;
      const Element inv = doubler::inverse(x);
      CHECK(x * inv == one);
      CHECK(inv * x == one);
    }
  }
}

TEST_CASE("Conway-Smith product guards isotropic lower elements") {
  // The lower level is a split Cayley-Dickson plane, so b = (1, 1) has norm 0.
  const auto t = tower("cd:1,cs:-1");
  const Element x = elem(t, {0, 0, 1, 1});
  CHECK(code_of([&] { (void)(x * x); }) == ErrorCode::NotInvertible);
}

TEST_CASE("imaginary elements") {
  const auto t = cd(-1, 2);
  CHECK(doubler::is_imaginary(Element::basis(t, 2)));
  CHECK_FALSE(doubler::is_imaginary(Element::basis(t, 1)));
  CHECK(doubler::is_imaginary(Element::zero(t)));
}

TEST_CASE("sedenions have zero divisors, CS 16-dimensional elements do not") {
  const auto sed = cd(-1, 4);
  // (e_2 + e_11)(e_5 - e_16) = 0, located by the grid search in checker_test.
  const Element x = Element::basis(sed, 2) + Element::basis(sed, 11);
  const Element y = Element::basis(sed, 5) - Element::basis(sed, 16);
  CHECK((x * y).is_zero());
  const auto cs4 = cs(-1, 4);
  const Element xs = elem(cs4, coords_of(x));
  const Element ys = elem(cs4, coords_of(y));
  CHECK(doubler::norm_form(xs * ys) == Rational(4));
}
