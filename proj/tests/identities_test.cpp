#include <doctest.h>

#include <set>

#include "doubler/algebra.hpp"
#include "doubler/identities.hpp"
#include "test_support.hpp"

using namespace test;
using doubler::ErrorCode;
using doubler::IdentityId;
using doubler::SplitMix64;

TEST_CASE("catalog is closed and consistent") {
  const auto& catalog = doubler::identity_catalog();
  std::set<std::string_view> names;
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    CHECK(static_cast<std::size_t>(catalog[k].id) == k);
    CHECK(doubler::parse_identity(catalog[k].name) == catalog[k].id);
    CHECK(catalog[k].arity >= 1);
    names.insert(catalog[k].name);
  }
  CHECK(names.size() == doubler::kIdentityCount);
  CHECK(doubler::identity_info(IdentityId::FiveFoldIdentity).arity == 5);
  CHECK(doubler::identity_info(IdentityId::WeakRightDist).scalar_first);
  CHECK(code_of([] { (void)doubler::parse_identity("Associativity"); }) ==
        ErrorCode::UnknownIdentity);
}

TEST_CASE("t_project") {
  const auto t = cs(-1, 3);
  CHECK(doubler::t_project(Element::basis(t, 1)) == Rational(1));
  for (std::size_t i = 2; i <= 8; ++i) CHECK(doubler::t_project(Element::basis(t, i)) == Rational(0));
  SplitMix64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Element x = doubler::random_element(t, rng, 9);
    const Element y = doubler::random_element(t, rng, 9);
    CHECK(doubler::t_project(x) == doubler::trace(x) / Rational(2));
    CHECK(doubler::t_project(x + Rational(3) * y) ==
          doubler::t_project(x) + Rational(3) * doubler::t_project(y));
  }
  CHECK(doubler::t_project(Element::scalar(t, Rational(-7, 3))) == Rational(-7, 3));
}

TEST_CASE("arity and tower are enforced") {
  const auto t = cd(-1, 2);
  const std::vector<Element> one{Element::basis(t, 1)};
  CHECK(code_of([&] { (void)doubler::evaluate_identity(IdentityId::LeftAlt, one); }) ==
        ErrorCode::DimensionMismatch);
  const std::vector<Element> mixed{Element::basis(t, 1), Element::basis(cs(-1, 2), 1)};
  CHECK(code_of([&] { (void)doubler::evaluate_identity(IdentityId::LeftAlt, mixed); }) ==
        ErrorCode::TowerMismatch);
}

TEST_CASE("octonion associator is visible but left alternativity holds") {
  const auto t = cd(-1, 3);
  const Element e2 = Element::basis(t, 2), e3 = Element::basis(t, 3), e5 = Element::basis(t, 5);
  CHECK((e2 * e3) * e5 != e2 * (e3 * e5));
  const Element a = e2 + e3 + e5;
  const Element b = e3 - Rational(2) * e5 + Element::basis(t, 8);
  CHECK(doubler::evaluate_identity(IdentityId::LeftAlt, std::vector<Element>{a, b}).holds);
}

TEST_CASE("a failing evaluation exposes both sides") {
  const auto t = cd(-1, 4);
  const Element x = Element::basis(t, 2) + Element::basis(t, 11);
  const Element y = Element::basis(t, 5) + Element::basis(t, 16);
  const auto ev = doubler::evaluate_identity(IdentityId::NormMultiplicative,
                                             std::vector<Element>{x, y});
  CHECK_FALSE(ev.holds);
  CHECK(ev.lhs == Element::scalar(t, Rational(8)));
  CHECK(ev.rhs == Element::scalar(t, Rational(4)));
}

TEST_CASE("laws on small towers") {
  SplitMix64 rng(123);
  const std::vector<IdentityId> general{
      IdentityId::LeftAlt,          IdentityId::LeftAltNormForm,     IdentityId::LeftDist,
      IdentityId::RightDist,        IdentityId::WeakRightDist,       IdentityId::WeakLeftDist,
      IdentityId::Involution,       IdentityId::NormMultiplicative,  IdentityId::NormSymmetric,
      IdentityId::ConjRespectsSquares, IdentityId::NormRespectsSquares, IdentityId::TraceExpansion,
      IdentityId::QuadraticRelation, IdentityId::T_Cyclic,           IdentityId::T_ConjInvariant,
      IdentityId::T_ReversalIdentity, IdentityId::TwoSidedInverse};
  for (const auto& t : {cd(-1, 2), cd(3, 3), cs(-2, 3), tower("cd:-1/3,cd:-2")}) {
    for (auto id : general) {
      CAPTURE(t->to_string());
      CAPTURE(doubler::identity_name(id));
      const auto& info = doubler::identity_info(id);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Element> args;
        for (std::size_t k = 0; k < info.arity; ++k) {
          args.push_back(k == 0 && info.scalar_first
                             ? Element::scalar(t, doubler::random_scalar(rng, 4))
                             : doubler::random_element(t, rng, 4));
        }
        CHECK(doubler::evaluate_identity(id, args).holds);
      }
    }
  }
}

TEST_CASE("five-fold identity as printed fails over the complex plane") {
  // a = 1+i, b = i, c = d = e = 1: T of the left side is 1, of the right side -1.
  const auto t = cd(-1, 1);
  const Element one = Element::basis(t, 1);
  const Element i = Element::basis(t, 2);
  const auto ev = doubler::evaluate_identity(IdentityId::FiveFoldIdentity,
                                             std::vector<Element>{one + i, i, one, one, one});
  CHECK_FALSE(ev.holds);
  CHECK(ev.lhs == Element::scalar(t, Rational(1)));
  CHECK(ev.rhs == Element::scalar(t, Rational(-1)));
  // On k itself conjugation is trivial and both sides are abcde.
  const auto k = std::make_shared<const TowerSpec>();
  std::vector<Element> scalars;
  for (long v : {2L, -3L, 5L, 7L, 11L}) scalars.push_back(Element::scalar(k, Rational(v)));
  CHECK(doubler::evaluate_identity(IdentityId::FiveFoldIdentity, scalars).holds);
}

TEST_CASE("inverse identity is vacuous on isotropic elements") {
  const auto t = tower("cd:1");
  const auto ev = doubler::evaluate_identity(IdentityId::TwoSidedInverse,
                                             std::vector<Element>{elem(t, {1, 1})});
  CHECK(ev.holds);
}
