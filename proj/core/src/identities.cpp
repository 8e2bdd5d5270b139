#include "doubler/identities.hpp"

#include <string>

#include "doubler/algebra.hpp"
#include "doubler/error.hpp"
#include "doubler/random.hpp"

namespace doubler {

namespace {

constexpr std::array<IdentityInfo, kIdentityCount> kCatalog{{
    {IdentityId::LeftAlt, "LeftAlt", 2, false},
    {IdentityId::LeftAltNormForm, "LeftAltNormForm", 2, false},
    {IdentityId::LeftDist, "LeftDist", 3, false},
    {IdentityId::RightDist, "RightDist", 3, false},
    {IdentityId::WeakRightDist, "WeakRightDist", 3, true},
    {IdentityId::WeakLeftDist, "WeakLeftDist", 3, true},
    {IdentityId::Involution, "Involution", 2, false},
    {IdentityId::NormMultiplicative, "NormMultiplicative", 2, false},
    {IdentityId::NormSymmetric, "NormSymmetric", 1, false},
    {IdentityId::ConjRespectsSquares, "ConjRespectsSquares", 1, false},
    {IdentityId::NormRespectsSquares, "NormRespectsSquares", 1, false},
    {IdentityId::TraceExpansion, "TraceExpansion", 2, false},
    {IdentityId::QuadraticRelation, "QuadraticRelation", 1, false},
    {IdentityId::T_Cyclic, "T_Cyclic", 2, false},
    {IdentityId::T_ConjInvariant, "T_ConjInvariant", 1, false},
    {IdentityId::T_ReversalIdentity, "T_ReversalIdentity", 3, false},
    {IdentityId::FiveFoldIdentity, "FiveFoldIdentity", 5, false},
    {IdentityId::TwoSidedInverse, "TwoSidedInverse", 1, false},
}};

Evaluation compare(Element lhs, Element rhs) {
  const bool holds = lhs == rhs;
  return Evaluation{holds, std::move(lhs), std::move(rhs)};
}

Element as_scalar(const Element& like, const Rational& r) {
  return Element::scalar(like.tower_ptr(), r);
}

Evaluation compare_scalars(const Element& like, const Rational& lhs, const Rational& rhs) {
  return compare(as_scalar(like, lhs), as_scalar(like, rhs));
}

}  // namespace

const std::array<IdentityInfo, kIdentityCount>& identity_catalog() noexcept { return kCatalog; }

const IdentityInfo& identity_info(IdentityId id) noexcept {
  return kCatalog[static_cast<std::size_t>(id)];
}

std::string_view identity_name(IdentityId id) noexcept { return identity_info(id).name; }

IdentityId parse_identity(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
}

Rational t_project(const Element& x) { return x.coord(1); }

Evaluation evaluate_identity(IdentityId id, std::span<const Element> args) {
  const IdentityInfo& info = identity_info(id);
  if (args.size() != info.arity) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(info.name) + " takes " + std::to_string(info.arity) +
                    " arguments, got " + std::to_string(args.size()));
  }
  for (const auto& x : args) {
    if (!x.same_tower(args[0])) throw Error(ErrorCode::TowerMismatch, "arguments span towers");
  }

  switch (id) {
    case IdentityId::LeftAlt: {
      const Element& a = args[0];
      const Element& b = args[1];
      return compare(a * (a * b), (a * a) * b);
    }
    case IdentityId::LeftAltNormForm: {
      const Element& a = args[0];
      const Element& b = args[1];
      return compare(conjugate(a) * (a * b), norm_form(a) * b);
    }
    case IdentityId::LeftDist: {
      const Element &a = args[0], &b = args[1], &c = args[2];
      return compare(a * (b + c), a * b + a * c);
    }
    case IdentityId::RightDist: {
      const Element &a = args[0], &b = args[1], &c = args[2];
      return compare((a + b) * c, a * c + b * c);
    }
    case IdentityId::WeakRightDist: {
      const Element &s = args[0], &b = args[1], &c = args[2];
      return compare((s + b) * c, s * c + b * c);
    }
    case IdentityId::WeakLeftDist: {
      const Element &s = args[0], &b = args[1], &c = args[2];
      return compare(c * (s + b), c * s + c * b);
    }
    case IdentityId::Involution: {
      const Element& a = args[0];
      const Element& b = args[1];
      return compare(conjugate(a * b), conjugate(b) * conjugate(a));
    }
    case IdentityId::NormMultiplicative: {
      const Element& a = args[0];
      const Element& b = args[1];
      return compare_scalars(a, norm_form(a * b), norm_form(a) * norm_form(b));
    }
    case IdentityId::NormSymmetric: {
      const Element& a = args[0];
      return compare(a * conjugate(a), conjugate(a) * a);
    }
    case IdentityId::ConjRespectsSquares: {
      const Element& a = args[0];
      const Element ca = conjugate(a);
      return compare(conjugate(a * a), ca * ca);
    }
    case IdentityId::NormRespectsSquares: {
      const Element& a = args[0];
      const Rational n = norm_form(a);
      return compare_scalars(a, norm_form(a * a), n * n);
    }
    case IdentityId::TraceExpansion: {
      const Element& a = args[0];
      const Element& b = args[1];
      return compare(trace(a) * b, a * b + conjugate(a) * b);
    }
    case IdentityId::QuadraticRelation: {
      const Element& a = args[0];
      return compare(a * a, trace(a) * a - as_scalar(a, norm_form(a)));
    }
    case IdentityId::T_Cyclic: {
      const Element& a = args[0];
      const Element& b = args[1];
      return compare_scalars(a, t_project(a * b), t_project(b * a));
    }
    case IdentityId::T_ConjInvariant: {
      const Element& a = args[0];
      return compare_scalars(a, t_project(conjugate(a)), t_project(a));
    }
    case IdentityId::T_ReversalIdentity: {
      const Element &a = args[0], &b = args[1], &c = args[2];
      const Element lhs = conjugate(a * (b * c));
      const Element rhs = conjugate(c) * (conjugate(b) * conjugate(a));
      return compare_scalars(a, t_project(lhs), t_project(rhs));
    }
    case IdentityId::FiveFoldIdentity: {
      const Element &a = args[0], &b = args[1], &c = args[2], &d = args[3], &e = args[4];
      // conj(a conj(b conj(c conj(d conj(e)))))
      Element lhs = conjugate(d * conjugate(e));
      lhs = conjugate(c * lhs);
      lhs = conjugate(b * lhs);
      lhs = conjugate(a * lhs);
      // conj(conj(e) conj(conj(d) conj(conj(c) conj(conj(b) conj(a)))))
      Element rhs = conjugate(conjugate(b) * conjugate(a));
      rhs = conjugate(conjugate(c) * rhs);
      rhs = conjugate(conjugate(d) * rhs);
      rhs = conjugate(conjugate(e) * rhs);
      return compare_scalars(a, t_project(lhs), t_project(rhs));
    }
    case IdentityId::TwoSidedInverse: {
      const Element& a = args[0];
      const Element one = as_scalar(a, Rational{1});
      if (norm_form(a).is_zero()) return Evaluation{true, one, one};
      const Element inv = inverse(a);
      Element right = a * inv;
      if (right != one) return compare(std::move(right), one);
      return compare(inv * a, one);
    }
  }
  throw Error(ErrorCode::InternalError, "unhandled identity");
}

}  // namespace doubler
