#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "doubler/element.hpp"
#include "doubler/rational.hpp"

namespace doubler {

/// Closed catalog of the algebraic laws the checker can test.
enum class IdentityId {
  LeftAlt,              // a(ab) = (aa)b
  LeftAltNormForm,      // conj(a)(ab) = n(a) b
  LeftDist,             // a(b+c) = ab + ac
  RightDist,            // (a+b)c = ac + bc
  WeakRightDist,        // (s+b)c = sc + bc, s scalar
  WeakLeftDist,         // c(s+b) = cs + cb, s scalar
  Involution,           // conj(ab) = conj(b) conj(a)
  NormMultiplicative,   // n(ab) = n(a) n(b)
  NormSymmetric,        // a conj(a) = conj(a) a
  ConjRespectsSquares,  // conj(a^2) = conj(a)^2
  NormRespectsSquares,  // n(a^2) = n(a)^2
  TraceExpansion,       // t(a) b = ab + conj(a) b
  QuadraticRelation,    // a a = t(a) a - n(a)
  T_Cyclic,             // T(ab) = T(ba)
  T_ConjInvariant,      // T(conj(a)) = T(a)
  T_ReversalIdentity,   // T(conj(a(bc))) = T(conj(c)(conj(b) conj(a)))
  FiveFoldIdentity,     // five-variable nested form of the reversal identity
  TwoSidedInverse,      // a a^-1 = a^-1 a = 1 for a with n(a) != 0
};

inline constexpr std::size_t kIdentityCount = 18;

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  std::size_t arity;
  /// The first variable ranges over scalars (multiples of e_1).
  bool scalar_first;
};

const std::array<IdentityInfo, kIdentityCount>& identity_catalog() noexcept;
const IdentityInfo& identity_info(IdentityId id) noexcept;
std::string_view identity_name(IdentityId id) noexcept;
/// Throws UnknownIdentity.
IdentityId parse_identity(std::string_view name);

/// T: the scalar (first) coordinate. Linear and the identity on k.
Rational t_project(const Element& x);

struct Evaluation {
  bool holds;
  Element lhs;
  Element rhs;
};

/// Evaluates both sides exactly on `args` (size must equal the arity, all on
/// one tower). Scalar-valued sides are returned as multiples of e_1.
/// Throws DimensionMismatch on a wrong argument count; arithmetic errors
/// propagate.
Evaluation evaluate_identity(IdentityId id, std::span<const Element> args);

}  // namespace doubler
