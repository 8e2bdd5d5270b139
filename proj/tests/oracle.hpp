#pragma once

// Test-only reference arithmetic. Elements are nested pairs fixed at compile
// time and the products are written straight from the pair formulas, with the
// Conway-Smith inverse taken from conj(b) b rather than from the diagonal
// norm form. Nothing here calls into the library's algebra code.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "doubler/rational.hpp"

namespace oracle {

using doubler::Rational;

struct Level {
  bool conway_smith;
  Rational d;
};

template <int N>
struct Pair {
  Pair<N - 1> a, b;
};

template <>
struct Pair<0> {
  Rational v;
};

template <int N>
Pair<N> conj(const Pair<N>& x) {
  if constexpr (N == 0) {
    return x;
  } else {
    return {conj(x.a), neg(x.b)};
  }
}

template <int N>
Pair<N> neg(const Pair<N>& x) {
  if constexpr (N == 0) {
    return {-x.v};
  } else {
    return {neg(x.a), neg(x.b)};
  }
}

template <int N>
Pair<N> add(const Pair<N>& x, const Pair<N>& y) {
  if constexpr (N == 0) {
    return {x.v + y.v};
  } else {
    return {add(x.a, y.a), add(x.b, y.b)};
  }
}

template <int N>
Pair<N> scale(const Rational& s, const Pair<N>& x) {
  if constexpr (N == 0) {
    return {s * x.v};
  } else {
    return {scale(s, x.a), scale(s, x.b)};
  }
}

template <int N>
bool is_zero(const Pair<N>& x) {
  if constexpr (N == 0) {
    return x.v.is_zero();
  } else {
    return is_zero(x.a) && is_zero(x.b);
  }
}

template <int N>
const Rational& real_part(const Pair<N>& x) {
  if constexpr (N == 0) {
    return x.v;
  } else {
    return real_part(x.a);
  }
}

// levels[0] is level 1.
template <int N>
Pair<N> mul(const Pair<N>& x, const Pair<N>& y, const std::vector<Level>& levels) {
  if constexpr (N == 0) {
    return {x.v * y.v};
  } else {
    const Level& L = levels[N - 1];
    const auto& a = x.a;
    const auto& b = x.b;
    const auto& c = y.a;
    const auto& d = y.b;
    if (!L.conway_smith) {
      return {add(mul(a, c, levels), scale(L.d, mul(d, conj(b), levels))),
              add(mul(conj(a), d, levels), mul(c, b, levels))};
    }
    if (is_zero(b)) return {mul(a, c, levels), mul(conj(a), d, levels)};
    const Rational nb = real_part(mul(conj(b), b, levels));
    const auto binv = scale(nb.inverse(), conj(b));
    auto first = add(mul(a, c, levels), scale(L.d, conj(mul(b, conj(d), levels))));
    auto t1 = conj(mul(conj(b), conj(c), levels));
    auto t2 = conj(mul(conj(b), conj(mul(conj(a), conj(mul(conj(binv), conj(d), levels)), levels)),
                       levels));
    return {first, add(t1, t2)};
  }
}

template <int N>
void flatten(const Pair<N>& x, std::vector<Rational>& out) {
  if constexpr (N == 0) {
    out.push_back(x.v);
  } else {
    flatten(x.a, out);
    flatten(x.b, out);
  }
}

template <int N>
Pair<N> build(const std::vector<Rational>& in, std::size_t& pos) {
  if constexpr (N == 0) {
    return {in[pos++]};
  } else {
    auto a = build<N - 1>(in, pos);
    auto b = build<N - 1>(in, pos);
    return {a, b};
  }
}

template <int N>
std::vector<Rational> mul_flat_n(const std::vector<Rational>& x, const std::vector<Rational>& y,
                                 const std::vector<Level>& levels) {
  std::size_t px = 0, py = 0;
  const auto p = mul(build<N>(x, px), build<N>(y, py), levels);
  std::vector<Rational> out;
  flatten(p, out);
  return out;
}

/// Product of flat coordinate vectors, depth = levels.size() <= 5.
inline std::vector<Rational> mul_flat(const std::vector<Rational>& x,
                                      const std::vector<Rational>& y,
                                      const std::vector<Level>& levels) {
  switch (levels.size()) {
    case 0: return mul_flat_n<0>(x, y, levels);
    case 1: return mul_flat_n<1>(x, y, levels);
    case 2: return mul_flat_n<2>(x, y, levels);
    case 3: return mul_flat_n<3>(x, y, levels);
    case 4: return mul_flat_n<4>(x, y, levels);
    case 5: return mul_flat_n<5>(x, y, levels);
    default: throw std::out_of_range("oracle supports depth <= 5");
  }
}

/// Closed forms written out term by term for depths 1..3, with
/// per-level constants C = {C1, C2, C3}. Returns the norm-one point for seeds s.
inline std::vector<Rational> displayed_parametrization(const std::vector<Rational>& C,
                                                       const std::vector<Rational>& s) {
  std::vector<Rational> w;
  if (s.size() == 2) {
    w = {1, C[0]};
  } else if (s.size() == 4) {
    w = {1, C[0], C[1], C[0] * C[1]};
  } else if (s.size() == 8) {
    w = {1, C[0], C[1], C[0] * C[1], C[2], C[0] * C[2], C[1] * C[2], C[0] * C[1] * C[2]};
  } else {
    throw std::out_of_range("displayed formulas cover depths 1..3");
  }
  Rational num = s[0] * s[0], den = s[0] * s[0];
  for (std::size_t i = 1; i < s.size(); ++i) {
    num -= w[i] * s[i] * s[i];
    den += w[i] * s[i] * s[i];
  }
  std::vector<Rational> x{num / den};
  for (std::size_t i = 1; i < s.size(); ++i) x.push_back(Rational{2} * s[0] * s[i] / den);
  return x;
}

}  // namespace oracle
