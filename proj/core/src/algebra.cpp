#include "doubler/algebra.hpp"

#include <algorithm>
#include <span>
#include <vector>

#include "doubler/error.hpp"

namespace doubler {

namespace {

using Coords = std::vector<Rational>;
using View = std::span<const Rational>;

Coords conj(View x) {
  Coords out(x.begin(), x.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

bool all_zero(View x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_zero(); });
}

// Norm form on the leading x.size() coordinates; bits above log2(size) are
// zero there, so the weights are the prefix of the full weight table.
Rational weighted_norm(View x, std::span<const Rational> weights) {
  Rational n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) n += weights[i] * x[i] * x[i];
  }
  return n;
}

Coords weight_table(const TowerSpec& tower) {
  Coords w(tower.dim(), Rational{1});
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = form_weight(tower, i + 1);
  return w;
}

class Multiplier {
 public:
  explicit Multiplier(const TowerSpec& tower) : tower_(tower), weights_(weight_table(tower)) {}

  Coords operator()(View x, View y) const { return mul(x, y, tower_.depth()); }

 private:
  Coords mul(View x, View y, std::size_t depth) const {
    if (depth == 0) return Coords{x[0] * y[0]};
    const std::size_t h = x.size() / 2;
    const View a = x.first(h), b = x.subspan(h), c = y.first(h), d = y.subspan(h);
    const LevelSpec& level = tower_.level(depth);
    const std::size_t lower = depth - 1;

    Coords out(x.size());
    if (level.kind == DoublingKind::CayleyDickson) {
      Coords first = mul(a, c, lower);
      const Coords db = mul(d, conj(b), lower);
      Coords second = mul(conj(a), d, lower);
      const Coords cb = mul(c, b, lower);
      for (std::size_t i = 0; i < h; ++i) {
        out[i] = first[i] + level.d * db[i];
        out[h + i] = second[i] + cb[i];
      }
      return out;
    }

    if (all_zero(b)) {
      const Coords first = mul(a, c, lower);
      const Coords second = mul(conj(a), d, lower);
      std::copy(first.begin(), first.end(), out.begin());
      std::copy(second.begin(), second.end(), out.begin() + static_cast<std::ptrdiff_t>(h));
      return out;
    }

    const Rational nb = weighted_norm(b, std::span<const Rational>(weights_).first(h));
    if (nb.is_zero()) {
      throw Error(ErrorCode::NotInvertible, "Conway-Smith product needs the inverse of an "
                                            "isotropic lower-level element");
    }
    // conj(b^-1) = conj(conj(b) / n(b)) = b / n(b)
    const Rational inv_nb = nb.inverse();
    Coords conj_binv(b.begin(), b.end());
    for (auto& r : conj_binv) r *= inv_nb;

    const Coords cb = conj(b);
    const Coords ac = mul(a, c, lower);
    const Coords b_cd = conj(mul(b, conj(d), lower));
    const Coords term1 = conj(mul(cb, conj(c), lower));
    const Coords inner = conj(mul(conj_binv, conj(d), lower));
    const Coords middle = conj(mul(conj(a), inner, lower));
    const Coords term2 = conj(mul(cb, middle, lower));
    for (std::size_t i = 0; i < h; ++i) {
      out[i] = ac[i] + level.d * b_cd[i];
      out[h + i] = term1[i] + term2[i];
    }
    return out;
  }

  const TowerSpec& tower_;
  Coords weights_;
};

void require_same_tower(const Element& x, const Element& y) {
  if (!x.same_tower(y)) {
    throw Error(ErrorCode::TowerMismatch, "operands belong to towers '" + x.tower().to_string() +
                                              "' and '" + y.tower().to_string() + "'");
  }
}

}  // namespace

Element conjugate(const Element& x) { return Element(x.tower_ptr(), conj(x.coords())); }

Element mul(const Element& x, const Element& y) {
  require_same_tower(x, y);
  const Multiplier m(x.tower());
  return Element(x.tower_ptr(), m(x.coords(), y.coords()));
}

Rational trace(const Element& x) {
  const Element t = x + conjugate(x);
  if (!t.is_scalar()) {
    throw Error(ErrorCode::NonScalarTrace, "x + conj(x) has a nonzero imaginary part");
  }
  return t.coord(1);
}

Rational norm_form(const Element& x) {
  const Coords w = weight_table(x.tower());
  return weighted_norm(x.coords(), w);
}

Rational norm_via_mul(const Element& x) {
  const Element n = mul(conjugate(x), x);
  if (!n.is_scalar()) {
    throw Error(ErrorCode::NonScalarNorm, "conj(x) x has a nonzero imaginary part");
  }
  return n.coord(1);
}

Element inverse(const Element& x) {
  const Rational n = norm_form(x);
  if (n.is_zero()) {
    throw Error(ErrorCode::NotInvertible, "element has norm zero");
  }
  return n.inverse() * conjugate(x);
}

bool is_imaginary(const Element& x) { return x.coord(1).is_zero(); }

}  // namespace doubler
