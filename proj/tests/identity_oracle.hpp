#pragma once

// Independent re-statement of the defining identities in terms of
// multiply() on arbitrary elements. Used as an oracle for check_identity.

#include "nilp/algebra.hpp"

namespace nilp::test {

inline bool identities_hold_at(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  const auto mul = [&](std::size_t p, const Vec& u, const Vec& w) { return multiply(a, p, u, w); };
  switch (a.type()) {
    case AlgebraType::lie:
      if (!is_zero(mul(0, x, x))) return false;
      [[fallthrough]];
    case AlgebraType::leibniz:
      return mul(0, x, mul(0, y, z)) == add(mul(0, mul(0, x, y), z), mul(0, y, mul(0, x, z)));
    case AlgebraType::commutative:
      if (mul(0, x, y) != mul(0, y, x)) return false;
      [[fallthrough]];
    case AlgebraType::associative:
      return mul(0, mul(0, x, y), z) == mul(0, x, mul(0, y, z));
    case AlgebraType::zinbiel:
      return mul(0, mul(0, x, y), z) == add(mul(0, x, mul(0, y, z)), mul(0, x, mul(0, z, y)));
    case AlgebraType::diassociative: {
      const std::size_t l = 0, r = 1;
      return mul(l, mul(l, x, y), z) == mul(l, x, mul(l, y, z)) &&
             mul(r, mul(r, x, y), z) == mul(r, x, mul(r, y, z)) &&
             mul(l, x, mul(l, y, z)) == mul(l, x, mul(r, y, z)) &&
             mul(l, mul(r, x, y), z) == mul(r, x, mul(l, y, z)) &&
             mul(r, mul(l, x, y), z) == mul(r, mul(r, x, y), z);
    }
    case AlgebraType::dendriform: {
      const std::size_t lt = 0, gt = 1;
      return mul(lt, mul(lt, x, y), z) == add(mul(lt, x, mul(lt, y, z)), mul(lt, x, mul(gt, y, z))) &&
             mul(lt, mul(gt, x, y), z) == mul(gt, x, mul(lt, y, z)) &&
             add(mul(gt, mul(lt, x, y), z), mul(gt, mul(gt, x, y), z)) == mul(gt, x, mul(gt, y, z));
    }
  }
  return false;
}

/// Evaluates every identity on every basis triple through multiply().
inline bool identities_hold_on_basis(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        if (!identities_hold_at(a, x, y, z)) return false;
        // pair axioms need x + y to see antisymmetry of the Lie bracket
        if (a.type() == AlgebraType::lie && !is_zero(multiply(a, 0, add(x, y), add(x, y)))) return false;
      }
  return true;
}

}  // namespace nilp::test
