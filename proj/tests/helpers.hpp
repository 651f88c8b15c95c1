#pragma once

#include "nilp/algebra.hpp"
#include "nilp/generate.hpp"

#include <initializer_list>

namespace nilp::test {

inline Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Matrix m(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    rs.push_back(v(r));
    cols = r.size();
  }
  return Matrix::from_rows(rs, cols);
}

/// Coordinates of a named basis element.
inline Vec e(const Algebra& alg, const std::string& name) { return unit_vec(alg.dim(), *alg.index_of(name)); }

inline Subspace span_of(const Algebra& alg, std::initializer_list<const char*> names) {
  std::vector<Vec> vs;
  for (auto n : names) vs.push_back(e(alg, n));
  return span(vs, alg.dim());
}

/// Random subspace of Q^n with at most `gens` generators.
inline Subspace random_subspace(Rng& rng, std::size_t n, std::size_t gens) {
  std::vector<Vec> vs;
  const std::size_t k = rng.below(gens + 1);
  for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vec(rng, n, 0.5));
  return span(vs, n);
}

}  // namespace nilp::test
