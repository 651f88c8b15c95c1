#include "nilp/generate.hpp"

#include "nilp/errors.hpp"

#include <algorithm>
#include <optional>

namespace nilp {

namespace {

std::vector<std::string> default_names(std::size_t dim, const char* prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

}  // namespace

Scalar Rng::coefficient() {
  static const int kValues[] = {1, -1, 2, -2};
  return kValues[below(4)];
}

Vec random_vec(Rng& rng, std::size_t dim, double density) {
  Vec v(dim);
  for (auto& x : v)
    if (rng.chance(density)) x = rng.coefficient();
  return v;
}

Algebra random_nilpotent_algebra(AlgebraType type, std::size_t dim, std::size_t max_grade, double density,
                                 std::uint64_t seed) {
  if (dim == 0) throw DimensionError("random_nilpotent_algebra: dim must be at least 1");
  max_grade = std::max<std::size_t>(max_grade, 1);
  Rng rng(seed);
  const std::size_t ar = arity(type);
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::size_t> grade(dim);
    for (auto& g : grade) g = 1 + rng.below(max_grade);
    std::sort(grade.begin(), grade.end());
    // Sparser candidates are accepted more often; vary the density per attempt.
    const double d = density * (0.25 + 0.75 * rng.unit());

    const auto sample = [&](std::size_t i, std::size_t j) {
      Vec v(dim);
      for (std::size_t k = 0; k < dim; ++k)
        if (grade[k] >= grade[i] + grade[j] && rng.chance(d)) v[k] = rng.coefficient();
      return v;
    };

    std::vector<ProductTable> tables;
    for (std::size_t p = 0; p < ar; ++p) {
      ProductTable t(dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          if (type == AlgebraType::lie) {
            if (j <= i) continue;
            Vec v = sample(i, j);
            t.set(j, i, scaled(-1, v));
            t.set(i, j, std::move(v));
          } else if (type == AlgebraType::commutative) {
            if (j < i) continue;
            Vec v = sample(i, j);
            t.set(j, i, v);
            t.set(i, j, std::move(v));
          } else {
            t.set(i, j, sample(i, j));
          }
        }
      tables.push_back(std::move(t));
    }
    Algebra alg(type, default_names(dim, "e"), std::move(tables));
    if (satisfies_identities(alg)) return alg;
  }
  throw GenerationExhausted("no identity-satisfying algebra found within the attempt bound");
}

ExtensionData random_extension(const Algebra& A, const Algebra& B, double density, std::uint64_t seed) {
  if (A.type() != B.type()) throw DimensionError("random_extension: A and B must have the same type");
  Rng rng(seed);
  const std::size_t ar = A.arity(), da = A.dim(), db = B.dim();
  const AlgebraType type = A.type();
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    FactorSystem fs = FactorSystem::zero(ar, da, db);
    const double d = density * (0.25 + 0.75 * rng.unit());
    const bool with_lift = rng.below(4) != 0;
    const bool with_cocycle = rng.below(4) != 0;

    if (with_lift) {
      for (std::size_t s = 0; s < 2 * ar; ++s) {
        const bool mirrored = s == 1 && (type == AlgebraType::lie || type == AlgebraType::commutative);
        for (std::size_t i = 0; i < db; ++i) {
          Matrix& m = fs.lift.slots[s][i].matrix;
          if (mirrored) {
            // Lie: φ′ = −φ, commutative: φ′ = φ.
            const Matrix& left = fs.lift.slots[0][i].matrix;
            m = type == AlgebraType::lie ? Matrix(da, da) - left : left;
            continue;
          }
          for (std::size_t col = 0; col < da; ++col)
            for (std::size_t row = col + 1; row < da; ++row)
              if (rng.chance(d)) m(row, col) = rng.coefficient();
        }
      }
    }
    if (with_cocycle) {
      for (std::size_t p = 0; p < ar; ++p)
        for (std::size_t i = 0; i < db; ++i)
          for (std::size_t j = 0; j < db; ++j) {
            if (type == AlgebraType::lie) {
              if (j <= i) continue;
              Vec v = random_vec(rng, da, d);
              fs.f(p, j, i) = scaled(-1, v);
              fs.f(p, i, j) = std::move(v);
            } else if (type == AlgebraType::commutative) {
              if (j < i) continue;
              Vec v = random_vec(rng, da, d);
              fs.f(p, j, i) = v;
              fs.f(p, i, j) = std::move(v);
            } else {
              fs.f(p, i, j) = random_vec(rng, da, d);
            }
          }
    }
    // The direct sum is always valid; keep it as the fallback below.
    if (fs == FactorSystem::zero(ar, da, db)) continue;
    if (!satisfies_identities(assemble_extension_algebra(A, B, fs))) continue;
    return build_extension_algebra(A, B, fs).extension;
  }
  return build_extension_algebra(A, B, FactorSystem::zero(ar, da, db)).extension;
}

LiftPair random_adjoint_pair(const ExtensionData& ext, double density, std::uint64_t seed) {
  Rng rng(seed);
  const FactorSystem first = extract_factor_system(ext);
  const std::size_t ar = ext.A.arity(), da = ext.A.dim(), db = ext.B.dim();

  const auto perturb_cocycle = [&](FactorSystem fs) {
    // Optionally move the cocycle too; the lift stays the same.
    if (!rng.chance(0.5)) return fs;
    for (int tries = 0; tries < 20; ++tries) {
      FactorSystem cand = fs;
      for (auto& grid : cand.cocycles)
        for (auto& v : grid) v = add(v, random_vec(rng, da, density / 2));
      if (satisfies_identities(assemble_extension_algebra(ext.A, ext.B, cand))) return cand;
    }
    return fs;
  };

  // Adjoint operators vanish on an algebra with zero products, so every
  // perturbation reproduces the first lift there.
  bool abelian = true;
  for (std::size_t p = 0; p < ar; ++p) abelian = abelian && ext.A.table(p).is_zero();
  const std::size_t distinct_tries = abelian ? 1 : 64;

  std::optional<FactorSystem> same;
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    AdjointWitnesses w(2 * ar);
    for (auto& slot : w)
      for (std::size_t i = 0; i < db; ++i) slot.push_back(random_vec(rng, da, std::max(density, 0.5)));

    FactorSystem cand;
    if (rng.chance(0.5)) {
      // Independent adjoint perturbation per slot, kept if still a factor system.
      cand = first;
      cand.lift = add_adjoints(ext.A, first.lift, w);
      if (!satisfies_identities(assemble_extension_algebra(ext.A, ext.B, cand))) continue;
    } else {
      // Change of section T(i) -> T(i) + σ(m_i) always yields a valid factor
      // system whose lift differs by ad(m_i) on every side.
      Matrix section = ext.section;
      for (std::size_t i = 0; i < db; ++i) {
        const Vec shift = ext.sigma.apply(w[0][i]);
        for (std::size_t r = 0; r < section.rows(); ++r) section(r, i) += shift[r];
      }
      cand = extract_factor_system(make_extension(ext.L, ext.A, ext.sigma, section));
    }
    // Prefer a pair whose lifts actually differ.
    if (cand.lift != first.lift || attempt + 1 >= distinct_tries) return {first, perturb_cocycle(std::move(cand))};
    if (!same) same = std::move(cand);
  }
  if (same) return {first, perturb_cocycle(std::move(*same))};
  throw GenerationExhausted("no adjoint-perturbed factor system found within the attempt bound");
}

}  // namespace nilp
