#pragma once

#include "nilp/extension.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace nilp {

inline constexpr std::size_t kMaxAttempts = 10000;
inline constexpr double kDefaultDensity = 0.25;

/// Rejection sampling ran out of attempts; callers fall back to the corpus.
class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic source for the generators. The mapping from engine output
/// to integers and probabilities is fixed here so that a seed produces the
/// same algebra on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  /// Small nonzero coefficient from {±1, ±2}.
  Scalar coefficient();

 private:
  std::mt19937_64 engine_;
};

/// Random algebra of the type, nilpotent by construction: each basis
/// vector gets a grade in [1, max_grade] (non-decreasing along the basis)
/// and e_i * e_j may only involve basis vectors of grade >= g_i + g_j.
/// Candidates are rejection-sampled against the type's identities.
Algebra random_nilpotent_algebra(AlgebraType type, std::size_t dim, std::size_t max_grade, double density,
                                 std::uint64_t seed);

/// Random factor system over (A, B) whose extension algebra satisfies the
/// identities. Lift maps only raise the A-basis index. Nonzero factor
/// systems are preferred; the direct sum is returned when none is found.
ExtensionData random_extension(const Algebra& A, const Algebra& B, double density, std::uint64_t seed);

/// Two factor systems whose lifts differ by adjoint operators.
struct LiftPair {
  FactorSystem first;
  FactorSystem second;
};

/// first is extracted from ext. second perturbs the lift by random adjoint
/// operators (independently per side, or through a change of section) and
/// possibly the cocycle, keeping only valid factor systems. Pairs with
/// distinct lifts are preferred when A has nonzero products.
LiftPair random_adjoint_pair(const ExtensionData& ext, double density, std::uint64_t seed);

/// Random sparse element of an algebra of the given dimension.
Vec random_vec(Rng& rng, std::size_t dim, double density);

}  // namespace nilp
