#pragma once

#include "nilp/extension.hpp"
#include "nilp/report.hpp"

#include <optional>

namespace nilp {

/// A_0 = A, A_{k+1} = σ⁻¹(σ(A_k) L + L σ(A_k)), summed over every product
/// (the ◊ form for two-product types).
Chain a_sequence(const ExtensionData& ext);

/// B acting on A through a fixed lift.
struct GammaContext {
  Algebra A;
  Algebra B;
  Lift lift;
};

GammaContext gamma_context(const ExtensionData& ext);

/// Smallest lift-invariant ideal of A containing AN, NA and the lift
/// images of N. Throws CertifiedError if N is not B-invariant.
Subspace gamma_step(const GammaContext& ctx, const Subspace& N);

/// Γ_0 = A, Γ_{k+1} = Γ(Γ_k).
Chain gamma_sequence(const GammaContext& ctx);

/// nil_B A, or nullopt when the Γ chain stabilizes nonzero.
std::optional<std::size_t> b_nilpotency_class(const GammaContext& ctx);

/// C_{k+s} ⊆ σ(A_k) ⊆ C_k for all k, with s = nil B, and
/// L nilpotent iff some A_k = 0. hypothesis-unmet when B is not nilpotent.
TheoremReport verify_sandwich(const ExtensionData& ext);

/// A_k = Γ_k^B A term-wise, with Γ computed from the extracted lift.
TheoremReport verify_ak_equals_gamma(const ExtensionData& ext);

/// max(nil_B A, nil B) <= nil L <= nil_B A + nil B, and
/// L nilpotent iff B nilpotent and Γ_u^B A = 0 for some u >= 1.
TheoremReport verify_nil_bounds(const ExtensionData& ext);

/// Both extensions built from lifts of the same Φ are nilpotent or both
/// are not. hypothesis-unmet when the lifts do not differ by adjoints.
TheoremReport verify_main_theorem(const Algebra& A, const Algebra& B, const FactorSystem& fs1, const FactorSystem& fs2);

/// Γ chains for lift and lift + ad(witnesses) agree term-wise, and each
/// term is B-invariant under both lifts.
TheoremReport verify_gamma_lift_independence(const GammaContext& ctx, const AdjointWitnesses& witnesses);

/// extract -> rebuild -> reconstruction_iso.
TheoremReport verify_round_trip(const ExtensionData& ext);

/// C_n L ⊆ C_{n+1} along the lower central series.
TheoremReport verify_left_norming(const Algebra& alg);

/// Left, right and general ◊-series agree term-wise.
TheoremReport verify_series_equality(const Algebra& alg);

}  // namespace nilp
