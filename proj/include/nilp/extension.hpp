#pragma once

#include "nilp/algebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nilp {

/// Action maps of B on A. slots[s][i] is the map for B-basis element i.
///
/// Slot order: for one product (φ, φ′); for two products
/// (φ⊣, φ⊢, φ⊣′, φ⊢′). In general slot s acts from the left when
/// s < arity and from the right otherwise, through product s % arity.
struct Lift {
  std::vector<std::vector<LinMap>> slots;

  static Lift zero(std::size_t arity, std::size_t dim_a, std::size_t dim_b);

  std::size_t arity() const noexcept { return slots.size() / 2; }
  std::size_t dim_b() const noexcept { return slots.empty() ? 0 : slots.front().size(); }
  std::size_t dim_a() const noexcept;
  /// Every map of every slot, for closure computations.
  std::vector<LinMap> all_maps() const;

  friend bool operator==(const Lift&, const Lift&) = default;
};

inline bool slot_is_left(std::size_t slot, std::size_t arity) { return slot < arity; }
inline std::size_t slot_product(std::size_t slot, std::size_t arity) { return slot % arity; }

/// Lift plus bilinear cocycles: cocycles[p][i * dim_b + j] = f_p(i, j) in A.
struct FactorSystem {
  Lift lift;
  std::vector<std::vector<Vec>> cocycles;

  static FactorSystem zero(std::size_t arity, std::size_t dim_a, std::size_t dim_b);
  const Vec& f(std::size_t which, std::size_t i, std::size_t j) const {
    return cocycles[which][i * lift.dim_b() + j];
  }
  Vec& f(std::size_t which, std::size_t i, std::size_t j) { return cocycles[which][i * lift.dim_b() + j]; }

  friend bool operator==(const FactorSystem&, const FactorSystem&) = default;
};

/// 0 -> A -σ-> L -π-> B -> 0 with section T. σ is dim L × dim A (columns
/// are images of A's basis), π is dim B × dim L, T is dim L × dim B.
struct ExtensionData {
  Algebra L;
  Algebra A;
  Matrix sigma;
  Algebra B;
  Matrix pi;
  Matrix section;

  /// σ⁻¹ on σ(A). Throws CertifiedError when y is outside the image.
  Vec sigma_inverse(const Vec& y) const;
  /// σ(U) in L coordinates.
  Subspace push(const Subspace& u) const;
  /// σ⁻¹(V) for V inside σ(A).
  Subspace pull(const Subspace& v) const;
};

/// Validates σ (injective homomorphism onto an ideal), builds the quotient
/// B on the complement spanned by standard basis vectors at the non-pivot
/// coordinates of σ(A), the projection π, and the section. When no section
/// is given, T maps each B-basis element to its complement representative.
ExtensionData make_extension(Algebra L, Algebra A, Matrix sigma, std::optional<Matrix> section = std::nullopt);

/// φ_*(i)m = σ⁻¹(T(i) * σ(m)), φ_*′(i)m = σ⁻¹(σ(m) * T(i)).
Lift extract_lift(const ExtensionData& ext);

/// Lift plus f_*(i,j) = σ⁻¹(T(i) * T(j) − T(i * j)).
FactorSystem extract_factor_system(const ExtensionData& ext);

struct BuiltExtension {
  Algebra algebra;
  ExtensionData extension;
};

/// The A ⊕ B algebra of a factor system, without identity checking.
Algebra assemble_extension_algebra(const Algebra& A, const Algebra& B, const FactorSystem& fs);

/// A ⊕ B with (m,i)*(n,j) = (m*n + φ_*(i)n + φ_*′(j)m + f_*(i,j), i*j),
/// ι(m) = (m,0), T(i) = (0,i). Throws CertifiedError with the identity
/// violations if the result is not an algebra of the type.
BuiltExtension build_extension_algebra(const Algebra& A, const Algebra& B, const FactorSystem& fs);

/// τ(x) = (σ⁻¹(x − Tπx), πx) from L onto the rebuilt A ⊕ B. Verifies that
/// τ is bijective, multiplicative for every product, and that τσ = ι.
Matrix reconstruction_iso(const ExtensionData& ext);

/// Witnesses m with lift1(i) − lift2(i) = ad(m) per slot and B-basis
/// element (left multiplication for left slots, right for right slots).
using AdjointWitnesses = std::vector<std::vector<Vec>>;

/// nullopt when some slot difference is not an adjoint operator.
std::optional<AdjointWitnesses> lifts_differ_by_adjoints(const Algebra& A, const Lift& lift1, const Lift& lift2);

/// lift + ad(witnesses), the inverse operation of lifts_differ_by_adjoints.
Lift add_adjoints(const Algebra& A, const Lift& lift, const AdjointWitnesses& witnesses);

/// N is an ideal of A closed under every lift map. Throws CertifiedError if N is not an ideal.
bool is_B_invariant(const Algebra& A, const Lift& lift, const Subspace& N);

}  // namespace nilp
