#pragma once

#include "nilp/linalg.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilp {

enum class AlgebraType { lie, leibniz, associative, commutative, zinbiel, diassociative, dendriform };

std::string_view to_string(AlgebraType t);
/// Throws ParseError on an unknown name.
AlgebraType parse_algebra_type(std::string_view name);
/// Number of bilinear products carried by the type (1 or 2).
std::size_t arity(AlgebraType t);

/// Structure constants of one bilinear product: table[i*dim + j] = e_i * e_j.
class ProductTable {
 public:
  explicit ProductTable(std::size_t dim = 0);

  std::size_t dim() const noexcept { return dim_; }
  const Vec& at(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, Vec v);
  bool is_zero() const;

  friend bool operator==(const ProductTable&, const ProductTable&) = default;

 private:
  std::size_t dim_;
  std::vector<Vec> table_;
};

/// Finite-dimensional algebra over Q given by structure constants.
/// Product index 0 is the single product, or the left/first product
/// (⊣ or <) of a two-product type; index 1 is ⊢ or >.
///
/// The constructor checks shapes only. Identity checking is separate so
/// that violating algebras can be represented and reported on.
class Algebra {
 public:
  Algebra() = default;
  Algebra(AlgebraType type, std::vector<std::string> basis_names, std::vector<ProductTable> products);

  /// All products zero.
  static Algebra abelian(AlgebraType type, std::vector<std::string> basis_names);

  AlgebraType type() const noexcept { return type_; }
  std::size_t dim() const noexcept { return names_.size(); }
  std::size_t arity() const noexcept { return products_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const ProductTable& table(std::size_t which) const { return products_.at(which); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  AlgebraType type_ = AlgebraType::leibniz;
  std::vector<std::string> names_;
  std::vector<ProductTable> products_;
};

/// Linear endomorphism of an algebra's underlying space, acting on coordinate columns.
struct LinMap {
  Matrix matrix;

  static LinMap zero(std::size_t dim) { return {Matrix(dim, dim)}; }
  std::size_t dim() const noexcept { return matrix.rows(); }
  Vec operator()(const Vec& v) const { return matrix.apply(v); }
  friend bool operator==(const LinMap&, const LinMap&) = default;
};

/// Descending chain of subspaces computed until the first repeat.
/// terms[0] is the whole space; the repeated term is not appended.
struct Chain {
  std::vector<Subspace> terms;
  bool stabilized = false;

  std::vector<std::size_t> dims() const;
  /// terms[k] for any k, extending by the stable last term.
  const Subspace& at(std::size_t k) const;
};

/// Runs next(terms so far) from `first` until a term repeats.
Chain descending_chain(Subspace first, const std::function<Subspace(const std::vector<Subspace>&)>& next);

/// Bilinear extension of the structure constants.
Vec multiply(const Algebra& alg, std::size_t which, const Vec& x, const Vec& y);

/// Failed defining identity on a basis triple (or pair, for symmetry axioms).
struct Violation {
  std::string identity;
  std::vector<std::size_t> basis;
  Vec lhs;
  Vec rhs;
};

/// Every defining identity of the algebra's type, evaluated on all basis
/// triples. By multilinearity an empty result means the identities hold
/// on the whole algebra.
std::vector<Violation> check_identity(const Algebra& alg);
/// Same check, stopping at the first violation.
bool satisfies_identities(const Algebra& alg);

/// span{ u_a * v_b } over basis pairs.
Subspace subspace_product(const Algebra& alg, std::size_t which, const Subspace& u, const Subspace& v);
/// Sum of the products over every product index of the algebra.
Subspace all_products(const Algebra& alg, const Subspace& u, const Subspace& v);
/// U◊V = U⊣V + U⊢V. Requires a two-product algebra.
Subspace lozenge(const Algebra& alg, const Subspace& u, const Subspace& v);

/// Lower central series C_0 = L, C_{k+1} = L C_k.
Chain lcs(const Algebra& alg);

enum class SeriesKind { left, right, general };
/// D^{{k+1}} = D◊D^{{k}}; D^{<k+1>} = D^{<k>}◊D; D^{k+1} = sum_i D^i◊D^{k-i}.
Chain dia_series(const Algebra& alg, SeriesKind kind);
/// lcs for one product, the general series for two.
Chain nilpotency_series(const Algebra& alg);

/// Smallest k with terms[k] = 0, or nullopt if the chain stabilizes nonzero.
std::optional<std::size_t> nilpotency_index(const Chain& c);

/// (m -> a*m, m -> m*a) for the chosen product.
std::pair<LinMap, LinMap> mult_ops(const Algebra& alg, std::size_t which, const Vec& a);

/// d(mn) = d(m)n + m d(n) on all basis pairs (single-product algebras).
bool is_derivation(const Algebra& alg, const LinMap& d);

/// Whether u is closed under multiplication by the algebra on both sides for every product.
bool is_ideal(const Algebra& alg, const Subspace& u);

/// Least subspace containing seed that is a two-sided ideal for every
/// product and is invariant under every map in extra_maps.
Subspace ideal_closure(const Algebra& alg, const Subspace& seed, const std::vector<LinMap>& extra_maps = {});

/// Copy of alg with basis vector i renamed and moved to position perm[i].
Algebra permuted(const Algebra& alg, const std::vector<std::size_t>& perm);

}  // namespace nilp
