#include "nilp/extension.hpp"

#include "nilp/errors.hpp"
#include "nilp/io.hpp"

#include <set>

namespace nilp {

namespace {

json pair_cert(const Algebra& alg, std::size_t p, std::size_t i, std::size_t j) {
  return {{"product", p}, {"pair", {alg.basis_names()[i], alg.basis_names()[j]}}};
}

Vec column_of(const Matrix& m, std::size_t c) { return m.col(c); }

void check_lift_shape(const Lift& lift, std::size_t arity, std::size_t dim_a, std::size_t dim_b) {
  if (lift.slots.size() != 2 * arity) throw DimensionError("lift has the wrong number of slots for the type");
  for (const auto& slot : lift.slots) {
    if (slot.size() != dim_b) throw DimensionError("lift slot length does not match dim B");
    for (const auto& m : slot)
      if (m.matrix.rows() != dim_a || m.matrix.cols() != dim_a)
        throw DimensionError("lift map is not an endomorphism of A");
  }
}

// Linear system whose solution m gives ad(m) for the requested side.
// Row (r, n) holds coordinate r of the image of e_n.
Matrix adjoint_system(const Algebra& A, std::size_t which, bool left) {
  const std::size_t n = A.dim();
  Matrix sys(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t col = 0; col < n; ++col) {
      const Vec& v = left ? A.table(which).at(k, col) : A.table(which).at(col, k);
      for (std::size_t r = 0; r < n; ++r) sys(r * n + col, k) = v[r];
    }
  return sys;
}

Vec flatten(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

}  // namespace

Lift Lift::zero(std::size_t arity, std::size_t dim_a, std::size_t dim_b) {
  Lift l;
  l.slots.assign(2 * arity, std::vector<LinMap>(dim_b, LinMap::zero(dim_a)));
  return l;
}

std::size_t Lift::dim_a() const noexcept {
  for (const auto& s : slots)
    if (!s.empty()) return s.front().dim();
  return 0;
}

std::vector<LinMap> Lift::all_maps() const {
  std::vector<LinMap> out;
  for (const auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

FactorSystem FactorSystem::zero(std::size_t arity, std::size_t dim_a, std::size_t dim_b) {
  FactorSystem fs{Lift::zero(arity, dim_a, dim_b), {}};
  fs.cocycles.assign(arity, std::vector<Vec>(dim_b * dim_b, Vec(dim_a)));
  return fs;
}

Vec ExtensionData::sigma_inverse(const Vec& y) const {
  auto x = solve(sigma, y);
  if (!x) throw CertifiedError("element lies outside sigma(A)", {{"element", vec_to_json(L.basis_names(), y)}});
  return *x;
}

Subspace ExtensionData::push(const Subspace& u) const { return image(sigma, u); }

Subspace ExtensionData::pull(const Subspace& v) const {
  std::vector<Vec> pre;
  for (const auto& b : v.basis_vectors()) pre.push_back(sigma_inverse(b));
  return span(pre, A.dim());
}

ExtensionData make_extension(Algebra L, Algebra A, Matrix sigma, std::optional<Matrix> section) {
  if (L.type() != A.type())
    throw CertifiedError("L and A have different types", {{"reason", "type-mismatch"},
                                                           {"L", std::string(to_string(L.type()))},
                                                           {"A", std::string(to_string(A.type()))}});
  const std::size_t dl = L.dim(), da = A.dim();
  if (sigma.rows() != dl || sigma.cols() != da) throw DimensionError("sigma must be dim L x dim A");
  if (rank(sigma) != da) throw CertifiedError("sigma is not injective", {{"reason", "sigma-not-injective"}});

  for (std::size_t p = 0; p < L.arity(); ++p)
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        const Vec lhs = sigma.apply(A.table(p).at(i, j));
        const Vec rhs = multiply(L, p, sigma.col(i), sigma.col(j));
        if (lhs != rhs) {
          json c = pair_cert(A, p, i, j);
          c["reason"] = "sigma-not-homomorphism";
          c["sigma_of_product"] = vec_to_json(L.basis_names(), lhs);
          c["product_of_sigmas"] = vec_to_json(L.basis_names(), rhs);
          throw CertifiedError("sigma is not a homomorphism", c);
        }
      }

  const Subspace img = column_space(sigma);
  for (std::size_t p = 0; p < L.arity(); ++p)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t i = 0; i < dl; ++i) {
        const Vec s = sigma.col(a);
        const Vec e = unit_vec(dl, i);
        for (const bool left : {true, false}) {
          const Vec prod = left ? multiply(L, p, e, s) : multiply(L, p, s, e);
          if (!subspace_contains(img, prod)) {
            throw CertifiedError("sigma(A) is not an ideal of L",
                                 {{"reason", "image-not-ideal"},
                                  {"product", p},
                                  {"side", left ? "left" : "right"},
                                  {"L_element", L.basis_names()[i]},
                                  {"A_element", A.basis_names()[a]},
                                  {"value", vec_to_json(L.basis_names(), prod)}});
          }
        }
      }

  // Complement: standard basis vectors at the non-pivot coordinates.
  std::vector<std::size_t> comp;
  {
    std::set<std::size_t> piv(img.pivots().begin(), img.pivots().end());
    for (std::size_t c = 0; c < dl; ++c)
      if (!piv.count(c)) comp.push_back(c);
  }
  const std::size_t db = comp.size();

  Matrix pi(db, dl);
  for (std::size_t r = 0; r < db; ++r) {
    pi(r, comp[r]) = 1;
    for (std::size_t q = 0; q < img.pivots().size(); ++q) pi(r, img.pivots()[q]) = -img.basis()(q, comp[r]);
  }

  std::vector<std::string> bnames;
  for (const auto c : comp) bnames.push_back(L.basis_names()[c]);
  std::vector<ProductTable> btables;
  for (std::size_t p = 0; p < L.arity(); ++p) {
    ProductTable t(db);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) t.set(i, j, pi.apply(L.table(p).at(comp[i], comp[j])));
    btables.push_back(std::move(t));
  }
  Algebra B(L.type(), std::move(bnames), std::move(btables));

  for (std::size_t p = 0; p < L.arity(); ++p)
    for (std::size_t i = 0; i < dl; ++i)
      for (std::size_t j = 0; j < dl; ++j) {
        const Vec lhs = pi.apply(L.table(p).at(i, j));
        const Vec rhs = multiply(B, p, pi.col(i), pi.col(j));
        if (lhs != rhs) {
          json c = pair_cert(L, p, i, j);
          c["reason"] = "pi-not-homomorphism";
          throw CertifiedError("projection is not a homomorphism", c);
        }
      }

  Matrix T(dl, db);
  if (section) {
    if (section->rows() != dl || section->cols() != db) throw DimensionError("section must be dim L x dim B");
    if (pi * *section != Matrix::identity(db))
      throw CertifiedError("section does not satisfy pi T = id", {{"reason", "section-not-right-inverse"},
                                                                  {"pi_T", matrix_to_json(pi * *section)}});
    T = std::move(*section);
  } else {
    for (std::size_t r = 0; r < db; ++r) T(comp[r], r) = 1;
  }

  return ExtensionData{std::move(L), std::move(A), std::move(sigma), std::move(B), std::move(pi), std::move(T)};
}

Lift extract_lift(const ExtensionData& ext) {
  const std::size_t ar = ext.L.arity(), da = ext.A.dim(), db = ext.B.dim();
  Lift lift = Lift::zero(ar, da, db);
  for (std::size_t s = 0; s < 2 * ar; ++s) {
    const std::size_t p = slot_product(s, ar);
    const bool left = slot_is_left(s, ar);
    for (std::size_t i = 0; i < db; ++i) {
      const Vec t = column_of(ext.section, i);
      Matrix& m = lift.slots[s][i].matrix;
      for (std::size_t a = 0; a < da; ++a) {
        const Vec sa = ext.sigma.col(a);
        const Vec img = ext.sigma_inverse(left ? multiply(ext.L, p, t, sa) : multiply(ext.L, p, sa, t));
        for (std::size_t r = 0; r < da; ++r) m(r, a) = img[r];
      }
    }
  }
  return lift;
}

FactorSystem extract_factor_system(const ExtensionData& ext) {
  const std::size_t ar = ext.L.arity(), da = ext.A.dim(), db = ext.B.dim();
  FactorSystem fs = FactorSystem::zero(ar, da, db);
  fs.lift = extract_lift(ext);
  for (std::size_t p = 0; p < ar; ++p)
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) {
        const Vec tt = multiply(ext.L, p, ext.section.col(i), ext.section.col(j));
        const Vec tij = ext.section.apply(ext.B.table(p).at(i, j));
        fs.f(p, i, j) = ext.sigma_inverse(sub(tt, tij));
      }
  // The rebuilt algebra must satisfy the identities; this throws otherwise.
  build_extension_algebra(ext.A, ext.B, fs);
  return fs;
}

Algebra assemble_extension_algebra(const Algebra& A, const Algebra& B, const FactorSystem& fs) {
  if (A.type() != B.type()) throw DimensionError("A and B must have the same type");
  const std::size_t ar = A.arity(), da = A.dim(), db = B.dim(), n = da + db;
  check_lift_shape(fs.lift, ar, da, db);
  if (fs.cocycles.size() != ar) throw DimensionError("factor system has the wrong number of cocycles");
  for (const auto& grid : fs.cocycles) {
    if (grid.size() != db * db) throw DimensionError("cocycle grid is not dim B x dim B");
    for (const auto& v : grid)
      if (v.size() != da) throw DimensionError("cocycle value is not an element of A");
  }

  std::vector<std::string> names = A.basis_names();
  std::set<std::string> used(names.begin(), names.end());
  for (auto name : B.basis_names()) {
    while (used.count(name)) name += "'";
    used.insert(name);
    names.push_back(std::move(name));
  }

  const auto embed = [&](const Vec& a, const Vec& b) {
    Vec v(n);
    for (std::size_t k = 0; k < da; ++k) v[k] = a[k];
    for (std::size_t k = 0; k < db; ++k) v[da + k] = b[k];
    return v;
  };

  std::vector<ProductTable> tables;
  for (std::size_t p = 0; p < ar; ++p) {
    ProductTable t(n);
    const auto& phi = fs.lift.slots[p];
    const auto& phi_r = fs.lift.slots[ar + p];
    for (std::size_t m = 0; m < da; ++m)
      for (std::size_t k = 0; k < da; ++k) t.set(m, k, embed(A.table(p).at(m, k), Vec(db)));
    for (std::size_t m = 0; m < da; ++m)
      for (std::size_t j = 0; j < db; ++j) t.set(m, da + j, embed(phi_r[j].matrix.col(m), Vec(db)));
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t k = 0; k < da; ++k) t.set(da + i, k, embed(phi[i].matrix.col(k), Vec(db)));
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) t.set(da + i, da + j, embed(fs.f(p, i, j), B.table(p).at(i, j)));
    tables.push_back(std::move(t));
  }
  return Algebra(A.type(), std::move(names), std::move(tables));
}

BuiltExtension build_extension_algebra(const Algebra& A, const Algebra& B, const FactorSystem& fs) {
  const std::size_t da = A.dim(), db = B.dim(), n = da + db;
  Algebra L2 = assemble_extension_algebra(A, B, fs);
  if (auto v = check_identity(L2); !v.empty())
    throw CertifiedError("invalid factor system: the extension algebra violates its identities",
                         {{"reason", "invalid-factor-system"},
                          {"algebra", algebra_to_json(L2)},
                          {"violations", violations_to_json(L2, v)}});

  Matrix iota(n, da);
  for (std::size_t k = 0; k < da; ++k) iota(k, k) = 1;
  Matrix T(n, db);
  for (std::size_t k = 0; k < db; ++k) T(da + k, k) = 1;
  auto ext = make_extension(L2, A, std::move(iota), std::move(T));
  return {std::move(L2), std::move(ext)};
}

Matrix reconstruction_iso(const ExtensionData& ext) {
  const FactorSystem fs = extract_factor_system(ext);
  const BuiltExtension built = build_extension_algebra(ext.A, ext.B, fs);
  const std::size_t dl = ext.L.dim(), da = ext.A.dim(), db = ext.B.dim();

  Matrix tau(dl, dl);
  for (std::size_t k = 0; k < dl; ++k) {
    const Vec x = unit_vec(dl, k);
    const Vec b = ext.pi.apply(x);
    const Vec a = ext.sigma_inverse(sub(x, ext.section.apply(b)));
    for (std::size_t r = 0; r < da; ++r) tau(r, k) = a[r];
    for (std::size_t r = 0; r < db; ++r) tau(da + r, k) = b[r];
  }

  if (rank(tau) != dl) throw CertifiedError("tau is not bijective", {{"reason", "tau-singular"}, {"tau", matrix_to_json(tau)}});
  for (std::size_t p = 0; p < ext.L.arity(); ++p)
    for (std::size_t i = 0; i < dl; ++i)
      for (std::size_t j = 0; j < dl; ++j) {
        const Vec lhs = tau.apply(ext.L.table(p).at(i, j));
        const Vec rhs = multiply(built.algebra, p, tau.col(i), tau.col(j));
        if (lhs != rhs) {
          json c = pair_cert(ext.L, p, i, j);
          c["reason"] = "tau-not-multiplicative";
          c["tau"] = matrix_to_json(tau);
          throw CertifiedError("tau is not multiplicative", c);
        }
      }
  if (tau * ext.sigma != built.extension.sigma)
    throw CertifiedError("tau sigma != iota", {{"reason", "tau-sigma-not-iota"}, {"tau", matrix_to_json(tau)}});
  return tau;
}

std::optional<AdjointWitnesses> lifts_differ_by_adjoints(const Algebra& A, const Lift& lift1, const Lift& lift2) {
  const std::size_t ar = A.arity();
  check_lift_shape(lift1, ar, A.dim(), lift1.dim_b());
  check_lift_shape(lift2, ar, A.dim(), lift1.dim_b());
  AdjointWitnesses w(2 * ar);
  for (std::size_t s = 0; s < 2 * ar; ++s) {
    const Matrix sys = adjoint_system(A, slot_product(s, ar), slot_is_left(s, ar));
    for (std::size_t i = 0; i < lift1.dim_b(); ++i) {
      auto m = solve(sys, flatten(lift1.slots[s][i].matrix - lift2.slots[s][i].matrix));
      if (!m) return std::nullopt;
      w[s].push_back(std::move(*m));
    }
  }
  return w;
}

Lift add_adjoints(const Algebra& A, const Lift& lift, const AdjointWitnesses& witnesses) {
  const std::size_t ar = A.arity();
  check_lift_shape(lift, ar, A.dim(), lift.dim_b());
  if (witnesses.size() != lift.slots.size()) throw DimensionError("witness slot count mismatch");
  Lift out = lift;
  for (std::size_t s = 0; s < out.slots.size(); ++s) {
    if (witnesses[s].size() != lift.dim_b()) throw DimensionError("witness count mismatch");
    for (std::size_t i = 0; i < lift.dim_b(); ++i) {
      auto [l, r] = mult_ops(A, slot_product(s, ar), witnesses[s][i]);
      out.slots[s][i].matrix = out.slots[s][i].matrix + (slot_is_left(s, ar) ? l.matrix : r.matrix);
    }
  }
  return out;
}

bool is_B_invariant(const Algebra& A, const Lift& lift, const Subspace& N) {
  if (N.ambient_dim() != A.dim()) throw DimensionError("is_B_invariant: N is not a subspace of A");
  if (!is_ideal(A, N))
    throw CertifiedError("N is not an ideal of A", {{"reason", "not-an-ideal"}, {"N", subspace_to_json(A.basis_names(), N)}});
  for (const auto& m : lift.all_maps())
    for (const auto& b : N.basis_vectors())
      if (!subspace_contains(N, m(b))) return false;
  return true;
}

}  // namespace nilp
