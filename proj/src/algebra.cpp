#include "nilp/algebra.hpp"

#include "nilp/errors.hpp"

#include <array>
#include <functional>
#include <set>

namespace nilp {

namespace {

constexpr std::array<std::pair<AlgebraType, std::string_view>, 7> kTypeNames{{
    {AlgebraType::lie, "lie"},
    {AlgebraType::leibniz, "leibniz"},
    {AlgebraType::associative, "associative"},
    {AlgebraType::commutative, "commutative"},
    {AlgebraType::zinbiel, "zinbiel"},
    {AlgebraType::diassociative, "diassociative"},
    {AlgebraType::dendriform, "dendriform"},
}};

// Indices of the two products of a dialgebra.
constexpr std::size_t kFirst = 0;   // ⊣ or <
constexpr std::size_t kSecond = 1;  // ⊢ or >

void require_arity(const Algebra& alg, std::size_t n, const char* op) {
  if (alg.arity() != n)
    throw DimensionError(std::string(op) + ": algebra of type " + std::string(to_string(alg.type())) +
                         " has the wrong number of products");
}

// v * e_k
Vec mul_vb(const Algebra& alg, std::size_t p, const Vec& v, std::size_t k) {
  const auto& t = alg.table(p);
  Vec r(alg.dim());
  for (std::size_t m = 0; m < v.size(); ++m)
    if (!is_zero(v[m])) axpy(r, v[m], t.at(m, k));
  return r;
}

// e_i * v
Vec mul_bv(const Algebra& alg, std::size_t p, std::size_t i, const Vec& v) {
  const auto& t = alg.table(p);
  Vec r(alg.dim());
  for (std::size_t m = 0; m < v.size(); ++m)
    if (!is_zero(v[m])) axpy(r, v[m], t.at(i, m));
  return r;
}

// Evaluators for the two bracketings of a basis triple.
struct TripleEval {
  const Algebra& alg;
  std::size_t i, j, k;
  // (e_a *p e_b) *q e_c
  Vec left(std::size_t p, std::size_t q, std::size_t a, std::size_t b, std::size_t c) const {
    return mul_vb(alg, q, alg.table(p).at(a, b), c);
  }
  // e_a *p (e_b *q e_c)
  Vec right(std::size_t p, std::size_t q, std::size_t a, std::size_t b, std::size_t c) const {
    return mul_bv(alg, p, a, alg.table(q).at(b, c));
  }
};

using TripleIdentity = std::function<std::pair<Vec, Vec>(const TripleEval&)>;

struct NamedIdentity {
  std::string name;
  TripleIdentity eval;
};

std::vector<NamedIdentity> triple_identities(AlgebraType type) {
  const auto associative_in = [](std::size_t p) {
    return [p](const TripleEval& e) {
      return std::pair{e.left(p, p, e.i, e.j, e.k), e.right(p, p, e.i, e.j, e.k)};
    };
  };
  const auto leibniz = [](const TripleEval& e) {
    // x(yz) = (xy)z + y(xz)
    return std::pair{e.right(0, 0, e.i, e.j, e.k), add(e.left(0, 0, e.i, e.j, e.k), e.right(0, 0, e.j, e.i, e.k))};
  };
  switch (type) {
    case AlgebraType::lie:
    case AlgebraType::leibniz:
      return {{"leibniz", leibniz}};
    case AlgebraType::associative:
    case AlgebraType::commutative:
      return {{"associativity", associative_in(0)}};
    case AlgebraType::zinbiel:
      // (xy)z = x(yz) + x(zy)
      return {{"zinbiel", [](const TripleEval& e) {
                 return std::pair{e.left(0, 0, e.i, e.j, e.k),
                                  add(e.right(0, 0, e.i, e.j, e.k), e.right(0, 0, e.i, e.k, e.j))};
               }}};
    case AlgebraType::diassociative:
      return {
          {"associativity-left", associative_in(kFirst)},
          {"associativity-right", associative_in(kSecond)},
          // x⊣(y⊣z) = x⊣(y⊢z)
          {"D1", [](const TripleEval& e) {
             return std::pair{e.right(kFirst, kFirst, e.i, e.j, e.k), e.right(kFirst, kSecond, e.i, e.j, e.k)};
           }},
          // (x⊢y)⊣z = x⊢(y⊣z)
          {"D2", [](const TripleEval& e) {
             return std::pair{e.left(kSecond, kFirst, e.i, e.j, e.k), e.right(kSecond, kFirst, e.i, e.j, e.k)};
           }},
          // (x⊣y)⊢z = (x⊢y)⊢z
          {"D3", [](const TripleEval& e) {
             return std::pair{e.left(kFirst, kSecond, e.i, e.j, e.k), e.left(kSecond, kSecond, e.i, e.j, e.k)};
           }},
      };
    case AlgebraType::dendriform:
      return {
          // (x<y)<z = x<(y<z) + x<(y>z)
          {"E1", [](const TripleEval& e) {
             return std::pair{e.left(kFirst, kFirst, e.i, e.j, e.k),
                              add(e.right(kFirst, kFirst, e.i, e.j, e.k), e.right(kFirst, kSecond, e.i, e.j, e.k))};
           }},
          // (x>y)<z = x>(y<z)
          {"E2", [](const TripleEval& e) {
             return std::pair{e.left(kSecond, kFirst, e.i, e.j, e.k), e.right(kSecond, kFirst, e.i, e.j, e.k)};
           }},
          // (x<y)>z + (x>y)>z = x>(y>z)
          {"E3", [](const TripleEval& e) {
             return std::pair{add(e.left(kFirst, kSecond, e.i, e.j, e.k), e.left(kSecond, kSecond, e.i, e.j, e.k)),
                              e.right(kSecond, kSecond, e.i, e.j, e.k)};
           }},
      };
  }
  return {};
}

// Pair axioms: symmetry for commutative, alternating + antisymmetry for lie.
// Calls sink(name, {i, j} or {i}, lhs, rhs) for each failure; stops when sink returns false.
template <typename Sink>
bool check_pairs(const Algebra& alg, Sink&& sink) {
  const auto& t = alg.table(0);
  const std::size_t n = alg.dim();
  if (alg.type() == AlgebraType::lie) {
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(t.at(i, i)) && !sink("alternating", std::vector<std::size_t>{i}, t.at(i, i), zero_vec(n)))
        return false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (t.at(i, j) != scaled(-1, t.at(j, i)) &&
            !sink("antisymmetry", std::vector<std::size_t>{i, j}, t.at(i, j), scaled(-1, t.at(j, i))))
          return false;
  } else if (alg.type() == AlgebraType::commutative) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (t.at(i, j) != t.at(j, i) && !sink("symmetry", std::vector<std::size_t>{i, j}, t.at(i, j), t.at(j, i)))
          return false;
  }
  return true;
}

template <typename Sink>
void scan_identities(const Algebra& alg, Sink&& sink) {
  if (!check_pairs(alg, sink)) return;
  const auto ids = triple_identities(alg.type());
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const TripleEval e{alg, i, j, k};
        for (const auto& id : ids) {
          auto [lhs, rhs] = id.eval(e);
          if (lhs != rhs && !sink(id.name, std::vector<std::size_t>{i, j, k}, std::move(lhs), std::move(rhs)))
            return;
        }
      }
}

}  // namespace

Chain descending_chain(Subspace first, const std::function<Subspace(const std::vector<Subspace>&)>& next) {
  Chain c;
  c.terms.push_back(std::move(first));
  const std::size_t bound = 2 * c.terms.front().ambient_dim() + 2;
  for (std::size_t step = 0; step < bound; ++step) {
    Subspace nxt = next(c.terms);
    if (nxt == c.terms.back()) {
      c.stabilized = true;
      return c;
    }
    c.terms.push_back(std::move(nxt));
  }
  return c;
}

std::string_view to_string(AlgebraType t) {
  for (const auto& [type, name] : kTypeNames)
    if (type == t) return name;
  return "unknown";
}

AlgebraType parse_algebra_type(std::string_view name) {
  for (const auto& [type, n] : kTypeNames)
    if (n == name) return type;
  throw ParseError("unknown algebra type \"" + std::string(name) + "\"");
}

std::size_t arity(AlgebraType t) {
  return t == AlgebraType::diassociative || t == AlgebraType::dendriform ? 2 : 1;
}

ProductTable::ProductTable(std::size_t dim) : dim_(dim), table_(dim * dim, Vec(dim)) {}

void ProductTable::set(std::size_t i, std::size_t j, Vec v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) throw DimensionError("product table entry out of shape");
  table_[i * dim_ + j] = std::move(v);
}

bool ProductTable::is_zero() const {
  for (const auto& v : table_)
    if (!nilp::is_zero(v)) return false;
  return true;
}

Algebra::Algebra(AlgebraType type, std::vector<std::string> basis_names, std::vector<ProductTable> products)
    : type_(type), names_(std::move(basis_names)), products_(std::move(products)) {
  if (products_.size() != nilp::arity(type_))
    throw DimensionError("algebra of type " + std::string(to_string(type_)) + " needs " +
                         std::to_string(nilp::arity(type_)) + " product tables");
  for (const auto& p : products_)
    if (p.dim() != names_.size()) throw DimensionError("product table dimension does not match basis");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw DimensionError("duplicate basis name \"" + n + "\"");
}

Algebra Algebra::abelian(AlgebraType type, std::vector<std::string> basis_names) {
  const std::size_t n = basis_names.size();
  return Algebra(type, std::move(basis_names), std::vector<ProductTable>(nilp::arity(type), ProductTable(n)));
}

std::optional<std::size_t> Algebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> Chain::dims() const {
  std::vector<std::size_t> d;
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

const Subspace& Chain::at(std::size_t k) const { return k < terms.size() ? terms[k] : terms.back(); }

Vec multiply(const Algebra& alg, std::size_t which, const Vec& x, const Vec& y) {
  if (which >= alg.arity()) throw DimensionError("multiply: product index out of range");
  if (x.size() != alg.dim() || y.size() != alg.dim()) throw DimensionError("multiply: vector length mismatch");
  Vec r(alg.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) axpy(r, x[i] * y[j], alg.table(which).at(i, j));
  }
  return r;
}

std::vector<Violation> check_identity(const Algebra& alg) {
  std::vector<Violation> out;
  scan_identities(alg, [&](const std::string& name, std::vector<std::size_t> basis, Vec lhs, Vec rhs) {
    out.push_back({name, std::move(basis), std::move(lhs), std::move(rhs)});
    return true;
  });
  return out;
}

bool satisfies_identities(const Algebra& alg) {
  bool ok = true;
  scan_identities(alg, [&](const std::string&, std::vector<std::size_t>, Vec, Vec) {
    ok = false;
    return false;
  });
  return ok;
}

Subspace subspace_product(const Algebra& alg, std::size_t which, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != alg.dim() || v.ambient_dim() != alg.dim())
    throw DimensionError("subspace_product: subspace is not in this algebra");
  std::vector<Vec> prods;
  const auto ub = u.basis_vectors();
  const auto vb = v.basis_vectors();
  for (const auto& a : ub)
    for (const auto& b : vb) prods.push_back(multiply(alg, which, a, b));
  return span(prods, alg.dim());
}

Subspace all_products(const Algebra& alg, const Subspace& u, const Subspace& v) {
  Subspace s = Subspace::zero(alg.dim());
  for (std::size_t p = 0; p < alg.arity(); ++p) s = subspace_sum(s, subspace_product(alg, p, u, v));
  return s;
}

Subspace lozenge(const Algebra& alg, const Subspace& u, const Subspace& v) {
  require_arity(alg, 2, "lozenge");
  return subspace_sum(subspace_product(alg, kFirst, u, v), subspace_product(alg, kSecond, u, v));
}

Chain lcs(const Algebra& alg) {
  require_arity(alg, 1, "lcs");
  const Subspace whole = Subspace::full(alg.dim());
  return descending_chain(whole, [&](const std::vector<Subspace>& t) { return subspace_product(alg, 0, whole, t.back()); });
}

Chain dia_series(const Algebra& alg, SeriesKind kind) {
  require_arity(alg, 2, "dia_series");
  const Subspace whole = Subspace::full(alg.dim());
  switch (kind) {
    case SeriesKind::left:
      return descending_chain(whole, [&](const std::vector<Subspace>& t) { return lozenge(alg, whole, t.back()); });
    case SeriesKind::right:
      return descending_chain(whole, [&](const std::vector<Subspace>& t) { return lozenge(alg, t.back(), whole); });
    case SeriesKind::general:
      return descending_chain(whole, [&](const std::vector<Subspace>& t) {
        Subspace s = Subspace::zero(alg.dim());
        const std::size_t k = t.size() - 1;
        for (std::size_t i = 0; i <= k; ++i) s = subspace_sum(s, lozenge(alg, t[i], t[k - i]));
        return s;
      });
  }
  throw DimensionError("dia_series: unknown kind");
}

Chain nilpotency_series(const Algebra& alg) {
  return alg.arity() == 1 ? lcs(alg) : dia_series(alg, SeriesKind::general);
}

std::optional<std::size_t> nilpotency_index(const Chain& c) {
  if (c.terms.empty() || !c.terms.back().is_zero()) return std::nullopt;
  return c.terms.size() - 1;
}

std::pair<LinMap, LinMap> mult_ops(const Algebra& alg, std::size_t which, const Vec& a) {
  const std::size_t n = alg.dim();
  LinMap left = LinMap::zero(n), right = LinMap::zero(n);
  for (std::size_t m = 0; m < n; ++m) {
    const Vec e = unit_vec(n, m);
    const Vec l = multiply(alg, which, a, e);
    const Vec r = multiply(alg, which, e, a);
    for (std::size_t i = 0; i < n; ++i) {
      left.matrix(i, m) = l[i];
      right.matrix(i, m) = r[i];
    }
  }
  return {std::move(left), std::move(right)};
}

bool is_derivation(const Algebra& alg, const LinMap& d) {
  require_arity(alg, 1, "is_derivation");
  const std::size_t n = alg.dim();
  if (d.dim() != n || d.matrix.cols() != n) throw DimensionError("is_derivation: map dimension mismatch");
  std::vector<Vec> images;
  for (std::size_t m = 0; m < n; ++m) images.push_back(d.matrix.col(m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec lhs = d(alg.table(0).at(a, b));
      const Vec rhs = add(mul_vb(alg, 0, images[a], b), mul_bv(alg, 0, a, images[b]));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_ideal(const Algebra& alg, const Subspace& u) {
  for (std::size_t p = 0; p < alg.arity(); ++p)
    for (const auto& s : u.basis_vectors())
      for (std::size_t i = 0; i < alg.dim(); ++i)
        if (!subspace_contains(u, mul_bv(alg, p, i, s)) || !subspace_contains(u, mul_vb(alg, p, s, i)))
          return false;
  return true;
}

Subspace ideal_closure(const Algebra& alg, const Subspace& seed, const std::vector<LinMap>& extra_maps) {
  if (seed.ambient_dim() != alg.dim()) throw DimensionError("ideal_closure: seed is not in this algebra");
  Subspace s = seed;
  while (true) {
    std::vector<Vec> gens = s.basis_vectors();
    const std::size_t own = gens.size();
    for (std::size_t g = 0; g < own; ++g) {
      for (std::size_t p = 0; p < alg.arity(); ++p)
        for (std::size_t i = 0; i < alg.dim(); ++i) {
          gens.push_back(mul_bv(alg, p, i, gens[g]));
          gens.push_back(mul_vb(alg, p, gens[g], i));
        }
      for (const auto& f : extra_maps) gens.push_back(f(gens[g]));
    }
    Subspace next = span(gens, alg.dim());
    if (next == s) return s;
    s = std::move(next);
  }
}

Algebra permuted(const Algebra& alg, const std::vector<std::size_t>& perm) {
  const std::size_t n = alg.dim();
  if (perm.size() != n) throw DimensionError("permuted: permutation length mismatch");
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names.at(perm[i]) = alg.basis_names()[i];
  const auto move_vec = [&](const Vec& v) {
    Vec w(n);
    for (std::size_t i = 0; i < n; ++i) w[perm[i]] = v[i];
    return w;
  };
  std::vector<ProductTable> tables;
  for (std::size_t p = 0; p < alg.arity(); ++p) {
    ProductTable t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.set(perm[i], perm[j], move_vec(alg.table(p).at(i, j)));
    tables.push_back(std::move(t));
  }
  return Algebra(alg.type(), std::move(names), std::move(tables));
}

}  // namespace nilp
