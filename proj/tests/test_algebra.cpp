#include "helpers.hpp"
#include "identity_oracle.hpp"

#include "nilp/algebra.hpp"
#include "nilp/corpus.hpp"
#include "nilp/errors.hpp"
#include "nilp/theory.hpp"

#include <doctest.h>

#include <numeric>

using namespace nilp;
using test::e;
using test::span_of;

namespace {

std::vector<std::size_t> dims(std::initializer_list<std::size_t> d) { return d; }

// 3-dim algebra with x·x = y, y·x = z: not Leibniz.
Algebra broken_leibniz() {
  return make_algebra(AlgebraType::leibniz, {"x", "y", "z"}, {{"x", "x", {{"y", 1}}}, {"y", "x", {{"z", 1}}}});
}

}  // namespace

TEST_CASE("type names and arity") {
  CHECK(parse_algebra_type("dendriform") == AlgebraType::dendriform);
  CHECK(to_string(AlgebraType::zinbiel) == "zinbiel");
  CHECK(arity(AlgebraType::diassociative) == 2);
  CHECK(arity(AlgebraType::lie) == 1);
  CHECK_THROWS_AS(parse_algebra_type("jordan"), ParseError);
  CHECK_THROWS_AS(Algebra(AlgebraType::diassociative, {"x"}, {ProductTable(1)}), DimensionError);
  CHECK_THROWS_AS(Algebra(AlgebraType::leibniz, {"x", "x"}, {ProductTable(2)}), DimensionError);
}

TEST_CASE("multiply") {
  const Algebra l1 = corpus::example1_L1();
  CHECK(multiply(l1, 0, e(l1, "w"), e(l1, "x")) == e(l1, "y"));
  CHECK(is_zero(multiply(l1, 0, zero_vec(4), add(e(l1, "w"), e(l1, "x")))));
  const Algebra d = corpus::example2_Lphi();
  CHECK(multiply(d, 1, e(d, "v"), e(d, "u")) == add(e(d, "x"), e(d, "y")));
  CHECK(multiply(d, 1, e(d, "u"), e(d, "v")) == add(e(d, "x"), e(d, "y")));
  // bilinearity: (2w + x)(w) = 2x
  CHECK(multiply(l1, 0, add(scaled(2, e(l1, "w")), e(l1, "x")), e(l1, "w")) == scaled(2, e(l1, "x")));
  CHECK_THROWS_AS(multiply(l1, 1, e(l1, "w"), e(l1, "w")), DimensionError);
  CHECK_THROWS_AS(multiply(l1, 0, zero_vec(3), e(l1, "w")), DimensionError);
}

TEST_CASE("check_identity examples") {
  CHECK(check_identity(corpus::example1_L1()).empty());
  for (auto t : {AlgebraType::lie, AlgebraType::leibniz, AlgebraType::associative, AlgebraType::commutative,
                 AlgebraType::zinbiel, AlgebraType::diassociative, AlgebraType::dendriform})
    CHECK(check_identity(Algebra::abelian(t, {"a", "b", "c"})).empty());

  const Algebra bad = broken_leibniz();
  const auto v = check_identity(bad);
  REQUIRE_FALSE(v.empty());
  // x(xx) = xy = 0 while (xx)x + x(xx) = yx = z
  CHECK(v.front().identity == "leibniz");
  CHECK(v.front().basis == std::vector<std::size_t>{0, 0, 0});
  CHECK(is_zero(v.front().lhs));
  CHECK(v.front().rhs == e(bad, "z"));
  CHECK_FALSE(satisfies_identities(bad));
}

TEST_CASE("check_identity on the curated corpus") {
  for (const auto& entry : corpus::builtin()) {
    CAPTURE(entry.name);
    CHECK(check_identity(entry.algebra).empty());
    CHECK(test::identities_hold_on_basis(entry.algebra));
  }
}

TEST_CASE("lie and commutative axioms") {
  // symmetric but not associative
  const Algebra c = make_algebra(AlgebraType::commutative, {"a", "b"}, {{"a", "b", {{"b", 1}}}});
  const auto cv = check_identity(c);
  REQUIRE_FALSE(cv.empty());
  CHECK(cv.front().identity == "symmetry");

  // Leibniz but not alternating
  Algebra hl = corpus::heisenberg_leibniz();
  CHECK(check_identity(hl).empty());
  const Algebra as_lie(AlgebraType::lie, hl.basis_names(), {hl.table(0)});
  const auto lv = check_identity(as_lie);
  REQUIRE_FALSE(lv.empty());
  CHECK(lv.front().identity == "alternating");

  const Algebra anti = make_algebra(AlgebraType::lie, {"a", "b"}, {{"a", "b", {{"b", 1}}}});
  const auto av = check_identity(anti);
  REQUIRE_FALSE(av.empty());
  CHECK(av.front().identity == "antisymmetry");
}

TEST_CASE("dialgebra axioms detect violations") {
  // ⊣ associative but D1 fails: x⊣(x⊣x) = 0, x⊣(x⊢x) = x⊣y = z
  const Algebra d = make_algebra(AlgebraType::diassociative, {"x", "y", "z"}, {{"x", "y", {{"z", 1}}}},
                                 {{"x", "x", {{"y", 1}}}});
  const auto v = check_identity(d);
  REQUIRE_FALSE(v.empty());
  bool saw_d1 = false;
  for (const auto& x : v) saw_d1 |= x.identity == "D1";
  CHECK(saw_d1);
  CHECK_FALSE(test::identities_hold_on_basis(d));

  // E2: (x>y)<z = x>(y<z)
  const Algebra en = make_algebra(AlgebraType::dendriform, {"x", "y", "z"}, {{"y", "x", {{"z", 1}}}},
                                  {{"x", "x", {{"y", 1}}}});
  CHECK_FALSE(check_identity(en).empty());
  CHECK_FALSE(test::identities_hold_on_basis(en));
}

TEST_CASE("property: check_identity agrees with the multiply-based oracle") {
  for (auto type : {AlgebraType::lie, AlgebraType::leibniz, AlgebraType::associative, AlgebraType::commutative,
                    AlgebraType::zinbiel, AlgebraType::diassociative, AlgebraType::dendriform}) {
    Rng rng(1000 + static_cast<int>(type));
    int valid = 0, invalid = 0;
    for (int iter = 0; iter < 150; ++iter) {
      const std::size_t n = 2 + rng.below(3);
      std::vector<ProductTable> tables;
      for (std::size_t p = 0; p < arity(type); ++p) {
        ProductTable t(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Vec v(n);
            // strictly upper-triangular targets keep a fair share valid
            for (std::size_t k = std::max(i, j) + 1; k < n; ++k)
              if (rng.chance(0.3)) v[k] = rng.coefficient();
            t.set(i, j, v);
          }
        tables.push_back(t);
      }
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
      const Algebra a(type, names, tables);
      const bool ok = check_identity(a).empty();
      CHECK(ok == test::identities_hold_on_basis(a));
      CHECK(ok == satisfies_identities(a));
      (ok ? valid : invalid)++;
      if (ok) {
        // multilinearity: holds on random elements too
        for (int r = 0; r < 3; ++r)
          CHECK(test::identities_hold_at(a, random_vec(rng, n, 0.7), random_vec(rng, n, 0.7), random_vec(rng, n, 0.7)));
      }
    }
    CAPTURE(to_string(type));
    CHECK(valid > 0);
  }
}

TEST_CASE("property: identity checking is basis-order independent") {
  Rng rng(5);
  std::vector<Algebra> algs;
  for (const auto& c : corpus::builtin()) algs.push_back(c.algebra);
  algs.push_back(make_algebra(AlgebraType::leibniz, {"x", "y", "z"}, {{"x", "x", {{"y", 1}}}, {"y", "x", {{"z", 1}}}}));
  for (const auto& a : algs) {
    const bool ok = check_identity(a).empty();
    for (int r = 0; r < 5; ++r) {
      std::vector<std::size_t> perm(a.dim());
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      const Algebra b = permuted(a, perm);
      CHECK(check_identity(b).empty() == ok);
      CHECK(nilpotency_series(b).dims() == nilpotency_series(a).dims());
    }
  }
}

TEST_CASE("subspace products") {
  const Algebra l1 = corpus::example1_L1();
  const Subspace whole = Subspace::full(4);
  CHECK(subspace_product(l1, 0, whole, whole) == span_of(l1, {"x", "y", "z"}));
  CHECK(subspace_product(l1, 0, span_of(l1, {"w"}), Subspace::zero(4)).is_zero());
  const Algebra l3 = corpus::example3_Lphi();
  CHECK(subspace_product(l3, 0, whole, whole) == span_of(l3, {"z"}));
}

TEST_CASE("lozenge") {
  const Algebra d = corpus::example2_Lphi();
  const Subspace whole = Subspace::full(4);
  CHECK(lozenge(d, whole, whole) == span_of(d, {"x", "y"}));
  CHECK(lozenge(d, Subspace::zero(4), whole).is_zero());
  CHECK(lozenge(d, whole, span_of(d, {"x", "y"})).is_zero());
  CHECK_THROWS_AS(lozenge(corpus::example1_L1(), whole, whole), DimensionError);
}

TEST_CASE("lower central series") {
  CHECK(lcs(corpus::example1_L1()).dims() == dims({4, 3, 2, 1, 0}));
  CHECK(lcs(corpus::example1_L2()).dims() == dims({4, 2, 1, 0}));
  CHECK(lcs(Algebra::abelian(AlgebraType::leibniz, {"a", "b", "c"})).dims() == dims({3, 0}));
  const Chain c = lcs(corpus::example1_L1());
  CHECK(c.stabilized);
  CHECK(c.terms[1] == span_of(corpus::example1_L1(), {"x", "y", "z"}));
  CHECK(c.terms[2] == span_of(corpus::example1_L1(), {"y", "z"}));
  CHECK(c.terms[3] == span_of(corpus::example1_L1(), {"z"}));
  CHECK(lcs(corpus::heisenberg(2)).dims() == dims({5, 1, 0}));
  CHECK(lcs(corpus::truncated_polynomial(4)).dims() == dims({4, 3, 2, 1, 0}));
  CHECK_THROWS_AS(lcs(corpus::example2_Lphi()), DimensionError);
}

TEST_CASE("diassociative series") {
  for (auto kind : {SeriesKind::left, SeriesKind::right, SeriesKind::general}) {
    CHECK(dia_series(corpus::example2_Lphi(), kind).dims() == dims({4, 2, 0}));
    CHECK(dia_series(corpus::example2_Lab(), kind).dims() == dims({4, 0}));
    CHECK(dia_series(Algebra::abelian(AlgebraType::dendriform, {"a", "b"}), kind).dims() == dims({2, 0}));
  }
  CHECK_THROWS_AS(dia_series(corpus::example1_L1(), SeriesKind::left), DimensionError);
}

TEST_CASE("nilpotency index") {
  CHECK(nilpotency_index(lcs(corpus::example1_L1())) == 4u);
  CHECK(nilpotency_index(lcs(Algebra::abelian(AlgebraType::leibniz, {}))) == 0u);
  const Algebra idem = make_algebra(AlgebraType::associative, {"x"}, {{"x", "x", {{"x", 1}}}});
  const Chain c = lcs(idem);
  CHECK(c.dims() == dims({1}));
  CHECK(c.stabilized);
  CHECK_FALSE(nilpotency_index(c));
}

TEST_CASE("multiplication operators") {
  const Algebra a = corpus::example3_A();
  auto [l, r] = mult_ops(a, 0, scaled(-1, e(a, "x")));
  CHECK(l(e(a, "x")) == scaled(-1, e(a, "z")));
  CHECK(is_zero(l(e(a, "y"))));
  CHECK(is_zero(l(e(a, "z"))));
  auto [l2, r2] = mult_ops(a, 0, e(a, "x"));
  CHECK(r2(e(a, "x")) == e(a, "z"));
  CHECK(is_zero(r2(e(a, "y"))));
  auto [l0, r0] = mult_ops(a, 0, zero_vec(3));
  CHECK(l0.matrix.is_zero());
  CHECK(r0.matrix.is_zero());
}

TEST_CASE("derivations") {
  const Algebra a = corpus::example3_A();
  CHECK(is_derivation(a, LinMap::zero(3)));
  LinMap d = LinMap::zero(3);
  d.matrix(0, 0) = 1;  // x -> x
  CHECK_FALSE(is_derivation(a, d));
  // x -> y, y -> z on an abelian algebra
  LinMap phi = LinMap::zero(3);
  phi.matrix(1, 0) = 1;
  phi.matrix(2, 1) = 1;
  CHECK(is_derivation(corpus::example1_A(), phi));
  // left multiplications of a Leibniz algebra are derivations
  const Algebra h = corpus::heisenberg_leibniz();
  for (std::size_t i = 0; i < h.dim(); ++i) CHECK(is_derivation(h, mult_ops(h, 0, unit_vec(h.dim(), i)).first));
}

TEST_CASE("ideal closure") {
  const Algebra a1 = corpus::example1_A();
  CHECK(ideal_closure(a1, Subspace::zero(3)).is_zero());
  LinMap phi = LinMap::zero(3);
  phi.matrix(1, 0) = 1;
  phi.matrix(2, 1) = 1;
  CHECK(ideal_closure(a1, span_of(a1, {"y", "z"}), {phi}) == span_of(a1, {"y", "z"}));
  CHECK(ideal_closure(a1, span_of(a1, {"x"}), {phi}) == Subspace::full(3));
  const Algebra a3 = corpus::example3_A();
  CHECK(ideal_closure(a3, span_of(a3, {"x"})) == span_of(a3, {"x", "z"}));
  CHECK(is_ideal(a3, span_of(a3, {"x", "z"})));
  CHECK_FALSE(is_ideal(a3, span_of(a3, {"x"})));
}

TEST_CASE("property: products monotone, closure idempotent and monotone") {
  Rng rng(99);
  const std::vector<Algebra> algs{corpus::example1_L1(), corpus::example3_Lphi(), corpus::heisenberg(2),
                                  corpus::truncated_polynomial(5), corpus::example2_Lphi()};
  for (int iter = 0; iter < 150; ++iter) {
    const Algebra& a = algs[rng.below(algs.size())];
    const std::size_t n = a.dim();
    const Subspace u = test::random_subspace(rng, n, 3);
    const Subspace v = test::random_subspace(rng, n, 3);
    const Subspace w = subspace_sum(v, test::random_subspace(rng, n, 2));
    for (std::size_t p = 0; p < a.arity(); ++p) {
      CHECK(subspace_leq(subspace_product(a, p, u, v), subspace_product(a, p, u, w)));
      CHECK(subspace_leq(subspace_product(a, p, v, u), subspace_product(a, p, w, u)));
    }
    const Subspace cv = ideal_closure(a, v);
    CHECK(ideal_closure(a, cv) == cv);
    CHECK(subspace_leq(cv, ideal_closure(a, w)));
    CHECK(subspace_leq(v, cv));
    CHECK(is_ideal(a, cv));
  }
}

TEST_CASE("left norming and series equality on the corpus") {
  for (const auto& entry : corpus::builtin()) {
    CAPTURE(entry.name);
    const auto& a = entry.algebra;
    if (a.type() == AlgebraType::leibniz || a.type() == AlgebraType::lie) CHECK(verify_left_norming(a).passed());
    if (a.arity() == 2) CHECK(verify_series_equality(a).passed());
    // chains descend strictly until they stop
    const auto d = nilpotency_series(a).dims();
    for (std::size_t k = 1; k < d.size(); ++k) CHECK(d[k] < d[k - 1]);
    CHECK(d.size() <= a.dim() + 1);
  }
}
