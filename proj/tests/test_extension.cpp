#include "helpers.hpp"

#include "nilp/corpus.hpp"
#include "nilp/errors.hpp"
#include "nilp/extension.hpp"
#include "nilp/io.hpp"
#include "nilp/theory.hpp"

#include <doctest.h>

using namespace nilp;
using test::e;
using test::span_of;

namespace {

// φ(w): x -> y, y -> z on A = <x, y, z>.
LinMap example1_phi() {
  LinMap m = LinMap::zero(3);
  m.matrix(1, 0) = 1;
  m.matrix(2, 1) = 1;
  return m;
}

FactorSystem example1_fs(bool with_cocycle) {
  FactorSystem fs = FactorSystem::zero(1, 3, 1);
  fs.lift.slots[0][0] = example1_phi();
  if (with_cocycle) fs.f(0, 0, 0) = test::v({1, 0, 0});
  return fs;
}

// Direct sum with B's basis first: L = <w, x, y, z>, all cross products zero.
ExtensionData split_example() {
  const Algebra L = Algebra::abelian(AlgebraType::leibniz, {"w", "x", "y", "z"});
  Matrix sigma(4, 3);
  for (std::size_t i = 0; i < 3; ++i) sigma(i + 1, i) = 1;
  return make_extension(L, corpus::example1_A(), sigma);
}

}  // namespace

TEST_CASE("make_extension: Example 1 quotient") {
  const ExtensionData ext = corpus::example1_extension(corpus::example1_L1());
  CHECK(ext.B.dim() == 1);
  CHECK(ext.B.basis_names() == std::vector<std::string>{"w"});
  CHECK(ext.B.table(0).is_zero());
  CHECK(ext.pi == test::m({{0, 0, 0, 1}}));
  CHECK(ext.section == test::m({{0}, {0}, {0}, {1}}));
  CHECK(ext.pi * ext.section == Matrix::identity(1));
  CHECK(ext.pi * ext.sigma == Matrix(1, 3));
}

TEST_CASE("make_extension: Example 2 quotient") {
  const ExtensionData ext = corpus::example2_extension(corpus::example2_Lphi());
  CHECK(ext.B.basis_names() == std::vector<std::string>{"u", "v"});
  CHECK(ext.B.table(0).is_zero());
  CHECK(ext.B.table(1).is_zero());
}

TEST_CASE("make_extension: split extension has a homomorphic section") {
  const ExtensionData ext = split_example();
  CHECK(ext.B.basis_names() == std::vector<std::string>{"w"});
  const Vec tw = ext.section.col(0);
  CHECK(multiply(ext.L, 0, tw, tw) == ext.section.apply(ext.B.table(0).at(0, 0)));
}

TEST_CASE("make_extension: non-pivot complement for a skew embedding") {
  // σ(A) = <x + w> inside the abelian L = <x, w>; the complement is <w>.
  const Algebra L = Algebra::abelian(AlgebraType::associative, {"x", "w"});
  const Algebra A = Algebra::abelian(AlgebraType::associative, {"a"});
  const ExtensionData ext = make_extension(L, A, test::m({{1}, {1}}));
  CHECK(ext.B.basis_names() == std::vector<std::string>{"w"});
  CHECK(ext.pi == test::m({{-1, 1}}));
  CHECK(ext.pi * ext.sigma == Matrix(1, 1));
  CHECK(ext.pi * ext.section == Matrix::identity(1));
}

TEST_CASE("make_extension errors carry certificates") {
  const Algebra L1 = corpus::example1_L1();
  // not injective
  CHECK_THROWS_AS(make_extension(L1, corpus::example1_A(), Matrix(4, 3)), CertifiedError);
  // image <y, z, w> is not an ideal: w w = x
  Matrix sigma(4, 3);
  sigma(1, 0) = 1;
  sigma(2, 1) = 1;
  sigma(3, 2) = 1;
  try {
    make_extension(L1, corpus::example1_A(), sigma);
    FAIL("expected an error");
  } catch (const CertifiedError& err) {
    // A is abelian but σ(z)σ(z) = ww = x ≠ 0, so the homomorphism check fires first
    CHECK(err.certificate().at("reason") == "sigma-not-homomorphism");
  }
  // <x> is not an ideal of L1 (w x = y), though x x = 0 so σ is a homomorphism
  Matrix sx(4, 1);
  sx(0, 0) = 1;
  try {
    make_extension(L1, Algebra::abelian(AlgebraType::leibniz, {"a"}), sx);
    FAIL("expected an error");
  } catch (const CertifiedError& err) {
    CHECK(err.certificate().at("reason") == "image-not-ideal");
    CHECK(err.certificate().at("L_element") == "w");
  }
  // bad section
  CHECK_THROWS_AS(make_extension(L1, corpus::example1_A(), corpus::example1_extension(L1).sigma, test::m({{0}, {0}, {0}, {2}})),
                  CertifiedError);
  // type mismatch
  CHECK_THROWS_AS(make_extension(L1, corpus::example3_A(AlgebraType::associative), corpus::example1_extension(L1).sigma),
                  CertifiedError);
}

TEST_CASE("extract_lift: worked examples") {
  const Lift l1 = extract_lift(corpus::example1_extension(corpus::example1_L1()));
  CHECK(l1.slots[0][0] == example1_phi());
  CHECK(l1.slots[1][0].matrix.is_zero());

  const Lift l2 = extract_lift(corpus::example2_extension(corpus::example2_Lphi()));
  REQUIRE(l2.slots.size() == 4);
  for (const auto& slot : l2.slots)
    for (const auto& m : slot) CHECK(m.matrix.is_zero());

  const Algebra A3 = corpus::example3_A();
  const Lift l3 = extract_lift(corpus::example3_extension(corpus::example3_Lphi()));
  CHECK(l3.slots[0][0](e(A3, "x")) == scaled(-1, e(A3, "z")));
  CHECK(l3.slots[1][0](e(A3, "x")) == e(A3, "z"));
  for (const char* n : {"y", "z"}) {
    CHECK(is_zero(l3.slots[0][0](e(A3, n))));
    CHECK(is_zero(l3.slots[1][0](e(A3, n))));
  }
}

TEST_CASE("extract_factor_system") {
  const FactorSystem f1 = extract_factor_system(corpus::example1_extension(corpus::example1_L1()));
  CHECK(f1.f(0, 0, 0) == test::v({1, 0, 0}));
  CHECK(f1 == example1_fs(true));

  const FactorSystem fsplit = extract_factor_system(split_example());
  for (const auto& v : fsplit.cocycles[0]) CHECK(is_zero(v));

  // Example 2: grid index is i * 2 + j with u = 0, v = 1
  const FactorSystem f2 = extract_factor_system(corpus::example2_extension(corpus::example2_Lphi()));
  const Vec x = test::v({1, 0}), y = test::v({0, 1}), xy = test::v({1, 1}), zero = test::v({0, 0});
  CHECK(f2.f(0, 0, 0) == x);
  CHECK(f2.f(1, 0, 0) == xy);
  CHECK(f2.f(0, 1, 1) == y);
  CHECK(f2.f(1, 1, 1) == xy);
  CHECK(f2.f(1, 0, 1) == xy);
  CHECK(f2.f(1, 1, 0) == xy);
  CHECK(f2.f(0, 0, 1) == zero);
  CHECK(f2.f(0, 1, 0) == zero);
}

TEST_CASE("build_extension_algebra") {
  const Algebra A = corpus::example1_A(), B = corpus::example1_B();
  const auto ab = build_extension_algebra(A, B, FactorSystem::zero(1, 3, 1));
  CHECK(ab.algebra.table(0).is_zero());

  // products w² = x, wx = y, wy = z on basis (x, y, z, w)
  CHECK(build_extension_algebra(A, B, example1_fs(true)).algebra == corpus::example1_L1());
  CHECK(build_extension_algebra(A, B, example1_fs(false)).algebra == corpus::example1_L2());

  const auto built = build_extension_algebra(A, B, example1_fs(true));
  CHECK(built.extension.sigma == test::m({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(built.extension.section == test::m({{0}, {0}, {0}, {1}}));

  // diassociative rebuild reproduces L_φ
  const auto d = build_extension_algebra(corpus::example2_A(), corpus::example2_B(),
                                         extract_factor_system(corpus::example2_extension(corpus::example2_Lphi())));
  CHECK(d.algebra == corpus::example2_Lphi());
}

TEST_CASE("build_extension_algebra: operational cocycle gate") {
  const Algebra A = corpus::example1_A(), B = corpus::example1_B();
  // φ′(w): x -> y on top of Example 1: w(ww) = y but (ww)w + w(ww) = 2y
  FactorSystem bad = example1_fs(true);
  bad.lift.slots[1][0].matrix(1, 0) = 1;
  try {
    build_extension_algebra(A, B, bad);
    FAIL("expected an invalid factor system");
  } catch (const CertifiedError& err) {
    const auto& c = err.certificate();
    CHECK(c.at("reason") == "invalid-factor-system");
    // x(ww) = 0 but (xw)w + w(xw) = z; w(xw) = z but (wx)w + x(ww) = 0;
    // w(ww) = y but (ww)w + w(ww) = 2y
    const json expected = json::array({{{"identity", "leibniz"},
                                        {"basis", {"x", "w", "w"}},
                                        {"lhs", json::object()},
                                        {"rhs", {{"z", "1"}}}},
                                       {{"identity", "leibniz"},
                                        {"basis", {"w", "x", "w"}},
                                        {"lhs", {{"z", "1"}}},
                                        {"rhs", json::object()}},
                                       {{"identity", "leibniz"},
                                        {"basis", {"w", "w", "w"}},
                                        {"lhs", {{"y", "1"}}},
                                        {"rhs", {{"y", "2"}}}}});
    CHECK(c.at("violations") == expected);
  }
  // φ(w): x -> y, y -> 0 with f(w,w) = x is the valid algebra w² = x, wx = y.
  FactorSystem truncated = example1_fs(true);
  truncated.lift.slots[0][0].matrix(2, 1) = 0;
  const Algebra expected = make_algebra(AlgebraType::leibniz, {"x", "y", "z", "w"},
                                        {{"w", "w", {{"x", 1}}}, {"w", "x", {{"y", 1}}}});
  CHECK(build_extension_algebra(A, B, truncated).algebra == expected);

  FactorSystem misshapen = example1_fs(true);
  misshapen.cocycles[0].pop_back();
  CHECK_THROWS_AS(build_extension_algebra(A, B, misshapen), DimensionError);
}

TEST_CASE("reconstruction_iso") {
  // split: τ reorders (w, x, y, z) into (x, y, z | w)
  const Matrix tau = reconstruction_iso(split_example());
  CHECK(tau == test::m({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}));
  CHECK(reconstruction_iso(corpus::example1_extension(corpus::example1_L1())) == Matrix::identity(4));
  CHECK(reconstruction_iso(corpus::example2_extension(corpus::example2_Lphi())) == Matrix::identity(4));
  // a non-canonical section exercises the σ⁻¹(x − Tπx) component
  const ExtensionData skew = make_extension(corpus::example3_Lphi(), corpus::example3_A(),
                                            corpus::example3_extension(corpus::example3_Lphi()).sigma,
                                            test::m({{1}, {2}, {0}, {1}}));
  const Matrix t2 = reconstruction_iso(skew);
  CHECK(rank(t2) == 4);
  CHECK(t2.col(3) == test::v({-1, -2, 0, 1}));
}

TEST_CASE("lifts_differ_by_adjoints") {
  const Algebra A3 = corpus::example3_A();
  const Lift phi = extract_lift(corpus::example3_extension(corpus::example3_Lphi()));
  const Lift psi = extract_lift(corpus::example3_extension(corpus::example3_Lpsi()));
  CHECK(psi == Lift::zero(1, 3, 1));

  const auto same = lifts_differ_by_adjoints(A3, phi, phi);
  REQUIRE(same);
  for (const auto& slot : *same)
    for (const auto& m : slot) CHECK(is_zero(m));

  const auto w = lifts_differ_by_adjoints(A3, phi, psi);
  REQUIRE(w);
  CHECK((*w)[0][0] == scaled(-1, e(A3, "x")));
  CHECK((*w)[1][0] == e(A3, "x"));
  CHECK(add_adjoints(A3, psi, *w) == phi);

  // no nonzero adjoint exists on an abelian algebra
  const Lift l1 = extract_lift(corpus::example1_extension(corpus::example1_L1()));
  CHECK_FALSE(lifts_differ_by_adjoints(corpus::example1_A(), l1, Lift::zero(1, 3, 1)));

  CHECK_THROWS_AS(lifts_differ_by_adjoints(A3, phi, Lift::zero(1, 3, 2)), DimensionError);
}

TEST_CASE("property: adjoint congruence is an equivalence relation") {
  Rng rng(31);
  const std::vector<Algebra> algs{corpus::example3_A(), corpus::heisenberg_leibniz(), corpus::truncated_polynomial(4),
                                  corpus::dias_from_associative(corpus::truncated_polynomial(3))};
  for (int iter = 0; iter < 80; ++iter) {
    const Algebra& A = algs[rng.below(algs.size())];
    const std::size_t ar = A.arity(), n = A.dim(), db = 1 + rng.below(2);
    Lift base = Lift::zero(ar, n, db);
    for (auto& slot : base.slots)
      for (auto& m : slot)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (rng.chance(0.3)) m.matrix(r, c) = rng.coefficient();
    const auto wit = [&] {
      AdjointWitnesses w(2 * ar);
      for (auto& s : w)
        for (std::size_t i = 0; i < db; ++i) s.push_back(random_vec(rng, n, 0.5));
      return w;
    };
    const Lift l2 = add_adjoints(A, base, wit());
    const Lift l3 = add_adjoints(A, l2, wit());

    const auto refl = lifts_differ_by_adjoints(A, base, base);
    REQUIRE(refl);
    const auto w12 = lifts_differ_by_adjoints(A, base, l2);
    const auto w21 = lifts_differ_by_adjoints(A, l2, base);
    const auto w23 = lifts_differ_by_adjoints(A, l2, l3);
    const auto w13 = lifts_differ_by_adjoints(A, base, l3);
    REQUIRE(w12);
    REQUIRE(w21);
    REQUIRE(w23);
    REQUIRE(w13);
    for (std::size_t s = 0; s < 2 * ar; ++s)
      for (std::size_t i = 0; i < db; ++i) {
        CHECK(is_zero((*refl)[s][i]));
        CHECK((*w21)[s][i] == scaled(-1, (*w12)[s][i]));
        CHECK((*w13)[s][i] == add((*w12)[s][i], (*w23)[s][i]));
      }
    CHECK(add_adjoints(A, l2, *w12) == base);

    // B-invariance does not depend on the lift
    const Subspace N = ideal_closure(A, test::random_subspace(rng, n, 2));
    CHECK(is_B_invariant(A, base, N) == is_B_invariant(A, l2, N));
  }
}

TEST_CASE("is_B_invariant") {
  const Algebra A = corpus::example1_A();
  const Lift lift = extract_lift(corpus::example1_extension(corpus::example1_L1()));
  CHECK(is_B_invariant(A, lift, Subspace::full(3)));
  CHECK(is_B_invariant(A, lift, Subspace::zero(3)));
  CHECK_FALSE(is_B_invariant(A, lift, span_of(A, {"x"})));
  CHECK(is_B_invariant(A, lift, span_of(A, {"y", "z"})));
  const Algebra A3 = corpus::example3_A();
  CHECK_THROWS_AS(is_B_invariant(A3, Lift::zero(1, 3, 1), span_of(A3, {"x"})), CertifiedError);
}

TEST_CASE("Leibniz lifts act by derivations") {
  const std::vector<ExtensionData> exts{corpus::example1_extension(corpus::example1_L1()),
                                        corpus::example1_extension(corpus::example1_L2()),
                                        corpus::example3_extension(corpus::example3_Lphi()),
                                        corpus::example3_extension(corpus::example3_Lpsi())};
  for (const auto& ext : exts)
  {
    const Lift lift = extract_lift(ext);
    for (const auto& m : lift.slots[0]) CHECK(is_derivation(ext.A, m));
  }
}
