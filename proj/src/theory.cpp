#include "nilp/theory.hpp"

#include "nilp/errors.hpp"
#include "nilp/io.hpp"

#include <algorithm>

namespace nilp {

namespace {

json class_json(const std::optional<std::size_t>& c) { return c ? json(*c) : json("non-nilpotent"); }

json dims_json(const Chain& c) { return c.dims(); }

}  // namespace

Chain a_sequence(const ExtensionData& ext) {
  const Subspace whole_l = Subspace::full(ext.L.dim());
  return descending_chain(Subspace::full(ext.A.dim()), [&](const std::vector<Subspace>& t) {
    const Subspace s = ext.push(t.back());
    return ext.pull(subspace_sum(all_products(ext.L, s, whole_l), all_products(ext.L, whole_l, s)));
  });
}

GammaContext gamma_context(const ExtensionData& ext) { return {ext.A, ext.B, extract_lift(ext)}; }

Subspace gamma_step(const GammaContext& ctx, const Subspace& N) {
  if (!is_B_invariant(ctx.A, ctx.lift, N))
    throw CertifiedError("N is not B-invariant", {{"reason", "not-B-invariant"}, {"N", subspace_to_json(ctx.A.basis_names(), N)}});
  const Subspace whole = Subspace::full(ctx.A.dim());
  std::vector<Vec> seed = subspace_sum(all_products(ctx.A, whole, N), all_products(ctx.A, N, whole)).basis_vectors();
  const auto maps = ctx.lift.all_maps();
  for (const auto& m : maps)
    for (const auto& n : N.basis_vectors()) seed.push_back(m(n));
  Subspace g = ideal_closure(ctx.A, span(seed, ctx.A.dim()), maps);
  if (!subspace_leq(g, N))
    throw CertifiedError("Gamma(N) is not contained in N", {{"reason", "gamma-not-descending"},
                                                            {"N", subspace_to_json(ctx.A.basis_names(), N)},
                                                            {"gamma", subspace_to_json(ctx.A.basis_names(), g)}});
  return g;
}

Chain gamma_sequence(const GammaContext& ctx) {
  return descending_chain(Subspace::full(ctx.A.dim()),
                          [&](const std::vector<Subspace>& t) { return gamma_step(ctx, t.back()); });
}

std::optional<std::size_t> b_nilpotency_class(const GammaContext& ctx) { return nilpotency_index(gamma_sequence(ctx)); }

TheoremReport verify_sandwich(const ExtensionData& ext) {
  TheoremReport r("sandwich");
  const auto s = nilpotency_index(nilpotency_series(ext.B));
  r.params["nil_B"] = class_json(s);
  if (!s) {
    r.verdict = Verdict::hypothesis_unmet;
    return r;
  }
  const Chain lc = nilpotency_series(ext.L);
  const Chain ac = a_sequence(ext);
  r.params["L_dims"] = dims_json(lc);
  r.params["A_dims"] = dims_json(ac);
  const std::size_t kmax = std::max(lc.terms.size(), ac.terms.size()) + 1;
  for (std::size_t k = 0; k <= kmax; ++k) {
    const Subspace sa = ext.push(ac.at(k));
    const bool lower = subspace_leq(lc.at(k + *s), sa);
    const bool upper = subspace_leq(sa, lc.at(k));
    CheckResult c{"L^{k+s} <= sigma(A_k) <= L^k", k, lower && upper, json::object()};
    if (!c.passed)
      c.detail = {{"lower", lower}, {"upper", upper}, {"sigma_A_k", subspace_to_json(ext.L.basis_names(), sa)}};
    r.add(std::move(c));
  }
  const bool l_nil = nilpotency_index(lc).has_value();
  const bool a_zero = ac.terms.back().is_zero();
  r.add({"L nilpotent iff some A_k = 0", std::nullopt, l_nil == a_zero, {{"L_nilpotent", l_nil}, {"A_k_zero", a_zero}}});
  r.finalize();
  return r;
}

TheoremReport verify_ak_equals_gamma(const ExtensionData& ext) {
  TheoremReport r("ak-gamma");
  const Chain ac = a_sequence(ext);
  const Chain gc = gamma_sequence(gamma_context(ext));
  r.params["A_dims"] = dims_json(ac);
  r.params["gamma_dims"] = dims_json(gc);
  const std::size_t kmax = std::max(ac.terms.size(), gc.terms.size());
  for (std::size_t k = 0; k < kmax; ++k) {
    CheckResult c{"A_k = Gamma_k^B A", k, ac.at(k) == gc.at(k), json::object()};
    if (!c.passed)
      c.detail = {{"A_k", subspace_to_json(ext.A.basis_names(), ac.at(k))},
                  {"gamma_k", subspace_to_json(ext.A.basis_names(), gc.at(k))}};
    r.add(std::move(c));
  }
  r.finalize();
  return r;
}

TheoremReport verify_nil_bounds(const ExtensionData& ext) {
  TheoremReport r("bounds");
  const auto nil_l = nilpotency_index(nilpotency_series(ext.L));
  const auto nil_b = nilpotency_index(nilpotency_series(ext.B));
  const auto nil_ba = b_nilpotency_class(gamma_context(ext));
  r.params["nil_L"] = class_json(nil_l);
  r.params["nil_B"] = class_json(nil_b);
  r.params["nil_B_A"] = class_json(nil_ba);
  if (nil_l && nil_b && nil_ba) {
    r.add({"max(nil_B A, nil B) <= nil L", std::nullopt, std::max(*nil_ba, *nil_b) <= *nil_l, json::object()});
    r.add({"nil L <= nil_B A + nil B", std::nullopt, *nil_l <= *nil_ba + *nil_b, json::object()});
  }
  const bool criterion = nil_b.has_value() && nil_ba.has_value();
  r.add({"L nilpotent iff B nilpotent and Gamma_u^B A = 0", std::nullopt, nil_l.has_value() == criterion,
         {{"L_nilpotent", nil_l.has_value()}, {"criterion", criterion}}});
  r.finalize();
  return r;
}

TheoremReport verify_main_theorem(const Algebra& A, const Algebra& B, const FactorSystem& fs1, const FactorSystem& fs2) {
  TheoremReport r("main");
  const auto w = lifts_differ_by_adjoints(A, fs1.lift, fs2.lift);
  if (!w) {
    r.verdict = Verdict::hypothesis_unmet;
    r.params["reason"] = "lifts do not differ by adjoint operators";
    return r;
  }
  json wj = json::array();
  for (const auto& slot : *w) {
    json sj = json::array();
    for (const auto& m : slot) sj.push_back(vec_to_json(A.basis_names(), m));
    wj.push_back(std::move(sj));
  }
  r.params["witnesses"] = wj;
  const auto e1 = build_extension_algebra(A, B, fs1);
  const auto e2 = build_extension_algebra(A, B, fs2);
  const auto c1 = nilpotency_index(nilpotency_series(e1.algebra));
  const auto c2 = nilpotency_index(nilpotency_series(e2.algebra));
  r.params["class_1"] = class_json(c1);
  r.params["class_2"] = class_json(c2);
  r.add({"L_1 nilpotent iff L_2 nilpotent", std::nullopt, c1.has_value() == c2.has_value(), json::object()});
  r.finalize();
  return r;
}

TheoremReport verify_gamma_lift_independence(const GammaContext& ctx, const AdjointWitnesses& witnesses) {
  TheoremReport r("gamma-lift-independence");
  const GammaContext other{ctx.A, ctx.B, add_adjoints(ctx.A, ctx.lift, witnesses)};
  const Chain g1 = gamma_sequence(ctx);
  const Chain g2 = gamma_sequence(other);
  r.params["dims_1"] = dims_json(g1);
  r.params["dims_2"] = dims_json(g2);
  const std::size_t kmax = std::max(g1.terms.size(), g2.terms.size());
  for (std::size_t k = 0; k < kmax; ++k) {
    r.add({"Gamma_k equal for both lifts", k, g1.at(k) == g2.at(k), json::object()});
    r.add({"Gamma_k B-invariant under both lifts", k,
           is_B_invariant(ctx.A, ctx.lift, g1.at(k)) && is_B_invariant(ctx.A, other.lift, g1.at(k)), json::object()});
  }
  r.finalize();
  return r;
}

TheoremReport verify_round_trip(const ExtensionData& ext) {
  TheoremReport r("round-trip");
  try {
    const Matrix tau = reconstruction_iso(ext);
    r.params["tau"] = matrix_to_json(tau);
    r.add({"tau is an equivalence of extensions", std::nullopt, true, json::object()});
  } catch (const CertifiedError& e) {
    r.add({"tau is an equivalence of extensions", std::nullopt, false, e.certificate()});
  }
  r.finalize();
  return r;
}

TheoremReport verify_left_norming(const Algebra& alg) {
  TheoremReport r("left-norming");
  const Chain c = lcs(alg);
  const Subspace whole = Subspace::full(alg.dim());
  r.params["dims"] = dims_json(c);
  for (std::size_t n = 0; n < c.terms.size(); ++n)
    r.add({"L^n L <= L^{n+1}", n, subspace_leq(subspace_product(alg, 0, c.at(n), whole), c.at(n + 1)), json::object()});
  r.finalize();
  return r;
}

TheoremReport verify_series_equality(const Algebra& alg) {
  TheoremReport r("series-equality");
  const Chain left = dia_series(alg, SeriesKind::left);
  const Chain right = dia_series(alg, SeriesKind::right);
  const Chain general = dia_series(alg, SeriesKind::general);
  r.params["left_dims"] = dims_json(left);
  r.params["right_dims"] = dims_json(right);
  r.params["general_dims"] = dims_json(general);
  const std::size_t kmax = std::max({left.terms.size(), right.terms.size(), general.terms.size()});
  for (std::size_t k = 0; k < kmax; ++k)
    r.add({"D^{{k}} = D^{<k>} = D^k", k, left.at(k) == right.at(k) && right.at(k) == general.at(k), json::object()});
  r.finalize();
  return r;
}

}  // namespace nilp
