#include "cli.hpp"

#include "nilp/corpus.hpp"
#include "nilp/errors.hpp"
#include "nilp/generate.hpp"
#include "nilp/io.hpp"
#include "nilp/theory.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <sstream>

namespace nilp {

namespace {

namespace fs = std::filesystem;

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

/// A series kind that does not fit the algebra's number of products.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;

  void emit(const json& j) const { out << j.dump(2) << '\n'; }
};

/// "x - 2y + 1/2*z", or "0".
std::string format_vec(const std::vector<std::string>& names, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    Scalar c = v[i];
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (c != 1) os << to_string(c) << (c.get_den() == 1 ? "" : "*");
    os << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_subspace(const std::vector<std::string>& names, const Subspace& s) {
  std::string out = "<";
  const auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? ", " : "") + format_vec(names, basis[i]);
  return out + ">";
}

std::string format_dims(const std::vector<std::size_t>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? ", " : "") + std::to_string(dims[i]);
  return out + "]";
}

void print_algebra(std::ostream& os, const Algebra& alg) {
  static const char* kOps1[] = {"*"};
  static const char* kOps2[] = {"-|", "|-"};
  const auto& names = alg.basis_names();
  os << to_string(alg.type()) << " algebra on " << format_subspace(names, Subspace::full(alg.dim())) << '\n';
  bool any = false;
  for (std::size_t p = 0; p < alg.arity(); ++p)
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j)
        if (!is_zero(alg.table(p).at(i, j))) {
          os << "  " << names[i] << ' ' << (alg.arity() == 1 ? kOps1[0] : kOps2[p]) << ' ' << names[j] << " = "
             << format_vec(names, alg.table(p).at(i, j)) << '\n';
          any = true;
        }
  if (!any) os << "  (all products zero)\n";
}

json class_json(const std::optional<std::size_t>& c) { return c ? json(*c) : json("non-nilpotent"); }

json paper_label_json(const std::optional<std::size_t>& c) { return c ? json(*c + 1) : json("non-nilpotent"); }

Exit report_exit(const std::vector<TheoremReport>& reports) {
  bool unmet = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::fail) return kFail;
    unmet = unmet || r.verdict == Verdict::hypothesis_unmet;
  }
  return unmet ? kInput : kPass;
}

int emit_reports(const Io& io, const std::vector<TheoremReport>& reports) {
  if (io.as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    io.emit({{"reports", arr}});
  } else {
    for (const auto& r : reports) io.out << r.to_text();
  }
  return report_exit(reports);
}

Algebra load_algebra(const std::string& path, bool validate = true) {
  return algebra_from_json(read_json_file(path), validate);
}

// ---------------------------------------------------------------------------

int cmd_check(const Io& io, const std::string& file) {
  const Algebra alg = load_algebra(file, false);
  const auto violations = check_identity(alg);
  if (io.as_json) {
    io.emit({{"file", file},
             {"type", std::string(to_string(alg.type()))},
             {"dim", alg.dim()},
             {"valid", violations.empty()},
             {"violations", violations_to_json(alg, violations)}});
  } else if (violations.empty()) {
    io.out << file << ": " << to_string(alg.type()) << " algebra of dimension " << alg.dim()
           << " satisfies its identities\n";
  } else {
    const auto& names = alg.basis_names();
    io.out << file << ": " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) {
      io.out << "  " << v.identity << " at (";
      for (std::size_t i = 0; i < v.basis.size(); ++i) io.out << (i ? "," : "") << names[v.basis[i]];
      io.out << "): lhs = " << format_vec(names, v.lhs) << ", rhs = " << format_vec(names, v.rhs) << '\n';
    }
    io.out << violations_to_json(alg, violations).dump() << '\n';
  }
  return violations.empty() ? kPass : kFail;
}

int cmd_series(const Io& io, const std::string& file, std::string kind) {
  const Algebra alg = load_algebra(file);
  if (kind.empty()) kind = alg.arity() == 1 ? "lcs" : "general";
  Chain chain;
  if (kind == "lcs") {
    if (alg.arity() != 1) throw UsageError("kind lcs needs a one-product algebra; use left, right or general");
    chain = lcs(alg);
  } else if (kind == "left" || kind == "right" || kind == "general") {
    if (alg.arity() != 2) throw UsageError("kind " + kind + " needs a two-product algebra; use lcs");
    chain = dia_series(alg, kind == "left" ? SeriesKind::left : kind == "right" ? SeriesKind::right : SeriesKind::general);
  } else {
    throw ParseError("unknown series kind \"" + kind + "\"");
  }
  const auto index = nilpotency_index(chain);
  std::optional<TheoremReport> lemma;
  if (alg.arity() == 2) lemma = verify_series_equality(alg);

  if (io.as_json) {
    json j = {{"file", file},
              {"type", std::string(to_string(alg.type()))},
              {"kind", kind},
              {"series", chain_to_json(alg.basis_names(), chain)},
              {"index", class_json(index)},
              {"paper_label", paper_label_json(index)}};
    if (lemma) j["lemma"] = lemma->to_json();
    io.emit(j);
  } else {
    io.out << kind << " series of " << file << '\n';
    for (std::size_t k = 0; k < chain.terms.size(); ++k)
      io.out << "  C_" << k << " (dim " << chain.terms[k].dim() << ") = "
             << format_subspace(alg.basis_names(), chain.terms[k]) << '\n';
    io.out << "dims " << format_dims(chain.dims()) << '\n';
    if (index) {
      io.out << "index " << *index << " (first zero term, C_0 = L); paper_label " << *index + 1 << '\n';
    } else {
      io.out << "not nilpotent: the series stabilizes at a nonzero term\n";
    }
    if (lemma)
      io.out << "lemma: left, right and general series agree: " << to_string(lemma->verdict) << '\n';
  }
  if (lemma && !lemma->passed()) {
    io.out << json{{"certificate", *lemma->certificate}}.dump() << '\n';
    return kFail;
  }
  return kPass;
}

int cmd_extend(const Io& io, const std::string& sub, const std::string& quot, const std::string& fs_file,
               const std::string& out_file) {
  const Algebra A = load_algebra(sub);
  const Algebra B = load_algebra(quot);
  const FactorSystem fs = factor_system_from_json(read_json_file(fs_file), A, B);
  const BuiltExtension built = build_extension_algebra(A, B, fs);
  const json doc = extension_to_json(built.extension);
  if (!out_file.empty()) write_json_file(out_file, doc);
  if (io.as_json || out_file.empty()) {
    io.emit(doc);
  } else {
    print_algebra(io.out, built.algebra);
    io.out << "wrote " << out_file << '\n';
  }
  return kPass;
}

int cmd_extract(const Io& io, const std::string& ext_file, const std::string& out_file) {
  const ExtensionData ext = extension_from_json(read_json_file(ext_file));
  const json doc = factor_system_to_json(ext.A, ext.B, extract_factor_system(ext));
  if (!out_file.empty()) write_json_file(out_file, doc);
  if (io.as_json || out_file.empty()) {
    io.emit(doc);
  } else {
    io.out << "quotient ";
    print_algebra(io.out, ext.B);
    io.out << "wrote " << out_file << '\n';
  }
  return kPass;
}

int cmd_gamma(const Io& io, const std::string& ext_file) {
  const ExtensionData ext = extension_from_json(read_json_file(ext_file));
  const GammaContext ctx = gamma_context(ext);
  const Chain g = gamma_sequence(ctx);
  const Chain a = a_sequence(ext);
  const auto u = b_nilpotency_class(ctx);
  const auto& names = ext.A.basis_names();
  if (io.as_json) {
    io.emit({{"gamma", chain_to_json(names, g)}, {"a_sequence", chain_to_json(names, a)}, {"nil_B_A", class_json(u)}});
  } else {
    for (std::size_t k = 0; k < g.terms.size(); ++k)
      io.out << "Gamma_" << k << " (dim " << g.terms[k].dim() << ") = " << format_subspace(names, g.terms[k]) << '\n';
    io.out << "gamma dims " << format_dims(g.dims()) << ", A_k dims " << format_dims(a.dims()) << '\n';
    io.out << "nil_B A = " << class_json(u).dump() << '\n';
  }
  return kPass;
}

int cmd_verify(const Io& io, const std::string& ext_file, const std::vector<std::string>& theorems) {
  static const std::vector<std::string> kAll{"sandwich", "ak-gamma", "bounds", "round-trip"};
  std::vector<std::string> chosen;
  for (const auto& t : theorems) {
    if (t == "all") {
      chosen = kAll;
      break;
    }
    if (std::find(kAll.begin(), kAll.end(), t) == kAll.end()) throw ParseError("unknown theorem \"" + t + "\"");
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
  }
  const ExtensionData ext = extension_from_json(read_json_file(ext_file));
  std::vector<TheoremReport> reports;
  for (const auto& t : chosen) {
    if (t == "sandwich") reports.push_back(verify_sandwich(ext));
    if (t == "ak-gamma") reports.push_back(verify_ak_equals_gamma(ext));
    if (t == "bounds") reports.push_back(verify_nil_bounds(ext));
    if (t == "round-trip") reports.push_back(verify_round_trip(ext));
  }
  return emit_reports(io, reports);
}

int cmd_main_theorem(const Io& io, const std::string& a, const std::string& b, const std::string& f1,
                     const std::string& f2) {
  const Algebra A = load_algebra(a);
  const Algebra B = load_algebra(b);
  const FactorSystem fs1 = factor_system_from_json(read_json_file(f1), A, B);
  const FactorSystem fs2 = factor_system_from_json(read_json_file(f2), A, B);
  return emit_reports(io, {verify_main_theorem(A, B, fs1, fs2)});
}

// ---------------------------------------------------------------------------

struct FuzzOptions {
  std::string type;
  std::size_t dim = 4;
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  double density = kDefaultDensity;
  std::string out_dir;
};

struct FuzzCase {
  bool passed = true;
  bool fallback = false;
  json record;
};

/// One algebra of the requested dimension plus one extension splitting that
/// dimension into ideal and quotient, with every applicable check.
FuzzCase fuzz_case(AlgebraType type, const FuzzOptions& opt, std::size_t index, std::uint64_t case_seed) {
  FuzzCase out;
  Rng rng(case_seed);
  const std::size_t max_grade = std::max<std::size_t>(2, (opt.dim + 1) / 2);
  json reports = json::array();
  const auto record = [&](const TheoremReport& r) {
    reports.push_back(r.to_json());
    if (!r.passed()) out.passed = false;
  };
  out.record = {{"case", index}, {"seed", case_seed}};
  try {
    Algebra alg;
    try {
      alg = random_nilpotent_algebra(type, opt.dim, max_grade, opt.density, rng.next());
    } catch (const GenerationExhausted&) {
      std::vector<corpus::Entry> same;
      for (auto& e : corpus::load_default())
        if (e.algebra.type() == type) same.push_back(std::move(e));
      if (same.empty()) throw;
      const auto& pick = same[index % same.size()];
      out.fallback = true;
      out.record["fallback"] = pick.name;
      alg = pick.algebra;
    }
    out.record["algebra"] = algebra_to_json(alg);
    const auto violations = check_identity(alg);
    if (!violations.empty()) {
      out.passed = false;
      out.record["violations"] = violations_to_json(alg, violations);
    }
    const Chain series = nilpotency_series(alg);
    out.record["series_dims"] = series.dims();
    if (!nilpotency_index(series)) {
      out.passed = false;
      out.record["non_nilpotent"] = true;
    }
    if (alg.arity() == 2) record(verify_series_equality(alg));
    if (type == AlgebraType::leibniz || type == AlgebraType::lie) record(verify_left_norming(alg));

    if (opt.dim >= 2) {
      const std::size_t da = 1 + rng.below(opt.dim - 1), db = opt.dim - da;
      const Algebra A = random_nilpotent_algebra(type, da, max_grade, opt.density, rng.next());
      const Algebra B = random_nilpotent_algebra(type, db, max_grade, opt.density, rng.next());
      const ExtensionData ext = random_extension(A, B, opt.density, rng.next());
      out.record["extension"] = extension_to_json(ext);
      record(verify_sandwich(ext));
      record(verify_ak_equals_gamma(ext));
      record(verify_nil_bounds(ext));
      record(verify_round_trip(ext));
      const LiftPair pair = random_adjoint_pair(ext, opt.density, rng.next());
      out.record["factor_systems"] = {factor_system_to_json(A, ext.B, pair.first),
                                      factor_system_to_json(A, ext.B, pair.second)};
      record(verify_main_theorem(A, ext.B, pair.first, pair.second));
    }
  } catch (const GenerationExhausted& e) {
    out.passed = false;
    out.record["error"] = e.what();
  } catch (const CertifiedError& e) {
    out.passed = false;
    out.record["error"] = e.what();
    out.record["certificate"] = e.certificate();
  }
  out.record["reports"] = std::move(reports);
  out.record["passed"] = out.passed;
  return out;
}

int cmd_fuzz(const Io& io, const FuzzOptions& opt) {
  const AlgebraType type = parse_algebra_type(opt.type);
  if (opt.dim == 0) throw ParseError("--dim must be at least 1");
  if (!(opt.density >= 0.0 && opt.density <= 1.0)) throw ParseError("--density must lie in [0, 1]");
  if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);

  Rng seeds(opt.seed);
  std::size_t passed = 0, fallbacks = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < opt.cases; ++i) {
    const FuzzCase c = fuzz_case(type, opt, i, seeds.next());
    if (c.fallback) ++fallbacks;
    if (c.passed) {
      ++passed;
      continue;
    }
    failures.push_back(i);
    if (!opt.out_dir.empty()) write_json_file(fs::path(opt.out_dir) / ("case_" + std::to_string(i) + ".json"), c.record);
    if (!io.as_json) io.out << "case " << i << " failed: " << c.record.dump() << '\n';
  }
  const std::size_t failed = opt.cases - passed;
  if (io.as_json) {
    io.emit({{"type", opt.type},
             {"dim", opt.dim},
             {"cases", opt.cases},
             {"seed", opt.seed},
             {"density", opt.density},
             {"passed", passed},
             {"failed", failed},
             {"fallbacks", fallbacks},
             {"failures", failures}});
  } else {
    io.out << "fuzz " << opt.type << " dim " << opt.dim << " seed " << opt.seed << ": " << passed << '/' << opt.cases
           << " pass";
    if (fallbacks) io.out << " (" << fallbacks << " corpus fallbacks)";
    io.out << '\n';
  }
  return failed == 0 ? kPass : kFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotency of Leibniz, diassociative and related algebras and their extensions", "nilp"};
  app.require_subcommand(1);
  Io io{out, err};
  const auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", io.as_json, "Machine-readable JSON output"); };

  std::string file, kind, sub_path, quot_path, fs_path, out_path, ext_path, a_path, b_path, fs1_path, fs2_path;
  std::vector<std::string> theorems{"all"};
  FuzzOptions fuzz;

  auto* check = app.add_subcommand("check", "Check an algebra file against its type's identities");
  check->add_option("file", file, "Algebra JSON file")->required();
  json_flag(check);

  auto* series = app.add_subcommand("series", "Lower central or diassociative series and nilpotency index");
  series->add_option("file", file, "Algebra JSON file")->required();
  series->add_option("--kind", kind, "lcs | left | right | general (default by arity)");
  json_flag(series);

  auto* extend = app.add_subcommand("extend", "Build the extension algebra A (+) B of a factor system");
  extend->add_option("--sub", sub_path, "Ideal A")->required();
  extend->add_option("--quot", quot_path, "Quotient B")->required();
  extend->add_option("--fs", fs_path, "Factor system (lift and cocycles)")->required();
  extend->add_option("-o,--out", out_path, "Write the extension file here");
  json_flag(extend);

  auto* extract = app.add_subcommand("extract", "Extract the lift and cocycles of an extension");
  extract->add_option("--ext", ext_path, "Extension JSON file")->required();
  extract->add_option("-o,--out", out_path, "Write the factor system here");
  json_flag(extract);

  auto* gamma = app.add_subcommand("gamma", "Gamma sequence of the B-action on A");
  gamma->add_option("--ext", ext_path, "Extension JSON file")->required();
  json_flag(gamma);

  auto* verify = app.add_subcommand("verify", "Check the structure theorems on an extension");
  verify->add_option("--ext", ext_path, "Extension JSON file")->required();
  verify->add_option("--theorems", theorems, "sandwich, ak-gamma, bounds, round-trip or all")->delimiter(',');
  json_flag(verify);

  auto* main_thm = app.add_subcommand("main-theorem", "Compare nilpotency of two extensions of the same action");
  main_thm->add_option("--a", a_path, "Ideal A")->required();
  main_thm->add_option("--b", b_path, "Quotient B")->required();
  main_thm->add_option("--fs1", fs1_path, "First factor system")->required();
  main_thm->add_option("--fs2", fs2_path, "Second factor system")->required();
  json_flag(main_thm);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check every theorem on random nilpotent algebras and extensions");
  fuzz_cmd->add_option("--type", fuzz.type, "Algebra type")->required();
  fuzz_cmd->add_option("--dim", fuzz.dim, "Dimension of each generated algebra");
  fuzz_cmd->add_option("--cases", fuzz.cases, "Number of cases");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Seed");
  fuzz_cmd->add_option("--density", fuzz.density, "Structure-constant density in [0, 1]");
  fuzz_cmd->add_option("--out-dir", fuzz.out_dir, "Directory for failing cases");
  json_flag(fuzz_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*check) return cmd_check(io, file);
    if (*series) return cmd_series(io, file, kind);
    if (*extend) return cmd_extend(io, sub_path, quot_path, fs_path, out_path);
    if (*extract) return cmd_extract(io, ext_path, out_path);
    if (*gamma) return cmd_gamma(io, ext_path);
    if (*verify) return cmd_verify(io, ext_path, theorems);
    if (*main_thm) return cmd_main_theorem(io, a_path, b_path, fs1_path, fs2_path);
    if (*fuzz_cmd) return cmd_fuzz(io, fuzz);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const CertifiedError& e) {
    err << "error: " << e.what() << '\n';
    out << json{{"error", e.what()}, {"certificate", e.certificate()}}.dump(2) << '\n';
    return kFail;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

}  // namespace nilp
