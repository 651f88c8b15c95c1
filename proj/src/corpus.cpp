#include "nilp/corpus.hpp"

#include "nilp/errors.hpp"
#include "nilp/io.hpp"

#include <algorithm>
#include <cstdlib>

namespace nilp {

namespace {

ProductTable table_from(const std::vector<std::string>& basis, const std::vector<ProductEntry>& entries) {
  const auto idx = [&](const std::string& n) {
    auto it = std::find(basis.begin(), basis.end(), n);
    if (it == basis.end()) throw ParseError("unknown basis name \"" + n + "\"");
    return static_cast<std::size_t>(it - basis.begin());
  };
  ProductTable t(basis.size());
  for (const auto& e : entries) {
    Vec v(basis.size());
    for (const auto& [name, c] : e.val) v[idx(name)] += c;
    t.set(idx(e.l), idx(e.r), std::move(v));
  }
  return t;
}

Matrix leading_embedding(std::size_t dl, std::size_t da) {
  Matrix s(dl, da);
  for (std::size_t i = 0; i < da; ++i) s(i, i) = 1;
  return s;
}

}  // namespace

Algebra make_algebra(AlgebraType type, std::vector<std::string> basis, const std::vector<ProductEntry>& first,
                     const std::vector<ProductEntry>& second) {
  std::vector<ProductTable> tables{table_from(basis, first)};
  if (arity(type) == 2) tables.push_back(table_from(basis, second));
  return Algebra(type, std::move(basis), std::move(tables));
}

namespace corpus {

Algebra example1_L1() {
  return make_algebra(AlgebraType::leibniz, {"x", "y", "z", "w"},
                      {{"w", "w", {{"x", 1}}}, {"w", "x", {{"y", 1}}}, {"w", "y", {{"z", 1}}}});
}

Algebra example1_L2() {
  return make_algebra(AlgebraType::leibniz, {"x", "y", "z", "w"}, {{"w", "x", {{"y", 1}}}, {"w", "y", {{"z", 1}}}});
}

Algebra example1_A() { return Algebra::abelian(AlgebraType::leibniz, {"x", "y", "z"}); }
Algebra example1_B() { return Algebra::abelian(AlgebraType::leibniz, {"w"}); }

ExtensionData example1_extension(const Algebra& L) { return make_extension(L, example1_A(), leading_embedding(4, 3)); }

Algebra example2_Lphi() {
  const std::vector<std::pair<std::string, Scalar>> xy{{"x", 1}, {"y", 1}};
  return make_algebra(AlgebraType::diassociative, {"x", "y", "u", "v"},
                      {{"u", "u", {{"x", 1}}}, {"v", "v", {{"y", 1}}}},
                      {{"u", "u", xy}, {"v", "v", xy}, {"v", "u", xy}, {"u", "v", xy}});
}

Algebra example2_Lab() { return Algebra::abelian(AlgebraType::diassociative, {"x", "y", "u", "v"}); }
Algebra example2_A() { return Algebra::abelian(AlgebraType::diassociative, {"x", "y"}); }
Algebra example2_B() { return Algebra::abelian(AlgebraType::diassociative, {"u", "v"}); }

ExtensionData example2_extension(const Algebra& L) { return make_extension(L, example2_A(), leading_embedding(4, 2)); }

Algebra example3_Lphi(AlgebraType type) {
  return make_algebra(type, {"x", "y", "z", "w"},
                      {{"x", "x", {{"z", 1}}}, {"y", "y", {{"z", 1}}}, {"x", "w", {{"z", 1}}}, {"w", "x", {{"z", -1}}}});
}

Algebra example3_Lpsi(AlgebraType type) {
  return make_algebra(type, {"x", "y", "z", "w"}, {{"x", "x", {{"z", 1}}}, {"y", "y", {{"z", 1}}}});
}

Algebra example3_A(AlgebraType type) {
  return make_algebra(type, {"x", "y", "z"}, {{"x", "x", {{"z", 1}}}, {"y", "y", {{"z", 1}}}});
}

Algebra example3_B(AlgebraType type) { return Algebra::abelian(type, {"w"}); }

ExtensionData example3_extension(const Algebra& L) {
  return make_extension(L, example3_A(L.type()), leading_embedding(4, 3));
}

Algebra heisenberg(std::size_t n) {
  std::vector<std::string> basis;
  for (std::size_t i = 1; i <= n; ++i) basis.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) basis.push_back("y" + std::to_string(i));
  basis.push_back("z");
  std::vector<ProductEntry> e;
  for (std::size_t i = 1; i <= n; ++i) {
    e.push_back({"x" + std::to_string(i), "y" + std::to_string(i), {{"z", 1}}});
    e.push_back({"y" + std::to_string(i), "x" + std::to_string(i), {{"z", -1}}});
  }
  return make_algebra(AlgebraType::lie, std::move(basis), e);
}

Algebra heisenberg_leibniz() {
  return make_algebra(AlgebraType::leibniz, {"x", "y", "z"},
                      {{"x", "x", {{"z", 1}}}, {"x", "y", {{"z", 1}}}, {"y", "x", {{"z", -1}}}});
}

Algebra truncated_polynomial(std::size_t n, AlgebraType type) {
  std::vector<std::string> basis;
  for (std::size_t i = 1; i <= n; ++i) basis.push_back("x" + std::to_string(i));
  std::vector<ProductEntry> e;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; i + j <= n; ++j)
      e.push_back({"x" + std::to_string(i), "x" + std::to_string(j), {{"x" + std::to_string(i + j), 1}}});
  return make_algebra(type, std::move(basis), e);
}

Algebra dias_from_associative(const Algebra& assoc) {
  return Algebra(AlgebraType::diassociative, assoc.basis_names(), {assoc.table(0), assoc.table(0)});
}

Algebra dendriform_from_associative(const Algebra& assoc) {
  return Algebra(AlgebraType::dendriform, assoc.basis_names(), {assoc.table(0), ProductTable(assoc.dim())});
}

Algebra zinbiel3() {
  return make_algebra(AlgebraType::zinbiel, {"e1", "e2", "e3"},
                      {{"e1", "e1", {{"e2", 1}}}, {"e1", "e2", {{"e3", 1}}}, {"e2", "e1", {{"e3", 2}}}});
}

std::vector<Entry> builtin() {
  const Algebra poly4 = truncated_polynomial(4);
  return {
      {"example1_L1", example1_L1()},
      {"example1_L2", example1_L2()},
      {"example2_Lphi", example2_Lphi()},
      {"example2_Lab", example2_Lab()},
      {"example3_Lphi", example3_Lphi()},
      {"example3_Lpsi", example3_Lpsi()},
      {"example3_Lphi_assoc", example3_Lphi(AlgebraType::associative)},
      {"heisenberg3", heisenberg(1)},
      {"heisenberg5", heisenberg(2)},
      {"heisenberg_leibniz", heisenberg_leibniz()},
      {"poly4_assoc", poly4},
      {"poly4_comm", truncated_polynomial(4, AlgebraType::commutative)},
      {"poly4_dias", dias_from_associative(poly4)},
      {"poly4_dend", dendriform_from_associative(poly4)},
      {"zinbiel3", zinbiel3()},
  };
}

std::vector<Entry> load_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Entry> out;
  for (const auto& f : files) {
    const json j = read_json_file(f);
    // Extension and factor-system files share the directory; skip them.
    if (!j.is_object() || !j.contains("type")) continue;
    out.push_back({f.stem().string(), algebra_from_json(j)});
  }
  return out;
}

std::vector<Entry> load_default() {
  if (const char* dir = std::getenv("NILP_CORPUS_DIR"); dir && *dir) return load_dir(dir);
  return builtin();
}

}  // namespace corpus
}  // namespace nilp
