#include "nilp/io.hpp"

#include "nilp/errors.hpp"

#include <fstream>
#include <map>
#include <algorithm>
#include <set>
#include <sstream>

namespace nilp {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::size_t name_index(const std::vector<std::string>& names, const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": basis name must be a string");
  const auto s = j.get<std::string>();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return i;
  throw ParseError(where + ": unknown basis name \"" + s + "\"");
}

ProductTable table_from_json(const std::vector<std::string>& names, const json& entries, const std::string& where) {
  if (!entries.is_array()) throw ParseError(where + ": expected an array of products");
  const std::size_t n = names.size();
  ProductTable t(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const auto& e = entries[k];
    const std::size_t l = name_index(names, field(e, "l", at), at + ".l");
    const std::size_t r = name_index(names, field(e, "r", at), at + ".r");
    if (!seen.insert({l, r}).second)
      throw ParseError(at + ": duplicate entry for (" + names[l] + ", " + names[r] + ")");
    t.set(l, r, vec_from_json(names, field(e, "val", at), at + ".val"));
  }
  return t;
}

json table_to_json(const std::vector<std::string>& names, const ProductTable& t) {
  json arr = json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (!is_zero(t.at(i, j))) arr.push_back({{"l", names[i]}, {"r", names[j]}, {"val", vec_to_json(names, t.at(i, j))}});
  return arr;
}

json grid_to_json(const std::vector<std::string>& names, const std::vector<Vec>& grid, std::size_t db) {
  json rows = json::array();
  for (std::size_t i = 0; i < db; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < db; ++j) row.push_back(vec_to_json(names, grid[i * db + j]));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Vec> grid_from_json(const std::vector<std::string>& names, const json& j, std::size_t db,
                                const std::string& where) {
  if (!j.is_array() || j.size() != db) throw ParseError(where + ": expected " + std::to_string(db) + " rows");
  std::vector<Vec> grid;
  for (std::size_t i = 0; i < db; ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != db) throw ParseError(at + ": expected " + std::to_string(db) + " entries");
    for (std::size_t k = 0; k < db; ++k) grid.push_back(vec_from_json(names, j[i][k], at + "[" + std::to_string(k) + "]"));
  }
  return grid;
}

constexpr const char* kSlotKeys1[] = {"phi", "phi_prime"};
constexpr const char* kSlotKeys2[] = {"l", "r", "l_prime", "r_prime"};
constexpr const char* kCocycleKeys2[] = {"f_left", "f_right"};

}  // namespace

json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": scalar must be a string \"p\" or \"p/q\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json vec_to_json(const std::vector<std::string>& names, const Vec& v) {
  json o = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) o[names.at(i)] = scalar_to_json(v[i]);
  return o;
}

Vec vec_from_json(const std::vector<std::string>& names, const json& j, const std::string& where) {
  Vec v(names.size());
  if (j.is_array()) {
    if (j.size() != names.size()) throw ParseError(where + ": vector has the wrong length");
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i], where + "[" + std::to_string(i) + "]");
  } else if (j.is_object()) {
    for (const auto& [k, val] : j.items()) v[name_index(names, json(k), where)] = scalar_from_json(val, where + "." + k);
  } else {
    throw ParseError(where + ": expected a vector");
  }
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + ": expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError(at + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], at + "[" + std::to_string(c) + "]");
  }
  return m;
}

json algebra_to_json(const Algebra& alg) {
  json products = json::object();
  if (alg.arity() == 1) {
    products["mul"] = table_to_json(alg.basis_names(), alg.table(0));
  } else {
    products["left"] = table_to_json(alg.basis_names(), alg.table(0));
    products["right"] = table_to_json(alg.basis_names(), alg.table(1));
  }
  return {{"type", std::string(to_string(alg.type()))}, {"basis", alg.basis_names()}, {"products", products}};
}

Algebra algebra_from_json(const json& j, bool validate) {
  const std::string where = "algebra";
  const auto& jt = field(j, "type", where);
  if (!jt.is_string()) throw ParseError("algebra.type: expected a string");
  const AlgebraType type = parse_algebra_type(jt.get<std::string>());

  const auto& jb = field(j, "basis", where);
  if (!jb.is_array()) throw ParseError("algebra.basis: expected an array of names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& n : jb) {
    if (!n.is_string()) throw ParseError("algebra.basis: names must be strings");
    if (!seen.insert(n.get<std::string>()).second)
      throw ParseError("algebra.basis: duplicate name \"" + n.get<std::string>() + "\"");
    names.push_back(n.get<std::string>());
  }

  const json empty = json::object();
  const json& jp = j.contains("products") ? j.at("products") : empty;
  if (!jp.is_object()) throw ParseError("algebra.products: expected an object");
  const std::vector<std::string> keys =
      arity(type) == 1 ? std::vector<std::string>{"mul"} : std::vector<std::string>{"left", "right"};
  for (const auto& [k, _] : jp.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw ParseError("algebra.products: unexpected key \"" + k + "\" for type " + std::string(to_string(type)));
  std::vector<ProductTable> tables;
  for (const auto& k : keys)
    tables.push_back(jp.contains(k) ? table_from_json(names, jp.at(k), "algebra.products." + k) : ProductTable(names.size()));

  Algebra alg(type, std::move(names), std::move(tables));
  if (validate) {
    if (auto v = check_identity(alg); !v.empty()) {
      std::ostringstream os;
      os << "algebra violates the " << v.front().identity << " identity at (";
      for (std::size_t i = 0; i < v.front().basis.size(); ++i)
        os << (i ? "," : "") << alg.basis_names()[v.front().basis[i]];
      os << ")";
      throw ParseError(os.str());
    }
  }
  return alg;
}

json violations_to_json(const Algebra& alg, const std::vector<Violation>& v) {
  json arr = json::array();
  for (const auto& x : v) {
    json basis = json::array();
    for (auto i : x.basis) basis.push_back(alg.basis_names()[i]);
    arr.push_back({{"identity", x.identity},
                   {"basis", basis},
                   {"lhs", vec_to_json(alg.basis_names(), x.lhs)},
                   {"rhs", vec_to_json(alg.basis_names(), x.rhs)}});
  }
  return arr;
}

json subspace_to_json(const std::vector<std::string>& names, const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis_vectors()) basis.push_back(vec_to_json(names, b));
  return {{"dim", s.dim()}, {"basis", basis}};
}

json chain_to_json(const std::vector<std::string>& names, const Chain& c) {
  json terms = json::array();
  for (const auto& t : c.terms) terms.push_back(subspace_to_json(names, t));
  return {{"dims", c.dims()}, {"terms", terms}, {"stabilized", c.stabilized}};
}

json extension_to_json(const ExtensionData& ext) {
  return {{"L", algebra_to_json(ext.L)},
          {"A", algebra_to_json(ext.A)},
          {"sigma", matrix_to_json(ext.sigma)},
          {"section", matrix_to_json(ext.section)}};
}

ExtensionData extension_from_json(const json& j) {
  Algebra L = algebra_from_json(field(j, "L", "extension"));
  Algebra A = algebra_from_json(field(j, "A", "extension"));
  Matrix sigma = matrix_from_json(field(j, "sigma", "extension"), L.dim(), A.dim(), "extension.sigma");
  std::optional<Matrix> section;
  if (j.contains("section") && !j.at("section").is_null()) {
    if (A.dim() > L.dim()) throw ParseError("extension: dim A exceeds dim L");
    section = matrix_from_json(j.at("section"), L.dim(), L.dim() - A.dim(), "extension.section");
  }
  return make_extension(std::move(L), std::move(A), std::move(sigma), std::move(section));
}

json lift_to_json(const Lift& lift) {
  json o = json::object();
  const bool two = lift.arity() == 2;
  for (std::size_t s = 0; s < lift.slots.size(); ++s) {
    json maps = json::array();
    for (const auto& m : lift.slots[s]) maps.push_back(matrix_to_json(m.matrix));
    o[two ? kSlotKeys2[s] : kSlotKeys1[s]] = std::move(maps);
  }
  return o;
}

Lift lift_from_json(const json& j, std::size_t ar, std::size_t dim_a, std::size_t dim_b) {
  Lift lift = Lift::zero(ar, dim_a, dim_b);
  for (std::size_t s = 0; s < 2 * ar; ++s) {
    const char* key = ar == 2 ? kSlotKeys2[s] : kSlotKeys1[s];
    const std::string where = std::string("lift.") + key;
    const auto& maps = field(j, key, "lift");
    if (!maps.is_array() || maps.size() != dim_b)
      throw ParseError(where + ": expected one matrix per B-basis element (" + std::to_string(dim_b) + ")");
    for (std::size_t i = 0; i < dim_b; ++i)
      lift.slots[s][i].matrix = matrix_from_json(maps[i], dim_a, dim_a, where + "[" + std::to_string(i) + "]");
  }
  return lift;
}

json factor_system_to_json(const Algebra& A, const Algebra& B, const FactorSystem& fs) {
  json o = {{"A", algebra_to_json(A)}, {"B", algebra_to_json(B)}, {"lift", lift_to_json(fs.lift)}};
  if (A.arity() == 1) {
    o["f"] = grid_to_json(A.basis_names(), fs.cocycles[0], B.dim());
  } else {
    for (std::size_t p = 0; p < 2; ++p) o[kCocycleKeys2[p]] = grid_to_json(A.basis_names(), fs.cocycles[p], B.dim());
  }
  return o;
}

FactorSystem factor_system_from_json(const json& j, const Algebra& A, const Algebra& B) {
  if (A.type() != B.type()) throw ParseError("factor system: A and B have different types");
  for (const auto& [key, alg] : {std::pair<const char*, const Algebra*>{"A", &A}, {"B", &B}})
    if (j.is_object() && j.contains(key) && algebra_from_json(j.at(key)) != *alg)
      throw ParseError(std::string("factor system: embedded ") + key + " differs from the given algebra");
  const std::size_t ar = A.arity();
  FactorSystem fs = FactorSystem::zero(ar, A.dim(), B.dim());
  fs.lift = lift_from_json(field(j, "lift", "factor system"), ar, A.dim(), B.dim());
  if (ar == 1) {
    fs.cocycles[0] = grid_from_json(A.basis_names(), field(j, "f", "factor system"), B.dim(), "f");
  } else {
    for (std::size_t p = 0; p < 2; ++p)
      fs.cocycles[p] =
          grid_from_json(A.basis_names(), field(j, kCocycleKeys2[p], "factor system"), B.dim(), kCocycleKeys2[p]);
  }
  return fs;
}

FactorSystemFile factor_system_from_json(const json& j) {
  Algebra A = algebra_from_json(field(j, "A", "factor system"));
  Algebra B = algebra_from_json(field(j, "B", "factor system"));
  FactorSystem fs = factor_system_from_json(j, A, B);
  return {std::move(A), std::move(B), std::move(fs)};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot write file");
  out << j.dump(2) << '\n';
}

}  // namespace nilp
