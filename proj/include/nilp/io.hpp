#pragma once

#include "nilp/algebra.hpp"
#include "nilp/extension.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace nilp {

using json = nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& where);

/// Sparse {"name": "p/q"} form over the given basis; zero coordinates omitted.
json vec_to_json(const std::vector<std::string>& names, const Vec& v);
/// Accepts the sparse name map or a dense array of scalars.
Vec vec_from_json(const std::vector<std::string>& names, const json& j, const std::string& where);

/// Row-major list of rows of scalar strings.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where);

json algebra_to_json(const Algebra& alg);
/// With validate set, an algebra that violates its type's identities is
/// rejected with ParseError naming the first violation.
Algebra algebra_from_json(const json& j, bool validate = true);

json violations_to_json(const Algebra& alg, const std::vector<Violation>& v);
json subspace_to_json(const std::vector<std::string>& names, const Subspace& s);
json chain_to_json(const std::vector<std::string>& names, const Chain& c);

/// {"L": ..., "A": ..., "sigma": ..., "section": ...}
json extension_to_json(const ExtensionData& ext);
ExtensionData extension_from_json(const json& j);

json lift_to_json(const Lift& lift);
Lift lift_from_json(const json& j, std::size_t arity, std::size_t dim_a, std::size_t dim_b);

/// Factor-system file: {"A": ..., "B": ..., "lift": ..., "f": ...}
/// (two products: "f_left" and "f_right").
struct FactorSystemFile {
  Algebra A;
  Algebra B;
  FactorSystem fs;
};
json factor_system_to_json(const Algebra& A, const Algebra& B, const FactorSystem& fs);
FactorSystemFile factor_system_from_json(const json& j);
/// Lift and cocycles over given A and B; embedded "A"/"B" keys, if any, must match.
FactorSystem factor_system_from_json(const json& j, const Algebra& A, const Algebra& B);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace nilp
