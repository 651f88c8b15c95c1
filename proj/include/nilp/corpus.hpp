#pragma once

#include "nilp/extension.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace nilp {

/// One nonzero structure constant block: e_l * e_r = sum of coeff * e_name.
struct ProductEntry {
  std::string l;
  std::string r;
  std::vector<std::pair<std::string, Scalar>> val;
};

/// Builds an algebra from named entries; left/right lists for two products.
Algebra make_algebra(AlgebraType type, std::vector<std::string> basis, const std::vector<ProductEntry>& first,
                     const std::vector<ProductEntry>& second = {});

namespace corpus {

// Leibniz, A = <x,y,z> abelian, B = <w>: w² = x, wx = y, wy = z.
Algebra example1_L1();
// wx = y, wy = z.
Algebra example1_L2();
Algebra example1_A();
Algebra example1_B();
ExtensionData example1_extension(const Algebra& L);

// Diassociative, A = <x,y>, B = <u,v> abelian.
Algebra example2_Lphi();
Algebra example2_Lab();
Algebra example2_A();
Algebra example2_B();
ExtensionData example2_extension(const Algebra& L);

// A = <x,y,z> with x² = y² = z, B = <w>. The type can be leibniz or associative.
Algebra example3_Lphi(AlgebraType type = AlgebraType::leibniz);
Algebra example3_Lpsi(AlgebraType type = AlgebraType::leibniz);
Algebra example3_A(AlgebraType type = AlgebraType::leibniz);
Algebra example3_B(AlgebraType type = AlgebraType::leibniz);
ExtensionData example3_extension(const Algebra& L);

/// Heisenberg Lie algebra of dimension 2n+1: [x_i, y_i] = z.
Algebra heisenberg(std::size_t n);
/// Leibniz, not Lie: x x = z, x y = z, y x = -z.
Algebra heisenberg_leibniz();
/// x^i x^j = x^{i+j} for i + j <= n on basis x1..xn (associative and commutative).
Algebra truncated_polynomial(std::size_t n, AlgebraType type = AlgebraType::associative);
/// Diassociative algebra with both products equal to an associative product.
Algebra dias_from_associative(const Algebra& assoc);
/// Dendriform algebra with x < y = xy and x > y = 0.
Algebra dendriform_from_associative(const Algebra& assoc);
/// Nilpotent Zinbiel algebra: e1 e1 = e2, e1 e2 = e3, e2 e1 = 2 e3.
Algebra zinbiel3();

struct Entry {
  std::string name;
  Algebra algebra;
};

/// Curated algebras, in a fixed order.
std::vector<Entry> builtin();
/// Every *.json algebra file in dir, sorted by file name.
std::vector<Entry> load_dir(const std::filesystem::path& dir);
/// load_dir($NILP_CORPUS_DIR) when set, builtin() otherwise.
std::vector<Entry> load_default();

}  // namespace corpus
}  // namespace nilp
