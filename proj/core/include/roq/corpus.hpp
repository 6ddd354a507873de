#pragma once

#include <string>
#include <vector>

namespace roq {

// Built-in test corpus, as spec strings. Covers every abelian group of order
// dividing 3^6, abelian samples at 5^4 and 7^3, and nonabelian groups up to
// order 3^6.
std::vector<std::string> corpus_specs();

// The order-81 groups that are constructible in the spec language: the five
// abelian ones, the modular group M(3,4) = C_27 x| C_3, and both
// extraspecial-27-times-C_3 products.
std::vector<std::string> corpus_order81_specs();

// Pairs (by corpus spec text) with product order <= 3^7, for the product
// multiplicativity check.
std::vector<std::pair<std::string, std::string>> corpus_product_pairs();

}  // namespace roq
