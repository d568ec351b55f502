#ifndef MATSUO_EXPORT_HPP
#define MATSUO_EXPORT_HPP

#include <string>

#include <json.hpp>

#include "matsuo/algebra.hpp"

namespace matsuo {

// {field, eta, basis, products: [[i, j, [[k, "coeff"], ...]], ...]} with one
// entry per nonzero product e_i e_j, i <= j when the algebra is commutative.
template <ExactField F>
nlohmann::json export_structure_constants(const Algebra<F>& alg, const std::string& eta) {
  nlohmann::json out;
  out["field"] = alg.field().name();
  out["eta"] = eta;
  out["basis"] = alg.labels();
  const bool commutative = alg.is_commutative();
  out["commutative"] = commutative;
  nlohmann::json products = nlohmann::json::array();
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = commutative ? i : 0; j < alg.dim(); ++j) {
      const auto& row = alg.product(i, j);
      if (row.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, v] : row) terms.push_back({k, scalar_string(alg.field(), v)});
      products.push_back({i, j, terms});
    }
  }
  out["products"] = products;
  return out;
}

// Nonzero entries (image of a, coordinate b, value) of a linear self-map.
template <ExactField F>
nlohmann::json export_map(const Algebra<F>& alg, const typename Algebra<F>::Map& d) {
  nlohmann::json entries = nlohmann::json::array();
  for (int a = 0; a < d.cols(); ++a) {
    for (int b = 0; b < d.rows(); ++b) {
      if (d(b, a).is_zero()) continue;
      entries.push_back({alg.label(a), alg.label(b), scalar_string(alg.field(), d(b, a))});
    }
  }
  return entries;
}

}  // namespace matsuo

#endif  // MATSUO_EXPORT_HPP
