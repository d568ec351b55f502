#ifndef MATSUO_ALGEBRA_HPP
#define MATSUO_ALGEBRA_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/linalg.hpp"

namespace matsuo {

// A finite-dimensional algebra over F given by structure constants: the
// product of basis vectors i and j is a sparse vector.
template <ExactField F>
class Algebra {
 public:
  using Field = F;
  using Scalar = typename F::Element;
  using Element = Vector<Scalar>;
  using Map = Matrix<Scalar>;  // column i is the image of basis vector i

  Algebra(F field, std::vector<std::string> labels)
      : field_(std::move(field)),
        labels_(std::move(labels)),
        products_(labels_.size() * labels_.size()),
        id_(next_id()) {}

  const F& field() const { return field_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // Distinguishes algebra instances; copies share it.
  std::uint64_t id() const { return id_; }

  const SparseRow<Scalar>& product(int i, int j) const { return products_[index(i, j)]; }
  // Sets e_i e_j, and e_j e_i too when `symmetric`.
  void set_product(int i, int j, SparseRow<Scalar> v, bool symmetric = true) {
    v = normalize_row(std::move(v));
    if (symmetric) products_[index(j, i)] = v;
    products_[index(i, j)] = std::move(v);
  }

  Element zero() const { return Element::Constant(dim(), field_.zero()); }
  Element basis(int i) const {
    Element e = zero();
    e[i] = field_.one();
    return e;
  }
  Element from_sparse(const SparseRow<Scalar>& row) const {
    Element e = zero();
    for (const auto& [k, v] : row) e[k] += v;
    return e;
  }

  Element multiply(const Element& x, const Element& y) const {
    if (x.size() != dim() || y.size() != dim()) {
      throw MixedAlgebras("element of dimension " + std::to_string(x.size()) + " and " +
                          std::to_string(y.size()) + " in an algebra of dimension " +
                          std::to_string(dim()));
    }
    Element out = zero();
    for (int i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar f = x[i] * y[j];
        for (const auto& [k, v] : product(i, j)) out[k] += f * v;
      }
    }
    return out;
  }
  Element multiply(int i, int j) const { return from_sparse(product(i, j)); }

  // Matrix of y -> x y.
  Map left_multiplication(const Element& x) const {
    Map m = Map::Constant(dim(), dim(), field_.zero());
    for (int j = 0; j < dim(); ++j) m.col(j) = multiply(x, basis(j));
    return m;
  }
  Map left_multiplication(int i) const {
    Map m = Map::Constant(dim(), dim(), field_.zero());
    for (int j = 0; j < dim(); ++j) {
      for (const auto& [k, v] : product(i, j)) m(k, j) += v;
    }
    return m;
  }

  bool is_commutative() const {
    for (int i = 0; i < dim(); ++i) {
      for (int j = i + 1; j < dim(); ++j) {
        if (product(i, j) != product(j, i)) return false;
      }
    }
    return true;
  }

  Map identity_map() const {
    Map m = Map::Constant(dim(), dim(), field_.zero());
    for (int i = 0; i < dim(); ++i) m(i, i) = field_.one();
    return m;
  }
  Map zero_map() const { return Map::Constant(dim(), dim(), field_.zero()); }

 private:
  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter++;
  }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * dim() + j; }

  F field_;
  std::vector<std::string> labels_;
  std::vector<SparseRow<Scalar>> products_;
  std::uint64_t id_;
};

// First basis pair (i, j) with g(e_i e_j) != g(e_i) g(e_j), where g maps
// `from` into `to`.
template <ExactField F>
std::optional<std::pair<int, int>> homomorphism_failure(const Algebra<F>& from, const Algebra<F>& to,
                                                        const typename Algebra<F>::Map& g) {
  if (g.cols() != from.dim() || g.rows() != to.dim()) {
    throw MixedAlgebras("map shape does not match the algebras");
  }
  using Element = typename Algebra<F>::Element;
  std::vector<Element> images;
  for (int i = 0; i < from.dim(); ++i) images.push_back(g.col(i));
  for (int i = 0; i < from.dim(); ++i) {
    for (int j = i; j < from.dim(); ++j) {
      Element lhs = g * from.multiply(i, j);
      Element rhs = to.multiply(images[i], images[j]);
      if (!is_zero(Element(lhs - rhs))) return std::make_pair(i, j);
      if (i != j && !(from.product(i, j) == from.product(j, i))) {
        Element lhs2 = g * from.multiply(j, i);
        Element rhs2 = to.multiply(images[j], images[i]);
        if (!is_zero(Element(lhs2 - rhs2))) return std::make_pair(j, i);
      }
    }
  }
  return std::nullopt;
}

template <ExactField F>
bool is_automorphism(const Algebra<F>& a, const typename Algebra<F>::Map& g) {
  return !homomorphism_failure(a, a, g) && inverse(g).has_value();
}

// Algebra identifier for scalars: "3/4", "5", "2+1*sqrt3".
template <ExactField F>
std::string scalar_string(const F& field, const typename F::Element& x) {
  using matsuo::to_string;
  return to_string(field.zero() + x);
}

}  // namespace matsuo

#endif  // MATSUO_ALGEBRA_HPP
