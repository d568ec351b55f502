#ifndef MATSUO_ROOTS_HPP
#define MATSUO_ROOTS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace matsuo {

// Root lattice vectors in the simple-root basis.
using RootVector = Eigen::VectorXi;
using LatticeMap = Eigen::MatrixXi;

enum class RootType { A, D, E };

// A simply laced root system given by its Cartan matrix. Positive roots are
// stored in the simple-root basis, ordered by height and then
// lexicographically descending, so simple roots come first as alpha_1..alpha_n.
class RootSystem {
 public:
  RootSystem(RootType type, int rank);

  // "A3", "D4", "E6", ...
  static RootSystem parse(std::string_view text);

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  const std::vector<RootVector>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  const RootVector& root(int i) const { return positive_[i]; }
  RootVector simple_root(int i) const;

  // <alpha, beta^vee>, which is symmetric for simply laced systems.
  int pairing(const RootVector& alpha, const RootVector& beta) const;
  int pairing(int i, int j) const { return pairing_[i * num_positive() + j]; }
  // sigma_beta(alpha) = alpha - <alpha, beta^vee> beta.
  RootVector reflect(const RootVector& alpha, const RootVector& beta) const;

  // Index of the positive root equal to v, or of -v when v is negative.
  // Returns nullopt when neither is a root.
  std::optional<int> index_of(const RootVector& v) const;
  // Index of a positive root with given sign: v = sign * root(index).
  std::optional<std::pair<int, int>> signed_index_of(const RootVector& v) const;
  int height(int i) const { return positive_[i].sum(); }

  // Simple reflection sigma_{alpha_i} as a lattice map.
  LatticeMap simple_reflection(int i) const;
  // Permutations of the simple roots preserving the Cartan matrix, as lattice
  // maps; the identity is included.
  std::vector<LatticeMap> diagram_automorphisms() const;

  static std::string format(const RootVector& v);

 private:
  RootType type_;
  int rank_;
  Eigen::MatrixXi cartan_;
  std::vector<RootVector> positive_;
  std::vector<int> pairing_;
};

// Positive if the first nonzero coordinate is positive.
bool is_positive(const RootVector& v);

}  // namespace matsuo

#endif  // MATSUO_ROOTS_HPP
