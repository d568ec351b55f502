#ifndef MATSUO_TRANSPO_HPP
#define MATSUO_TRANSPO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matsuo/roots.hpp"

namespace matsuo {

enum class Family { Symmetric, Weyl, AffineWeyl, Moufang, Sum };

// Point payloads, one per family.
struct TranspositionPoint {
  int i;  // i < j, 0-based
  int j;
};
struct ReflectionPoint {
  int root;  // index into RootSystem::positive_roots()
};
// The involution (eps * alpha, sigma_alpha) of 3^n:W, eps in {0, 1, 2}.
struct AffinePoint {
  int eps;
  int root;
};
struct MoufangPoint {
  std::vector<int> v;  // coordinates in F_3
};
struct SummandPoint {
  int summand;
  int index;  // index inside the summand
};
using PointPayload =
    std::variant<TranspositionPoint, ReflectionPoint, AffinePoint, MoufangPoint, SummandPoint>;

// A finite 3-transposition group represented only through its class D of
// transpositions and the conjugation action b -> b^a on it.
class TranspoGroup {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  Family family() const { return family_; }
  // Catalog descriptor: "S5", "W:D4", "3W:A3", "M3:3", or "A+B" for sums.
  const std::string& name() const { return name_; }

  // b^a
  int conj(int b, int a) const { return conj_[static_cast<std::size_t>(a) * size() + b]; }
  // o(ab): 1 when equal, 2 when distinct and commuting, 3 otherwise.
  int order(int a, int b) const { return order_[static_cast<std::size_t>(a) * size() + b]; }
  bool orthogonal(int a, int b) const { return order(a, b) == 2; }
  bool collinear(int a, int b) const { return order(a, b) == 3; }
  // Third point on the line through noncommuting a and b.
  int third(int a, int b) const { return conj(b, a); }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;
  const PointPayload& payload(int i) const { return payloads_[i]; }
  const std::optional<RootSystem>& roots() const { return roots_; }

  // The permutation p -> p^a of D.
  std::vector<int> conjugation_permutation(int a) const;

  friend TranspoGroup build_symmetric(int n);
  friend TranspoGroup build_weyl(const RootSystem& rs);
  friend TranspoGroup build_affine_weyl(const RootSystem& rs);
  friend TranspoGroup build_moufang(int n);
  friend TranspoGroup disjoint_union(const TranspoGroup& a, const TranspoGroup& b);

 private:
  TranspoGroup(Family family, std::string name, int n);

  Family family_;
  std::string name_;
  std::vector<int> conj_;
  std::vector<int> order_;
  std::vector<std::string> labels_;
  std::vector<PointPayload> payloads_;
  std::optional<RootSystem> roots_;
};

// Transpositions of S_n; n >= 2.
TranspoGroup build_symmetric(int n);
// Reflections of W(Phi), identified with the positive roots.
TranspoGroup build_weyl(const RootSystem& rs);
// The class {(eps alpha, sigma_alpha)} of (Z Phi / 3 Z Phi) : W with the
// product (v, g)(w, h) = (v + g w, g h).
TranspoGroup build_affine_weyl(const RootSystem& rs);
// The class {(v, sigma)} of 3^n:2, where v^w = -v - w.
TranspoGroup build_moufang(int n);
// D_a disjoint union D_b; points of different summands commute.
TranspoGroup disjoint_union(const TranspoGroup& a, const TranspoGroup& b);

// "S<n>", "W:<type><rank>", "3W:<type><rank>", "M3:<n>"; summands joined by '+'.
TranspoGroup parse_group(std::string_view text);

// Exhaustive check of the class invariants; returns a description of the
// first violation, or nullopt.
std::optional<std::string> check_transposition_axioms(const TranspoGroup& g);

}  // namespace matsuo

#endif  // MATSUO_TRANSPO_HPP
