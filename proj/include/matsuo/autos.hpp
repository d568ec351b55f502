#ifndef MATSUO_AUTOS_HPP
#define MATSUO_AUTOS_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/deriv.hpp"

namespace matsuo {

template <class S>
using Block = Eigen::Matrix<S, 2, 2>;

// ---------------------------------------------------------------------------
// Model B: blocks B_alpha = <1_alpha, x_alpha, y_alpha>, one per positive root,
// at basis indices 3k, 3k + 1, 3k + 2 for the k-th positive root.
// ---------------------------------------------------------------------------
template <ExactField F>
class ModelB {
 public:
  using Scalar = typename F::Element;
  using Map = Matrix<Scalar>;

  ModelB(RootSystem rs, F field) : rs_(std::move(rs)), algebra_(field, make_labels(rs_)) {
    const F& f = algebra_.field();
    if (f.characteristic() == 2 || f.characteristic() == 3) {
      throw BadCharacteristic("model B needs characteristic other than 2 and 3");
    }
    auto root3 = f.sqrt(f.from_int(3));
    if (!root3) throw NoSqrt3("3 is not a square in " + f.name());
    sqrt3_ = *root3;
    const Scalar half = f.from_rational(Rational(1, 2));
    const Scalar half_root3 = sqrt3_ * half;
    // theta(x) = x/2 - (sqrt3/2) y, theta(y) = (sqrt3/2) x + y/2; columns are images.
    theta_ << half, half_root3, -half_root3, half;
    theta_inverse_ << half, -half_root3, half_root3, half;
    install_products();
  }

  const RootSystem& roots() const { return rs_; }
  const Algebra<F>& algebra() const { return algebra_; }
  const F& field() const { return algebra_.field(); }
  int dim() const { return algebra_.dim(); }
  const Scalar& sqrt3() const { return sqrt3_; }
  const Block<Scalar>& theta() const { return theta_; }
  const Block<Scalar>& theta_inverse() const { return theta_inverse_; }

  static int one(int root) { return 3 * root; }
  static int x(int root) { return 3 * root + 1; }
  static int y(int root) { return 3 * root + 2; }

  // b(u, v) on <x_alpha, y_alpha>, read off the structure constants through
  // u v = b(u, v) / 2 * 1_alpha.
  Block<Scalar> bilinear_form(int root) const {
    const F& f = field();
    Block<Scalar> b;
    int idx[2] = {x(root), y(root)};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Scalar c = f.zero();
        for (const auto& [k, v] : algebra_.product(idx[i], idx[j])) {
          if (k == one(root)) c += v;
        }
        b(i, j) = f.from_int(2) * c;
      }
    }
    return b;
  }

 private:
  static std::vector<std::string> make_labels(const RootSystem& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs.positive_roots()) {
      std::string s = RootSystem::format(r);
      out.push_back("1" + s);
      out.push_back("x" + s);
      out.push_back("y" + s);
    }
    return out;
  }

  // Sparse image of x_root (coord 0) or y_root (coord 1) under a 2x2 block.
  SparseRow<Scalar> apply(const Block<Scalar>& m, int coord, int root, const Scalar& scale) const {
    return {{x(root), scale * m(0, coord)}, {y(root), scale * m(1, coord)}};
  }

  void put(std::map<std::pair<int, int>, SparseRow<Scalar>>& table, int i, int j, SparseRow<Scalar> v) {
    v = normalize_row(std::move(v));
    for (auto key : {std::make_pair(i, j), std::make_pair(j, i)}) {
      auto it = table.find(key);
      if (it != table.end() && it->second != v) {
        throw VerificationFailure("conflicting model B products for " + algebra_.label(i) + " * " +
                                  algebra_.label(j));
      }
      table[key] = v;
    }
  }

  void install_products() {
    const F& f = algebra_.field();
    const Scalar one_ = f.one();
    const Scalar half = f.from_rational(Rational(1, 2));
    const Scalar q = f.from_rational(Rational(3, 4));
    const Scalar nine_quarters = f.from_rational(Rational(9, 4));
    const int m = rs_.num_positive();
    std::map<std::pair<int, int>, SparseRow<Scalar>> table;

    for (int a = 0; a < m; ++a) {
      put(table, one(a), one(a), {{one(a), one_}});
      put(table, one(a), x(a), {{x(a), one_}});
      put(table, one(a), y(a), {{y(a), one_}});
      put(table, x(a), x(a), {{one(a), nine_quarters}});
      put(table, y(a), y(a), {{one(a), nine_quarters}});
      put(table, x(a), y(a), {});
    }
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a == b || rs_.pairing(a, b) == 0) continue;
        // 1_a * (lambda 1_b + v0) = lambda/2 1_a + v/2 - lambda/2 1_{s_a(b)}
        int c = *rs_.index_of(rs_.reflect(rs_.root(b), rs_.root(a)));
        put(table, one(a), one(b), {{one(a), half}, {one(b), half}, {one(c), -half}});
        put(table, one(a), x(b), {{x(b), half}});
        put(table, one(a), y(b), {{y(b), half}});
      }
    }
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        auto sum = rs_.index_of(RootVector(rs_.root(a) + rs_.root(b)));
        if (!sum || !is_positive(RootVector(rs_.root(a) + rs_.root(b)))) continue;
        int g = *sum;
        put(table, x(a), x(b), apply(theta_, 1, g, -q));
        put(table, x(a), y(b), apply(theta_, 0, g, q));
        put(table, y(a), y(b), apply(theta_, 1, g, q));
        put(table, x(g), x(a), apply(theta_inverse_, 1, b, q));
        put(table, x(g), y(a), apply(theta_inverse_, 0, b, q));
        put(table, x(a), y(g), apply(theta_inverse_, 0, b, -q));
        put(table, y(a), y(g), apply(theta_inverse_, 1, b, q));
      }
    }
    for (auto& [key, v] : table) algebra_.set_product(key.first, key.second, v, false);
  }

  RootSystem rs_;
  Algebra<F> algebra_;
  Scalar sqrt3_;
  Block<Scalar> theta_;
  Block<Scalar> theta_inverse_;
};

template <ExactField F>
ModelB<F> build_model_b(const RootSystem& rs, const F& field) {
  return ModelB<F>(rs, field);
}

// The map B -> M(3^n:W):
//   1_a -> 2/3 ((0,a) + (+,a) + (-,a)),  x_a -> sqrt3 ((0,a) - (+,a)),
//   y_a -> 2 (-,a) - (0,a) - (+,a).
// Throws VerificationFailure with the offending pair unless it is a bijective
// algebra homomorphism.
template <ExactField F>
Matrix<typename F::Element> model_b_iso(const ModelB<F>& b, const MatsuoAlgebra<F>& m) {
  using S = typename F::Element;
  const F& f = b.field();
  if (m.group().family() != Family::AffineWeyl || m.group().roots()->name() != b.roots().name()) {
    throw WrongFamily("model B of " + b.roots().name() + " maps to 3W:" + b.roots().name() + ", not " +
                      m.group().name());
  }
  if (!(m.eta() == f.from_rational(Rational(1, 2)))) throw BadEta("model B is isomorphic to M_{1/2} only");
  Matrix<S> phi = Matrix<S>::Constant(m.dim(), b.dim(), f.zero());
  const S two_thirds = f.from_rational(Rational(2, 3));
  for (int r = 0; r < b.roots().num_positive(); ++r) {
    int p0 = 3 * r;
    int pp = 3 * r + 1;
    int pm = 3 * r + 2;
    phi(p0, ModelB<F>::one(r)) = two_thirds;
    phi(pp, ModelB<F>::one(r)) = two_thirds;
    phi(pm, ModelB<F>::one(r)) = two_thirds;
    phi(p0, ModelB<F>::x(r)) = b.sqrt3();
    phi(pp, ModelB<F>::x(r)) = -b.sqrt3();
    phi(pm, ModelB<F>::y(r)) = f.from_int(2);
    phi(p0, ModelB<F>::y(r)) = -f.one();
    phi(pp, ModelB<F>::y(r)) = -f.one();
  }
  if (!inverse(phi)) throw VerificationFailure("model B map is not bijective");
  if (auto bad = homomorphism_failure(b.algebra(), m.algebra(), phi)) {
    throw VerificationFailure("model B map is not multiplicative on " + b.algebra().label(bad->first) + " * " +
                              b.algebra().label(bad->second));
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Torus
// ---------------------------------------------------------------------------

// rho = [[c, -s], [s, c]] on (x, y) for each simple root.
template <class S>
struct TorusParam {
  std::vector<std::pair<S, S>> cs;
};

template <class S>
Block<S> rotation(const S& c, const S& s) {
  Block<S> m;
  m << c, -s, s, c;
  return m;
}

// (c, s) = ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) for a random t with 1 + t^2 != 0.
template <ExactField F>
std::pair<typename F::Element, typename F::Element> pythagorean_pair(const F& f, std::mt19937_64& rng) {
  while (true) {
    auto t = f.random(rng);
    auto den = f.one() + t * t;
    if (den.is_zero()) continue;
    auto inv = den.inverse();
    return {(f.one() - t * t) * inv, f.from_int(2) * t * inv};
  }
}

template <ExactField F>
TorusParam<typename F::Element> random_torus_param(const F& f, int rank, std::mt19937_64& rng) {
  TorusParam<typename F::Element> t;
  for (int i = 0; i < rank; ++i) t.cs.push_back(pythagorean_pair(f, rng));
  return t;
}

// Componentwise product in SO_2.
template <class S>
TorusParam<S> compose(const TorusParam<S>& a, const TorusParam<S>& b) {
  TorusParam<S> out;
  for (std::size_t i = 0; i < a.cs.size(); ++i) {
    const auto& [c1, s1] = a.cs[i];
    const auto& [c2, s2] = b.cs[i];
    out.cs.emplace_back(c1 * c2 - s1 * s2, s1 * c2 + c1 * s2);
  }
  return out;
}

// rho_alpha for every positive root, built from the simple roots through
// rho_{a+b} = rho_a rho_b. Every decomposition of a root must give the same
// block; a disagreement throws VerificationFailure.
template <ExactField F>
std::vector<Block<typename F::Element>> torus_blocks(const RootSystem& rs, const F& f,
                                                     const TorusParam<typename F::Element>& t) {
  using S = typename F::Element;
  if (static_cast<int>(t.cs.size()) != rs.rank()) throw Error("torus parameter needs one pair per simple root");
  for (const auto& [c, s] : t.cs) {
    if (!(c * c + s * s == f.one())) {
      throw CircleRelationViolated("c^2 + s^2 = " + scalar_string(f, S(c * c + s * s)) + " != 1");
    }
  }
  const int m = rs.num_positive();
  std::vector<std::optional<Block<S>>> blocks(m);
  for (int i = 0; i < rs.rank(); ++i) {
    blocks[*rs.index_of(rs.simple_root(i))] = rotation(f.zero() + t.cs[i].first, f.zero() + t.cs[i].second);
  }
  // Roots are sorted by height, so both summands precede their sum.
  for (int g = 0; g < m; ++g) {
    if (rs.height(g) == 1) continue;
    for (int a = 0; a < g; ++a) {
      auto b = rs.index_of(RootVector(rs.root(g) - rs.root(a)));
      if (!b || !is_positive(RootVector(rs.root(g) - rs.root(a)))) continue;
      Block<S> prod = *blocks[a] * *blocks[*b];
      if (!blocks[g]) {
        blocks[g] = prod;
      } else if (!(prod == *blocks[g])) {
        throw VerificationFailure("torus blocks disagree on " + RootSystem::format(rs.root(g)));
      }
    }
  }
  std::vector<Block<S>> out;
  for (auto& b : blocks) out.push_back(*b);
  return out;
}

// The automorphism fixing each 1_alpha and acting by rho_alpha on
// <x_alpha, y_alpha>.
template <ExactField F>
Matrix<typename F::Element> torus_automorphism(const ModelB<F>& b, const TorusParam<typename F::Element>& t) {
  using S = typename F::Element;
  auto blocks = torus_blocks(b.roots(), b.field(), t);
  Matrix<S> g = b.algebra().zero_map();
  for (int r = 0; r < b.roots().num_positive(); ++r) {
    g(ModelB<F>::one(r), ModelB<F>::one(r)) = b.field().one();
    g.block(ModelB<F>::x(r), ModelB<F>::x(r), 2, 2) = blocks[r];
  }
  return g;
}

// Whether theta commutes with every torus block.
template <ExactField F>
bool theta_commutes(const ModelB<F>& b, const TorusParam<typename F::Element>& t) {
  for (const auto& blk : torus_blocks(b.roots(), b.field(), t)) {
    if (!(Block<typename F::Element>(b.theta() * blk) == Block<typename F::Element>(blk * b.theta()))) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Root system automorphisms acting on M(3^n:W)
// ---------------------------------------------------------------------------

// Whether the lattice map permutes Phi and preserves the pairing.
inline bool is_root_automorphism(const RootSystem& rs, const LatticeMap& m) {
  if (m.rows() != rs.rank() || m.cols() != rs.rank()) return false;
  if (!(LatticeMap(m.transpose() * rs.cartan() * m) == rs.cartan())) return false;
  for (const auto& r : rs.positive_roots()) {
    if (!rs.index_of(RootVector(m * r))) return false;
  }
  return true;
}

// The permutation of D sending (eps alpha, s_alpha) to (eps rho(alpha), s_rho(alpha)).
inline std::vector<int> root_automorphism_permutation(const TranspoGroup& g, const LatticeMap& m) {
  if (g.family() != Family::AffineWeyl) throw WrongFamily("root automorphisms act on 3^n:W only");
  const RootSystem& rs = *g.roots();
  if (!is_root_automorphism(rs, m)) throw NotRootAutomorphism("lattice map does not preserve the root system");
  std::vector<int> perm(g.size());
  for (int r = 0; r < rs.num_positive(); ++r) {
    auto [image, sign] = *rs.signed_index_of(RootVector(m * rs.root(r)));
    for (int eps = 0; eps < 3; ++eps) {
      int e = ((sign * eps) % 3 + 3) % 3;
      perm[3 * r + eps] = 3 * image + e;
    }
  }
  return perm;
}

template <ExactField F>
Matrix<typename F::Element> root_automorphism(const MatsuoAlgebra<F>& m, const LatticeMap& rho) {
  using S = typename F::Element;
  auto perm = root_automorphism_permutation(m.group(), rho);
  Matrix<S> g = m.algebra().zero_map();
  for (int i = 0; i < m.dim(); ++i) g(perm[i], i) = m.field().one();
  if (auto bad = homomorphism_failure(m.algebra(), m.algebra(), g)) {
    throw VerificationFailure("root automorphism is not multiplicative on " + m.algebra().label(bad->first) +
                              " * " + m.algebra().label(bad->second));
  }
  return g;
}

// phi g phi^{-1}.
template <class S>
Matrix<S> pushforward(const Matrix<S>& phi, const Matrix<S>& g) {
  auto inv = inverse(phi);
  if (!inv) throw VerificationFailure("pushforward along a singular map");
  return phi * g * *inv;
}

// Whether g fixes (0,a) + (+,a) + (-,a) for every positive root a.
template <ExactField F>
bool fixes_vertical_sums(const MatsuoAlgebra<F>& m, const Matrix<typename F::Element>& g) {
  using S = typename F::Element;
  for (int r = 0; r < m.dim() / 3; ++r) {
    Vector<S> v = Vector<S>::Constant(m.dim(), m.field().zero());
    for (int eps = 0; eps < 3; ++eps) v[3 * r + eps] = m.field().one();
    if (!is_zero(Vector<S>(g * v - v))) return false;
  }
  return true;
}

// Dimension of the space fixed by g.
template <class S>
int fixed_dimension(const Matrix<S>& g, const S& one) {
  Matrix<S> id = Matrix<S>::Identity(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i) id(i, i) = one;
  return static_cast<int>(kernel(Matrix<S>(g - id)).cols());
}

// ---------------------------------------------------------------------------
// Characters of the torus
// ---------------------------------------------------------------------------

struct CharacterReport {
  bool eigenvectors = true;  // t e_a = l_a e_a and t f_a = l_a^{-1} f_a
  bool inverse = true;       // l_a * (eigenvalue on f_a) = 1
  bool additive = true;      // l_a l_b = l_{a+b}
  bool products = true;      // e_a e_b is a nonzero multiple of e_{a+b}
  std::vector<std::string> failures;
  bool pass() const { return eigenvectors && inverse && additive && products; }
};

// e_a = x_a + i y_a and f_a = x_a - i y_a with i^2 = -1; t(e_a) = (c - i s) e_a.
template <ExactField F>
CharacterReport character_additivity_check(const ModelB<F>& b,
                                           const std::vector<TorusParam<typename F::Element>>& samples) {
  using S = typename F::Element;
  using Element = Vector<S>;
  const F& f = b.field();
  auto root_i = f.sqrt(-f.one());
  if (!root_i) throw Error("character check needs a square root of -1 in " + f.name());
  const S i = *root_i;
  const RootSystem& rs = b.roots();
  const int m = rs.num_positive();
  auto e = [&](int r, const S& sign) {
    Element v = b.algebra().zero();
    v[ModelB<F>::x(r)] = f.one();
    v[ModelB<F>::y(r)] = sign * i;
    return v;
  };
  CharacterReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.failures.size() < 16) rep.failures.push_back(what);
  };
  for (int a = 0; a < m; ++a) {
    for (int c = 0; c < m; ++c) {
      RootVector sum = rs.root(a) + rs.root(c);
      auto g = rs.index_of(sum);
      if (!g || !is_positive(sum) || a > c) continue;
      Element prod = b.algebra().multiply(e(a, f.one()), e(c, f.one()));
      Element target = e(*g, f.one());
      S mu = prod[ModelB<F>::x(*g)];
      if (mu.is_zero() || !is_zero(Element(prod - mu * target))) {
        fail(rep.products, "e" + RootSystem::format(rs.root(a)) + " e" + RootSystem::format(rs.root(c)));
      }
    }
  }
  for (const auto& t : samples) {
    auto blocks = torus_blocks(rs, f, t);
    Matrix<S> g = torus_automorphism(b, t);
    std::vector<S> lambda(m);
    for (int r = 0; r < m; ++r) {
      const S c = blocks[r](0, 0);
      const S s = blocks[r](1, 0);
      lambda[r] = c - i * s;
      S mu = c + i * s;
      if (!is_zero(Element(g * e(r, f.one()) - lambda[r] * e(r, f.one())))) {
        fail(rep.eigenvectors, "e" + RootSystem::format(rs.root(r)));
      }
      if (!is_zero(Element(g * e(r, -f.one()) - mu * e(r, -f.one())))) {
        fail(rep.eigenvectors, "f" + RootSystem::format(rs.root(r)));
      }
      if (!(lambda[r] * mu == f.one())) fail(rep.inverse, RootSystem::format(rs.root(r)));
    }
    for (int a = 0; a < m; ++a) {
      for (int c = 0; c < m; ++c) {
        RootVector sum = rs.root(a) + rs.root(c);
        auto g2 = rs.index_of(sum);
        if (!g2 || !is_positive(sum)) continue;
        if (!(lambda[a] * lambda[c] == lambda[*g2])) fail(rep.additive, RootSystem::format(sum));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Zero-sum symmetric matrices with the Jordan product
// ---------------------------------------------------------------------------

// ZS_n with basis F_ij = e_ii + e_jj - e_ij - e_ji, i < j, in lexicographic
// order. The product is x o y = (xy + yx) / 2.
template <ExactField F>
class ZeroSumJordan {
 public:
  using Scalar = typename F::Element;
  using Map = Matrix<Scalar>;

  ZeroSumJordan(int n, F field) : n_(n), algebra_(field, make_labels(n)) {
    const F& f = algebra_.field();
    std::uint64_t p = f.characteristic();
    if (n < 2) throw Error("ZS_n requires n >= 2");
    if (p != 0 && (2 * static_cast<std::uint64_t>(n)) % p == 0) {
      throw BadCharacteristic("ZS_" + std::to_string(n) + " needs a characteristic not dividing " +
                              std::to_string(2 * n));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
    }
    for (auto [i, j] : pairs_) basis_.push_back(edge(i, j));
    const Scalar half = f.from_rational(Rational(1, 2));
    const int d = static_cast<int>(pairs_.size());
    for (int a = 0; a < d; ++a) {
      for (int b = a; b < d; ++b) {
        Map prod = half * (basis_[a] * basis_[b] + basis_[b] * basis_[a]);
        algebra_.set_product(a, b, coordinates(prod));
      }
    }
  }

  int n() const { return n_; }
  const Algebra<F>& algebra() const { return algebra_; }
  const F& field() const { return algebra_.field(); }
  int dim() const { return algebra_.dim(); }
  const Map& basis_matrix(int k) const { return basis_[k]; }

  // Coordinates of a symmetric zero-row-sum matrix: the coefficient of F_ij
  // is -x_ij. Throws VerificationFailure if x is not in ZS_n.
  SparseRow<Scalar> coordinates(const Map& x) const {
    const F& f = field();
    SparseRow<Scalar> row;
    Map rebuilt = Map::Constant(n_, n_, f.zero());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      auto [i, j] = pairs_[k];
      Scalar c = -x(i, j);
      row.emplace_back(static_cast<int>(k), c);
      rebuilt += c * basis_[k];
    }
    if (!is_zero(Map(rebuilt - x))) throw VerificationFailure("matrix is not symmetric with zero row sums");
    return normalize_row(std::move(row));
  }

  Map jordan(const Map& x, const Map& y) const {
    return field().from_rational(Rational(1, 2)) * (x * y + y * x);
  }

 private:
  static std::vector<std::string> make_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) out.push_back("F" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
    return out;
  }

  Map edge(int i, int j) const {
    const F& f = field();
    Map m = Map::Constant(n_, n_, f.zero());
    m(i, i) = f.one();
    m(j, j) = f.one();
    m(i, j) = -f.one();
    m(j, i) = -f.one();
    return m;
  }

  int n_;
  Algebra<F> algebra_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Map> basis_;
};

template <ExactField F>
ZeroSumJordan<F> build_zero_sum_jordan(int n, const F& field) {
  return ZeroSumJordan<F>(n, field);
}

// dim of {x in M_n : x = x^T, x 1 = 0}, computed as a nullspace.
template <ExactField F>
int zero_sum_dimension(int n, const F& f) {
  using S = typename F::Element;
  SparseSystem<S> sys(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) sys.add_row({{i * n + j, f.one()}, {j * n + i, -f.one()}});
    SparseRow<S> row;
    for (int j = 0; j < n; ++j) row.emplace_back(i * n + j, f.one());
    sys.add_row(std::move(row));
  }
  return n * n - sparse_rank(sys);
}

// The n x n matrix (e_ii + e_jj - e_ij - e_ji) / 2 for the transposition (i j).
template <ExactField F>
Matrix<typename F::Element> transposition_image(const ZeroSumJordan<F>& z, int i, int j) {
  int k = 0;
  for (int a = 0; a < z.n(); ++a) {
    for (int b = a + 1; b < z.n(); ++b, ++k) {
      if (a == std::min(i, j) && b == std::max(i, j)) {
        return z.field().from_rational(Rational(1, 2)) * z.basis_matrix(k);
      }
    }
  }
  throw Error("not a transposition of S_" + std::to_string(z.n()));
}

// The map M(S_n) -> ZS_n, (ij) -> (e_ii + e_jj - e_ij - e_ji) / 2, verified
// bijective and multiplicative.
template <ExactField F>
Matrix<typename F::Element> symmetric_model_iso(const MatsuoAlgebra<F>& m, const ZeroSumJordan<F>& z) {
  using S = typename F::Element;
  const TranspoGroup& g = m.group();
  if (g.family() != Family::Symmetric || g.size() != z.dim()) {
    throw WrongFamily("symmetric model needs M(S_" + std::to_string(z.n()) + "), got " + g.name());
  }
  Matrix<S> phi = m.algebra().zero_map();
  for (int p = 0; p < g.size(); ++p) {
    const auto& t = std::get<TranspositionPoint>(g.payload(p));
    for (const auto& [k, v] : z.coordinates(transposition_image(z, t.i, t.j))) phi(k, p) = v;
  }
  if (!inverse(phi)) throw VerificationFailure("symmetric model map is not bijective");
  if (auto bad = homomorphism_failure(m.algebra(), z.algebra(), phi)) {
    throw VerificationFailure("symmetric model map is not multiplicative on " + m.algebra().label(bad->first) +
                              " * " + m.algebra().label(bad->second));
  }
  return phi;
}

}  // namespace matsuo

#endif  // MATSUO_AUTOS_HPP
