#ifndef MATSUO_MATSUO_HPP
#define MATSUO_MATSUO_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "matsuo/algebra.hpp"
#include "matsuo/fischer.hpp"

namespace matsuo {

// A(1), A(0), A(eta) of an axis as column bases, with the change of basis
// P = [A1 | A0 | Aeta] and its inverse.
template <class S>
struct Eigendecomp {
  Matrix<S> a1;
  Matrix<S> a0;
  Matrix<S> aeta;
  Matrix<S> change;
  Matrix<S> change_inverse;

  std::array<int, 3> dims() const {
    return {static_cast<int>(a1.cols()), static_cast<int>(a0.cols()), static_cast<int>(aeta.cols())};
  }
};

struct FusionViolation {
  std::string rule;  // e.g. "eta*eta"
  int u;             // column in the first eigenspace basis
  int v;             // column in the second
};

struct FusionReport {
  int axis = 0;
  std::array<int, 3> dims{};
  std::vector<FusionViolation> violations;
  bool pass() const { return violations.empty(); }
};

// Eigenspaces of L_a for eigenvalues 1, 0 and eta. Throws NotSemisimple when
// they do not span the algebra.
template <ExactField F>
Eigendecomp<typename F::Element> eigendecompose(const Algebra<F>& alg, int axis,
                                                const typename F::Element& eta) {
  using S = typename F::Element;
  const F& f = alg.field();
  Matrix<S> la = alg.left_multiplication(axis);
  Matrix<S> id = alg.identity_map();
  Eigendecomp<S> e;
  e.a1 = kernel(Matrix<S>(la - id));
  e.a0 = kernel(la);
  e.aeta = kernel(Matrix<S>(la - eta * id));
  int n = alg.dim();
  auto d = e.dims();
  if (d[0] + d[1] + d[2] != n) {
    throw NotSemisimple("eigenspaces of axis " + alg.label(axis) + " have dimensions " +
                        std::to_string(d[0]) + "+" + std::to_string(d[1]) + "+" + std::to_string(d[2]) +
                        " != " + std::to_string(n));
  }
  e.change = Matrix<S>::Constant(n, n, f.zero());
  e.change.leftCols(d[0]) = e.a1;
  e.change.middleCols(d[0], d[1]) = e.a0;
  e.change.rightCols(d[2]) = e.aeta;
  auto inv = inverse(e.change);
  if (!inv) throw NotSemisimple("eigenspaces of axis " + alg.label(axis) + " are not independent");
  e.change_inverse = *inv;
  return e;
}

// Checks the Jordan fusion law J(eta) on spanning vectors of the eigenspaces.
template <ExactField F>
FusionReport check_fusion(const Algebra<F>& alg, int axis, const Eigendecomp<typename F::Element>& e) {
  using S = typename F::Element;
  using Element = Vector<S>;
  FusionReport report;
  report.axis = axis;
  report.dims = e.dims();
  const std::array<const Matrix<S>*, 3> spaces{&e.a1, &e.a0, &e.aeta};
  const std::array<std::string, 3> names{"1", "0", "eta"};
  const std::array<int, 3> offset{0, report.dims[0], report.dims[0] + report.dims[1]};
  // allowed[x][y][z]: eigenspace z may occur in the product of x and y.
  bool allowed[3][3][3] = {};
  allowed[0][0][0] = true;
  allowed[0][2][2] = allowed[2][0][2] = true;
  allowed[1][1][1] = true;
  allowed[1][2][2] = allowed[2][1][2] = true;
  allowed[2][2][0] = allowed[2][2][1] = true;
  for (int x = 0; x < 3; ++x) {
    for (int y = x; y < 3; ++y) {
      const Matrix<S>& bx = *spaces[x];
      const Matrix<S>& by = *spaces[y];
      for (int u = 0; u < bx.cols(); ++u) {
        for (int v = (x == y ? u : 0); v < by.cols(); ++v) {
          Element prod = alg.multiply(Element(bx.col(u)), Element(by.col(v)));
          Element coords = e.change_inverse * prod;
          bool ok = true;
          for (int z = 0; z < 3 && ok; ++z) {
            if (allowed[x][y][z]) continue;
            for (int k = 0; k < report.dims[z]; ++k) {
              if (!coords[offset[z] + k].is_zero()) {
                ok = false;
                break;
              }
            }
          }
          if (!ok && report.violations.size() < 16) {
            report.violations.push_back({names[x] + "*" + names[y], u, v});
          }
        }
      }
    }
  }
  return report;
}

// The Matsuo algebra M_eta(k, (G, D)) on the points of a Fischer space.
template <ExactField F>
class MatsuoAlgebra {
 public:
  using Scalar = typename F::Element;
  using Element = Vector<Scalar>;
  using Map = Matrix<Scalar>;

  MatsuoAlgebra(std::shared_ptr<const FischerSpace> space, const Scalar& eta, const F& field)
      : space_(std::move(space)),
        eta_(field.zero() + eta),
        algebra_(field, space_->group().labels()),
        cache_(std::make_shared<Cache>()) {
    if (field.characteristic() == 2) throw BadCharacteristic("characteristic 2 is not supported");
    if (eta_.is_zero() || (eta_ - field.one()).is_zero()) {
      throw BadEta("eta must differ from 0 and 1, got " + scalar_string(field, eta_));
    }
    const TranspoGroup& g = space_->group();
    Scalar half_eta = eta_ * field.from_rational(Rational(1, 2));
    for (int a = 0; a < g.size(); ++a) {
      algebra_.set_product(a, a, {{a, field.one()}});
      for (int b = a + 1; b < g.size(); ++b) {
        if (!g.collinear(a, b)) continue;
        algebra_.set_product(a, b, {{a, half_eta}, {b, half_eta}, {g.third(a, b), -half_eta}});
      }
    }
  }

  const Algebra<F>& algebra() const { return algebra_; }
  const F& field() const { return algebra_.field(); }
  const FischerSpace& space() const { return *space_; }
  const std::shared_ptr<const FischerSpace>& space_ptr() const { return space_; }
  const TranspoGroup& group() const { return space_->group(); }
  const Scalar& eta() const { return eta_; }
  int dim() const { return algebra_.dim(); }

  Element multiply(const Element& x, const Element& y) const { return algebra_.multiply(x, y); }

  // Cached per axis.
  const Eigendecomp<Scalar>& eigendecompose(int axis) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->eigen.find(axis);
      if (it != cache_->eigen.end()) return *it->second;
    }
    auto e = std::make_shared<Eigendecomp<Scalar>>(matsuo::eigendecompose(algebra_, axis, eta_));
    if (e->a1.cols() != 1) {
      throw NotSemisimple("axis " + algebra_.label(axis) + " is not primitive");
    }
    std::lock_guard lock(cache_->mutex);
    return *cache_->eigen.emplace(axis, std::move(e)).first->second;
  }

  FusionReport check_fusion(int axis) const {
    return matsuo::check_fusion(algebra_, axis, eigendecompose(axis));
  }

  // Coefficient of a in the projection of b onto A_1(a).
  Scalar phi(int a, int b) const {
    const Eigendecomp<Scalar>& e = eigendecompose(a);
    // A_1(a) is spanned by a multiple of a; rescale to the coefficient of a.
    Scalar coord = e.change_inverse(0, b);
    return coord * e.a1(a, 0);
  }

  // Adjacency lists: b in out[a] iff a != b and phi_a(b) != 0.
  std::vector<std::vector<int>> projection_graph() const {
    std::vector<std::vector<int>> out(dim());
    for (int a = 0; a < dim(); ++a) {
      for (int b = 0; b < dim(); ++b) {
        if (a != b && !phi(a, b).is_zero()) out[a].push_back(b);
      }
    }
    return out;
  }

  // Strong connectivity of the projection graph.
  bool is_connected_algebra() const {
    auto graph = projection_graph();
    int n = dim();
    if (n <= 1) return true;
    std::vector<std::vector<int>> reverse(n);
    for (int a = 0; a < n; ++a) {
      for (int b : graph[a]) reverse[b].push_back(a);
    }
    auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
      std::vector<char> seen(n, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            ++count;
            stack.push_back(w);
          }
        }
      }
      return count == n;
    };
    return reaches_all(graph) && reaches_all(reverse);
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<Eigendecomp<Scalar>>> eigen;
  };

  std::shared_ptr<const FischerSpace> space_;
  Scalar eta_;
  Algebra<F> algebra_;
  std::shared_ptr<Cache> cache_;
};

template <ExactField F>
MatsuoAlgebra<F> build_matsuo(const FischerSpace& space, const typename F::Element& eta, const F& field) {
  return MatsuoAlgebra<F>(std::make_shared<const FischerSpace>(space), eta, field);
}

template <ExactField F>
MatsuoAlgebra<F> build_matsuo(const TranspoGroup& g, const typename F::Element& eta, const F& field) {
  return MatsuoAlgebra<F>(std::make_shared<const FischerSpace>(g), eta, field);
}

// The algebra on the disjoint union of the two point sets.
template <ExactField F>
MatsuoAlgebra<F> direct_sum(const MatsuoAlgebra<F>& a, const MatsuoAlgebra<F>& b) {
  if (!(a.field() == b.field())) throw MixedAlgebras("direct sum of algebras over different fields");
  if (!(a.eta() == b.eta())) throw MixedAlgebras("direct sum of algebras with different eta");
  return build_matsuo(disjoint_union(a.group(), b.group()), a.eta(), a.field());
}

}  // namespace matsuo

#endif  // MATSUO_MATSUO_HPP
