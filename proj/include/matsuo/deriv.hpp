#ifndef MATSUO_DERIV_HPP
#define MATSUO_DERIV_HPP

#include <optional>
#include <utility>
#include <vector>

#include "matsuo/matsuo.hpp"
#include "matsuo/parallel.hpp"

namespace matsuo {

// Linear self-maps are n x n matrices whose column a is d(a), so the entry
// (b, a) is d(a)_b. As unknowns they are numbered column-major: d(a)_b is
// unknown a * n + b.
inline int endo_index(int n, int a, int b) { return a * n + b; }

template <class S>
Vector<S> flatten(const Matrix<S>& d) {
  const int n = static_cast<int>(d.rows());
  Vector<S> v(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) v[endo_index(n, a, b)] = d(b, a);
  }
  return v;
}

template <class S>
Matrix<S> unflatten(const Vector<S>& v, int n) {
  Matrix<S> d(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) d(b, a) = v[endo_index(n, a, b)];
  }
  return d;
}

template <class S>
struct DerBasis {
  int unknowns = 0;
  int rank = 0;  // rank of the constraint system
  std::vector<Matrix<S>> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Constraints d(xy) = d(x) y + x d(y) on basis pairs, one row per pair and
// output coordinate. Valid for any algebra given by structure constants.
template <ExactField F>
SparseSystem<typename F::Element> build_leibniz_system(const Algebra<F>& alg) {
  using S = typename F::Element;
  const int n = alg.dim();
  const bool commutative = alg.is_commutative();
  std::vector<std::vector<SparseRow<S>>> blocks(n);
  parallel_for(n, [&](int i) {
    for (int j = commutative ? i : 0; j < n; ++j) {
      std::vector<SparseRow<S>> rows(n);
      for (const auto& [c, v] : alg.product(i, j)) {
        for (int k = 0; k < n; ++k) rows[k].emplace_back(endo_index(n, c, k), v);
      }
      for (int y = 0; y < n; ++y) {
        for (const auto& [k, v] : alg.product(y, j)) rows[k].emplace_back(endo_index(n, i, y), -v);
        for (const auto& [k, v] : alg.product(i, y)) rows[k].emplace_back(endo_index(n, j, y), -v);
      }
      for (auto& r : rows) blocks[i].push_back(std::move(r));
    }
  });
  SparseSystem<S> system(n * n);
  for (auto& block : blocks) {
    for (auto& r : block) system.add_row(std::move(r));
  }
  return system;
}

// Families of local relations that characterize derivations of a Matsuo
// algebra with eta = 1/2. Here a, b collinear means o(ab) = 3.
enum class Relation { R1, R2, R3, R4, R5, R6, R7 };

template <ExactField F>
SparseSystem<typename F::Element> build_r_system(const MatsuoAlgebra<F>& m, bool include_r7 = true) {
  using S = typename F::Element;
  const F& f = m.field();
  if (!(m.eta() == f.from_rational(Rational(1, 2)))) {
    throw BadEta("the relation system requires eta = 1/2");
  }
  const TranspoGroup& g = m.group();
  const int n = g.size();
  const S one = f.one();
  const S two = f.from_int(2);
  auto x = [n](int a, int b) { return endo_index(n, a, b); };
  SparseSystem<S> sys(n * n);

  // (R1) d(a)_a = 0
  for (int a = 0; a < n; ++a) sys.add_row({{x(a, a), one}});
  // (R2) d(a)_b + d(a)_{b^a} = 0 for collinear a, b
  // (R3) d(a)_b = 0 for orthogonal a, b
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.collinear(a, b)) sys.add_row({{x(a, b), one}, {x(a, g.conj(b, a)), one}});
      if (g.orthogonal(a, b)) sys.add_row({{x(a, b), one}});
    }
  }
  // (R4) d(a)_c + d(b)_c + d(a)_{c^{ab}} + d(b)_{c^{ab}} = 0 for a orthogonal
  // to b and c collinear with both
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!g.orthogonal(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!g.collinear(a, c) || !g.collinear(b, c)) continue;
        int cab = g.conj(g.conj(c, a), b);
        sys.add_row({{x(a, c), one}, {x(b, c), one}, {x(a, cab), one}, {x(b, cab), one}});
      }
    }
  }
  // (R5) d(a^b)_e - d(a)_e - d(b)_{e^a} = 0 for a collinear with b and e, b
  // orthogonal to e
  // (R6) d(a^b)_e - d(a)_{e^b} - d(b)_{e^a} = 0 for a collinear with b, and e
  // collinear with a, b and a^b
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!g.collinear(a, b)) continue;
      int ab = g.conj(a, b);
      for (int e = 0; e < n; ++e) {
        if (g.collinear(a, e) && g.orthogonal(b, e)) {
          sys.add_row({{x(ab, e), one}, {x(a, e), -one}, {x(b, g.conj(e, a)), -one}});
        }
        if (g.collinear(e, a) && g.collinear(e, b) && g.collinear(e, ab)) {
          sys.add_row({{x(ab, e), one}, {x(a, g.conj(e, b)), -one}, {x(b, g.conj(e, a)), -one}});
        }
      }
    }
  }
  // (R7) 2 d(b)_a + d(a)_b + d(a^b)_a - sum d(b)_e = 0 for collinear a, b; the
  // sum runs over all e orthogonal to a and collinear with b.
  if (include_r7) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!g.collinear(a, b)) continue;
        SparseRow<S> row{{x(b, a), two}, {x(a, b), one}, {x(g.conj(a, b), a), one}};
        for (int e = 0; e < n; ++e) {
          if (g.orthogonal(a, e) && g.collinear(b, e)) row.emplace_back(x(b, e), -one);
        }
        sys.add_row(std::move(row));
      }
    }
  }
  return sys;
}

template <class S>
DerBasis<S> solve_endomorphisms(const SparseSystem<S>& system, int n) {
  Nullspace<S> ns = sparse_nullspace(system);
  DerBasis<S> out;
  out.unknowns = system.unknowns();
  out.rank = ns.rank;
  for (const auto& v : ns.basis) out.basis.push_back(unflatten(v, n));
  return out;
}

template <ExactField F>
DerBasis<typename F::Element> derivations(const Algebra<F>& alg) {
  return solve_endomorphisms(build_leibniz_system(alg), alg.dim());
}

template <ExactField F>
DerBasis<typename F::Element> derivations_from_relations(const MatsuoAlgebra<F>& m, bool include_r7 = true) {
  return solve_endomorphisms(build_r_system(m, include_r7), m.dim());
}

struct ResidualReport {
  int nonzero_pairs = 0;
  std::optional<std::pair<int, int>> first;  // first basis pair with nonzero residual
  bool zero() const { return nonzero_pairs == 0; }
};

// Residuals d(xy) - d(x) y - x d(y) over all basis pairs.
template <ExactField F>
ResidualReport leibniz_residual(const Algebra<F>& alg, const Matrix<typename F::Element>& d) {
  using S = typename F::Element;
  using Element = Vector<S>;
  if (d.rows() != alg.dim() || d.cols() != alg.dim()) throw MixedAlgebras("map does not match the algebra");
  ResidualReport r;
  const int n = alg.dim();
  const bool commutative = alg.is_commutative();
  for (int i = 0; i < n; ++i) {
    for (int j = commutative ? i : 0; j < n; ++j) {
      Element res = d * alg.multiply(i, j) - alg.multiply(Element(d.col(i)), alg.basis(j)) -
                    alg.multiply(alg.basis(i), Element(d.col(j)));
      if (!is_zero(res)) {
        ++r.nonzero_pairs;
        if (!r.first) r.first = std::make_pair(i, j);
      }
    }
  }
  return r;
}

template <ExactField F>
bool satisfies_relations(const MatsuoAlgebra<F>& m, const Matrix<typename F::Element>& d,
                         bool include_r7 = true) {
  return build_r_system(m, include_r7).satisfied_by(flatten(d));
}

template <class S>
Matrix<S> lie_bracket(const Matrix<S>& d, const Matrix<S>& e) {
  return d * e - e * d;
}

// Rank of the maps as vectors of the n^2-dimensional space.
template <class S>
int span_rank(const std::vector<Matrix<S>>& maps, int n, const S& zero) {
  if (maps.empty()) return 0;
  Matrix<S> m = Matrix<S>::Constant(static_cast<int>(maps.size()), n * n, zero);
  for (std::size_t i = 0; i < maps.size(); ++i) m.row(static_cast<int>(i)) = flatten(maps[i]).transpose();
  return rank(m);
}

// Whether every member of `inner` lies in the span of `outer`.
template <class S>
bool span_contained(const DerBasis<S>& inner, const DerBasis<S>& outer, int n, const S& zero) {
  std::vector<Matrix<S>> all = outer.basis;
  all.insert(all.end(), inner.basis.begin(), inner.basis.end());
  return span_rank(all, n, zero) == span_rank(outer.basis, n, zero);
}

struct VanishingEntry {
  int a;
  int b;
  int line;           // index into FischerSpace::lines()
  bool forced_zero;   // d(a)_b = 0 for every derivation in the span
};

// One entry per ordered collinear pair (a, b).
template <ExactField F>
std::vector<VanishingEntry> vanishing_report(const MatsuoAlgebra<F>& m,
                                             const DerBasis<typename F::Element>& basis) {
  std::vector<VanishingEntry> out;
  const TranspoGroup& g = m.group();
  for (int a = 0; a < g.size(); ++a) {
    for (int b = 0; b < g.size(); ++b) {
      if (!g.collinear(a, b)) continue;
      bool zero = true;
      for (const auto& d : basis.basis) zero = zero && d(b, a).is_zero();
      out.push_back({a, b, m.space().line_index(a, b), zero});
    }
  }
  return out;
}

// On 3^n:W algebras: d(a)_{b1} + d(a)_{b2} + d(a)_{b3} = 0 whenever a and b1
// span a horizontal line and {b1, b2, b3} is the vertical line through b1.
// Returns the first violating (a, b1).
template <ExactField F>
std::optional<std::pair<int, int>> vertical_sum_failure(const MatsuoAlgebra<F>& m,
                                                        const DerBasis<typename F::Element>& basis) {
  const FischerSpace& fs = m.space();
  const TranspoGroup& g = m.group();
  if (g.family() != Family::AffineWeyl) throw WrongFamily("vertical sums need a 3^n:W algebra");
  for (int a = 0; a < g.size(); ++a) {
    for (int b1 = 0; b1 < g.size(); ++b1) {
      if (!g.collinear(a, b1)) continue;
      if (fs.line_orbit_class(fs.lines()[fs.line_index(a, b1)]) != LineOrbit::Horizontal) continue;
      int root = std::get<AffinePoint>(g.payload(b1)).root;
      for (const auto& d : basis.basis) {
        auto sum = m.field().zero();
        for (int eps = 0; eps < 3; ++eps) sum += d(3 * root + eps, a);
        if (!sum.is_zero()) return std::make_pair(a, b1);
      }
    }
  }
  return std::nullopt;
}

// On 3^n:W algebras: rank of d -> (d((0, s_a))_{(+, s_a)})_{a simple}
// restricted to the span of `basis`. Equal to the dimension exactly when a
// derivation is determined by these values.
template <ExactField F>
int simple_root_evaluation_rank(const MatsuoAlgebra<F>& m, const DerBasis<typename F::Element>& basis) {
  using S = typename F::Element;
  const TranspoGroup& g = m.group();
  if (g.family() != Family::AffineWeyl) throw WrongFamily("simple roots need a 3^n:W algebra");
  const RootSystem& rs = *g.roots();
  if (basis.basis.empty()) return 0;
  Matrix<S> ev = Matrix<S>::Constant(rs.rank(), basis.dim(), m.field().zero());
  for (int i = 0; i < rs.rank(); ++i) {
    int root = *rs.index_of(rs.simple_root(i));
    for (int k = 0; k < basis.dim(); ++k) ev(i, k) = basis.basis[k](3 * root + 1, 3 * root);
  }
  return rank(ev);
}

}  // namespace matsuo

#endif  // MATSUO_DERIV_HPP
