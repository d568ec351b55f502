#ifndef MATSUO_FISCHER_HPP
#define MATSUO_FISCHER_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "matsuo/transpo.hpp"

namespace matsuo {

using PointSet = std::vector<int>;  // sorted, duplicate free
using Line = std::array<int, 3>;    // sorted

enum class PlaneType { Degenerate, Line, DualAffine2, Affine3 };

enum class FourGenKind { S5, WD4, AffA3, Mou3, ThreeGen, Unknown };

struct FourGenType {
  FourGenKind kind;
  int size;                        // size of the classified component
  std::optional<PlaneType> plane;  // set for ThreeGen
};

enum class LineOrbit { Vertical, Horizontal };

struct NearSolidResult {
  bool near_solid = true;
  // On rejection: the offending component and its type.
  std::optional<PointSet> witness;
  std::optional<FourGenType> witness_type;
};

std::string to_string(PlaneType t);
std::string to_string(const FourGenType& t);
std::string to_string(LineOrbit o);

// The partial linear space on D whose lines are {a, b, b^a} for o(ab) = 3.
class FischerSpace {
 public:
  explicit FischerSpace(TranspoGroup g);

  const TranspoGroup& group() const { return g_; }
  int num_points() const { return g_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  // Index of the line through collinear a and b, or -1.
  int line_index(int a, int b) const { return line_of_[static_cast<std::size_t>(a) * num_points() + b]; }
  const std::vector<int>& lines_through(int p) const { return through_[p]; }
  std::optional<int> find_line(Line l) const;
  std::string format(const Line& l) const;
  std::string format(const PointSet& s) const;

  // Smallest subspace containing the seed. Memoized; safe to call concurrently.
  PointSet closure(PointSet seed) const;
  // Connected components of the collinearity graph restricted to `subset`.
  std::vector<PointSet> components(const PointSet& subset) const;
  std::vector<PointSet> components() const;
  bool is_connected() const { return components().size() <= 1; }

  // Throws FischerAxiomViolation when a connected closure has a size
  // outside {1, 3, 6, 9}.
  PlaneType plane_type(int a, int b, int c) const;
  // Component of the first point inside closure(points), classified by size.
  FourGenType four_gen_type(const PointSet& points) const;

  // Planes spanned by `l` and a point collinear with some point of `l`.
  std::vector<PointSet> planes_through(const Line& l) const;
  // Every plane in the space, with its type, sorted.
  std::vector<std::pair<PointSet, PlaneType>> planes() const;

  // Requires an AffineWeyl group; decided from the point payloads.
  LineOrbit line_orbit_class(const Line& l) const;
  // Payload test on AffineWeyl groups, otherwise every plane through l is an
  // affine plane of order 3 (and there is at least one).
  bool is_vertical(const Line& l) const;
  NearSolidResult is_near_solid(const Line& l) const;

  // Orbits of lines under the group generated by all conjugations.
  std::vector<std::vector<int>> line_orbits() const;
  // Whether the conjugations act transitively on ordered noncommuting pairs.
  bool transitive_on_collinear_pairs() const;
  // Whether two distinct points lie on at most one line, and every line is
  // closed under the third-point operation.
  bool is_partial_linear_space() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<PointSet, PointSet> closures;
  };

  PointSet compute_closure(const PointSet& seed) const;

  TranspoGroup g_;
  std::vector<Line> lines_;
  std::vector<int> line_of_;
  std::vector<std::vector<int>> through_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace matsuo

#endif  // MATSUO_FISCHER_HPP
