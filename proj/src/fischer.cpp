#include "matsuo/fischer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "matsuo/errors.hpp"

namespace matsuo {

std::string to_string(PlaneType t) {
  switch (t) {
    case PlaneType::Degenerate: return "Degenerate";
    case PlaneType::Line: return "Line";
    case PlaneType::DualAffine2: return "DualAffine2";
    case PlaneType::Affine3: return "Affine3";
  }
  return "?";
}

std::string to_string(const FourGenType& t) {
  switch (t.kind) {
    case FourGenKind::S5: return "S5";
    case FourGenKind::WD4: return "WD4";
    case FourGenKind::AffA3: return "AffA3";
    case FourGenKind::Mou3: return "Mou3";
    case FourGenKind::ThreeGen: return "ThreeGen(" + to_string(*t.plane) + ")";
    case FourGenKind::Unknown: return "Unknown(" + std::to_string(t.size) + ")";
  }
  return "?";
}

std::string to_string(LineOrbit o) { return o == LineOrbit::Vertical ? "vertical" : "horizontal"; }

FischerSpace::FischerSpace(TranspoGroup g)
    : g_(std::move(g)),
      line_of_(static_cast<std::size_t>(g_.size()) * g_.size(), -1),
      through_(g_.size()),
      cache_(std::make_shared<Cache>()) {
  int n = g_.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g_.collinear(a, b)) continue;
      Line l{a, b, g_.third(a, b)};
      std::sort(l.begin(), l.end());
      if (l[0] == a && l[1] == b) lines_.push_back(l);
    }
  }
  std::sort(lines_.begin(), lines_.end());
  for (int i = 0; i < static_cast<int>(lines_.size()); ++i) {
    const Line& l = lines_[i];
    for (int x : l) {
      through_[x].push_back(i);
      for (int y : l) {
        if (x != y) line_of_[static_cast<std::size_t>(x) * n + y] = i;
      }
    }
  }
}

std::optional<int> FischerSpace::find_line(Line l) const {
  std::sort(l.begin(), l.end());
  int i = line_index(l[0], l[1]);
  if (i < 0 || lines_[i] != l) return std::nullopt;
  return i;
}

std::string FischerSpace::format(const Line& l) const {
  return "{" + g_.label(l[0]) + "," + g_.label(l[1]) + "," + g_.label(l[2]) + "}";
}

std::string FischerSpace::format(const PointSet& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g_.label(s[i]);
  return out + "}";
}

PointSet FischerSpace::compute_closure(const PointSet& seed) const {
  std::vector<char> in(num_points(), 0);
  std::vector<int> members;
  auto add = [&](int p) {
    if (!in[p]) {
      in[p] = 1;
      members.push_back(p);
    }
  };
  for (int p : seed) add(p);
  // Each pair is visited once, when its later member is processed.
  for (std::size_t i = 0; i < members.size(); ++i) {
    int p = members[i];
    for (std::size_t j = 0; j < i; ++j) {
      int q = members[j];
      if (g_.collinear(p, q)) add(g_.third(p, q));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

PointSet FischerSpace::closure(PointSet seed) const {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->closures.find(seed);
    if (it != cache_->closures.end()) return it->second;
  }
  PointSet result = compute_closure(seed);
  std::lock_guard lock(cache_->mutex);
  cache_->closures.emplace(std::move(seed), result);
  return result;
}

std::vector<PointSet> FischerSpace::components(const PointSet& subset) const {
  std::vector<int> parent(subset.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (g_.collinear(subset[i], subset[j])) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  }
  std::map<int, PointSet> groups;
  for (std::size_t i = 0; i < subset.size(); ++i) groups[find(static_cast<int>(i))].push_back(subset[i]);
  std::vector<PointSet> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> FischerSpace::components() const {
  PointSet all(num_points());
  std::iota(all.begin(), all.end(), 0);
  return components(all);
}

PlaneType FischerSpace::plane_type(int a, int b, int c) const {
  PointSet span = closure({a, b, c});
  if (components(span).size() > 1) return PlaneType::Degenerate;
  switch (span.size()) {
    case 1: return PlaneType::Degenerate;
    case 3: return PlaneType::Line;
    case 6: return PlaneType::DualAffine2;
    case 9: return PlaneType::Affine3;
    default:
      throw FischerAxiomViolation("three points generate a connected subspace of size " +
                                  std::to_string(span.size()) + ": " + format(span));
  }
}

FourGenType FischerSpace::four_gen_type(const PointSet& points) const {
  if (points.empty()) throw Error("four_gen_type needs at least one point");
  PointSet span = closure(points);
  PointSet comp;
  for (auto& c : components(span)) {
    if (std::binary_search(c.begin(), c.end(), points.front())) comp = c;
  }
  int size = static_cast<int>(comp.size());
  switch (size) {
    case 1: return {FourGenKind::ThreeGen, size, PlaneType::Degenerate};
    case 3: return {FourGenKind::ThreeGen, size, PlaneType::Line};
    case 6: return {FourGenKind::ThreeGen, size, PlaneType::DualAffine2};
    case 9: return {FourGenKind::ThreeGen, size, PlaneType::Affine3};
    case 10: return {FourGenKind::S5, size, std::nullopt};
    case 12: return {FourGenKind::WD4, size, std::nullopt};
    case 18: return {FourGenKind::AffA3, size, std::nullopt};
    case 27: return {FourGenKind::Mou3, size, std::nullopt};
    default: return {FourGenKind::Unknown, size, std::nullopt};
  }
}

std::vector<PointSet> FischerSpace::planes_through(const Line& l) const {
  std::set<PointSet> found;
  for (int c = 0; c < num_points(); ++c) {
    if (c == l[0] || c == l[1] || c == l[2]) continue;
    if (!g_.collinear(c, l[0]) && !g_.collinear(c, l[1]) && !g_.collinear(c, l[2])) continue;
    found.insert(closure({l[0], l[1], l[2], c}));
  }
  return {found.begin(), found.end()};
}

std::vector<std::pair<PointSet, PlaneType>> FischerSpace::planes() const {
  std::map<PointSet, PlaneType> found;
  for (const Line& l : lines_) {
    for (int c = 0; c < num_points(); ++c) {
      if (c == l[0] || c == l[1] || c == l[2]) continue;
      int a = -1;
      for (int x : l) {
        if (g_.collinear(c, x)) a = x;
      }
      if (a < 0) continue;
      PointSet span = closure({l[0], l[1], l[2], c});
      if (found.count(span)) continue;
      int b = a == l[0] ? l[1] : l[0];
      found.emplace(std::move(span), plane_type(a, b, c));
    }
  }
  return {found.begin(), found.end()};
}

LineOrbit FischerSpace::line_orbit_class(const Line& l) const {
  if (g_.family() != Family::AffineWeyl) {
    throw WrongFamily("line orbit classes are defined for 3^n:W spaces only, not " + g_.name());
  }
  int root = std::get<AffinePoint>(g_.payload(l[0])).root;
  for (int p : l) {
    if (std::get<AffinePoint>(g_.payload(p)).root != root) return LineOrbit::Horizontal;
  }
  return LineOrbit::Vertical;
}

bool FischerSpace::is_vertical(const Line& l) const {
  if (g_.family() == Family::AffineWeyl) return line_orbit_class(l) == LineOrbit::Vertical;
  auto ps = planes_through(l);
  if (ps.empty()) return false;
  return std::all_of(ps.begin(), ps.end(), [&](const PointSet& p) { return p.size() == 9; });
}

NearSolidResult FischerSpace::is_near_solid(const Line& l) const {
  int n = num_points();
  std::optional<bool> vertical;
  std::set<PointSet> seen;
  for (int c = 0; c < n; ++c) {
    for (int d = c + 1; d < n; ++d) {
      PointSet span = closure({l[0], l[1], l[2], c, d});
      PointSet comp;
      for (auto& part : components(span)) {
        if (std::binary_search(part.begin(), part.end(), l[0])) comp = std::move(part);
      }
      if (!seen.insert(comp).second) continue;
      FourGenType t = four_gen_type(comp);
      if (t.kind == FourGenKind::ThreeGen || t.kind == FourGenKind::S5) continue;
      if (t.kind == FourGenKind::AffA3) {
        if (!vertical) vertical = is_vertical(l);
        if (*vertical) continue;
      }
      return {false, comp, t};
    }
  }
  return {};
}

std::vector<std::vector<int>> FischerSpace::line_orbits() const {
  int m = static_cast<int>(lines_.size());
  std::vector<std::vector<int>> perms;
  for (int a = 0; a < num_points(); ++a) perms.push_back(g_.conjugation_permutation(a));
  std::vector<int> orbit_of(m, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < m; ++start) {
    if (orbit_of[start] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::vector<int> queue{start};
    orbit_of[start] = id;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Line& l = lines_[queue[k]];
      orbits[id].push_back(queue[k]);
      for (const auto& p : perms) {
        int image = line_index(p[l[0]], p[l[1]]);
        if (orbit_of[image] < 0) {
          orbit_of[image] = id;
          queue.push_back(image);
        }
      }
    }
    std::sort(orbits[id].begin(), orbits[id].end());
  }
  return orbits;
}

bool FischerSpace::transitive_on_collinear_pairs() const {
  int n = num_points();
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g_.collinear(a, b)) all.emplace_back(a, b);
    }
  }
  if (all.empty()) return true;
  std::vector<std::vector<int>> perms;
  for (int a = 0; a < n; ++a) perms.push_back(g_.conjugation_permutation(a));
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::pair<int, int>> queue{all.front()};
  seen[all.front().first * n + all.front().second] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [a, b] = queue[k];
    for (const auto& p : perms) {
      int x = p[a];
      int y = p[b];
      if (!seen[x * n + y]) {
        seen[x * n + y] = 1;
        queue.emplace_back(x, y);
      }
    }
  }
  return queue.size() == all.size();
}

bool FischerSpace::is_partial_linear_space() const {
  int n = num_points();
  for (const Line& l : lines_) {
    for (int x : l) {
      for (int y : l) {
        if (x == y) continue;
        if (!g_.collinear(x, y)) return false;
        int t = g_.third(x, y);
        if (t != l[0] && t != l[1] && t != l[2]) return false;
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int count = 0;
      for (int i : through_[a]) {
        const Line& l = lines_[i];
        count += (l[0] == b || l[1] == b || l[2] == b);
      }
      if (count > 1) return false;
      if (count != (g_.collinear(a, b) ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace matsuo
