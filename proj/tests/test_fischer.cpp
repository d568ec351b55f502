#include <gtest/gtest.h>

#include <random>
#include <set>

#include "matsuo/errors.hpp"
#include "matsuo/fischer.hpp"
#include "oracle.hpp"

using namespace matsuo;

namespace {

std::set<std::set<int>> reference_lines(const oracle::Table& t) {
  std::set<std::set<int>> out;
  for (int a = 0; a < t.size(); ++a) {
    for (int b = 0; b < t.size(); ++b) {
      if (a != b && !t.commute(a, b)) out.insert({a, b, t.conj[a][b]});
    }
  }
  return out;
}

// Smallest set containing the seed and closed under conjugation within it.
std::set<int> reference_closure(const oracle::Table& t, std::set<int> s) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : std::set<int>(s)) {
      for (int b : std::set<int>(s)) grew = s.insert(t.conj[a][b]).second || grew;
    }
  }
  return s;
}

int binomial3(int n) { return n * (n - 1) * (n - 2) / 6; }

int near_solid_count(const FischerSpace& fs) {
  int k = 0;
  for (const auto& l : fs.lines()) k += fs.is_near_solid(l).near_solid;
  return k;
}

}  // namespace

TEST(Fischer, LineCounts) {
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(FischerSpace(build_symmetric(n)).lines().size(), static_cast<std::size_t>(binomial3(n)));
  }
  // Every pair of distinct points of AG(n, 3) spans a line.
  for (int n = 1; n <= 3; ++n) {
    int q = 1;
    for (int i = 0; i < n; ++i) q *= 3;
    EXPECT_EQ(FischerSpace(build_moufang(n)).lines().size(), static_cast<std::size_t>(q * (q - 1) / 6));
  }
  EXPECT_EQ(FischerSpace(parse_group("W:D4")).lines().size(), reference_lines(oracle::weyl('D', 4)).size());
  EXPECT_EQ(FischerSpace(parse_group("3W:A3")).lines().size(), reference_lines(oracle::affine_weyl('A', 3)).size());
  EXPECT_EQ(FischerSpace(parse_group("3W:D4")).lines().size(), reference_lines(oracle::affine_weyl('D', 4)).size());
}

TEST(Fischer, ClosureMatchesReference) {
  auto g = parse_group("3W:A3");
  auto t = oracle::affine_weyl('A', 3);
  auto m = oracle::match(g, t);
  FischerSpace fs(g);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, g.size() - 1);
  for (int k = 0; k < 60; ++k) {
    std::set<int> seed;
    int size = 1 + k % 4;
    while (static_cast<int>(seed.size()) < size) seed.insert(pick(rng));
    PointSet lib = fs.closure(PointSet(seed.begin(), seed.end()));
    std::set<int> ref_seed;
    for (int p : seed) ref_seed.insert(m[p]);
    std::set<int> ref = reference_closure(t, ref_seed);
    std::set<int> mapped;
    for (int p : lib) mapped.insert(m[p]);
    EXPECT_EQ(mapped, ref);
  }
}

TEST(Fischer, PartialLinearSpace) {
  for (const char* name : {"S5", "S6", "W:D4", "3W:A3", "3W:D4", "M3:3", "S3+S3"}) {
    FischerSpace fs(parse_group(name));
    EXPECT_TRUE(fs.is_partial_linear_space()) << name;
  }
}

TEST(Fischer, Connectivity) {
  for (const char* name : {"S5", "W:D4", "3W:A3", "M3:3"}) EXPECT_TRUE(FischerSpace(parse_group(name)).is_connected());
  EXPECT_EQ(FischerSpace(parse_group("S3+S3")).components().size(), 2u);
}

TEST(Fischer, PlaneTypes) {
  FischerSpace s4(build_symmetric(4));
  // (12), (13), (14) span the dual affine plane S4.
  EXPECT_EQ(s4.plane_type(0, 1, 2), PlaneType::DualAffine2);
  EXPECT_EQ(s4.plane_type(0, 1, 3), PlaneType::Line);
  FischerSpace m2(build_moufang(2));
  EXPECT_EQ(m2.plane_type(0, 1, 3), PlaneType::Affine3);
  FischerSpace s5(build_symmetric(5));
  // (12) and (34) commute, (35) meets only the second.
  EXPECT_EQ(s5.plane_type(*s5.group().find("(12)"), *s5.group().find("(34)"), *s5.group().find("(35)")),
            PlaneType::Degenerate);
}

TEST(Fischer, PlaneCensus) {
  auto count = [](const FischerSpace& fs, PlaneType t) {
    int k = 0;
    for (const auto& [p, type] : fs.planes()) k += type == t;
    return k;
  };
  // S_n: one dual affine plane per 4-subset of {1..n}.
  FischerSpace s5(build_symmetric(5));
  EXPECT_EQ(count(s5, PlaneType::DualAffine2), 5);
  EXPECT_EQ(count(s5, PlaneType::Affine3), 0);
  // AG(3, 3) has 117 lines and 39 planes; W:D4 is symplectic.
  EXPECT_EQ(count(FischerSpace(build_moufang(3)), PlaneType::Affine3), 39);
  EXPECT_EQ(count(FischerSpace(parse_group("W:D4")), PlaneType::Affine3), 0);
}

TEST(Fischer, FourGeneratedTypes) {
  FischerSpace s5(build_symmetric(5));
  PointSet all;
  for (int p = 0; p < 10; ++p) all.push_back(p);
  auto t = s5.four_gen_type(all);
  EXPECT_EQ(t.kind, FourGenKind::S5);
  EXPECT_EQ(t.size, 10);
  FischerSpace d4(parse_group("W:D4"));
  PointSet d4all;
  for (int p = 0; p < 12; ++p) d4all.push_back(p);
  EXPECT_EQ(d4.four_gen_type(d4all).kind, FourGenKind::WD4);
}

TEST(Fischer, NearSolidSymmetric) {
  FischerSpace s5(build_symmetric(5));
  EXPECT_EQ(near_solid_count(s5), 10);
}

TEST(Fischer, NearSolidNone) {
  for (const char* name : {"W:D4", "M3:3"}) {
    FischerSpace fs(parse_group(name));
    EXPECT_EQ(near_solid_count(fs), 0) << name;
    for (const auto& l : fs.lines()) {
      auto r = fs.is_near_solid(l);
      ASSERT_TRUE(r.witness) << name;
      EXPECT_NE(r.witness_type->kind, FourGenKind::ThreeGen);
    }
  }
}

TEST(Fischer, NearSolidThreeGeneratedIsVacuous) {
  for (const char* name : {"S3", "S4", "W:A3", "3W:A1", "3W:A2", "M3:2"}) {
    FischerSpace fs(parse_group(name));
    EXPECT_EQ(near_solid_count(fs), static_cast<int>(fs.lines().size())) << name;
  }
}

TEST(Fischer, NearSolidAreVerticalSpread) {
  for (auto [name, type, rank] : std::vector<std::tuple<const char*, char, int>>{{"3W:A3", 'A', 3}, {"3W:D4", 'D', 4}}) {
    FischerSpace fs(parse_group(name));
    auto t = oracle::affine_weyl(type, rank);
    auto m = oracle::match(fs.group(), t);
    std::vector<int> cover(fs.num_points(), 0);
    for (const auto& l : fs.lines()) {
      // Vertical in the reference: all three keys share the root after "eps:".
      std::set<std::string> roots;
      for (int p : l) roots.insert(t.keys[m[p]].substr(2));
      bool vertical = roots.size() == 1;
      bool ns = fs.is_near_solid(l).near_solid;
      EXPECT_EQ(ns, vertical) << fs.format(l);
      EXPECT_EQ(fs.line_orbit_class(l) == LineOrbit::Vertical, vertical);
      EXPECT_EQ(fs.is_vertical(l), vertical);
      if (ns) {
        for (int p : l) ++cover[p];
      }
    }
    for (int c : cover) EXPECT_EQ(c, 1) << name;
  }
}

TEST(Fischer, NearSolidPlaneDichotomy) {
  for (const char* name : {"S5", "3W:A3"}) {
    FischerSpace fs(parse_group(name));
    for (const auto& l : fs.lines()) {
      if (!fs.is_near_solid(l).near_solid) continue;
      std::set<std::size_t> sizes;
      for (const auto& p : fs.planes_through(l)) sizes.insert(p.size());
      EXPECT_LE(sizes.size(), 1u) << fs.format(l);
    }
  }
}

TEST(Fischer, LineOrbits) {
  EXPECT_EQ(FischerSpace(parse_group("3W:A3")).line_orbits().size(), 2u);
  EXPECT_EQ(FischerSpace(parse_group("S5")).line_orbits().size(), 1u);
  EXPECT_THROW(FischerSpace(parse_group("S5")).line_orbit_class({0, 1, 4}), WrongFamily);
}

TEST(Fischer, TransitiveOnCollinearPairs) {
  EXPECT_TRUE(FischerSpace(parse_group("S5")).transitive_on_collinear_pairs());
  EXPECT_TRUE(FischerSpace(parse_group("W:D4")).transitive_on_collinear_pairs());
  EXPECT_FALSE(FischerSpace(parse_group("3W:A3")).transitive_on_collinear_pairs());
}

TEST(Fischer, Formatting) {
  FischerSpace s3(build_symmetric(3));
  EXPECT_EQ(s3.format(s3.lines()[0]), "{(12),(13),(23)}");
}
