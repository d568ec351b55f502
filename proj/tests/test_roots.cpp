#include <gtest/gtest.h>

#include <set>

#include "matsuo/errors.hpp"
#include "matsuo/roots.hpp"
#include "oracle.hpp"

using namespace matsuo;

TEST(RootSystem, PositiveRootCounts) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(RootSystem::parse("A" + std::to_string(n)).num_positive(), n * (n + 1) / 2);
  }
  EXPECT_EQ(RootSystem::parse("D4").num_positive(), 12);
  EXPECT_EQ(RootSystem::parse("D5").num_positive(), 20);
  EXPECT_EQ(RootSystem::parse("E6").num_positive(), 36);
  EXPECT_EQ(RootSystem::parse("E7").num_positive(), 63);
  EXPECT_EQ(RootSystem::parse("E8").num_positive(), 120);
}

TEST(RootSystem, MatchesReferenceRoots) {
  for (auto [type, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'A', 5}, {'D', 4}, {'D', 5}}) {
    auto rs = RootSystem::parse(std::string(1, type) + std::to_string(n));
    std::set<std::vector<long>> lib;
    for (const auto& r : rs.positive_roots()) lib.insert(std::vector<long>(r.data(), r.data() + r.size()));
    auto ref = oracle::positive_roots(oracle::cartan(type, n));
    EXPECT_EQ(lib, std::set<std::vector<long>>(ref.begin(), ref.end())) << rs.name();
  }
}

TEST(RootSystem, ReflectionsPreservePairing) {
  auto rs = RootSystem::parse("D4");
  for (int i = 0; i < rs.rank(); ++i) {
    LatticeMap s = rs.simple_reflection(i);
    EXPECT_EQ(LatticeMap(s * s), LatticeMap::Identity(4, 4));
    EXPECT_EQ(LatticeMap(s.transpose() * rs.cartan() * s), rs.cartan());
  }
  for (int a = 0; a < rs.num_positive(); ++a) {
    EXPECT_EQ(rs.reflect(rs.root(a), rs.root(a)), RootVector(-rs.root(a)));
    EXPECT_EQ(rs.pairing(a, a), 2);
    for (int b = 0; b < rs.num_positive(); ++b) {
      EXPECT_EQ(rs.pairing(a, b), rs.pairing(b, a));
      EXPECT_TRUE(rs.index_of(rs.reflect(rs.root(b), rs.root(a))));
    }
  }
}

TEST(RootSystem, SignedIndex) {
  auto rs = RootSystem::parse("A3");
  auto [idx, sign] = *rs.signed_index_of(RootVector(-rs.root(4)));
  EXPECT_EQ(idx, 4);
  EXPECT_EQ(sign, -1);
  EXPECT_FALSE(rs.index_of(RootVector(2 * rs.root(0))));
}

TEST(RootSystem, DiagramAutomorphisms) {
  EXPECT_EQ(RootSystem::parse("A1").diagram_automorphisms().size(), 1u);
  EXPECT_EQ(RootSystem::parse("A2").diagram_automorphisms().size(), 2u);
  EXPECT_EQ(RootSystem::parse("A3").diagram_automorphisms().size(), 2u);
  EXPECT_EQ(RootSystem::parse("D4").diagram_automorphisms().size(), 6u);
  EXPECT_EQ(RootSystem::parse("D5").diagram_automorphisms().size(), 2u);
}

TEST(RootSystem, Format) {
  auto rs = RootSystem::parse("A2");
  EXPECT_EQ(RootSystem::format(rs.root(2)), "[1,1]");
  EXPECT_EQ(rs.name(), "A2");
}

TEST(RootSystem, BadDescriptors) {
  EXPECT_THROW(RootSystem::parse("B3"), Error);
  EXPECT_THROW(RootSystem::parse("A0"), Error);
  for (const char* bad : {"D3", "E9"}) {
    try {
      RootSystem::parse(bad);
      FAIL() << bad;
    } catch (const DescriptorError& e) {
      EXPECT_EQ(e.column(), 2u) << bad;
    }
  }
}
