#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "permob/poset.hpp"

using namespace permob;
using namespace permob::literals;

TEST(Downset, Examples) {
  auto d = downset("13524"_perm);
  EXPECT_EQ(d.size(), 14u);
  for (auto p : {"13524"_perm, "1243"_perm, "1423"_perm, "1324"_perm, "1342"_perm, "2413"_perm, "123"_perm,
                 "132"_perm, "312"_perm, "213"_perm, "231"_perm, "12"_perm, "21"_perm, "1"_perm})
    EXPECT_TRUE(d.has(p)) << p;
  EXPECT_EQ(downset("1"_perm).size(), 1u);
  // 2413; 312, 213, 132, 231; 12, 21; 1
  EXPECT_EQ(downset("2413"_perm).size(), 8u);
  EXPECT_EQ(downset("2413"_perm).size(), oracle::downset("2413"_perm).size() - 1);
  EXPECT_THROW(downset(Permutation{}), DomainError);
  EXPECT_THROW(downset(Permutation::identity(23)), GuardError);
}

TEST(Downset, MatchesSubsetOracle) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 60; ++t) {
    auto p = oracle::random_perm(1 + rng() % 9, rng);
    auto ref = oracle::downset(p);
    ref.erase(Permutation{});
    auto d = downset(p);
    EXPECT_EQ(std::set<Permutation>(d.elements.begin(), d.elements.end()), ref);
    for (std::size_t i = 1; i < d.size(); ++i) EXPECT_TRUE(rank_less(d.elements[i - 1], d.elements[i]));
    EXPECT_EQ(d.elements[d.bottom_index()], "1"_perm);
    EXPECT_EQ(d.elements[d.top_index()], p);
  }
}

TEST(Interval, Examples) {
  EXPECT_EQ(interval("1"_perm, "13524"_perm).size(), 14u);
  EXPECT_EQ(interval("2413"_perm, "2413"_perm).size(), 1u);
  auto iv = interval("12"_perm, "132"_perm);
  EXPECT_EQ(iv.elements, (std::vector<Permutation>{"12"_perm, "132"_perm}));
  EXPECT_THROW(interval("21"_perm, "123"_perm), DomainError);
}

TEST(Interval, CoversAndClosureMatchContainment) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 40; ++t) {
    auto top = oracle::random_perm(2 + rng() % 6, rng);
    auto bottom = oracle::pattern_at(top, rng() % (std::uint64_t{1} << top.size()));
    if (bottom.empty()) bottom = "1"_perm;
    auto iv = interval(bottom, top);
    for (std::size_t a = 0; a < iv.size(); ++a) {
      EXPECT_TRUE(oracle::contains(bottom, iv.elements[a]));
      for (std::size_t b = 0; b < iv.size(); ++b) {
        const bool le = oracle::contains(iv.elements[a], iv.elements[b]);
        EXPECT_EQ(iv.leq(a, b), le);
        // Covers: strict containment with no element strictly between.
        bool cover = le && a != b;
        for (std::size_t c = 0; cover && c < iv.size(); ++c)
          if (c != a && c != b && oracle::contains(iv.elements[a], iv.elements[c]) &&
              oracle::contains(iv.elements[c], iv.elements[b]))
            cover = false;
        const auto& cb = iv.covered_by[b];
        EXPECT_EQ(std::find(cb.begin(), cb.end(), a) != cb.end(), cover);
      }
    }
  }
}

TEST(Downset, SizeAndDegreesAreSymmetryInvariant) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    auto p = oracle::random_perm(1 + rng() % 8, rng);
    auto degrees = [](const IntervalPoset& iv) {
      std::multiset<std::pair<std::size_t, std::size_t>> out;
      std::vector<std::size_t> up(iv.size(), 0);
      for (std::size_t u = 0; u < iv.size(); ++u)
        for (auto w : iv.covered_by[u]) ++up[w];
      for (std::size_t u = 0; u < iv.size(); ++u) out.emplace(iv.covered_by[u].size(), up[u]);
      return out;
    };
    auto a = downset(p), b = downset(canonical(p));
    EXPECT_EQ(a.size(), b.size());
    EXPECT_EQ(degrees(a), degrees(b));
  }
}

TEST(Chains, Examples) {
  auto c1 = enumerate_chains(interval("12"_perm, "132"_perm));
  EXPECT_EQ(c1.by_length, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(enumerate_chains(interval("1"_perm, "12"_perm)).by_length, (std::vector<std::uint64_t>{0, 1}));
  auto c3 = enumerate_chains(interval("1"_perm, "132"_perm));
  EXPECT_EQ(c3.by_length, (std::vector<std::uint64_t>{0, 1, 2}));
  EXPECT_EQ(c3.hall_sum(), 1);
  EXPECT_EQ(enumerate_chains(interval("1"_perm, "1"_perm)).hall_sum(), 1);
}

TEST(Chains, VisitsEachChainOnce) {
  auto iv = interval("1"_perm, "2413"_perm);
  std::set<std::vector<std::size_t>> seen;
  auto cc = enumerate_chains(iv, [&](const std::vector<std::size_t>& c) {
    EXPECT_TRUE(seen.insert(c).second);
    EXPECT_EQ(c.front(), iv.bottom_index());
    EXPECT_EQ(c.back(), iv.top_index());
    for (std::size_t i = 1; i < c.size(); ++i) EXPECT_TRUE(iv.leq(c[i - 1], c[i]) && c[i - 1] != c[i]);
    return false;
  });
  std::uint64_t total = 0;
  for (auto k : cc.by_length) total += k;
  EXPECT_EQ(total, seen.size());
}

TEST(Chains, GuardRefusesLargeIntervals) {
  auto iv = downset("2,5,1,7,3,8,4,6"_perm);
  ASSERT_GT(iv.size(), 40u);
  EXPECT_THROW(enumerate_chains(iv), GuardError);
}

TEST(Zeta, Examples) {
  auto iv = interval("1"_perm, "132"_perm);
  auto inv = invert_zeta(zeta_matrix(iv));
  EXPECT_EQ(inv[iv.bottom_index()][iv.top_index()], 1);
  auto jv = interval("1"_perm, "2413"_perm);
  auto m = invert_zeta(zeta_matrix(jv));
  EXPECT_EQ(m[0][jv.top_index()], -3);
  for (std::size_t x = 0; x < jv.size(); ++x) EXPECT_EQ(m[x][x], 1);
  EXPECT_THROW(invert_zeta({{1, 0}, {1, 1}}), DomainError);
}

TEST(Zeta, InverseIsTwoSidedAndRowsTelescope) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 20; ++t) {
    auto p = oracle::random_perm(2 + rng() % 6, rng);
    auto iv = downset(p);
    auto z = zeta_matrix(iv);
    auto m = invert_zeta(z);
    const std::size_t n = iv.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::int64_t zm = 0, mz = 0;
        for (std::size_t c = 0; c < n; ++c) zm += z[a][c] * m[c][b], mz += m[a][c] * z[c][b];
        EXPECT_EQ(zm, a == b ? 1 : 0);
        EXPECT_EQ(mz, a == b ? 1 : 0);
      }
    std::int64_t row = 0;
    for (std::size_t c = 0; c < n; ++c) row += m[0][c];
    EXPECT_EQ(row, 0);
  }
}

TEST(Zeta, HallSumMatchesInverse) {
  std::mt19937_64 rng(71);
  int checked = 0;
  while (checked < 40) {
    auto p = oracle::random_perm(2 + rng() % 5, rng);
    auto iv = downset(p);
    if (iv.size() > 40) continue;
    auto m = invert_zeta(zeta_matrix(iv));
    EXPECT_EQ(enumerate_chains(iv).hall_sum(), m[0][iv.top_index()]) << p;
    ++checked;
  }
}

TEST(Dot, ExportsNodesAndEdges) {
  std::ostringstream os;
  write_dot(os, interval("1"_perm, "132"_perm));
  auto s = os.str();
  EXPECT_NE(s.find("digraph"), std::string::npos);
  EXPECT_NE(s.find("\"132\""), std::string::npos);
  EXPECT_NE(s.find("->"), std::string::npos);
}
