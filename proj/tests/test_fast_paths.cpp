#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "permob/balloon.hpp"
#include "permob/contributing.hpp"
#include "permob/dispatch.hpp"
#include "permob/decomposable.hpp"
#include "permob/engines.hpp"
#include "permob/oscillation.hpp"
#include "permob/zero_rules.hpp"

using namespace permob;
using namespace permob::literals;

namespace {

// Reference values: the defining recursion, shared memo.
MemoStore& ref_memo() {
  static MemoStore m;
  return m;
}

std::int64_t ref(const Permutation& a, const Permutation& b) {
  return mobius_recursive(a, b, &ref_memo()).value;
}

const MuFn ref_fn = [](const Permutation& a, const Permutation& b) { return ref(a, b); };

std::vector<Permutation> perms_up_to(std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& p : oracle::all_perms(k)) out.push_back(p);
  return out;
}

}  // namespace

// ---- zero certificates -------------------------------------------------------

TEST(ZeroTest, Examples) {
  auto c = zero_test("367249815"_perm);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rule, ZeroRule::opposing_adjacencies);
  EXPECT_FALSE(zero_test("214365"_perm));
  EXPECT_EQ(ref(Permutation{1}, "214365"_perm), -1);

  const auto p = "32417685"_perm;
  auto d = zero_test(p);
  EXPECT_TRUE(!d || d->rule != ZeroRule::annihilator_pair);
  EXPECT_NE(ref(Permutation{1}, p), 0);

  const auto q = inflate("21"_perm, {"215463"_perm, "1"_perm});
  auto e = zero_test(q);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->rule, ZeroRule::named_annihilator);
  EXPECT_EQ(oracle::Mobius{}(Permutation{1}, q), 0);
}

TEST(ZeroTest, RuleOrderAndWitnesses) {
  EXPECT_EQ(zero_test("1243"_perm)->rule, ZeroRule::long_corner);
  EXPECT_EQ(zero_test("21345"_perm)->rule, ZeroRule::long_corner);
  EXPECT_EQ(zero_test("41235"_perm)->rule, ZeroRule::triple_adjacency);
  auto m = zero_test("5123476"_perm);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->rule, ZeroRule::monotone_interval);
  EXPECT_EQ(m->windows.front(), (Window{1, 4}));
  for (auto p : {"367249815"_perm, "41235"_perm, "1243"_perm, "5123476"_perm})
    EXPECT_TRUE(verify_certificate(*zero_test(p), p)) << p;
}

TEST(ZeroTest, PairRuleNeedsDisjointCopies) {
  // 213 and 2431 as disjoint interval copies, glued by a skew sum.
  const auto p = skew_sum("213"_perm, "2431"_perm);
  auto c = zero_test(p);
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_certificate(*c, p));
  EXPECT_EQ(ref(Permutation{1}, p), 0);
}

TEST(ZeroTest, SoundExhaustivelyToSeven) {
  std::map<ZeroRule, int> fired;
  for (const auto& p : perms_up_to(7)) {
    auto c = zero_test(p);
    if (!c) continue;
    ++fired[c->rule];
    EXPECT_EQ(ref(Permutation{1}, p), 0) << p << " " << c->name();
    EXPECT_TRUE(verify_certificate(*c, p)) << p;
  }
  for (auto r : {ZeroRule::long_corner, ZeroRule::triple_adjacency, ZeroRule::monotone_interval,
                 ZeroRule::opposing_adjacencies, ZeroRule::sum_plus_one_annihilator, ZeroRule::named_annihilator,
                 ZeroRule::annihilator_pair})
    EXPECT_GT(fired[r], 0) << rule_name(r);
}

TEST(ZeroTest, ZerosWithoutCertificatesExist) {
  const auto p = "214635"_perm;
  EXPECT_EQ(ref(Permutation{1}, p), 0);
  auto c = zero_test(p);
  if (c) {
    EXPECT_TRUE(verify_certificate(*c, p));
  }
}

TEST(SigmaZeroTest, Examples) {
  const auto p = inflate("2413"_perm, {"1243"_perm, "1"_perm, "1"_perm, "1"_perm});
  auto c = sigma_zero_test("2413"_perm, p);
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_certificate(*c, p, "2413"_perm));
  EXPECT_EQ(oracle::Mobius{}("2413"_perm, p), 0);

  auto d = sigma_zero_test("1"_perm, "123"_perm);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->rule, ZeroRule::sigma_annihilator);
  EXPECT_EQ(ref("1"_perm, "123"_perm), 0);

  // 12 is itself an interval copy of 1 (+) 1, so 1 (+) 1 (+) 1 cannot annihilate.
  auto e = sigma_zero_test("12"_perm, "123"_perm);
  EXPECT_TRUE(!e || e->rule != ZeroRule::sigma_annihilator);
  EXPECT_EQ(ref("12"_perm, "123"_perm), -1);
}

TEST(SigmaZeroTest, SoundOnSmallPairs) {
  std::mt19937_64 rng(101);
  int fired = 0;
  for (const auto& p : perms_up_to(7)) {
    if (p.size() < 3 || rng() % 4 != 0) continue;
    for (const auto& s : downset(p).elements) {
      auto c = sigma_zero_test(s, p);
      if (!c) continue;
      ++fired;
      EXPECT_EQ(ref(s, p), 0) << s << " " << p << " " << c->name();
      EXPECT_TRUE(verify_certificate(*c, p, s));
    }
  }
  EXPECT_GT(fired, 100);
}

TEST(BooleanInflation, Examples) {
  EXPECT_EQ(boolean_inflation_mobius("2413"_perm, {"12"_perm, "1"_perm, "1"_perm, "1"_perm}), -1);
  EXPECT_EQ(boolean_inflation_mobius("2413"_perm, {"12"_perm, "21"_perm, "1"_perm, "1"_perm}), 1);
  EXPECT_EQ(boolean_inflation_mobius("3142"_perm, {"12"_perm, "12"_perm, "21"_perm, "1"_perm}), -1);
  const auto p = inflate("3142"_perm, {"12"_perm, "12"_perm, "21"_perm, "1"_perm});
  EXPECT_EQ(oracle::Mobius{}("3142"_perm, p), -1);
  EXPECT_THROW(boolean_inflation_mobius("12"_perm, {"1"_perm, "21"_perm}), DomainError);
  EXPECT_THROW(boolean_inflation_mobius("2413"_perm, {"1"_perm, "1"_perm, "1"_perm, "1"_perm}), DomainError);
  EXPECT_THROW(boolean_inflation_mobius("2413"_perm, {"132"_perm, "1"_perm, "1"_perm, "1"_perm}), DomainError);
}

TEST(BooleanInflation, PartsRecognitionMatchesRecursion) {
  const std::vector<Permutation> skeletons{"1"_perm, "2413"_perm, "3142"_perm, "25314"_perm, "246135"_perm};
  const std::vector<Permutation> choice{"1"_perm, "12"_perm, "21"_perm};
  std::mt19937_64 rng(103);
  for (const auto& s : skeletons) {
    for (int t = 0; t < 12; ++t) {
      std::vector<Permutation> parts;
      for (std::size_t i = 0; i < s.size(); ++i) parts.push_back(choice[rng() % 3]);
      const auto p = inflate(s, parts);
      if (p == s) continue;
      auto got = boolean_inflation_parts(s, p);
      ASSERT_TRUE(got) << s << " " << p;
      EXPECT_EQ(*got, parts);
      EXPECT_EQ(boolean_inflation_mobius(s, *got), ref(s, p)) << s << " " << p;
    }
  }
  EXPECT_FALSE(boolean_inflation_parts("2413"_perm, "25314"_perm));
}

// ---- decomposable recursions -------------------------------------------------

TEST(Decomposable, Examples) {
  EXPECT_EQ(bjjs_decomposable("1"_perm, direct_sum("2413"_perm, "2413"_perm), ref_fn), -3);
  EXPECT_EQ(bjjs_decomposable("1"_perm, "123"_perm, ref_fn), 0);
  EXPECT_EQ(bjjs_decomposable("1"_perm, "132"_perm, ref_fn), 1);
  EXPECT_FALSE(bjjs_decomposable("1"_perm, "2413"_perm, ref_fn));
  EXPECT_EQ(bjjs_decomposable("1"_perm, "321"_perm, ref_fn), 0);
}

TEST(Decomposable, AgreesWithRecursionToSeven) {
  for (const auto& p : perms_up_to(7)) {
    if (p.size() < 2 || canonical(p) != p) continue;
    if (!is_sum_decomposable(p) && !is_skew_decomposable(p)) continue;
    for (const auto& s : downset(p).elements) {
      auto v = bjjs_decomposable(s, p, ref_fn);
      ASSERT_TRUE(v);
      EXPECT_EQ(*v, ref(s, p)) << s << " " << p;
    }
  }
}

TEST(Decomposable, AgreesWithOracleAtEight) {
  std::mt19937_64 rng(107);
  oracle::Mobius mu;
  int checked = 0;
  while (checked < 30) {
    auto a = oracle::random_perm(1 + rng() % 4, rng), b = oracle::random_perm(1 + rng() % 4, rng);
    auto p = rng() % 2 ? direct_sum(a, b) : skew_sum(a, b);
    auto elems = downset(p).elements;
    const auto& s = elems[rng() % elems.size()];
    EXPECT_EQ(*bjjs_decomposable(s, p, ref_fn), mu(s, p)) << s << " " << p;
    ++checked;
  }
}

// ---- contributing sets -------------------------------------------------------

TEST(Contributing, WorkedExample) {
  const auto pi = "315274968"_perm;
  ASSERT_EQ(pi, w_osc(9));
  auto cs = contributing_set("3142"_perm, pi, ref_fn);
  EXPECT_EQ(cs.value(), -6);
  EXPECT_EQ(ref("3142"_perm, pi), -6);
  for (const auto& e : cs.entries) {
    EXPECT_FALSE(is_sum_decomposable(e.alpha));
    EXPECT_TRUE(contains("3142"_perm, e.alpha));
    EXPECT_NE(e.alpha, pi);
  }
}

TEST(Contributing, CoverIsMinusOne) {
  auto cs = contributing_set("2413"_perm, "25314"_perm, ref_fn);
  EXPECT_EQ(cs.value(), -1);
  ASSERT_EQ(cs.entries.size(), 1u);
  EXPECT_EQ(cs.entries[0].alpha, "2413"_perm);
}

TEST(Contributing, Preconditions) {
  EXPECT_THROW(contributing_set("12"_perm, "2413"_perm, ref_fn), DomainError);
  EXPECT_THROW(contributing_set("1"_perm, "132"_perm, ref_fn), DomainError);
  EXPECT_THROW(contributing_set("1"_perm, "2143"_perm, ref_fn), DomainError);
  EXPECT_THROW(contributing_set("2413"_perm, "2413"_perm, ref_fn), DomainError);
  EXPECT_THROW(contributing_set("1"_perm, "4321"_perm, ref_fn), DomainError);
}

TEST(Contributing, AgreesWithRecursionToSeven) {
  for (const auto& p : perms_up_to(7)) {
    if (p.size() <= 3 || is_sum_decomposable(p) || p == Permutation::decreasing(p.size())) continue;
    for (const auto& s : downset(p).elements) {
      if (s == p || is_sum_decomposable(s)) continue;
      EXPECT_EQ(contributing_set(s, p, ref_fn).value(), ref(s, p)) << s << " " << p;
    }
  }
}

TEST(Contributing, AgreesWithOracleAtEight) {
  std::mt19937_64 rng(113);
  oracle::Mobius mu;
  int checked = 0;
  while (checked < 12) {
    auto p = oracle::random_perm(8, rng);
    if (is_sum_decomposable(p) || p == Permutation::decreasing(8)) continue;
    auto elems = downset(p).elements;
    const auto& s = elems[rng() % elems.size()];
    if (s == p || is_sum_decomposable(s) || s.size() < 2) continue;
    EXPECT_EQ(contributing_set(s, p, ref_fn).value(), mu(s, p)) << s << " " << p;
    ++checked;
  }
}

// Each weighted term accounts for the whole family of alpha: the sum of
// mu[sigma, lambda] over every lambda in [sigma, pi) of the form
// alpha^r, 1 (+) alpha^r, alpha^r (+) 1 or 1 (+) alpha^r (+) 1.
TEST(Contributing, WeightsCountFamilies) {
  std::mt19937_64 rng(127);
  const Permutation one{1};
  int checked = 0;
  while (checked < 60) {
    auto p = oracle::random_perm(5 + rng() % 3, rng);
    if (is_sum_decomposable(p)) continue;
    auto elems = interval(one, p).elements;
    const auto& s = elems[rng() % elems.size()];
    if (is_sum_decomposable(s)) continue;
    auto iv = interval(s, p);
    for (const auto& alpha : iv.elements) {
      if (alpha == one || alpha == p || is_sum_decomposable(alpha)) continue;
      std::int64_t family = 0;
      for (std::size_t r = 1; r * alpha.size() <= p.size(); ++r) {
        auto a = sum_power(alpha, r);
        for (auto l : {a, direct_sum(one, a), direct_sum(a, one), direct_sum(direct_sum(one, a), one)})
          if (l != p && iv.has(l)) family += ref(s, l);
      }
      const std::int64_t m = ref(s, alpha);
      EXPECT_EQ(m * contribution_weight(s, alpha, p), family) << s << " " << alpha << " " << p;
    }
    ++checked;
  }
}

// ---- increasing oscillations -------------------------------------------------

TEST(IncOsc, Examples) {
  EXPECT_EQ(inc_osc_mobius("3142"_perm, OscillationDescriptor{OscShape::W, 9}), -6);
  EXPECT_EQ(inc_osc_mobius("3142"_perm, OscillationDescriptor{OscShape::M, 5}), -1);
  EXPECT_EQ(inc_osc_mobius("1"_perm, OscillationDescriptor{OscShape::W, 4}), -3);
  EXPECT_EQ(inc_osc_mobius("1"_perm, OscillationDescriptor{OscShape::W, 5}), 6);
  EXPECT_THROW(inc_osc_mobius("12"_perm, OscillationDescriptor{OscShape::W, 6}), DomainError);
  EXPECT_THROW(inc_osc_mobius("25314"_perm, OscillationDescriptor{OscShape::W, 6}), DomainError);
  EXPECT_THROW(inc_osc_mobius("1"_perm, OscillationDescriptor{OscShape::W, 3}), DomainError);
}

TEST(IncOsc, AgreesWithRecursionToTwelve) {
  for (std::size_t n = 4; n <= 12; ++n)
    for (auto shape : {OscShape::W, OscShape::M}) {
      const OscillationDescriptor d{shape, n};
      const auto pi = increasing_oscillation(d);
      for (const auto& s : downset(pi).elements) {
        if (is_sum_decomposable(s)) continue;
        ASSERT_TRUE(recognize_oscillation(s)) << s;
        EXPECT_EQ(inc_osc_mobius(s, d), ref(s, pi)) << s << " " << pi;
      }
    }
}

TEST(IncOsc, ClosedFormWeightsMatchContainmentWeights) {
  for (std::size_t n = 4; n <= 11; ++n)
    for (int h : {0, 1}) {
      const auto host = make_piece(h, n);
      const auto pi = materialize(host);
      for (std::size_t ks = 1; ks < n; ++ks)
        for (int ps : {0, 1}) {
          const auto sg = make_piece(ps, ks);
          if (ks <= 2 && ps == 1) continue;
          if (!piece_contains(sg, host)) continue;
          for (std::size_t k = std::max<std::size_t>(2, ks); k < n; ++k)
            for (int p : {0, 1}) {
              const auto a = make_piece(p, k);
              if (k <= 2 && p == 1) continue;
              if (!piece_contains(sg, a) || !piece_contains(a, host)) continue;
              std::size_t r1 = 0, r2 = 0;
              const int w1 = osc_weight(sg, a, host, &r1);
              const int w2 = contribution_weight(materialize(sg), materialize(a), pi, &r2);
              EXPECT_EQ(w1, w2) << materialize(sg) << " " << materialize(a) << " " << pi;
              EXPECT_EQ(r1, r2);
            }
        }
    }
}

TEST(IncOsc, PieceContainmentMatchesPatterns) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (int h : {0, 1})
      for (std::size_t k = 1; k <= n; ++k)
        for (int p : {0, 1}) {
          const auto a = make_piece(p, k), b = make_piece(h, n);
          EXPECT_EQ(piece_contains(a, b), contains(materialize(a), materialize(b)));
        }
}

TEST(IncOsc, LargeHostWithoutMaterialization) {
  IncOscSolver solver(OscPiece{0, 1});
  const auto v = solver.mobius(OscillationDescriptor{OscShape::W, 2000});
  EXPECT_LT(v, 0);
  EXPECT_LT(solver.states(), 4000u);
}

TEST(IncOsc, DivisorCandidatesMatchFullScan) {
  for (auto sg : {OscPiece{0, 1}, OscPiece{0, 2}, OscPiece{0, 4}, OscPiece{1, 5}, OscPiece{1, 6}}) {
    IncOscSolver solver(sg);
    for (std::size_t n = 4; n <= 80; ++n)
      for (int h : {0, 1}) {
        auto a = solver.weighted_pieces(make_piece(h, n)), b = solver.weighted_pieces_scan(make_piece(h, n));
        auto key = [](const std::pair<OscPiece, int>& x) { return std::make_tuple(x.first.k, x.first.parity, x.second); };
        std::set<std::tuple<std::size_t, int, int>> sa, sb;
        for (auto& x : a) sa.insert(key(x));
        for (auto& x : b) sb.insert(key(x));
        EXPECT_EQ(sa, sb) << n << " " << h;
      }
  }
}

// ---- balloons and wedges -------------------------------------------------------

namespace {

const PrincipalFn ref_principal = [](const Permutation& p) { return ref(Permutation{1}, p); };

std::vector<Permutation> all_nonempty_up_to(std::size_t n) { return perms_up_to(n); }

}  // namespace

TEST(Balloon2413, Recognition) {
  EXPECT_EQ(is_2413_balloon("264315"_perm), "21"_perm);
  EXPECT_EQ(is_2413_balloon("25314"_perm), "1"_perm);
  EXPECT_FALSE(is_2413_balloon("2413"_perm));
  EXPECT_FALSE(is_2413_balloon("263415"_perm) != std::optional<Permutation>("12"_perm));
  for (const auto& b : perms_up_to(5)) EXPECT_EQ(is_2413_balloon(balloon_2413(b)), b);
  for (const auto& p : oracle::all_perms(6))
    if (auto b = is_2413_balloon(p)) {
      EXPECT_EQ(balloon_2413(*b), p);
    }
}

TEST(Balloon2413, Examples) {
  EXPECT_EQ(balloon_2413_mobius("1"_perm, ref_principal), 4);
  EXPECT_EQ(ref(Permutation{1}, "25314"_perm), 4);
  EXPECT_EQ(balloon_2413_mobius("2413"_perm, ref_principal), -6);
  EXPECT_EQ(balloon_2413_mobius("25314"_perm, ref_principal), 8);
  EXPECT_EQ(ref(Permutation{1}, pi_sequence(9)), 8);
}

TEST(Balloon2413, AgreesWithRecursionToSix) {
  for (const auto& b : all_nonempty_up_to(6)) {
    if (b.size() == 6 && canonical(b) != b && b != "264315"_perm) continue;
    EXPECT_EQ(balloon_2413_mobius(b, ref_principal), ref(Permutation{1}, balloon_2413(b))) << b;
  }
}

TEST(Balloon2413, PiSequence) {
  const std::vector<std::int64_t> want{1, -1, 1, -3, 4, -1, 1, -6};
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(pi_sequence_mobius(n), want[n - 1]);
    EXPECT_EQ(ref(Permutation{1}, pi_sequence(n)), want[n - 1]);
  }
  EXPECT_EQ(pi_sequence_mobius(12), -12);
  EXPECT_EQ(ref(Permutation{1}, pi_sequence(12)), -12);
  EXPECT_EQ(ref(Permutation{1}, "2735416"_perm), 1);
  EXPECT_EQ(pi_sequence(7), "2735416"_perm);
}

TEST(Containment, ExamplesFromTheDefinitions) {
  const BalloonSpec spec{"4,6,3,5,8,9,2,12,10,13,11,7,1"_perm, "2,4,1,3,7,5,8,6"_perm, 5, 8};
  auto c = classify_containment("4,6,3,5,7,10,8,11,9,2,1"_perm, spec);
  EXPECT_EQ(c.kind, ContainmentKind::defective);
  // beta = 2413 (+) 3142, so the length-5 cores are 2413 (+) 1 and 1 (+) 3142.
  EXPECT_EQ(c.embedding_cores, (std::set<Permutation>{"2413"_perm, "3142"_perm, "24135"_perm, "14253"_perm}));
  EXPECT_FALSE(contains("13524"_perm, spec.beta));

  EXPECT_EQ(classify_containment(balloon(spec), spec).kind, ContainmentKind::complete);

  // 2431 = wedge(21, 21, 1), red points at positions 0 and 3. The embedding
  // {0, 3} of 21 uses every red point.
  const WedgeSpec w{"21"_perm, "21"_perm, 1};
  ASSERT_EQ(wedge(w), "2431"_perm);
  auto d = classify_containment("21"_perm, w.as_balloon());
  EXPECT_EQ(d.kind, ContainmentKind::complete);
  EXPECT_EQ(d.embedding_cores, (std::set<Permutation>{Permutation{}, "1"_perm, "21"_perm}));
  EXPECT_EQ(classify_containment("132"_perm, w.as_balloon()).kind, ContainmentKind::proper_reduction);
  EXPECT_THROW(classify_containment("123"_perm, w.as_balloon()), DomainError);
}

TEST(Containment, ClassesAreExhaustiveAndConsistent) {
  std::mt19937_64 rng(131);
  for (int t = 0; t < 40; ++t) {
    BalloonSpec spec{oracle::random_perm(2 + rng() % 3, rng), oracle::random_perm(1 + rng() % 3, rng), 0, 0};
    spec.i = rng() % (spec.alpha.size() + 1);
    spec.j = rng() % (spec.alpha.size() + 1);
    const auto pi = balloon(spec);
    const auto reds = proper_reductions(spec);
    for (const auto& s : downset(pi).elements) {
      auto c = classify_containment(s, spec);
      const bool listed = std::find(reds.begin(), reds.end(), s) != reds.end();
      EXPECT_EQ(c.kind == ContainmentKind::proper_reduction, listed) << s << " in " << pi;
      if (c.kind == ContainmentKind::matryoshka) {
        ASSERT_TRUE(c.minimal_core);
        for (const auto& z : c.embedding_cores) EXPECT_TRUE(contains(*c.minimal_core, z));
      }
      // Every oracle embedding contributes its blue core.
      std::set<Permutation> cores;
      for (const auto& e : oracle::embeddings(s, pi)) {
        std::vector<std::size_t> blue;
        for (auto x : e)
          if (x >= spec.i && x < spec.i + spec.beta.size()) blue.push_back(x);
        cores.insert(subpattern(pi, blue));
      }
      EXPECT_EQ(cores, c.embedding_cores);
    }
  }
}

TEST(Wedge, Examples) {
  const WedgeSpec w{"21"_perm, "21"_perm, 1};
  EXPECT_EQ(proper_reductions_wedge(w), (std::vector<Permutation>{"132"_perm, "321"_perm}));
  EXPECT_EQ(wedge_mobius(w, ref_principal), -1);
  EXPECT_EQ(ref(Permutation{1}, "2431"_perm), -1);
  EXPECT_EQ(ref(Permutation{1}, "1342"_perm), -1);

  const WedgeSpec z{"21"_perm, "12"_perm, 0};
  EXPECT_EQ(wedge(z), skew_sum("12"_perm, "21"_perm));
  EXPECT_EQ(wedge_mobius(z, ref_principal), *bjjs_decomposable("1"_perm, wedge(z), ref_fn));
}

TEST(Wedge, DirectSumReductions) {
  for (std::size_t a = 1; a <= 3; ++a)
    for (const auto& alpha : oracle::all_perms(a))
      for (const auto& beta : perms_up_to(2)) {
        const WedgeSpec w{alpha, beta, alpha.size()};
        ASSERT_EQ(wedge(w), direct_sum(alpha, beta));
        for (const auto& l : proper_reductions_wedge(w)) {
          ASSERT_GE(l.size(), beta.size());
          std::vector<std::size_t> head(l.size() - beta.size());
          std::iota(head.begin(), head.end(), std::size_t{0});
          EXPECT_EQ(direct_sum(subpattern(l, head), beta), l);
        }
      }
}

TEST(Wedge, AgreesWithRecursionAndIsDivisible) {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      for (const auto& alpha : oracle::all_perms(a))
        for (const auto& beta : oracle::all_perms(b)) {
          if (a + b == 8 && canonical(alpha) != alpha) continue;
          for (std::size_t k = 0; k <= a; ++k) {
            const WedgeSpec w{alpha, beta, k};
            if (a + b == 2) {
              EXPECT_THROW(wedge_mobius(w, ref_principal), DomainError);
              continue;
            }
            const auto want = ref(Permutation{1}, wedge(w));
            EXPECT_EQ(wedge_mobius(w, ref_principal), want) << alpha << " " << beta << " " << k;
            const auto mb = ref(Permutation{1}, beta);
            if (mb == 0) {
              EXPECT_EQ(want, 0) << alpha << " " << beta << " " << k;
            } else {
              EXPECT_EQ(want % mb, 0) << alpha << " " << beta << " " << k;
            }
          }
        }
    }
}

TEST(Wedge, NothingBelowIsDefective) {
  std::mt19937_64 rng(137);
  for (int t = 0; t < 80; ++t) {
    const std::size_t a = 2 + rng() % 4, b = 1 + rng() % (9 - a - 1);
    const WedgeSpec w{oracle::random_perm(a, rng), oracle::random_perm(b, rng), rng() % (a + 1)};
    const auto pi = wedge(w);
    for (const auto& s : downset(pi).elements)
      EXPECT_NE(classify_containment(s, w.as_balloon()).kind, ContainmentKind::defective) << s << " in " << pi;
  }
}

TEST(Correction, WedgesAndSumsHaveNone) {
  std::mt19937_64 rng(139);
  int checked = 0;
  while (checked < 25) {
    const std::size_t a = 2 + rng() % 2, b = 1 + rng() % 3;
    const WedgeSpec w{oracle::random_perm(a, rng), oracle::random_perm(b, rng), rng() % (a + 1)};
    if (downset(wedge(w)).size() > 60) continue;
    auto cv = balloon_mobius_with_correction(w.as_balloon(), ref_principal);
    EXPECT_EQ(cv.correction, 0) << wedge(w);
    EXPECT_EQ(cv.chains_g, 0u);
    EXPECT_EQ(cv.value, ref(Permutation{1}, wedge(w))) << wedge(w);
    ++checked;
  }
  auto s = balloon_mobius_with_correction(WedgeSpec{"231"_perm, "21"_perm, 3}.as_balloon(), ref_principal);
  EXPECT_EQ(s.correction, 0);
}

TEST(Correction, TotalMatchesRecursion) {
  auto cv = balloon_mobius_with_correction(BalloonSpec{"2413"_perm, "21"_perm, 2, 2}, ref_principal);
  EXPECT_EQ(balloon(BalloonSpec{"2413"_perm, "21"_perm, 2, 2}), "264315"_perm);
  EXPECT_EQ(cv.value, ref(Permutation{1}, "264315"_perm));
  std::mt19937_64 rng(149);
  int checked = 0;
  while (checked < 40) {
    BalloonSpec spec{oracle::random_perm(2 + rng() % 3, rng), oracle::random_perm(1 + rng() % 3, rng), 0, 0};
    spec.i = rng() % (spec.alpha.size() + 1);
    spec.j = rng() % (spec.alpha.size() + 1);
    if (downset(balloon(spec)).size() > 70) continue;
    auto c = balloon_mobius_with_correction(spec, ref_principal);
    EXPECT_EQ(c.value, ref(Permutation{1}, balloon(spec))) << balloon(spec) << " i=" << spec.i << " j=" << spec.j;
    ++checked;
  }
  EXPECT_THROW(balloon_mobius_with_correction(BalloonSpec{"1"_perm, "21"_perm, 0, 1}, ref_principal), DomainError);
}

// ---- dispatcher ----------------------------------------------------------------

TEST(Dispatch, Examples) {
  Dispatcher d;
  auto a = d.compute("1"_perm, "367249815"_perm);
  EXPECT_EQ(a.value, 0);
  EXPECT_EQ(a.method, "opposing_adjacencies");
  EXPECT_EQ(d.compute("1"_perm, "2735416"_perm).value, 1);
  auto w = d.compute("1"_perm, OscillationDescriptor{OscShape::W, 100000});
  EXPECT_EQ(w.method, "inc_osc");
  EXPECT_LT(w.value, 0);
  EXPECT_EQ(d.compute("3142"_perm, "315274968"_perm).value, -6);
  EXPECT_EQ(d.compute("1"_perm, "25314"_perm).method, "balloon_2413");
  EXPECT_EQ(d.compute("1"_perm, "1"_perm).method, "equal");
  EXPECT_EQ(d.compute("21"_perm, "123"_perm).method, "not_contained");
  EXPECT_EQ(d.compute("1"_perm, "12"_perm).method, "cover");
  EXPECT_EQ(d.compute("1"_perm, direct_sum("2413"_perm, "2413"_perm)).method, "bjjs");
}

TEST(Dispatch, AgreesWithRecursionToSeven) {
  Dispatcher d;
  std::map<std::string, int> methods;
  for (const auto& p : perms_up_to(7)) {
    auto r = d.compute("1"_perm, p);
    ++methods[r.method];
    EXPECT_EQ(r.value, ref("1"_perm, p)) << p << " " << r.method;
  }
  for (auto m : {"balloon_2413", "bjjs", "contributing_set", "inc_osc", "opposing_adjacencies", "wedge"})
    EXPECT_GT(methods[m], 0) << m;
}

TEST(Dispatch, AgreesWithRecursionOnPairs) {
  std::mt19937_64 rng(151);
  Dispatcher d;
  for (int t = 0; t < 400; ++t) {
    auto p = oracle::random_perm(3 + rng() % 6, rng);
    auto elems = downset(p).elements;
    const auto& s = elems[rng() % elems.size()];
    EXPECT_EQ(d.value(s, p), ref(s, p)) << s << " " << p;
  }
}

TEST(Dispatch, ValuesAreSymmetryInvariant) {
  std::mt19937_64 rng(157);
  Dispatcher d;
  for (int t = 0; t < 100; ++t) {
    auto p = oracle::random_perm(4 + rng() % 6, rng);
    auto elems = downset(p).elements;
    const auto s = elems[rng() % elems.size()];
    const auto v = d.value(s, p);
    for (int k = 1; k < 8; ++k) {
      Dispatcher fresh;
      EXPECT_EQ(fresh.value(apply_symmetry(s, k), apply_symmetry(p, k)), v) << s << " " << p << " " << k;
    }
  }
}

TEST(Dispatch, ReachesLengthsBeyondTheRecursiveCap) {
  Dispatcher d;
  EXPECT_EQ(d.principal(pi_sequence(21)), pi_sequence_mobius(21));
  EXPECT_EQ(d.principal(w_osc(40)), Dispatcher().compute("1"_perm, OscillationDescriptor{OscShape::W, 40}).value);
  EXPECT_EQ(d.principal(direct_sum(pi_sequence(13), pi_sequence(13))), pi_sequence_mobius(13));
}
