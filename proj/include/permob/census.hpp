#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "permob/balloon.hpp"
#include "permob/dispatch.hpp"
#include "permob/errors.hpp"
#include "permob/families.hpp"
#include "permob/oscillation.hpp"
#include "permob/perm.hpp"
#include "permob/structure.hpp"
#include "permob/zero_rules.hpp"

namespace permob {

namespace detail {

// Permutation of length <= 16 as 0-based values, one nibble per position.
using Code = std::uint64_t;

inline unsigned nib(Code c, std::size_t i) { return static_cast<unsigned>(c >> (4 * i)) & 15u; }

inline Code pack(const std::array<std::uint8_t, 16>& v, std::size_t m) {
  Code c = 0;
  for (std::size_t i = 0; i < m; ++i) c |= Code{v[i]} << (4 * i);
  return c;
}

inline Code delete_at(Code c, std::size_t m, std::size_t i) {
  const unsigned gone = nib(c, i);
  Code out = 0;
  for (std::size_t j = 0, o = 0; j < m; ++j) {
    if (j == i) continue;
    unsigned x = nib(c, j);
    if (x > gone) --x;
    out |= Code{x} << (4 * o++);
  }
  return out;
}

// Lexicographic rank, equal to the Lehmer code read in mixed radix.
inline std::uint32_t lex_rank(Code c, std::size_t m) {
  std::uint32_t used = 0, rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const unsigned x = nib(c, i);
    const auto smaller = static_cast<std::uint32_t>(std::popcount(~used & ((1u << x) - 1)));
    rank = rank * static_cast<std::uint32_t>(m - i) + smaller;
    used |= 1u << x;
  }
  return rank;
}

inline std::array<Code, 8> images(Code c, std::size_t m) {
  std::array<std::uint8_t, 16> v{}, inv{};
  for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<std::uint8_t>(nib(c, i));
  for (std::size_t i = 0; i < m; ++i) inv[v[i]] = static_cast<std::uint8_t>(i);
  std::array<Code, 8> out{};
  for (int s = 0; s < 8; ++s) {
    const auto& base = (s & 4) ? inv : v;
    std::array<std::uint8_t, 16> w{};
    for (std::size_t i = 0; i < m; ++i) {
      std::uint8_t x = base[(s & 1) ? m - 1 - i : i];
      if (s & 2) x = static_cast<std::uint8_t>(m - 1 - x);
      w[i] = x;
    }
    out[s] = pack(w, m);
  }
  return out;
}

inline Code code_of(const Permutation& p) {
  Code c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c |= Code{p[i] - 1} << (4 * i);
  return c;
}

inline Permutation perm_of(Code c, std::size_t m) {
  std::vector<value_t> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = nib(c, i) + 1;
  return Permutation::trusted(std::move(v));
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

inline constexpr std::size_t principal_table_cap = 10;

// mu[1, p] for every p of length <= max_n. Built from the recursion over the
// strict down-set, one orbit representative at a time; the other images of the
// symmetry group share its value.
class PrincipalTable {
 public:
  struct Rep {
    detail::Code code = 0;
    std::uint8_t orbit = 0;
    std::int64_t value = 0;
  };

  explicit PrincipalTable(std::size_t max_n, unsigned threads = 1) : max_n_(max_n) {
    if (max_n > principal_table_cap)
      throw GuardError("principal table holds lengths <= " + std::to_string(principal_table_cap));
    vals_.resize(max_n + 1);
    reps_.resize(max_n + 1);
    for (std::size_t m = 1; m <= max_n; ++m) build(m, std::max(1u, threads));
  }

  std::size_t max_n() const { return max_n_; }

  std::int64_t value(const Permutation& p) const {
    if (p.empty()) return 0;
    if (p.size() > max_n_) throw GuardError("length " + std::to_string(p.size()) + " is beyond the table");
    return vals_[p.size()][detail::lex_rank(detail::code_of(p), p.size())];
  }

  // Orbit representatives of length n in increasing lexicographic order; each is
  // the canonical form of its orbit.
  const std::vector<Rep>& reps(std::size_t n) const {
    if (n == 0 || n > max_n_) throw GuardError("length " + std::to_string(n) + " is beyond the table");
    return reps_[n];
  }

  // Values in lexicographic order of S_n.
  const std::vector<std::int64_t>& all(std::size_t n) const {
    if (n == 0 || n > max_n_) throw GuardError("length " + std::to_string(n) + " is beyond the table");
    return vals_[n];
  }

 private:
  static constexpr std::int64_t unset = std::numeric_limits<std::int64_t>::min();

  std::int64_t evaluate(detail::Code code, std::size_t m) const {
    std::vector<detail::Code> cur{code}, next;
    std::int64_t total = 0;
    for (std::size_t len = m; len >= 2; --len) {
      next.clear();
      for (auto c : cur)
        for (std::size_t i = 0; i < len; ++i) {
          // deleting either end of an adjacency gives the same pattern
          if (i > 0) {
            const int d = static_cast<int>(detail::nib(c, i)) - static_cast<int>(detail::nib(c, i - 1));
            if (d == 1 || d == -1) continue;
          }
          next.push_back(detail::delete_at(c, len, i));
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      const auto& below = vals_[len - 1];
      for (auto c : next) total += below[detail::lex_rank(c, len - 1)];
      cur.swap(next);
    }
    return -total;
  }

  void build(std::size_t m, unsigned threads) {
    auto& vals = vals_[m];
    auto& reps = reps_[m];
    vals.assign(detail::factorial(m), unset);
    std::array<std::uint8_t, 16> v{};
    std::iota(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m), std::uint8_t{0});
    constexpr std::int64_t claimed = unset + 1;
    std::uint32_t idx = 0;
    do {
      if (vals[idx] == unset) {
        const auto code = detail::pack(v, m);
        auto im = detail::images(code, m);
        std::sort(im.begin(), im.end());
        const auto distinct = std::unique(im.begin(), im.end()) - im.begin();
        for (std::ptrdiff_t s = 0; s < distinct; ++s) vals[detail::lex_rank(im[s], m)] = claimed;
        reps.push_back(Rep{code, static_cast<std::uint8_t>(distinct), 0});
      }
      ++idx;
    } while (std::next_permutation(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m)));

    auto work = [&](std::size_t from, std::size_t to) {
      for (std::size_t r = from; r < to; ++r) reps[r].value = m == 1 ? 1 : evaluate(reps[r].code, m);
    };
    const std::size_t t = std::min<std::size_t>(threads, reps.size());
    if (t <= 1) {
      work(0, reps.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (reps.size() + t - 1) / t;
      for (std::size_t i = 0; i < t; ++i)
        pool.emplace_back(work, std::min(reps.size(), i * chunk), std::min(reps.size(), (i + 1) * chunk));
      for (auto& th : pool) th.join();
    }
    for (const auto& r : reps)
      for (auto c : detail::images(r.code, m)) vals[detail::lex_rank(c, m)] = r.value;
  }

  std::size_t max_n_;
  std::vector<std::vector<std::int64_t>> vals_;
  std::vector<std::vector<Rep>> reps_;
};

// ---- density of zeros -------------------------------------------------------------

enum class DensityMode { fast_paths_plus_oracle, oracle_only };

inline const char* mode_name(DensityMode m) {
  return m == DensityMode::oracle_only ? "oracle_only" : "fast_paths_plus_oracle";
}

// num/den rounded half up to the given number of places.
inline std::string decimal_half_up(std::uint64_t num, std::uint64_t den, unsigned places = 4) {
  if (den == 0) throw DomainError("zero denominator");
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  const unsigned __int128 q = (static_cast<unsigned __int128>(2) * num * scale + den) / (static_cast<unsigned __int128>(2) * den);
  const auto whole = static_cast<std::uint64_t>(q / scale), frac = static_cast<std::uint64_t>(q % scale);
  std::string f = std::to_string(frac);
  f.insert(0, places - f.size(), '0');
  return std::to_string(whole) + (places ? "." + f : "");
}

struct DensityRow {
  std::size_t n = 0;
  std::uint64_t total = 0, zero_count = 0;
  std::uint64_t num = 0, den = 1;  // d_n in lowest terms
  std::string decimal;
  DensityMode mode = DensityMode::oracle_only;
  std::map<std::string, std::uint64_t> breakdown;  // rule name or "oracle" -> zeros
  std::uint64_t unsound = 0;  // certificates fired on a nonzero value; must stay 0
};

inline constexpr std::size_t default_density_cap = 9;

inline DensityRow density(const PrincipalTable& table, std::size_t n, DensityMode mode, bool symmetry_reduced = true,
                          std::size_t cap = default_density_cap) {
  if (n == 0) throw DomainError("density needs n >= 1");
  if (n > cap) throw GuardError("density cap is " + std::to_string(cap));
  DensityRow row;
  row.n = n;
  row.mode = mode;
  row.total = detail::factorial(n);
  auto tally = [&](const Permutation& p, std::int64_t value, std::uint64_t weight) {
    if (mode == DensityMode::fast_paths_plus_oracle) {
      if (auto c = zero_test(p)) {
        row.breakdown[c->name()] += weight;
        row.zero_count += weight;
        if (value != 0) row.unsound += weight;
        return;
      }
    }
    if (value == 0) {
      row.breakdown["oracle"] += weight;
      row.zero_count += weight;
    }
  };
  if (symmetry_reduced) {
    for (const auto& r : table.reps(n)) tally(detail::perm_of(r.code, n), r.value, r.orbit);
  } else {
    const auto& vals = table.all(n);
    std::vector<value_t> v(n);
    std::iota(v.begin(), v.end(), value_t{1});
    std::size_t idx = 0;
    do tally(Permutation::trusted(v), vals[idx++], 1);
    while (std::next_permutation(v.begin(), v.end()));
  }
  const auto g = std::gcd(row.zero_count, row.total);
  row.num = row.zero_count / g;
  row.den = row.total / g;
  row.decimal = decimal_half_up(row.zero_count, row.total);
  return row;
}

// ---- adjacency classes ---------------------------------------------------------------

// s: both an up and a down adjacency; a: no up adjacency; b: no adjacency at all.
struct AdjacencyCounts {
  std::size_t n = 0;
  std::uint64_t factorial = 0, s = 0, a = 0, b = 0;
  bool identity_holds() const { return s + 2 * a == factorial + b; }
};

inline constexpr std::size_t adjacency_cap = 11;

inline AdjacencyCounts adjacency_census(std::size_t n) {
  if (n == 0) throw DomainError("adjacency census needs n >= 1");
  if (n > adjacency_cap) throw GuardError("adjacency census cap is " + std::to_string(adjacency_cap));
  AdjacencyCounts c;
  c.n = n;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  do {
    bool up = false, down = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      up |= v[i + 1] == v[i] + 1;
      down |= v[i] == v[i + 1] + 1;
    }
    ++c.factorial;
    c.s += up && down;
    c.a += !up;
    c.b += !up && !down;
  } while (std::next_permutation(v.begin(), v.end()));
  return c;
}

// Asymptotic density of permutations with opposing adjacencies.
inline double opposing_limit() {
  const double x = 1.0 - std::exp(-1.0);
  return x * x;
}

struct NonOpposingCounts {
  std::size_t n = 0;
  std::uint64_t zero_count = 0, nonzero_count = 0;
};

inline constexpr std::size_t non_opposing_cap = 9;

// Permutations with at least two adjacencies, all in the same direction.
inline NonOpposingCounts non_opposing_census(const PrincipalTable& table, std::size_t n) {
  if (n > non_opposing_cap) throw GuardError("non-opposing census cap is " + std::to_string(non_opposing_cap));
  NonOpposingCounts c;
  c.n = n;
  for (const auto& r : table.reps(n)) {
    const auto rep = adjacency_report(detail::perm_of(r.code, n));
    if (rep.adjacency_count() < 2 || rep.has_opposing()) continue;
    (r.value == 0 ? c.zero_count : c.nonzero_count) += r.orbit;
  }
  return c;
}

// ---- extremal values -----------------------------------------------------------------

struct ExtremalRow {
  std::size_t n = 0;
  std::int64_t min_value = 0, max_value = 0;
  std::vector<Permutation> min_witnesses, max_witnesses;
  std::vector<bool> min_simple, max_simple;
};

inline ExtremalRow extremal_table(const PrincipalTable& table, std::size_t n) {
  ExtremalRow row;
  row.n = n;
  const auto& reps = table.reps(n);
  row.min_value = row.max_value = reps.front().value;
  for (const auto& r : reps) {
    row.min_value = std::min(row.min_value, r.value);
    row.max_value = std::max(row.max_value, r.value);
  }
  for (const auto& r : reps) {
    if (r.value != row.min_value && r.value != row.max_value) continue;
    const auto p = detail::perm_of(r.code, n);
    if (r.value == row.min_value) row.min_witnesses.push_back(p), row.min_simple.push_back(is_simple(p));
    if (r.value == row.max_value) row.max_witnesses.push_back(p), row.max_simple.push_back(is_simple(p));
  }
  return row;
}

// ---- growth of the pi sequence --------------------------------------------------------

struct GrowthRow {
  std::size_t n = 0;
  std::int64_t value = 0;
  int bound_exponent = 0;  // |value| >= 2^bound_exponent
  bool bound_holds = false;
  std::optional<bool> doubling;  // value == 2 * value(n - 4), for n > 8
};

inline constexpr std::size_t growth_cap = 60;

inline std::vector<GrowthRow> growth_table(std::size_t max_n) {
  if (max_n > growth_cap) throw GuardError("growth table cap is " + std::to_string(growth_cap));
  std::vector<GrowthRow> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    GrowthRow g;
    g.n = n;
    g.value = pi_sequence_mobius(n);
    g.bound_exponent = static_cast<int>(n / 4) - 1;
    const std::uint64_t mag = static_cast<std::uint64_t>(g.value < 0 ? -g.value : g.value);
    g.bound_holds = g.bound_exponent < 0 ? mag >= 1 : mag >= (std::uint64_t{1} << g.bound_exponent);
    if (n > 8) g.doubling = g.value == 2 * out[n - 5].value;
    out.push_back(g);
  }
  return out;
}

// ---- oscillation reports -------------------------------------------------------------
// sweep[n-1] = mu[1, W_n] throughout.

struct SignReport {
  std::size_t max_n = 0;
  std::uint64_t even_checked = 0, even_negative = 0, odd_checked = 0, odd_positive = 0;
  std::vector<std::size_t> exceptions;
  bool holds() const { return exceptions.empty(); }
};

inline SignReport sign_report(const std::vector<std::int64_t>& sweep) {
  SignReport r;
  r.max_n = sweep.size();
  for (std::size_t n = 1; n <= sweep.size(); ++n) {
    const auto v = sweep[n - 1];
    if (n % 2 == 0) {
      ++r.even_checked;
      if (v < 0) ++r.even_negative;
      else r.exceptions.push_back(n);
    } else {
      ++r.odd_checked;
      if (v > 0) ++r.odd_positive;
      else r.exceptions.push_back(n);
    }
  }
  return r;
}

// Normalized magnitude: 4|mu|/n^2 for even n, 4|mu|/(n^2 - 1) for odd n. The
// band depends on n mod 12.
struct BandRow {
  std::size_t n = 0;
  double ratio = 0;
  char band = ' ';
  double lo = 0, hi = 0;
  bool in_band = false;
};

struct BandConstants {
  double a = 0.615, b = 0.680, c = 0.692, d = 0.760, e = 0.821, f = 0.896, g = 0.923;
};

inline double osc_ratio(std::size_t n, std::int64_t mu) {
  const double m = std::fabs(static_cast<double>(mu)), x = static_cast<double>(n);
  return n % 2 == 0 ? 4 * m / (x * x) : 4 * m / (x * x - 1);
}

inline std::vector<BandRow> band_report(const std::vector<std::int64_t>& sweep, std::size_t min_n = 12,
                                        const BandConstants& k = {}) {
  std::vector<BandRow> out;
  for (std::size_t n = std::max<std::size_t>(min_n, 2); n <= sweep.size(); ++n) {
    BandRow r;
    r.n = n;
    r.ratio = osc_ratio(n, sweep[n - 1]);
    switch (n % 12) {
      case 10: case 11: r.band = 'A', r.lo = k.a, r.hi = k.b; break;
      case 2: case 3: case 6: case 7: r.band = 'B', r.lo = k.c, r.hi = k.d; break;
      case 4: case 5: r.band = 'C', r.lo = k.e, r.hi = k.f; break;
      default: r.band = 'D', r.lo = k.g, r.hi = 1.0; break;
    }
    r.in_band = r.ratio >= r.lo && r.ratio <= r.hi;
    out.push_back(r);
  }
  return out;
}

inline bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// For m > 50: M(2m) = m^2 and M(2m+1) = m^2 - m exactly when m+1 is prime and
// m = 0 mod 6; M(2m) = m^2 - 1 and M(2m+1) = m^2 - m - 1 exactly when m+1 is
// prime and m = 4 mod 6. M is |mu[1, W_n]|. Rows appear when either side holds.
struct PrimeRow {
  std::size_t m = 0, n = 0;
  std::int64_t claimed = 0, actual = 0;
  bool condition = false, value_matches = false;
  bool agrees() const { return condition == value_matches; }
};

inline std::vector<PrimeRow> prime_conjecture_report(const std::vector<std::int64_t>& sweep) {
  std::vector<PrimeRow> out;
  for (std::size_t m = 51; 2 * m + 1 <= sweep.size(); ++m) {
    const bool prime = is_prime(m + 1);
    const auto mm = static_cast<std::int64_t>(m);
    const std::int64_t sq = mm * mm;
    const std::int64_t even = std::llabs(sweep[2 * m - 1]), odd = std::llabs(sweep[2 * m]);
    const std::pair<bool, std::array<std::int64_t, 2>> cases[] = {
        {prime && m % 6 == 0, {sq, sq - mm}},
        {prime && m % 6 == 4, {sq - 1, sq - mm - 1}},
    };
    for (const auto& [cond, claim] : cases) {
      for (int odd_side = 0; odd_side < 2; ++odd_side) {
        PrimeRow r;
        r.m = m;
        r.n = 2 * m + static_cast<std::size_t>(odd_side);
        r.claimed = claim[odd_side];
        r.actual = odd_side ? odd : even;
        r.condition = cond;
        r.value_matches = r.actual == r.claimed;
        if (r.condition || r.value_matches) out.push_back(r);
      }
    }
  }
  return out;
}

// ---- family value tables -------------------------------------------------------------

enum class FamilyKind { W1, W2, E1, E2, O, kappa, parallel_alternation };

inline const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::W1: return "w1";
    case FamilyKind::W2: return "w2";
    case FamilyKind::E1: return "e1";
    case FamilyKind::E2: return "e2";
    case FamilyKind::O: return "o";
    case FamilyKind::kappa: return "kappa";
    case FamilyKind::parallel_alternation: return "paralt";
  }
  return "unknown";
}

// The published value for a member: a closed-form conjecture where one exists,
// otherwise the tabulated value. n is the length for W1, W2 and parallel
// alternations, the half length for E1, E2 and O, and the index for kappa.
inline std::optional<std::int64_t> family_expected(FamilyKind kind, std::size_t n, std::size_t k = 0) {
  const auto N = static_cast<std::int64_t>(n), K = static_cast<std::int64_t>(k);
  const std::int64_t sign = n % 2 == 0 ? 1 : -1;
  switch (kind) {
    case FamilyKind::W1: return sign * 3 * (3 - N);
    case FamilyKind::W2: return sign * (1 - N);
    case FamilyKind::E1: return -((4 * N - 2) + K * K - K) / 2;
    case FamilyKind::E2: return (N - N * N - 4) / 2;
    case FamilyKind::O: return 2 * N;
    case FamilyKind::parallel_alternation: return -(N / 2 + 1) * (N / 2) / 2;
    case FamilyKind::kappa:
      if (n == 2) return -27;
      if (n == 3) return -117;
      return std::nullopt;
  }
  return std::nullopt;
}

struct FamilyRow {
  std::string family;
  std::size_t n = 0, k = 0;
  Permutation perm;
  std::int64_t value = 0;
  std::string method;
  std::optional<std::int64_t> expected;
  bool matches() const { return !expected || *expected == value; }
};

inline std::vector<std::pair<std::size_t, Permutation>> family_members(FamilyKind kind, std::size_t n) {
  std::vector<std::pair<std::size_t, Permutation>> out;
  switch (kind) {
    case FamilyKind::W1: out.emplace_back(0, wedge_simple(1, n)); break;
    case FamilyKind::W2: out.emplace_back(0, wedge_simple(2, n)); break;
    case FamilyKind::E1:
      for (std::size_t k = 1; k + 2 <= n; ++k) out.emplace_back(k, nearly_exceptional(NearlyExceptional::E1, 2 * n, k));
      break;
    case FamilyKind::E2: out.emplace_back(0, nearly_exceptional(NearlyExceptional::E2, 2 * n)); break;
    case FamilyKind::O:
      for (std::size_t k = 1; k + 1 <= n; ++k) out.emplace_back(k, nearly_exceptional(NearlyExceptional::O, 2 * n + 1, k));
      break;
    case FamilyKind::kappa: out.emplace_back(0, kappa(n)); break;
    case FamilyKind::parallel_alternation:
      if (n % 2 == 0) out.emplace_back(0, parallel_alternation(n));
      break;
  }
  return out;
}

// Rows for parameters from..to; lengths on the upper end are limited by what
// the dispatcher can reach.
inline std::vector<FamilyRow> family_value_table(FamilyKind kind, std::size_t from, std::size_t to,
                                                 Dispatcher* dispatcher = nullptr) {
  Dispatcher own;
  Dispatcher& d = dispatcher ? *dispatcher : own;
  std::vector<FamilyRow> out;
  for (std::size_t n = from; n <= to; ++n) {
    for (auto& [k, p] : family_members(kind, n)) {
      auto r = d.compute(Permutation{1}, p);
      FamilyRow row;
      row.family = family_name(kind);
      row.n = n;
      row.k = k;
      row.perm = std::move(p);
      row.value = r.value;
      row.method = r.method;
      row.expected = family_expected(kind, n, k);
      out.push_back(std::move(row));
    }
  }
  return out;
}

// ---- tables for emitters ---------------------------------------------------------------

// Column-ordered rows of text cells; numeric columns are marked so JSON
// emitters can write numbers.
struct Table {
  std::vector<std::string> columns;
  std::vector<bool> numeric;
  std::vector<std::vector<std::string>> rows;
};

inline void write_csv(std::ostream& os, const Table& t) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << cell(t.columns[i]);
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
    os << '\n';
  }
}

inline std::string join_perms(const std::vector<Permutation>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

inline std::string fixed(double x, int places = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

inline Table density_table(const std::vector<DensityRow>& rows) {
  Table t{{"n", "total", "zero_count", "d_n", "decimal", "mode", "breakdown"},
          {true, true, true, false, false, false, false},
          {}};
  for (const auto& r : rows) {
    std::string b;
    for (const auto& [k, v] : r.breakdown) b += (b.empty() ? "" : " ") + k + "=" + std::to_string(v);
    t.rows.push_back({std::to_string(r.n), std::to_string(r.total), std::to_string(r.zero_count),
                      std::to_string(r.num) + "/" + std::to_string(r.den), r.decimal, mode_name(r.mode), b});
  }
  return t;
}

inline Table adjacency_table(const std::vector<AdjacencyCounts>& rows) {
  Table t{{"n", "factorial", "s_n", "a_n", "b_n", "identity", "s_n_fraction"},
          {true, true, true, true, true, false, true},
          {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.n), std::to_string(r.factorial), std::to_string(r.s), std::to_string(r.a),
                      std::to_string(r.b), r.identity_holds() ? "holds" : "fails",
                      fixed(static_cast<double>(r.s) / static_cast<double>(r.factorial))});
  return t;
}

inline Table non_opposing_table(const std::vector<NonOpposingCounts>& rows) {
  Table t{{"n", "zero", "nonzero", "provenance"}, {true, true, true, false}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.n), std::to_string(r.zero_count), std::to_string(r.nonzero_count), "oracle"});
  return t;
}

inline Table extremal_rows_table(const std::vector<ExtremalRow>& rows) {
  Table t{{"n", "min", "max", "min_witnesses", "max_witnesses", "provenance"},
          {true, true, true, false, false, false},
          {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.n), std::to_string(r.min_value), std::to_string(r.max_value),
                      join_perms(r.min_witnesses), join_perms(r.max_witnesses), "oracle"});
  return t;
}

inline Table growth_rows_table(const std::vector<GrowthRow>& rows) {
  Table t{{"n", "value", "bound_exponent", "bound", "doubling", "provenance"},
          {true, true, true, false, false, false},
          {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.n), std::to_string(r.value), std::to_string(r.bound_exponent),
                      r.bound_holds ? "holds" : "fails", r.doubling ? (*r.doubling ? "holds" : "fails") : "",
                      "balloon_2413"});
  return t;
}

inline Table family_table(const std::vector<FamilyRow>& rows) {
  Table t{{"family", "n", "k", "perm", "value", "expected", "match", "method"},
          {false, true, true, false, true, true, false, false},
          {}};
  for (const auto& r : rows)
    t.rows.push_back({r.family, std::to_string(r.n), std::to_string(r.k), to_string(r.perm), std::to_string(r.value),
                      r.expected ? std::to_string(*r.expected) : "", r.expected ? (r.matches() ? "yes" : "no") : "",
                      r.method});
  return t;
}

// (n, value) pairs for plotting.
inline Table sweep_table(const std::vector<std::int64_t>& sweep) {
  Table t{{"n", "value", "ratio"}, {true, true, true}, {}};
  for (std::size_t n = 1; n <= sweep.size(); ++n)
    t.rows.push_back({std::to_string(n), std::to_string(sweep[n - 1]), fixed(osc_ratio(n, sweep[n - 1]))});
  return t;
}

inline Table band_rows_table(const std::vector<BandRow>& rows) {
  Table t{{"n", "ratio", "band", "lo", "hi", "in_band"}, {true, true, false, true, true, false}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.n), fixed(r.ratio), std::string(1, r.band), fixed(r.lo, 3), fixed(r.hi, 3),
                      r.in_band ? "yes" : "no"});
  return t;
}

inline Table prime_rows_table(const std::vector<PrimeRow>& rows) {
  Table t{{"m", "n", "claimed", "actual", "condition", "value_matches", "agrees"},
          {true, true, true, true, false, false, false},
          {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.m), std::to_string(r.n), std::to_string(r.claimed), std::to_string(r.actual),
                      r.condition ? "yes" : "no", r.value_matches ? "yes" : "no", r.agrees() ? "yes" : "no"});
  return t;
}

}  // namespace permob
