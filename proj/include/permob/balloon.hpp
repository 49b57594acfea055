#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permob/embed.hpp"
#include "permob/errors.hpp"
#include "permob/families.hpp"
#include "permob/perm.hpp"
#include "permob/poset.hpp"

namespace permob {

// Source of principal values mu[1, p].
using PrincipalFn = std::function<std::int64_t(const Permutation&)>;

// ---- 2413-balloons -------------------------------------------------------------

// The inner beta when p = balloon_2413(beta) with beta nonempty.
inline std::optional<Permutation> is_2413_balloon(const Permutation& p) {
  const std::size_t n = p.size();
  if (n < 5) return std::nullopt;
  const auto N = static_cast<value_t>(n);
  if (p[0] != 2 || p[1] != N || p[n - 2] != 1 || p[n - 1] != N - 1) return std::nullopt;
  std::vector<value_t> mid(p.values().begin() + 2, p.values().end() - 2);
  for (auto& v : mid) v -= 2;
  return Permutation::trusted(std::move(mid));
}

inline std::int64_t balloon_2413_mobius(const Permutation& beta, const PrincipalFn& mu) {
  if (beta.empty()) throw DomainError("2413-balloon needs a nonempty beta");
  if (beta == Permutation{1}) return 4;
  if (beta == Permutation{2, 4, 1, 3}) return -6;
  if (is_2413_balloon(beta)) return checked::mul(2, mu(beta));
  return mu(beta);
}

// mu[1, pi_sequence(n)] by repeated ballooning.
inline std::int64_t pi_sequence_mobius(std::size_t n) {
  if (n == 0) throw DomainError("pi sequence needs n >= 1");
  static const std::int64_t base[4] = {1, -1, 1, -3};
  std::size_t m = (n - 1) % 4 + 1;
  std::int64_t v = base[m - 1];
  for (; m < n; m += 4) {
    if (m == 1) v = 4;
    else if (m == 4) v = -6;
    else if (m > 4) v = checked::mul(2, v);
  }
  return v;
}

// ---- containment classes inside a balloon --------------------------------------

enum class ContainmentKind { complete, proper_reduction, matryoshka, defective };

inline const char* kind_name(ContainmentKind k) {
  switch (k) {
    case ContainmentKind::complete: return "complete";
    case ContainmentKind::proper_reduction: return "proper_reduction";
    case ContainmentKind::matryoshka: return "matryoshka";
    case ContainmentKind::defective: return "defective";
  }
  return "unknown";
}

struct ContainmentClass {
  ContainmentKind kind{};
  std::optional<Permutation> minimal_core;
  std::set<Permutation> embedding_cores;
};

// Blue points are the beta block at positions i .. i+|beta|-1; the rest are red.
inline ContainmentClass classify_containment(const Permutation& sigma, const BalloonSpec& spec) {
  const auto pi = balloon(spec);
  const std::size_t lo = spec.i, hi = spec.i + spec.beta.size(), reds = spec.alpha.size();
  bool any = false, complete = false, all_blue = true;
  ContainmentClass out;
  for_each_embedding(sigma, pi, [&](const std::vector<std::size_t>& pos) {
    any = true;
    std::vector<std::size_t> blue;
    std::size_t red = 0;
    for (auto x : pos) {
      if (x >= lo && x < hi) blue.push_back(x);
      else ++red;
    }
    complete |= red == reds;
    all_blue &= blue.size() == spec.beta.size();
    out.embedding_cores.insert(subpattern(pi, blue));
    return false;
  });
  if (!any) throw DomainError("sigma is not contained in the balloon");
  if (complete) {
    out.kind = ContainmentKind::complete;
  } else if (sigma != pi && all_blue) {
    out.kind = ContainmentKind::proper_reduction;
  } else {
    out.kind = ContainmentKind::defective;
    for (const auto& z : out.embedding_cores) {
      bool below_all = true;
      for (const auto& y : out.embedding_cores)
        if (y != z && !contains(z, y)) below_all = false;
      if (below_all) {
        out.kind = ContainmentKind::matryoshka;
        out.minimal_core = z;
        break;
      }
    }
  }
  return out;
}

inline constexpr std::size_t max_reduction_alpha = 12;

// All sigma < pi whose every embedding uses every blue point; each arises by
// deleting a set of red points.
inline std::vector<Permutation> proper_reductions(const BalloonSpec& spec) {
  const std::size_t a = spec.alpha.size(), b = spec.beta.size();
  if (b == 0) throw DomainError("proper reductions need a nonempty beta");
  if (a > max_reduction_alpha)
    throw GuardError("proper reductions enumerate 2^|alpha| subsets; |alpha| = " + std::to_string(a) + " > " +
                     std::to_string(max_reduction_alpha));
  const auto pi = balloon(spec);
  std::set<Permutation> seen, out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << a); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t x = 0, r = 0; x < pi.size(); ++x) {
      const bool is_red = x < spec.i || x >= spec.i + b;
      if (is_red && (mask >> r++ & 1)) continue;
      keep.push_back(x);
    }
    auto s = subpattern(pi, keep);
    if (!seen.insert(s).second) continue;
    bool all_blue = true;
    for_each_embedding(s, pi, [&](const std::vector<std::size_t>& pos) {
      std::size_t blue = 0;
      for (auto x : pos) blue += x >= spec.i && x < spec.i + b;
      all_blue = blue == b;
      return !all_blue;
    });
    if (all_blue) out.insert(s);
  }
  return {out.begin(), out.end()};
}

inline std::vector<Permutation> proper_reductions_wedge(const WedgeSpec& spec) {
  return proper_reductions(spec.as_balloon());
}

// mu[1, wedge] = - sum of mu over the proper reductions. For |pi| = 2 the only
// element below is 1, which is no reduction, so the sum misses it.
inline std::int64_t wedge_mobius(const WedgeSpec& spec, const PrincipalFn& mu) {
  if (spec.alpha.size() + spec.beta.size() < 3) throw DomainError("wedge recursion needs |pi| >= 3");
  std::int64_t s = 0;
  for (const auto& l : proper_reductions_wedge(spec)) s = checked::sub(s, mu(l));
  return s;
}

struct CorrectedValue {
  std::int64_t value = 0;
  std::int64_t reduction_term = 0;
  std::int64_t correction = 0;
  std::uint64_t chains_r = 0, chains_m = 0, chains_g = 0;
};

// mu[1, balloon] as the reduction sum plus the signed count of the chains that
// are neither reduction chains nor matryoshka chains. Needs |alpha| >= 2 so that
// every chain has a non-complete element.
inline CorrectedValue balloon_mobius_with_correction(const BalloonSpec& spec, const PrincipalFn& mu,
                                                   PosetLimits lim = {22, 120, 3000}) {
  if (spec.alpha.size() < 2) throw DomainError("correction term needs |alpha| >= 2");
  const auto pi = balloon(spec);
  CorrectedValue cv;
  for (const auto& l : proper_reductions(spec)) cv.reduction_term = checked::sub(cv.reduction_term, mu(l));
  auto iv = downset(pi, lim);
  std::vector<ContainmentClass> cls;
  cls.reserve(iv.size());
  for (const auto& x : iv.elements) cls.push_back(classify_containment(x, spec));
  enumerate_chains(
      iv,
      [&](const std::vector<std::size_t>& c) {
        if (c.size() >= 2 && cls[c[c.size() - 2]].kind == ContainmentKind::proper_reduction) {
          ++cv.chains_r;
          return false;
        }
        std::size_t psi = c.size();
        for (std::size_t x = c.size(); x-- > 0;)
          if (cls[c[x]].kind != ContainmentKind::complete) {
            psi = x;
            break;
          }
        if (psi < c.size() && cls[c[psi]].kind == ContainmentKind::matryoshka) {
          ++cv.chains_m;
          return false;
        }
        ++cv.chains_g;
        cv.correction = (c.size() - 1) % 2 == 0 ? checked::add(cv.correction, 1) : checked::sub(cv.correction, 1);
        return false;
      },
      lim);
  cv.value = checked::add(cv.reduction_term, cv.correction);
  return cv;
}

// A wedge spec and symmetry index s with apply_symmetry(p, s) = wedge(spec),
// |alpha| in [2, max_alpha] and |beta| >= 2. In a wedge the top |beta| values
// occupy a contiguous block of positions.
inline std::optional<std::pair<WedgeSpec, int>> recognize_wedge(const Permutation& p, std::size_t max_alpha = 12) {
  const std::size_t n = p.size();
  for (int s = 0; s < 8; ++s) {
    const auto q = apply_symmetry(p, s);
    std::size_t first = n, last = 0;
    for (std::size_t b = 2; b + 2 <= n; ++b) {
      // positions of values n-b+1 .. n
      first = n, last = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (q[x] > n - b) first = std::min(first, x), last = std::max(last, x);
      if (last - first + 1 != b) continue;
      const std::size_t a = n - b;
      if (a < 2 || a > max_alpha) continue;
      std::vector<std::size_t> apos, bpos;
      for (std::size_t x = 0; x < n; ++x) (x >= first && x <= last ? bpos : apos).push_back(x);
      WedgeSpec w{subpattern(q, apos), subpattern(q, bpos), first};
      if (wedge(w) == q) return std::make_pair(w, s);
    }
  }
  return std::nullopt;
}

}  // namespace permob
