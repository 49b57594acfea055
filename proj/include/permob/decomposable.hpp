#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "permob/embed.hpp"
#include "permob/errors.hpp"
#include "permob/perm.hpp"
#include "permob/structure.hpp"

namespace permob {

// Source of mu values for sub-intervals; called only with nonempty a < b, a <= b.
using MuFn = std::function<std::int64_t(const Permutation&, const Permutation&)>;

// mu extended to the empty permutation.
inline std::int64_t mu_with_empty(const MuFn& mu, const Permutation& a, const Permutation& b) {
  if (a.empty()) return b.empty() ? 1 : (b.size() == 1 ? -1 : 0);
  if (b.empty()) return 0;
  if (a == b) return 1;
  if (a.size() >= b.size() || !contains(a, b)) return 0;
  return mu(a, b);
}

namespace detail {

inline Permutation join_parts(const std::vector<Permutation>& parts, std::size_t from, std::size_t to) {
  Permutation out;
  for (std::size_t x = from; x < to && x < parts.size(); ++x) out = direct_sum(out, parts[x]);
  return out;
}

inline std::int64_t bjjs_sum(const Permutation& sigma, const Permutation& pi, const MuFn& mu) {
  const auto sd = finest_decomposition(sigma, SumKind::direct).parts;
  const auto pd = finest_decomposition(pi, SumKind::direct).parts;
  const std::size_t m = sd.size(), n = pd.size();
  const Permutation one{1};
  if (pd[0] == one) {
    std::size_t k = 0, l = 0;
    while (k < n && pd[k] == one) ++k;
    while (l < m && sd[l] == one) ++l;
    const auto tail = join_parts(pd, k, n);
    if (k - 1 > l) return 0;
    if (k - 1 == l) return checked::neg(mu_with_empty(mu, join_parts(sd, k - 1, m), tail));
    return checked::sub(mu_with_empty(mu, join_parts(sd, k, m), tail),
                        mu_with_empty(mu, join_parts(sd, k - 1, m), tail));
  }
  std::size_t k = 0;
  while (k < n && pd[k] == pd[0]) ++k;
  std::int64_t total = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const auto head = mu_with_empty(mu, join_parts(sd, 0, i), pd[0]);
    if (head == 0) continue;
    const auto rest = join_parts(sd, i, m);
    for (std::size_t j = 1; j <= k; ++j)
      total = checked::add(total, checked::mul(head, mu_with_empty(mu, rest, join_parts(pd, j, n))));
  }
  return total;
}

}  // namespace detail

// mu[sigma, pi] for decomposable pi by the recursions for direct sums; skew
// sums are mapped to direct sums by complementing both arguments. Nothing when
// pi is both sum and skew indecomposable.
inline std::optional<std::int64_t> bjjs_decomposable(const Permutation& sigma, const Permutation& pi, const MuFn& mu) {
  if (sigma.empty() || pi.empty()) throw DomainError("decomposable recursion needs nonempty arguments");
  if (is_sum_decomposable(pi)) return detail::bjjs_sum(sigma, pi, mu);
  if (is_skew_decomposable(pi)) {
    MuFn flipped = [&mu](const Permutation& a, const Permutation& b) { return mu(a.complement(), b.complement()); };
    return detail::bjjs_sum(sigma.complement(), pi.complement(), flipped);
  }
  return std::nullopt;
}

}  // namespace permob
