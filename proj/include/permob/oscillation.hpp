#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permob/engines.hpp"
#include "permob/errors.hpp"
#include "permob/families.hpp"
#include "permob/perm.hpp"

namespace permob {

// A sum-indecomposable pattern of an increasing oscillation: a run of k path
// vertices whose first vertex has the given parity. For k <= 2 the parity is
// irrelevant and kept at 0.
struct OscPiece {
  int parity = 0;
  std::size_t k = 1;

  friend bool operator==(const OscPiece&, const OscPiece&) = default;
};

inline OscPiece make_piece(int parity, std::size_t k) { return OscPiece{k <= 2 ? 0 : parity, k}; }

inline OscPiece to_piece(const OscillationDescriptor& d) { return make_piece(d.parity(), d.n); }

inline std::optional<OscPiece> recognize_piece(const Permutation& p) {
  auto d = recognize_oscillation(p);
  if (!d) return std::nullopt;
  return to_piece(*d);
}

inline Permutation materialize(const OscPiece& q) { return oscillation_run(static_cast<std::size_t>(q.parity), q.k); }

inline bool piece_contains(const OscPiece& inner, const OscPiece& outer) {
  if (inner.k <= 2 || outer.k <= 2) return inner.k <= outer.k && (inner.k <= 2 || inner == outer);
  const std::size_t shift = inner.parity != outer.parity ? 1 : 0;
  return shift + inner.k <= outer.k;
}

// Weight of piece alpha in the contributing set of [sigma, host], where sigma
// and alpha are pieces and host = P(h, N). Every copy of a sum of pieces in the
// host is a set of runs separated by gaps, so containment reduces to counting
// path vertices.
inline int osc_weight(const OscPiece& sigma, const OscPiece& alpha, const OscPiece& host, std::size_t* r_out = nullptr) {
  const std::size_t N = host.k, k = alpha.k;
  const std::size_t shift = (k >= 3 && (host.k <= 2 ? 0 : host.parity) != alpha.parity) ? 1 : 0;
  const std::size_t g = (k <= 2 || k % 2 == 1) ? 1 : 2;
  auto fits = [&](std::size_t left, std::size_t right, std::size_t r) {
    return 2 * left + shift + r * k + (r - 1) * g + 2 * right <= N;
  };
  const auto X = static_cast<std::int64_t>(N) - 4 - static_cast<std::int64_t>(shift) + static_cast<std::int64_t>(g);
  const auto step = static_cast<std::int64_t>(k + g);
  const std::size_t r = X < step ? 1 : static_cast<std::size_t>(X / step) + 1;
  if (r_out) *r_out = r;
  if (!fits(0, 0, r)) return 0;
  if (!piece_contains(sigma, alpha)) return 0;
  const bool flank = fits(1, 0, r);
  if (!flank) return 1;
  if (!fits(0, 0, r + 1)) return -1;
  return 0;
}

// mu[sigma, P] over pieces P for a fixed piece sigma, evaluated through the
// contributing set with an explicit stack. The memo keeps every host seen, so a
// sweep over growing hosts reuses earlier values.
class IncOscSolver {
 public:
  explicit IncOscSolver(OscPiece sigma) : sigma_(sigma) {}

  const OscPiece& sigma() const { return sigma_; }
  std::size_t states() const { return memo_.size(); }

  std::int64_t mobius(const OscPiece& host) {
    if (auto v = base(host)) return *v;
    std::vector<OscPiece> stack{host};
    while (!stack.empty()) {
      const OscPiece top = stack.back();
      if (memo_.count(key(top))) {
        stack.pop_back();
        continue;
      }
      auto& terms = pending_[key(top)];
      if (terms.empty()) terms = weighted_pieces(top);
      bool ready = true;
      std::int64_t s = 0;
      for (const auto& [alpha, w] : terms) {
        std::int64_t m;
        if (auto b = base(alpha)) {
          m = *b;
        } else if (auto it = memo_.find(key(alpha)); it != memo_.end()) {
          m = it->second;
        } else {
          stack.push_back(alpha);
          ready = false;
          continue;
        }
        if (ready) s = checked::sub(s, checked::mul(m, w));
      }
      if (!ready) continue;
      memo_[key(top)] = s;
      pending_.erase(key(top));
      stack.pop_back();
    }
    return memo_.at(key(host));
  }

  std::int64_t mobius(const OscillationDescriptor& d) { return mobius(to_piece(d)); }

  // Pieces alpha in [sigma, host) with nonzero weight. A piece of length k >= 3
  // weighs nonzero only when some r >= 1 puts its r-fold sum at 0..3 path
  // vertices below |host|, i.e. step = k + gap divides one of a few targets
  // just below |host|; the divisors of those targets give every candidate.
  std::vector<std::pair<OscPiece, int>> weighted_pieces(const OscPiece& host) const {
    std::vector<std::pair<OscPiece, int>> out;
    auto consider = [&](const OscPiece& a) {
      if (a.k > host.k || a == host || !piece_contains(sigma_, a) || !piece_contains(a, host)) return;
      for (const auto& e : out)
        if (e.first == a) return;
      if (int w = osc_weight(sigma_, a, host)) out.emplace_back(a, w);
    };
    if (sigma_.k <= 2) consider(make_piece(0, 2));
    const std::size_t N = host.k;
    for (std::size_t t = N >= 4 ? N - 4 : 1; t <= N + 2; ++t) {
      for (std::size_t d = 1; d * d <= t; ++d) {
        if (t % d != 0) continue;
        for (std::size_t step : {d, t / d}) {
          if (step < 4 || step % 2 != 0) continue;
          for (std::size_t k : {step - 1, step - 2}) {
            if (k < 3 || k < sigma_.k) continue;
            for (int p : {0, 1}) consider(make_piece(p, k));
          }
        }
      }
    }
    return out;
  }

  // Same set by scanning every piece length; kept for cross-checks.
  std::vector<std::pair<OscPiece, int>> weighted_pieces_scan(const OscPiece& host) const {
    std::vector<std::pair<OscPiece, int>> out;
    auto consider = [&](const OscPiece& a) {
      if (a == host || !piece_contains(sigma_, a) || !piece_contains(a, host)) return;
      if (int w = osc_weight(sigma_, a, host)) out.emplace_back(a, w);
    };
    if (sigma_.k <= 2) consider(make_piece(0, 2));
    for (std::size_t k = std::max<std::size_t>(3, sigma_.k); k <= host.k; ++k)
      for (int p : {0, 1}) consider(make_piece(p, k));
    return out;
  }

 private:
  static std::uint64_t key(const OscPiece& q) { return (static_cast<std::uint64_t>(q.k) << 1) | static_cast<std::uint64_t>(q.parity); }

  std::optional<std::int64_t> base(const OscPiece& host) const {
    if (!piece_contains(sigma_, host)) return 0;
    if (host == sigma_) return 1;
    if (host.k == sigma_.k + 1) return -1;
    if (host.k <= 3) return mobius_recursive(materialize(sigma_), materialize(host)).value;
    return std::nullopt;
  }

  OscPiece sigma_;
  std::unordered_map<std::uint64_t, std::int64_t> memo_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<OscPiece, int>>> pending_;
};

// mu[sigma, pi] for pi an increasing oscillation of length >= 4 and sigma a
// sum-indecomposable pattern of it.
inline std::int64_t inc_osc_mobius(const OscPiece& sigma, const OscillationDescriptor& pi) {
  const auto host = to_piece(pi);
  if (!piece_contains(sigma, host)) throw DomainError("sigma is not contained in the oscillation");
  IncOscSolver solver(sigma);
  return solver.mobius(host);
}

inline std::int64_t inc_osc_mobius(const Permutation& sigma, const OscillationDescriptor& pi) {
  if (pi.n < 4) throw DomainError("oscillation closed form needs |pi| >= 4");
  auto s = recognize_piece(sigma);
  if (!s) {
    if (sigma.empty() || is_sum_decomposable(sigma)) throw DomainError("sigma must be sum indecomposable");
    throw DomainError("sigma is not contained in the oscillation");
  }
  return inc_osc_mobius(*s, pi);
}

inline std::int64_t inc_osc_mobius(const Permutation& sigma, const Permutation& pi) {
  auto d = recognize_oscillation(pi);
  if (!d) throw DomainError("pi is not an increasing oscillation");
  return inc_osc_mobius(sigma, *d);
}

// mu[1, W_n] for n = 1 .. max_n.
inline std::vector<std::int64_t> oscillation_sweep(std::size_t max_n) {
  IncOscSolver solver(OscPiece{0, 1});
  std::vector<std::int64_t> out;
  out.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(solver.mobius(make_piece(0, n)));
  return out;
}

}  // namespace permob
