// zimin.hpp -- Zimin words and the blocking (unavoidability) decision.

#pragma once

#include <optional>

#include <pav/words.hpp>

namespace pav {

/// Z_1 = s1, Z_{n+1} = Z_n s_{n+1} Z_n; |Z_n| = 2^n - 1.
struct ZiminWord {
  int rank = 0;
  Word word;  // over Xi
};

/// Materializes Z_n. Guarded at 1 <= n <= 20 (length 2^20 - 1).
ZiminWord zimin(int n);

/// Ruler value of p >= 1: one plus the exponent of 2 in p. The letter of
/// Z_n at position p (1-based) is s_{ruler(p)} for every n with 2^n > p.
int ruler(long long p);

/// Substitution embedding a pattern into a Zimin word; existence of such
/// an embedding characterizes blocking (unavoidable) patterns.
struct BlockingWitness {
  int rank = 0;      // the Z_rank searched
  int position = 0;  // 1-based start of the embedding in Z_rank
  Substitution mapping;

  /// Re-substitutes and compares against the stated factor of Z_rank.
  bool verify(const Pattern& u) const;
};

/// Decides blocking by searching Z_depth for an instance of u. Default
/// depth is alpha(u), which suffices for the criterion; a larger depth may
/// be supplied to double-check. An empty result means u is avoidable
/// (non-blocking) at the configured depth.
std::optional<BlockingWitness> is_blocking(const Pattern& u,
                                           std::optional<int> depth = {},
                                           const SearchLimits& limits = {});

}  // namespace pav
