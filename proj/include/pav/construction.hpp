// construction.hpp -- the avoiding machinery: alphabet size k, the k
// permutations, the blocks a_1..a_k, the iterated words J_m, and the
// C-mapping onto Zimin words.

#pragma once

#include <cstddef>
#include <vector>

#include <pav/words.hpp>
#include <pav/zimin.hpp>

namespace pav {

/// Two generated permutations coincided; the requested k is unsupported.
struct DistinctnessError : Error {
  using Error::Error;
};

/// Permutation of {1..k}, stored in one-line form.
class Permutation {
public:
  explicit Permutation(int degree);  // identity

  /// Cycle notation: each listed element maps to the next, the last to the
  /// first; unlisted elements are fixed.
  static Permutation from_cycle(int degree, const std::vector<int>& cycle);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  /// Composition (*this) o first: apply `first`, then this permutation.
  Permutation after(const Permutation& first) const;
  Permutation power(int e) const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;  // images_[i-1] = image of i
};

/// The k permutations v_1..v_k of {1..k}: powers of the odd-index cycle
/// f_1 = (1,3,...,k-1) first, then g_1 f_1^{i-1} with g_1 = (2,6,...,k-2).
struct PermutationFamily {
  int k = 0;
  std::vector<Permutation> perms;
};

/// The member of {2*alpha+2, 2*alpha+4} divisible by 4, clamped below at 8
/// (k = 4 cannot produce k distinct permutations).
int choose_k(int alpha);

/// Builds v_1..v_k. Requires k to be a positive multiple of 4; throws
/// DistinctnessError when the family collides (k = 4).
PermutationFamily build_permutations(int k);

/// Blocks a_i = x_{v_i(1)} ... x_{v_i(k)} together with the C-mapping
/// table of Definition-8 shape: C(x_p) = s_{ruler(p)} for p < k, and
/// C(x_k) = Z' s_{t+1} where Z_t = C(x_1..x_{k-1}) Z' for the minimal t.
struct BlockSystem {
  int k = 0;
  PermutationFamily family;
  std::vector<Word> blocks;   // a_1..a_k over X, length k each
  int t = 0;                  // minimal rank with C(x_1..x_{k-1}) a prefix of Z_t
  std::vector<Word> c_table;  // c_table[p-1] = C(x_p), over Xi
};

/// Builds and self-checks the block system for the given k. Every block is
/// a permutation word ending in x_k, and C(a_i) = Z_t s_{t+1} for all i.
BlockSystem build_blocks(int k);

inline BlockSystem build_blocks_for_alpha(int alpha) { return build_blocks(choose_k(alpha)); }

/// The uniform morphism x_i -> a_i applied letter by letter.
Word apply_phi0(const BlockSystem& system, const Word& w);

/// J_1 = a_1, J_m = phi_0(J_{m-1}); |J_m| = k^m.
struct JWord {
  int m = 0;
  Word word;  // over X, length k^m
  BlockSystem system;
};

/// Materializes J_m. The default guard caps k^m at 10^6 letters.
JWord j_word(const BlockSystem& system, int m, std::size_t max_length = 1'000'000);

/// Letter-wise C image of a nonempty word over X.
Word c_map(const BlockSystem& system, const Word& w);

}  // namespace pav
