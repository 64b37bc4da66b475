// analysis.hpp -- property checkers for the block family and for
// square-freeness of the generated words.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <pav/construction.hpp>
#include <pav/words.hpp>

namespace pav {

/// Result of one property check. A failing report carries a concrete
/// counterexample that the checker re-validated before reporting.
struct PropertyReport {
  std::string property;
  bool pass = true;
  std::string instances;  // sizes checked, e.g. "k=8, 180 basic words"
  std::string detail;     // counterexample description; empty when passing
  std::vector<std::pair<std::string, Word>> words;
  std::vector<std::pair<std::string, long long>> values;
};

/// All factors of all blocks containing at least two even-indexed letters,
/// deduplicated and sorted.
std::vector<Word> basic_words(const BlockSystem& system);

/// Every basic word is a factor of exactly one block.
PropertyReport check_lemma1_a(const BlockSystem& system);

/// Blocks sharing a length-2 prefix are identical.
PropertyReport check_lemma1_b(const BlockSystem& system);

/// No straddle word (nonempty proper suffix of a block followed by a
/// nonempty proper prefix of a block, total length <= k) is a factor of
/// any block.
PropertyReport check_lemma1_c(const BlockSystem& system);

/// No factor of the form D D with D nonempty. Independent of the matcher.
PropertyReport check_square_free(const Word& w, std::size_t max_length = 100'000);

/// Every block contains at least alpha+1 letters of even index.
PropertyReport check_even_surplus(const BlockSystem& system, int alpha);

/// c_map(a_i) = Z_t s_{t+1} for every block a_i.
PropertyReport check_c_remark(const BlockSystem& system);

}  // namespace pav
