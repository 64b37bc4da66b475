// random_cases.hpp -- deterministic random words and patterns for
// property-style tests.

#pragma once

#include <random>
#include <string>

#include <pav/words.hpp>

namespace pav::testsupport {

inline Word random_word(std::mt19937& rng, int max_len = 12, int letters = 3) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> letter_dist(1, letters);
  std::vector<int> out(static_cast<std::size_t>(len_dist(rng)));
  for (int& v : out) v = letter_dist(rng);
  return Word::over_x(std::move(out), letters);
}

inline Pattern random_pattern(std::mt19937& rng, int max_len = 4, int max_alpha = 3) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> var_dist(0, max_alpha - 1);
  std::string text(static_cast<std::size_t>(len_dist(rng)), 'x');
  for (char& c : text) c = static_cast<char>('x' + var_dist(rng));
  return make_pattern(text);
}

}  // namespace pav::testsupport
