// words.hpp -- patterns, concrete words, substitutions, and the exact
// search for pattern occurrences under variable substitution.

#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pav {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pattern text was malformed.
struct ParseError : Error {
  using Error::Error;
};

struct EmptyPatternError : ParseError {
  using ParseError::ParseError;
};

/// An input violated a stated precondition.
struct DomainError : Error {
  using Error::Error;
};

/// A configurable size guard was exceeded; raise the guard to opt in.
struct GuardError : Error {
  using Error::Error;
};

/// The wall-clock budget expired before a search finished. Distinct from
/// "no occurrence": the search did not run to completion.
struct BudgetError : Error {
  using Error::Error;
};

/// A self-check inside a construction failed; a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

/// Concrete alphabets: X = {x_1..x_k} (bounded by k) and the unbounded
/// Xi = {s_1, s_2, ...}.
enum class Alphabet { x, xi };

/// Immutable word over a concrete indexed alphabet. Letters are 1-based
/// indices; words over X additionally satisfy letter <= k.
class Word {
public:
  Word() = default;

  static Word over_x(std::vector<int> letters, int k);
  static Word over_xi(std::vector<int> letters);

  /// Lowercase ASCII text as a word over X with k = 26 ('a' -> 1).
  static Word from_ascii(std::string_view text);

  Alphabet alphabet() const { return alphabet_; }
  /// Alphabet size k for X-words; 0 for Xi-words.
  int bound() const { return bound_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int letter(std::size_t i) const { return letters_[i]; }

  /// Contiguous factor [pos, pos+len), 0-based.
  Word factor(std::size_t pos, std::size_t len) const;

  bool operator==(const Word&) const = default;

private:
  Word(Alphabet a, int bound, std::vector<int> letters);

  Alphabet alphabet_ = Alphabet::xi;
  int bound_ = 0;
  std::vector<int> letters_;
};

/// A word over a variable alphabet. Variables are dense ids 0..alpha-1 in
/// first-appearance order; the source character of each id is kept for
/// rendering.
class Pattern {
public:
  const std::string& text() const { return text_; }
  const std::vector<int>& symbols() const { return symbols_; }
  int alpha() const { return static_cast<int>(names_.size()); }
  std::size_t length() const { return symbols_.size(); }
  char variable_name(int var) const { return names_.at(static_cast<std::size_t>(var)); }

private:
  friend Pattern make_pattern(std::string_view text);

  std::string text_;
  std::vector<int> symbols_;
  std::vector<char> names_;
};

/// Parses lowercase text (a-z) into a Pattern; each distinct character is
/// one variable.
Pattern make_pattern(std::string_view text);

/// Total assignment of nonempty words to the variables of one pattern.
class Substitution {
public:
  Substitution(const Pattern& target, std::vector<Word> images);
  Substitution(const Pattern& target, const std::map<char, Word>& bindings);

  const Word& image(int var) const { return images_.at(static_cast<std::size_t>(var)); }
  std::size_t arity() const { return images_.size(); }

  bool operator==(const Substitution&) const = default;

private:
  std::vector<Word> images_;
};

/// Concatenation of the images of u's symbols, in pattern order.
Word substitute(const Substitution& s, const Pattern& u);

/// One occurrence of a pattern instance inside a host word.
struct Occurrence {
  int start = 0;  // 1-based position in the host word
  int span = 0;   // total length of the substituted image
  Substitution assignment;

  bool operator==(const Occurrence&) const = default;
};

struct SearchLimits {
  /// Hosts longer than this are rejected; raise explicitly to opt in.
  std::size_t max_host_length = 4096;
  /// Optional wall-clock budget for one search.
  std::optional<std::chrono::milliseconds> budget;
};

/// Exhaustive search for an instance of u in the host. Returns the first
/// occurrence under the canonical order: ascending start position, and at
/// each pattern position the shorter candidate image first. An empty
/// result means no instance exists anywhere in the host.
std::optional<Occurrence> find_instance(const Word& host, const Pattern& u,
                                        const SearchLimits& limits = {});

/// True iff the host contains no instance of u.
bool avoids(const Word& host, const Pattern& u, const SearchLimits& limits = {});

}  // namespace pav
