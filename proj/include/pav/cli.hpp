// cli.hpp -- command surface: decision, construction, verification and the
// property suite, with stable plain/JSON rendering.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <pav/analysis.hpp>
#include <pav/construction.hpp>
#include <pav/words.hpp>
#include <pav/zimin.hpp>

namespace pav {

enum class Format { plain, json, compact };

/// Decision result for one pattern. Exactly one of witness (unavoidable)
/// and k (avoidable) is present; claimed_bound is always 2*alpha + 4.
struct Verdict {
  std::string pattern;
  int alpha = 0;
  bool avoidable = false;
  std::optional<BlockingWitness> witness;
  std::optional<int> k;
  int claimed_bound = 0;
};

Verdict decide(const Pattern& u, std::optional<int> depth = {},
               const SearchLimits& limits = {});

/// Outcome of verifying that J_m avoids a pattern. A present occurrence is
/// a violation (it would contradict the avoidance claim).
struct VerifyResult {
  std::string pattern;
  int k = 0;
  int m = 0;
  std::size_t j_length = 0;
  std::optional<Occurrence> violation;
};

/// Builds J_m for the pattern's k (or an explicit override) and searches it
/// exhaustively. Refuses unavoidable patterns and alpha > k/2 - 1.
VerifyResult verify_pattern(const Pattern& u, std::optional<int> k_override, int m,
                            std::size_t max_j_length = 1'000'000,
                            std::optional<std::chrono::milliseconds> budget = {});

/// Runs the full checker suite for each k: lemma1_a/b/c, even_surplus at
/// alpha = k/2 - 1 (or an override), c_remark, and square-freeness of J_3
/// for k = 8 / J_2 for k >= 12.
std::vector<PropertyReport> run_props(const std::vector<int>& ks,
                                      std::optional<int> alpha = {});

// --- plain rendering --------------------------------------------------------

/// Space-separated tokens: "x3 x2 ..." for X-words, "s1 s2 ..." for
/// Xi-words. Compact packs letters as a-z (letter indices <= 26 only).
std::string render_word_tokens(const Word& w, bool compact = false);

std::string render_verdict(const Verdict& v, bool include_image);
std::string render_verify(const VerifyResult& r, const Pattern& u);
std::string render_props(const std::vector<PropertyReport>& reports);

// --- JSON payloads and round-trip --------------------------------------------

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const BlockingWitness& w, const Pattern& u,
                               bool include_image = false);
BlockingWitness witness_from_json(const nlohmann::json& j, const Pattern& u);
nlohmann::json occurrence_to_json(const Occurrence& o, const Pattern& u);
nlohmann::json verdict_to_json(const Verdict& v, bool include_image = false);
nlohmann::json verify_to_json(const VerifyResult& r, const Pattern& u);
nlohmann::json report_to_json(const PropertyReport& r);

// --- process entry ------------------------------------------------------------

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitBudget = 3;

/// Full command-line driver. args excludes the program name. Results go to
/// out, diagnostics to err; nothing is written to out on exits 1 and 3.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pav
