#include <pav/analysis.hpp>

#include <algorithm>
#include <set>

namespace pav {

namespace {

bool is_factor(const std::vector<int>& needle, const std::vector<int>& hay) {
  if (needle.empty()) return true;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

int count_even(const std::vector<int>& letters) {
  return static_cast<int>(
      std::count_if(letters.begin(), letters.end(), [](int v) { return v % 2 == 0; }));
}

std::string k_label(const BlockSystem& system) {
  return "k=" + std::to_string(system.k);
}

}  // namespace

std::vector<Word> basic_words(const BlockSystem& system) {
  std::set<std::vector<int>> seen;
  for (const Word& block : system.blocks) {
    const auto& letters = block.letters();
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
      int evens = 0;
      for (std::size_t end = pos; end < letters.size(); ++end) {
        if (letters[end] % 2 == 0) ++evens;
        if (evens >= 2)
          seen.insert(std::vector<int>(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                                       letters.begin() + static_cast<std::ptrdiff_t>(end) +
                                           1));
      }
    }
  }
  std::vector<Word> result;
  result.reserve(seen.size());
  for (const auto& letters : seen) result.push_back(Word::over_x(letters, system.k));
  return result;
}

PropertyReport check_lemma1_a(const BlockSystem& system) {
  PropertyReport report;
  report.property = "lemma1_a";
  const std::vector<Word> basics = basic_words(system);
  report.instances =
      k_label(system) + ", " + std::to_string(basics.size()) + " basic words";
  for (const Word& b : basics) {
    std::vector<long long> hits;
    for (std::size_t i = 0; i < system.blocks.size(); ++i) {
      if (is_factor(b.letters(), system.blocks[i].letters()))
        hits.push_back(static_cast<long long>(i) + 1);
    }
    if (hits.size() != 1) {
      for (long long i : hits) {
        if (!is_factor(b.letters(), system.blocks[static_cast<std::size_t>(i - 1)].letters()))
          throw InternalError("lemma1_a counterexample failed re-validation");
      }
      report.pass = false;
      report.detail = "basic word is a factor of " + std::to_string(hits.size()) +
                      " blocks instead of exactly one";
      report.words.emplace_back("basic_word", b);
      for (std::size_t h = 0; h < hits.size(); ++h)
        report.values.emplace_back("block_" + std::to_string(h + 1), hits[h]);
      return report;
    }
  }
  return report;
}

PropertyReport check_lemma1_b(const BlockSystem& system) {
  PropertyReport report;
  report.property = "lemma1_b";
  report.instances = k_label(system);
  for (std::size_t i = 0; i < system.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < system.blocks.size(); ++j) {
      const auto& a = system.blocks[i].letters();
      const auto& b = system.blocks[j].letters();
      if (a[0] == b[0] && a[1] == b[1] && a != b) {
        report.pass = false;
        report.detail = "two distinct blocks share a length-2 prefix";
        report.words.emplace_back("prefix", system.blocks[i].factor(0, 2));
        report.values.emplace_back("block_a", static_cast<long long>(i) + 1);
        report.values.emplace_back("block_b", static_cast<long long>(j) + 1);
        return report;
      }
    }
  }
  return report;
}

PropertyReport check_lemma1_c(const BlockSystem& system) {
  PropertyReport report;
  report.property = "lemma1_c";
  const int k = system.k;
  std::set<std::vector<int>> straddles;
  for (const Word& left : system.blocks) {
    for (int suffix_len = 1; suffix_len < k; ++suffix_len) {
      const auto& a = left.letters();
      for (const Word& right : system.blocks) {
        const auto& b = right.letters();
        for (int prefix_len = 1; suffix_len + prefix_len <= k; ++prefix_len) {
          std::vector<int> w(a.end() - suffix_len, a.end());
          w.insert(w.end(), b.begin(), b.begin() + prefix_len);
          straddles.insert(std::move(w));
        }
      }
    }
  }
  report.instances = k_label(system) + ", " + std::to_string(straddles.size()) +
                     " straddle words";
  for (const auto& w : straddles) {
    for (std::size_t i = 0; i < system.blocks.size(); ++i) {
      const auto& hay = system.blocks[i].letters();
      const auto hit = std::search(hay.begin(), hay.end(), w.begin(), w.end());
      if (hit != hay.end()) {
        const auto pos = static_cast<std::size_t>(hit - hay.begin());
        if (!(system.blocks[i].factor(pos, w.size()) == Word::over_x(w, k)))
          throw InternalError("lemma1_c counterexample failed re-validation");
        report.pass = false;
        report.detail = "a straddle word occurs inside a block";
        report.words.emplace_back("straddle_word", Word::over_x(w, k));
        report.values.emplace_back("block", static_cast<long long>(i) + 1);
        report.values.emplace_back("position", static_cast<long long>(pos) + 1);
        return report;
      }
    }
  }
  return report;
}

PropertyReport check_square_free(const Word& w, std::size_t max_length) {
  if (w.size() > max_length)
    throw GuardError("square-free scan guard exceeded: |w| = " + std::to_string(w.size()));
  PropertyReport report;
  report.property = "square_free";
  report.instances = "|w|=" + std::to_string(w.size());
  const auto& s = w.letters();
  const std::size_t n = s.size();
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + d < n; ++i) {
      run = (s[i] == s[i + d]) ? run + 1 : 0;
      if (run >= d) {
        const std::size_t start = i + 1 - d;  // 0-based start of the first copy
        const Word half = w.factor(start, d);
        if (!(w.factor(start + d, d) == half))
          throw InternalError("square counterexample failed re-validation");
        report.pass = false;
        report.detail = "factor D D found";
        report.words.emplace_back("D", half);
        report.values.emplace_back("position", static_cast<long long>(start) + 1);
        return report;
      }
    }
  }
  return report;
}

PropertyReport check_even_surplus(const BlockSystem& system, int alpha) {
  PropertyReport report;
  report.property = "even_surplus";
  report.instances = k_label(system) + ", alpha=" + std::to_string(alpha);
  for (std::size_t i = 0; i < system.blocks.size(); ++i) {
    const int evens = count_even(system.blocks[i].letters());
    if (evens < alpha + 1) {
      report.pass = false;
      report.detail = "block has " + std::to_string(evens) +
                      " even letters, needs at least " + std::to_string(alpha + 1);
      report.values.emplace_back("block", static_cast<long long>(i) + 1);
      report.values.emplace_back("even_letters", evens);
      return report;
    }
  }
  return report;
}

PropertyReport check_c_remark(const BlockSystem& system) {
  PropertyReport report;
  report.property = "c_remark";
  report.instances = k_label(system) + ", t=" + std::to_string(system.t);
  std::vector<int> expected_letters = zimin(system.t).word.letters();
  expected_letters.push_back(system.t + 1);
  const Word expected = Word::over_xi(std::move(expected_letters));
  for (std::size_t i = 0; i < system.blocks.size(); ++i) {
    const Word image = c_map(system, system.blocks[i]);
    if (!(image == expected)) {
      report.pass = false;
      report.detail = "C(a_" + std::to_string(i + 1) + ") differs from Z_t s_{t+1}";
      report.words.emplace_back("c_image", image);
      report.words.emplace_back("expected", expected);
      report.values.emplace_back("block", static_cast<long long>(i) + 1);
      return report;
    }
  }
  return report;
}

}  // namespace pav
