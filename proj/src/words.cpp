#include <pav/words.hpp>

#include <algorithm>
#include <array>
#include <utility>

namespace pav {

Word::Word(Alphabet a, int bound, std::vector<int> letters)
    : alphabet_(a), bound_(bound), letters_(std::move(letters)) {}

Word Word::over_x(std::vector<int> letters, int k) {
  if (k < 1) throw DomainError("alphabet size k must be >= 1");
  for (int v : letters) {
    if (v < 1 || v > k)
      throw DomainError("letter index " + std::to_string(v) + " outside 1.." +
                        std::to_string(k));
  }
  return Word(Alphabet::x, k, std::move(letters));
}

Word Word::over_xi(std::vector<int> letters) {
  for (int v : letters) {
    if (v < 1) throw DomainError("letter index " + std::to_string(v) + " must be >= 1");
  }
  return Word(Alphabet::xi, 0, std::move(letters));
}

Word Word::from_ascii(std::string_view text) {
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z')
      throw DomainError("ascii words use letters a-z, got '" + std::string(1, c) + "'");
    letters.push_back(c - 'a' + 1);
  }
  return Word(Alphabet::x, 26, std::move(letters));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) throw DomainError("factor range out of bounds");
  return Word(alphabet_, bound_,
              std::vector<int>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                               letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Pattern make_pattern(std::string_view text) {
  if (text.empty()) throw EmptyPatternError("empty pattern");
  Pattern p;
  p.text_.assign(text);
  std::array<int, 26> seen;
  seen.fill(-1);
  for (char c : text) {
    if (c < 'a' || c > 'z')
      throw ParseError("pattern variables must be letters a-z, got '" + std::string(1, c) +
                       "'");
    int slot = c - 'a';
    if (seen[static_cast<std::size_t>(slot)] < 0) {
      seen[static_cast<std::size_t>(slot)] = static_cast<int>(p.names_.size());
      p.names_.push_back(c);
    }
    p.symbols_.push_back(seen[static_cast<std::size_t>(slot)]);
  }
  return p;
}

Substitution::Substitution(const Pattern& target, std::vector<Word> images)
    : images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(target.alpha()))
    throw DomainError("binding count mismatch: pattern has " +
                      std::to_string(target.alpha()) + " variables, got " +
                      std::to_string(images_.size()) + " images");
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v].empty())
      throw DomainError(std::string("empty image for variable '") +
                        target.variable_name(static_cast<int>(v)) + "'");
  }
}

Substitution::Substitution(const Pattern& target, const std::map<char, Word>& bindings) {
  images_.reserve(static_cast<std::size_t>(target.alpha()));
  for (int v = 0; v < target.alpha(); ++v) {
    auto it = bindings.find(target.variable_name(v));
    if (it == bindings.end())
      throw DomainError(std::string("missing binding for variable '") +
                        target.variable_name(v) + "'");
    if (it->second.empty())
      throw DomainError(std::string("empty image for variable '") +
                        target.variable_name(v) + "'");
    images_.push_back(it->second);
  }
  if (bindings.size() != images_.size())
    throw DomainError("bindings name variables not present in the pattern");
}

Word substitute(const Substitution& s, const Pattern& u) {
  if (s.arity() != static_cast<std::size_t>(u.alpha()))
    throw DomainError("substitution arity does not match the pattern");
  const Word& first = s.image(0);
  const Alphabet alphabet = first.alphabet();
  const int bound = first.bound();
  for (int v = 0; v < u.alpha(); ++v) {
    const Word& img = s.image(v);
    if (img.alphabet() != alphabet || img.bound() != bound)
      throw DomainError("substitution images are over mixed alphabets");
  }
  std::size_t total = 0;
  for (int sym : u.symbols()) total += s.image(sym).size();
  std::vector<int> letters;
  letters.reserve(total);
  for (int sym : u.symbols()) {
    const auto& img = s.image(sym).letters();
    letters.insert(letters.end(), img.begin(), img.end());
  }
  return alphabet == Alphabet::x ? Word::over_x(std::move(letters), bound)
                                 : Word::over_xi(std::move(letters));
}

namespace {

// Depth-first search over image lengths: starts ascending, and at the
// earliest pattern position with a free choice the shorter image first.
// That order makes the first hit the canonical occurrence. The stack is
// explicit so the depth (one frame per pattern position) never threatens
// the call stack.
class InstanceSearch {
public:
  InstanceSearch(const Word& host, const Pattern& u, const SearchLimits& limits)
      : host_(host.letters()), sym_(u.symbols()), alpha_(u.alpha()) {
    len_.assign(static_cast<std::size_t>(alpha_), 0);
    off_.assign(static_cast<std::size_t>(alpha_), 0);
    const std::size_t m = sym_.size();
    mult_.assign(m + 1, std::vector<long long>(static_cast<std::size_t>(alpha_), 0));
    for (std::size_t pos = m; pos-- > 0;) {
      mult_[pos] = mult_[pos + 1];
      ++mult_[pos][static_cast<std::size_t>(sym_[pos])];
    }
    if (limits.budget) {
      deadline_ = Clock::now() + *limits.budget;
      has_deadline_ = true;
    }
  }

  std::optional<Occurrence> run(const Word& host, const Pattern& u) {
    check_budget();
    const std::size_t n = host_.size();
    const std::size_t m = sym_.size();
    for (std::size_t start = 0; m <= n && start <= n - m; ++start) {
      std::fill(len_.begin(), len_.end(), 0);
      if (try_start(start)) {
        std::vector<Word> images;
        images.reserve(static_cast<std::size_t>(alpha_));
        for (int v = 0; v < alpha_; ++v) {
          const auto sv = static_cast<std::size_t>(v);
          images.push_back(host.factor(static_cast<std::size_t>(off_[sv]),
                                       static_cast<std::size_t>(len_[sv])));
        }
        return Occurrence{static_cast<int>(start) + 1,
                          static_cast<int>(end_hpos_ - start),
                          Substitution(u, std::move(images))};
      }
    }
    return std::nullopt;
  }

private:
  using Clock = std::chrono::steady_clock;

  // One frame per consumed pattern position. The position that first binds
  // a variable owns the choice and iterates its length on backtracking.
  struct Frame {
    std::size_t hpos_before = 0;
    long long len = 0;      // owners only
    long long max_len = 0;  // owners only
    bool owner = false;
  };

  bool try_start(std::size_t start) {
    const std::size_t m = sym_.size();
    const std::size_t n = host_.size();
    frames_.clear();
    std::size_t pos = 0;
    std::size_t hpos = start;
    while (true) {
      if (pos == m) {
        end_hpos_ = hpos;
        return true;
      }
      if ((++nodes_ & 0xFFF) == 0) check_budget();
      const auto v = static_cast<std::size_t>(sym_[pos]);
      bool descended = false;
      if (len_[v] > 0) {
        const auto l = static_cast<std::size_t>(len_[v]);
        if (hpos + l + min_need(pos + 1) <= n) {
          const auto img = host_.begin() + off_[v];
          if (std::equal(img, img + static_cast<std::ptrdiff_t>(l),
                         host_.begin() + static_cast<std::ptrdiff_t>(hpos))) {
            frames_.push_back({hpos, 0, 0, false});
            hpos += l;
            ++pos;
            descended = true;
          }
        }
      } else {
        // Binding v to length l costs l letters here plus (l-1) extra at
        // each later occurrence of v; solve for the largest feasible l.
        const long long future = mult_[pos + 1][v];
        const long long others = static_cast<long long>(min_need(pos + 1));
        const long long cap = static_cast<long long>(n) - static_cast<long long>(hpos) -
                              others + future;
        const long long max_len = cap / (1 + future);
        if (max_len >= 1) {
          len_[v] = 1;
          off_[v] = static_cast<std::ptrdiff_t>(hpos);
          frames_.push_back({hpos, 1, max_len, true});
          hpos += 1;
          ++pos;
          descended = true;
        }
      }
      if (descended) continue;
      // Backtrack to the deepest owner with lengths left to try.
      while (true) {
        if (frames_.empty()) return false;
        Frame& f = frames_.back();
        const auto owner_var = static_cast<std::size_t>(sym_[frames_.size() - 1]);
        if (f.owner && f.len < f.max_len) {
          ++f.len;
          len_[owner_var] = static_cast<int>(f.len);
          hpos = f.hpos_before + static_cast<std::size_t>(f.len);
          pos = frames_.size();
          break;
        }
        if (f.owner) len_[owner_var] = 0;
        frames_.pop_back();
      }
    }
  }

  // Minimum host letters demanded by pattern positions >= pos, counting
  // unbound variables at length 1.
  std::size_t min_need(std::size_t pos) const {
    long long need = 0;
    for (int v = 0; v < alpha_; ++v) {
      const auto sv = static_cast<std::size_t>(v);
      need += static_cast<long long>(len_[sv] > 0 ? len_[sv] : 1) * mult_[pos][sv];
    }
    return static_cast<std::size_t>(need);
  }

  void check_budget() const {
    if (has_deadline_ && Clock::now() >= deadline_)
      throw BudgetError("search budget exhausted");
  }

  const std::vector<int>& host_;
  const std::vector<int>& sym_;
  int alpha_;
  std::vector<int> len_;
  std::vector<std::ptrdiff_t> off_;
  std::vector<std::vector<long long>> mult_;
  std::vector<Frame> frames_;
  std::size_t end_hpos_ = 0;
  Clock::time_point deadline_{};
  bool has_deadline_ = false;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<Occurrence> find_instance(const Word& host, const Pattern& u,
                                        const SearchLimits& limits) {
  if (host.empty()) throw DomainError("host word is empty");
  if (host.size() > limits.max_host_length)
    throw GuardError("host length " + std::to_string(host.size()) + " exceeds guard " +
                     std::to_string(limits.max_host_length) +
                     "; raise max_host_length to opt in");
  InstanceSearch search(host, u, limits);
  return search.run(host, u);
}

bool avoids(const Word& host, const Pattern& u, const SearchLimits& limits) {
  return !find_instance(host, u, limits).has_value();
}

}  // namespace pav
