#include <pav/zimin.hpp>

#include <bit>
#include <utility>

namespace pav {

ZiminWord zimin(int n) {
  if (n < 1 || n > 20)
    throw GuardError("zimin rank must be within 1..20, got " + std::to_string(n));
  std::vector<int> letters{1};
  letters.reserve((std::size_t{1} << n) - 1);
  for (int i = 2; i <= n; ++i) {
    const std::size_t half = letters.size();
    letters.push_back(i);
    for (std::size_t j = 0; j < half; ++j) letters.push_back(letters[j]);
  }
  return ZiminWord{n, Word::over_xi(std::move(letters))};
}

int ruler(long long p) {
  if (p < 1) throw DomainError("ruler is defined for p >= 1");
  return std::countr_zero(static_cast<unsigned long long>(p)) + 1;
}

bool BlockingWitness::verify(const Pattern& u) const {
  const Word image = substitute(mapping, u);
  const ZiminWord z = zimin(rank);
  if (position < 1 ||
      static_cast<std::size_t>(position - 1) + image.size() > z.word.size())
    return false;
  return z.word.factor(static_cast<std::size_t>(position - 1), image.size()) == image;
}

std::optional<BlockingWitness> is_blocking(const Pattern& u, std::optional<int> depth,
                                           const SearchLimits& limits) {
  const int d = depth.value_or(u.alpha());
  const ZiminWord z = zimin(d);
  SearchLimits search = limits;
  // The host is built here on purpose; the guard only applies to callers'
  // own hosts.
  search.max_host_length = std::max(search.max_host_length, z.word.size());
  auto occurrence = find_instance(z.word, u, search);
  if (!occurrence) return std::nullopt;
  return BlockingWitness{d, occurrence->start, std::move(occurrence->assignment)};
}

}  // namespace pav
