#include <pav/construction.hpp>

#include <algorithm>
#include <numeric>
#include <utility>

namespace pav {

Permutation::Permutation(int degree) {
  if (degree < 1) throw DomainError("permutation degree must be >= 1");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_cycle(int degree, const std::vector<int>& cycle) {
  Permutation p(degree);
  if (cycle.empty()) return p;
  for (int e : cycle) {
    if (e < 1 || e > degree) throw DomainError("cycle element outside 1..degree");
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int from = cycle[i];
    const int to = cycle[(i + 1) % cycle.size()];
    if (p.images_[static_cast<std::size_t>(from - 1)] != from && cycle.size() > 1)
      throw DomainError("cycle lists an element twice");
    p.images_[static_cast<std::size_t>(from - 1)] = to;
  }
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  if (degree() != first.degree()) throw DomainError("permutation degrees differ");
  Permutation r(degree());
  for (int i = 1; i <= degree(); ++i)
    r.images_[static_cast<std::size_t>(i - 1)] = apply(first.apply(i));
  return r;
}

Permutation Permutation::power(int e) const {
  if (e < 0) throw DomainError("negative permutation power");
  Permutation r(degree());
  for (int i = 0; i < e; ++i) r = after(r);
  return r;
}

int choose_k(int alpha) {
  if (alpha < 1) throw DomainError("alpha must be >= 1, got " + std::to_string(alpha));
  const int low = 2 * alpha + 2;
  const int k = (low % 4 == 0) ? low : low + 2;
  return std::max(k, 8);
}

PermutationFamily build_permutations(int k) {
  if (k < 4 || k % 4 != 0)
    throw DomainError("k must be a multiple of 4 and >= 4, got " + std::to_string(k));

  std::vector<int> odd_cycle;  // 1, 3, ..., k-1
  for (int i = 1; i < k; i += 2) odd_cycle.push_back(i);
  std::vector<int> g_cycle;  // 2, 6, ..., k-2
  for (int i = 2; i <= k - 2; i += 4) g_cycle.push_back(i);

  const Permutation f1 = Permutation::from_cycle(k, odd_cycle);
  const Permutation g1 = Permutation::from_cycle(k, g_cycle);
  if (f1.after(g1) != g1.after(f1))
    throw InternalError("generator supports are not disjoint");

  PermutationFamily family;
  family.k = k;
  family.perms.reserve(static_cast<std::size_t>(k));
  Permutation fp(k);
  for (int i = 1; i <= k / 2; ++i) {
    fp = f1.after(fp);  // fp = f1^i
    family.perms.push_back(fp);
  }
  Permutation fq(k);
  for (int i = 1; i <= k / 2; ++i) {
    family.perms.push_back(g1.after(fq));  // g1 f1^{i-1}
    fq = f1.after(fq);
  }

  for (std::size_t i = 0; i < family.perms.size(); ++i) {
    for (std::size_t j = i + 1; j < family.perms.size(); ++j) {
      if (family.perms[i] == family.perms[j])
        throw DistinctnessError("permutations v_" + std::to_string(i + 1) + " and v_" +
                                std::to_string(j + 1) + " coincide; k=" +
                                std::to_string(k) + " is unsupported");
    }
  }

  // Residue classes mod 4 are preserved: odd -> odd, 2 -> 2, 0 fixed.
  for (const Permutation& v : family.perms) {
    for (int i = 1; i <= k; ++i) {
      const int image = v.apply(i);
      const bool ok = (i % 2 == 1)      ? (image % 2 == 1)
                      : (i % 4 == 2)    ? (image % 4 == 2)
                                        : (image == i);
      if (!ok) throw InternalError("permutation does not preserve letter classes");
    }
  }
  return family;
}

BlockSystem build_blocks(int k) {
  BlockSystem system;
  system.k = k;
  system.family = build_permutations(k);

  system.blocks.reserve(static_cast<std::size_t>(k));
  for (const Permutation& v : system.family.perms) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) letters.push_back(v.apply(j));
    system.blocks.push_back(Word::over_x(std::move(letters), k));
  }
  for (const Word& block : system.blocks) {
    std::vector<int> sorted = block.letters();
    std::sort(sorted.begin(), sorted.end());
    for (int j = 1; j <= k; ++j) {
      if (sorted[static_cast<std::size_t>(j - 1)] != j)
        throw InternalError("block is not a permutation word");
    }
    if (block.letter(block.size() - 1) != k)
      throw InternalError("block does not end in x_k");
  }

  // Minimal t with C(x_1..x_{k-1}) a left factor of Z_t, found by scanning.
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(k - 1));
  for (int p = 1; p < k; ++p) prefix.push_back(ruler(p));
  Word zt;
  for (int cand = 1; cand <= 20; ++cand) {
    const ZiminWord z = zimin(cand);
    if (z.word.size() < prefix.size()) continue;
    if (std::equal(prefix.begin(), prefix.end(), z.word.letters().begin())) {
      system.t = cand;
      zt = z.word;
      break;
    }
  }
  if (system.t == 0) throw InternalError("no Zimin rank admits the C prefix");

  system.c_table.reserve(static_cast<std::size_t>(k));
  for (int p = 1; p < k; ++p) system.c_table.push_back(Word::over_xi({ruler(p)}));
  std::vector<int> tail(zt.letters().begin() + (k - 1), zt.letters().end());  // Z'
  tail.push_back(system.t + 1);
  system.c_table.push_back(Word::over_xi(std::move(tail)));

  // C(a_i) = Z_t s_{t+1} must hold for every block.
  std::vector<int> expected_letters = zt.letters();
  expected_letters.push_back(system.t + 1);
  const Word expected = Word::over_xi(std::move(expected_letters));
  for (std::size_t i = 0; i < system.blocks.size(); ++i) {
    if (c_map(system, system.blocks[i]) != expected)
      throw InternalError("C(a_" + std::to_string(i + 1) + ") != Z_t s_{t+1}");
  }
  return system;
}

Word apply_phi0(const BlockSystem& system, const Word& w) {
  if (w.empty()) throw DomainError("phi_0 is defined on nonempty words");
  std::vector<int> letters;
  letters.reserve(w.size() * static_cast<std::size_t>(system.k));
  for (int letter : w.letters()) {
    if (letter < 1 || letter > system.k)
      throw DomainError("letter index " + std::to_string(letter) + " outside 1.." +
                        std::to_string(system.k));
    const auto& block = system.blocks[static_cast<std::size_t>(letter - 1)].letters();
    letters.insert(letters.end(), block.begin(), block.end());
  }
  return Word::over_x(std::move(letters), system.k);
}

JWord j_word(const BlockSystem& system, int m, std::size_t max_length) {
  if (m < 1) throw DomainError("iteration count m must be >= 1");
  std::size_t length = 1;
  for (int i = 0; i < m; ++i) {
    if (length > max_length / static_cast<std::size_t>(system.k))
      throw GuardError("k^m = " + std::to_string(system.k) + "^" + std::to_string(m) +
                       " exceeds the length guard " + std::to_string(max_length));
    length *= static_cast<std::size_t>(system.k);
  }
  Word word = system.blocks[0];  // J_1 = phi_0(x_1) = a_1
  for (int i = 2; i <= m; ++i) word = apply_phi0(system, word);
  if (word.size() != length) throw InternalError("J_m length is not k^m");
  return JWord{m, std::move(word), system};
}

Word c_map(const BlockSystem& system, const Word& w) {
  if (w.empty()) throw DomainError("C is defined on nonempty words");
  std::vector<int> letters;
  letters.reserve(w.size() + system.c_table.back().size());
  for (int letter : w.letters()) {
    if (letter < 1 || letter > system.k)
      throw DomainError("letter index " + std::to_string(letter) + " outside 1.." +
                        std::to_string(system.k));
    const auto& image = system.c_table[static_cast<std::size_t>(letter - 1)].letters();
    letters.insert(letters.end(), image.begin(), image.end());
  }
  return Word::over_xi(std::move(letters));
}

}  // namespace pav
