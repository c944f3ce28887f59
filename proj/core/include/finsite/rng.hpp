#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace finsite {

// mt19937_64 with a plain modulo draw.  The standard distributions are
// implementation-defined, which would break byte-stable reports across
// library versions; the draw below is fully pinned.  The modulo bias is
// irrelevant for the tiny ranges used here.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform value in [0, n).  n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // Uniform value in [lo, hi] inclusive.
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  // Random function table [0, domain) -> [0, codomain).
  std::vector<int> map_table(int domain, int codomain) {
    std::vector<int> t(domain);
    for (int i = 0; i < domain; ++i) t[i] = below(codomain);
    return t;
  }

  // Random surjective table; codomain must not exceed domain.  First hits
  // every codomain element once, then fills the rest and shuffles.
  std::vector<int> surjection_table(int domain, int codomain) {
    std::vector<int> t(domain);
    for (int i = 0; i < codomain; ++i) t[i] = i;
    for (int i = codomain; i < domain; ++i) t[i] = below(codomain);
    for (int i = domain - 1; i > 0; --i) std::swap(t[i], t[below(i + 1)]);
    return t;
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace finsite
