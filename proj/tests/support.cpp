#include "support.hpp"

#include "apollonius/duality.hpp"
#include "apollonius/errors.hpp"

namespace apollo::testing {

std::vector<Configuration> seeded_ccc(int n) {
  std::vector<Configuration> out;
  for (int seed = 1; seed <= n; ++seed) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    for (;;) {
      Configuration cfg = random_ccc(rng);
      try {
        const Radii radii = choose_radii(cfg);
        for (int i = 1; i <= 3; ++i) theta(cfg, radii, i);
      } catch (const MathError& e) {
        if (e.kind() == ErrorKind::DegenerateMerge) continue;
        throw;
      }
      out.push_back(std::move(cfg));
      break;
    }
  }
  return out;
}

std::vector<Configuration> seeded_cpp(int n) {
  std::vector<Configuration> out;
  for (int seed = 1; seed <= n; ++seed) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    out.push_back(random_cpp(rng));
  }
  return out;
}

}  // namespace apollo::testing
