#pragma once

#include <random>
#include <string>
#include <vector>

#include "seedkit/seed.hpp"

namespace fixtures {

using seedkit::Entry;
using seedkit::ExtMatrix;
using seedkit::Seed;
using seedkit::VarId;
using Rows = std::vector<std::vector<Entry>>;

inline Seed quiver(const Rows& b) {
  auto m = ExtMatrix::square(b);
  return seedkit::new_initial_seed(m.rows(), std::vector<bool>(m.n(), false), m);
}

// Exchangeable x1..xn, frozen y1..ym; rows are n x (n+m).
inline Seed framed(const Rows& b, std::size_t n) {
  std::vector<VarId> rows, cols;
  for (std::size_t i = 0; i < n; ++i) rows.emplace_back("x" + std::to_string(i + 1));
  cols = rows;
  for (std::size_t j = n; j < b.at(0).size(); ++j) cols.emplace_back("y" + std::to_string(j - n + 1));
  std::vector<bool> fr(cols.size(), false);
  for (std::size_t j = n; j < cols.size(); ++j) fr[j] = true;
  return seedkit::new_initial_seed(cols, fr, ExtMatrix(rows, cols, b));
}

inline Seed a2() { return quiver({{0, 1}, {-1, 0}}); }
inline Seed a3() { return quiver({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }
inline Seed b2() { return quiver({{0, 2}, {-1, 0}}); }
inline Seed markov() { return quiver({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}); }

// x1 -> [x2] <- x3, x2 frozen
inline Seed into_frozen() {
  return seedkit::new_initial_seed({"x1", "x2", "x3"}, {false, true, false},
                                   ExtMatrix({"x1", "x3"}, {"x1", "x3", "x2"}, {{0, 0, 1}, {0, 0, 1}}));
}

// x1 -> [x2] -> x3, x2 frozen
inline Seed through_frozen() {
  return seedkit::new_initial_seed({"x1", "x2", "x3"}, {false, true, false},
                                   ExtMatrix({"x1", "x3"}, {"x1", "x3", "x2"}, {{0, 0, 1}, {0, 0, -1}}));
}

// Random sign-skew-symmetric extended matrix, entries in [-bound, bound].
inline Rows random_sss_rows(std::mt19937& rng, std::size_t n, std::size_t m, int bound = 3, double density = 0.6) {
  std::uniform_int_distribution<int> mag(1, bound), fr(-bound, bound);
  std::bernoulli_distribution coin(0.5), present(density);
  Rows e(n, std::vector<Entry>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!present(rng)) continue;
      int s = coin(rng) ? 1 : -1;
      e[i][j] = s * mag(rng);
      e[j][i] = -s * mag(rng);
    }
    for (std::size_t j = n; j < n + m; ++j) e[i][j] = fr(rng);
  }
  return e;
}

// Random skew-symmetric extended matrix (a quiver with frozen vertices).
inline Rows random_quiver_rows(std::mt19937& rng, std::size_t n, std::size_t m, int bound = 2,
                               double density = 0.6) {
  std::uniform_int_distribution<int> mag(1, bound), fr(-bound, bound);
  std::bernoulli_distribution coin(0.5), present(density);
  Rows e(n, std::vector<Entry>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!present(rng)) continue;
      int v = (coin(rng) ? 1 : -1) * mag(rng);
      e[i][j] = v;
      e[j][i] = -v;
    }
    for (std::size_t j = n; j < n + m; ++j) e[i][j] = present(rng) ? fr(rng) : 0;
  }
  return e;
}

inline Seed kronecker() { return quiver({{0, 2}, {-2, 0}}); }
inline Seed affine_a2() { return quiver({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}); }
inline Seed a2_framed() { return framed({{0, 1, 1, 0}, {-1, 0, 0, -1}}, 2); }
inline Seed b2_framed() { return framed({{0, 2, 1}, {-1, 0, -1}}, 2); }
inline Seed trivial2() {
  return seedkit::new_initial_seed({"y1", "y2"}, {true, true}, ExtMatrix({}, {"y1", "y2"}, {}));
}

struct Named {
  std::string name;
  Seed seed;
};

// Fixed corpus used by property checks.
inline std::vector<Named> corpus() {
  return {{"A2", a2()},
          {"A3", a3()},
          {"B2", b2()},
          {"Markov", markov()},
          {"Kronecker", kronecker()},
          {"affineA2", affine_a2()},
          {"into_frozen", into_frozen()},
          {"through_frozen", through_frozen()},
          {"A2_framed", a2_framed()},
          {"B2_framed", b2_framed()},
          {"A3_framed", framed({{0, 1, 0, 1}, {-1, 0, 1, 0}, {0, -1, 0, -1}}, 3)},
          {"trivial2", trivial2()}};
}

}  // namespace fixtures
