#pragma once

#include <cstdint>
#include <random>

#include "fockcalc/symbol.hpp"
#include "fockcalc/toeplitz.hpp"

namespace fock {

inline constexpr std::uint64_t kDefaultSeed = 0xF0CC;

/// Shape of random holomorphic test symbols: a sum of blocks, each a random
/// polynomial times an optional exp(z.c).
struct RandomHoloSpec {
  int max_degree = 3;
  int max_terms = 3;  // monomials per block polynomial
  int max_blocks = 1;
  double exp_probability = 0.5;
  double param_bound = 1.0;  // Euclidean bound on c
};

/// Deterministic sampler. Floating draws are built from raw 64-bit output, so
/// a seed yields the same symbols on every platform.
class SymbolSampler {
 public:
  explicit SymbolSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform();                  // [0, 1)
  int integer(int lo, int hi);       // inclusive
  Complex unit_disc();
  CVec ball(int n, double radius);   // uniform-ish in the Euclidean ball

  /// Nonzero polynomial with 1..max_terms monomials of degree <= max_degree.
  HoloSymbol polynomial(int n, int max_degree, int max_terms);
  /// Nonzero poly x exp symbol.
  HoloSymbol holo(int n, const RandomHoloSpec& spec);
  PluriharmonicPair pluriharmonic(int n, const RandomHoloSpec& spec);

 private:
  std::mt19937_64 rng_;
};

}  // namespace fock
