#ifndef LEFKIT_GIN_HPP
#define LEFKIT_GIN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lefkit/groebner.hpp"
#include "lefkit/monomial_ideal.hpp"
#include "lefkit/ring.hpp"

namespace lefkit {

struct GinOptions {
  std::uint64_t seed = 0;
  /// Maximum number of random coordinate changes; each round consumes two.
  int trial_budget = 5;
  /// Matrix entries are sampled uniformly from [-bound, bound]. The bound is
  /// squared after every disagreeing round.
  mpz_class bound = 1000000;
  /// Worker threads for the independent trials of a round.
  int workers = 1;
};

struct GinResult {
  MonomialIdeal ideal;
  int trials_used = 0;
  std::uint64_t seed = 0;
  /// Set when the result passed the strong stability check; always true for
  /// results returned without error.
  bool certified_stable = false;
  /// Bound in force for the agreeing round.
  mpz_class final_bound;
  /// What the acceptance of the result rests on. The agreement of independent
  /// trials is a probabilistic certificate, not a proof.
  std::string certificate;
};

/// Raised when the trial budget is exhausted without two agreeing stable
/// candidates; carries every distinct candidate seen.
struct GinFailureError : Error {
  GinFailureError(const std::string& msg, std::vector<MonomialIdeal> cands)
      : Error(msg), candidates(std::move(cands)) {}
  std::vector<MonomialIdeal> candidates;
};

/// Uniform random integer in [-bound, bound].
mpz_class uniform_mpz(std::mt19937_64& rng, const mpz_class& bound);

/// Dense random change of coordinates with entries in [-bound, bound],
/// resampled until invertible.
LinearChange random_linear_change(const RingPtr& ring, std::uint64_t seed,
                                  const mpz_class& bound);

/// The initial ideal of g(I) for one explicit change of coordinates.
MonomialIdeal initial_ideal_after_change(const Ideal& I, const LinearChange& g);

/// Generic initial ideal under degrevlex, computed by randomized agreement:
/// rounds of two independent trials, accepted when both agree and the result
/// is strongly stable, with the coefficient bound squared after each
/// disagreeing round. Deterministic for a fixed seed.
GinResult rgin(const Ideal& I, const GinOptions& options = {});

/// Strong stability is the Borel fixed point property in characteristic 0.
bool is_borel_fixed_point(const MonomialIdeal& I);

/// Castelnuovo-Mumford regularity of I, read off the generic initial ideal.
RegularityCertificate regularity_via_gin(const Ideal& I, const GinOptions& options = {});

}  // namespace lefkit

#endif
