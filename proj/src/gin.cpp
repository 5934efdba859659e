#include "lefkit/gin.hpp"

#include <algorithm>
#include <utility>

#include "lefkit/parallel.hpp"
#include "lefkit/seeds.hpp"

namespace lefkit {

mpz_class uniform_mpz(std::mt19937_64& rng, const mpz_class& bound) {
  if (bound < 0) throw PreconditionError("bound must be nonnegative");
  mpz_class range = 2 * bound + 1;
  // 64 spare bits keep the modulo bias below 2^-64.
  std::size_t bits = mpz_sizeinbase(range.get_mpz_t(), 2) + 64;
  std::size_t words = (bits + 63) / 64;
  mpz_class acc = 0;
  for (std::size_t w = 0; w < words; ++w) {
    acc <<= 64;
    acc += mpz_class(static_cast<unsigned long>(rng()));
  }
  acc %= range;
  return acc - bound;
}

LinearChange random_linear_change(const RingPtr& ring, std::uint64_t seed,
                                  const mpz_class& bound) {
  if (bound < 1) throw PreconditionError("bound must be at least 1");
  std::mt19937_64 rng = make_rng(seed);
  int n = ring->nvars();
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = mpq_class(uniform_mpz(rng, bound));
    }
    if (determinant(m) != 0) return LinearChange(ring, std::move(m));
  }
  throw GenerationError("could not sample an invertible matrix");
}

MonomialIdeal initial_ideal_after_change(const Ideal& I, const LinearChange& g) {
  require_same_ring(I.ring(), g.ring());
  std::vector<Polynomial> moved;
  moved.reserve(I.generators().size());
  for (const Polynomial& f : I.generators()) {
    moved.push_back(apply_linear_change(f, g));
  }
  return leading_term_ideal(buchberger(Ideal(I.ring(), std::move(moved))));
}

bool is_borel_fixed_point(const MonomialIdeal& I) {
  return is_strongly_stable(I).stable;
}

GinResult rgin(const Ideal& I, const GinOptions& options) {
  if (options.trial_budget < 2) {
    throw PreconditionError("trial budget must allow at least one round of two");
  }
  if (options.bound < 1) throw PreconditionError("bound must be at least 1");

  GinResult result{MonomialIdeal::zero(I.ring()), 0, options.seed, false,
                   options.bound, {}};
  if (I.is_zero()) {
    result.ideal = MonomialIdeal::zero(I.ring());
    result.certified_stable = true;
    result.certificate = "zero ideal, no randomization needed";
    return result;
  }

  std::vector<MonomialIdeal> seen;
  auto remember = [&seen](const MonomialIdeal& c) {
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
  };

  mpz_class bound = options.bound;
  int trials = 0;
  while (trials + 2 <= options.trial_budget) {
    std::vector<MonomialIdeal> candidate(2, MonomialIdeal::zero(I.ring()));
    par::for_each_index(2, options.workers, [&](std::size_t k) {
      std::uint64_t trial_seed =
          derive_seed(options.seed, "gin-trial", static_cast<std::uint64_t>(trials + k));
      LinearChange g = random_linear_change(I.ring(), trial_seed, bound);
      candidate[k] = initial_ideal_after_change(I, g);
    });
    trials += 2;
    if (candidate[0] == candidate[1] && is_strongly_stable(candidate[0]).stable) {
      result.ideal = candidate[0];
      result.trials_used = trials;
      result.certified_stable = true;
      result.final_bound = bound;
      result.certificate =
          "two independent trials agree and the result is Borel fixed; "
          "acceptance is probabilistic";
      return result;
    }
    remember(candidate[0]);
    remember(candidate[1]);
    bound *= bound;
  }
  throw GinFailureError(
      "generic initial ideal: no two trials agreed on a strongly stable "
      "candidate within the budget of " +
          std::to_string(options.trial_budget) + " trials",
      std::move(seen));
}

RegularityCertificate regularity_via_gin(const Ideal& I, const GinOptions& options) {
  GinResult g = rgin(I, options);
  RegularityCertificate cert = regularity_stable(g.ideal);
  cert.source = RegularityCertificate::Source::kViaGin;
  return cert;
}

}  // namespace lefkit
