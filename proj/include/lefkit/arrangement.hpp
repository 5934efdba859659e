#ifndef LEFKIT_ARRANGEMENT_HPP
#define LEFKIT_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefkit/gin.hpp"
#include "lefkit/groebner.hpp"
#include "lefkit/ring.hpp"

namespace lefkit {

/// A hyperplane arrangement given by nonzero degree-1 forms, pairwise
/// non-proportional. Centrality (no constant terms) is derived and is a
/// precondition of most operations downstream.
class Arrangement {
 public:
  Arrangement(RingPtr ring, std::vector<Polynomial> forms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& forms() const { return forms_; }
  int size() const { return static_cast<int>(forms_.size()); }
  bool is_central() const { return central_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> forms_;
  bool central_ = false;
};

/// Q(A), the product of the forms.
Polynomial defining_polynomial(const Arrangement& a);

/// The ideal generated by Q(A) and all of its partial derivatives; zero
/// partials are dropped, redundancy of Q itself is left to minimalization.
Ideal jacobian_ideal(const Arrangement& a);

struct FreenessVerdict {
  bool free = false;
  /// The ladder lambda_1 < ... < lambda_{n-1}; empty when rgin = S.
  std::vector<int> lambda;
  std::optional<Monomial> violating_generator;
  std::string reason;
  MonomialIdeal gin;
};

/// Freeness test through the generic initial ideal of the Jacobian ideal:
/// free exactly when rgin is the whole ring or matches the two-variable
/// staircase x1^(n-1), x1^(n-2)*x2^l1, ..., x2^l(n-1) with ladder gaps 1 or 2.
FreenessVerdict is_free(const Arrangement& a, const GinOptions& options = {});

struct ShapeCheck {
  bool ok = false;
  bool unit_branch = false;          // rgin = S
  bool has_x1_power = false;         // x1^(n-1) is a minimal generator
  bool has_pure_x2_power = false;    // some x2^d is a minimal generator
  /// Minimal generators supported only on x3..xl; must be empty.
  std::vector<Monomial> tail_only_generators;
  MonomialIdeal gin;
};

/// Structural facts about rgin(J(A)) that hold for every central
/// arrangement; a failure indicates an implementation bug.
ShapeCheck rgin_shape_check(const Arrangement& a, const GinOptions& options = {});

struct ConjectureReport {
  bool holds = false;
  /// True when rgin = S and the statement is empty.
  bool vacuous = false;
  /// Least d with x2^d in rgin(J(A)); 0 in the vacuous case.
  int d0 = 0;
  /// Minimal generators involving x3 of degree below d0.
  std::vector<Monomial> offenders;
  MonomialIdeal gin;
};

/// The degree bound conjecture: every minimal generator of rgin(J(A))
/// involving the third variable has degree at least d0.
ConjectureReport check_conjecture(const Arrangement& a, const GinOptions& options = {});

/// n pairwise non-proportional integer forms with entries in
/// [-coeff_bound, coeff_bound], deterministic per seed.
Arrangement random_central_arrangement(const RingPtr& ring, int n,
                                       std::uint64_t seed, long coeff_bound);

/// Reads the arrangement file format: comment lines start with '#', the first
/// content line is a header `vars: x, y, z` (form lines follow, one per line)
/// or `matrix: x, y, z` / `matrix: 3` (rows of l rational coefficients
/// follow).
Arrangement parse_arrangement_file(const std::string& content);

/// Writes the form-based file format; comment lines are emitted first.
std::string format_arrangement_file(const Arrangement& a,
                                    const std::vector<std::string>& comments);

struct ConjectureSearchParams {
  int l = 3;
  int n_min = 1;
  int n_max = 6;
  int count = 100;
  std::uint64_t seed = 0;
  long coeff_bound = 5;
  int workers = 1;
  /// Options template for the per-sample rgin; its seed field is ignored.
  GinOptions gin;
};

struct SampleOutcome {
  enum class Kind { kHolds, kVacuous, kCounterexample, kGinFailure };
  Kind kind = Kind::kHolds;
  int index = 0;
  int n = 0;
  std::uint64_t arrangement_seed = 0;
  std::uint64_t gin_seed = 0;
  std::optional<ConjectureReport> report;  // absent on gin failure
};

struct ConjectureSearchSummary {
  int holds = 0;
  int vacuous = 0;
  int counterexamples = 0;
  int gin_failures = 0;
  std::vector<SampleOutcome> outcomes;  // by sample index
};

/// Seeded batch run of check_conjecture over random central arrangements.
/// Per-sample gin failures are counted, not fatal. The outcome list does not
/// depend on the worker count.
ConjectureSearchSummary run_conjecture_search(const ConjectureSearchParams& params);

/// Reconstructs sample i of a search, for replaying a reported outcome.
Arrangement conjecture_sample(const ConjectureSearchParams& params, int index);

}  // namespace lefkit

#endif
