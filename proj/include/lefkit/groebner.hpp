#ifndef LEFKIT_GROEBNER_HPP
#define LEFKIT_GROEBNER_HPP

#include <optional>
#include <vector>

#include "lefkit/monomial_ideal.hpp"
#include "lefkit/ring.hpp"

namespace lefkit {

/// A homogeneous ideal given by generators. Zero generators are dropped;
/// non-homogeneous generators are rejected.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  RingPtr ring;
  /// Monic, sorted by leading monomial ascending; empty for the zero ideal.
  std::vector<Polynomial> elements;
  bool reduced = false;
  /// Degree cap used for a truncated run; the basis is then only trustworthy
  /// for leading terms up to this degree.
  std::optional<int> truncated_at;
};

/// S-polynomial with both inputs scaled monic.
Polynomial spolynomial(const Polynomial& f, const Polynomial& g);

/// Full remainder of f under the reducers. Among all reducers whose leading
/// monomial divides the current leading term, the one with the degrevlex
/// smallest leading monomial is used, which makes the result deterministic
/// for any list.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reducers);

/// Buchberger completion with the normal pair selection (smallest lcm degree
/// first), the coprimality criterion and the Gebauer-Moeller update, followed
/// by interreduction to the unique reduced basis.
GroebnerBasis buchberger(const Ideal& I);

/// Same completion but S-pairs whose lcm degree exceeds the cap are discarded.
/// For a homogeneous ideal the leading terms are complete through the cap.
GroebnerBasis buchberger_truncated(const Ideal& I, int max_pair_degree);

MonomialIdeal leading_term_ideal(const GroebnerBasis& basis);

/// dim_Q (S/I)_d via a degree-truncated basis.
long long hilbert_function_ideal(const Ideal& I, int degree);

}  // namespace lefkit

#endif
