#ifndef LEFKIT_MONOMIAL_IDEAL_HPP
#define LEFKIT_MONOMIAL_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "lefkit/ring.hpp"

namespace lefkit {

/// A monomial ideal stored by its unique minimal generating set, kept in
/// degrevlex descending order. The zero ideal has no generators; the unit
/// ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& min_gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.back().is_one(); }
  /// Largest degree of a minimal generator; 0 for the zero and unit ideals.
  int max_gen_degree() const;

  bool contains(const Monomial& m) const;
  bool operator==(const MonomialIdeal& o) const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Removes redundant generators and sorts; same normal form as the
/// MonomialIdeal constructor.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// All monomials of the given degree in nvars variables, degrevlex descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

struct StabilityWitness {
  Monomial generator;
  int from_var;  // i, the variable moved in
  int to_var;    // j, the variable divided out; i < j
};

struct StabilityCheck {
  bool stable = false;
  std::optional<StabilityWitness> witness;
};

/// Strong stability: for every minimal generator t and every xj dividing t,
/// xi * t / xj lies in the ideal for all i < j. Generators are scanned in the
/// stored descending order, j then i ascending; the first failure is reported.
StabilityCheck is_strongly_stable(const MonomialIdeal& I);

struct AlmostRevlexWitness {
  Monomial generator;
  Monomial missing;  // same degree, degrevlex larger, not in the ideal
};

struct AlmostRevlexCheck {
  bool almost_revlex = false;
  std::optional<AlmostRevlexWitness> witness;
};

/// Almost revlex: for every minimal generator t, every monomial of the same
/// degree that is degrevlex larger than t already lies in the ideal.
/// Generators are scanned ascending and candidates descending, so the witness
/// pairs the smallest failing generator with the largest missing monomial.
AlmostRevlexCheck is_almost_revlex(const MonomialIdeal& I);

/// dim_Q (S/I)_d, the number of degree-d monomials outside I.
long long hilbert_function(const MonomialIdeal& I, int degree);

struct RegularityCertificate {
  enum class Source { kStableMaxDegree, kViaGin };
  int value = 0;
  Source source = Source::kStableMaxDegree;
};

/// Castelnuovo-Mumford regularity of a strongly stable ideal: the largest
/// minimal generator degree. Throws PreconditionError when I is not strongly
/// stable.
RegularityCertificate regularity_stable(const MonomialIdeal& I);

/// I + m^(reg+1), the Artinian closure at the given regularity.
MonomialIdeal artinian_closure(const MonomialIdeal& I, int reg);

/// I + <x_var^power>.
MonomialIdeal add_variable_power(const MonomialIdeal& I, int var, int power);

/// Restriction to the first l-count variables: keeps the generators free of
/// the last count variables and drops those variables from the ring. Requires
/// a strongly stable input when count > 0.
MonomialIdeal restrict_drop_last(const MonomialIdeal& I, int count);

std::string format_monomial_ideal(const MonomialIdeal& I);

}  // namespace lefkit

#endif
