#ifndef LEFKIT_LEFSCHETZ_HPP
#define LEFKIT_LEFSCHETZ_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefkit/gin.hpp"
#include "lefkit/monomial_ideal.hpp"

namespace lefkit {

/// Hilbert functions of the generic hyperplane sections of S/I, stored as
/// rows i = 1..l over the columns d = 0..reg+1. Row i is the Hilbert function
/// of the quotient cut down to i variables; row l is HF(S/I, -). Entries for
/// d > reg+1 follow from the stabilized recurrence
/// M(i,d) = M(i,d-1) + M(i-1,d) and are reconstructed on demand.
class SectionalMatrix {
 public:
  SectionalMatrix(RingPtr ring, int reg, bool proper,
                  std::vector<std::vector<long long>> rows);

  const RingPtr& ring() const { return ring_; }
  int nvars() const { return ring_->nvars(); }
  int reg() const { return reg_; }
  /// False exactly when I = S, where even the virtual row 0 vanishes.
  bool proper() const { return proper_; }
  const std::vector<std::vector<long long>>& rows() const { return rows_; }

  /// M(i, d) for 0 <= i <= l and d >= 0. Row 0 is the virtual row (1,0,0,...)
  /// of a proper quotient; columns beyond reg+1 use the recurrence.
  long long entry(int i, int d) const;

 private:
  RingPtr ring_;
  int reg_;
  bool proper_;
  std::vector<std::vector<long long>> rows_;
};

/// Sectional matrix of S/I for a strongly stable I, by restriction counting.
SectionalMatrix sectional_matrix(const MonomialIdeal& stable);

/// Sectional matrix of S/I for arbitrary homogeneous I, through rgin.
SectionalMatrix sectional_matrix(const Ideal& I, const GinOptions& options = {});

std::string format_sectional_matrix(const SectionalMatrix& m);

struct GrowthViolation {
  int i;
  int d;
  long long difference;  // M(i,d) - M(i,d-1)
  long long above;       // M(i-1,d)
};

struct GrowthCheck {
  bool inequality_ok = false;
  /// Cells (i,d) with M(i,d) - M(i,d-1) = M(i-1,d), for 2 <= i <= l,
  /// 1 <= d <= reg+1.
  std::vector<std::pair<int, int>> tight;
  /// Equality at (i, d) must coincide with the absence of degree-d minimal
  /// generators divisible by x_i in the restriction to K[x_1..x_i];
  /// generators involving later variables do not survive the section. False
  /// would contradict the growth theorem.
  bool generator_cross_check_ok = false;
  std::optional<GrowthViolation> violation;
};

GrowthCheck check_growth_inequality(const SectionalMatrix& m,
                                    const MonomialIdeal& stable);

/// One failed instance of the numeric identity behind a Lefschetz decision:
/// multiplication by the level's power of a variable from degree_from to
/// degree_to has actual Hilbert value lhs where the full-rank value is rhs.
struct LefschetzWitness {
  int level = 0;        // j, linear forms already divided out
  int degree_from = 0;  // source degree d (may be -1 in the s = 1 case)
  int degree_to = 0;    // target degree d + s
  long long lhs = 0;
  long long rhs = 0;
};

struct LevelCheck {
  bool holds = false;
  std::optional<LefschetzWitness> witness;
};

/// k-WLP on a strongly stable ideal, decided through the sectional matrix
/// identity at every level j < k and every degree d <= reg. Levels, then
/// degrees, are scanned ascending; the first failure is the witness.
LevelCheck has_k_wlp(const MonomialIdeal& stable, int k);

/// k-SLP on a strongly stable ideal: the Artinian closure is restricted level
/// by level and each power of the last remaining variable is checked to have
/// full rank, expressed in exact Hilbert values. Scan order is level, source
/// degree, then shift.
LevelCheck has_k_slp(const MonomialIdeal& stable, int k);

LevelCheck has_k_wlp(const Ideal& I, int k, const GinOptions& options = {});
LevelCheck has_k_slp(const Ideal& I, int k, const GinOptions& options = {});

bool is_unimodal(const std::vector<long long>& seq);

/// Unimodal positive sequence whose tail values, after the first maximum, all
/// reappear among the values up to that maximum. Trailing zeros are ignored.
/// Non-unimodal input is a precondition error.
bool is_quasi_symmetric(const std::vector<long long>& seq);

struct LefschetzReport {
  MonomialIdeal gin;
  RegularityCertificate regularity;
  SectionalMatrix matrix;
  int k_wlp_max = 0;
  int k_slp_max = 0;
  std::optional<LefschetzWitness> wlp_obstruction;
  std::optional<LefschetzWitness> slp_obstruction;
  /// Variable names x_l, x_{l-1}, ... certifying the maximal levels on gin.
  std::vector<std::string> wlp_elements;
  std::vector<std::string> slp_elements;
};

LefschetzReport analyze_lefschetz(const MonomialIdeal& stable);
LefschetzReport analyze_lefschetz(const Ideal& I, const GinOptions& options = {});

struct AlmostRevlexConclusion {
  bool hypothesis_holds = false;
  MonomialIdeal gin;
};

/// The almost revlex conclusion: when S/I has the l-SLP and the sectional
/// rows l-j for j = 0..l-4 are quasi-symmetric (vacuous for l <= 3), the
/// generic initial ideal is almost revlex. A hypothesis that holds while the
/// scan fails is an invariant violation and throws logic_error.
AlmostRevlexConclusion almost_revlex_conclusion(const Ideal& I,
                                                const GinOptions& options = {});
AlmostRevlexConclusion almost_revlex_conclusion(const MonomialIdeal& stable);

}  // namespace lefkit

#endif
