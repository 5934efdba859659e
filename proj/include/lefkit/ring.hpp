#ifndef LEFKIT_RING_HPP
#define LEFKIT_RING_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lefkit/errors.hpp"

namespace lefkit {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// A polynomial ring Q[x1,...,xl] with the standard grading. The declaration
/// order of the variables fixes the chain x1 > x2 > ... > xl used by the
/// degrevlex order; every object downstream carries a pointer to its ring.
class RingContext {
 public:
  static constexpr int kMaxVars = 12;

  /// Ring with explicit variable names. Names must be nonempty, distinct,
  /// start with a letter and contain only letters, digits and underscores.
  static RingPtr create(std::vector<std::string> names);

  /// Ring with default names x1..xl.
  static RingPtr create(int nvars);

  /// Ring named x,y,z,w; nvars must be between 1 and 4.
  static RingPtr create_xyzw(int nvars);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int i) const;
  const std::vector<std::string>& var_names() const { return names_; }
  std::optional<int> var_index(std::string_view name) const;
  bool same_as(const RingContext& other) const { return names_ == other.names_; }

 private:
  explicit RingContext(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// An exponent vector with a cached total degree. The number of variables is
/// fixed at construction; all exponents are nonnegative.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(int nvars);
  Monomial(int nvars, const std::vector<int>& exps);

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int exp(int i) const;
  Monomial with_exp(int i, int value) const;
  std::vector<int> exponents() const;

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& m) const;
  bool is_coprime_to(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// Exact quotient *this / m; m must divide *this.
  Monomial quotient(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exps_ == o.exps_;
  }
  std::size_t hash() const;

 private:
  std::array<std::int16_t, RingContext::kMaxVars> exps_{};
  std::int16_t nvars_ = 0;
  std::int32_t degree_ = 0;
  void check_index(int i) const;
  friend std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b);
};

/// Degree reverse lexicographic comparison: larger total degree wins, and on
/// ties the monomial whose exponent difference has a negative last nonzero
/// entry is the larger one.
std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b);

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_degrevlex(a, b) > 0;
  }
};

struct DegRevLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_degrevlex(a, b) < 0;
  }
};

struct Term {
  Monomial mono;
  mpq_class coeff;
  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

/// Sparse polynomial over Q. Terms are kept strictly decreasing under
/// degrevlex with no zero coefficients, so the leading term is terms().front().
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, mpq_class c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial term(RingPtr ring, Monomial m, mpq_class c);
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Terms must already be sorted strictly decreasing with nonzero
  /// coefficients; only cheap checks are performed.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Total degree; the zero polynomial reports -1.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const mpq_class& leading_coeff() const { return leading_term().coeff; }
  /// Polynomial minus its leading term.
  Polynomial tail() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpq_class& c) const;
  /// c * m * (*this); keeps the term order without re-sorting.
  Polynomial times_term(const Monomial& m, const mpq_class& c) const;
  Polynomial monic() const;
  Polynomial partial_derivative(int var) const;

  bool operator==(const Polynomial& o) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// An invertible linear change of coordinates xi -> sum_j m[i][j] xj. The
/// matrix is validated to be square of size nvars and nonsingular.
class LinearChange {
 public:
  LinearChange(RingPtr ring, std::vector<std::vector<mpq_class>> matrix);

  static LinearChange identity(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const mpq_class& entry(int i, int j) const;
  const std::vector<std::vector<mpq_class>>& matrix() const { return matrix_; }
  LinearChange inverse() const;

 private:
  RingPtr ring_;
  std::vector<std::vector<mpq_class>> matrix_;
};

/// Determinant of a square rational matrix.
mpq_class determinant(const std::vector<std::vector<mpq_class>>& m);

/// Applies the substitution xi -> sum_j g[i][j] xj to f. Homogeneity and
/// degree are preserved.
Polynomial apply_linear_change(const Polynomial& f, const LinearChange& g);

}  // namespace lefkit

#endif
