#include "lefkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace lefkit {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

RingPtr RingContext::create(std::vector<std::string> names) {
  int l = static_cast<int>(names.size());
  if (l < 1 || l > kMaxVars) {
    throw DimensionError("number of variables must be between 1 and " +
                         std::to_string(kMaxVars) + ", got " + std::to_string(l));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_name(n)) throw Error("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
  return RingPtr(new RingContext(std::move(names)));
}

RingPtr RingContext::create(int nvars) {
  std::vector<std::string> names;
  names.reserve(nvars > 0 ? nvars : 0);
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  if (nvars < 1 || nvars > kMaxVars) {
    throw DimensionError("number of variables must be between 1 and " +
                         std::to_string(kMaxVars) + ", got " + std::to_string(nvars));
  }
  return create(std::move(names));
}

RingPtr RingContext::create_xyzw(int nvars) {
  if (nvars < 1 || nvars > 4) {
    throw DimensionError("x,y,z,w naming supports 1 to 4 variables, got " +
                         std::to_string(nvars));
  }
  static const char* kNames[] = {"x", "y", "z", "w"};
  std::vector<std::string> names(kNames, kNames + nvars);
  return create(std::move(names));
}

const std::string& RingContext::var_name(int i) const {
  if (i < 0 || i >= nvars()) {
    throw DimensionError("variable index " + std::to_string(i) +
                         " out of range for " + std::to_string(nvars()) +
                         " variables");
  }
  return names_[i];
}

std::optional<int> RingContext::var_index(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) {
    throw RingMismatchError("operands live in different polynomial rings");
  }
}

Monomial::Monomial(int nvars) {
  if (nvars < 1 || nvars > RingContext::kMaxVars) {
    throw DimensionError("monomial needs between 1 and " +
                         std::to_string(RingContext::kMaxVars) +
                         " variables, got " + std::to_string(nvars));
  }
  exps_.fill(0);
  nvars_ = static_cast<std::int16_t>(nvars);
}

Monomial::Monomial(int nvars, const std::vector<int>& exps) : Monomial(nvars) {
  if (static_cast<int>(exps.size()) != nvars) {
    throw DimensionError("exponent vector has length " +
                         std::to_string(exps.size()) + ", expected " +
                         std::to_string(nvars));
  }
  long degree = 0;
  for (int i = 0; i < nvars; ++i) {
    if (exps[i] < 0) throw Error("negative exponent");
    if (exps[i] > INT16_MAX) throw Error("exponent too large");
    exps_[i] = static_cast<std::int16_t>(exps[i]);
    degree += exps[i];
  }
  if (degree > INT32_MAX) throw Error("degree too large");
  degree_ = static_cast<std::int32_t>(degree);
}

Monomial Monomial::variable(int nvars, int i) {
  Monomial m(nvars);
  return m.with_exp(i, 1);
}

void Monomial::check_index(int i) const {
  if (i < 0 || i >= nvars_) {
    throw DimensionError("variable index " + std::to_string(i) +
                         " out of range for " + std::to_string(nvars_) +
                         " variables");
  }
}

int Monomial::exp(int i) const {
  check_index(i);
  return exps_[i];
}

Monomial Monomial::with_exp(int i, int value) const {
  check_index(i);
  if (value < 0) throw Error("negative exponent");
  if (value > INT16_MAX) throw Error("exponent too large");
  Monomial m = *this;
  m.degree_ += value - m.exps_[i];
  m.exps_[i] = static_cast<std::int16_t>(value);
  return m;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

bool Monomial::divides(const Monomial& m) const {
  if (nvars_ != m.nvars_) throw DimensionError("monomials of different dimension");
  if (degree_ > m.degree_) return false;
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] > m.exps_[i]) return false;
  }
  return true;
}

bool Monomial::is_coprime_to(const Monomial& m) const {
  if (nvars_ != m.nvars_) throw DimensionError("monomials of different dimension");
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[i] > 0 && m.exps_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (nvars_ != m.nvars_) throw DimensionError("monomials of different dimension");
  Monomial r = *this;
  for (int i = 0; i < nvars_; ++i) {
    int e = r.exps_[i] + m.exps_[i];
    if (e > INT16_MAX) throw Error("exponent too large");
    r.exps_[i] = static_cast<std::int16_t>(e);
  }
  r.degree_ += m.degree_;
  return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
  if (!m.divides(*this)) throw Error("monomial quotient is not exact");
  Monomial r = *this;
  for (int i = 0; i < nvars_; ++i) {
    r.exps_[i] = static_cast<std::int16_t>(r.exps_[i] - m.exps_[i]);
  }
  r.degree_ -= m.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionError("monomials of different dimension");
  Monomial r = a;
  std::int32_t degree = 0;
  for (int i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    degree += r.exps_[i];
  }
  r.degree_ = degree;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionError("monomials of different dimension");
  Monomial r = a;
  std::int32_t degree = 0;
  for (int i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    degree += r.exps_[i];
  }
  r.degree_ = degree;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  mix(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) mix(static_cast<std::size_t>(exps_[i]) + 0x9e);
  return h;
}

std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionError("monomials of different dimension");
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (int i = a.nvars_ - 1; i >= 0; --i) {
    int d = a.exps_[i] - b.exps_[i];
    if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(RingPtr ring, mpq_class c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial::one(p.ring_->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  int n = ring->nvars();
  return term(std::move(ring), Monomial::variable(n, i), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, mpq_class c) {
  if (m.nvars() != ring->nvars()) {
    throw DimensionError("monomial dimension does not match ring");
  }
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.nvars() != ring->nvars()) {
      throw DimensionError("monomial dimension does not match ring");
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_degrevlex(a.mono, b.mono) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff == 0) merged.pop_back();
    } else if (t.coeff != 0) {
      merged.push_back(std::move(t));
    }
  }
  Polynomial p(std::move(ring));
  p.terms_ = std::move(merged);
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.size() <= 1) return true;
  int d = terms_.front().mono.degree();
  for (const Term& t : terms_) {
    if (t.mono.degree() != d) return false;
  }
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomialError("zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  Polynomial p(ring_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
  return p;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              int sign_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = compare_degrevlex(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].mono, sign_b > 0 ? b[j].coeff : -b[j].coeff});
      ++j;
    } else {
      mpq_class c = sign_b > 0 ? mpq_class(a[i].coeff + b[j].coeff)
                               : mpq_class(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].mono, sign_b > 0 ? b[j].coeff : -b[j].coeff});
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return from_sorted_terms(ring_, merge_terms(terms_, o.terms_, +1));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return from_sorted_terms(ring_, merge_terms(terms_, o.terms_, -1));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.num_terms() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (num_terms() == 1) return o.times_term(terms_[0].mono, terms_[0].coeff);
  std::map<Monomial, mpq_class, DegRevLexGreater> acc;
  for (const Term& s : terms_) {
    for (const Term& t : o.terms_) {
      acc[s.mono * t.mono] += s.coeff * t.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, std::move(c)});
  }
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const mpq_class& c) const {
  if (m.nvars() != ring_->nvars()) {
    throw DimensionError("monomial dimension does not match ring");
  }
  if (c == 0) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw ZeroPolynomialError("cannot normalize the zero polynomial");
  mpq_class inv = 1 / leading_coeff();
  return scaled(inv);
}

Polynomial Polynomial::partial_derivative(int var) const {
  if (var < 0 || var >= ring_->nvars()) {
    throw DimensionError("variable index " + std::to_string(var) +
                         " out of range for " + std::to_string(ring_->nvars()) +
                         " variables");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    int e = t.mono.exp(var);
    if (e == 0) continue;
    out.push_back({t.mono.with_exp(var, e - 1), t.coeff * e});
  }
  // Dividing the surviving terms by one fixed variable preserves their order.
  return from_sorted_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

mpq_class determinant(const std::vector<std::vector<mpq_class>>& m) {
  std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  }
  std::vector<std::vector<mpq_class>> a = m;
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    mpq_class inv = 1 / a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      mpq_class f = a[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return det;
}

LinearChange::LinearChange(RingPtr ring, std::vector<std::vector<mpq_class>> matrix)
    : ring_(std::move(ring)), matrix_(std::move(matrix)) {
  std::size_t n = static_cast<std::size_t>(ring_->nvars());
  if (matrix_.size() != n) {
    throw DimensionError("coordinate change matrix must be " + std::to_string(n) +
                         "x" + std::to_string(n));
  }
  for (const auto& row : matrix_) {
    if (row.size() != n) {
      throw DimensionError("coordinate change matrix must be " + std::to_string(n) +
                           "x" + std::to_string(n));
    }
  }
  if (determinant(matrix_) == 0) {
    throw SingularMatrixError("coordinate change matrix is singular");
  }
}

LinearChange LinearChange::identity(RingPtr ring) {
  std::size_t n = static_cast<std::size_t>(ring->nvars());
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return LinearChange(std::move(ring), std::move(m));
}

const mpq_class& LinearChange::entry(int i, int j) const {
  int n = ring_->nvars();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw DimensionError("matrix index out of range");
  }
  return matrix_[i][j];
}

LinearChange LinearChange::inverse() const {
  std::size_t n = matrix_.size();
  std::vector<std::vector<mpq_class>> a = matrix_;
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("coordinate change matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    mpq_class pinv = 1 / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= pinv;
      inv[col][k] *= pinv;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      mpq_class f = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return LinearChange(ring_, std::move(inv));
}

namespace {

// Substitutes variables i, i+1, ... of f by the linear forms in images,
// assuming variables below i no longer occur in f. Horner in each variable
// keeps the number of polynomial multiplications linear in the degree.
Polynomial substitute_from(const Polynomial& f, int var,
                           const std::vector<Polynomial>& images) {
  int n = f.ring()->nvars();
  if (f.is_zero() || var == n) return f;
  int max_exp = 0;
  for (const Term& t : f.terms()) max_exp = std::max(max_exp, t.mono.exp(var));
  std::vector<std::vector<Term>> buckets(max_exp + 1);
  for (const Term& t : f.terms()) {
    int e = t.mono.exp(var);
    buckets[e].push_back({t.mono.with_exp(var, 0), t.coeff});
  }
  std::vector<Polynomial> parts;
  parts.reserve(buckets.size());
  for (auto& b : buckets) {
    parts.push_back(substitute_from(
        Polynomial::from_terms(f.ring(), std::move(b)), var + 1, images));
  }
  Polynomial acc = parts[max_exp];
  for (int e = max_exp - 1; e >= 0; --e) {
    acc = acc * images[var] + parts[e];
  }
  return acc;
}

}  // namespace

Polynomial apply_linear_change(const Polynomial& f, const LinearChange& g) {
  require_same_ring(f.ring(), g.ring());
  int n = f.ring()->nvars();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) {
      if (g.entry(i, j) != 0) {
        terms.push_back({Monomial::variable(n, j), g.entry(i, j)});
      }
    }
    images.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
  }
  return substitute_from(f, 0, images);
}

}  // namespace lefkit
