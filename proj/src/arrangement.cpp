#include "lefkit/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lefkit/parallel.hpp"
#include "lefkit/seeds.hpp"
#include "lefkit/text_io.hpp"

namespace lefkit {

namespace {

// Coefficient vector (linear part, constant last); forms are proportional
// exactly when all 2x2 minors of the two vectors vanish.
std::vector<mpq_class> form_coefficients(const Polynomial& f) {
  int l = f.ring()->nvars();
  std::vector<mpq_class> c(static_cast<std::size_t>(l) + 1, 0);
  for (const Term& t : f.terms()) {
    if (t.mono.is_one()) {
      c[l] = t.coeff;
      continue;
    }
    for (int i = 0; i < l; ++i) {
      if (t.mono.exp(i) == 1 && t.mono.degree() == 1) c[i] = t.coeff;
    }
  }
  return c;
}

bool proportional(const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

}  // namespace

Arrangement::Arrangement(RingPtr ring, std::vector<Polynomial> forms)
    : ring_(std::move(ring)), forms_(std::move(forms)) {
  if (forms_.empty()) throw PreconditionError("an arrangement needs at least one form");
  std::vector<std::vector<mpq_class>> coeffs;
  central_ = true;
  for (const Polynomial& f : forms_) {
    require_same_ring(ring_, f.ring());
    if (f.is_zero() || f.degree() != 1) {
      throw PreconditionError("arrangement forms must be nonzero of degree 1, got " +
                              format_polynomial(f));
    }
    std::vector<mpq_class> c = form_coefficients(f);
    if (c.back() != 0) central_ = false;
    for (const auto& other : coeffs) {
      if (proportional(c, other)) {
        throw PreconditionError("proportional forms define the same hyperplane: " +
                                format_polynomial(f));
      }
    }
    coeffs.push_back(std::move(c));
  }
}

namespace {

void require_central(const Arrangement& a) {
  if (!a.is_central()) {
    throw CentralityError("this operation requires a central arrangement");
  }
}

}  // namespace

Polynomial defining_polynomial(const Arrangement& a) {
  require_central(a);
  Polynomial q = Polynomial::constant(a.ring(), 1);
  for (const Polynomial& f : a.forms()) q = q * f;
  return q;
}

Ideal jacobian_ideal(const Arrangement& a) {
  require_central(a);
  Polynomial q = defining_polynomial(a);
  std::vector<Polynomial> gens;
  gens.reserve(a.ring()->nvars() + 1);
  gens.push_back(q);
  for (int i = 0; i < a.ring()->nvars(); ++i) {
    gens.push_back(q.partial_derivative(i));
  }
  return Ideal(a.ring(), std::move(gens));
}

FreenessVerdict is_free(const Arrangement& a, const GinOptions& options) {
  require_central(a);
  MonomialIdeal gin = rgin(jacobian_ideal(a), options).ideal;
  FreenessVerdict v{false, {}, std::nullopt, "", gin};
  if (gin.is_unit()) {
    v.free = true;
    v.reason = "rgin(J) is the whole ring";
    return v;
  }
  int l = a.ring()->nvars();
  int n = a.size();
  const RingContext& ring = *a.ring();
  for (const Monomial& g : gin.min_gens()) {
    for (int var = 2; var < l; ++var) {
      if (g.exp(var) > 0) {
        v.violating_generator = g;
        v.reason = "minimal generator " + format_monomial(g, ring) +
                   " is divisible by " + ring.var_name(var);
        return v;
      }
    }
  }
  if (l < 2) {
    v.reason = "staircase pattern needs a second variable";
    return v;
  }
  if (static_cast<int>(gin.min_gens().size()) != n) {
    v.reason = "expected " + std::to_string(n) + " minimal generators, found " +
               std::to_string(gin.min_gens().size());
    return v;
  }
  std::vector<Monomial> ladder = gin.min_gens();
  std::sort(ladder.begin(), ladder.end(),
            [](const Monomial& p, const Monomial& q) { return p.exp(0) > q.exp(0); });
  for (int i = 0; i < n; ++i) {
    if (ladder[i].exp(0) != n - 1 - i) {
      v.violating_generator = ladder[i];
      v.reason = "x1 exponents must step down from " + std::to_string(n - 1) +
                 " to 0; generator " + format_monomial(ladder[i], ring) +
                 " breaks the ladder";
      return v;
    }
  }
  if (ladder[0].exp(1) != 0) {
    v.violating_generator = ladder[0];
    v.reason = "the pure power " + ring.var_name(0) + "^" + std::to_string(n - 1) +
               " is missing";
    return v;
  }
  std::vector<int> lambda;
  for (int i = 1; i < n; ++i) {
    int e = ladder[i].exp(1);
    int prev = i == 1 ? 0 : lambda.back();
    if (e <= prev) {
      v.violating_generator = ladder[i];
      v.reason = "x2 exponents must increase strictly; generator " +
                 format_monomial(ladder[i], ring) + " does not";
      return v;
    }
    if (i >= 2 && e - prev > 2) {
      v.violating_generator = ladder[i];
      v.reason = "ladder gap " + std::to_string(e - prev) + " between " +
                 format_monomial(ladder[i - 1], ring) + " and " +
                 format_monomial(ladder[i], ring) + " exceeds 2";
      return v;
    }
    lambda.push_back(e);
  }
  v.free = true;
  v.lambda = std::move(lambda);
  return v;
}

ShapeCheck rgin_shape_check(const Arrangement& a, const GinOptions& options) {
  require_central(a);
  MonomialIdeal gin = rgin(jacobian_ideal(a), options).ideal;
  ShapeCheck out{false, false, false, false, {}, gin};
  if (gin.is_unit()) {
    out.unit_branch = true;
    out.ok = true;
    return out;
  }
  int l = a.ring()->nvars();
  int n = a.size();
  for (const Monomial& g : gin.min_gens()) {
    if (g.exp(0) == n - 1 && g.degree() == n - 1) out.has_x1_power = true;
    if (l >= 2 && g.exp(1) == g.degree() && g.degree() > 0) out.has_pure_x2_power = true;
    bool tail_only = g.exp(0) == 0 && (l < 2 || g.exp(1) == 0);
    if (tail_only && l >= 3) out.tail_only_generators.push_back(g);
  }
  out.ok = out.has_x1_power && (l < 2 || out.has_pure_x2_power) &&
           out.tail_only_generators.empty();
  return out;
}

ConjectureReport check_conjecture(const Arrangement& a, const GinOptions& options) {
  require_central(a);
  if (a.ring()->nvars() < 3) {
    throw PreconditionError("the conjecture concerns arrangements in at least 3 variables");
  }
  MonomialIdeal gin = rgin(jacobian_ideal(a), options).ideal;
  ConjectureReport report{false, false, 0, {}, gin};
  if (gin.is_unit()) {
    report.vacuous = true;
    report.holds = true;
    return report;
  }
  int d0 = -1;
  for (const Monomial& g : gin.min_gens()) {
    if (g.degree() > 0 && g.exp(1) == g.degree()) {
      d0 = d0 < 0 ? g.degree() : std::min(d0, g.degree());
    }
  }
  if (d0 < 0) {
    throw std::logic_error(
        "internal invariant violated: rgin of a Jacobian ideal must contain a "
        "pure power of the second variable");
  }
  report.d0 = d0;
  for (const Monomial& g : gin.min_gens()) {
    if (g.exp(2) > 0 && g.degree() < d0) report.offenders.push_back(g);
  }
  report.holds = report.offenders.empty();
  return report;
}

Arrangement random_central_arrangement(const RingPtr& ring, int n,
                                       std::uint64_t seed, long coeff_bound) {
  int l = ring->nvars();
  if (l < 2) throw PreconditionError("random arrangements need at least 2 variables");
  if (n < 1) throw PreconditionError("an arrangement needs at least one form");
  if (coeff_bound < 1) throw PreconditionError("coefficient bound must be positive");
  // Directions available up to sign; a coarse feasibility cut before sampling.
  double directions = (std::pow(2.0 * static_cast<double>(coeff_bound) + 1.0,
                                static_cast<double>(l)) -
                       1.0) /
                      2.0;
  if (static_cast<double>(n) > directions) {
    throw GenerationError("cannot realize " + std::to_string(n) +
                          " distinct hyperplanes with coefficients bounded by " +
                          std::to_string(coeff_bound));
  }
  std::mt19937_64 rng = make_rng(seed);
  std::uniform_int_distribution<long> dist(-coeff_bound, coeff_bound);
  std::vector<std::vector<long>> rows;
  long attempts = 0;
  long max_attempts = 1000L * n + 1000L;
  while (static_cast<int>(rows.size()) < n) {
    if (++attempts > max_attempts) {
      throw GenerationError("exhausted attempts while sampling " + std::to_string(n) +
                            " distinct hyperplanes");
    }
    std::vector<long> row(l);
    bool zero = true;
    for (int i = 0; i < l; ++i) {
      row[i] = dist(rng);
      if (row[i] != 0) zero = false;
    }
    if (zero) continue;
    bool dup = false;
    for (const auto& other : rows) {
      bool prop = true;
      for (int i = 0; i < l && prop; ++i) {
        for (int j = i + 1; j < l; ++j) {
          if (static_cast<long long>(row[i]) * other[j] !=
              static_cast<long long>(row[j]) * other[i]) {
            prop = false;
            break;
          }
        }
      }
      if (prop) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    rows.push_back(std::move(row));
  }
  std::vector<Polynomial> forms;
  forms.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Term> terms;
    for (int i = 0; i < l; ++i) {
      if (row[i] != 0) terms.push_back({Monomial::variable(l, i), mpq_class(row[i])});
    }
    forms.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Arrangement(ring, std::move(forms));
}

namespace {

mpq_class parse_matrix_entry(const std::string& tok, int line) {
  try {
    mpq_class q(tok);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid coefficient '" + tok + "'", line, 1);
  }
}

}  // namespace

Arrangement parse_arrangement_file(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  RingPtr ring;
  bool matrix_mode = false;
  std::vector<Polynomial> forms;
  auto strip = [](const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip(line);
    if (body.empty() || body[0] == '#') continue;
    if (!ring) {
      if (body.rfind("vars:", 0) == 0) {
        ring = parse_vars(body.substr(5));
      } else if (body.rfind("matrix:", 0) == 0) {
        std::string head = strip(body.substr(7));
        if (!head.empty() && head.find_first_not_of("0123456789") == std::string::npos) {
          if (head.size() > 2) throw ParseError("implausible variable count", lineno, 1);
          try {
            ring = RingContext::create(std::stoi(head));
          } catch (const Error& e) {
            throw ParseError(e.what(), lineno, 1);
          }
        } else {
          ring = parse_vars(head);
        }
        matrix_mode = true;
      } else {
        throw ParseError("expected a 'vars:' or 'matrix:' header", lineno, 1);
      }
      continue;
    }
    if (!matrix_mode) {
      forms.push_back(parse_polynomial_line(body, ring, lineno));
      continue;
    }
    std::istringstream row(body);
    std::string tok;
    std::vector<Term> terms;
    int col = 0;
    while (row >> tok) {
      if (col >= ring->nvars()) {
        throw ParseError("row has more than " + std::to_string(ring->nvars()) +
                             " entries",
                         lineno, 1);
      }
      mpq_class c = parse_matrix_entry(tok, lineno);
      if (c != 0) {
        terms.push_back({Monomial::variable(ring->nvars(), col), std::move(c)});
      }
      ++col;
    }
    if (col != ring->nvars()) {
      throw ParseError("row has " + std::to_string(col) + " entries, expected " +
                           std::to_string(ring->nvars()),
                       lineno, 1);
    }
    forms.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  if (!ring) throw ParseError("missing 'vars:' or 'matrix:' header", lineno + 1, 1);
  if (forms.empty()) throw ParseError("arrangement file lists no forms", lineno + 1, 1);
  return Arrangement(ring, std::move(forms));
}

std::string format_arrangement_file(const Arrangement& a,
                                    const std::vector<std::string>& comments) {
  std::string out;
  for (const std::string& c : comments) out += "# " + c + "\n";
  out += "vars: ";
  const auto& names = a.ring()->var_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  out += "\n";
  for (const Polynomial& f : a.forms()) out += format_polynomial(f) + "\n";
  return out;
}

Arrangement conjecture_sample(const ConjectureSearchParams& params, int index) {
  RingPtr ring = RingContext::create(params.l);
  std::uint64_t idx = static_cast<std::uint64_t>(index);
  int span = params.n_max - params.n_min + 1;
  int n = params.n_min +
          static_cast<int>(derive_seed(params.seed, "conjecture-n", idx) %
                           static_cast<std::uint64_t>(span));
  std::uint64_t arr_seed = derive_seed(params.seed, "conjecture-arrangement", idx);
  return random_central_arrangement(ring, n, arr_seed, params.coeff_bound);
}

ConjectureSearchSummary run_conjecture_search(const ConjectureSearchParams& params) {
  if (params.l < 3) {
    throw PreconditionError("the conjecture concerns arrangements in at least 3 variables");
  }
  if (params.n_min < 1 || params.n_max < params.n_min) {
    throw PreconditionError("need 1 <= n_min <= n_max");
  }
  if (params.count < 0) throw PreconditionError("sample count must be nonnegative");
  ConjectureSearchSummary summary;
  summary.outcomes.resize(static_cast<std::size_t>(params.count));
  par::for_each_index(
      static_cast<std::size_t>(params.count), params.workers, [&](std::size_t i) {
        SampleOutcome& o = summary.outcomes[i];
        o.index = static_cast<int>(i);
        int span = params.n_max - params.n_min + 1;
        o.n = params.n_min +
              static_cast<int>(derive_seed(params.seed, "conjecture-n", i) %
                               static_cast<std::uint64_t>(span));
        o.arrangement_seed = derive_seed(params.seed, "conjecture-arrangement", i);
        o.gin_seed = derive_seed(params.seed, "conjecture-gin", i);
        RingPtr ring = RingContext::create(params.l);
        Arrangement a =
            random_central_arrangement(ring, o.n, o.arrangement_seed, params.coeff_bound);
        GinOptions gin = params.gin;
        gin.seed = o.gin_seed;
        gin.workers = 1;
        try {
          ConjectureReport report = check_conjecture(a, gin);
          if (report.vacuous) {
            o.kind = SampleOutcome::Kind::kVacuous;
          } else if (report.holds) {
            o.kind = SampleOutcome::Kind::kHolds;
          } else {
            o.kind = SampleOutcome::Kind::kCounterexample;
          }
          o.report = std::move(report);
        } catch (const GinFailureError&) {
          o.kind = SampleOutcome::Kind::kGinFailure;
        }
      });
  for (const SampleOutcome& o : summary.outcomes) {
    switch (o.kind) {
      case SampleOutcome::Kind::kHolds: ++summary.holds; break;
      case SampleOutcome::Kind::kVacuous: ++summary.vacuous; break;
      case SampleOutcome::Kind::kCounterexample: ++summary.counterexamples; break;
      case SampleOutcome::Kind::kGinFailure: ++summary.gin_failures; break;
    }
  }
  return summary;
}

}  // namespace lefkit
