#include "lefkit/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lefkit/text_io.hpp"

namespace lefkit {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  for (Polynomial& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw PreconditionError("ideal generators must be homogeneous, got " +
                              format_polynomial(g));
    }
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Polynomial spolynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  const Monomial& lf = f.leading_monomial();
  const Monomial& lg = g.leading_monomial();
  Monomial l = Monomial::lcm(lf, lg);
  return f.times_term(l.quotient(lf), 1 / f.leading_coeff()) -
         g.times_term(l.quotient(lg), 1 / g.leading_coeff());
}

namespace {

const Polynomial* pick_reducer(const Monomial& m, const std::vector<Polynomial>& G) {
  const Polynomial* best = nullptr;
  for (const Polynomial& g : G) {
    if (g.is_zero()) continue;
    if (!g.leading_monomial().divides(m)) continue;
    if (!best ||
        compare_degrevlex(g.leading_monomial(), best->leading_monomial()) < 0) {
      best = &g;
    }
  }
  return best;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reducers) {
  for (const Polynomial& g : reducers) require_same_ring(f.ring(), g.ring());
  std::vector<Term> remainder;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lead = h.leading_term();
    const Polynomial* g = pick_reducer(lead.mono, reducers);
    if (g == nullptr) {
      remainder.push_back(lead);
      h = h.tail();
      continue;
    }
    mpq_class c = lead.coeff / g->leading_coeff();
    h = h - g->times_term(lead.mono.quotient(g->leading_monomial()), c);
  }
  // Leading terms strictly decrease, so the remainder is already sorted.
  return Polynomial::from_sorted_terms(f.ring(), std::move(remainder));
}

namespace {

struct PairEntry {
  int i;
  int j;  // i < j
  Monomial lcm;
};

struct PairOrder {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    auto cmp = compare_degrevlex(a.lcm, b.lcm);
    if (cmp != 0) return cmp < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

using PairSet = std::set<PairEntry, PairOrder>;

// Gebauer-Moeller update: adds element index t to the pair set, discarding
// pairs by the coprimality and chain criteria.
void update_pairs(PairSet& pairs, const std::vector<Polynomial>& basis, int t,
                  std::optional<int> degree_cap) {
  const Monomial& lt = basis[t].leading_monomial();
  struct Candidate {
    int i;
    Monomial lcm;
    bool coprime;
    bool keep = true;
  };
  std::vector<Candidate> cand;
  cand.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    const Monomial& li = basis[i].leading_monomial();
    cand.push_back({i, Monomial::lcm(li, lt), li.is_coprime_to(lt)});
  }
  // Candidates are processed in index order. A non-coprime candidate is
  // dropped when a still-unprocessed candidate or an already-kept earlier one
  // has an lcm dividing its own; coprime candidates always survive this pass
  // and are discarded only when emitting pairs below.
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (cand[a].coprime) continue;
    for (std::size_t b = 0; b < cand.size(); ++b) {
      if (b == a) continue;
      if (b < a && !cand[b].keep) continue;
      if (cand[b].lcm.divides(cand[a].lcm)) {
        cand[a].keep = false;
        break;
      }
    }
  }
  // Old pairs killed by the new leading term.
  for (auto it = pairs.begin(); it != pairs.end();) {
    const Monomial& li = basis[it->i].leading_monomial();
    const Monomial& lj = basis[it->j].leading_monomial();
    bool drop = lt.divides(it->lcm) &&
                !(Monomial::lcm(li, lt) == it->lcm) &&
                !(Monomial::lcm(lj, lt) == it->lcm);
    it = drop ? pairs.erase(it) : ++it;
  }
  for (const Candidate& c : cand) {
    if (!c.keep || c.coprime) continue;
    if (degree_cap && c.lcm.degree() > *degree_cap) continue;
    pairs.insert({c.i, t, c.lcm});
  }
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare_degrevlex(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  // Divisors are degrevlex smaller, so one ascending sweep finds the minimal set.
  std::vector<Polynomial> minimal;
  for (Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& k : minimal) {
      if (k.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = normal_form(minimal[i], others).monic();
  }
  return minimal;
}

GroebnerBasis run_buchberger(const Ideal& I, std::optional<int> degree_cap) {
  GroebnerBasis out;
  out.ring = I.ring();
  out.truncated_at = degree_cap;
  if (I.is_zero()) {
    out.reduced = true;
    return out;
  }
  std::vector<Polynomial> basis;
  PairSet pairs;
  for (const Polynomial& g : I.generators()) {
    basis.push_back(g.monic());
    update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, degree_cap);
  }
  while (!pairs.empty()) {
    PairEntry p = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial h = normal_form(spolynomial(basis[p.i], basis[p.j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1, degree_cap);
  }
  out.elements = interreduce(std::move(basis));
  out.reduced = true;
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& I) { return run_buchberger(I, std::nullopt); }

GroebnerBasis buchberger_truncated(const Ideal& I, int max_pair_degree) {
  if (max_pair_degree < 0) throw PreconditionError("degree cap must be nonnegative");
  return run_buchberger(I, max_pair_degree);
}

MonomialIdeal leading_term_ideal(const GroebnerBasis& basis) {
  std::vector<Monomial> lts;
  lts.reserve(basis.elements.size());
  for (const Polynomial& g : basis.elements) lts.push_back(g.leading_monomial());
  return MonomialIdeal(basis.ring, std::move(lts));
}

long long hilbert_function_ideal(const Ideal& I, int degree) {
  if (degree < 0) return 0;
  if (I.is_zero()) {
    MonomialIdeal empty = MonomialIdeal::zero(I.ring());
    return hilbert_function(empty, degree);
  }
  GroebnerBasis basis = buchberger_truncated(I, degree + 1);
  return hilbert_function(leading_term_ideal(basis), degree);
}

}  // namespace lefkit
