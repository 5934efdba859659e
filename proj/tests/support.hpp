#ifndef LEFKIT_TESTS_SUPPORT_HPP
#define LEFKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lefkit/groebner.hpp"
#include "lefkit/monomial_ideal.hpp"
#include "lefkit/ring.hpp"
#include "lefkit/text_io.hpp"

namespace lefkit::testing {

inline RingPtr ring2() { return RingContext::create_xyzw(2); }
inline RingPtr ring3() { return RingContext::create_xyzw(3); }
inline RingPtr ring4() { return RingContext::create_xyzw(4); }

inline Monomial mono(const RingPtr& ring, const std::string& text) {
  return parse_monomial(text, ring);
}

inline Polynomial poly(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

inline MonomialIdeal mono_ideal(const RingPtr& ring, const std::string& text) {
  return MonomialIdeal(ring, parse_monomial_list(text, ring));
}

inline Ideal ideal(const RingPtr& ring, const std::string& text) {
  return Ideal(ring, parse_polynomial_list(text, ring));
}

inline Monomial random_monomial(std::mt19937_64& rng, int nvars, int degree) {
  Monomial m(nvars);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  for (int step = 0; step < degree; ++step) {
    int i = var(rng);
    m = m.with_exp(i, m.exp(i) + 1);
  }
  return m;
}

/// A handful of random monomials of degree 1..max_degree, minimalized.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const RingPtr& ring,
                                           int count, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    gens.push_back(random_monomial(rng, ring->nvars(), deg(rng)));
  }
  return MonomialIdeal(ring, std::move(gens));
}

/// Smallest strongly stable ideal containing a few random monomials: the
/// closure under every exchange xi * t / xj with i < j, xj | t.
inline MonomialIdeal random_stable_ideal(std::mt19937_64& rng, const RingPtr& ring,
                                         int count, int max_degree) {
  MonomialIdeal seeds = random_monomial_ideal(rng, ring, count, max_degree);
  std::vector<Monomial> all = seeds.min_gens();
  std::vector<Monomial> queue = all;
  auto known = [&all](const Monomial& m) {
    return std::find(all.begin(), all.end(), m) != all.end();
  };
  while (!queue.empty()) {
    Monomial t = queue.back();
    queue.pop_back();
    for (int j = 1; j < t.nvars(); ++j) {
      if (t.exp(j) == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial moved = t.with_exp(j, t.exp(j) - 1).with_exp(i, t.exp(i) + 1);
        if (!known(moved)) {
          all.push_back(moved);
          queue.push_back(moved);
        }
      }
    }
  }
  return MonomialIdeal(ring, std::move(all));
}

/// Union of degrevlex initial segments in a few random degrees; almost revlex
/// by construction.
inline MonomialIdeal random_almost_revlex_ideal(std::mt19937_64& rng,
                                                const RingPtr& ring, int pieces,
                                                int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::vector<Monomial> gens;
  for (int p = 0; p < pieces; ++p) {
    int d = deg(rng);
    std::vector<Monomial> level = monomials_of_degree(ring->nvars(), d);
    std::uniform_int_distribution<int> cut(1, static_cast<int>(level.size()));
    int take = cut(rng);
    gens.insert(gens.end(), level.begin(), level.begin() + take);
  }
  return MonomialIdeal(ring, std::move(gens));
}

inline Polynomial random_homogeneous_polynomial(std::mt19937_64& rng,
                                                const RingPtr& ring, int degree,
                                                int terms) {
  std::vector<Monomial> level = monomials_of_degree(ring->nvars(), degree);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(level.size()) - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Polynomial f = Polynomial::zero(ring);
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    f = f + Polynomial::term(ring, level[static_cast<std::size_t>(pick(rng))], c);
  }
  return f;
}

/// A few random homogeneous generators of degree 1..max_degree; may be zero.
inline Ideal random_homogeneous_ideal(std::mt19937_64& rng, const RingPtr& ring,
                                      int count, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::vector<Polynomial> gens;
  for (int i = 0; i < count; ++i) {
    gens.push_back(random_homogeneous_polynomial(rng, ring, deg(rng), nterms(rng)));
  }
  return Ideal(ring, std::move(gens));
}

/// Hilbert function by raw divisibility filtering, independent of the
/// counting code under test.
inline long long hf_brute_force(const MonomialIdeal& I, int degree) {
  if (I.is_unit()) return 0;
  long long count = 0;
  for (const Monomial& m : monomials_of_degree(I.ring()->nvars(), degree)) {
    if (!I.contains(m)) ++count;
  }
  return count;
}

/// Rank of the degree-d slice of a polynomial ideal over Q by Gaussian
/// elimination on the multiples of the generators; an oracle for Hilbert
/// function values that bypasses Groebner bases entirely.
inline long long hf_rank_oracle(const Ideal& I, int degree) {
  std::vector<Monomial> basis = monomials_of_degree(I.ring()->nvars(), degree);
  std::map<std::vector<int>, std::size_t> column;
  for (std::size_t c = 0; c < basis.size(); ++c) column[basis[c].exponents()] = c;
  std::vector<std::vector<mpq_class>> rows;
  for (const Polynomial& g : I.generators()) {
    int shift = degree - g.degree();
    if (shift < 0) continue;
    for (const Monomial& m : monomials_of_degree(I.ring()->nvars(), shift)) {
      std::vector<mpq_class> row(basis.size(), 0);
      for (const Term& t : g.terms()) {
        row[column.at((t.mono * m).exponents())] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < basis.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      mpq_class factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < basis.size(); ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  return static_cast<long long>(basis.size()) - static_cast<long long>(rank);
}

}  // namespace lefkit::testing

#endif
