#include "lefkit/monomial_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>

#include "lefkit/text_io.hpp"

namespace lefkit {

namespace {

void require_dimension(const RingPtr& ring, const std::vector<Monomial>& gens) {
  for (const Monomial& g : gens) {
    if (g.nvars() != ring->nvars()) {
      throw DimensionError("generator dimension does not match ring");
    }
  }
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), DegRevLexLess());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      // kept entries are degrevlex smaller, the only possible divisors
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  require_dimension(ring_, generators);
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) {
  return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  int n = ring->nvars();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

int MonomialIdeal::max_gen_degree() const {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != ring_->nvars()) {
    throw DimensionError("monomial dimension does not match ring");
  }
  for (const Monomial& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  return same_ring(ring_, o.ring_) && gens_ == o.gens_;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  if (degree < 0) return {};
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  // Recursive enumeration; sorting afterwards keeps the order contract clear.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      exps[var] = remaining;
      out.emplace_back(nvars, exps);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[var] = e;
      self(self, var + 1, remaining - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), DegRevLexGreater());
  return out;
}

StabilityCheck is_strongly_stable(const MonomialIdeal& I) {
  for (const Monomial& t : I.min_gens()) {
    for (int j = 1; j < t.nvars(); ++j) {
      if (t.exp(j) == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial moved = t.with_exp(j, t.exp(j) - 1).with_exp(i, t.exp(i) + 1);
        if (!I.contains(moved)) {
          return {false, StabilityWitness{t, i, j}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

AlmostRevlexCheck is_almost_revlex(const MonomialIdeal& I) {
  const auto& gens = I.min_gens();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    const Monomial& t = *it;
    for (const Monomial& m : monomials_of_degree(t.nvars(), t.degree())) {
      if (compare_degrevlex(m, t) <= 0) break;
      if (!I.contains(m)) {
        return {false, AlmostRevlexWitness{t, m}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<long long>::max())) {
      throw Error("binomial coefficient overflow");
    }
  }
  return static_cast<long long>(r);
}

// Counts monomials of a fixed degree outside a monomial ideal by peeling off
// the last variable. Restricted generator sets repeat heavily across the
// recursion, so results are memoized under a compact key.
struct StandardMonomialCounter {
  std::unordered_map<std::string, long long> memo;

  static std::string key(const std::vector<Monomial>& gens, int nvars, int degree) {
    std::string k;
    k.reserve(gens.size() * nvars * 2 + 8);
    k += static_cast<char>(nvars);
    k += std::to_string(degree);
    for (const Monomial& g : gens) {
      k += '|';
      for (int i = 0; i < nvars; ++i) {
        k += static_cast<char>(std::min(g.exp(i), 250));
        if (g.exp(i) > 250) k += std::to_string(g.exp(i));
      }
    }
    return k;
  }

  long long count(const std::vector<Monomial>& gens, int nvars, int degree) {
    if (degree < 0) return 0;
    if (!gens.empty() && gens.back().degree() == 0) return 0;
    if (gens.empty()) return binomial(degree + nvars - 1, nvars - 1);
    if (nvars == 1) {
      // A minimal set in one variable is a single power.
      return degree < gens.front().degree() ? 1 : 0;
    }
    std::string k = key(gens, nvars, degree);
    auto hit = memo.find(k);
    if (hit != memo.end()) return hit->second;

    int last = nvars - 1;
    int max_last = 0;
    for (const Monomial& g : gens) max_last = std::max(max_last, g.exp(last));

    long long total = 0;
    std::vector<std::vector<Monomial>> restricted(max_last + 1);
    std::vector<char> computed(max_last + 1, 0);
    for (int e = 0; e <= degree; ++e) {
      int cap = std::min(e, max_last);
      if (!computed[cap]) {
        computed[cap] = 1;
        std::vector<Monomial> r;
        for (const Monomial& g : gens) {
          if (g.exp(last) <= cap) {
            Monomial stripped(nvars - 1);
            for (int i = 0; i < nvars - 1; ++i) {
              stripped = stripped.with_exp(i, g.exp(i));
            }
            r.push_back(stripped);
          }
        }
        restricted[cap] = minimalize(std::move(r));
      }
      total += count(restricted[cap], nvars - 1, degree - e);
    }
    memo[k] = total;
    return total;
  }
};

}  // namespace

long long hilbert_function(const MonomialIdeal& I, int degree) {
  if (degree < 0) return 0;
  StandardMonomialCounter counter;
  return counter.count(I.min_gens(), I.ring()->nvars(), degree);
}

RegularityCertificate regularity_stable(const MonomialIdeal& I) {
  StabilityCheck check = is_strongly_stable(I);
  if (!check.stable) {
    const auto& w = *check.witness;
    throw PreconditionError(
        "regularity via generator degrees needs a strongly stable ideal; "
        "witness generator " +
        format_monomial(w.generator, *I.ring()));
  }
  return {I.max_gen_degree(), RegularityCertificate::Source::kStableMaxDegree};
}

MonomialIdeal artinian_closure(const MonomialIdeal& I, int reg) {
  if (reg < 0) throw PreconditionError("regularity must be nonnegative");
  std::vector<Monomial> gens = I.min_gens();
  std::vector<Monomial> power = monomials_of_degree(I.ring()->nvars(), reg + 1);
  gens.insert(gens.end(), power.begin(), power.end());
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal add_variable_power(const MonomialIdeal& I, int var, int power) {
  int n = I.ring()->nvars();
  if (var < 0 || var >= n) {
    throw DimensionError("variable index " + std::to_string(var) +
                         " out of range for " + std::to_string(n) + " variables");
  }
  if (power < 1) throw PreconditionError("variable power must be positive");
  std::vector<Monomial> gens = I.min_gens();
  gens.push_back(Monomial::one(n).with_exp(var, power));
  return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal restrict_drop_last(const MonomialIdeal& I, int count) {
  int n = I.ring()->nvars();
  if (count < 0 || count >= n) {
    throw PreconditionError("can drop between 0 and " + std::to_string(n - 1) +
                            " variables, got " + std::to_string(count));
  }
  if (count == 0) return I;
  StabilityCheck check = is_strongly_stable(I);
  if (!check.stable) {
    throw PreconditionError("restriction requires a strongly stable ideal");
  }
  int keep = n - count;
  std::vector<std::string> names(I.ring()->var_names().begin(),
                                 I.ring()->var_names().begin() + keep);
  RingPtr small = RingContext::create(std::move(names));
  std::vector<Monomial> gens;
  for (const Monomial& g : I.min_gens()) {
    bool pure = true;
    for (int i = keep; i < n; ++i) {
      if (g.exp(i) > 0) {
        pure = false;
        break;
      }
    }
    if (!pure) continue;
    Monomial stripped(keep);
    for (int i = 0; i < keep; ++i) stripped = stripped.with_exp(i, g.exp(i));
    gens.push_back(stripped);
  }
  return MonomialIdeal(std::move(small), std::move(gens));
}

std::string format_monomial_ideal(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const Monomial& g : I.min_gens()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, *I.ring());
  }
  return out;
}

}  // namespace lefkit
