#include "lefkit/lefschetz.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lefkit {

SectionalMatrix::SectionalMatrix(RingPtr ring, int reg, bool proper,
                                 std::vector<std::vector<long long>> rows)
    : ring_(std::move(ring)), reg_(reg), proper_(proper), rows_(std::move(rows)) {
  if (reg_ < 0) throw PreconditionError("regularity must be nonnegative");
  std::size_t l = static_cast<std::size_t>(ring_->nvars());
  std::size_t width = static_cast<std::size_t>(reg_) + 2;
  if (rows_.size() != l) {
    throw DimensionError("sectional matrix needs one row per variable");
  }
  for (const auto& row : rows_) {
    if (row.size() != width) {
      throw DimensionError("sectional matrix rows must span d = 0..reg+1");
    }
    for (long long v : row) {
      if (v < 0) throw PreconditionError("sectional matrix entries are nonnegative");
    }
  }
}

long long SectionalMatrix::entry(int i, int d) const {
  int l = nvars();
  if (i < 0 || i > l) throw DimensionError("sectional row index out of range");
  if (d < 0) return 0;
  if (i == 0) return proper_ && d == 0 ? 1 : 0;
  if (d <= reg_ + 1) return rows_[i - 1][d];
  // Extend column by column with M(r,e) = M(r,e-1) + M(r-1,e); above the
  // regularity the virtual row contributes nothing.
  std::vector<long long> col(l + 1);
  col[0] = 0;
  for (int r = 1; r <= l; ++r) col[r] = rows_[r - 1][reg_ + 1];
  for (int e = reg_ + 2; e <= d; ++e) {
    for (int r = 1; r <= l; ++r) col[r] += col[r - 1];
  }
  return col[i];
}

SectionalMatrix sectional_matrix(const MonomialIdeal& stable) {
  StabilityCheck check = is_strongly_stable(stable);
  if (!check.stable) {
    throw PreconditionError("sectional matrix needs a strongly stable ideal");
  }
  int l = stable.ring()->nvars();
  int reg = regularity_stable(stable).value;
  std::vector<std::vector<long long>> rows(
      l, std::vector<long long>(static_cast<std::size_t>(reg) + 2, 0));
  for (int i = 1; i <= l; ++i) {
    MonomialIdeal restricted = restrict_drop_last(stable, l - i);
    for (int d = 0; d <= reg + 1; ++d) {
      rows[i - 1][d] = hilbert_function(restricted, d);
    }
  }
  return SectionalMatrix(stable.ring(), reg, !stable.is_unit(), std::move(rows));
}

SectionalMatrix sectional_matrix(const Ideal& I, const GinOptions& options) {
  return sectional_matrix(rgin(I, options).ideal);
}

std::string format_sectional_matrix(const SectionalMatrix& m) {
  int l = m.nvars();
  int width = m.reg() + 2;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  for (int i = 1; i <= l; ++i) {
    std::string label = "M(" + std::to_string(i) + ",d)";
    if (i == l) label += " = HF";
    labels.push_back(label + ":");
    std::vector<std::string> row;
    for (int d = 0; d < width; ++d) row.push_back(std::to_string(m.entry(i, d)));
    cells.push_back(std::move(row));
  }
  std::size_t label_w = 0;
  for (const auto& s : labels) label_w = std::max(label_w, s.size());
  std::vector<std::size_t> col_w(width);
  for (int d = 0; d < width; ++d) {
    col_w[d] = std::to_string(d).size();
    for (int i = 0; i < l; ++i) col_w[d] = std::max(col_w[d], cells[i][d].size());
  }
  std::ostringstream out;
  out << std::string(label_w, ' ');
  for (int d = 0; d < width; ++d) {
    std::string h = std::to_string(d);
    out << "  " << std::string(col_w[d] - h.size(), ' ') << h;
  }
  out << "\n";
  for (int i = 0; i < l; ++i) {
    out << labels[i] << std::string(label_w - labels[i].size(), ' ');
    for (int d = 0; d < width; ++d) {
      out << "  " << std::string(col_w[d] - cells[i][d].size(), ' ') << cells[i][d];
    }
    out << "\n";
  }
  return out.str();
}

GrowthCheck check_growth_inequality(const SectionalMatrix& m,
                                    const MonomialIdeal& stable) {
  GrowthCheck out;
  out.inequality_ok = true;
  out.generator_cross_check_ok = true;
  int l = m.nvars();
  for (int i = 2; i <= l; ++i) {
    for (int d = 1; d <= m.reg() + 1; ++d) {
      long long diff = m.entry(i, d) - m.entry(i, d - 1);
      long long above = m.entry(i - 1, d);
      if (diff > above) {
        out.inequality_ok = false;
        if (!out.violation) out.violation = GrowthViolation{i, d, diff, above};
        continue;
      }
      bool tight = diff == above;
      if (tight) out.tight.emplace_back(i, d);
      // Equality at (i, d) is governed by the restriction to K[x_1..x_i]:
      // generators involving x_{i+1}..x_l do not survive the section and
      // cannot obstruct tightness. Only x_i-divisible generators that are
      // free of the trailing variables count.
      bool has_gen = false;
      for (const Monomial& g : stable.min_gens()) {
        if (g.degree() != d || g.exp(i - 1) == 0) continue;
        bool restricted = true;
        for (int j = i; j < l; ++j) {
          if (g.exp(j) > 0) {
            restricted = false;
            break;
          }
        }
        if (restricted) {
          has_gen = true;
          break;
        }
      }
      if (tight == has_gen) out.generator_cross_check_ok = false;
    }
  }
  return out;
}

namespace {

LevelCheck wlp_on_stable(const MonomialIdeal& stable, int k) {
  int l = stable.ring()->nvars();
  if (k < 0 || k > l) {
    throw PreconditionError("k must be between 0 and the number of variables");
  }
  SectionalMatrix m = sectional_matrix(stable);
  for (int j = 0; j < k; ++j) {
    for (int d = 0; d <= m.reg(); ++d) {
      long long lhs = m.entry(l - j - 1, d);
      long long rhs = std::max(m.entry(l - j, d) - m.entry(l - j, d - 1), 0LL);
      if (lhs != rhs) {
        return {false, LefschetzWitness{j, d - 1, d, lhs, rhs}};
      }
    }
  }
  return {true, std::nullopt};
}

LevelCheck slp_on_stable(const MonomialIdeal& stable, int k) {
  int l = stable.ring()->nvars();
  if (k < 0 || k > l) {
    throw PreconditionError("k must be between 0 and the number of variables");
  }
  int reg = regularity_stable(stable).value;
  MonomialIdeal closure = artinian_closure(stable, reg);
  for (int j = 0; j < k; ++j) {
    MonomialIdeal level = restrict_drop_last(closure, j);
    int last = level.ring()->nvars() - 1;
    std::vector<long long> hf(static_cast<std::size_t>(reg) + 2, 0);
    for (int d = 0; d <= reg + 1; ++d) hf[d] = hilbert_function(level, d);
    for (int d = 0; d <= reg; ++d) {
      for (int s = 1; s <= reg + 1 - d; ++s) {
        MonomialIdeal cut = add_variable_power(level, last, s);
        long long lhs = hilbert_function(cut, d + s);
        long long rhs = std::max(hf[d + s] - hf[d], 0LL);
        if (lhs != rhs) {
          return {false, LefschetzWitness{j, d, d + s, lhs, rhs}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

void require_stable(const MonomialIdeal& I, const char* what) {
  if (!is_strongly_stable(I).stable) {
    throw PreconditionError(std::string(what) + " needs a strongly stable ideal");
  }
}

}  // namespace

LevelCheck has_k_wlp(const MonomialIdeal& stable, int k) {
  require_stable(stable, "k-WLP decision");
  return wlp_on_stable(stable, k);
}

LevelCheck has_k_slp(const MonomialIdeal& stable, int k) {
  require_stable(stable, "k-SLP decision");
  return slp_on_stable(stable, k);
}

LevelCheck has_k_wlp(const Ideal& I, int k, const GinOptions& options) {
  return wlp_on_stable(rgin(I, options).ideal, k);
}

LevelCheck has_k_slp(const Ideal& I, int k, const GinOptions& options) {
  return slp_on_stable(rgin(I, options).ideal, k);
}

bool is_unimodal(const std::vector<long long>& seq) {
  std::size_t i = 0;
  while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
  return i + 1 >= seq.size();
}

bool is_quasi_symmetric(const std::vector<long long>& seq) {
  std::vector<long long> h = seq;
  while (!h.empty() && h.back() == 0) h.pop_back();
  if (h.empty()) return true;
  if (!is_unimodal(h)) {
    throw PreconditionError("quasi-symmetry is defined for unimodal sequences");
  }
  for (long long v : h) {
    if (v <= 0) throw PreconditionError("quasi-symmetry needs positive entries");
  }
  std::size_t peak = 0;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] > h[peak]) peak = i;
  }
  std::set<long long> prefix(h.begin(), h.begin() + peak + 1);
  for (std::size_t i = peak + 1; i < h.size(); ++i) {
    if (!prefix.count(h[i])) return false;
  }
  return true;
}

namespace {

LefschetzReport analyze_on_stable(const MonomialIdeal& stable) {
  int l = stable.ring()->nvars();
  LefschetzReport report{stable,
                         regularity_stable(stable),
                         sectional_matrix(stable),
                         0,
                         0,
                         std::nullopt,
                         std::nullopt,
                         {},
                         {}};
  LevelCheck wlp = wlp_on_stable(stable, l);
  if (wlp.holds) {
    report.k_wlp_max = l;
  } else {
    report.k_wlp_max = wlp.witness->level;
    report.wlp_obstruction = wlp.witness;
  }
  LevelCheck slp = slp_on_stable(stable, l);
  if (slp.holds) {
    report.k_slp_max = l;
  } else {
    report.k_slp_max = slp.witness->level;
    report.slp_obstruction = slp.witness;
  }
  for (int j = 0; j < report.k_wlp_max; ++j) {
    report.wlp_elements.push_back(stable.ring()->var_name(l - 1 - j));
  }
  for (int j = 0; j < report.k_slp_max; ++j) {
    report.slp_elements.push_back(stable.ring()->var_name(l - 1 - j));
  }
  return report;
}

}  // namespace

LefschetzReport analyze_lefschetz(const MonomialIdeal& stable) {
  require_stable(stable, "Lefschetz analysis");
  return analyze_on_stable(stable);
}

LefschetzReport analyze_lefschetz(const Ideal& I, const GinOptions& options) {
  return analyze_on_stable(rgin(I, options).ideal);
}

namespace {

AlmostRevlexConclusion conclusion_on_stable(const MonomialIdeal& stable) {
  int l = stable.ring()->nvars();
  AlmostRevlexConclusion out{false, stable};
  if (!slp_on_stable(stable, l).holds) return out;
  SectionalMatrix m = sectional_matrix(stable);
  for (int j = 0; j + 4 <= l; ++j) {
    std::vector<long long> row;
    for (int d = 0; d <= m.reg(); ++d) row.push_back(m.entry(l - j, d));
    if (!is_quasi_symmetric(row)) return out;
  }
  out.hypothesis_holds = true;
  AlmostRevlexCheck check = is_almost_revlex(stable);
  if (!check.almost_revlex) {
    throw std::logic_error(
        "internal invariant violated: l-SLP with quasi-symmetric sections "
        "must produce an almost revlex generic initial ideal");
  }
  return out;
}

}  // namespace

AlmostRevlexConclusion almost_revlex_conclusion(const MonomialIdeal& stable) {
  require_stable(stable, "almost revlex conclusion");
  return conclusion_on_stable(stable);
}

AlmostRevlexConclusion almost_revlex_conclusion(const Ideal& I,
                                                const GinOptions& options) {
  return conclusion_on_stable(rgin(I, options).ideal);
}

}  // namespace lefkit
