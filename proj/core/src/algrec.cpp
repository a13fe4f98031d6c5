#include "qj/algrec.hpp"

#include <algorithm>
#include <limits>

namespace qj {

namespace {

constexpr long long kMargin = 8;  // required overdetermination of every system

// nullspace basis of rows * v = 0 over F_q, columns = unknowns
std::vector<std::vector<fe_t>> nullspace(const FieldPtr& F,
                                         std::vector<std::vector<fe_t>> rows,
                                         std::size_t cols) {
  std::vector<long long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    fe_t inv = F->inv(rows[rank][c]);
    for (std::size_t k = c; k < cols; ++k)
      rows[rank][k] = F->mul(rows[rank][k], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      fe_t m = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = F->sub(rows[r][k], F->mul(m, rows[rank][k]));
    }
    pivot_of_col[c] = static_cast<long long>(rank);
    ++rank;
  }
  std::vector<std::vector<fe_t>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<fe_t> v(cols, 0);
    v[c] = 1;
    for (std::size_t c2 = 0; c2 < cols; ++c2)
      if (pivot_of_col[c2] >= 0)
        v[c2] = F->sub(0, rows[static_cast<std::size_t>(pivot_of_col[c2])][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Poly> unpack(const FieldPtr& F, const std::vector<fe_t>& v, int D,
                         int B) {
  std::vector<Poly> cs;
  for (int i = 0; i <= D; ++i) {
    std::vector<fe_t> c(static_cast<std::size_t>(B) + 1, 0);
    for (int j = 0; j <= B; ++j)
      c[static_cast<std::size_t>(j)] =
          v[static_cast<std::size_t>(i * (B + 1) + j)];
    cs.emplace_back(F, std::move(c));
  }
  return cs;
}

Laurent combine(const std::vector<Poly>& cs, const std::vector<Laurent>& xp) {
  const FieldPtr& F = xp[0].field();
  Laurent acc = Laurent::zero(F);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) acc = acc + Laurent::from_poly(cs[i]) * xp[i];
  return acc;
}

// a residual refutes a relation only if some coefficient is visibly
// nonzero; exact zero is distinguishable() yet refutes nothing
bool visibly_nonzero(const Laurent& r) {
  return r.distinguishable() && !r.is_zero_exact();
}

} // namespace

std::optional<AlgRelation> minpoly_search(const Laurent& x, int d_max,
                                          int b_max) {
  const FieldPtr& F = x.field();
  if (d_max < 1 || b_max < 0) throw domain_error("algrec: bad search bounds");
  if (x.is_zero_exact()) throw domain_error("algrec: subject is exactly zero");
  if (!x.distinguishable())
    throw precision_error("algrec: subject is zero to precision");
  std::vector<Laurent> xp{Laurent::monomial(F, 0, 1)};
  for (int i = 1; i <= d_max; ++i) xp.push_back(xp.back() * x);

  bool any_affordable = false;
  for (int D = 1; D <= d_max; ++D) {
    for (int B = 0; B <= b_max; ++B) {
      std::size_t cols = static_cast<std::size_t>(D + 1) *
                         static_cast<std::size_t>(B + 1);
      long long e_hi = x.lead_exp();
      for (int i = 1; i <= D; ++i)
        e_hi = std::max(e_hi, xp[static_cast<std::size_t>(i)].lead_exp());
      e_hi += B;
      long long e_lo;
      if (x.is_exact()) {
        // exact subjects carry no floor; take enough rows to
        // overdetermine and let the exact residual check reject fakes
        e_lo = e_hi - static_cast<long long>(cols) - 2 * kMargin - 16;
      } else {
        e_lo = std::numeric_limits<long long>::min();
        for (int i = 0; i <= D; ++i)
          e_lo = std::max(e_lo,
                          xp[static_cast<std::size_t>(i)].unknown_exp());
        e_lo += B + 1;
      }
      long long rows_n = e_hi - e_lo + 1;
      if (rows_n < static_cast<long long>(cols) + kMargin) break;
      any_affordable = true;

      std::vector<std::vector<fe_t>> rows;
      rows.reserve(static_cast<std::size_t>(rows_n));
      for (long long e = e_hi; e >= e_lo; --e) {
        std::vector<fe_t> row(cols, 0);
        for (int i = 0; i <= D; ++i)
          for (int j = 0; j <= B; ++j)
            row[static_cast<std::size_t>(i * (B + 1) + j)] =
                xp[static_cast<std::size_t>(i)].coeff_at(e - j);
        rows.push_back(std::move(row));
      }
      for (const std::vector<fe_t>& v : nullspace(F, std::move(rows), cols)) {
        std::vector<Poly> cs = unpack(F, v, D, B);
        if (cs.back().is_zero()) continue;  // really a lower-degree relation
        Laurent r = combine(cs, xp);
        if (visibly_nonzero(r)) continue;  // failed outside the solved rows
        fe_t top = cs.back().lead();
        if (top != 1) {
          fe_t s = F->inv(top);
          for (Poly& c : cs) c = c.scaled(s);
        }
        AlgRelation rel;
        rel.coeffs = std::move(cs);
        rel.deg_bound = B;
        rel.residual_exp = r.unknown_exp();
        rel.found_prec = x.unknown_exp();
        return rel;
      }
    }
  }
  if (!any_affordable)
    throw precision_error("algrec: window cannot overdetermine any system");
  return std::nullopt;
}

bool verify_relation(const AlgRelation& rel, const Laurent& x2) {
  if (rel.coeffs.empty() || rel.coeffs.back().is_zero()) return false;
  const FieldPtr& F = x2.field();
  std::vector<Laurent> xp{Laurent::monomial(F, 0, 1)};
  for (std::size_t i = 1; i < rel.coeffs.size(); ++i)
    xp.push_back(xp.back() * x2);
  return !visibly_nonzero(combine(rel.coeffs, xp));
}

} // namespace qj
