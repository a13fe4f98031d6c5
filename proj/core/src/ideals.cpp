#include "qj/ideals.hpp"

#include <algorithm>
#include <cstdint>

namespace qj {

Order::Order(const QuadUnit& u) : u_(u), F_(u.field()), d_(u.d()) {
  tab_.assign(static_cast<std::size_t>(d_), {});
  for (int i = 1; i < d_; ++i) {
    tab_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(d_), zero());
    for (int j = 1; j < d_; ++j)
      tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          reduce_monomial(2, i + j);
  }
}

RingElem Order::zero() const {
  RingElem r;
  r.rc.assign(static_cast<std::size_t>(d_), Poly::zero(F_));
  return r;
}

RingElem Order::one() const { return monomial(0, 0); }

RingElem Order::monomial(int i, int j, fe_t c) const {
  if (j < 0 || j >= d_ || i < 0 || (i == 0 && j != 0))
    throw domain_error("order: no such monomial");
  RingElem r = zero();
  if (!c) return r;
  if (j == 0)
    r.rc[0] = Poly::monomial(F_, i, c);
  else
    r.rc[static_cast<std::size_t>(j)] = Poly::monomial(F_, i - 1, c);
  return r;
}

RingElem Order::from_rcoords(std::vector<Poly> rc) const {
  if (rc.size() > static_cast<std::size_t>(d_))
    throw domain_error("order: too many coordinates");
  RingElem r = zero();
  for (std::size_t i = 0; i < rc.size(); ++i) r.rc[i] = std::move(rc[i]);
  return r;
}

RingElem Order::add(const RingElem& a, const RingElem& b) const {
  RingElem r = zero();
  for (int j = 0; j < d_; ++j)
    r.rc[static_cast<std::size_t>(j)] =
        a.rc[static_cast<std::size_t>(j)] + b.rc[static_cast<std::size_t>(j)];
  return r;
}

RingElem Order::sub(const RingElem& a, const RingElem& b) const {
  return add(a, neg(b));
}

RingElem Order::neg(const RingElem& a) const {
  RingElem r = a;
  for (Poly& p : r.rc) p = -p;
  return r;
}

RingElem Order::scale(const RingElem& a, fe_t c) const {
  RingElem r = a;
  for (Poly& p : r.rc) p = p.scaled(c);
  return r;
}

RingElem Order::scale_poly(const RingElem& a, const Poly& r) const {
  RingElem out = a;
  for (Poly& p : out.rc) p = p * r;
  return out;
}

RingElem Order::mul(const RingElem& a, const RingElem& b) const {
  RingElem out = zero();
  for (int i = 0; i < d_; ++i) {
    const Poly& ai = a.rc[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < d_; ++j) {
      const Poly& bj = b.rc[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      Poly p = ai * bj;
      if (i == 0)
        out.rc[static_cast<std::size_t>(j)] =
            out.rc[static_cast<std::size_t>(j)] + p;
      else if (j == 0)
        out.rc[static_cast<std::size_t>(i)] =
            out.rc[static_cast<std::size_t>(i)] + p;
      else
        out = add(out, scale_poly(tab_[static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(j)],
                                  p));
    }
  }
  return out;
}

// f^fpow T^tpow rewritten into module coordinates via
// f T^d = f^2 - b - sum_s a_s f T^s.
RingElem Order::reduce_monomial(int fpow, int tpow) const {
  if (tpow < d_) {
    if (fpow == 0) {
      if (tpow != 0)
        throw domain_error("order: bare powers of T are not in the order");
      return one();
    }
    RingElem r = zero();
    if (tpow == 0)
      r.rc[0] = Poly::monomial(F_, fpow);
    else
      r.rc[static_cast<std::size_t>(tpow)] = Poly::monomial(F_, fpow - 1);
    return r;
  }
  if (fpow < 1)
    throw domain_error("order: bare powers of T are not in the order");
  RingElem out = reduce_monomial(fpow + 1, tpow - d_);
  out = sub(out, scale(reduce_monomial(fpow - 1, tpow - d_), u_.b()));
  const Poly& a = u_.a();
  for (int s = 0; s < d_; ++s) {
    fe_t as = a.coeff(s);
    if (!as) continue;
    out = sub(out, scale(reduce_monomial(fpow, tpow - d_ + s), as));
  }
  return out;
}

long long Order::lead_exp(const RingElem& a) const {
  long long best = INT64_MIN;
  for (int j = 0; j < d_; ++j) {
    const Poly& p = a.rc[static_cast<std::size_t>(j)];
    if (p.is_zero()) continue;
    long long e = (j == 0) ? static_cast<long long>(p.deg()) * d_
                           : static_cast<long long>(p.deg() + 1) * d_ + j;
    best = std::max(best, e);
  }
  if (best == INT64_MIN) throw domain_error("order: zero element has no size");
  return best;
}

fe_t Order::lead_coeff(const RingElem& a) const {
  long long L = lead_exp(a);
  for (int j = 0; j < d_; ++j) {
    const Poly& p = a.rc[static_cast<std::size_t>(j)];
    if (p.is_zero()) continue;
    long long e = (j == 0) ? static_cast<long long>(p.deg()) * d_
                           : static_cast<long long>(p.deg() + 1) * d_ + j;
    if (e == L) return p.lead();
  }
  throw consistency_error("order: leading slot vanished");
}

Laurent Order::to_laurent(const RingElem& a) const {
  const Laurent& f = u_.f();
  auto eval_R = [&](const Poly& p) {
    Laurent acc = Laurent::zero(F_);
    for (int k = p.deg(); k >= 0; --k)
      acc = acc * f + Laurent::monomial(F_, 0, p.coeff(k));
    return acc;
  };
  Laurent out = eval_R(a.rc[0]);
  for (int j = 1; j < d_; ++j) {
    const Poly& p = a.rc[static_cast<std::size_t>(j)];
    if (p.is_zero()) continue;
    out = out + (eval_R(p) * f).shifted(j);
  }
  return out;
}

std::pair<Poly, Poly> Order::fpow_T(int i) const {
  Poly u = Poly::constant(F_, 1), v = Poly::zero(F_);
  for (int k = 0; k < i; ++k) {
    Poly u2 = v.scaled(u_.b());
    Poly v2 = u + v * u_.a();
    u = std::move(u2);
    v = std::move(v2);
  }
  return {u, v};
}

std::pair<Poly, Poly> Order::kform(const RingElem& a) const {
  Poly X = Poly::zero(F_), Y = Poly::zero(F_);
  for (int j = 0; j < d_; ++j) {
    const Poly& p = a.rc[static_cast<std::size_t>(j)];
    for (int k = 0; k <= p.deg(); ++k) {
      fe_t c = p.coeff(k);
      if (!c) continue;
      auto [u, v] = fpow_T(j == 0 ? k : k + 1);
      X = X + u.scaled(c).shifted(j);
      Y = Y + v.scaled(c).shifted(j);
    }
  }
  return {X, Y};
}

std::optional<RingElem> Order::from_kform(const Poly& X, const Poly& Y) const {
  if (X.is_zero() && Y.is_zero()) return zero();
  int DX = std::max(X.deg(), 0), DY = std::max(Y.deg(), 0);
  int Imax = std::max({DY / d_ + 1, DX / d_ + 2, 2});
  // columns: the constant, then f^i T^j in (i, j) order
  struct Col {
    int i, j;
    Poly kx, ky;
  };
  std::vector<Col> cols;
  cols.push_back({0, 0, Poly::constant(F_, 1), Poly::zero(F_)});
  int rx = X.deg(), ry = Y.deg();
  for (int i = 1; i <= Imax; ++i) {
    auto [u, v] = fpow_T(i);
    for (int j = 0; j < d_; ++j) {
      Col c{i, j, u.shifted(j), v.shifted(j)};
      rx = std::max(rx, c.kx.deg());
      ry = std::max(ry, c.ky.deg());
      cols.push_back(std::move(c));
    }
  }
  std::size_t nrows = static_cast<std::size_t>(rx + 1 + ry + 1);
  std::size_t ncols = cols.size();
  std::vector<std::vector<fe_t>> M(nrows, std::vector<fe_t>(ncols + 1, 0));
  for (std::size_t c = 0; c < ncols; ++c) {
    for (int k = 0; k <= cols[c].kx.deg(); ++k)
      M[static_cast<std::size_t>(k)][c] = cols[c].kx.coeff(k);
    for (int k = 0; k <= cols[c].ky.deg(); ++k)
      M[static_cast<std::size_t>(rx + 1 + k)][c] = cols[c].ky.coeff(k);
  }
  for (int k = 0; k <= X.deg(); ++k) M[static_cast<std::size_t>(k)][ncols] = X.coeff(k);
  for (int k = 0; k <= Y.deg(); ++k)
    M[static_cast<std::size_t>(rx + 1 + k)][ncols] = Y.coeff(k);

  // gaussian elimination with the augmented column
  std::vector<long long> pivot_of_col(ncols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t sel = r;
    while (sel < nrows && M[sel][c] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(M[r], M[sel]);
    fe_t inv = F_->inv(M[r][c]);
    for (std::size_t j2 = c; j2 <= ncols; ++j2) M[r][j2] = F_->mul(M[r][j2], inv);
    for (std::size_t i2 = 0; i2 < nrows; ++i2) {
      if (i2 == r || M[i2][c] == 0) continue;
      fe_t t = M[i2][c];
      for (std::size_t j2 = c; j2 <= ncols; ++j2)
        M[i2][j2] = F_->sub(M[i2][j2], F_->mul(t, M[r][j2]));
    }
    pivot_of_col[c] = static_cast<long long>(r);
    ++r;
  }
  for (std::size_t i2 = r; i2 < nrows; ++i2)
    if (M[i2][ncols] != 0) return std::nullopt; // inconsistent: not a member
  RingElem out = zero();
  for (std::size_t c = 0; c < ncols; ++c) {
    fe_t val = pivot_of_col[c] < 0
                   ? 0
                   : M[static_cast<std::size_t>(pivot_of_col[c])][ncols];
    if (!val) continue;
    out = add(out, monomial(cols[c].i, cols[c].j, val));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Row = std::vector<Poly>;

Row row_zero(const FieldPtr& F, int d) {
  return Row(static_cast<std::size_t>(d), Poly::zero(F));
}

bool row_is_zero(const Row& r) {
  for (const Poly& p : r)
    if (!p.is_zero()) return false;
  return true;
}

Row row_comb(const Row& r1, const Poly& c1, const Row& r2, const Poly& c2) {
  Row out;
  out.reserve(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i)
    out.push_back(r1[i] * c1 + r2[i] * c2);
  return out;
}

Row row_sub_scaled(const Row& r, const Row& s, const Poly& q) {
  Row out;
  out.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(r[i] - s[i] * q);
  return out;
}

} // namespace

IdealHNF IdealHNF::from_module_gens(const Order& O, std::vector<RingElem> gens) {
  const FieldPtr& F = O.field();
  const int d = O.d();
  std::vector<Row> pool;
  for (RingElem& g : gens) {
    if (g.rc.size() != static_cast<std::size_t>(d))
      throw domain_error("ideal: coordinate vector has wrong rank");
    if (!g.is_zero()) pool.push_back(std::move(g.rc));
  }
  IdealHNF out;
  out.m_.assign(static_cast<std::size_t>(d), row_zero(F, d));
  std::vector<bool> have(static_cast<std::size_t>(d), false);

  for (int col = 0; col < d; ++col) {
    std::size_t c = static_cast<std::size_t>(col);
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!pool[i][c].is_zero()) live.push_back(i);
    while (live.size() >= 2) {
      std::size_t i1 = live[live.size() - 2], i2 = live.back();
      Poly p1 = pool[i1][c], p2 = pool[i2][c];
      Egcd e = egcd(p1, p2);
      Row g = row_comb(pool[i1], e.u, pool[i2], e.v);
      Row z = row_comb(pool[i1], p2 / e.g, pool[i2], -(p1 / e.g));
      pool[i1] = std::move(g);
      pool[i2] = std::move(z);
      live.pop_back();
      if (pool[i1][c].is_zero()) live.pop_back(); // can't happen; stay safe
    }
    if (live.empty()) continue;
    Row piv = pool[live[0]];
    pool[live[0]] = row_zero(F, d);
    fe_t lc = piv[c].lead();
    if (lc != 1) {
      fe_t inv = F->inv(lc);
      for (Poly& p : piv) p = p.scaled(inv);
    }
    out.m_[c] = std::move(piv);
    have[c] = true;
  }
  for (const Row& r : pool)
    if (!row_is_zero(r))
      throw consistency_error("ideal: residue row escaped triangularization");

  // reduce entries above each pivot
  for (int i = 1; i < d; ++i) {
    std::size_t ii = static_cast<std::size_t>(i);
    if (!have[ii]) continue;
    for (int k = 0; k < i; ++k) {
      std::size_t kk = static_cast<std::size_t>(k);
      if (!have[kk]) continue;
      Poly q = out.m_[kk][ii] / out.m_[ii][ii];
      if (!q.is_zero()) out.m_[kk] = row_sub_scaled(out.m_[kk], out.m_[ii], q);
    }
  }
  return out;
}

IdealHNF IdealHNF::from_ideal_gens(const Order& O,
                                   const std::vector<RingElem>& gens) {
  std::vector<RingElem> mod;
  for (const RingElem& g : gens) {
    mod.push_back(g);
    for (int j = 1; j < O.d(); ++j) mod.push_back(O.mul(g, O.monomial(1, j)));
  }
  return from_module_gens(O, std::move(mod));
}

IdealHNF IdealHNF::principal(const Order& O, const RingElem& v) {
  return from_ideal_gens(O, {v});
}

IdealHNF IdealHNF::whole(const Order& O) { return principal(O, O.one()); }

IdealHNF IdealHNF::family(const Order& O, int i) {
  if (i < 0 || i >= O.d()) throw domain_error("ideal: family index out of range");
  std::vector<RingElem> gens;
  for (int s = 0; s <= i; ++s) gens.push_back(O.monomial(1, s));
  return from_ideal_gens(O, gens);
}

IdealHNF IdealHNF::mul(const Order& O, const IdealHNF& other) const {
  std::vector<RingElem> prods;
  for (const RingElem& x : basis(O))
    for (const RingElem& y : other.basis(O)) prods.push_back(O.mul(x, y));
  return from_module_gens(O, std::move(prods));
}

IdealHNF IdealHNF::pow(const Order& O, int e) const {
  if (e < 1) throw domain_error("ideal: power must be >= 1");
  IdealHNF acc = *this;
  for (int k = 1; k < e; ++k) acc = acc.mul(O, *this);
  return acc;
}

long long IdealHNF::idx() const {
  long long s = 0;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i][i].is_zero())
      throw domain_error("ideal: module has rank below d, no finite index");
    s += m_[i][i].deg();
  }
  return s;
}

std::vector<RingElem> IdealHNF::basis(const Order& O) const {
  std::vector<RingElem> out;
  for (const Row& r : m_)
    if (!row_is_zero(r)) out.push_back(O.from_rcoords(r));
  if (out.size() != m_.size())
    throw domain_error("ideal: module has rank below d");
  return out;
}

// ---------------------------------------------------------------------------

std::map<long long, RingElem> lead_slots(const Order& O, const IdealHNF& a,
                                         long long max_lead) {
  if (max_lead < 0) throw domain_error("ideal: max_lead must be >= 0");
  const int d = O.d();
  long long maxdeg = 0;
  for (const auto& row : a.rows())
    for (const Poly& p : row)
      if (!p.is_zero()) maxdeg = std::max(maxdeg, static_cast<long long>(p.deg()));
  // row combinations reaching size <= max_lead have R-coefficients of
  // degree at most max_lead/d + d*maxdeg (triangular back-substitution),
  // so this f-power range provably spans the bounded part
  long long tmax = max_lead / d + d * maxdeg + d + 1;

  std::map<long long, RingElem> slot;
  auto insert = [&](RingElem e) {
    while (!e.is_zero()) {
      long long L = O.lead_exp(e);
      auto it = slot.find(L);
      if (it == slot.end()) {
        slot.emplace(L, O.scale(e, O.field()->inv(O.lead_coeff(e))));
        break;
      }
      e = O.sub(e, O.scale(it->second, O.lead_coeff(e)));
    }
  };
  for (const RingElem& b : a.basis(O)) {
    RingElem cur = b;
    Poly X = Poly::variable(O.field());
    for (long long t = 0; t <= tmax; ++t) {
      insert(cur);
      cur = O.scale_poly(cur, X);
    }
  }
  // completeness audit: the sizes of O skip 1..d-1; the ideal must miss
  // exactly idx(a) further sizes in total
  long long idx = a.idx();
  long long missing = 0;
  for (long long L = 0; L <= max_lead; ++L) {
    if (L >= 1 && L < d) continue;
    if (!slot.count(L)) ++missing;
  }
  if (missing > idx ||
      (max_lead >= d * (idx + 2) && missing != idx))
    throw consistency_error("ideal: size ladder disagrees with the index");
  std::map<long long, RingElem> out;
  for (auto& [L, e] : slot)
    if (L <= max_lead) out.emplace(L, std::move(e));
  return out;
}

RingElem minimal_generator(const Order& O, const IdealHNF& a) {
  auto slots = lead_slots(O, a, O.d() * (a.idx() + 2));
  if (slots.empty())
    throw consistency_error("ideal: no elements found below the index bound");
  return slots.begin()->second;
}

NormalizedBasis normalized_basis(const Order& O, const IdealHNF& a,
                                 std::size_t count) {
  if (count < 2) throw domain_error("ideal: normalized basis needs count >= 2");
  long long idx = a.idx();
  long long max_lead = 2 * idx + 2 * O.d() + static_cast<long long>(count);
  auto slots = lead_slots(O, a, max_lead);
  if (slots.size() < count)
    throw consistency_error("ideal: size ladder shorter than requested");
  NormalizedBasis nb;
  nb.g = slots.begin()->second;
  nb.gen = O.to_laurent(nb.g);
  Laurent ginv = nb.gen.inv();
  long long L0 = slots.begin()->first;
  for (auto& [L, e] : slots) {
    if (nb.elems.size() >= count) break;
    Laurent val = O.to_laurent(e) * ginv;
    if (val.lead_exp() != L - L0 || val.lead_coeff() != 1)
      throw consistency_error("ideal: normalized element has the wrong size");
    nb.leads.push_back(L - L0);
    nb.elems.push_back(std::move(val));
  }
  if (nb.leads[0] != 0)
    throw consistency_error("ideal: normalized ladder must start at size 1");
  nb.alpha1 = nb.leads[1];
  return nb;
}

std::optional<RingElem> principal_generator(const Order& O, const IdealHNF& a) {
  long long L0 = a.idx();
  auto slots = lead_slots(O, a, L0);
  auto top = slots.find(L0);
  if (top == slots.end()) return std::nullopt;
  std::vector<RingElem> lowers;
  for (auto& [L, e] : slots)
    if (L < L0) lowers.push_back(e);
  double combos = 1;
  for (std::size_t i = 0; i < lowers.size(); ++i) combos *= O.field()->q();
  if (combos > 2e5)
    throw resource_error("ideal: principality search space too large");
  auto els = O.field()->elements();
  std::size_t total = static_cast<std::size_t>(combos);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t t = code;
    RingElem v = top->second;
    for (std::size_t i = 0; i < lowers.size(); ++i) {
      fe_t c = els[t % els.size()];
      t /= els.size();
      if (c) v = O.add(v, O.scale(lowers[i], c));
    }
    if (IdealHNF::principal(O, v) == a) return v;
  }
  return std::nullopt;
}

} // namespace qj
