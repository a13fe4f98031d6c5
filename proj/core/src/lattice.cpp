#include "qj/lattice.hpp"

#include <algorithm>
#include <map>

namespace qj {

namespace {

// Kernel of an r x c matrix over F_q (rows are constraint vectors).
std::vector<std::vector<fe_t>> kernel_basis(const FieldPtr& F,
                                            std::vector<std::vector<fe_t>> M,
                                            std::size_t cols) {
  std::size_t rows = M.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && M[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[r], M[sel]);
    fe_t inv = F->inv(M[r][c]);
    for (std::size_t j = c; j < cols; ++j) M[r][j] = F->mul(M[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      fe_t t = M[i][c];
      for (std::size_t j = c; j < cols; ++j)
        M[i][j] = F->sub(M[i][j], F->mul(t, M[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<fe_t>> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<fe_t> v(cols, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = F->neg(M[i][c]);
    out.push_back(std::move(v));
  }
  return out;
}

void split_e(const QuadUnit& u, long long e, int& N, int& l) {
  if (e < 1) throw domain_error("lattice: need e >= 1");
  N = static_cast<int>(e / u.d());
  l = static_cast<int>(e % u.d());
}

} // namespace

std::vector<Poly> degree_echelon(std::vector<Poly> gens) {
  std::map<int, Poly> slot;
  for (Poly g : gens) {
    while (!g.is_zero()) {
      auto it = slot.find(g.deg());
      if (it == slot.end()) {
        slot.emplace(g.deg(), g.monic());
        break;
      }
      g = g - it->second.scaled(g.lead());
    }
  }
  // back-substitution, lowest degree first, so each generator has zero
  // coefficient at every other generator's degree
  std::vector<Poly> out;
  for (auto& [deg, g] : slot) {
    Poly r = g;
    for (const Poly& lower : out) r = r - lower.scaled(r.coeff(lower.deg()));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Poly> lam_bruteforce(const QuadUnit& u, long long e, int deg_bound) {
  return lam_bruteforce(u.f(), e, deg_bound);
}

std::vector<Poly> lam_bruteforce(const Laurent& f, long long e, int deg_bound) {
  if (e < 1) throw domain_error("lattice: need e >= 1");
  if (deg_bound < 0) throw domain_error("lattice: need deg_bound >= 0");
  const FieldPtr& F = f.field();
  std::size_t cols = static_cast<std::size_t>(deg_bound) + 1;
  // row r: coefficient of T^-(r+1) in T^c f, i.e. f's coefficient at
  // exponent -(r+1)-c; coeff_at throws if the window is too small
  std::vector<std::vector<fe_t>> M(static_cast<std::size_t>(e),
                                   std::vector<fe_t>(cols, 0));
  for (long long r = 0; r < e; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      M[static_cast<std::size_t>(r)][c] =
          f.coeff_at(-(r + 1) - static_cast<long long>(c));
  std::vector<Poly> gens;
  for (auto& v : kernel_basis(F, std::move(M), cols))
    gens.push_back(Poly(F, std::move(v)));
  return degree_echelon(std::move(gens));
}

std::vector<Poly> lam_structural(const QuadUnit& u, long long e, int deg_bound) {
  int N, l;
  split_e(u, e, N, l);
  const int d = u.d();
  std::vector<Poly> gens;
  for (int n = N; static_cast<long long>(n) * d <= deg_bound; ++n) {
    int jmax = (n == N) ? (d - 1 - l) : (d - 1);
    for (int j = 0; j <= jmax; ++j) {
      if (static_cast<long long>(n) * d + j > deg_bound) break;
      gens.push_back(u.Q(static_cast<std::size_t>(n)).shifted(j));
    }
  }
  return degree_echelon(std::move(gens));
}

std::vector<Laurent> triangular_basis(std::vector<Laurent> gens) {
  std::map<long long, Laurent> slot;
  for (Laurent g : gens) {
    while (g.distinguishable() && !g.is_zero_exact()) {
      long long le = g.lead_exp();
      auto it = slot.find(le);
      if (it == slot.end()) {
        slot.emplace(le, g.scaled(g.field()->inv(g.lead_coeff())));
        break;
      }
      g = g - it->second.scaled(g.lead_coeff());
    }
  }
  std::vector<Laurent> out;
  for (auto it = slot.rbegin(); it != slot.rend(); ++it)
    out.push_back(std::move(it->second));
  return out;
}

Laurent reduce_against(Laurent x, const std::vector<Laurent>& tri) {
  while (x.distinguishable() && !x.is_zero_exact()) {
    long long le = x.lead_exp();
    const Laurent* match = nullptr;
    for (const Laurent& t : tri)
      if (t.lead_exp() == le) {
        match = &t;
        break;
      }
    if (!match) break;
    x = x - match->scaled(x.lead_coeff());
  }
  return x;
}

std::vector<RenormGen> renorm_basis(const QuadUnit& u, int N, int l, int nmax) {
  const int d = u.d();
  if (N < 0 || l < 0 || l >= d) throw domain_error("lattice: bad (N, l)");
  if (nmax < N) throw domain_error("lattice: nmax must reach the base block");
  Laurent scale = u.sqrtD();
  if (N > 0) scale = scale * u.f().inv().pow_int(static_cast<std::uint32_t>(N));
  std::vector<RenormGen> out;
  for (int n = N; n <= nmax; ++n) {
    int jmax = (n == N) ? (d - 1 - l) : (d - 1);
    Laurent base = scale * Laurent::from_poly(u.Q(static_cast<std::size_t>(n)));
    Laurent tgt = u.f().pow_int(static_cast<std::uint32_t>(n - N + 1));
    for (int j = 0; j <= jmax; ++j) {
      RenormGen g;
      g.n = n;
      g.j = j;
      g.val = base.shifted(j);
      g.target = tgt.shifted(j);
      g.dist = (g.val - g.target).abs();
      long long expect = j - static_cast<long long>(n + 1 + N) * d;
      if (g.dist != AbsValue::pw(expect))
        throw consistency_error("lattice: rescaled generator misses its target law");
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Laurent> ideal_model_basis(const QuadUnit& u, int l, int imax) {
  const int d = u.d();
  if (l < 0 || l >= d) throw domain_error("lattice: bad l");
  if (imax < 1) throw domain_error("lattice: need imax >= 1");
  std::vector<Laurent> out;
  for (int i = 1; i <= imax; ++i) {
    int jmax = (i == 1) ? (d - 1 - l) : (d - 1);
    Laurent fi = u.f().pow_int(static_cast<std::uint32_t>(i));
    for (int j = 0; j <= jmax; ++j) out.push_back(fi.shifted(j));
  }
  return out;
}

AbsValue hausdorff_bound(const std::vector<Laurent>& A,
                         const std::vector<Laurent>& B) {
  AbsValue worst = AbsValue::null();
  auto side = [&worst](const std::vector<Laurent>& gens,
                       const std::vector<Laurent>& other) {
    std::vector<Laurent> tri = triangular_basis(other);
    for (const Laurent& g : gens) {
      AbsValue r = reduce_against(g, tri).abs_bound();
      if (worst < r) worst = r;
    }
  };
  side(A, B);
  side(B, A);
  return worst;
}

ShiftCheck approx_action_check(const QuadUnit& u, int N, int l,
                               const Laurent& alpha, int nmax) {
  const int d = u.d();
  if (!alpha.distinguishable() || alpha.is_zero_exact())
    throw domain_error("lattice: alpha must be distinguishable from zero");
  auto gens = renorm_basis(u, N, l, nmax);
  std::vector<Laurent> raw;
  raw.reserve(gens.size());
  long long top = INT64_MIN;
  for (const auto& g : gens) {
    raw.push_back(g.val);
    top = std::max(top, g.val.lead_exp());
  }
  std::vector<Laurent> tri = triangular_basis(raw);

  ShiftCheck out;
  const long long delta_exp = -(2LL * N * d + l);
  out.allowed = AbsValue::pw(alpha.lead_exp() + delta_exp);
  out.worst = AbsValue::null();
  for (const auto& g : gens) {
    // products that leave the spanned degree range cannot be reduced by a
    // finite basis; skip them rather than report a phantom failure
    if (g.val.lead_exp() + alpha.lead_exp() > top) continue;
    Laurent r = reduce_against(alpha * g.val, tri);
    AbsValue b = r.abs_bound();
    if (out.worst < b) out.worst = b;
    ++out.tested;
  }
  out.ok = out.tested > 0 && out.worst <= out.allowed;
  return out;
}

} // namespace qj
