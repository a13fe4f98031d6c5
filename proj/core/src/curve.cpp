#include "qj/curve.hpp"

#include <algorithm>

namespace qj {

namespace {

// p-th root of a polynomial with zero derivative: sum c_{ip} T^{ip}
// becomes sum c_{ip}^(q/p) T^i.
Poly pth_root(const Poly& a) {
  const FieldPtr& F = a.field();
  long long p = F->p();
  long long root_pow = F->q() / p;
  std::vector<fe_t> out;
  for (int i = 0; i * p <= a.deg(); ++i)
    out.push_back(F->pow(a.coeff(static_cast<int>(i * p)), root_pow));
  return Poly(F, std::move(out));
}

} // namespace

Poly radical(const Poly& a) {
  const FieldPtr& F = a.field();
  if (a.is_zero()) throw domain_error("curve: radical of zero");
  if (a.deg() == 0) return Poly::constant(F, 1);
  Poly d = a.derivative();
  if (d.is_zero()) return radical(pth_root(a));
  Poly g = gcd(a, d);
  Poly w = (a / g).monic(); // factors of multiplicity prime to p, each once
  if (g.deg() == 0) return w;
  Poly r = radical(g); // covers every repeated factor
  return w * (r / gcd(r, w));
}

std::vector<fe_t> embedding(const FieldPtr& from, const FieldPtr& into) {
  if (from->p() != into->p())
    throw domain_error("embedding: different characteristics");
  if (into->m() % from->m() != 0)
    throw domain_error("embedding: degree of target is not a multiple");
  std::vector<fe_t> table(from->q());
  if (from->m() == 1) {
    // prime subfield: constants have the same codes
    for (fe_t c = 0; c < from->q(); ++c) table[c] = c;
    return table;
  }
  if (from->same(*into)) {
    for (std::size_t c = 0; c < table.size(); ++c)
      table[c] = static_cast<fe_t>(c);
    return table;
  }
  // scan for a root of the source modulus; modulus digits are prime-field
  // codes, valid in the target as-is
  const auto& mod = from->modulus();
  fe_t root = 0;
  bool found = false;
  for (fe_t x : into->elements()) {
    fe_t acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;)
      acc = into->add(into->mul(acc, x), static_cast<fe_t>(mod[i]));
    if (acc == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw consistency_error("embedding: modulus has no root");
  for (fe_t c = 0; c < from->q(); ++c) {
    fe_t acc = 0, pw = 1, rest = c;
    for (std::uint32_t i = 0; i < from->m(); ++i) {
      fe_t digit = rest % from->p();
      rest /= from->p();
      acc = into->add(acc, into->mul(digit, pw));
      pw = into->mul(pw, root);
    }
    table[c] = acc;
  }
  return table;
}

namespace {

Poly map_poly(const Poly& a, const FieldPtr& into, const std::vector<fe_t>& emb) {
  std::vector<fe_t> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = emb[a.coeffs()[i]];
  return Poly(into, std::move(c));
}

// coefficients of a(t0 + pi) in ascending powers of pi
std::vector<fe_t> taylor_shift(const FieldPtr& F, const Poly& a, fe_t t0) {
  Poly x_plus = Poly(F, {t0, 1});
  Poly res = Poly::zero(F);
  for (int k = a.deg(); k >= 0; --k)
    res = res * x_plus + Poly::constant(F, a.coeff(k));
  std::vector<fe_t> out(static_cast<std::size_t>(a.deg() + 1), 0);
  for (int i = 0; i <= res.deg(); ++i) out[static_cast<std::size_t>(i)] = res.coeff(i);
  return out;
}

// local study of g = c / a at T = t0 in characteristic 2: reduce the pole
// modulo w^2 + w until its order is odd (ramified) or zero (then report
// the settled value for the trace test)
struct LocalAS {
  int s;      // reduced pole order: odd, or 0
  fe_t value; // meaningful only when s == 0
};

LocalAS as_local(const FieldPtr& E, const Poly& aE, fe_t c, fe_t t0) {
  std::vector<fe_t> A = taylor_shift(E, aE, t0);
  std::size_t e = 0;
  while (e < A.size() && A[e] == 0) ++e;
  if (e == A.size()) throw consistency_error("curve: zero denominator");
  if (e == 0) return {0, E->mul(c, E->inv(A[0]))};
  // series inverse of A / pi^e through pi^e
  std::vector<fe_t> u(A.begin() + static_cast<long>(e), A.end());
  u.resize(e + 1, 0);
  std::vector<fe_t> w(e + 1, 0);
  w[0] = E->inv(u[0]);
  for (std::size_t k = 1; k <= e; ++k) {
    fe_t s = 0;
    for (std::size_t i = 1; i <= k; ++i)
      s = E->add(s, E->mul(u[i], w[k - i]));
    w[k] = E->neg(E->mul(w[0], s));
  }
  // gamma[k] is the coefficient of pi^(k - e) of g
  std::vector<fe_t> gamma(e + 1);
  for (std::size_t k = 0; k <= e; ++k) gamma[k] = E->mul(c, w[k]);
  std::size_t s = e;
  while (s > 0) {
    if (gamma[e - s] == 0) {
      --s;
      continue;
    }
    if (s % 2 == 1) return {static_cast<int>(s), 0};
    gamma[e - s / 2] = E->add(gamma[e - s / 2], E->sqrt(gamma[e - s]));
    gamma[e - s] = 0;
  }
  return {0, gamma[e]};
}

fe_t abs_trace(const FieldPtr& E, fe_t v) {
  fe_t acc = 0, x = v;
  for (std::uint32_t i = 0; i < E->m(); ++i) {
    acc = E->add(acc, x);
    x = E->pow(x, E->p());
  }
  return acc;
}

// monic irreducible factors with multiplicities, by minimal-divisor scans
std::vector<std::pair<Poly, int>> factor_monic(Poly a) {
  const FieldPtr& F = a.field();
  std::vector<std::pair<Poly, int>> out;
  a = a.monic();
  long long budget = 2'000'000;
  while (a.deg() >= 1) {
    Poly found = Poly::zero(F);
    for (int n = 1; n <= a.deg() && found.is_zero(); ++n) {
      long long total = 1;
      for (int i = 0; i < n; ++i) total *= F->q();
      if ((budget -= total) < 0)
        throw resource_error("curve: factoring budget exhausted");
      for (long long code = 0; code < total; ++code) {
        std::vector<fe_t> c(static_cast<std::size_t>(n) + 1, 0);
        long long rest = code;
        for (int i = 0; i < n; ++i) {
          c[static_cast<std::size_t>(i)] = static_cast<fe_t>(rest % F->q());
          rest /= F->q();
        }
        c.back() = 1;
        Poly p(F, std::move(c));
        if (p.divides(a)) {
          found = p;
          break;
        }
      }
    }
    if (found.is_zero())
      throw consistency_error("curve: no divisor found below full degree");
    int mult = 0;
    while (found.divides(a)) {
      a = a / found;
      ++mult;
    }
    out.emplace_back(found, mult);
  }
  return out;
}

int char2_genus(const QuadUnit& u) {
  const FieldPtr& F = u.field();
  fe_t c = F->sqrt(u.b());
  long long total = 0; // sum of (s_P + 1) deg P over ramified places
  for (auto& [P, e] : factor_monic(u.a())) {
    int s;
    if (e % 2 == 1) {
      s = e; // odd pole orders are already reduced
    } else {
      if (P.deg() != 1)
        throw resource_error(
            "curve: wild place of higher degree needs an unsupported local expansion");
      fe_t t0 = P.coeff(0); // root of T + p0
      s = as_local(F, u.a(), c, t0).s;
    }
    if (s % 2 == 1) total += static_cast<long long>(s + 1) * P.deg();
  }
  // Riemann-Hurwitz for the degree-2 cover of the line
  if (total < 2 || total % 2 != 0)
    throw consistency_error("curve: ramification does not fit a quadratic cover");
  return static_cast<int>(total / 2 - 1);
}

} // namespace

CurveData curve_model(const QuadUnit& u) {
  const FieldPtr& F = u.field();
  CurveData cd;
  if (F->p() == 2) {
    cd.char2 = true;
    cd.model = u.a();
    cd.degenerate = !is_squarefree(u.a());
    cd.genus = char2_genus(u);
  } else {
    Poly D = u.a() * u.a() + Poly::constant(F, F->mul(F->from_int(4), u.b()));
    Poly S = radical(D);
    cd.model = S;
    cd.degenerate = (S != D);
    cd.genus = (S.deg() - 1) / 2;
  }
  return cd;
}

long long count_points(const QuadUnit& u, int r) {
  if (r < 1) throw domain_error("curve: extension degree must be >= 1");
  const FieldPtr& F = u.field();
  double sz = 1;
  for (std::uint32_t i = 0; i < F->m() * static_cast<std::uint32_t>(r); ++i)
    sz *= F->p();
  if (sz > double(1 << 22))
    throw resource_error("curve: extension field too large to enumerate");
  CurveData cd = curve_model(u);
  FieldPtr E = (r == 1) ? F : Field::make(F->p(), F->m() * static_cast<std::uint32_t>(r));
  std::vector<fe_t> emb = embedding(F, E);

  long long n = 0;
  if (!cd.char2) {
    Poly S = map_poly(cd.model, E, emb);
    for (fe_t t0 : E->elements()) {
      fe_t v = S.eval(t0);
      if (v == 0)
        n += 1;
      else if (E->is_square(v))
        n += 2;
    }
    n += (cd.model.deg() % 2 == 0) ? 2 : 1; // monic leading coefficient
  } else {
    Poly aE = map_poly(u.a(), E, emb);
    fe_t c = E->sqrt(emb[u.b()]);
    for (fe_t t0 : E->elements()) {
      LocalAS loc = as_local(E, aE, c, t0);
      if (loc.s > 0)
        n += 1; // ramified
      else if (abs_trace(E, loc.value) == 0)
        n += 2; // split
    }
    n += 2; // sqrt(b)/a vanishes at infinity, a split place
  }
  return n;
}

ClassNumbers class_numbers(const QuadUnit& u) {
  ClassNumbers out;
  out.curve = curve_model(u);
  const int g = out.curve.genus;
  long long q = u.field()->q();

  std::vector<long long> psum(static_cast<std::size_t>(g) + 1, 0);
  long long qr = 1;
  for (int r = 1; r <= g; ++r) {
    qr *= q;
    long long Nr = count_points(u, r);
    out.N.push_back(Nr);
    psum[static_cast<std::size_t>(r)] = qr + 1 - Nr;
  }

  // Newton's identities for the elementary symmetric functions of the
  // Frobenius eigenvalues, then the functional equation for the top half
  std::vector<long long> e(static_cast<std::size_t>(g) + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    long long s = 0, sign = 1;
    for (int i = 1; i <= k; ++i) {
      s += sign * e[static_cast<std::size_t>(k - i)] * psum[static_cast<std::size_t>(i)];
      sign = -sign;
    }
    if (s % k != 0)
      throw consistency_error("curve: Newton identities gave a fractional coefficient");
    e[static_cast<std::size_t>(k)] = s / k;
  }
  out.L.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  long long sign = 1;
  for (int i = 0; i <= g; ++i) {
    out.L[static_cast<std::size_t>(i)] = sign * e[static_cast<std::size_t>(i)];
    sign = -sign;
  }
  long long qpow = 1;
  for (int i = g - 1; i >= 0; --i) {
    qpow *= q;
    out.L[static_cast<std::size_t>(2 * g - i)] = qpow * out.L[static_cast<std::size_t>(i)];
  }
  out.h_K = 0;
  for (long long c : out.L) out.h_K += c;
  if (out.h_K < 1) throw consistency_error("curve: class number must be positive");

  if (out.h_K % u.d() == 0)
    out.h_O = out.h_K / u.d();
  else if (!out.curve.degenerate)
    throw consistency_error("curve: class number not divisible by the unit degree");
  return out;
}

} // namespace qj
