#include "qj/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qj {

namespace {
long long floordiv2(long long u) { return u >= 0 ? u / 2 : -((-u + 1) / 2); }

long long mul_exp_checked(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > INT64_MAX / 4 || r < INT64_MIN / 4)
    throw resource_error("laurent: exponent overflow in Frobenius power");
  return static_cast<long long>(r);
}
} // namespace

std::string AbsValue::to_string() const {
  if (zero) return "0";
  return "q^" + std::to_string(e);
}

Laurent Laurent::zero(FieldPtr F) {
  Laurent r;
  r.F_ = std::move(F);
  return r;
}

Laurent Laurent::zero_to_prec(FieldPtr F, long long unknown) {
  Laurent r;
  r.F_ = std::move(F);
  r.unknown_ = unknown;
  return r;
}

Laurent Laurent::monomial(FieldPtr F, long long e, fe_t c) {
  Laurent r;
  r.F_ = std::move(F);
  if (c) {
    r.lead_ = e;
    r.c_ = {c};
  }
  return r;
}

Laurent Laurent::from_poly(const Poly& a) {
  Laurent r;
  r.F_ = a.field();
  if (a.is_zero()) return r;
  int d = a.deg();
  r.lead_ = d;
  r.c_.resize(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) r.c_[static_cast<std::size_t>(i)] = a.coeff(d - i);
  r.normalize();
  return r;
}

Laurent Laurent::window(FieldPtr F, long long lead, std::vector<fe_t> coeffs,
                        long long unknown) {
  Laurent r;
  r.F_ = std::move(F);
  r.lead_ = lead;
  r.c_ = std::move(coeffs);
  r.unknown_ = unknown;
  if (unknown != kExact) {
    long long want = lead - unknown;
    if (want <= 0) {
      r.c_.clear();
      r.lead_ = 0;
      return r;
    }
    r.c_.resize(static_cast<std::size_t>(want), 0);
  }
  r.normalize();
  return r;
}

void Laurent::normalize() {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k == c_.size()) {
    c_.clear();
    lead_ = 0;
    return;
  }
  if (k) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    lead_ -= static_cast<long long>(k);
  }
  if (is_exact()) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
}

long long Laurent::lead_exp() const {
  if (c_.empty()) throw domain_error("laurent: no leading term");
  return lead_;
}

fe_t Laurent::lead_coeff() const {
  if (c_.empty()) throw domain_error("laurent: no leading term");
  return c_[0];
}

long long Laurent::prec() const {
  if (is_exact()) return INT64_MAX / 2;
  if (c_.empty()) return 0;
  return lead_ - unknown_;
}

AbsValue Laurent::abs() const {
  if (!c_.empty()) return AbsValue::pw(lead_);
  if (is_exact()) return AbsValue::null();
  throw precision_error("laurent: |x| undecidable (zero to precision q^" +
                        std::to_string(unknown_) + ")");
}

AbsValue Laurent::abs_bound() const {
  if (!c_.empty()) return AbsValue::pw(lead_);
  if (is_exact()) return AbsValue::null();
  return AbsValue::pw(unknown_);
}

fe_t Laurent::coeff_at(long long e) const {
  if (!coeff_known(e))
    throw precision_error("laurent: coefficient at T^" + std::to_string(e) +
                          " beyond known window");
  if (c_.empty() || e > lead_) return 0;
  long long i = lead_ - e;
  if (i >= static_cast<long long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero_exact()) return o;
  if (o.is_zero_exact()) return *this;
  long long u = std::max(unknown_, o.unknown_); // kExact is INT64_MIN
  bool have_terms = !c_.empty() || !o.c_.empty();
  if (!have_terms) return zero_to_prec(F_, u);

  long long hi = INT64_MIN;
  if (!c_.empty()) hi = std::max(hi, lead_);
  if (!o.c_.empty()) hi = std::max(hi, o.lead_);
  long long lo;
  if (u == kExact) {
    lo = INT64_MAX;
    if (!c_.empty()) lo = std::min(lo, lead_ - static_cast<long long>(c_.size()) + 1);
    if (!o.c_.empty())
      lo = std::min(lo, o.lead_ - static_cast<long long>(o.c_.size()) + 1);
  } else {
    lo = u + 1;
  }
  Laurent r;
  r.F_ = F_;
  r.unknown_ = u;
  if (hi < lo) return zero_to_prec(F_, u);
  r.lead_ = hi;
  r.c_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
  auto get = [](const Laurent& x, long long e) -> fe_t {
    if (x.c_.empty() || e > x.lead_) return 0;
    long long i = x.lead_ - e;
    if (i >= static_cast<long long>(x.c_.size())) return 0;
    return x.c_[static_cast<std::size_t>(i)];
  };
  for (long long e = hi; e >= lo; --e)
    r.c_[static_cast<std::size_t>(hi - e)] = F_->add(get(*this, e), get(o, e));
  r.normalize();
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero_exact() || o.is_zero_exact()) return zero(F_);
  if (c_.empty() || o.c_.empty()) {
    long long ex = c_.empty() ? unknown_ : lead_;
    long long ey = o.c_.empty() ? o.unknown_ : o.lead_;
    return zero_to_prec(F_, ex + ey);
  }
  long long lead_r = lead_ + o.lead_;
  long long u = kExact;
  if (!is_exact()) u = std::max(u, unknown_ + o.lead_);
  if (!o.is_exact()) u = std::max(u, o.unknown_ + lead_);
  std::size_t n;
  if (u == kExact)
    n = c_.size() + o.c_.size() - 1;
  else
    n = static_cast<std::size_t>(lead_r - u);
  Laurent r;
  r.F_ = F_;
  r.lead_ = lead_r;
  r.unknown_ = u;
  r.c_.assign(n, 0);
  for (std::size_t i = 0; i < c_.size() && i < n; ++i) {
    if (!c_[i]) continue;
    std::size_t jmax = std::min(o.c_.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j)
      r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
  }
  r.normalize();
  return r;
}

Laurent Laurent::scaled(fe_t c) const {
  if (!c) return zero(F_);
  Laurent r = *this;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

Laurent Laurent::shifted(long long e) const {
  Laurent r = *this;
  if (!r.c_.empty()) r.lead_ += e;
  if (r.unknown_ != kExact) r.unknown_ += e;
  return r;
}

Laurent Laurent::inv(long long prec_hint) const {
  if (c_.empty()) {
    if (is_exact()) throw domain_error("laurent: inverse of zero");
    throw precision_error("laurent: inverse of a value not distinguishable from zero");
  }
  if (is_exact() && c_.size() == 1)
    return monomial(F_, -lead_, F_->inv(c_[0]));
  long long W;
  if (is_exact()) {
    if (prec_hint <= 0)
      throw precision_error("laurent: inverse of exact value needs prec_hint");
    W = prec_hint;
  } else {
    W = lead_ - unknown_;
    if (prec_hint > 0) W = std::min(W, prec_hint);
  }
  fe_t a0i = F_->inv(c_[0]);
  std::vector<fe_t> b(static_cast<std::size_t>(W), 0);
  b[0] = a0i;
  for (long long k = 1; k < W; ++k) {
    fe_t s = 0;
    long long imax = std::min<long long>(k, static_cast<long long>(c_.size()) - 1);
    for (long long i = 1; i <= imax; ++i)
      s = F_->add(s, F_->mul(c_[static_cast<std::size_t>(i)],
                             b[static_cast<std::size_t>(k - i)]));
    b[static_cast<std::size_t>(k)] = F_->neg(F_->mul(a0i, s));
  }
  Laurent r;
  r.F_ = F_;
  r.lead_ = -lead_;
  r.unknown_ = -lead_ - W;
  r.c_ = std::move(b);
  r.normalize();
  return r;
}

Laurent Laurent::sqrt(long long prec_hint) const {
  if (c_.empty()) {
    if (is_exact()) return zero(F_);
    throw precision_error("laurent: sqrt of a value not distinguishable from zero");
  }
  if (lead_ % 2 != 0)
    throw domain_error("laurent: sqrt of odd-valuation value does not exist");
  if (is_exact() && c_.size() == 1) {
    if (!F_->is_square(c_[0]))
      throw domain_error("laurent: leading coefficient is not a square");
    return monomial(F_, lead_ / 2, F_->sqrt(c_[0]));
  }
  if (F_->p() == 2) {
    // squaring is injective in char 2; a root exists iff all odd-exponent
    // coefficients vanish, and then it is unique and cheap
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long long e = lead_ - static_cast<long long>(i);
      if (e % 2 != 0 && c_[i] != 0)
        throw domain_error("laurent: sqrt does not exist in F_q((1/T)) (odd-exponent term)");
    }
    Laurent r;
    r.F_ = F_;
    r.lead_ = lead_ / 2;
    long long u_r = is_exact() ? kExact : floordiv2(unknown_);
    r.unknown_ = u_r;
    long long lo = is_exact()
                       ? floordiv2(lead_ - static_cast<long long>(c_.size()) + 1) - 1
                       : u_r;
    r.c_.assign(static_cast<std::size_t>(r.lead_ - lo), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long long e = lead_ - static_cast<long long>(i);
      if (e % 2 != 0 || !c_[i]) continue;
      long long s = e / 2;
      if (s <= lo) continue;
      r.c_[static_cast<std::size_t>(r.lead_ - s)] = F_->sqrt(c_[i]);
    }
    r.normalize();
    return r;
  }
  if (!F_->is_square(c_[0]))
    throw domain_error("laurent: leading coefficient is not a square");
  long long W;
  if (is_exact()) {
    if (prec_hint <= 0)
      throw precision_error("laurent: sqrt of exact value needs prec_hint");
    W = prec_hint;
  } else {
    W = lead_ - unknown_;
    if (prec_hint > 0) W = std::min(W, prec_hint);
  }
  std::vector<fe_t> b(static_cast<std::size_t>(W), 0);
  b[0] = F_->sqrt(c_[0]); // canonical branch: even discrete log
  fe_t inv2b0 = F_->inv(F_->mul(F_->from_int(2), b[0]));
  for (long long k = 1; k < W; ++k) {
    fe_t ak = k < static_cast<long long>(c_.size()) ? c_[static_cast<std::size_t>(k)] : 0;
    fe_t s = 0;
    for (long long i = 1; i < k; ++i)
      s = F_->add(s, F_->mul(b[static_cast<std::size_t>(i)],
                             b[static_cast<std::size_t>(k - i)]));
    b[static_cast<std::size_t>(k)] = F_->mul(F_->sub(ak, s), inv2b0);
  }
  Laurent r;
  r.F_ = F_;
  r.lead_ = lead_ / 2;
  r.unknown_ = r.lead_ - W;
  r.c_ = std::move(b);
  r.normalize();
  return r;
}

Laurent Laurent::frobenius_pow(std::uint32_t s, long long cap) const {
  if (cap <= 0) throw domain_error("laurent: frobenius_pow needs a positive cap");
  if (is_zero_exact()) return zero(F_);
  long long pw = 1;
  for (std::uint32_t i = 0; i < s; ++i) pw = mul_exp_checked(pw, F_->p());
  if (c_.empty()) return zero_to_prec(F_, mul_exp_checked(unknown_, pw));
  long long lead_r = mul_exp_checked(lead_, pw);
  long long u_true =
      is_exact() ? kExact : mul_exp_checked(unknown_, pw);
  long long span = mul_exp_checked(static_cast<long long>(c_.size()) - 1, pw) + 1;
  long long u_r;
  if (is_exact() && span <= cap)
    u_r = kExact;
  else
    u_r = std::max(u_true == kExact ? lead_r - cap : u_true, lead_r - cap);
  Laurent r;
  r.F_ = F_;
  r.lead_ = lead_r;
  r.unknown_ = u_r;
  long long len = (u_r == kExact) ? span : lead_r - u_r;
  r.c_.assign(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    long long e = mul_exp_checked(lead_ - static_cast<long long>(i), pw);
    if (u_r != kExact && e <= u_r) continue;
    r.c_[static_cast<std::size_t>(lead_r - e)] = F_->frobenius(c_[i], s);
  }
  r.normalize();
  return r;
}

Laurent Laurent::pow_int(std::uint32_t n) const {
  Laurent r = monomial(F_, 0, 1);
  Laurent base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Laurent Laurent::truncated(long long window) const {
  if (window <= 0) throw domain_error("laurent: truncation window must be positive");
  if (c_.empty()) return *this;
  long long cur = is_exact() ? static_cast<long long>(c_.size()) : lead_ - unknown_;
  if (is_exact() && static_cast<long long>(c_.size()) <= window) return *this;
  if (!is_exact() && cur <= window) return *this;
  Laurent r;
  r.F_ = F_;
  r.lead_ = lead_;
  r.unknown_ = lead_ - window;
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(window));
  r.normalize();
  return r;
}

std::pair<Poly, AbsValue> Laurent::nearest_poly() const {
  if (is_zero_exact()) return {Poly::zero(F_), AbsValue::null()};
  if (c_.empty())
    throw precision_error("laurent: nearest polynomial distance undetermined");
  if (!is_exact() && unknown_ >= 0)
    throw precision_error("laurent: window does not cover all polynomial coefficients");
  Poly p = Poly::zero(F_);
  if (lead_ >= 0) {
    std::vector<fe_t> pc(static_cast<std::size_t>(lead_) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long long e = lead_ - static_cast<long long>(i);
      if (e < 0) break;
      pc[static_cast<std::size_t>(e)] = c_[i];
    }
    p = Poly(F_, std::move(pc));
  }
  // leading fractional coefficient
  for (std::size_t i = 0; i < c_.size(); ++i) {
    long long e = lead_ - static_cast<long long>(i);
    if (e >= 0) continue;
    if (c_[i]) return {p, AbsValue::pw(e)};
  }
  if (is_exact()) return {p, AbsValue::null()};
  throw precision_error("laurent: fractional tail vanishes to precision; distance undetermined");
}

bool Laurent::frac_vanishes_through(long long e) const {
  if (e < 1) throw domain_error("laurent: frac_vanishes_through needs e >= 1");
  if (!is_exact() && unknown_ >= -e)
    throw precision_error("laurent: window does not reach exponent -" + std::to_string(e));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    long long ex = lead_ - static_cast<long long>(i);
    if (ex >= 0) continue;
    if (ex < -e) break;
    if (c_[i]) return false;
  }
  return true;
}

std::string Laurent::to_canonical() const {
  if (is_zero_exact()) return "0";
  if (c_.empty()) return "0:O(T^" + std::to_string(unknown_) + ")";
  std::ostringstream os;
  os << "T^" << lead_ << ":[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << F_->to_string(c_[i]);
  }
  os << "]:prec=" << c_.size();
  return os.str();
}

Laurent Laurent::parse_canonical(FieldPtr F, const std::string& s) {
  if (s == "0") return zero(F);
  if (s.rfind("0:O(T^", 0) == 0) {
    std::string num = s.substr(6, s.size() - 7);
    return zero_to_prec(F, std::stoll(num));
  }
  if (s.rfind("T^", 0) != 0) throw domain_error("laurent: bad serialized form");
  std::size_t colon = s.find(':');
  long long lead = std::stoll(s.substr(2, colon - 2));
  std::size_t lb = s.find('[', colon), rb = s.find(']', colon);
  std::vector<fe_t> coeffs;
  std::string body = s.substr(lb + 1, rb - lb - 1);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.push_back(F->parse(tok));
  std::size_t pq = s.find("prec=", rb);
  long long P = std::stoll(s.substr(pq + 5));
  return window(F, lead, std::move(coeffs), lead - P);
}

} // namespace qj
