#include "qj/poly.hpp"

#include <sstream>

namespace qj {

Poly::Poly(FieldPtr F, std::vector<fe_t> coeffs)
    : F_(std::move(F)), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr F, fe_t c) {
  Poly r(std::move(F));
  if (c) r.c_ = {c};
  return r;
}

Poly Poly::variable(FieldPtr F) { return monomial(std::move(F), 1); }

Poly Poly::monomial(FieldPtr F, int deg, fe_t c) {
  Poly r(std::move(F));
  if (c) {
    r.c_.assign(static_cast<std::size_t>(deg) + 1, 0);
    r.c_.back() = c;
  }
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(F_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = F_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(F_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->neg(c_[i]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(F_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
  }
  return r;
}

Poly Poly::scaled(fe_t c) const {
  Poly r(F_);
  if (!c) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->mul(c_[i], c);
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  Poly r(F_);
  r.c_.assign(c_.size() + static_cast<std::size_t>(k), 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) throw domain_error("poly: cannot make zero monic");
  return scaled(F_->inv(lead()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw domain_error("poly: division by zero");
  Poly q(F_), r = *this;
  if (deg() < d.deg()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(deg() - d.deg()) + 1, 0);
  fe_t dlinv = F_->inv(d.lead());
  while (!r.is_zero() && r.deg() >= d.deg()) {
    int k = r.deg() - d.deg();
    fe_t c = F_->mul(r.lead(), dlinv);
    q.c_[k] = c;
    // r -= c * X^k * d
    for (int i = 0; i <= d.deg(); ++i)
      r.c_[k + i] = F_->sub(r.c_[k + i], F_->mul(c, d.c_[i]));
    r.trim();
  }
  q.trim();
  return {q, r};
}

bool Poly::divides(const Poly& multiple) const {
  if (is_zero()) return multiple.is_zero();
  return multiple.divmod(*this).second.is_zero();
}

Poly Poly::derivative() const {
  Poly r(F_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = F_->mul(c_[i], F_->from_int(static_cast<std::int64_t>(i)));
  r.trim();
  return r;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly r = Poly::constant(F_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

fe_t Poly::eval(fe_t x) const {
  fe_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << F_->to_string(c_[i]);
  }
  return os.str();
}

Poly Poly::parse(FieldPtr F, const std::string& s) {
  if (s == "0") return Poly::zero(F);
  std::vector<fe_t> coeffs;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.push_back(F->parse(tok));
  return Poly(F, std::move(coeffs));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

Egcd egcd(const Poly& a, const Poly& b) {
  const FieldPtr& F = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(F, 1), u1 = Poly::zero(F);
  Poly v0 = Poly::zero(F), v1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly u2 = u0 - q * u1, v2 = v0 - q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  fe_t linv = F->inv(r0.lead());
  return {r0.scaled(linv), u0.scaled(linv), v0.scaled(linv)};
}

bool is_squarefree(const Poly& a) {
  if (a.is_zero()) return false;
  if (a.deg() <= 0) return true;
  Poly d = a.derivative();
  if (d.is_zero()) return false; // p-th power part present
  return gcd(a, d).deg() == 0;
}

} // namespace qj
