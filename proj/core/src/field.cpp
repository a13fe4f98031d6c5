#include "qj/field.hpp"

#include <algorithm>

namespace qj {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// digits of code, ascending powers of x
void decode(fe_t a, std::uint32_t p, std::uint32_t m, std::uint32_t* d) {
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
}

fe_t encode(const std::uint32_t* d, std::uint32_t p, std::uint32_t m) {
  fe_t a = 0;
  for (std::uint32_t i = m; i-- > 0;) a = a * p + d[i];
  return a;
}

// Multiplication of F_p[x] digit vectors reduced mod (modulus, p).
// Used only at construction time and for irreducibility scans.
fe_t mul_digits(fe_t a, fe_t b, std::uint32_t p, std::uint32_t m,
                const std::vector<std::uint32_t>& modulus) {
  std::uint32_t da[16], db[16];
  decode(a, p, m, da);
  decode(b, p, m, db);
  std::uint32_t prod[32] = {0};
  for (std::uint32_t i = 0; i < m; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < m; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  // reduce: x^m = -(modulus minus leading term)
  for (std::uint32_t k = 2 * m - 2 + 1; k-- > m;) {
    std::uint32_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      std::uint32_t sub = (c * modulus[i]) % p;
      prod[k - m + i] = (prod[k - m + i] + p - sub) % p;
    }
  }
  return encode(prod, p, m);
}

} // namespace

fe_t Field::mul_raw(fe_t a, fe_t b) const { return mul_digits(a, b, p_, m_, modulus_); }

fe_t Field::pow_raw(fe_t a, std::uint64_t e) const {
  fe_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul_raw(r, base);
    base = mul_raw(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::order_raw(fe_t a) const {
  // multiplicative order via the factorization of q-1
  std::uint32_t ord = q_ - 1;
  for (std::uint32_t f : prime_factors(q_ - 1)) {
    while (ord % f == 0 && pow_raw(a, ord / f) == 1) ord /= f;
  }
  return ord;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime_u32(p)) throw domain_error("field: p must be prime");
  if (m < 1 || m > 12) throw domain_error("field: need 1 <= m <= 12");

  auto F = std::shared_ptr<Field>(new Field());
  F->p_ = p;
  F->m_ = m;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (1u << 26)) throw resource_error("field: q too large");
  }
  F->q_ = static_cast<std::uint32_t>(q);

  if (m == 1) {
    F->modulus_ = {0, 1}; // placeholder "x"
    // smallest primitive root mod p
    for (fe_t g = 1; g < p; ++g) {
      if (F->order_raw(g) == p - 1) {
        F->gen_ = g;
        break;
      }
    }
  } else {
    // scan monic degree-m candidates in lex order on (a_{m-1},...,a_0)
    std::vector<std::uint32_t> cand(m + 1, 0);
    cand[m] = 1;
    bool found = false;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < m; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total && !found; ++idx) {
      std::uint64_t v = idx;
      for (std::uint32_t i = m; i-- > 0;) { // a_{m-1} most significant
        std::uint64_t pw = 1;
        for (std::uint32_t j = 0; j < i; ++j) pw *= p;
        cand[i] = static_cast<std::uint32_t>((v / pw) % p);
      }
      F->modulus_ = cand;
      // irreducible and x primitive <=> order of x equals q-1 and no
      // proper factor; order q-1 already forces x to avoid any proper
      // subring, but reducible moduli give zero divisors, so test
      // irreducibility first.
      bool irred = true;
      // brute trial division by monic polynomials of degree 1..m/2
      for (std::uint32_t dd = 1; irred && 2 * dd <= m; ++dd) {
        std::uint64_t nd = 1;
        for (std::uint32_t j = 0; j < dd; ++j) nd *= p;
        for (std::uint64_t w = 0; w < nd && irred; ++w) {
          // divisor digits: monic of degree dd
          std::vector<std::uint32_t> div(dd + 1, 0);
          std::uint64_t t = w;
          for (std::uint32_t j = 0; j < dd; ++j) {
            div[j] = static_cast<std::uint32_t>(t % p);
            t /= p;
          }
          div[dd] = 1;
          // remainder of modulus by div; the j == dd term cancels rem[k]
          std::vector<std::uint32_t> rem(F->modulus_);
          for (std::uint32_t k = m + 1; k-- > dd;) {
            std::uint32_t c = rem[k];
            if (!c) continue;
            for (std::uint32_t j = 0; j <= dd; ++j)
              rem[k - dd + j] = (rem[k - dd + j] + p - (c * div[j]) % p) % p;
          }
          bool zero = std::all_of(rem.begin(), rem.end(),
                                  [](std::uint32_t c) { return c == 0; });
          if (zero) irred = false;
        }
      }
      if (irred && F->order_raw(static_cast<fe_t>(p)) == F->q_ - 1) {
        F->gen_ = static_cast<fe_t>(p); // the class of x
        found = true;
      }
    }
    if (!found) throw consistency_error("field: no primitive modulus found");
  }
  F->init_tables();
  return F;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     const std::vector<std::uint32_t>& modulus) {
  if (m == 1) {
    // modulus is a placeholder in the prime-field case; accept "x" or "x+c"
    return make(p, m);
  }
  if (!is_prime_u32(p)) throw domain_error("field: p must be prime");
  if (modulus.size() != m + 1 || modulus[m] != 1)
    throw domain_error("field: modulus must be monic of degree m");
  auto F = std::shared_ptr<Field>(new Field());
  F->p_ = p;
  F->m_ = m;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (1u << 26)) throw resource_error("field: q too large");
  }
  F->q_ = static_cast<std::uint32_t>(q);
  F->modulus_ = modulus;
  for (auto& c : F->modulus_) c %= p;
  // irreducibility: x^(q) == x and x^(q/p^k)-scan; brute force via orders
  // is enough at this scale: check that no element is a root of the modulus
  // ... a root in F_p suffices only for m<=3; use trial division as above.
  for (std::uint32_t dd = 1; 2 * dd <= m; ++dd) {
    std::uint64_t nd = 1;
    for (std::uint32_t j = 0; j < dd; ++j) nd *= p;
    for (std::uint64_t w = 0; w < nd; ++w) {
      std::vector<std::uint32_t> div(dd + 1, 0);
      std::uint64_t t = w;
      for (std::uint32_t j = 0; j < dd; ++j) {
        div[j] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      div[dd] = 1;
      std::vector<std::uint32_t> rem(F->modulus_);
      for (std::uint32_t k = m + 1; k-- > dd;) {
        std::uint32_t c = rem[k];
        if (!c) continue;
        for (std::uint32_t j = 0; j <= dd; ++j)
          rem[k - dd + j] = (rem[k - dd + j] + p - (c * div[j]) % p) % p;
      }
      if (std::all_of(rem.begin(), rem.end(),
                      [](std::uint32_t c) { return c == 0; }))
        throw domain_error("field: modulus is reducible");
    }
  }
  // generator: x if primitive, else smallest primitive code
  if (F->order_raw(static_cast<fe_t>(p)) == F->q_ - 1) {
    F->gen_ = static_cast<fe_t>(p);
  } else {
    F->gen_ = 0;
    for (fe_t c = 2; c < F->q_; ++c) {
      if (F->order_raw(c) == F->q_ - 1) {
        F->gen_ = c;
        break;
      }
    }
    if (!F->gen_) throw consistency_error("field: no generator found");
  }
  F->init_tables();
  return F;
}

void Field::init_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  fe_t cur = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = mul_raw(cur, gen_);
  }
  if (cur != 1) throw consistency_error("field: generator order wrong");
}

fe_t Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<fe_t>(r);
}

fe_t Field::add(fe_t a, fe_t b) const {
  // coordinate-wise mod p; p==2 is plain xor
  if (p_ == 2) return a ^ b;
  fe_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a + b) % p_) * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return out;
}

fe_t Field::neg(fe_t a) const {
  if (p_ == 2) return a;
  fe_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * mul;
    a /= p_;
    mul *= p_;
  }
  return out;
}

fe_t Field::sub(fe_t a, fe_t b) const { return add(a, neg(b)); }

fe_t Field::mul(fe_t a, fe_t b) const {
  if (!a || !b) return 0;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

fe_t Field::inv(fe_t a) const {
  if (!a) throw domain_error("field: inverse of zero");
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

fe_t Field::pow(fe_t a, std::int64_t e) const {
  if (!a) {
    if (e < 0) throw domain_error("field: 0 to a negative power");
    return e == 0 ? 1 : 0;
  }
  std::int64_t n = q_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (l < 0) l += n;
  return exp_[l];
}

std::uint32_t Field::dlog(fe_t a) const {
  if (!a) throw domain_error("field: dlog of zero");
  return log_[a];
}

bool Field::is_square(fe_t a) const {
  if (!a) return true;
  if (p_ == 2) return true;
  return log_[a] % 2 == 0;
}

fe_t Field::sqrt(fe_t a) const {
  if (!a) return 0;
  if (p_ == 2) return pow(a, static_cast<std::int64_t>(q_) / 2); // a^(q/2)
  std::uint32_t l = log_[a];
  if (l % 2) throw domain_error("field: element is not a square");
  return exp_[l / 2];
}

fe_t Field::frobenius(fe_t a, std::uint32_t s) const {
  if (!a) return 0;
  if (q_ == 2) return a;
  std::uint64_t pw = 1;
  for (std::uint32_t i = 0; i < s; ++i) pw = pw * p_ % (q_ - 1);
  std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * pw) % (q_ - 1);
  return exp_[l];
}

std::string Field::to_string(fe_t a) const {
  if (p_ > 7) throw domain_error("field: digit serialization needs p <= 7");
  std::string s(m_, '0');
  for (std::uint32_t i = 0; i < m_; ++i) {
    s[m_ - 1 - i] = static_cast<char>('0' + a % p_);
    a /= p_;
  }
  return s;
}

fe_t Field::parse(const std::string& s) const {
  if (s.size() != m_) throw domain_error("field: element string has wrong width");
  fe_t a = 0;
  for (char ch : s) {
    if (ch < '0' || ch >= static_cast<char>('0' + p_))
      throw domain_error("field: bad digit in element string");
    a = a * p_ + static_cast<fe_t>(ch - '0');
  }
  return a;
}

std::vector<fe_t> Field::elements() const {
  std::vector<fe_t> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = i;
  return out;
}

} // namespace qj
