#pragma once
/*
 * Exact arithmetic in F_{p^k}.
 *
 * Elements are stored as integer codes: code = sum c_i p^i where (c_0..c_{k-1})
 * are the coordinates w.r.t. the power basis of a deterministic modulus.
 * The modulus is the lexicographically smallest irreducible monic polynomial
 * of degree k over F_p, "smallest" meaning smallest integer code of its
 * non-leading coefficient vector (c_0 least significant).  This makes codes
 * portable across runs and implementations.
 *
 * Multiplication uses discrete-log tables (the multiplicative group is cyclic;
 * the generator is the smallest code of full order).  Addition is XOR in
 * characteristic 2 and a digit table otherwise.  Fields are interned: use
 * make_field(p, k) and keep the reference.
 */
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace enq {

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// dense univariate polynomials over F_p, little-endian coefficients
using UPoly = std::vector<std::uint32_t>;

inline UPoly upoly_trim(UPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline UPoly upoly_mul(const UPoly& f, const UPoly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  UPoly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i])
      for (std::size_t j = 0; j < g.size(); ++j)
        r[i + j] = (r[i + j] + static_cast<std::uint64_t>(f[i]) * g[j]) % p;
  return upoly_trim(std::move(r));
}

inline UPoly upoly_mod(UPoly f, const UPoly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;  // m monic
  while (f.size() > dm) {
    std::uint32_t c = f.back();
    std::size_t shift = f.size() - 1 - dm;
    if (c)
      for (std::size_t j = 0; j < dm; ++j)
        f[shift + j] = (f[shift + j] + static_cast<std::uint64_t>(c) * (p - m[j] % p)) % p;
    f.pop_back();
    f = upoly_trim(std::move(f));
    if (f.size() <= dm) break;
  }
  return f;
}

inline UPoly upoly_powmod_x(std::uint64_t e, const UPoly& m, std::uint32_t p) {
  // x^e mod m by square and multiply
  UPoly result{1};
  UPoly base{0, 1};
  base = upoly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = upoly_mod(upoly_mul(result, base, p), m, p);
    base = upoly_mod(upoly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

inline UPoly upoly_gcd(UPoly a, UPoly b, std::uint32_t p) {
  a = upoly_trim(std::move(a));
  b = upoly_trim(std::move(b));
  while (!b.empty()) {
    // make b monic
    std::uint32_t lead = b.back();
    if (lead != 1) {
      // inverse of lead mod p
      std::uint32_t inv = 1;
      for (std::uint32_t t = 1; t < p; ++t)
        if (t * static_cast<std::uint64_t>(lead) % p == 1) { inv = t; break; }
      for (auto& c : b) c = static_cast<std::uint64_t>(c) * inv % p;
    }
    a = upoly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

inline bool upoly_irreducible(const UPoly& f, std::uint32_t p) {
  // standard criterion: x^{p^k} == x (mod f) and gcd(x^{p^{k/l}} - x, f) = 1
  // for every prime l | k
  const std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= p;
  UPoly xq = upoly_powmod_x(q, f, p);
  UPoly x{0, 1};
  if (upoly_trim(xq) != x) return false;
  std::size_t kk = k;
  for (std::size_t l = 2; l <= kk; ++l) {
    if (kk % l) continue;
    while (kk % l == 0) kk /= l;
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < k / l; ++i) e *= p;
    UPoly g = upoly_powmod_x(e, f, p);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    g = upoly_trim(std::move(g));
    UPoly d = upoly_gcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

} // namespace detail

class FiniteField {
public:
  FiniteField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!detail::is_prime(p)) throw std::invalid_argument("make_field: p not prime");
    if (k < 1 || k > 12) throw std::invalid_argument("make_field: need 1 <= k <= 12");
    long double qd = 1;
    for (std::uint32_t i = 0; i < k; ++i) qd *= p;
    if (qd > 4294967296.0L) throw std::invalid_argument("make_field: p^k exceeds 2^32");
    q_ = 1;
    for (std::uint32_t i = 0; i < k; ++i) q_ *= p;

    // deterministic modulus: smallest non-leading coefficient code
    for (std::uint64_t code = 0; code < q_; ++code) {
      detail::UPoly f = decode(code);
      f.resize(k + 1, 0);
      f[k] = 1;
      if (detail::upoly_irreducible(f, p)) {
        modulus_.assign(f.begin(), f.end());
        break;
      }
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible modulus found");

    build_tables();
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // ---- code-level arithmetic (hot path) ----
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    if (p_ == 2) return x ^ y;
    if (!add_.empty()) return add_[static_cast<std::size_t>(x) * q_ + y];
    return add_slow(x, y);
  }
  std::uint32_t neg(std::uint32_t x) const {
    if (p_ == 2) return x;
    if (!neg_.empty()) return neg_[x];
    return neg_slow(x);
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    if (!log_.empty()) return alog_[log_[x] + log_[y]];
    return mul_slow(x, y);
  }
  std::uint32_t inv(std::uint32_t x) const {
    if (x == 0) throw std::domain_error("field inverse of zero");
    if (!log_.empty()) return alog_[(q_ - 1) - log_[x]];
    return pow(x, q_ - 2);
  }
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    if (!log_.empty()) {
      std::uint64_t l = (static_cast<std::uint64_t>(log_[x]) * (e % (q_ - 1))) % (q_ - 1);
      return alog_[l];
    }
    std::uint32_t r = 1, b = x;
    while (e) {
      if (e & 1) r = mul_slow(r, b);
      b = mul_slow(b, b);
      e >>= 1;
    }
    return r;
  }
  // the p^m-power Frobenius on codes
  std::uint32_t frobenius(std::uint32_t x, std::uint32_t m = 1) const {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < m; ++i) e *= p_;
    return pow(x, e);
  }
  // embed an integer constant (the image of n under Z -> F)
  std::uint32_t from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  detail::UPoly decode(std::uint64_t code) const {
    detail::UPoly c(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      c[i] = code % p_;
      code /= p_;
    }
    return c;
  }
  std::uint64_t encode(const detail::UPoly& c) const {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
    return v;
  }

  bool operator==(const FiniteField& o) const { return p_ == o.p_ && k_ == o.k_; }

private:
  void build_tables() {
    if (p_ != 2 && q_ <= 1024) {
      add_.resize(q_ * q_);
      neg_.resize(q_);
      for (std::uint64_t x = 0; x < q_; ++x) {
        auto dx = decode(x);
        detail::UPoly nx(k_);
        for (std::uint32_t i = 0; i < k_; ++i) nx[i] = (p_ - dx[i]) % p_;
        neg_[x] = static_cast<std::uint32_t>(encode(nx));
        for (std::uint64_t y = 0; y < q_; ++y) {
          auto dy = decode(y);
          detail::UPoly s(k_);
          for (std::uint32_t i = 0; i < k_; ++i) s[i] = (dx[i] + dy[i]) % p_;
          add_[x * q_ + y] = static_cast<std::uint32_t>(encode(s));
        }
      }
    } else if (p_ != 2) {
      neg_.resize(q_);
      for (std::uint64_t x = 0; x < q_; ++x) neg_[x] = neg_slow(static_cast<std::uint32_t>(x));
    }
    if (q_ <= (1u << 20)) {
      // discrete-log tables over the smallest generator
      std::uint32_t g = 0;
      for (std::uint32_t cand = 1; cand < q_; ++cand) {
        if (order(cand) == q_ - 1) { g = cand; break; }
      }
      log_.assign(q_, 0);
      alog_.assign(2 * (q_ - 1), 0);
      std::uint32_t cur = 1;
      for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        alog_[i] = cur;
        alog_[i + (q_ - 1)] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_slow(cur, g);
      }
      generator_ = g;
    }
  }

  std::uint64_t order(std::uint32_t x) const {
    std::uint32_t cur = x;
    std::uint64_t n = 1;
    while (cur != 1) {
      cur = mul_slow(cur, x);
      ++n;
      if (n > q_) return 0;  // x == 0
    }
    return n;
  }

  std::uint32_t add_slow(std::uint32_t x, std::uint32_t y) const {
    auto dx = decode(x), dy = decode(y);
    detail::UPoly s(k_);
    for (std::uint32_t i = 0; i < k_; ++i) s[i] = (dx[i] + dy[i]) % p_;
    return static_cast<std::uint32_t>(encode(s));
  }
  std::uint32_t neg_slow(std::uint32_t x) const {
    auto dx = decode(x);
    detail::UPoly s(k_);
    for (std::uint32_t i = 0; i < k_; ++i) s[i] = (p_ - dx[i]) % p_;
    return static_cast<std::uint32_t>(encode(s));
  }
  std::uint32_t mul_slow(std::uint32_t x, std::uint32_t y) const {
    auto f = detail::upoly_trim(decode(x));
    auto g = detail::upoly_trim(decode(y));
    auto r = detail::upoly_mod(detail::upoly_mul(f, g, p_), modulus_, p_);
    r.resize(k_, 0);
    return static_cast<std::uint32_t>(encode(r));
  }

  std::uint32_t p_, k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, neg_, log_, alog_;
  std::uint32_t generator_ = 1;
};

// interned field registry; references remain valid for the process lifetime
inline const FiniteField& make_field(std::uint32_t p, std::uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<FiniteField>(p, k)).first;
  return *it->second;
}

// Field embedding F_{p^k} -> F_{p^m} (k | m): the generator of the small field
// is sent to the smallest root of its modulus in the big field.  Returns the
// full code translation table.
inline std::vector<std::uint32_t> embed_field(const FiniteField& Fs, const FiniteField& Fb) {
  if (Fs.p() != Fb.p() || Fb.k() % Fs.k() != 0)
    throw std::invalid_argument("embed_field: not a subfield");
  std::vector<std::uint32_t> table(Fs.q());
  if (Fs.k() == 1) {
    for (std::uint64_t c = 0; c < Fs.q(); ++c) table[c] = static_cast<std::uint32_t>(c);
    return table;
  }
  std::uint32_t root = 0;
  bool found = false;
  for (std::uint64_t r = 0; r < Fb.q() && !found; ++r) {
    std::uint32_t acc = 0, pw = 1;
    for (std::uint32_t c : Fs.modulus()) {
      if (c) acc = Fb.add(acc, Fb.mul(c, pw));
      pw = Fb.mul(pw, static_cast<std::uint32_t>(r));
    }
    if (acc == 0) {
      root = static_cast<std::uint32_t>(r);
      found = true;
    }
  }
  if (!found) throw std::logic_error("embed_field: no root of modulus");
  for (std::uint64_t x = 0; x < Fs.q(); ++x) {
    auto d = Fs.decode(x);
    std::uint32_t acc = 0, pw = 1;
    for (std::uint32_t i = 0; i < Fs.k(); ++i) {
      if (d[i]) acc = Fb.add(acc, Fb.mul(d[i], pw));
      pw = Fb.mul(pw, root);
    }
    table[x] = acc;
  }
  return table;
}

/*
 * Value-type field element.  A default-constructed element is the universal
 * additive zero (no field attached); it absorbs under + and annihilates
 * under * against any field.  This keeps generic polynomial code free of
 * context plumbing.
 */
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(const FiniteField& F, std::uint32_t code) : F_(&F), code_(code) {
    if (code >= F.q()) throw std::out_of_range("FieldElement: code out of range");
  }

  bool is_zero() const { return code_ == 0; }
  std::uint32_t code() const { return code_; }
  const FiniteField* field() const { return F_; }

  FieldElement operator+(const FieldElement& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    check(o);
    return FieldElement(*F_, F_->add(code_, o.code_));
  }
  FieldElement operator-() const {
    if (is_zero()) return {};
    return FieldElement(*F_, F_->neg(code_));
  }
  FieldElement operator-(const FieldElement& o) const { return *this + (-o); }
  FieldElement operator*(const FieldElement& o) const {
    if (is_zero() || o.is_zero()) return {};
    check(o);
    return FieldElement(*F_, F_->mul(code_, o.code_));
  }
  FieldElement inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return FieldElement(*F_, F_->inv(code_));
  }
  bool operator==(const FieldElement& o) const {
    if (is_zero() && o.is_zero()) return true;
    return F_ == o.F_ && code_ == o.code_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const { return std::to_string(code_); }

private:
  void check(const FieldElement& o) const {
    if (F_ != o.F_) throw std::invalid_argument("FieldElement: field mismatch");
  }
  const FiniteField* F_ = nullptr;
  std::uint32_t code_ = 0;
};

} // namespace enq
