#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/integer.hpp"

namespace ecsec {

namespace detail {

// Dense polynomial over F_p, lowest degree first, no trailing zeros.
using ModPoly = std::vector<std::uint32_t>;

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw NotInvertible("element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  trim(r);
  return r;
}

inline ModPoly mp_sub(ModPoly a, const ModPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// a mod m, m nonzero.
inline ModPoly mp_rem(ModPoly a, const ModPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lc_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint32_t c = mul_mod(a.back(), lc_inv, p);
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = (a[shift + j] + p - mul_mod(c, m[j], p)) % p;
    trim(a);
  }
  return a;
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, li, p);
  }
  return a;
}

inline ModPoly mp_powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint32_t p) {
  ModPoly r{1};
  base = mp_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = mp_rem(mp_mul(r, base, p), m, p);
    e >>= 1;
    if (e > 0) base = mp_rem(mp_mul(base, base, p), m, p);
  }
  return r;
}

// Ben-Or: f (degree k) is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= k/2.
inline bool mp_is_irreducible(const ModPoly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = mp_powmod(h, p, f, p);
    ModPoly g = mp_gcd(mp_sub(h, x, p), f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// First monic irreducible of degree k when monic polynomials are ordered by
// the integer sum_i c_i p^i of their non-leading coefficients.
inline ModPoly first_irreducible(std::uint32_t p, int k) {
  for (std::uint64_t n = 0;; ++n) {
    ModPoly f(static_cast<std::size_t>(k) + 1, 0);
    f[k] = 1;
    std::uint64_t t = n;
    for (int i = 0; i < k && t > 0; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (t > 0) throw DomainError("no irreducible polynomial found");
    if (mp_is_irreducible(f, p)) return f;
  }
}

}  // namespace detail

// F_{p^k} represented as F_p[x]/(m) with m the first monic irreducible of
// degree k. Degree 1 gives the prime field with representative in c[0].
struct GFContext {
  std::uint32_t p = 0;
  int degree = 0;
  detail::ModPoly modulus;
  Integer order;
  // Number of (p-1)^2 products that fit in a uint64 accumulator.
  std::uint64_t batch = 0;
};

inline const GFContext& gf_context(std::uint32_t p, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<GFContext>> registry;
  if (!is_prime_u32(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (degree < 1) throw DomainError("field degree must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, degree}];
  if (!slot) {
    auto ctx = std::make_unique<GFContext>();
    ctx->p = p;
    ctx->degree = degree;
    ctx->modulus = detail::first_irreducible(p, degree);
    ctx->order = ipow(Integer(p), static_cast<unsigned long>(degree));
    const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
    ctx->batch = sq == 0 ? std::numeric_limits<std::uint64_t>::max() : std::numeric_limits<std::uint64_t>::max() / sq;
    slot = std::move(ctx);
  }
  return *slot;
}

inline const GFContext& prime_field(std::uint32_t p) { return gf_context(p, 1); }
inline const GFContext& ext_field(std::uint32_t p, int k) { return gf_context(p, k); }

// Element of a finite field. A default-constructed GF is an unbound zero that
// adopts the field of the other operand.
class GF {
 public:
  GF() = default;
  explicit GF(const GFContext& ctx) : ctx_(&ctx), c_(ctx.degree, 0) {}
  GF(const GFContext& ctx, long v) : GF(ctx) {
    long r = v % static_cast<long>(ctx.p);
    if (r < 0) r += ctx.p;
    c_[0] = static_cast<std::uint32_t>(r);
  }
  GF(const GFContext& ctx, const Integer& v) : GF(ctx) { c_[0] = mod_u32(v, ctx.p); }
  // Coefficients in the power basis; reduced modulo the field polynomial.
  GF(const GFContext& ctx, std::vector<std::uint32_t> coeffs) : ctx_(&ctx) {
    for (auto& c : coeffs) c %= ctx.p;
    detail::trim(coeffs);
    if (coeffs.size() > static_cast<std::size_t>(ctx.degree)) coeffs = detail::mp_rem(std::move(coeffs), ctx.modulus, ctx.p);
    coeffs.resize(ctx.degree, 0);
    c_ = std::move(coeffs);
  }

  // The class of x in F_p[x]/(m).
  static GF generator(const GFContext& ctx) { return GF(ctx, std::vector<std::uint32_t>{0, 1}); }

  template <class Rng>
  static GF random(const GFContext& ctx, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, ctx.p - 1);
    GF r(ctx);
    for (auto& c : r.c_) c = dist(rng);
    return r;
  }

  bool bound() const { return ctx_ != nullptr; }
  const GFContext& field() const {
    if (!ctx_) throw DomainError("unbound finite field element");
    return *ctx_;
  }
  std::uint32_t characteristic() const { return field().p; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  GF zero() const { return GF(field()); }
  GF one() const { return GF(field(), 1L); }
  GF from_int(long n) const { return GF(field(), n); }
  GF from_integer(const Integer& n) const { return GF(field(), n); }

  bool is_zero() const {
    for (auto c : c_)
      if (c != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  // True when the element lies in the prime field.
  bool is_prime_field_element() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend GF operator+(const GF& a, const GF& b) {
    if (!a.ctx_) return b;
    if (!b.ctx_) return a;
    check_same(a, b);
    GF r(*a.ctx_);
    const std::uint32_t p = a.ctx_->p;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      std::uint32_t s = a.c_[i] + b.c_[i];
      if (s >= p || s < a.c_[i]) s -= p;
      r.c_[i] = s;
    }
    return r;
  }
  friend GF operator-(const GF& a, const GF& b) {
    if (!b.ctx_) return a;
    if (!a.ctx_) return -b;
    check_same(a, b);
    GF r(*a.ctx_);
    const std::uint32_t p = a.ctx_->p;
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + (p - b.c_[i]);
    return r;
  }
  GF operator-() const {
    if (!ctx_) return *this;
    GF r(*ctx_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] == 0 ? 0 : ctx_->p - c_[i];
    return r;
  }
  friend GF operator*(const GF& a, const GF& b) {
    if (!a.ctx_) return a;
    if (!b.ctx_) return b;
    check_same(a, b);
    const GFContext& ctx = *a.ctx_;
    const std::uint32_t p = ctx.p;
    const std::size_t k = static_cast<std::size_t>(ctx.degree);
    GF r(ctx);
    if (k == 1) {
      r.c_[0] = detail::mul_mod(a.c_[0], b.c_[0], p);
      return r;
    }
    std::vector<std::uint64_t> acc(2 * k - 1, 0);
    const bool lazy = ctx.batch > 2 * k + 2;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t ai = a.c_[i];
      if (ai == 0) continue;
      if (lazy) {
        for (std::size_t j = 0; j < k; ++j) acc[i + j] += ai * b.c_[j];
      } else {
        for (std::size_t j = 0; j < k; ++j) acc[i + j] = (acc[i + j] + ai * b.c_[j] % p) % p;
      }
    }
    for (auto& v : acc) v %= p;
    const auto& m = ctx.modulus;
    for (std::size_t i = 2 * k - 2; i >= k; --i) {
      const std::uint64_t c = acc[i] % p;
      if (c != 0) {
        const std::uint64_t neg = p - c;
        for (std::size_t j = 0; j < k; ++j) {
          if (m[j] == 0) continue;
          if (lazy)
            acc[i - k + j] += neg * m[j];
          else
            acc[i - k + j] = (acc[i - k + j] + neg * m[j] % p) % p;
        }
      }
      acc[i] = 0;
    }
    for (std::size_t i = 0; i < k; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
    return r;
  }

  GF inv() const {
    if (is_zero()) throw NotInvertible("inverse of zero in " + field_name());
    const GFContext& ctx = *ctx_;
    const std::uint32_t p = ctx.p;
    if (ctx.degree == 1) {
      GF r(ctx);
      r.c_[0] = detail::inv_mod(c_[0], p);
      return r;
    }
    // Extended Euclid on (a, m): track s with s*a = r (mod m).
    detail::ModPoly r0 = ctx.modulus, r1 = c_;
    detail::trim(r1);
    detail::ModPoly s0, s1{1};
    while (r1.size() > 1) {
      // (q, rem) = divmod(r0, r1)
      detail::ModPoly rem = r0;
      detail::ModPoly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
      const std::uint32_t li = detail::inv_mod(r1.back(), p);
      while (rem.size() >= r1.size()) {
        const std::size_t shift = rem.size() - r1.size();
        const std::uint32_t c = detail::mul_mod(rem.back(), li, p);
        q[shift] = c;
        for (std::size_t j = 0; j < r1.size(); ++j)
          rem[shift + j] = (rem[shift + j] + p - detail::mul_mod(c, r1[j], p)) % p;
        detail::trim(rem);
      }
      detail::trim(q);
      detail::ModPoly s2 = detail::mp_sub(s0, detail::mp_mul(q, s1, p), p);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is a nonzero constant.
    const std::uint32_t ci = detail::inv_mod(r1[0], p);
    for (auto& c : s1) c = detail::mul_mod(c, ci, p);
    return GF(ctx, s1);
  }

  friend GF operator/(const GF& a, const GF& b) { return a * b.inv(); }
  GF& operator+=(const GF& o) { return *this = *this + o; }
  GF& operator-=(const GF& o) { return *this = *this - o; }
  GF& operator*=(const GF& o) { return *this = *this * o; }
  GF& operator/=(const GF& o) { return *this = *this / o; }

  GF pow(const Integer& e) const {
    if (e < 0) return inv().pow(Integer(-e));
    GF r = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = r * r;
      if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
  }
  GF pow(long e) const { return pow(Integer(e)); }
  // x -> x^p
  GF frobenius(int times = 1) const {
    GF r = *this;
    for (int i = 0; i < times; ++i) r = r.pow(Integer(field().p));
    return r;
  }

  friend bool operator==(const GF& a, const GF& b) {
    if (!a.ctx_ || !b.ctx_) return a.is_zero() && b.is_zero();
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
  }
  friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }
  // Deterministic ordering by coefficient vector (lowest degree most significant).
  friend bool operator<(const GF& a, const GF& b) { return a.c_ < b.c_; }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + "]";
  }
  std::string field_name() const {
    if (!ctx_) return "unbound";
    return "GF(" + std::to_string(ctx_->p) + "^" + std::to_string(ctx_->degree) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const GF& a) { return os << a.str(); }

 private:
  static void check_same(const GF& a, const GF& b) {
    if (a.ctx_ != b.ctx_) throw DomainError("mixing elements of " + a.field_name() + " and " + b.field_name());
  }

  const GFContext* ctx_ = nullptr;
  std::vector<std::uint32_t> c_;
};

}  // namespace ecsec
