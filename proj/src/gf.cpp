#include "pn/gf.hpp"

#include <algorithm>
#include <numeric>

#include "pn/rat.hpp"

namespace pn {

const char* err_name(Err e) {
  switch (e) {
    case Err::CompositeP: return "CompositeP";
    case Err::DegreeTooLarge: return "DegreeTooLarge";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::MixedContext: return "MixedContext";
    case Err::KNotCoprimeToP: return "KNotCoprimeToP";
    case Err::ZeroElement: return "ZeroElement";
    case Err::NotDivisible: return "NotDivisible";
    case Err::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::NotHomogeneous: return "NotHomogeneous";
    case Err::PolyDegreeCap: return "PolyDegreeCap";
    case Err::MNotNormalized: return "MNotNormalized";
    case Err::MTooSmall: return "MTooSmall";
    case Err::ExtensionNotMultipleOfL: return "ExtensionNotMultipleOfL";
    case Err::CapExceeded: return "CapExceeded";
    case Err::NotSingular: return "NotSingular";
    case Err::UnclassifiedPoint: return "UnclassifiedPoint";
    case Err::TableViolation: return "TableViolation";
    case Err::WrongRegime: return "WrongRegime";
    case Err::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Err::IncompleteFactorization: return "IncompleteFactorization";
    case Err::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Rat

namespace {

long long narrow128(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
    fail(Err::InvalidArgument, "rational overflow");
  }
  return static_cast<long long>(v);
}

Rat make_rat(__int128 n, __int128 d) {
  if (d == 0) fail(Err::DivisionByZero, "rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b) { __int128 t = a % b; a = b; b = t; }
  if (a == 0) a = 1;
  Rat r;
  r.num = narrow128(n / a);
  r.den = narrow128(d / a);
  return r;
}

}  // namespace

Rat::Rat(long long n, long long d) { *this = make_rat(n, d); }

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat operator+(const Rat& a, const Rat& b) {
  return make_rat(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                  static_cast<__int128>(a.den) * b.den);
}
Rat operator-(const Rat& a, const Rat& b) {
  return make_rat(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                  static_cast<__int128>(a.den) * b.den);
}
Rat operator*(const Rat& a, const Rat& b) {
  return make_rat(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) fail(Err::DivisionByZero, "rational division by zero");
  return make_rat(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}
bool operator<(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

// ---------------------------------------------------------------------------
// Univariate polynomials over F_p as int64 vectors, low degree first.

namespace {

using UPoly = std::vector<long long>;

long long mod_inv(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) fail(Err::DivisionByZero, "no modular inverse");
  return ((t % p) + p) % p;
}

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  utrim(r);
  return r;
}

// remainder of a mod b (b nonzero)
UPoly urem(UPoly a, const UPoly& b, long long p) {
  long long inv_lead = mod_inv(b.back(), p);
  while (udeg(a) >= udeg(b)) {
    long long c = a.back() * inv_lead % p;
    int shift = udeg(a) - udeg(b);
    for (size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
    }
    utrim(a);
    if (a.empty()) break;
  }
  return a;
}

// extended gcd tracking the coefficient on a: returns monic g and u with
// u*a == g modulo b.
void uext_gcd(UPoly a, UPoly b, long long p, UPoly& g, UPoly& u) {
  UPoly u0 = {1}, u1 = {};
  while (!b.empty()) {
    UPoly q(std::max(0, udeg(a) - udeg(b) + 1), 0);
    UPoly r = a;
    long long inv_lead = mod_inv(b.back(), p);
    while (udeg(r) >= udeg(b)) {
      long long c = r.back() * inv_lead % p;
      int shift = udeg(r) - udeg(b);
      q[shift] = c;
      for (size_t i = 0; i < b.size(); ++i) {
        r[i + shift] = ((r[i + shift] - c * b[i]) % p + p) % p;
      }
      utrim(r);
    }
    utrim(q);
    UPoly qu = umul(q, u1, p);
    UPoly nu(std::max(u0.size(), qu.size()), 0);
    for (size_t i = 0; i < u0.size(); ++i) nu[i] = u0[i];
    for (size_t i = 0; i < qu.size(); ++i) nu[i] = ((nu[i] - qu[i]) % p + p) % p;
    utrim(nu);
    a = b;
    b = r;
    u0 = u1;
    u1 = nu;
  }
  g = a;
  u = u0;
  if (!g.empty() && g.back() != 1) {
    long long inv_lead = mod_inv(g.back(), p);
    for (auto& c : g) c = c * inv_lead % p;
    for (auto& c : u) c = c * inv_lead % p;
  }
}

bool divides(const UPoly& d, const UPoly& a, long long p) { return urem(a, d, p).empty(); }

// candidate = x^s + (digits of n, low first); irreducible over F_p?
bool irreducible_monic(const UPoly& cand, long long p) {
  int s = udeg(cand);
  // trial division by every monic polynomial of degree 1..s/2
  for (int d = 1; 2 * d <= s; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t n = 0; n < count; ++n) {
      UPoly div(d + 1, 0);
      std::uint64_t v = n;
      for (int i = 0; i < d; ++i) { div[i] = static_cast<long long>(v % p); v /= p; }
      div[d] = 1;
      if (divides(div, cand, p)) return false;
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long long binom_mod_p(long long n, long long k, long long p) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  while (n > 0 || k > 0) {
    long long nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // small Pascal within one digit
    long long c = 1;
    for (long long i = 0; i < kd; ++i) c = c * ((nd - i) % p) % p * mod_inv(i + 1, p) % p;
    r = r * c % p;
    n /= p;
    k /= p;
  }
  return r;
}

FieldCtx::FieldCtx(Private, long long p, int s, std::vector<long long> modulus)
    : p_(p), s_(s), mod_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < s_; ++i) q_ *= static_cast<std::uint64_t>(p_);
}

CtxPtr FieldCtx::create(long long p, int s) {
  if (p == 2 || !is_prime(p)) fail(Err::CompositeP, "p must be an odd prime, got " + std::to_string(p));
  if (s < 1 || s > kDegreeCap) fail(Err::DegreeTooLarge, "extension degree " + std::to_string(s));
  std::vector<long long> mod;
  if (s == 1) {
    mod = {0, 1};  // the monic x
  } else {
    std::uint64_t count = 1;
    for (int i = 0; i < s; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t n = 0; n < count; ++n) {
      UPoly cand(s + 1, 0);
      std::uint64_t v = n;
      for (int i = 0; i < s; ++i) { cand[i] = static_cast<long long>(v % p); v /= p; }
      cand[s] = 1;
      if (irreducible_monic(cand, p)) {
        mod = cand;
        break;
      }
    }
  }
  return std::make_shared<FieldCtx>(Private{}, p, s, std::move(mod));
}

FieldElement FieldCtx::zero() const { return FieldElement(shared_from_this(), std::vector<long long>(s_, 0)); }

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(long long v) const {
  std::vector<long long> c(s_, 0);
  c[0] = ((v % p_) + p_) % p_;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_coeffs(std::vector<long long> c) const {
  if (static_cast<int>(c.size()) > s_) fail(Err::InvalidArgument, "coefficient vector too long");
  c.resize(s_, 0);
  for (auto& v : c) v = ((v % p_) + p_) % p_;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::element(std::uint64_t index) const {
  std::vector<long long> c(s_, 0);
  for (int i = 0; i < s_; ++i) { c[i] = static_cast<long long>(index % p_); index /= p_; }
  return FieldElement(shared_from_this(), std::move(c));
}

bool FieldCtx::same(const FieldCtx& other) const {
  return this == &other || (p_ == other.p_ && s_ == other.s_ && mod_ == other.mod_);
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.ctx()->same(*b.ctx())) fail(Err::MixedContext, "operands from different field contexts");
}

}  // namespace

FieldElement::FieldElement(CtxPtr ctx, std::vector<long long> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != ctx_->s()) fail(Err::InvalidArgument, "bad coefficient vector length");
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
}

std::uint64_t FieldElement::index() const {
  std::uint64_t r = 0;
  for (int i = ctx_->s() - 1; i >= 0; --i) r = r * static_cast<std::uint64_t>(ctx_->p()) + static_cast<std::uint64_t>(c_[i]);
  return r;
}

std::string FieldElement::str() const {
  if (ctx_->s() == 1) return std::to_string(c_[0]);
  std::string out = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c_[i]);
  }
  return out + "]";
}

FieldElement FieldElement::operator-() const {
  std::vector<long long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = (ctx_->p() - c_[i]) % ctx_->p();
  return FieldElement(ctx_, std::move(r));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  std::vector<long long> r(a.c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = (a.c_[i] + b.c_[i]) % a.ctx_->p();
  return FieldElement(a.ctx_, std::move(r));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  std::vector<long long> r(a.c_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = ((a.c_[i] - b.c_[i]) % a.ctx_->p() + a.ctx_->p()) % a.ctx_->p();
  return FieldElement(a.ctx_, std::move(r));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  long long p = a.ctx_->p();
  int s = a.ctx_->s();
  std::vector<long long> prod(2 * s - 1, 0);
  for (int i = 0; i < s; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + a.c_[i] * b.c_[j]) % p;
  }
  // reduce modulo the monic modulus
  const auto& mod = a.ctx_->modulus();
  for (int k = 2 * s - 2; k >= s; --k) {
    long long c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < s; ++i) {
      prod[k - s + i] = ((prod[k - s + i] - c * mod[i]) % p + p) % p;
    }
  }
  prod.resize(s);
  return FieldElement(a.ctx_, std::move(prod));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a.c_ == b.c_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a.index() < b.index();
}

FieldElement FieldElement::inv() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  long long p = ctx_->p();
  if (ctx_->s() == 1) return ctx_->from_int(mod_inv(c_[0], p));
  UPoly a = c_;
  utrim(a);
  UPoly g, u;
  uext_gcd(a, ctx_->modulus(), p, g, u);
  // g must be 1 (modulus irreducible, a nonzero)
  UPoly r = urem(u, ctx_->modulus(), p);
  r.resize(ctx_->s(), 0);
  return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::pow(unsigned long long e) const {
  FieldElement base = *this;
  FieldElement acc = ctx_->one();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElement FieldElement::frobenius() const { return pow(static_cast<unsigned long long>(ctx_->p())); }

// ---------------------------------------------------------------------------
// Group helpers

std::vector<FieldElement> nth_roots_of_unity(const CtxPtr& ctx, unsigned long long K) {
  if (K == 0 || K % static_cast<unsigned long long>(ctx->p()) == 0) {
    fail(Err::KNotCoprimeToP, "K = " + std::to_string(K) + " shares a factor with p");
  }
  std::vector<FieldElement> out;
  for (std::uint64_t i = 1; i < ctx->order(); ++i) {
    FieldElement a = ctx->element(i);
    if (a.pow(K) == ctx->one()) out.push_back(a);
  }
  return out;
}

unsigned long long mult_order(const FieldElement& a) {
  if (a.is_zero()) fail(Err::ZeroElement, "multiplicative order of zero");
  FieldElement acc = a;
  unsigned long long t = 1;
  const FieldElement one = a.ctx()->one();
  while (!(acc == one)) {
    acc = acc * a;
    ++t;
  }
  return t;
}

bool in_subfield(const FieldElement& a, int l) {
  if (a.ctx()->s() % l != 0) fail(Err::ExtensionNotMultipleOfL, "subfield degree does not divide");
  unsigned long long pl = 1;
  for (int i = 0; i < l; ++i) pl *= static_cast<unsigned long long>(a.ctx()->p());
  return a.pow(pl) == a;
}

bool in_subfield_star(const FieldElement& a, int l) {
  if (a.ctx()->s() % l != 0) fail(Err::ExtensionNotMultipleOfL, "subfield degree does not divide");
  if (a.is_zero()) return false;
  unsigned long long pl = 1;
  for (int i = 0; i < l; ++i) pl *= static_cast<unsigned long long>(a.ctx()->p());
  return a.pow(pl - 1) == a.ctx()->one();
}

SubfieldEmbedding::SubfieldEmbedding(CtxPtr small, CtxPtr big) : small_(std::move(small)), big_(std::move(big)) {
  if (small_->p() != big_->p()) fail(Err::MixedContext, "embedding across different characteristics");
  if (big_->s() % small_->s() != 0) fail(Err::ExtensionNotMultipleOfL, "embedding needs l | s");
  // smallest root (index order) of the small modulus inside the big field
  const auto& mod = small_->modulus();
  for (std::uint64_t i = 0; i < big_->order(); ++i) {
    FieldElement cand = big_->element(i);
    FieldElement acc = big_->zero();
    for (int k = small_->s(); k >= 0; --k) acc = acc * cand + big_->from_int(mod[k]);
    if (acc.is_zero()) {
      rho_pow_.clear();
      FieldElement pw = big_->one();
      for (int k = 0; k < small_->s(); ++k) {
        rho_pow_.push_back(pw);
        pw = pw * cand;
      }
      return;
    }
  }
  fail(Err::InvalidArgument, "no root of small modulus in big field");  // unreachable for l | s
}

FieldElement SubfieldEmbedding::operator()(const FieldElement& a) const {
  if (!a.ctx()->same(*small_)) fail(Err::MixedContext, "embedding argument from wrong context");
  FieldElement acc = big_->zero();
  for (int i = 0; i < small_->s(); ++i) {
    if (a.coeffs()[i] != 0) acc = acc + big_->from_int(a.coeffs()[i]) * rho_pow_[i];
  }
  return acc;
}

}  // namespace pn
