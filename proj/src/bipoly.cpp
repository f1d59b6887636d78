#include "pn/bipoly.hpp"

#include <algorithm>

namespace pn {

namespace {

void require_same(const BiPoly& a, const BiPoly& b) {
  if (!a.ctx()->same(*b.ctx())) fail(Err::MixedContext, "polynomials over different contexts");
}

// Dense univariate polynomials with field coefficients, low degree first.
using FPoly = std::vector<FieldElement>;

void ftrim(FPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int fdeg(const FPoly& a) { return static_cast<int>(a.size()) - 1; }

FPoly fadd(const FPoly& a, const FPoly& b) {
  FPoly r = a.size() >= b.size() ? a : b;
  const FPoly& sm = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < sm.size(); ++i) r[i] = r[i] + sm[i];
  ftrim(r);
  return r;
}

FPoly fsub(const FPoly& a, const FPoly& b, const CtxPtr& ctx) {
  FPoly r(std::max(a.size(), b.size()), ctx->zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  ftrim(r);
  return r;
}

FPoly fmul(const FPoly& a, const FPoly& b, const CtxPtr& ctx) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, ctx->zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  ftrim(r);
  return r;
}

// quotient and remainder, divisor nonzero
void fdivmod(const FPoly& a, const FPoly& b, const CtxPtr& ctx, FPoly& q, FPoly& r) {
  r = a;
  q.assign(std::max(0, fdeg(a) - fdeg(b) + 1), ctx->zero());
  FieldElement inv_lead = b.back().inv();
  while (fdeg(r) >= fdeg(b)) {
    FieldElement c = r.back() * inv_lead;
    int shift = fdeg(r) - fdeg(b);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - c * b[i];
    ftrim(r);
  }
  ftrim(q);
}

FPoly fgcd(FPoly a, FPoly b, const CtxPtr& ctx) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    FPoly q, r;
    fdivmod(a, b, ctx, q, r);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    FieldElement inv_lead = a.back().inv();
    for (auto& c : a) c = c * inv_lead;
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// BiPoly basics

void BiPoly::add_term(int i, int j, const FieldElement& c) {
  if (c.is_zero()) return;
  if (i < 0 || j < 0) fail(Err::InvalidArgument, "negative exponent");
  if (i + j > kDegreeCap) fail(Err::PolyDegreeCap, "total degree above cap");
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    FieldElement s = it->second + c;
    if (s.is_zero()) {
      terms_.erase(it);
    } else {
      it->second = s;
    }
  }
}

BiPoly BiPoly::constant(const FieldElement& c) {
  BiPoly r(c.ctx());
  r.add_term(0, 0, c);
  return r;
}

BiPoly BiPoly::monomial(const FieldElement& c, int i, int j) {
  BiPoly r(c.ctx());
  r.add_term(i, j, c);
  return r;
}

BiPoly BiPoly::var_x(const CtxPtr& ctx) { return monomial(ctx->one(), 1, 0); }
BiPoly BiPoly::var_y(const CtxPtr& ctx) { return monomial(ctx->one(), 0, 1); }

int BiPoly::total_degree() const {
  if (is_zero()) fail(Err::ZeroPolynomial, "degree of zero polynomial");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::degree_x() const {
  if (is_zero()) fail(Err::ZeroPolynomial, "degree of zero polynomial");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_y() const {
  if (is_zero()) fail(Err::ZeroPolynomial, "degree of zero polynomial");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

FieldElement BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? ctx_->zero() : it->second;
}

BiPoly BiPoly::operator-() const {
  BiPoly r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BiPoly BiPoly::scale(const FieldElement& c) const {
  if (!ctx_->same(*c.ctx())) fail(Err::MixedContext, "scalar from different context");
  BiPoly r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.add_term(e.first, e.second, v * c);
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  require_same(a, b);
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  require_same(a, b);
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same(a, b);
  BiPoly r(a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.total_degree() + b.total_degree() > BiPoly::kDegreeCap) {
    fail(Err::PolyDegreeCap, "product degree above cap");
  }
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  require_same(a, b);
  return a.terms_ == b.terms_;
}

std::string BiPoly::str(const char* vx, const char* vy) const {
  if (is_zero()) return "0";
  std::vector<std::pair<int, int>> keys;
  keys.reserve(terms_.size());
  for (const auto& [e, c] : terms_) keys.push_back(e);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += " + ";
    out += terms_.at(k).str();
    out += "*";
    out += vx;
    out += "^" + std::to_string(k.first) + "*";
    out += vy;
    out += "^" + std::to_string(k.second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// exact_div: view both sides in (F_q[y])[x]; at every x-degree step the
// leading y-polynomial must divide exactly, otherwise NotDivisible.

namespace {

// x-degree -> dense y-polynomial
std::map<int, FPoly> by_x(const BiPoly& a, const CtxPtr& ctx) {
  std::map<int, FPoly> m;
  for (const auto& [e, c] : a.terms()) {
    auto& v = m[e.first];
    if (static_cast<int>(v.size()) <= e.second) v.resize(e.second + 1, ctx->zero());
    v[e.second] = c;
  }
  return m;
}

}  // namespace

BiPoly exact_div(const BiPoly& a, const BiPoly& d) {
  require_same(a, d);
  const CtxPtr& ctx = a.ctx();
  if (d.is_zero()) fail(Err::DivisionByZeroPoly, "division by zero polynomial");
  BiPoly q(ctx);
  if (a.is_zero()) return q;

  int dxd = d.degree_x();
  auto dm = by_x(d, ctx);
  FPoly lead = dm.count(dxd) ? dm[dxd] : FPoly{};
  ftrim(lead);

  auto cur = by_x(a, ctx);
  auto top_x = [&cur]() {
    int t = -1;
    for (auto& [k, v] : cur) {
      ftrim(v);
      if (!v.empty()) t = std::max(t, k);
    }
    return t;
  };

  for (int k = top_x(); k >= dxd; k = top_x()) {
    if (k < 0) break;
    FPoly cy = cur[k];
    ftrim(cy);
    if (cy.empty()) continue;
    FPoly qy, ry;
    fdivmod(cy, lead, ctx, qy, ry);
    if (!ry.empty()) fail(Err::NotDivisible, "leading coefficient division not exact");
    int shift = k - dxd;
    for (size_t j = 0; j < qy.size(); ++j) q.add_term(shift, static_cast<int>(j), qy[j]);
    // cur -= (qy * x^shift) * d
    for (const auto& [xe, yv] : dm) {
      FPoly prod = fmul(qy, yv, ctx);
      auto& slot = cur[xe + shift];
      slot = fsub(slot, prod, ctx);
    }
  }
  for (auto& [k, v] : cur) {
    ftrim(v);
    if (!v.empty()) fail(Err::NotDivisible, "nonzero remainder");
  }
  if (!(q * d == a)) fail(Err::NotDivisible, "reconstruction check failed");
  return q;
}

// ---------------------------------------------------------------------------
// Taylor shift

namespace {

// in-place synthetic shift of a dense coefficient vector: P(t) -> P(t + c)
void shift_dense(FPoly& a, const FieldElement& c) {
  if (c.is_zero() || a.empty()) return;
  int n = fdeg(a);
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[j] = a[j] + c * a[j + 1];
  }
}

}  // namespace

BiPoly taylor_shift(const BiPoly& a, const FieldElement& x0, const FieldElement& y0) {
  if (!a.ctx()->same(*x0.ctx()) || !a.ctx()->same(*y0.ctx())) {
    fail(Err::MixedContext, "shift point from different context");
  }
  const CtxPtr& ctx = a.ctx();
  BiPoly mid(ctx);
  {
    // group by y-exponent, shift in x
    std::map<int, FPoly> rows;
    for (const auto& [e, c] : a.terms()) {
      auto& v = rows[e.second];
      if (static_cast<int>(v.size()) <= e.first) v.resize(e.first + 1, ctx->zero());
      v[e.first] = c;
    }
    for (auto& [j, v] : rows) {
      shift_dense(v, x0);
      for (size_t i = 0; i < v.size(); ++i) mid.add_term(static_cast<int>(i), j, v[i]);
    }
  }
  BiPoly out(ctx);
  {
    std::map<int, FPoly> cols;
    for (const auto& [e, c] : mid.terms()) {
      auto& v = cols[e.first];
      if (static_cast<int>(v.size()) <= e.second) v.resize(e.second + 1, ctx->zero());
      v[e.second] = c;
    }
    for (auto& [i, v] : cols) {
      shift_dense(v, y0);
      for (size_t j = 0; j < v.size(); ++j) out.add_term(i, static_cast<int>(j), v[j]);
    }
  }
  return out;
}

BiPoly homogeneous_component(const BiPoly& a, int d) {
  if (d < 0) fail(Err::InvalidArgument, "negative degree");
  BiPoly r(a.ctx());
  for (const auto& [e, c] : a.terms()) {
    if (e.first + e.second == d) r.add_term(e.first, e.second, c);
  }
  return r;
}

int lowest_degree(const BiPoly& a) {
  if (a.is_zero()) fail(Err::ZeroPolynomial, "lowest degree of zero polynomial");
  int d = a.total_degree();
  for (const auto& [e, c] : a.terms()) d = std::min(d, e.first + e.second);
  return d;
}

// ---------------------------------------------------------------------------
// Homogenization

HomForm homogenize(const BiPoly& a) {
  if (a.is_zero()) fail(Err::ZeroPolynomial, "homogenize zero polynomial");
  return HomForm{a, a.total_degree()};
}

BiPoly dehomogenize_at_y(const HomForm& f) {
  BiPoly r(f.xy.ctx());
  for (const auto& [e, c] : f.xy.terms()) {
    r.add_term(e.first, f.deg - e.first - e.second, c);
  }
  return r;
}

BiPoly set_z_one(const HomForm& f) { return f.xy; }

std::string HomForm::str() const {
  if (xy.is_zero()) return "0";
  std::vector<std::pair<int, int>> keys;
  for (const auto& [e, c] : xy.terms()) keys.push_back(e);
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += " + ";
    out += xy.terms().at(k).str() + "*x^" + std::to_string(k.first) + "*y^" + std::to_string(k.second) +
           "*z^" + std::to_string(deg - k.first - k.second);
  }
  return out;
}

bool is_homogeneous(const BiPoly& a) {
  if (a.is_zero()) return true;
  int d = a.total_degree();
  for (const auto& [e, c] : a.terms()) {
    if (e.first + e.second != d) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Binary-form gcd and structure tests

namespace {

int min_exp_x(const BiPoly& a) {
  int m = a.degree_x();
  for (const auto& [e, c] : a.terms()) m = std::min(m, e.first);
  return m;
}

int min_exp_y(const BiPoly& a) {
  int m = a.degree_y();
  for (const auto& [e, c] : a.terms()) m = std::min(m, e.second);
  return m;
}

// strip x^ax y^ay and dehomogenize the rest at y=1
FPoly core_dehom(const BiPoly& a, int ax, int ay, const CtxPtr& ctx) {
  int d = a.total_degree() - ax - ay;
  FPoly v(d + 1, ctx->zero());
  for (const auto& [e, c] : a.terms()) v[e.first - ax] = c;
  return v;
}

BiPoly rehomogenize(const FPoly& u, const CtxPtr& ctx) {
  BiPoly r(ctx);
  int d = fdeg(u);
  for (int i = 0; i <= d; ++i) {
    if (!u[i].is_zero()) r.add_term(i, d - i, u[i]);
  }
  return r;
}

// monic in x (the homogeneous term at max x-degree is unique); degenerates to
// monic in y when the form is x-free
BiPoly normalize_form(const BiPoly& a) {
  if (a.is_zero()) return a;
  int dx = a.degree_x();
  int d = a.total_degree();
  FieldElement lead = a.coeff(dx, d - dx);
  return a.scale(lead.inv());
}

}  // namespace

BiPoly hom_gcd(const BiPoly& a, const BiPoly& b) {
  if (!is_homogeneous(a) || !is_homogeneous(b)) fail(Err::NotHomogeneous, "hom_gcd needs homogeneous forms");
  if (a.is_zero() && b.is_zero()) fail(Err::InvalidArgument, "hom_gcd of two zero forms");
  if (a.is_zero()) return normalize_form(b);
  if (b.is_zero()) return normalize_form(a);
  require_same(a, b);
  const CtxPtr& ctx = a.ctx();
  int ax = min_exp_x(a), ay = min_exp_y(a);
  int bx = min_exp_x(b), by = min_exp_y(b);
  FPoly a0 = core_dehom(a, ax, ay, ctx);
  FPoly b0 = core_dehom(b, bx, by, ctx);
  FPoly g = fgcd(a0, b0, ctx);
  BiPoly r = rehomogenize(g, ctx);
  BiPoly shift = BiPoly::monomial(ctx->one(), std::min(ax, bx), std::min(ay, by));
  return normalize_form(r * shift);
}

std::pair<BiPoly, BiPoly> partials(const BiPoly& a) {
  const CtxPtr& ctx = a.ctx();
  BiPoly dx(ctx), dy(ctx);
  for (const auto& [e, c] : a.terms()) {
    if (e.first > 0) dx.add_term(e.first - 1, e.second, c * ctx->from_int(e.first));
    if (e.second > 0) dy.add_term(e.first, e.second - 1, c * ctx->from_int(e.second));
  }
  return {dx, dy};
}

bool squarefree_form(const BiPoly& a) {
  if (a.is_zero()) fail(Err::ZeroPolynomial, "squarefree test on zero form");
  if (!is_homogeneous(a)) fail(Err::NotHomogeneous, "squarefree test needs a homogeneous form");
  auto [dx, dy] = partials(a);
  if (a.total_degree() == 0) return true;
  auto constant = [](const BiPoly& g) { return !g.is_zero() && g.total_degree() == 0; };
  return constant(hom_gcd(a, dx)) && constant(hom_gcd(a, dy));
}

bool single_root_form(const BiPoly& a) {
  if (a.is_zero()) fail(Err::ZeroPolynomial, "single-root test on zero form");
  if (!is_homogeneous(a)) fail(Err::NotHomogeneous, "single-root test needs a homogeneous form");
  int d = a.total_degree();
  if (d == 0) return false;
  int ax = min_exp_x(a), ay = min_exp_y(a);
  if (ax > 0 && ay > 0) return false;       // both x and y divide: two lines
  if (ax == d || ay == d) return true;      // pure power of one variable
  if (ax > 0 || ay > 0) return false;       // a variable line plus another factor
  const CtxPtr& ctx = a.ctx();
  long long p = ctx->p();
  // write d = p^e * d' with gcd(d', p) = 1; a single root forces the
  // dehomogenization to be c * (x^(p^e) - rho)^(d')
  long long pe = 1;
  long long dd = d;
  while (dd % p == 0) {
    pe *= p;
    dd /= p;
  }
  FPoly u = core_dehom(a, 0, 0, ctx);
  for (int i = 0; i <= fdeg(u); ++i) {
    if (!u[i].is_zero() && i % pe != 0) return false;
  }
  FPoly w(dd + 1, ctx->zero());
  for (long long i = 0; i <= dd; ++i) w[i] = u[i * pe];
  // w must equal c*(t - rho)^dd with dd invertible mod p
  FieldElement c = w[dd];
  FieldElement ddinv = ctx->from_int(dd).inv();
  FieldElement rho = -(w[dd - 1] * ddinv * c.inv());
  // expand c*(t - rho)^dd and compare
  FPoly expand(dd + 1, ctx->zero());
  FieldElement pw = ctx->one();
  for (long long k = dd; k >= 0; --k) {
    // coefficient of t^k: c * binom(dd, k) * (-rho)^(dd-k)
    FieldElement bin = ctx->from_int(binom_mod_p(dd, k, p));
    expand[k] = c * bin * pw;
    pw = pw * (-rho);
  }
  for (long long i = 0; i <= dd; ++i) {
    if (!(expand[i] == w[i])) return false;
  }
  return true;
}

BiPoly sigma_map(const BiPoly& a) {
  BiPoly r(a.ctx());
  for (const auto& [e, c] : a.terms()) r.add_term(e.first, e.second, c.frobenius());
  return r;
}

FieldElement eval(const BiPoly& a, const FieldElement& x0, const FieldElement& y0) {
  if (!a.ctx()->same(*x0.ctx()) || !a.ctx()->same(*y0.ctx())) {
    fail(Err::MixedContext, "evaluation point from different context");
  }
  const CtxPtr& ctx = a.ctx();
  if (a.is_zero()) return ctx->zero();
  int dx = a.degree_x(), dy = a.degree_y();
  std::vector<FieldElement> xp, yp;
  xp.reserve(dx + 1);
  yp.reserve(dy + 1);
  FieldElement acc = ctx->one();
  for (int i = 0; i <= dx; ++i) { xp.push_back(acc); acc = acc * x0; }
  acc = ctx->one();
  for (int j = 0; j <= dy; ++j) { yp.push_back(acc); acc = acc * y0; }
  FieldElement r = ctx->zero();
  for (const auto& [e, c] : a.terms()) r = r + c * xp[e.first] * yp[e.second];
  return r;
}

BiPoly lift(const BiPoly& a, const SubfieldEmbedding& emb) {
  if (!a.ctx()->same(*emb.small())) fail(Err::MixedContext, "lift argument over wrong context");
  BiPoly r(emb.big());
  for (const auto& [e, c] : a.terms()) r.add_term(e.first, e.second, emb(c));
  return r;
}

}  // namespace pn
