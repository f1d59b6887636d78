#include "pn/factor.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace pn {

namespace {

// Slots for a monic-in-x candidate with x-degree e and total degree t:
// every (i, j) with i < e, i + j <= t, ordered by (i + j, i, j).
std::vector<std::pair<int, int>> candidate_slots(int e, int t) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < e; ++i) {
    for (int j = 0; i + j <= t; ++j) slots.emplace_back(i, j);
  }
  std::sort(slots.begin(), slots.end(), [](const auto& a, const auto& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a < b;
  });
  return slots;
}

// first factor of total degree <= deg_cap dividing P, or nullopt
std::optional<BiPoly> find_factor(const BiPoly& P, int deg_cap, long long candidate_limit) {
  const CtxPtr& ctx = P.ctx();
  std::uint64_t q = ctx->order();
  int dP = P.total_degree();
  for (int t = 1; t <= std::min(deg_cap, dP); ++t) {
    for (int e = 1; e <= t; ++e) {
      auto slots = candidate_slots(e, t);
      // candidate count q^slots; guard the whole (t, e) block
      long double est = 1;
      for (size_t i = 0; i < slots.size(); ++i) est *= static_cast<long double>(q);
      if (est > static_cast<long double>(candidate_limit)) {
        fail(Err::SearchSpaceTooLarge,
             "candidate block of about " + std::to_string(static_cast<double>(est)) + " divisors");
      }
      std::uint64_t total = 1;
      for (size_t i = 0; i < slots.size(); ++i) total *= q;
      std::vector<std::uint64_t> digit(slots.size(), 0);
      for (std::uint64_t n = 0; n < total; ++n) {
        // decode n into slot values
        std::uint64_t v = n;
        BiPoly cand = BiPoly::monomial(ctx->one(), e, 0);
        bool reaches_t = e == t;
        for (size_t si = 0; si < slots.size(); ++si) {
          std::uint64_t cv = v % q;
          v /= q;
          if (cv != 0) {
            cand.add_term(slots[si].first, slots[si].second, ctx->element(cv));
            if (slots[si].first + slots[si].second == t) reaches_t = true;
          }
        }
        if (!reaches_t) continue;  // candidates of lower total degree were already tried
        try {
          BiPoly quot = exact_div(P, cand);
          (void)quot;
          return cand;
        } catch (const Error& err) {
          if (err.code() != Err::NotDivisible) throw;
        }
      }
    }
  }
  return std::nullopt;
}

long long isqrt_floor(long long v) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

FactorizationResult bounded_factor_search(const BiPoly& P, int deg_cap, long long candidate_limit) {
  if (P.is_zero()) fail(Err::ZeroPolynomial, "factor search on zero polynomial");
  if (P.total_degree() > 12) fail(Err::CapExceeded, "factor search input degree above 12");
  if (P.ctx()->order() > 81) fail(Err::CapExceeded, "factor search field above 81 elements");
  if (deg_cap < 1 || deg_cap > 4) fail(Err::InvalidArgument, "deg_cap must be in 1..4");

  const CtxPtr& ctx = P.ctx();
  FactorizationResult fr{P, {}, ctx->one(), false, {}, {}};
  BiPoly rem = P;
  while (!rem.is_zero() && rem.total_degree() > 0) {
    auto f = find_factor(rem, deg_cap, candidate_limit);
    if (!f) break;
    rem = exact_div(rem, *f);
    auto it = std::find_if(fr.factors.begin(), fr.factors.end(),
                           [&](const auto& pr) { return pr.first == *f; });
    if (it == fr.factors.end()) {
      fr.factors.emplace_back(*f, 1);
    } else {
      ++it->second;
    }
  }
  if (!rem.is_zero() && rem.total_degree() == 0) {
    fr.scalar = rem.coeff(0, 0);
    fr.complete = true;
  }
  // reconstruction check on complete factorizations
  if (fr.complete) {
    BiPoly acc = BiPoly::constant(fr.scalar);
    for (const auto& [g, mult] : fr.factors) {
      for (int i = 0; i < mult; ++i) acc = acc * g;
    }
    if (!(acc == P)) fail(Err::TableViolation, "factor reconstruction failed");
  }
  // sigma-orbit partition
  std::vector<int> orbit_of(fr.factors.size(), -1);
  for (size_t i = 0; i < fr.factors.size(); ++i) {
    if (orbit_of[i] != -1) continue;
    std::vector<int> orbit;
    size_t cur = i;
    while (orbit_of[cur] == -1) {
      orbit_of[cur] = static_cast<int>(fr.orbits.size());
      orbit.push_back(static_cast<int>(cur));
      BiPoly img = sigma_map(fr.factors[cur].first);
      auto it = std::find_if(fr.factors.begin(), fr.factors.end(),
                             [&](const auto& pr) { return pr.first == img; });
      if (it == fr.factors.end()) {
        if (fr.complete) fail(Err::TableViolation, "sigma image of a factor is not a factor");
        break;
      }
      cur = static_cast<size_t>(it - fr.factors.begin());
    }
    fr.orbits.push_back(std::move(orbit));
  }
  // orbit products have prime-field coefficients
  CtxPtr ctx0 = FieldCtx::create(ctx->p(), 1);
  for (const auto& orbit : fr.orbits) {
    BiPoly prod = BiPoly::constant(ctx->one());
    for (int idx : orbit) prod = prod * fr.factors[idx].first;
    BiPoly down(ctx0);
    for (const auto& [e, c] : prod.terms()) {
      const auto& v = c.coeffs();
      for (size_t i = 1; i < v.size(); ++i) {
        if (v[i] != 0) fail(Err::TableViolation, "sigma-orbit product left the prime field");
      }
      down.add_term(e.first, e.second, ctx0->from_int(v[0]));
    }
    fr.fp_factors.push_back(std::move(down));
  }
  return fr;
}

OrbitVerdict sigma_orbit_analysis(const FactorizationResult& fr) {
  if (!fr.complete) fail(Err::IncompleteFactorization, "orbit analysis needs a complete factorization");
  const CtxPtr& ctx = fr.input.ctx();
  int s = ctx->s();
  // verify each non-linear factor stays irreducible over the quadratic extension
  CtxPtr big = FieldCtx::create(ctx->p(), 2 * s);
  SubfieldEmbedding emb(ctx, big);
  for (const auto& [g, mult] : fr.factors) {
    int d = g.total_degree();
    if (d <= 1) continue;
    BiPoly gl = lift(g, emb);
    auto sub = bounded_factor_search(gl, std::min(4, d - 1));
    if (!sub.factors.empty()) {
      fail(Err::IncompleteFactorization,
           "a factor splits over the quadratic extension; refactor over a larger field");
    }
  }
  bool has_fixed = std::any_of(fr.orbits.begin(), fr.orbits.end(),
                               [](const auto& o) { return o.size() == 1; });
  OrbitVerdict v{has_fixed ? AbsIrredKind::HasAbsIrredFactorOverFp : AbsIrredKind::NoAbsIrredFactorOverFp,
                 2 * s,
                 "absolute irreducibility verified only up to F_{p^" + std::to_string(2 * s) + "}"};
  return v;
}

long long point_count(const CurveFamily& fam, int n) {
  std::uint64_t q = 1;
  for (int i = 0; i < 2 * n; ++i) {
    q *= static_cast<std::uint64_t>(fam.p);
    if (q > 100'000'000ULL) fail(Err::CapExceeded, "point count above the pair cap");
  }
  CtxPtr ctx = FieldCtx::create(fam.p, n);
  SubfieldEmbedding emb(fam.ctx0, ctx);
  BiPoly h = lift(fam.h, emb);
  std::uint64_t qn = ctx->order();
  long long count = 0;
  int dy = h.degree_y();
  for (std::uint64_t xi = 0; xi < qn; ++xi) {
    FieldElement x0 = ctx->element(xi);
    // collapse to a univariate in y
    std::vector<FieldElement> slice(dy + 1, ctx->zero());
    std::vector<FieldElement> xp;
    FieldElement acc = ctx->one();
    for (int i = 0; i <= h.degree_x(); ++i) {
      xp.push_back(acc);
      acc = acc * x0;
    }
    for (const auto& [e, c] : h.terms()) slice[e.second] = slice[e.second] + c * xp[e.first];
    for (std::uint64_t yi = 0; yi < qn; ++yi) {
      FieldElement y0 = ctx->element(yi);
      FieldElement v = ctx->zero();
      for (int j = dy; j >= 0; --j) v = v * y0 + slice[j];
      if (v.is_zero()) ++count;
    }
  }
  return count;
}

std::vector<BandRow> weil_band_check(const CurveFamily& fam, const std::vector<int>& ns) {
  std::vector<BandRow> rows;
  long long D = fam.m - 2;
  for (int n : ns) {
    long long cnt = point_count(fam, n);
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= fam.p;
    long long dev = (D - 1) * (D - 2) * (isqrt_floor(q) + 1) + D * D;
    BandRow row{n, cnt, q, std::max(0LL, q - dev), q + dev, ""};
    row.label = cnt >= row.band_low ? "consistent_with_fp_factor" : "evidence_against";
    rows.push_back(row);
  }
  return rows;
}

std::string band_csv(const std::vector<BandRow>& rows) {
  std::string out = "n,count,p_n,band_low,band_high,label\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.count) + "," + std::to_string(r.q) + "," +
           std::to_string(r.band_low) + "," + std::to_string(r.band_high) + "," + r.label + "\n";
  }
  return out;
}

}  // namespace pn
