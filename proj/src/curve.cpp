#include "pn/curve.hpp"

#include <algorithm>
#include <numeric>

namespace pn {

namespace {

constexpr std::uint64_t kPairCap = 100'000'000;   // p^(2s) cap for affine scans
constexpr std::uint64_t kFieldCap = 1'000'000;    // p^s cap for any single scan

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t upow_capped(long long b, int e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= static_cast<std::uint64_t>(b);
    if (r > cap) return cap + 1;
  }
  return r;
}

int ord_mod(long long p, long long K) {
  if (K == 1) return 1;
  long long v = p % K;
  int t = 1;
  long long acc = v;
  while (acc != 1) {
    acc = acc * v % K;
    ++t;
    if (t > K) fail(Err::InvalidArgument, "order computation ran away");
  }
  return t;
}

int expected_mult(SingType t, long long pl) {
  switch (t) {
    case SingType::Ia: return static_cast<int>(pl);
    case SingType::Ib: return static_cast<int>(pl - 1);
    case SingType::IIa: return static_cast<int>(pl + 1);
    case SingType::IIb: return static_cast<int>(pl);
    case SingType::IIc: return static_cast<int>(pl);
    case SingType::IIIa: return static_cast<int>(pl - 1);
    case SingType::IIIb: return static_cast<int>(pl);
    case SingType::IIIc: return static_cast<int>(pl - 1);
    case SingType::Plain2: return 2;
  }
  return 0;
}

// dehomogenized-at-y forms of f and h lifted to the working field
struct LiftedTilde {
  BiPoly h_t, f_t;
};

LiftedTilde tilde_forms(const CurveFamily& fam, const SubfieldEmbedding& emb) {
  BiPoly h_t = dehomogenize_at_y(homogenize(fam.h));
  BiPoly f_t = dehomogenize_at_y(homogenize(fam.f));
  return {lift(h_t, emb), lift(f_t, emb)};
}

void fill_tangent_and_bound(const CurveFamily& fam, SingularPoint& pt) {
  TangentData td = tangent_data(fam, pt);
  bool conditional = false;
  pt.it_bound = it_bound_value(fam, pt, td, &conditional);
  pt.it_conditional = conditional;
  if (pt.type == SingType::IIc) pt.cond3 = iic_shared_tangent(fam, pt.x0, pt.y0);
}

void check_mult_pair(const SingularPoint& pt) {
  bool diag = pt.at_infinity ? (pt.x0 == pt.x0.ctx()->one()) : (pt.x0 == pt.y0);
  int want = diag ? 1 : 0;
  if (pt.mult_f - pt.mult_h != want) {
    fail(Err::TableViolation, "mult_f - mult_h = " + std::to_string(pt.mult_f - pt.mult_h) +
                                  " at a point where " + std::to_string(want) + " was forced");
  }
}

}  // namespace

const char* sing_type_name(SingType t) {
  switch (t) {
    case SingType::Ia: return "Ia";
    case SingType::Ib: return "Ib";
    case SingType::IIa: return "IIa";
    case SingType::IIb: return "IIb";
    case SingType::IIc: return "IIc";
    case SingType::IIIa: return "IIIa";
    case SingType::IIIb: return "IIIb";
    case SingType::IIIc: return "IIIc";
    case SingType::Plain2: return "Plain2";
  }
  return "?";
}

CurveFamily build_family(long long p, long long m) {
  if (m < 3) fail(Err::MTooSmall, "family needs m >= 3");
  if (m % p == 0) fail(Err::MNotNormalized, "m divisible by p; normalize first");
  CtxPtr ctx = FieldCtx::create(p, 1);
  BiPoly f(ctx);
  for (long long k = 1; k <= m - 1; ++k) {
    long long c = binom_mod_p(m, k, p);
    if (c == 0) continue;
    FieldElement fc = ctx->from_int(c);
    f.add_term(static_cast<int>(k), 0, fc);
    f.add_term(0, static_cast<int>(k), -fc);
  }
  BiPoly xmy = BiPoly::var_x(ctx) - BiPoly::var_y(ctx);
  BiPoly h = exact_div(f, xmy);
  if (f.total_degree() != m - 1 || h.total_degree() != m - 2) {
    fail(Err::TableViolation, "degree of f or h does not match m");
  }
  CurveFamily fam{p, m, ctx, f, h, std::nullopt};
  if ((m - 1) % p == 0) fam.prof = profile(p, m);
  return fam;
}

int infinity_extension(const CurveFamily& fam) {
  if (!fam.prof) fail(Err::WrongRegime, "infinity analysis is for m == 1 (mod p)");
  int o = ord_mod(fam.p, fam.prof->K);
  return static_cast<int>(std::lcm(o, fam.prof->l));
}

SingType classify_location(const CurveFamily& fam, bool at_infinity, const FieldElement& x0,
                           const FieldElement& y0) {
  if (!fam.prof) return SingType::Plain2;
  const PAdicProfile& pr = *fam.prof;
  if (at_infinity) {
    const FieldElement one = x0.ctx()->one();
    if (x0 == one) return SingType::IIIa;
    if (x0.pow(pr.d) == one) return SingType::IIIb;
    return SingType::IIIc;
  }
  bool sx = in_subfield_star(x0, pr.l);
  bool sy = in_subfield_star(y0, pr.l);
  if (x0 == y0) return sx ? SingType::Ia : SingType::Ib;
  if (sx && sy) return SingType::IIa;
  if (sx || sy) return SingType::IIb;
  return SingType::IIc;
}

bool iic_shared_tangent(const CurveFamily& fam, const FieldElement& x0, const FieldElement& y0) {
  if (!fam.prof) fail(Err::WrongRegime, "shared-tangent criterion is for m == 1 (mod p)");
  const CtxPtr& ctx = x0.ctx();
  unsigned long long pl = static_cast<unsigned long long>(fam.prof->pl);
  const FieldElement one = ctx->one();
  FieldElement lhs = y0 * (x0 + one).pow(pl) * (y0.pow(pl - 1) - one).pow(pl + 1);
  FieldElement rhs = x0 * (y0 + one).pow(pl) * (x0.pow(pl - 1) - one).pow(pl + 1);
  return lhs == rhs;
}

TangentData tangent_data(const CurveFamily& fam, const SingularPoint& pt) {
  const CtxPtr& field = pt.x0.ctx();
  SubfieldEmbedding emb(fam.ctx0, field);
  TangentData td(field);
  BiPoly hs(field), fs(field);
  bool diag;
  if (pt.at_infinity) {
    auto [h_t, f_t] = tilde_forms(fam, emb);
    hs = taylor_shift(h_t, pt.x0, field->zero());
    fs = taylor_shift(f_t, pt.x0, field->zero());
    diag = pt.x0 == field->one();
  } else {
    hs = taylor_shift(lift(fam.h, emb), pt.x0, pt.y0);
    fs = taylor_shift(lift(fam.f, emb), pt.x0, pt.y0);
    diag = pt.x0 == pt.y0;
  }
  if (eval(hs, field->zero(), field->zero()) != field->zero()) {
    fail(Err::NotSingular, "point is not on h");
  }
  td.mt = lowest_degree(hs);
  if (td.mt < 2) fail(Err::NotSingular, "point has multiplicity < 2 on h");
  td.h_low = homogeneous_component(hs, td.mt);
  td.h_low1 = homogeneous_component(hs, td.mt + 1);

  // Transfer identities between the components of shifted f and shifted h.
  BiPoly x = BiPoly::var_x(field), y = BiPoly::var_y(field);
  if (pt.at_infinity) {
    FieldElement c = pt.x0 - field->one();
    if (diag) {
      if (!(homogeneous_component(fs, td.mt + 1) == x * td.h_low)) {
        fail(Err::TableViolation, "transfer identity failed at (1:1:0)");
      }
    } else {
      if (!(homogeneous_component(fs, td.mt) == td.h_low.scale(c)) ||
          !(homogeneous_component(fs, td.mt + 1) == x * td.h_low + td.h_low1.scale(c))) {
        fail(Err::TableViolation, "transfer identity failed at infinity");
      }
    }
  } else if (diag) {
    if (!(homogeneous_component(fs, td.mt + 1) == (x - y) * td.h_low) ||
        !(homogeneous_component(fs, td.mt + 2) == (x - y) * td.h_low1)) {
      fail(Err::TableViolation, "transfer identity failed at a diagonal point");
    }
  } else {
    FieldElement c = pt.x0 - pt.y0;
    if (!(homogeneous_component(fs, td.mt) == td.h_low.scale(c)) ||
        !(homogeneous_component(fs, td.mt + 1) == (x - y) * td.h_low + td.h_low1.scale(c))) {
      fail(Err::TableViolation, "transfer identity failed at an off-diagonal point");
    }
  }

  td.squarefree = squarefree_form(td.h_low);
  if (td.h_low1.is_zero()) {
    td.coprime_consecutive = false;
  } else {
    BiPoly g = hom_gcd(td.h_low, td.h_low1);
    td.coprime_consecutive = g.total_degree() == 0;
  }
  td.single_line = single_root_form(td.h_low);
  return td;
}

Rat it_bound_value(const CurveFamily& fam, const SingularPoint& pt, const TangentData& td,
                   bool* conditional) {
  *conditional = false;
  if (pt.type == SingType::IIc) {
    bool c3 = iic_shared_tangent(fam, pt.x0, pt.y0);
    if (c3 == td.coprime_consecutive) {
      fail(Err::TableViolation, "shared-tangent criterion disagrees with component gcd");
    }
    if (c3) {
      *conditional = true;
      return Rat(fam.prof->pl);
    }
    return Rat(0);
  }
  if (td.single_line && td.coprime_consecutive) return Rat(0);
  if (td.squarefree) return Rat((td.mt / 2) * (td.mt - td.mt / 2));
  fail(Err::UnclassifiedPoint, "tangent structure matches no bound rule");
}

std::vector<SingularPoint> infinity_singularities(const CurveFamily& fam) {
  if (!fam.prof) fail(Err::WrongRegime, "infinity singularities are for m == 1 (mod p)");
  const PAdicProfile& pr = *fam.prof;
  int s = infinity_extension(fam);
  if (upow_capped(fam.p, s, kFieldCap) > kFieldCap) {
    fail(Err::CapExceeded, "infinity scan field too large");
  }
  CtxPtr ctx = FieldCtx::create(fam.p, s);
  SubfieldEmbedding emb(fam.ctx0, ctx);
  auto [h_t, f_t] = tilde_forms(fam, emb);
  auto roots = nth_roots_of_unity(ctx, static_cast<unsigned long long>(pr.K));
  if (static_cast<long long>(roots.size()) != pr.K) {
    fail(Err::TableViolation, "expected exactly K roots of unity in the splitting field");
  }
  std::vector<SingularPoint> out;
  for (const auto& w : roots) {
    SingularPoint pt(true, w, ctx->one());
    BiPoly hs = taylor_shift(h_t, w, ctx->zero());
    BiPoly fs = taylor_shift(f_t, w, ctx->zero());
    pt.mult_h = lowest_degree(hs);
    pt.mult_f = lowest_degree(fs);
    pt.type = classify_location(fam, true, w, ctx->one());
    bool heavy = w.pow(pr.d) == ctx->one() && !(w == ctx->one());
    int predicted = static_cast<int>(heavy ? pr.pl : pr.pl - 1);
    if (pt.mult_h != predicted || pt.mult_h != expected_mult(pt.type, pr.pl)) {
      fail(Err::TableViolation, "infinity multiplicity mismatch at omega = " + w.str());
    }
    check_mult_pair(pt);
    fill_tangent_and_bound(fam, pt);
    out.push_back(std::move(pt));
  }
  std::sort(out.begin(), out.end(),
            [](const SingularPoint& a, const SingularPoint& b) { return a.x0.index() < b.x0.index(); });
  return out;
}

namespace {

std::vector<SingularPoint> affine_points_common(const CurveFamily& fam, int s,
                                                unsigned long long cond_exp, bool require_offdiag,
                                                bool expect_mult2) {
  if (upow_capped(fam.p, 2 * s, kPairCap) > kPairCap) {
    fail(Err::CapExceeded, "affine scan would exceed the pair cap");
  }
  CtxPtr ctx = FieldCtx::create(fam.p, s);
  SubfieldEmbedding emb(fam.ctx0, ctx);
  BiPoly h_s = lift(fam.h, emb);
  BiPoly f_s = lift(fam.f, emb);
  auto [hx, hy] = partials(h_s);

  // roots of (x+1)^cond = x^cond by scanning the field
  std::vector<FieldElement> roots;
  const FieldElement one = ctx->one();
  for (std::uint64_t i = 0; i < ctx->order(); ++i) {
    FieldElement a = ctx->element(i);
    if ((a + one).pow(cond_exp) == a.pow(cond_exp)) roots.push_back(a);
  }
  std::vector<SingularPoint> out;
  for (const auto& x0 : roots) {
    FieldElement xk = x0.pow(cond_exp);
    for (const auto& y0 : roots) {
      if (!(xk == y0.pow(cond_exp))) continue;
      if (require_offdiag && x0 == y0) continue;
      SingularPoint pt(false, x0, y0);
      BiPoly hs = taylor_shift(h_s, x0, y0);
      BiPoly fs = taylor_shift(f_s, x0, y0);
      pt.mult_h = lowest_degree(hs);
      pt.mult_f = lowest_degree(fs);
      pt.type = classify_location(fam, false, x0, y0);
      // gradient cross-check, independently of the root characterization
      if (!eval(h_s, x0, y0).is_zero() || !eval(hx, x0, y0).is_zero() ||
          !eval(hy, x0, y0).is_zero()) {
        fail(Err::TableViolation, "enumerated point fails the gradient check");
      }
      int want = expect_mult2 ? 2 : expected_mult(pt.type, fam.prof->pl);
      if (pt.mult_h != want) {
        fail(Err::TableViolation,
             "affine multiplicity mismatch at (" + x0.str() + ", " + y0.str() + ")");
      }
      check_mult_pair(pt);
      fill_tangent_and_bound(fam, pt);
      out.push_back(std::move(pt));
    }
  }
  std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
    if (a.x0.index() != b.x0.index()) return a.x0.index() < b.x0.index();
    return a.y0.index() < b.y0.index();
  });
  return out;
}

}  // namespace

std::vector<SingularPoint> affine_singularities(const CurveFamily& fam, int s) {
  if (!fam.prof) fail(Err::WrongRegime, "affine singularities (table regime) need m == 1 (mod p)");
  if (s % fam.prof->l != 0) fail(Err::ExtensionNotMultipleOfL, "need l | s for subfield tests");
  auto pts = affine_points_common(fam, s, static_cast<unsigned long long>(fam.prof->K), false, false);
  if (static_cast<long long>(pts.size()) > affine_count_cap(*fam.prof)) {
    fail(Err::TableViolation, "affine count exceeds its cap");
  }
  return pts;
}

ExtensionChoice choose_affine_extension(const CurveFamily& fam) {
  int s = fam.prof ? infinity_extension(fam) : 1;
  while (true) {
    if (upow_capped(fam.p, 4 * s, kPairCap) > kPairCap) return {s, false};
    size_t n1 = fam.prof ? affine_singularities(fam, s).size() : singularities_general(fam, s).size();
    size_t n2 =
        fam.prof ? affine_singularities(fam, 2 * s).size() : singularities_general(fam, 2 * s).size();
    if (n1 == n2) return {s, true};
    s *= 2;
  }
}

std::vector<SingularPoint> singularities_general(const CurveFamily& fam, int s) {
  if (fam.prof) fail(Err::WrongRegime, "general regime needs m !== 1 (mod p)");
  auto pts =
      affine_points_common(fam, s, static_cast<unsigned long long>(fam.m - 1), true, true);

  // no singular point at infinity: check every point of the projective closure
  // on z = 0 over the same field
  CtxPtr ctx = FieldCtx::create(fam.p, s);
  SubfieldEmbedding emb(fam.ctx0, ctx);
  auto [h_t, f_t] = tilde_forms(fam, emb);
  BiPoly top = homogeneous_component(fam.h, fam.m - 2);
  if (top.coeff(static_cast<int>(fam.m - 2), 0).is_zero()) {
    fail(Err::TableViolation, "(1:0:0) lies on the projective closure");
  }
  BiPoly top_l = lift(top, emb);
  for (std::uint64_t i = 0; i < ctx->order(); ++i) {
    FieldElement w = ctx->element(i);
    if (!eval(top_l, w, ctx->one()).is_zero()) continue;
    BiPoly hs = taylor_shift(h_t, w, ctx->zero());
    if (lowest_degree(hs) >= 2) {
      fail(Err::TableViolation, "unexpected singular point at infinity in the general regime");
    }
  }
  return pts;
}

long long table1_n1(const PAdicProfile& pr) {
  return (pr.K - 1) * (2 * pr.K - (pr.m_b + 1) * ipow(pr.p, pr.i_b - pr.l) - 1) -
         (pr.d - 1) * (pr.d - 2);
}

long long table1_n2_generic(const PAdicProfile& pr) {
  return ((pr.pl - 2) * (pr.pl + 1) + 1) * (pr.K - 1);
}

long long offdiagonal_count_cap(const PAdicProfile& pr) {
  return (pr.K - 1) * (2 * pr.K - (pr.m_b + 1) * ipow(pr.p, pr.i_b - pr.l) - 1);
}

long long affine_count_cap(const PAdicProfile& pr) {
  return (pr.K - 1) * (2 * pr.K - (pr.m_b + 1) * ipow(pr.p, pr.i_b - pr.l));
}

Table1Report verify_table1(const CurveFamily& fam, int s_affine) {
  if (!fam.prof) fail(Err::WrongRegime, "table verification needs m == 1 (mod p)");
  const PAdicProfile& pr = *fam.prof;
  Table1Report rep;
  rep.p = fam.p;
  rep.m = fam.m;
  rep.s_affine = s_affine;
  rep.s_infinity = infinity_extension(fam);

  auto inf = infinity_singularities(fam);
  auto aff = affine_singularities(fam, s_affine);
  rep.points = inf;
  rep.points.insert(rep.points.end(), aff.begin(), aff.end());
  for (const auto& pt : rep.points) ++rep.counts[pt.type];
  rep.affine_total = static_cast<long long>(aff.size());

  rep.cap_ia = pr.d - 1;
  rep.cap_ib = pr.K - pr.d;
  rep.cap_iia = (pr.d - 1) * (pr.d - 2);
  rep.cap_iiib = pr.d - 1;
  rep.cap_iiic = pr.K - pr.d;
  rep.n1 = table1_n1(pr);
  rep.n2_generic = table1_n2_generic(pr);
  rep.offdiag_cap = offdiagonal_count_cap(pr);
  rep.affine_cap = affine_count_cap(pr);

  auto count = [&rep](SingType t) {
    auto it = rep.counts.find(t);
    return it == rep.counts.end() ? 0LL : it->second;
  };
  if (static_cast<long long>(inf.size()) != pr.K) {
    fail(Err::TableViolation, "number of infinity singularities differs from K");
  }
  if (count(SingType::IIIa) != 1) fail(Err::TableViolation, "IIIa count must be exactly 1");
  if (count(SingType::Ia) > rep.cap_ia) fail(Err::TableViolation, "Ia count exceeds d-1");
  if (count(SingType::Ib) > rep.cap_ib) fail(Err::TableViolation, "Ib count exceeds K-d");
  if (count(SingType::IIa) > rep.cap_iia) fail(Err::TableViolation, "IIa count exceeds (d-1)(d-2)");
  if (count(SingType::IIIb) > rep.cap_iiib) fail(Err::TableViolation, "IIIb count exceeds d-1");
  if (count(SingType::IIIc) > rep.cap_iiic) fail(Err::TableViolation, "IIIc count exceeds K-d");
  // The printed IIb cap subtracts the IIa maximum, so it can undershoot when
  // IIa does not attain (d-1)(d-2); the provable bound is on the off-diagonal
  // total.
  if (count(SingType::IIa) + count(SingType::IIb) + count(SingType::IIc) > rep.offdiag_cap) {
    fail(Err::TableViolation, "off-diagonal count exceeds its cap");
  }
  if (rep.affine_total > rep.affine_cap) {
    fail(Err::TableViolation, "affine total exceeds its cap");
  }
  Rat total(0);
  for (const auto& pt : rep.points) total = total + pt.it_bound;
  rep.itot_observed = total;
  return rep;
}

}  // namespace pn
