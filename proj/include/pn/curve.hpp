#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pn/bipoly.hpp"
#include "pn/bounds.hpp"

namespace pn {

enum class SingType { Ia, Ib, IIa, IIb, IIc, IIIa, IIIb, IIIc, Plain2 };
const char* sing_type_name(SingType t);

/// A located singularity of h, with multiplicities computed definitionally
/// (lowest nonzero homogeneous component of the shifted polynomial) and the
/// per-point intersection-number bound.
struct SingularPoint {
  SingularPoint(bool inf, FieldElement x, FieldElement y)
      : at_infinity(inf), x0(std::move(x)), y0(std::move(y)) {}

  bool at_infinity;
  FieldElement x0;  // affine x, or omega for (omega : 1 : 0)
  FieldElement y0;  // affine y, or 1 at infinity
  int mult_h = 0;
  int mult_f = 0;
  SingType type = SingType::Plain2;
  Rat it_bound;
  bool it_conditional = false;       // bound is the conditional p^l case
  std::optional<bool> cond3;         // IIc only: shared-tangent criterion value
};

/// The pair (f, h) for (p, m): f = (x+1)^m - x^m - (y+1)^m + y^m over F_p and
/// h = f / (x - y), with the p-adic profile when m == 1 (mod p).
struct CurveFamily {
  long long p;
  long long m;
  CtxPtr ctx0;
  BiPoly f;
  BiPoly h;
  std::optional<PAdicProfile> prof;
};

CurveFamily build_family(long long p, long long m);

struct TangentData {
  int mt = 0;
  BiPoly h_low;   // H_{m_t}
  BiPoly h_low1;  // H_{m_t + 1}
  bool squarefree = false;
  bool coprime_consecutive = false;
  bool single_line = false;
  TangentData(const CtxPtr& c) : h_low(c), h_low1(c) {}
};

/// Extension degree housing all K infinity singularities:
/// lcm(l, ord of p modulo K).
int infinity_extension(const CurveFamily& fam);

struct ExtensionChoice {
  int s;
  bool stabilized;
};
/// Default affine search field: start at lcm(l, ord_K(p)) and double until the
/// point count is stable across one doubling or the pair cap is hit.
ExtensionChoice choose_affine_extension(const CurveFamily& fam);

/// The K = (m-1)/p^l points (omega : 1 : 0), fully populated and cross-checked
/// against the predicted multiplicities. m == 1 (mod p) regime.
std::vector<SingularPoint> infinity_singularities(const CurveFamily& fam);

/// All singular points of h rational over F_{p^s} (l | s required), sorted by
/// coordinate index. m == 1 (mod p) regime.
std::vector<SingularPoint> affine_singularities(const CurveFamily& fam, int s);

/// The m !== 0, 1 (mod p) regime: multiplicity-2 affine points, plus the
/// no-singularity-at-infinity assertion over F_{p^s}.
std::vector<SingularPoint> singularities_general(const CurveFamily& fam, int s);

SingType classify_location(const CurveFamily& fam, bool at_infinity, const FieldElement& x0,
                           const FieldElement& y0);

/// Shared-tangent criterion for IIc points:
/// y0 (x0+1)^(p^l) (y0^(p^l-1) - 1)^(p^l+1) == x0 (y0+1)^(p^l) (x0^(p^l-1) - 1)^(p^l+1).
bool iic_shared_tangent(const CurveFamily& fam, const FieldElement& x0, const FieldElement& y0);

/// Lowest two homogeneous components of the shifted h at the point, with the
/// squarefree / consecutive-coprimality / single-line flags. Also verifies the
/// f/h component transfer identities as exact polynomial identities.
TangentData tangent_data(const CurveFamily& fam, const SingularPoint& pt);

/// Per-point intersection-number bound: 0 for a single tangent line with
/// coprime consecutive components, floor(mt/2)*ceil(mt/2) for a squarefree
/// tangent cone, conditional p^l for IIc points satisfying the shared-tangent
/// criterion.
Rat it_bound_value(const CurveFamily& fam, const SingularPoint& pt, const TangentData& td,
                   bool* conditional);

struct Table1Report {
  long long p = 0, m = 0;
  int s_affine = 0, s_infinity = 0;
  std::vector<SingularPoint> points;
  std::map<SingType, long long> counts;
  long long cap_ia = 0, cap_ib = 0, cap_iia = 0, cap_iiib = 0, cap_iiic = 0;
  long long n1 = 0;           // printed IIb cap (off-diagonal bound minus the IIa cap)
  long long n2_generic = 0;   // generic-form IIc cap
  long long offdiag_cap = 0;  // bound on IIa+IIb+IIc (with the -1)
  long long affine_cap = 0;   // count bound on all affine points (without the -1)
  long long affine_total = 0;
  Rat itot_observed;          // sum of resolved per-point bounds
};

/// Enumerate, classify and bound every singular point, checking all observed
/// counts and multiplicities against their caps; any violation throws
/// TableViolation. m == 1 (mod p) regime.
Table1Report verify_table1(const CurveFamily& fam, int s_affine);

long long table1_n1(const PAdicProfile& pr);
long long table1_n2_generic(const PAdicProfile& pr);
long long offdiagonal_count_cap(const PAdicProfile& pr);
long long affine_count_cap(const PAdicProfile& pr);

}  // namespace pn
