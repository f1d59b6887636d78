#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pn/rat.hpp"

namespace pn {

/// Arithmetic shape of the exponent in the m == 1 (mod p) regime:
/// m - 1 = K * p^l with gcd(K, p) = 1, d = gcd(K, p^l - 1), plus the nonzero
/// base-p digits of m - 1 as (m_j, i_j) with i_1 = l.
struct PAdicProfile {
  long long p = 0;
  long long m = 0;
  int l = 0;
  long long pl = 0;  // p^l
  long long K = 0;
  long long d = 0;
  std::vector<std::pair<long long, int>> digits;  // (m_j, i_j), i_j ascending
  int b = 0;
  long long m_b = 0;  // last digit value
  int i_b = 0;        // last digit position
};

/// Divide out every factor of p (PN-classification-equivalent exponent).
long long normalize_exponent(long long p, long long m);

/// WrongRegime unless m >= 3, m normalized and m == 1 (mod p).
PAdicProfile profile(long long p, long long m);

/// I_tot bound using the digit structure of m - 1:
/// p^l (K-1) (2K - (m_b+1) p^(i_b - l) - 1) + ((p^l-1)/2)^2.
Rat itot_digit(const PAdicProfile& pr);

/// I_tot bound with the generic per-point coefficient:
/// p^l ((p^l-2)(p^l+1) + 1) (K-1) + ((p^l-1)/2)^2.
Rat itot_generic(const PAdicProfile& pr);

/// The two numerators (each 4 * I_tot over denominator (m-2)^2) for the
/// 1 < d < K regime; .first uses the generic tail, .second the digit tail.
std::pair<Rat, Rat> itot_split(const PAdicProfile& pr);

struct EGate {
  Rat e;
  bool passed;  // e < 8/9 by exact comparison
};

/// e = itot_times4 / (m-2)^2, gate passed when e < 8/9.
EGate e_gate(const Rat& itot_times4, long long m);

/// Display bound 1/(k - 1/p^l) + 1/4 + 4/p^l + 1/(k - 1/p^l)^2 driving the
/// candidate-pair enumeration for the 1 < d < K regime.
Rat mid_d_display_bound(long long k, long long pl);

struct CandidatePair {
  long long k;
  long long pl;
  bool boundary;  // k >= 16: eliminated by the monotone tail argument
  friend bool operator==(const CandidatePair& a, const CandidatePair& b) {
    return a.k == b.k && a.pl == b.pl && a.boundary == b.boundary;
  }
};

/// All (k, p^l) with gcd(k, p) = 1, 1 < gcd(k, p^l - 1) < k and display bound
/// >= 8/9, for k <= 17 (larger k die by monotonicity; k in {16, 17} rows are
/// flagged boundary).
std::vector<CandidatePair> mid_d_candidate_pairs();

/// d = K regime: true iff (m-2)^2 exceeds the singular-point budget
/// 2(K-1)p^(2l) + (K-1)(K-2)(1+p^l)^2 + (p^l-1)^2.
bool d_equals_k_gate(const PAdicProfile& pr);
std::pair<long long, long long> d_equals_k_sides(const PAdicProfile& pr);  // (lhs, rhs)

/// m !== 0, 1 (mod p) regime: gcd(m-1, p-1) > 1 forces a sigma-fixed factor.
bool gcd_gate(long long p, long long m);

enum class VerdictKind {
  NotPNAnywhere,
  GoldException,
  ExcludedOddCase,
  HasAbsIrredFactor,
  Inconclusive,
};

enum class Route {
  None,
  D1Bezout,        // d = 1, e-gate on min of the two I_tot forms
  MidDBezout,      // 1 < d < K, e-gate on min of the split numerators
  DEqualsKCount,   // d = K != p^l - 1, singular-point budget comparison
  GcdRootOfUnity,  // m !== 1 (mod p), rational root of unity argument
};

const char* verdict_name(VerdictKind v);
const char* route_name(Route r);

struct BoundReport {
  long long deg_h = 0;
  std::optional<Rat> eq_digit;       // d = 1 digit form
  std::optional<Rat> eq_generic;     // d = 1 generic form
  std::optional<Rat> split_generic;  // 1 < d < K, times 4
  std::optional<Rat> split_digit;    // 1 < d < K, times 4
  std::optional<Rat> e_best;
  bool gate_passed = false;
  std::string regime;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  Route via = Route::None;
  std::string reason;
  long long p = 0;
  long long m_input = 0;
  long long m_normalized = 0;
  int gold_l = 0;  // set for GoldException
  std::optional<PAdicProfile> prof;
  std::optional<BoundReport> report;
};

/// Full decision tree; total for m >= 2 and odd prime p.
Verdict classify_exponent(long long p, long long m);

}  // namespace pn
