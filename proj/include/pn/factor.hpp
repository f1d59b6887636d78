#pragma once

#include <string>
#include <vector>

#include "pn/bipoly.hpp"
#include "pn/curve.hpp"

namespace pn {

/// Result of the bounded exhaustive divisor search. complete means the product
/// of the found factors (times the scalar) reconstructs the input exactly.
struct FactorizationResult {
  BiPoly input;
  std::vector<std::pair<BiPoly, int>> factors;  // monic in x, with multiplicity
  FieldElement scalar;
  bool complete = false;
  std::vector<std::vector<int>> orbits;  // sigma-orbits as factor indices
  std::vector<BiPoly> fp_factors;        // orbit products, over the prime field
};

/// Enumerate monic-in-x candidate divisors of total degree 1..deg_cap (by
/// total degree, then x-degree, then coefficient index), divide out the first
/// hit and restart. Caps: deg(P) <= 12, |field| <= 81, deg_cap <= 4.
FactorizationResult bounded_factor_search(const BiPoly& P, int deg_cap,
                                          long long candidate_limit = 2'000'000);

enum class AbsIrredKind { HasAbsIrredFactorOverFp, NoAbsIrredFactorOverFp };

struct OrbitVerdict {
  AbsIrredKind kind;
  int verified_over_s;  // factors re-searched over F_{p^(2s)}
  std::string caveat;
};

/// Prop-style orbit analysis: a sigma-orbit of size 1 is a factor with
/// prime-field coefficients. Requires a complete factorization whose pieces
/// survive a re-search over the quadratic extension (desk-scale proxy for
/// absolute irreducibility; the caveat records this).
OrbitVerdict sigma_orbit_analysis(const FactorizationResult& fr);

/// Exact number of (x, y) in F_{p^n}^2 with h(x, y) = 0. Cap: p^(2n) <= 10^8.
long long point_count(const CurveFamily& fam, int n);

struct BandRow {
  int n;
  long long count;
  long long q;  // p^n
  long long band_low;
  long long band_high;
  std::string label;  // "consistent_with_fp_factor" | "evidence_against"
};

/// Compare counts against the single-component band p^n -+ (D-1)(D-2)sqrt(p^n)
/// + D^2 for D = deg h. Heuristic evidence, labeled as such.
std::vector<BandRow> weil_band_check(const CurveFamily& fam, const std::vector<int>& ns);

std::string band_csv(const std::vector<BandRow>& rows);

}  // namespace pn
