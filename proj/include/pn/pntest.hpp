#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pn/gf.hpp"

namespace pn {

enum class AMode { OnlyAEquals1, AllNonzeroA };

struct PNResult {
  long long p = 0;
  int n = 0;
  long long m = 0;
  bool is_pn = false;
  bool is_apn = false;
  long long max_preimage = 0;  // max over checked (a, b) of solution counts
  AMode a_checked = AMode::OnlyAEquals1;
};

/// Exhaustive differential test of x -> x^m over F_{p^n}. In OnlyAEquals1
/// mode only the difference map (x+1)^m - x^m is profiled (sufficient for
/// power maps); AllNonzeroA profiles every a != 0. Cap: p^n <= 3^12.
PNResult pn_test(long long p, int n, long long m, AMode mode = AMode::OnlyAEquals1);

enum class FamilyKind { Square, Gold, CoulterMatthews };

struct FamilyTag {
  FamilyKind kind;
  int l = 0;
  std::string str() const;
};

/// The known PN families whose arithmetic conditions hold at (p, n, m):
/// m = 2; m = p^l + 1 with n/gcd(n,l) odd; m = (3^l+1)/2 with p = 3, l odd,
/// gcd(l, n) = 1.
std::optional<FamilyTag> known_family(long long p, int n, long long m);

/// Smallest n with p^n - (s-1)(s-2) sqrt(p^n) - s^2 > s, by exact integer
/// comparison after squaring.
int weil_threshold(long long p, long long s);

struct ScanRow {
  long long p;
  int n;
  long long m;
  bool is_pn;
  bool is_apn;
  std::string family;   // "" when none
  std::string verdict;  // classification of the normalized exponent
};

struct ScanCandidate {
  long long m_normalized;
  std::vector<int> pn_at;  // tested n where the row is PN
  std::string family_shape;
  std::string verdict;
};

struct ScanReport {
  long long p;
  long long m_max;
  int n_max;
  std::vector<ScanRow> rows;
  std::vector<ScanCandidate> candidates;  // PN at >= 2 tested n, by normalized m
};

ScanReport scan(long long p, long long m_max, int n_max);
std::string scan_csv(const ScanReport& rep);

}  // namespace pn
