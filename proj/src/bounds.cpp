#include "pn/bounds.hpp"

#include <numeric>

#include "pn/error.hpp"
#include "pn/gf.hpp"

namespace pn {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

const Rat kGate(8, 9);

}  // namespace

const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::NotPNAnywhere: return "NotPNAnywhere";
    case VerdictKind::GoldException: return "GoldException";
    case VerdictKind::ExcludedOddCase: return "ExcludedOddCase";
    case VerdictKind::HasAbsIrredFactor: return "HasAbsIrredFactor";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

const char* route_name(Route r) {
  switch (r) {
    case Route::None: return "none";
    case Route::D1Bezout: return "d1_bezout";
    case Route::MidDBezout: return "mid_d_bezout";
    case Route::DEqualsKCount: return "d_equals_k_count";
    case Route::GcdRootOfUnity: return "gcd_root_of_unity";
  }
  return "unknown";
}

long long normalize_exponent(long long p, long long m) {
  if (m < 2) fail(Err::InvalidArgument, "exponent must be >= 2");
  while (m % p == 0) m /= p;
  return m;
}

PAdicProfile profile(long long p, long long m) {
  if (m < 3 || m % p == 0 || (m - 1) % p != 0) {
    fail(Err::WrongRegime, "profile needs normalized m == 1 (mod p), m >= 3");
  }
  PAdicProfile pr;
  pr.p = p;
  pr.m = m;
  long long r = m - 1;
  while (r % p == 0) {
    r /= p;
    ++pr.l;
  }
  pr.pl = ipow(p, pr.l);
  pr.K = (m - 1) / pr.pl;
  pr.d = std::gcd(pr.K, pr.pl - 1);
  long long v = m - 1;
  int pos = 0;
  while (v > 0) {
    long long dig = v % p;
    if (dig != 0) pr.digits.emplace_back(dig, pos);
    v /= p;
    ++pos;
  }
  pr.b = static_cast<int>(pr.digits.size());
  pr.m_b = pr.digits.back().first;
  pr.i_b = pr.digits.back().second;
  return pr;
}

Rat itot_digit(const PAdicProfile& pr) {
  long long tail = 2 * pr.K - (pr.m_b + 1) * ipow(pr.p, pr.i_b - pr.l) - 1;
  long long half = (pr.pl - 1) / 2;
  return Rat(pr.pl * (pr.K - 1) * tail + half * half);
}

Rat itot_generic(const PAdicProfile& pr) {
  long long coef = (pr.pl - 2) * (pr.pl + 1) + 1;
  long long half = (pr.pl - 1) / 2;
  return Rat(pr.pl * coef * (pr.K - 1) + half * half);
}

std::pair<Rat, Rat> itot_split(const PAdicProfile& pr) {
  if (!(pr.d > 1 && pr.d < pr.K)) fail(Err::WrongRegime, "split bound needs 1 < d < K");
  long long pl = pr.pl, k = pr.K, d = pr.d;
  long long head = 2 * (pl * pl - 1) * (d - 1) + (pl + 1) * (pl + 1) * (d - 1) * (d - 2);
  long long generic_tail = 4 * pl * (k - 1) * ((pl - 2) * (pl + 1) + 1) + (pl - 1) * (pl - 1);
  long long digit_tail =
      4 * pl * (k - 1) * (2 * k - (pr.m_b + 1) * ipow(pr.p, pr.i_b - pr.l) - 1) + (pl - 1) * (pl - 1);
  return {Rat(head + generic_tail), Rat(head + digit_tail)};
}

EGate e_gate(const Rat& itot_times4, long long m) {
  if (m < 3) fail(Err::InvalidArgument, "e-gate needs m >= 3");
  Rat e = itot_times4 / Rat((m - 2) * (m - 2));
  return {e, e < kGate};
}

Rat mid_d_display_bound(long long k, long long pl) {
  Rat t(pl, k * pl - 1);  // 1 / (k - 1/p^l)
  return t + Rat(1, 4) + Rat(4, pl) + t * t;
}

std::vector<CandidatePair> mid_d_candidate_pairs() {
  // p^l > 128 cannot reach 8/9: the bound is at most
  // 1/(4 - 1/3) + 1/4 + 4/129 + (3/11)^2 < 0.67.
  std::vector<CandidatePair> out;
  for (long long k = 2; k <= 17; ++k) {
    for (long long pl = 3; pl <= 128; ++pl) {
      long long p = 0;
      for (long long q = 3; q <= pl; q += 2) {
        if (is_prime(q)) {
          long long pw = q;
          while (pw < pl) pw *= q;
          if (pw == pl) {
            p = q;
            break;
          }
        }
      }
      if (p == 0) continue;  // not an odd prime power
      if (std::gcd(k, p) != 1) continue;
      long long d = std::gcd(k, pl - 1);
      if (!(d > 1 && d < k)) continue;
      if (mid_d_display_bound(k, pl) >= Rat(8, 9)) {
        out.push_back({k, pl, k >= 16});
      }
    }
  }
  return out;
}

std::pair<long long, long long> d_equals_k_sides(const PAdicProfile& pr) {
  if (!(pr.d == pr.K && pr.K >= 2 && pr.K != pr.pl - 1)) {
    fail(Err::WrongRegime, "needs d = K != p^l - 1, K >= 2");
  }
  long long lhs = (pr.m - 2) * (pr.m - 2);
  long long rhs = 2 * (pr.K - 1) * pr.pl * pr.pl +
                  (pr.K - 1) * (pr.K - 2) * (1 + pr.pl) * (1 + pr.pl) + (pr.pl - 1) * (pr.pl - 1);
  return {lhs, rhs};
}

bool d_equals_k_gate(const PAdicProfile& pr) {
  auto [lhs, rhs] = d_equals_k_sides(pr);
  return lhs > rhs;
}

bool gcd_gate(long long p, long long m) {
  if (m % p == 0 || (m - 1) % p == 0) fail(Err::WrongRegime, "gcd gate is for m !== 0, 1 (mod p)");
  return std::gcd(m - 1, p - 1) > 1;
}

Verdict classify_exponent(long long p, long long m) {
  if (p == 2 || !is_prime(p)) fail(Err::CompositeP, "p must be an odd prime");
  if (m < 2) fail(Err::InvalidArgument, "m must be >= 2");
  Verdict v;
  v.p = p;
  v.m_input = m;
  long long mm = normalize_exponent(p, m);
  v.m_normalized = mm;

  if (mm == 1) {
    v.kind = VerdictKind::NotPNAnywhere;
    v.reason = "m is a power of p; the map is linear and its difference map is constant";
    return v;
  }

  // Gold shape m = 1 + p^l
  {
    long long pw = p;
    int l = 1;
    while (pw < mm - 1) {
      pw *= p;
      ++l;
    }
    if (pw == mm - 1) {
      v.kind = VerdictKind::GoldException;
      v.gold_l = l;
      v.reason = "m = 1 + p^" + std::to_string(l);
      if ((mm - 1) % p == 0) v.prof = profile(p, mm);
      return v;
    }
  }

  if ((mm - 1) % p == 0) {
    PAdicProfile pr = profile(p, mm);
    v.prof = pr;
    BoundReport br;
    br.deg_h = mm - 2;
    if (pr.d == pr.K && pr.d == pr.pl - 1) {
      v.kind = VerdictKind::ExcludedOddCase;
      v.reason = "d = K = p^l - 1 forces m = p^l(p^l - 1) + 1, which is odd";
      return v;
    }
    if (pr.d == 1) {
      br.regime = "d=1";
      br.eq_digit = itot_digit(pr);
      br.eq_generic = itot_generic(pr);
      Rat best4 = rat_min(*br.eq_digit, *br.eq_generic) * Rat(4);
      EGate g = e_gate(best4, mm);
      br.e_best = g.e;
      br.gate_passed = g.passed;
      v.report = br;
      if (g.passed) {
        v.kind = VerdictKind::HasAbsIrredFactor;
        v.via = Route::D1Bezout;
        v.reason = "e = " + g.e.str() + " < 8/9";
      } else {
        v.kind = VerdictKind::Inconclusive;
        v.reason = "gate discrepancy: d = 1 bound e = " + g.e.str() + " >= 8/9";
      }
      return v;
    }
    if (pr.d < pr.K) {
      br.regime = "1<d<K";
      auto [gen4, dig4] = itot_split(pr);
      br.split_generic = gen4;
      br.split_digit = dig4;
      EGate g = e_gate(rat_min(gen4, dig4), mm);
      br.e_best = g.e;
      br.gate_passed = g.passed;
      v.report = br;
      if (g.passed) {
        v.kind = VerdictKind::HasAbsIrredFactor;
        v.via = Route::MidDBezout;
        v.reason = "e = " + g.e.str() + " < 8/9";
      } else {
        v.kind = VerdictKind::Inconclusive;
        v.reason = "gate discrepancy: 1 < d < K bound e = " + g.e.str() + " >= 8/9";
      }
      return v;
    }
    // d = K != p^l - 1
    br.regime = "d=K";
    auto [lhs, rhs] = d_equals_k_sides(pr);
    br.gate_passed = lhs > rhs;
    v.report = br;
    if (lhs > rhs) {
      v.kind = VerdictKind::HasAbsIrredFactor;
      v.via = Route::DEqualsKCount;
      v.reason = "(m-2)^2 = " + std::to_string(lhs) + " > " + std::to_string(rhs);
    } else {
      v.kind = VerdictKind::Inconclusive;
      v.reason = "gate discrepancy: d = K budget " + std::to_string(lhs) + " <= " + std::to_string(rhs);
    }
    return v;
  }

  // m !== 0, 1 (mod p)
  if (mm % 2 == 1) {
    v.kind = VerdictKind::NotPNAnywhere;
    v.reason = "m odd: 0 and 1 both solve (x+1)^m - x^m = 1";
    return v;
  }
  if (gcd_gate(p, mm)) {
    v.kind = VerdictKind::HasAbsIrredFactor;
    v.via = Route::GcdRootOfUnity;
    v.reason = "gcd(m-1, p-1) = " + std::to_string(std::gcd(mm - 1, p - 1)) + " > 1";
    return v;
  }
  v.kind = VerdictKind::Inconclusive;
  v.reason = "no applicable criterion: m !== 1 (mod p) and gcd(m-1, p-1) = 1" +
             std::string(mm == 2 ? " (m = 2 is the square family, PN on every extension)" : "");
  return v;
}

}  // namespace pn
