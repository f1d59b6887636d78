#include "pn/pntest.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "pn/bounds.hpp"

namespace pn {

namespace {

constexpr std::uint64_t kEnumCap = 531441;  // 3^12

// Multiplication via exp/log tables; addition via coefficient vectors.
struct SmallField {
  CtxPtr ctx;
  std::uint64_t q;
  std::vector<std::uint32_t> log_;   // index -> discrete log (index 0 unused)
  std::vector<std::uint32_t> exp_;   // log -> index
  std::vector<std::uint32_t> add1_;  // index -> index of (element + 1)

  explicit SmallField(long long p, int n) : ctx(FieldCtx::create(p, n)), q(ctx->order()) {
    // find a generator of the multiplicative group
    std::vector<std::uint64_t> prime_factors;
    {
      std::uint64_t v = q - 1;
      for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
          prime_factors.push_back(d);
          while (v % d == 0) v /= d;
        }
      }
      if (v > 1) prime_factors.push_back(v);
    }
    FieldElement g = ctx->one();
    for (std::uint64_t i = 2; i < q; ++i) {
      FieldElement cand = ctx->element(i);
      bool ok = true;
      for (auto r : prime_factors) {
        if (cand.pow((q - 1) / r) == ctx->one()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = cand;
        break;
      }
    }
    exp_.resize(q - 1);
    log_.assign(q, 0);
    FieldElement acc = ctx->one();
    for (std::uint64_t t = 0; t < q - 1; ++t) {
      std::uint64_t idx = acc.index();
      exp_[t] = static_cast<std::uint32_t>(idx);
      log_[idx] = static_cast<std::uint32_t>(t);
      acc = acc * g;
    }
    add1_.resize(q);
    for (std::uint64_t i = 0; i < q; ++i) {
      add1_[i] = static_cast<std::uint32_t>((ctx->element(i) + ctx->one()).index());
    }
  }

  std::uint32_t power(std::uint32_t idx, unsigned long long e) const {
    if (idx == 0) return 0;  // 0^e = 0 for e >= 1
    unsigned long long r = (static_cast<unsigned long long>(log_[idx]) * (e % (q - 1))) % (q - 1);
    return exp_[r];
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    FieldElement r = ctx->element(a) + ctx->element(b);
    return static_cast<std::uint32_t>(r.index());
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    FieldElement r = ctx->element(a) - ctx->element(b);
    return static_cast<std::uint32_t>(r.index());
  }
};

const SmallField& field_cache(long long p, int n) {
  static std::map<std::pair<long long, int>, std::unique_ptr<SmallField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<SmallField>(p, n)).first;
  return *it->second;
}

long long ipow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

PNResult pn_test(long long p, int n, long long m, AMode mode) {
  if (p == 2 || !is_prime(p)) fail(Err::CompositeP, "p must be an odd prime");
  if (m < 1) fail(Err::InvalidArgument, "m must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kEnumCap) fail(Err::CapExceeded, "p^n above the enumeration cap 3^12");
  }
  const SmallField& F = field_cache(p, n);
  std::vector<std::uint32_t> pm(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    pm[x] = F.power(static_cast<std::uint32_t>(x), static_cast<unsigned long long>(m));
  }
  PNResult res{p, n, m, false, false, 0, mode};
  std::vector<std::uint32_t> fiber(q);
  long long global_max = 0;
  auto profile_a = [&](std::uint32_t a_idx) {
    std::fill(fiber.begin(), fiber.end(), 0);
    for (std::uint64_t x = 0; x < q; ++x) {
      std::uint32_t xa = (a_idx == F.add1_[0]) ? F.add1_[x]  // a == 1 fast path
                                               : F.add(static_cast<std::uint32_t>(x), a_idx);
      std::uint32_t b = F.sub(pm[xa], pm[x]);
      ++fiber[b];
    }
    long long mx = 0;
    for (std::uint64_t b = 0; b < q; ++b) mx = std::max<long long>(mx, fiber[b]);
    global_max = std::max(global_max, mx);
  };
  std::uint32_t one_idx = F.add1_[0];
  if (mode == AMode::OnlyAEquals1) {
    profile_a(one_idx);
  } else {
    for (std::uint64_t a = 1; a < q; ++a) profile_a(static_cast<std::uint32_t>(a));
  }
  res.max_preimage = global_max;
  res.is_pn = global_max == 1;
  res.is_apn = global_max == 2;
  return res;
}

std::string FamilyTag::str() const {
  switch (kind) {
    case FamilyKind::Square: return "Square";
    case FamilyKind::Gold: return "Gold(" + std::to_string(l) + ")";
    case FamilyKind::CoulterMatthews: return "CoulterMatthews(" + std::to_string(l) + ")";
  }
  return "?";
}

std::optional<FamilyTag> known_family(long long p, int n, long long m) {
  if (m == 2) return FamilyTag{FamilyKind::Square, 0};
  // Gold: m = p^l + 1 with n / gcd(n, l) odd
  {
    long long pw = p;
    int l = 1;
    while (pw < m - 1) {
      pw *= p;
      ++l;
    }
    if (pw == m - 1 && (n / std::gcd(static_cast<long long>(n), static_cast<long long>(l))) % 2 == 1) {
      return FamilyTag{FamilyKind::Gold, l};
    }
  }
  if (p == 3) {
    long long pw = 3;
    for (int l = 1; pw <= 2 * m; l += 2, pw *= 9) {
      if ((pw + 1) / 2 == m && std::gcd(static_cast<long long>(l), static_cast<long long>(n)) == 1) {
        return FamilyTag{FamilyKind::CoulterMatthews, l};
      }
    }
  }
  return std::nullopt;
}

int weil_threshold(long long p, long long s) {
  if (s < 1) fail(Err::InvalidArgument, "factor degree must be >= 1");
  // condition: p^n - s^2 - s > (s-1)(s-2) sqrt(p^n), compared after squaring
  for (int n = 1; n <= 126; ++n) {
    __int128 q = 1;
    bool over = false;
    for (int i = 0; i < n; ++i) {
      q *= p;
      if (q > static_cast<__int128>(1) << 100) {
        over = true;
        break;
      }
    }
    if (over) break;
    __int128 lin = q - static_cast<__int128>(s) * s - s;
    if (lin <= 0) continue;
    __int128 c = static_cast<__int128>(s - 1) * (s - 2);
    if (lin * lin > c * c * q) return n;
  }
  fail(Err::CapExceeded, "threshold search exhausted");
}

ScanReport scan(long long p, long long m_max, int n_max) {
  ScanReport rep{p, m_max, n_max, {}, {}};
  std::map<long long, std::vector<int>> pn_by_norm;
  for (long long m = 2; m <= m_max; ++m) {
    std::string verdict = verdict_name(classify_exponent(p, m).kind);
    for (int n = 1; n <= n_max; ++n) {
      PNResult r = pn_test(p, n, m);
      auto fam = known_family(p, n, m);
      rep.rows.push_back(ScanRow{p, n, m, r.is_pn, r.is_apn, fam ? fam->str() : "", verdict});
      if (r.is_pn) {
        long long nm = normalize_exponent(p, m);
        auto& v = pn_by_norm[nm];
        if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
      }
    }
  }
  for (const auto& [nm, ns] : pn_by_norm) {
    if (ns.size() < 2) continue;
    ScanCandidate c;
    c.m_normalized = nm;
    c.pn_at = ns;
    std::sort(c.pn_at.begin(), c.pn_at.end());
    // n-free shape description
    if (nm == 2) {
      c.family_shape = "Square";
    } else {
      long long pw = p;
      int l = 1;
      while (pw < nm - 1) {
        pw *= p;
        ++l;
      }
      if (pw == nm - 1) {
        c.family_shape = "Gold(" + std::to_string(l) + ")";
      } else if (p == 3) {
        long long w = 3;
        for (int l2 = 1; w <= 2 * nm; l2 += 2, w *= 9) {
          if ((w + 1) / 2 == nm) {
            c.family_shape = "CoulterMatthews(" + std::to_string(l2) + ")";
            break;
          }
        }
      }
    }
    c.verdict = verdict_name(classify_exponent(p, nm).kind);
    rep.candidates.push_back(std::move(c));
  }
  return rep;
}

std::string scan_csv(const ScanReport& rep) {
  std::string out = "p,n,m,is_pn,is_apn,known_family,verdict\n";
  for (const auto& r : rep.rows) {
    out += std::to_string(r.p) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           (r.is_pn ? "true" : "false") + "," + (r.is_apn ? "true" : "false") + "," + r.family +
           "," + r.verdict + "\n";
  }
  return out;
}

}  // namespace pn
