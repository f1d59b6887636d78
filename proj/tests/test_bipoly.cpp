#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pn/bipoly.hpp"

using namespace pn;

namespace {

BiPoly from_terms(const CtxPtr& ctx, std::initializer_list<std::tuple<int, int, long long>> ts) {
  BiPoly r(ctx);
  for (const auto& [i, j, c] : ts) r.add_term(i, j, ctx->from_int(c));
  return r;
}

BiPoly random_poly(const CtxPtr& ctx, std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> de(0, max_deg);
  std::uniform_int_distribution<std::uint64_t> dc(0, ctx->order() - 1);
  BiPoly r(ctx);
  for (int t = 0; t < terms; ++t) {
    int i = de(rng), j = de(rng);
    if (i + j > max_deg) continue;
    r.add_term(i, j, ctx->element(dc(rng)));
  }
  return r;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  auto f3 = FieldCtx::create(3, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);

  CHECK((x - y) * (x + y) == from_terms(f3, {{2, 0, 1}, {0, 2, -1}}));
  CHECK((from_terms(f3, {{2, 0, 1}, {0, 0, 1}}).scale(f3->zero())).is_zero());

  // char-3 cube: (x-y)((x-y)^2 + 1) = x^3 - y^3 + x - y
  BiPoly h34 = (x - y) * (x - y) + BiPoly::constant(f3->one());
  BiPoly f34 = from_terms(f3, {{3, 0, 1}, {0, 3, -1}, {1, 0, 1}, {0, 1, -1}});
  CHECK((x - y) * h34 == f34);
}

TEST_CASE("exact division") {
  auto f3 = FieldCtx::create(3, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);

  CHECK(exact_div(x * x - y * y, x - y) == x + y);

  BiPoly h34 = (x - y) * (x - y) + BiPoly::constant(f3->one());
  BiPoly f34 = from_terms(f3, {{3, 0, 1}, {0, 3, -1}, {1, 0, 1}, {0, 1, -1}});
  CHECK(exact_div(f34, x - y) == h34);

  CHECK_THROWS_AS(exact_div(x * x + y * y, x - y), Error);
  try {
    exact_div(x * x + y * y, x - y);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotDivisible);
  }
  CHECK_THROWS_AS(exact_div(x, BiPoly(f3)), Error);

  SUBCASE("divisor that is a pure y polynomial") {
    BiPoly d = y * y + BiPoly::constant(f3->one());
    BiPoly a = d * (x + y);
    CHECK(exact_div(a, d) == x + y);
  }
}

TEST_CASE("taylor shift") {
  auto f3 = FieldCtx::create(3, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);

  CHECK(taylor_shift(x * x, f3->one(), f3->zero()) ==
        from_terms(f3, {{2, 0, 1}, {1, 0, 2}, {0, 0, 1}}));

  BiPoly a = from_terms(f3, {{2, 1, 2}, {1, 1, 1}, {0, 0, 2}});
  CHECK(taylor_shift(a, f3->zero(), f3->zero()) == a);

  BiPoly h34 = (x - y) * (x - y) + BiPoly::constant(f3->one());
  for (long long c = 0; c < 3; ++c) {
    CHECK(taylor_shift(h34, f3->from_int(c), f3->from_int(c)) == h34);
  }

  SUBCASE("round trip over F_9 and F_25") {
    std::mt19937 rng(7);
    for (auto [p, s] : std::vector<std::pair<long long, int>>{{3, 2}, {5, 2}}) {
      auto ctx = FieldCtx::create(p, s);
      std::uniform_int_distribution<std::uint64_t> dc(0, ctx->order() - 1);
      for (int it = 0; it < 25; ++it) {
        BiPoly a = random_poly(ctx, rng, 8, 12);
        FieldElement u = ctx->element(dc(rng)), v = ctx->element(dc(rng));
        CHECK(taylor_shift(taylor_shift(a, u, v), -u, -v) == a);
      }
    }
  }
}

TEST_CASE("homogeneous components") {
  auto f3 = FieldCtx::create(3, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);
  BiPoly h34 = (x - y) * (x - y) + BiPoly::constant(f3->one());

  CHECK(homogeneous_component(h34, 0) == BiPoly::constant(f3->one()));
  CHECK(homogeneous_component(h34, 2) == from_terms(f3, {{2, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
  CHECK(homogeneous_component(h34, 5).is_zero());

  SUBCASE("components reconstruct the polynomial") {
    std::mt19937 rng(11);
    auto f9 = FieldCtx::create(3, 2);
    for (int it = 0; it < 20; ++it) {
      BiPoly a = random_poly(f9, rng, 9, 14);
      if (a.is_zero()) continue;
      BiPoly sum(f9);
      for (int d = 0; d <= a.total_degree(); ++d) sum = sum + homogeneous_component(a, d);
      CHECK(sum == a);
    }
  }
}

TEST_CASE("homogenize and dehomogenize") {
  auto f3 = FieldCtx::create(3, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);

  HomForm hf = homogenize(x * x + BiPoly::constant(f3->one()));
  CHECK(hf.deg == 2);
  CHECK(dehomogenize_at_y(hf) == from_terms(f3, {{2, 0, 1}, {0, 2, 1}}));  // x^2 + z^2

  CHECK(dehomogenize_at_y(homogenize(x * x - y * y)) == from_terms(f3, {{2, 0, 1}, {0, 0, -1}}));

  // the family (3, 4): h~ = (x-1)^2 + z^2
  BiPoly h34 = (x - y) * (x - y) + BiPoly::constant(f3->one());
  CHECK(dehomogenize_at_y(homogenize(h34)) ==
        from_terms(f3, {{2, 0, 1}, {1, 0, 1}, {0, 0, 1}, {0, 2, 1}}));

  SUBCASE("set z = 1 recovers the original") {
    std::mt19937 rng(3);
    auto f9 = FieldCtx::create(3, 2);
    for (int it = 0; it < 20; ++it) {
      BiPoly a = random_poly(f9, rng, 7, 10);
      if (a.is_zero()) continue;
      CHECK(set_z_one(homogenize(a)) == a);
    }
  }
  CHECK_THROWS_AS(homogenize(BiPoly(f3)), Error);
}

TEST_CASE("binary form gcd") {
  auto f3 = FieldCtx::create(3, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);

  // x^2 + z^2 vs z^2, written in (x, y) as the second variable
  BiPoly a = from_terms(f3, {{2, 0, 1}, {0, 2, 1}});
  BiPoly b = from_terms(f3, {{0, 2, 1}});
  BiPoly g = hom_gcd(a, b);
  CHECK(g.total_degree() == 0);

  CHECK(hom_gcd(x * x - y * y, x - y) == x - y);

  BiPoly f = (x - y) * (x + y) * (x + y);
  BiPoly same = hom_gcd(f, f);
  CHECK(same == f);  // already monic in x

  CHECK_THROWS_AS(hom_gcd(x * x + y, y), Error);  // not homogeneous
}

TEST_CASE("squarefree and single-root form tests") {
  auto f3 = FieldCtx::create(3, 1);
  auto f5 = FieldCtx::create(5, 1);
  BiPoly x3 = BiPoly::var_x(f3), y3 = BiPoly::var_y(f3);
  BiPoly x5 = BiPoly::var_x(f5), y5 = BiPoly::var_y(f5);

  CHECK(squarefree_form(from_terms(f3, {{2, 0, 1}, {0, 2, 1}})));  // x^2 + z^2
  CHECK(!squarefree_form((x3 - y3) * (x3 - y3)));
  CHECK(squarefree_form(x5 * x5 * x5 - y5 * y5 * y5));

  CHECK(single_root_form((x3 - y3) * (x3 - y3)));
  CHECK(single_root_form((x3 - y3) * (x3 - y3) * (x3 - y3)));
  CHECK(single_root_form(from_terms(f3, {{3, 0, 1}, {0, 3, 2}})));  // x^3 - y^3 = (x-y)^3
  CHECK(!single_root_form(from_terms(f3, {{2, 0, 1}, {0, 2, 1}})));
  CHECK(!single_root_form(x3 * y3));
  CHECK(single_root_form(x3 * x3));
  CHECK(single_root_form(y3 * y3 * y3));
  CHECK(!single_root_form(x5 * x5 * x5 - y5 * y5 * y5));
  // L^(p+1) for L = x - y over F_3: exponents not all multiples of 3, still single
  BiPoly L = x3 - y3;
  CHECK(single_root_form(L * L * L * L));
}

TEST_CASE("partial derivatives") {
  auto f3 = FieldCtx::create(3, 1);
  auto f5 = FieldCtx::create(5, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);

  CHECK(partials(x * x * x).first.is_zero());  // 3x^2 = 0
  CHECK(partials(x * y).second == x);

  // f for (p, m) = (5, 8): f_x = 3(x+1)^7 - 3x^7
  BiPoly x5 = BiPoly::var_x(f5);
  BiPoly f(f5);
  for (long long k = 1; k <= 7; ++k) {
    long long c = binom_mod_p(8, k, 5);
    if (!c) continue;
    f.add_term(static_cast<int>(k), 0, f5->from_int(c));
    f.add_term(0, static_cast<int>(k), f5->from_int(-c));
  }
  BiPoly xp1 = x5 + BiPoly::constant(f5->one());
  BiPoly pow7 = BiPoly::constant(f5->one());
  BiPoly x7 = BiPoly::constant(f5->one());
  for (int i = 0; i < 7; ++i) {
    pow7 = pow7 * xp1;
    x7 = x7 * x5;
  }
  CHECK(partials(f).first == (pow7 - x7).scale(f5->from_int(3)));
}

TEST_CASE("coefficient frobenius") {
  auto f3 = FieldCtx::create(3, 1);
  auto f9 = FieldCtx::create(3, 2);
  BiPoly x9 = BiPoly::var_x(f9), y9 = BiPoly::var_y(f9);
  FieldElement i = f9->from_coeffs({0, 1});

  BiPoly over_fp = from_terms(f3, {{2, 1, 2}, {0, 0, 1}});
  CHECK(sigma_map(lift(over_fp, SubfieldEmbedding(f3, f9))) ==
        lift(over_fp, SubfieldEmbedding(f3, f9)));

  CHECK(sigma_map(x9 - y9.scale(i)) == x9 + y9.scale(i));

  SUBCASE("homomorphism and order") {
    std::mt19937 rng(17);
    for (int it = 0; it < 20; ++it) {
      BiPoly a = random_poly(f9, rng, 6, 8);
      BiPoly b = random_poly(f9, rng, 6, 8);
      CHECK(sigma_map(a * b) == sigma_map(a) * sigma_map(b));
      CHECK(sigma_map(a + b) == sigma_map(a) + sigma_map(b));
      CHECK(sigma_map(sigma_map(a)) == a);  // s = 2
    }
  }
}

TEST_CASE("evaluation") {
  auto f3 = FieldCtx::create(3, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);
  for (long long c = 0; c < 3; ++c) {
    CHECK(eval(x - y, f3->from_int(c), f3->from_int(c)).is_zero());
  }
  BiPoly h34 = (x - y) * (x - y) + BiPoly::constant(f3->one());
  CHECK(eval(h34, f3->zero(), f3->zero()) == f3->one());
  CHECK(eval(BiPoly(f3), f3->one(), f3->one()).is_zero());
}

TEST_CASE("serialization format") {
  auto f3 = FieldCtx::create(3, 1);
  BiPoly x = BiPoly::var_x(f3), y = BiPoly::var_y(f3);
  BiPoly a = x * x + y + BiPoly::constant(f3->from_int(2));
  CHECK(a.str() == "2*x^0*y^0 + 1*x^0*y^1 + 1*x^2*y^0");
  CHECK(BiPoly(f3).str() == "0");
  auto f9 = FieldCtx::create(3, 2);
  CHECK(BiPoly::monomial(f9->from_coeffs({0, 1}), 1, 2).str() == "[0,1]*x^1*y^2");
}
