#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "pn/gf.hpp"

using namespace pn;

namespace {

// Independent reducibility oracle for quadratics: mark every product of two
// monic linears, everything else of degree 2 is irreducible.
std::vector<long long> first_irreducible_quadratic(long long p) {
  std::set<std::pair<long long, long long>> reducible;  // (c0, c1) of x^2+c1*x+c0
  for (long long a = 0; a < p; ++a) {
    for (long long b = 0; b < p; ++b) {
      // (x+a)(x+b) = x^2 + (a+b)x + ab
      reducible.insert({a * b % p, (a + b) % p});
    }
  }
  for (long long enc = 0; enc < p * p; ++enc) {
    long long c0 = enc % p, c1 = enc / p;
    if (!reducible.count({c0, c1})) return {c0, c1, 1};
  }
  return {};
}

}  // namespace

TEST_CASE("deterministic modulus construction") {
  auto f3 = FieldCtx::create(3, 1);
  CHECK(f3->modulus() == std::vector<long long>{0, 1});

  auto f9 = FieldCtx::create(3, 2);
  CHECK(f9->modulus() == std::vector<long long>{1, 0, 1});  // x^2 + 1
  CHECK(f9->modulus() == first_irreducible_quadratic(3));

  auto f25 = FieldCtx::create(5, 2);
  CHECK(f25->modulus() == std::vector<long long>{2, 0, 1});  // x^2 + 2
  CHECK(f25->modulus() == first_irreducible_quadratic(5));

  SUBCASE("same inputs give identical moduli") {
    auto a = FieldCtx::create(7, 3);
    auto b = FieldCtx::create(7, 3);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->same(*b));
  }
}

TEST_CASE("context construction errors") {
  CHECK_THROWS_AS(FieldCtx::create(4, 1), Error);
  CHECK_THROWS_AS(FieldCtx::create(2, 1), Error);
  CHECK_THROWS_AS(FieldCtx::create(3, 13), Error);
  try {
    FieldCtx::create(9, 2);
    FAIL("expected CompositeP");
  } catch (const Error& e) {
    CHECK(e.code() == Err::CompositeP);
  }
}

TEST_CASE("basic arithmetic") {
  auto f3 = FieldCtx::create(3, 1);
  CHECK(f3->from_int(2).inv() == f3->from_int(2));

  auto f9 = FieldCtx::create(3, 2);
  FieldElement i = f9->from_coeffs({0, 1});
  CHECK(i * i == -f9->one());
  CHECK(i * i == f9->from_int(2));

  auto f5 = FieldCtx::create(5, 1);
  CHECK(f5->from_int(2).pow(4) == f5->one());

  SUBCASE("division by zero") {
    CHECK_THROWS_AS(f9->zero().inv(), Error);
  }
  SUBCASE("mixed contexts rejected") {
    CHECK_THROWS_AS(f3->one() + f5->one(), Error);
  }
}

TEST_CASE("frobenius") {
  auto f9 = FieldCtx::create(3, 2);
  for (long long c = 0; c < 3; ++c) {
    CHECK(f9->from_int(c).frobenius() == f9->from_int(c));
  }
  FieldElement i = f9->from_coeffs({0, 1});
  CHECK(i.frobenius() == -i);
  for (std::uint64_t idx = 0; idx < f9->order(); ++idx) {
    FieldElement a = f9->element(idx);
    CHECK(a.frobenius().frobenius() == a);
  }
}

TEST_CASE("roots of unity") {
  auto f3 = FieldCtx::create(3, 1);
  auto r = nth_roots_of_unity(f3, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == f3->one());
  CHECK(r[1] == f3->from_int(2));

  auto f9 = FieldCtx::create(3, 2);
  CHECK(nth_roots_of_unity(f9, 4).size() == 4);

  auto r4 = nth_roots_of_unity(f3, 4);
  REQUIRE(r4.size() == 2);
  CHECK(r4[0] == f3->one());
  CHECK(r4[1] == f3->from_int(2));

  CHECK_THROWS_AS(nth_roots_of_unity(f3, 6), Error);
}

TEST_CASE("multiplicative order") {
  auto f3 = FieldCtx::create(3, 1);
  CHECK(mult_order(f3->one()) == 1);
  CHECK(mult_order(f3->from_int(2)) == 2);
  auto f9 = FieldCtx::create(3, 2);
  CHECK(mult_order(f9->from_coeffs({0, 1})) == 4);
  CHECK_THROWS_AS(mult_order(f9->zero()), Error);
}

TEST_CASE("ring axioms, exhaustive through 81 elements") {
  for (auto [p, s] : std::vector<std::pair<long long, int>>{{3, 1}, {3, 2}, {3, 3}, {3, 4},
                                                            {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    auto ctx = FieldCtx::create(p, s);
    std::uint64_t q = ctx->order();
    std::vector<FieldElement> elems;
    elems.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) elems.push_back(ctx->element(i));
    for (std::uint64_t ai = 0; ai < q; ++ai) {
      const FieldElement& a = elems[ai];
      // unary facts once per element
      if (!a.is_zero()) {
        REQUIRE(a * a.inv() == ctx->one());
        REQUIRE(a.pow(q - 1) == ctx->one());
      }
      for (std::uint64_t bi = 0; bi < q; ++bi) {
        const FieldElement& b = elems[bi];
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a.frobenius() + b.frobenius() == (a + b).frobenius());
        REQUIRE(a.frobenius() * b.frobenius() == (a * b).frobenius());
        if (q <= 27) {
          for (std::uint64_t ci = 0; ci < q; ++ci) {
            const FieldElement& c = elems[ci];
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
          }
        }
      }
    }
    if (q > 27) {
      // associativity and distributivity on a strided triple sample
      for (std::uint64_t ai = 0; ai < q; ai += 3) {
        for (std::uint64_t bi = 1; bi < q; bi += 5) {
          for (std::uint64_t ci = 2; ci < q; ci += 7) {
            const FieldElement &a = elems[ai], &b = elems[bi], &c = elems[ci];
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
          }
        }
      }
    }
  }
}

TEST_CASE("roots-of-unity cardinality matches gcd") {
  for (auto [p, s] : std::vector<std::pair<long long, int>>{{3, 1}, {3, 2}, {3, 3},
                                                            {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    auto ctx = FieldCtx::create(p, s);
    for (unsigned long long K = 1; K <= 50; ++K) {
      if (K % static_cast<unsigned long long>(p) == 0) continue;
      auto roots = nth_roots_of_unity(ctx, K);
      CHECK(roots.size() == std::gcd(K, ctx->order() - 1));
    }
  }
}

TEST_CASE("subfield membership and embedding") {
  auto f3 = FieldCtx::create(3, 1);
  auto f9 = FieldCtx::create(3, 2);
  auto f81 = FieldCtx::create(3, 4);

  SubfieldEmbedding up(f3, f9);
  CHECK(up(f3->from_int(2)) == f9->from_int(2));

  SubfieldEmbedding big(f9, f81);
  for (std::uint64_t i = 0; i < 9; ++i) {
    for (std::uint64_t j = 0; j < 9; ++j) {
      FieldElement a = f9->element(i), b = f9->element(j);
      CHECK(big(a * b) == big(a) * big(b));
      CHECK(big(a + b) == big(a) + big(b));
    }
  }
  // embedded F_9 elements pass the subfield test inside F_81
  for (std::uint64_t i = 0; i < 9; ++i) {
    CHECK(in_subfield(big(f9->element(i)), 2));
  }
  // F_3^* membership inside F_9
  FieldElement i9 = f9->from_coeffs({0, 1});
  CHECK(in_subfield_star(f9->from_int(2), 1));
  CHECK(!in_subfield_star(i9, 1));
  CHECK(!in_subfield_star(f9->zero(), 1));
}

TEST_CASE("element order and serialization") {
  auto f9 = FieldCtx::create(3, 2);
  CHECK(f9->from_coeffs({2, 1}).str() == "[2,1]");
  CHECK(FieldCtx::create(3, 1)->from_int(2).str() == "2");
  CHECK(f9->element(5).index() == 5);
}
