#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "sct/cyclotomic.hpp"

using namespace sct;

namespace {

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> p(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  return p;
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>({1, 1}));
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>({1, 1, 1}));
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) ==
        std::vector<std::int64_t>({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(30) ==
        std::vector<std::int64_t>({1, 1, 0, -1, -1, -1, 0, 1, 1}));
}

TEST_CASE("cyclotomic factorization of x^n - 1") {
  for (int n = 1; n <= 30; ++n) {
    std::vector<std::int64_t> prod{1};
    for (int d : divisors(n)) prod = poly_mul(prod, cyclotomic_polynomial(d));
    std::vector<std::int64_t> expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("reduction respects the numeric embedding") {
  for (int n : {5, 8, 12, 30}) {
    CyclotomicContext ctx(n);
    // zeta^n reduces to 1
    std::vector<std::int64_t> xn(n + 1, 0);
    xn[n] = 1;
    CHECK(ctx.reduce(std::move(xn)) == ctx.from_integer(1));
    // sum of all n-th roots vanishes
    std::vector<int> all;
    for (int e = 0; e < n; ++e) all.push_back(e);
    CHECK(ctx.root_sum(all).is_zero());
    // exact products track complex products
    CyclotomicInt a = ctx.root_sum({1, 3});
    CyclotomicInt b = ctx.root_sum({2, n - 1});
    std::complex<double> lhs = ctx.to_complex(ctx.mul(a, b));
    std::complex<double> rhs = ctx.to_complex(a) * ctx.to_complex(b);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("ring operations") {
  CyclotomicContext ctx(12);
  CyclotomicInt a = ctx.root_sum({1, 5});
  CyclotomicInt b = ctx.root_sum({7, 11});
  CHECK(ctx.add(a, b).is_zero());  // the four primitive 12th roots sum to 0
  CHECK(ctx.sub(a, a).is_zero());
  CHECK(ctx.mul(ctx.from_integer(3), ctx.from_integer(-4)) ==
        ctx.from_integer(-12));
}
