// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/rational.hpp"

#include <doctest.h>

#include <stdexcept>

namespace {

using dslab::BigInt;
using dslab::Rat;

using int128 = __int128;

int128 pow128(std::int64_t base, unsigned exp) {
  int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
  CHECK(Rat(BigInt(6), BigInt(4)).num() == 3);
  CHECK(Rat(BigInt(6), BigInt(4)).den() == 2);
  CHECK(Rat(BigInt(-6), BigInt(4)).num() == -3);
  CHECK(Rat(BigInt(6), BigInt(-4)).num() == -3);
  CHECK(Rat(BigInt(6), BigInt(-4)).den() == 2);
  CHECK(Rat(BigInt(-6), BigInt(-4)) == Rat(BigInt(3), BigInt(2)));
  CHECK(Rat(BigInt(0), BigInt(-7)).den() == 1);
  CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("parsing accepts p, -p and p/q and rejects everything else") {
  CHECK(Rat::parse("3/4") == Rat(BigInt(3), BigInt(4)));
  CHECK(Rat::parse("-3/4") == Rat(BigInt(-3), BigInt(4)));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat::parse("4/6") == Rat(BigInt(2), BigInt(3)));
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("rendering matches the p/q convention and round-trips") {
  CHECK(Rat(BigInt(2), BigInt(3)).str() == "2/3");
  CHECK(Rat(-5).str() == "-5");
  CHECK(Rat(BigInt(-1), BigInt(3)).str() == "-1/3");
  CHECK(Rat(0).str() == "0");
  for (int p = -12; p <= 12; ++p) {
    for (int q = 1; q <= 9; ++q) {
      const Rat v{BigInt(p), BigInt(q)};
      CHECK(Rat::parse(v.str()) == v);
    }
  }
}

TEST_CASE("arithmetic agrees with the integer cross-multiplication formulas") {
  for (int a = -6; a <= 6; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = -6; c <= 6; ++c) {
        for (int d = 1; d <= 4; ++d) {
          const Rat x{BigInt(a), BigInt(b)};
          const Rat y{BigInt(c), BigInt(d)};
          CHECK(x + y == Rat(BigInt(a * d + c * b), BigInt(b * d)));
          CHECK(x - y == Rat(BigInt(a * d - c * b), BigInt(b * d)));
          CHECK(x * y == Rat(BigInt(a * c), BigInt(b * d)));
          if (c != 0) CHECK(x / y == Rat(BigInt(a * d), BigInt(b * c)));
          CHECK((x < y) == (a * d < c * b));
          CHECK((x == y) == (a * d == c * b));
        }
      }
    }
  }
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("floor and ceiling behave on both signs") {
  CHECK(Rat(BigInt(7), BigInt(2)).floor() == 3);
  CHECK(Rat(BigInt(7), BigInt(2)).ceil() == 4);
  CHECK(Rat(BigInt(-7), BigInt(2)).floor() == -4);
  CHECK(Rat(BigInt(-7), BigInt(2)).ceil() == -3);
  CHECK(Rat(5).floor() == 5);
  CHECK(Rat(5).ceil() == 5);
  for (int p = -30; p <= 30; ++p) {
    for (int q = 1; q <= 7; ++q) {
      const Rat v{BigInt(p), BigInt(q)};
      CHECK(Rat(v.floor()) <= v);
      CHECK(v < Rat(v.floor() + 1));
      CHECK(v <= Rat(v.ceil()));
      CHECK(Rat(v.ceil() - 1) < v);
    }
  }
}

TEST_CASE("big_pow matches repeated multiplication") {
  for (int base = -5; base <= 5; ++base) {
    BigInt acc = 1;
    for (unsigned e = 0; e <= 12; ++e) {
      CHECK(dslab::big_pow(BigInt(base), e) == acc);
      acc *= base;
    }
  }
  CHECK(dslab::big_pow(BigInt(20), 16) == BigInt("655360000000000000000"));
}

TEST_CASE("rat_pow matches repeated multiplication") {
  const Rat v(BigInt(-3), BigInt(7));
  Rat acc(1);
  for (unsigned e = 0; e <= 9; ++e) {
    CHECK(dslab::rat_pow(v, e) == acc);
    acc *= v;
  }
}

TEST_CASE("integer square roots bracket the true root") {
  for (std::int64_t v = 0; v <= 5000; ++v) {
    const BigInt f = dslab::isqrt_floor(BigInt(v));
    const BigInt c = dslab::isqrt_ceil(BigInt(v));
    CHECK(f * f <= v);
    CHECK((f + 1) * (f + 1) > v);
    CHECK(c * c >= v);
    CHECK((c == 0 ? BigInt(0) : (c - 1) * (c - 1)) < std::max<std::int64_t>(v, 1));
  }
  const BigInt big = dslab::big_pow(BigInt(10), 30);
  CHECK(dslab::isqrt_floor(big) == dslab::big_pow(BigInt(10), 15));
  CHECK(dslab::isqrt_ceil(big) == dslab::big_pow(BigInt(10), 15));
  CHECK(dslab::isqrt_floor(big - 1) == dslab::big_pow(BigInt(10), 15) - 1);
  CHECK(dslab::isqrt_ceil(big + 1) == dslab::big_pow(BigInt(10), 15) + 1);
}

TEST_CASE("iroot_floor satisfies z^q <= v < (z+1)^q") {
  for (std::int64_t v = 0; v <= 2000; ++v) {
    for (unsigned q = 1; q <= 6; ++q) {
      const BigInt z = dslab::iroot_floor(BigInt(v), q);
      CHECK(dslab::big_pow(z, q) <= v);
      CHECK(dslab::big_pow(z + 1, q) > v);
    }
  }
}

TEST_CASE("ceil_rational_power is the least z with z^q >= k^p") {
  // Defining-inequality check on the full grid; in addition, a literal
  // linear scan wherever the answer is small enough to walk to.
  constexpr std::int64_t kScanCap = 10000;
  for (std::int64_t k = 1; k <= 100; ++k) {
    for (unsigned p = 1; p <= 9; ++p) {
      for (unsigned q = 1; q <= 9; ++q) {
        const BigInt z = dslab::ceil_rational_power(BigInt(k), p, q);
        const BigInt target = dslab::big_pow(BigInt(k), p);
        CHECK(dslab::big_pow(z, q) >= target);
        if (z > 0) CHECK(dslab::big_pow(z - 1, q) < target);
        if (z <= kScanCap) {
          const int128 goal = pow128(k, p);
          std::int64_t walked = 0;
          while (pow128(walked, q) < goal) ++walked;
          CHECK(BigInt(walked) == z);
        }
      }
    }
  }
  CHECK(dslab::ceil_rational_power(BigInt(11), 5, 3) == 55);
  CHECK(dslab::ceil_rational_power(BigInt(0), 3, 2) == 0);
}

TEST_CASE("floor_rational_root brackets rational arguments") {
  for (int p = 0; p <= 400; ++p) {
    for (int q = 1; q <= 5; ++q) {
      for (unsigned t = 1; t <= 4; ++t) {
        const Rat v{BigInt(p), BigInt(q)};
        const BigInt r = dslab::floor_rational_root(v, t);
        CHECK(Rat(dslab::big_pow(r, t)) <= v);
        CHECK(Rat(dslab::big_pow(r + 1, t)) > v);
      }
    }
  }
  CHECK(dslab::floor_rational_root(Rat(32), 2) == 5);
}

TEST_CASE("binomial coefficients match Pascal's triangle") {
  std::vector<std::vector<BigInt>> pascal(41);
  for (int n = 0; n <= 40; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (int k = 0; k <= n; ++k) CHECK(dslab::binomial(BigInt(n), k) == pascal[n][k]);
    CHECK(dslab::binomial(BigInt(n), n + 1) == 0);
  }
  CHECK(dslab::binomial(BigInt(-2), 2) == 0);
  CHECK(dslab::binomial(BigInt(230), 3) == 2001460);
}
