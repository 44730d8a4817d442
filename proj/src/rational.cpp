// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#include "dslab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dslab {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  // The underlying rational type requires a positive denominator at
  // construction, so move the sign into the numerator first.
  if (den < 0) {
    v_ = BigRat(-num, -den);
  } else {
    v_ = BigRat(num, den);
  }
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.v_.is_zero()) throw std::invalid_argument("division of rational by zero");
  return Rat(BigRat(a.v_ / b.v_));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer literal");
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text));
  }
  BigInt num = parse_integer(text.substr(0, slash));
  std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(den_part)) throw std::invalid_argument("malformed rational literal");
  BigInt den = parse_integer(den_part);
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(num, den);
}

BigInt Rat::floor() const {
  BigInt n = num();
  BigInt d = den();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

BigInt Rat::ceil() const {
  BigInt n = num();
  BigInt d = den();
  BigInt q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

std::string Rat::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return result;
}

Rat rat_pow(const Rat& v, unsigned exp) {
  return Rat(big_pow(v.num(), exp), big_pow(v.den(), exp));
}

BigInt isqrt_floor(const BigInt& value) {
  if (value < 0) throw std::invalid_argument("square root of negative integer");
  return boost::multiprecision::sqrt(value);
}

BigInt isqrt_ceil(const BigInt& value) {
  BigInt r = isqrt_floor(value);
  if (r * r < value) ++r;
  return r;
}

BigInt iroot_floor(const BigInt& value, unsigned q) {
  if (q == 0) throw std::invalid_argument("zeroth root");
  if (value < 0) throw std::invalid_argument("root of negative integer");
  if (value <= 1 || q == 1) return value;
  // Binary search on z with z^q <= value.
  BigInt lo = 0;
  BigInt hi = 1;
  while (big_pow(hi, q) <= value) hi <<= 1;
  // Invariant: lo^q <= value < hi^q.
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (big_pow(mid, q) <= value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

BigInt ceil_rational_power(const BigInt& k, unsigned p, unsigned q) {
  if (q == 0) throw std::invalid_argument("zero root index");
  if (k < 0) throw std::invalid_argument("rational power of negative integer");
  BigInt target = big_pow(k, p);
  BigInt z = iroot_floor(target, q);
  if (big_pow(z, q) < target) ++z;
  return z;
}

BigInt floor_rational_root(const Rat& v, unsigned t) {
  if (t == 0) throw std::invalid_argument("zeroth root");
  if (v < Rat(0)) throw std::invalid_argument("root of negative rational");
  // Largest z with z^t * den <= num.
  BigInt lo = 0;
  BigInt hi = 1;
  const BigInt num = v.num();
  const BigInt den = v.den();
  while (big_pow(hi, t) * den <= num) hi <<= 1;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (big_pow(mid, t) * den <= num) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

BigInt binomial(const BigInt& n, unsigned k) {
  if (n < 0) return 0;
  if (n < k) return 0;
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: the running product of j consecutive integers is divisible by j!
  }
  return result;
}

}  // namespace dslab
