// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dslab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational number, always kept in lowest terms with a positive
// denominator.  All arithmetic and comparisons are exact; there is no
// floating-point anywhere in a Rat.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long long value) : v_(value) {}  // NOLINT: implicit by design
  Rat(const BigInt& value) : v_(value) {}
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(BigRat value) : v_(std::move(value)) {}

  // Parses "p", "-p" or "p/q".  Decimal notation is rejected.
  static Rat parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }
  const BigRat& raw() const { return v_; }

  bool is_integer() const { return den() == 1; }
  bool is_zero() const { return v_.is_zero(); }

  BigInt floor() const;  // largest integer <= *this
  BigInt ceil() const;   // smallest integer >= *this

  // Renders "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(BigRat(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(BigRat(-a.v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  BigRat v_;
};

// base^exp for non-negative integer exponents.
BigInt big_pow(const BigInt& base, unsigned exp);

// v^exp for non-negative integer exponents.
Rat rat_pow(const Rat& v, unsigned exp);

// Floor and ceiling of the integer square root.  Inputs must be >= 0.
BigInt isqrt_floor(const BigInt& value);
BigInt isqrt_ceil(const BigInt& value);

// Largest z >= 0 with z^q <= value.  Requires value >= 0 and q >= 1.
BigInt iroot_floor(const BigInt& value, unsigned q);

// Smallest z >= 0 with z^q >= k^p.  Requires k >= 0, p >= 0, q >= 1.
// This is the integer ceiling of k^(p/q).
BigInt ceil_rational_power(const BigInt& k, unsigned p, unsigned q);

// Largest z >= 0 with z^t <= v.  Requires v >= 0 and t >= 1.  This is the
// integer floor of v^(1/t) for rational v.
BigInt floor_rational_root(const Rat& v, unsigned t);

// Binomial coefficient C(n, k); zero when k > n or n < 0.
BigInt binomial(const BigInt& n, unsigned k);

}  // namespace dslab
