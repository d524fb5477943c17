#pragma once

#include <concepts>
#include <string>

#include "ecsec/arith/integer.hpp"

namespace ecsec {

// Exact field elements carry their field: zero()/one()/from_int() return
// elements of the same field as the receiver.
template <class F>
concept FieldElement = std::copyable<F> && requires(const F a, const F b, long n, const Integer& z) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.zero() } -> std::same_as<F>;
  { a.one() } -> std::same_as<F>;
  { a.from_int(n) } -> std::same_as<F>;
  { a.from_integer(z) } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inv() } -> std::same_as<F>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <FieldElement F>
F field_pow(F base, long e) {
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  F r = base.one();
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

}  // namespace ecsec
