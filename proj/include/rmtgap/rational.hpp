// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmp.h>

#include <string>

namespace rmtgap {

// Exact rational with arbitrary-size numerator/denominator, kept in
// canonical form (gcd = 1, denominator > 0).
class RationalValue {
 public:
  RationalValue() { mpq_init(q_); }
  RationalValue(unsigned long num, unsigned long den) {
    mpq_init(q_);
    mpq_set_ui(q_, num, den);
    mpq_canonicalize(q_);
  }
  RationalValue(const RationalValue& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  RationalValue(RationalValue&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  ~RationalValue() { mpq_clear(q_); }

  RationalValue& operator=(const RationalValue& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  RationalValue& operator=(RationalValue&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  RationalValue& operator*=(const RationalValue& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  friend RationalValue operator*(RationalValue a, const RationalValue& b) { return a *= b; }

  friend bool operator==(const RationalValue& a, const RationalValue& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }

  std::string numerator() const;
  std::string denominator() const;
  std::string str() const;  // "p/q", or "p" when q == 1

  double to_double() const { return mpq_get_d(q_); }

  // Natural log evaluated in extended precision; exact for any magnitude.
  double log() const;

  bool reduced() const;  // gcd(num, den) == 1 and den > 0

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

}  // namespace rmtgap
