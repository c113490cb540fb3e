// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <Eigen/Core>
#include <string>
#include <utility>

namespace rmtgap {

// Runtime-width floating point backing PrecisionConfig above 15 digits.
// Semantics follow mpmath's working precision: every arithmetic result is
// rounded to the thread-local default width, values embed doubles exactly,
// and ScopedPrecision widens/narrows the working width for a block.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, default_bits()); mpfr_set_zero(v_, 1); }
  BigFloat(double x) { mpfr_init2(v_, default_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(int x) : BigFloat(static_cast<double>(x)) {}
  BigFloat(long x) { mpfr_init2(v_, default_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  explicit BigFloat(const std::string& s) {
    mpfr_init2(v_, default_bits());
    mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  ~BigFloat() { mpfr_clear(v_); }

  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  BigFloat& operator=(double x) { mpfr_set_prec(v_, default_bits()); mpfr_set_d(v_, x, MPFR_RNDN); return *this; }

  static int default_bits();
  static void set_default_bits(int bits);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  explicit operator double() const { return to_double(); }
  std::string str(int digits = 20) const;

  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(mpfr_add, a, b); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(mpfr_sub, a, b); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(mpfr_mul, a, b); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(mpfr_div, a, b); }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  // s -= a*b without a temporary; the LDLT inner loop lives on this.
  friend void submul(BigFloat& s, const BigFloat& a, const BigFloat& b) {
    mpfr_fms(s.v_, a.v_, b.v_, s.v_, MPFR_RNDN);
    mpfr_neg(s.v_, s.v_, MPFR_RNDN);
  }

  friend BigFloat sqrt(const BigFloat& a) { return unop(mpfr_sqrt, a); }
  friend BigFloat log(const BigFloat& a) { return unop(mpfr_log, a); }
  friend BigFloat exp(const BigFloat& a) { return unop(mpfr_exp, a); }
  friend BigFloat sin(const BigFloat& a) { return unop(mpfr_sin, a); }
  friend BigFloat cos(const BigFloat& a) { return unop(mpfr_cos, a); }
  friend BigFloat tan(const BigFloat& a) { return unop(mpfr_tan, a); }
  friend BigFloat abs(const BigFloat& a) { return unop(mpfr_abs, a); }
  friend BigFloat pow(const BigFloat& a, long e) {
    BigFloat r;
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  static BigFloat pi() { BigFloat r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  static BigFloat ln2() { BigFloat r; mpfr_const_log2(r.v_, MPFR_RNDN); return r; }
  static BigFloat eps() {
    BigFloat r(1.0);
    mpfr_mul_2si(r.v_, r.v_, 1 - default_bits(), MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using mpfr_unop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat binop(mpfr_binop f, const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat unop(mpfr_unop f, const BigFloat& a) {
    BigFloat r;
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

// Sets the thread-local working width for the enclosing scope.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int bits) : saved_(BigFloat::default_bits()) {
    BigFloat::set_default_bits(bits);
  }
  explicit ScopedPrecision(int decimal_digits, bool /*tag*/)
      : ScopedPrecision(static_cast<int>(decimal_digits * 3.3219280948873626) + 16) {}
  ~ScopedPrecision() { BigFloat::set_default_bits(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  int saved_;
};

inline ScopedPrecision scoped_digits(int decimal_digits) {
  return ScopedPrecision(decimal_digits, true);
}

}  // namespace rmtgap

namespace Eigen {
template <>
struct NumTraits<rmtgap::BigFloat> : GenericNumTraits<rmtgap::BigFloat> {
  using Real = rmtgap::BigFloat;
  using NonInteger = rmtgap::BigFloat;
  using Nested = rmtgap::BigFloat;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16,
  };
  static Real epsilon() { return rmtgap::BigFloat::eps(); }
  static Real dummy_precision() { return rmtgap::BigFloat::eps() * rmtgap::BigFloat(1024.0); }
  static int digits10() { return static_cast<int>(rmtgap::BigFloat::default_bits() / 3.32); }
};
}  // namespace Eigen
