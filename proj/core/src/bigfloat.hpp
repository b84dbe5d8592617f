#pragma once

// Minimal RAII wrapper over mpfr_t. Internal to the library.

#include <mpfr.h>

#include "ztau/ring.hpp"

namespace ztau::detail {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  static BigFloat from_integer(const Integer& z, mpfr_prec_t precision) {
    BigFloat f(precision);
    mpfr_set_z(f.get(), z.get_mpz_t(), MPFR_RNDN);
    return f;
  }

  // Nearest integer.
  Integer round() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
    return z;
  }

 private:
  mpfr_t value_;
};

}  // namespace ztau::detail
