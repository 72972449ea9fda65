#pragma once

#include <gmp.h>
#include <mpfr.h>

namespace lfzero::detail {

// RAII shims over mpfr_t / mpz_t for the binomial-sum accumulators; just
// enough surface for exact-weight times double-value accumulation.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    ~BigFloat() { mpfr_clear(v_); }
    BigFloat(const BigFloat&) = delete;
    BigFloat& operator=(const BigFloat&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double value() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

class BigInt {
  public:
    BigInt() { mpz_init(v_); }
    ~BigInt() { mpz_clear(v_); }
    BigInt(const BigInt&) = delete;
    BigInt& operator=(const BigInt&) = delete;

    mpz_ptr get() { return v_; }
    mpz_srcptr get() const { return v_; }

  private:
    mpz_t v_;
};

}  // namespace lfzero::detail
