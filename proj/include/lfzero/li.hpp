#pragma once

#include <complex>
#include <vector>

#include "lfzero/descriptor.hpp"
#include "lfzero/zeros_io.hpp"

namespace lfzero {

enum class LiMethod { ZeroSum, Arithmetic, Asymptotic };

struct LiCoefficient {
    long n = 0;                       // index; negative allowed for ZeroSum
    std::complex<double> value{0.0, 0.0};
    LiMethod method = LiMethod::ZeroSum;
    double error_bar = 0.0;           // truncation / extrapolation estimate
    double tail_estimate = 0.0;       // modeled mass beyond T (ZeroSum only)
};

// Decimal digits used by the extended-precision binomial accumulators in
// li_arithmetic.  Indices beyond 20 need at least 2n digits to absorb the
// ~2^n cancellation of the alternating binomial sums.
struct PrecisionContext {
    int working_digits = 30;
};

// lambda_F(n) = sum_rho [1 - (1 - 1/rho)^n], conjugate pairs folded so each
// listed zero contributes 2 - 2 Re((1-1/rho)^n).  A pair above the cutoff
// carries n^2/gamma^2 + O(n^3/gamma^3), so the omitted mass is near
// n^2 (rho(T) + rho')/T with rho the zero density at T and rho' its growth
// per e-fold.  That model is reported as tail_estimate (add it to value for
// an edge-corrected estimate) and, inflated 1.5x for the window estimates
// feeding it, as error_bar; nothing is silently added to value.
LiCoefficient li_zero_sum(const ZeroTable& zeros, long n, double T);

// lambda_F(-n) assembled from the arithmetic formula: pole order, the
// n(log Q - (d_F/2) gamma0) line, binomial-weighted prime-sum limits,
// the digamma series term, and the Hurwitz double sum.  Binomial
// accumulation runs at prec.working_digits; throws PrecisionError when
// cancellation eats the budget.  X is the prime-sum extrapolation limit
// (at least 1e4).
LiCoefficient li_arithmetic(const SelbergDescriptor& desc, long n, double X,
                            const PrecisionContext& prec = {});

// Leading asymptotic (d_F/2) n log n + c_F n with
// c_F = (d_F/2)(gamma0 - 1) + log Q + sum_j lambda_j log lambda_j.
double li_asymptotic(const SelbergDescriptor& desc, long n);

struct LiPositivityRow {
    long n;
    double re_lambda;
    double error_bar;
    bool pass;
};

// Re lambda_F(n) > 0 for n = 1..n_max — a reporting criterion over a finite
// prefix ("consistent up to n_max"), never a proof.
std::vector<LiPositivityRow> li_positivity_report(const ZeroTable& zeros,
                                                  long n_max, double T);

}  // namespace lfzero
