#pragma once

#include <cmath>
#include <complex>

namespace lfzero::detail {

// Neumaier variant of compensated summation: error-free transformation of
// each add, immune to the Kahan failure case where the new term exceeds the
// running sum.
struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }

    double value() const { return s + c; }
    double compensation() const { return c; }
};

struct NeumaierSumC {
    NeumaierSum re;
    NeumaierSum im;

    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }

    std::complex<double> value() const { return {re.value(), im.value()}; }
    double compensation() const { return std::abs(re.c) + std::abs(im.c); }
};

}  // namespace lfzero::detail
