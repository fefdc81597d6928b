#pragma once

#include <complex>
#include <vector>

namespace exptaylor {

/// e^z - 1 without cancellation for small |z|.
std::complex<double> expm1(std::complex<double> z);

/// z^n for n >= 0, with z^0 = 1 (including 0^0).
std::complex<double> ipow(std::complex<double> z, int n);

/// Gauss-Legendre rule mapped to [0, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, n >= 1. Cached; safe to call concurrently.
const QuadratureRule& gauss_legendre(int n);

double factorial(int n);

/// Neumaier-compensated sum.
class CompensatedSum {
public:
    void add(double v);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace exptaylor
