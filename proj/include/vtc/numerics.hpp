#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "vtc/errors.hpp"

namespace vtc {

// Gauss error function, |error| < 1e-14 on finite inputs (Cody's rational
// approximations).
double erf(double x);

// Complementary error function.
double erfc(double x);

// Scaled complementary error function e^{x^2} erfc(x); stays finite for
// large positive x where erfc underflows.
double erfcx(double x);

// Standard normal CDF and PDF.
double normal_cdf(double x);
double normal_pdf(double x);

// Adaptive quadrature of f over [lo, hi] with estimated absolute error
// <= tol. Throws NonConvergence if the subdivision budget is exhausted.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

// Tridiagonal matrix: diag has length N, sub/sup length N-1.
struct Tridiag {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;

    std::size_t size() const { return diag.size(); }

    // y = A x, for checking residuals.
    std::vector<double> multiply(const std::vector<double>& x) const;
};

// Thomas algorithm, O(N). Throws SingularPivot when an elimination pivot
// falls below pivot_eps_scale * max|diag|.
std::vector<double> thomas_solve(const Tridiag& m, const std::vector<double>& d,
                                 double pivot_eps_scale = 1e-14);

// Symmetric difference quotient (f(x+h) - f(x-h)) / (2h).
double central_diff(const std::function<double(double)>& f, double x, double h);

}  // namespace vtc
