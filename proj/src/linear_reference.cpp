#include "vtc/linear_reference.hpp"

#include <algorithm>
#include <cmath>

#include "vtc/numerics.hpp"

namespace vtc {

double bs_call(const BSInputs& in) {
    if (in.tau <= 0.0) return std::max(in.S - in.E, 0.0);
    const double svt = in.sigma * std::sqrt(in.tau);
    const double d1 =
        (std::log(in.S / in.E) + (in.r + 0.5 * in.sigma * in.sigma) * in.tau) /
        svt;
    const double d2 = d1 - svt;
    return in.S * normal_cdf(d1) - in.E * std::exp(-in.r * in.tau) * normal_cdf(d2);
}

double bs_put(const BSInputs& in) {
    // parity: put = call - S + E e^{-r tau}
    return bs_call(in) - in.S + in.E * std::exp(-in.r * in.tau);
}

double bs_gamma_kernel(const BSInputs& in, double x) {
    const double svt = in.sigma * std::sqrt(in.tau);
    const double d = (x + (in.r - 0.5 * in.sigma * in.sigma) * in.tau) / svt;
    return normal_pdf(d) / svt;
}

}  // namespace vtc
