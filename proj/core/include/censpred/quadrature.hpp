#ifndef CENSPRED_QUADRATURE_HPP
#define CENSPRED_QUADRATURE_HPP

#include <functional>

namespace censpred {

/// Adaptive Simpson integration of f over [a, b].
/// Recursively subdivides until the Richardson error estimate on each panel
/// is below its share of the tolerance. Throws NumericalError if the
/// recursion depth limit is hit before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 0.0);

/// Integral of f over [0, infinity), via the substitution t = scale*u/(1-u).
/// `scale` should be of the order of the integrand's typical support.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double scale, double rel_tol = 1e-10,
                               double abs_tol = 0.0);

}  // namespace censpred

#endif  // CENSPRED_QUADRATURE_HPP
