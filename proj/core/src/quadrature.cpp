#include "censpred/quadrature.hpp"

#include <cmath>

#include "censpred/numerics.hpp"

namespace censpred {
namespace {

struct Panel {
  double a, b, fa, fm, fb, s;
};

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, const Panel& p,
             double tol, int depth) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m), rm = 0.5 * (m + p.b);
  const double flm = f(lm), frm = f(rm);
  const double sl = simpson(p.fa, flm, p.fm, m - p.a);
  const double sr = simpson(p.fm, frm, p.fb, p.b - m);
  const double err = (sl + sr - p.s) / 15.0;
  if (std::abs(err) <= tol || p.b - p.a < 1e-14 * (std::abs(p.a) + 1.0))
    return sl + sr + err;
  if (depth <= 0)
    throw NumericalError("integrate: recursion depth exhausted");
  return adapt(f, {p.a, m, p.fa, flm, p.fm, sl}, 0.5 * tol, depth - 1) +
         adapt(f, {m, p.b, p.fm, frm, p.fb, sr}, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double s = simpson(fa, fm, fb, b - a);
  // first pass with a coarse magnitude estimate, refined below
  double scale = std::abs(s);
  // probe a few interior points so a vanishing midpoint cannot hide mass
  for (double u : {0.125, 0.375, 0.625, 0.875})
    scale = std::max(scale, std::abs(f(a + u * (b - a))) * (b - a));
  const double tol = std::max(abs_tol, rel_tol * std::max(scale, 1e-300));
  return adapt(f, {a, b, fa, fm, fb, s}, tol, 60);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double scale, double rel_tol, double abs_tol) {
  const auto g = [&](double u) {
    const double om = 1.0 - u;
    const double t = scale * u / om;
    return f(t) * scale / (om * om);
  };
  // endpoint u=1 maps to infinity; the integrand must vanish there
  const auto g_clamped = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double v = g(u);
    return std::isfinite(v) ? v : 0.0;
  };
  return integrate(g_clamped, 0.0, 1.0, rel_tol, abs_tol);
}

}  // namespace censpred
