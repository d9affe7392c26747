#include "sinecone/radial.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sinecone/conemaps.hpp"
#include "sinecone/errors.hpp"
#include "sinecone/tridiag.hpp"

namespace sinecone {

namespace {

double log_tan_half_ratio(double lo, double hi) { return std::log(std::tan(0.5 * hi) / std::tan(0.5 * lo)); }

// int_lo^hi sin = cos lo - cos hi, written without cancellation
double sin_integral(double lo, double hi) { return 2.0 * std::sin(0.5 * (lo + hi)) * std::sin(0.5 * (hi - lo)); }

}  // namespace

std::vector<double> solve_radial(const RadialProblem& p, int modes, const simd::Kernels& kernels) {
  const int N = p.grid_points;
  const double eps = p.boundary_offset;
  if (N < 100) fail(ErrorKind::IllPosed, "grid_points must be at least 100");
  if (!(eps > 0) || !(eps < std::numbers::pi / (4.0 * N))) {
    fail(ErrorKind::IllPosed, "boundary_offset must lie in (0, pi/(4N))");
  }
  if (p.block == RadialBlock::TT && p.coupling < hardy_bound(p.n)) {
    fail(ErrorKind::IllPosed, "coupling below -(n-1)^2/4: the radial form is unbounded below");
  }
  if (p.block == RadialBlock::Function && p.coupling < 0) {
    fail(ErrorKind::IllPosed, "function block needs a nonnegative Laplace eigenvalue");
  }
  if (modes < 1 || modes > N) fail(ErrorKind::IllPosed, "modes out of range");

  // phi = sin^{-a} psi with a = (n-1)/2 turns the form into
  //   int psi'^2 sin + (c + a^2) int psi^2 / sin - a(a+1) int psi^2 sin
  // against int psi^2 sin; natural boundary conditions at both cuts.
  const double a = 0.5 * (p.n - 1);
  const double cp = p.coupling.get_d() + a * a;
  const double h = (std::numbers::pi - 2.0 * eps) / N;
  const std::size_t npts = static_cast<std::size_t>(N) + 1;

  std::vector<double> theta(npts);
  for (std::size_t i = 0; i < npts; ++i) theta[i] = eps + static_cast<double>(i) * h;
  theta.back() = std::numbers::pi - eps;

  std::vector<double> edges(npts + 1);
  edges.front() = theta.front();
  edges.back() = theta.back();
  for (std::size_t k = 1; k < npts; ++k) edges[k] = 0.5 * (theta[k - 1] + theta[k]);

  std::vector<double> diag(npts, 0.0), off(npts - 1), mass(npts);
  for (std::size_t i = 0; i + 1 < npts; ++i) {
    double w = sin_integral(theta[i], theta[i + 1]) / (h * h);
    diag[i] += w;
    diag[i + 1] += w;
    off[i] = -w;
  }
  for (std::size_t i = 0; i < npts; ++i) {
    diag[i] += cp * log_tan_half_ratio(edges[i], edges[i + 1]);
    mass[i] = sin_integral(edges[i], edges[i + 1]);
  }

  Tridiagonal t;
  t.diag.resize(npts);
  t.off.resize(npts - 1);
  for (std::size_t i = 0; i < npts; ++i) t.diag[i] = diag[i] / mass[i];
  for (std::size_t i = 0; i + 1 < npts; ++i) t.off[i] = off[i] / std::sqrt(mass[i] * mass[i + 1]);

  std::vector<double> ev = smallest_eigenvalues(t, modes, kernels);
  for (double& v : ev) v -= a * (a + 1.0);
  return ev;
}

std::vector<double> closed_form_targets(int n, const Rational& c, int modes) {
  std::vector<double> out;
  QuadReal y = xi(n, QuadReal(c));
  for (int j = 0; j < modes; ++j) out.push_back(eta(n + 1, y + QuadReal(j)).to_double());
  return out;
}

RadialReport compare_to_targets(const std::vector<double>& computed, const std::vector<double>& targets, double tol) {
  RadialReport r;
  r.tol = tol;
  double worst_err = -1;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    ModeCheck m;
    m.j = static_cast<int>(j);
    m.target = targets[j];
    m.computed = j < computed.size() ? computed[j] : std::nan("");
    double diff = std::fabs(m.computed - m.target);
    m.error = m.target == 0.0 ? diff : diff / std::fabs(m.target);
    m.pass = m.error < tol;
    if (!m.pass) r.pass = false;
    if (!(m.error <= worst_err)) {
      worst_err = m.error;
      r.worst = m.j;
    }
    r.modes.push_back(m);
  }
  return r;
}

RadialReport check_line(const GeometricSpectrum& gs, RadialBlock block, const Rational& base_value, int modes,
                        double tol, int grid_points, double boundary_offset) {
  const Spectrum* comp = block == RadialBlock::Function ? &gs.spec0 : (gs.specE_TT ? &*gs.specE_TT : nullptr);
  if (comp == nullptr || comp->multiplicity_of(QuadReal(base_value)) == 0) {
    fail(ErrorKind::InvariantViolation, "value " + rational_string(base_value) + " is not a line of the base " +
                                            (block == RadialBlock::Function ? "spec0" : "specE_TT"));
  }
  RadialProblem p{gs.n, base_value, block, grid_points, boundary_offset};
  RadialReport r = compare_to_targets(solve_radial(p, modes), closed_form_targets(gs.n, base_value, modes), tol);
  r.n = gs.n;
  r.coupling = base_value;
  r.block = block;
  r.grid_points = grid_points;
  r.boundary_offset = boundary_offset;
  return r;
}

void throw_if_failed(const RadialReport& r) {
  if (r.pass) return;
  const ModeCheck& w = r.modes.at(static_cast<std::size_t>(r.worst));
  std::ostringstream msg;
  msg.precision(10);
  msg << "mode j=" << w.j << ": computed " << w.computed << ", target " << w.target << ", error " << w.error
      << " exceeds " << r.tol;
  fail(ErrorKind::VerificationFailed, msg.str());
}

RadialReport verify_line(const GeometricSpectrum& gs, RadialBlock block, const Rational& base_value, int modes,
                         double tol, int grid_points, double boundary_offset) {
  RadialReport r = check_line(gs, block, base_value, modes, tol, grid_points, boundary_offset);
  throw_if_failed(r);
  return r;
}

std::vector<double> rayleigh_unbounded_demo(int n, const Rational& kappa, const std::vector<double>& epsilons,
                                            const simd::Kernels& kernels) {
  // profile psi(t) = t^{-a} B(log t), B(u) = u^2 (u + L)^2 on [-L, 0]; t = theta / eps
  constexpr double L = 6.0;
  constexpr std::size_t M = 10000;
  const double a = 0.5 * (n - 1);
  const double hu = L / static_cast<double>(M);
  const double k = kappa.get_d();

  std::vector<double> w(M + 1);
  for (std::size_t i = 0; i <= M; ++i) {
    double c = (i == 0 || i == M) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    w[i] = c * hu / 3.0;
  }

  std::vector<double> out;
  std::vector<double> stiff(M + 1), pot(M + 1), mass(M + 1);
  for (double eps : epsilons) {
    for (std::size_t i = 0; i <= M; ++i) {
      double u = -L + static_cast<double>(i) * hu;
      double t = std::exp(u);
      double th = eps * t;
      double b = u * u * (u + L) * (u + L);
      double db = 2.0 * u * (u + L) * (2.0 * u + L);
      double tpow = std::pow(t, -a);
      double psi = tpow * b;
      double dpsi = tpow / t * (db - a * b);  // d psi / dt
      double s = std::sin(th);
      double sn2 = std::pow(s, n - 2);
      double sn = sn2 * s * s;
      double dphi = dpsi / eps;
      // d theta = theta du
      stiff[i] = dphi * dphi * sn * th;
      pot[i] = psi * psi * sn2 * th;
      mass[i] = psi * psi * sn * th;
    }
    double S = kernels.weighted_sum(w.data(), stiff.data(), M + 1);
    double P = kernels.weighted_sum(w.data(), pot.data(), M + 1);
    double Ms = kernels.weighted_sum(w.data(), mass.data(), M + 1);
    out.push_back((S + k * P) / Ms);
  }
  return out;
}

}  // namespace sinecone
