#pragma once

#include <string>
#include <vector>

#include "sinecone/simd/kernels.hpp"
#include "sinecone/spectra.hpp"

namespace sinecone {

enum class RadialBlock { Function, TT };

struct RadialProblem {
  int n = 3;
  Rational coupling = 0;
  RadialBlock block = RadialBlock::Function;
  int grid_points = 4000;
  double boundary_offset = 1e-6;
};

// Smallest eigenvalues of  int phi'^2 sin^n + c int phi^2 sin^(n-2)  against  int phi^2 sin^n
// on (0, pi).
std::vector<double> solve_radial(const RadialProblem& p, int modes,
                                 const simd::Kernels& kernels = simd::active_kernels());

// eta_{n+1}(xi_n(c) + j) for j = 0 .. modes-1
std::vector<double> closed_form_targets(int n, const Rational& c, int modes);

struct ModeCheck {
  int j = 0;
  double target = 0;
  double computed = 0;
  double error = 0;  // relative, or absolute when the target is 0
  bool pass = false;
};

struct RadialReport {
  int n = 0;
  Rational coupling;
  RadialBlock block = RadialBlock::Function;
  int grid_points = 0;
  double boundary_offset = 0;
  double tol = 0;
  std::vector<ModeCheck> modes;
  bool pass = true;
  int worst = -1;
};

RadialReport compare_to_targets(const std::vector<double>& computed, const std::vector<double>& targets, double tol);
// Non-throwing check of one base line against the closed forms.
RadialReport check_line(const GeometricSpectrum& gs, RadialBlock block, const Rational& base_value, int modes,
                        double tol, int grid_points = 4000, double boundary_offset = 1e-6);
// As check_line; throws VerificationFailed naming the worst mode.
RadialReport verify_line(const GeometricSpectrum& gs, RadialBlock block, const Rational& base_value, int modes,
                         double tol, int grid_points = 4000, double boundary_offset = 1e-6);
void throw_if_failed(const RadialReport& r);

// Rayleigh quotients of the TT radial form on a bump concentrated in (0, eps).
std::vector<double> rayleigh_unbounded_demo(int n, const Rational& kappa, const std::vector<double>& epsilons,
                                            const simd::Kernels& kernels = simd::active_kernels());

}  // namespace sinecone
