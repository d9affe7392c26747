#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "sinecone/spectra.hpp"

namespace sinecone {

Integer binomial(long n, long k);
// dimension of degree-k harmonic polynomials in n+1 variables
Integer sphere_multiplicity(int n, long k);
Spectrum sphere_functions(int n, const QuadReal& cutoff);
// Round sphere with only the function spectrum; 1-form and TT data are not built in.
GeometricSpectrum sphere_geometric(int n, const QuadReal& cutoff);

struct ProductMarker {
  int n1 = 2;
  int n2 = 2;
  bool factors_strictly_stable = true;
  int n() const { return n1 + n2; }
};

std::pair<QuadReal, Mult> product_tt_marker(const ProductMarker& m);
// Base data for a normalized product: the constant function and the TT marker,
// both complete only up to 0.
GeometricSpectrum product_geometric(const ProductMarker& m);
// Split n into two factor dimensions >= 2.
ProductMarker product_of_dimension(int n);

struct LoadResult {
  GeometricSpectrum spectrum;
  std::vector<std::string> warnings;
};

// Looks up relative paths in the working directory, then in $SINECONE_DATA_DIR
// (and its spheres/ and user/ subdirectories), then in the shipped data directory.
std::filesystem::path resolve_data_path(const std::string& path);
LoadResult load_geometric_spectrum(const std::string& path);
void save_geometric_spectrum(const GeometricSpectrum& gs, const std::string& path);

struct SymmetricSpaceStub {
  std::string name;
  int dimension;
};
std::vector<SymmetricSpaceStub> symmetric_space_stubs();

}  // namespace sinecone
