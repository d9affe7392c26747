#include "sinecone/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sinecone/errors.hpp"
#include "sinecone/json_io.hpp"

#ifndef SINECONE_DEFAULT_DATA_DIR
#define SINECONE_DEFAULT_DATA_DIR "data"
#endif

namespace sinecone {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer sphere_multiplicity(int n, long k) {
  return binomial(n + k, k) - binomial(n + k - 2, k - 2);
}

Spectrum sphere_functions(int n, const QuadReal& cutoff) {
  if (n < 2) fail(ErrorKind::InvariantViolation, "sphere dimension must be at least 2");
  std::vector<RawLine> raw;
  for (long k = 0;; ++k) {
    QuadReal v(Rational(k * (k + n - 1)));
    if (v > cutoff) break;
    Integer m = sphere_multiplicity(n, k);
    raw.push_back({v, m.get_si(), Origin{Block::Input, static_cast<int>(k), 0, m.get_si()}});
  }
  return merge(std::move(raw), cutoff);
}

GeometricSpectrum sphere_geometric(int n, const QuadReal& cutoff) {
  GeometricSpectrum gs;
  gs.n = n;
  gs.spec0 = sphere_functions(n, cutoff);
  return gs;
}

std::pair<QuadReal, Mult> product_tt_marker(const ProductMarker& m) {
  if (m.n1 < 2 || m.n2 < 2) fail(ErrorKind::InvariantViolation, "product factors must have dimension at least 2");
  return {QuadReal(-2 * (m.n() - 1)), 1};
}

GeometricSpectrum product_geometric(const ProductMarker& m) {
  auto [kappa, mult] = product_tt_marker(m);
  GeometricSpectrum gs;
  gs.n = m.n();
  gs.spec0 = spectrum_from({{QuadReal(0), 1}}, QuadReal(0));
  gs.spec1D = Spectrum{{}, QuadReal(0)};
  gs.specE_TT = spectrum_from({{kappa, mult}}, QuadReal(0));
  return gs;
}

ProductMarker product_of_dimension(int n) {
  if (n < 4) fail(ErrorKind::InvariantViolation, "a product needs total dimension at least 4");
  return ProductMarker{n / 2, n - n / 2, true};
}

std::filesystem::path resolve_data_path(const std::string& path) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (fs::exists(p) || p.is_absolute()) return p;
  std::vector<fs::path> roots;
  if (const char* env = std::getenv("SINECONE_DATA_DIR")) roots.emplace_back(env);
  roots.emplace_back(SINECONE_DEFAULT_DATA_DIR);
  for (const auto& root : roots) {
    for (const fs::path& candidate : {root / p, root / "spheres" / p, root / "user" / p}) {
      if (fs::exists(candidate)) return candidate;
    }
  }
  return p;
}

LoadResult load_geometric_spectrum(const std::string& path) {
  auto resolved = resolve_data_path(path);
  std::ifstream in(resolved);
  if (!in) fail(ErrorKind::MissingData, "cannot open spectrum file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
  LoadResult r;
  r.spectrum = geometric_from_json(j);
  r.warnings = validate(r.spectrum);
  return r;
}

void save_geometric_spectrum(const GeometricSpectrum& gs, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << geometric_to_json(gs).dump(2) << "\n";
}

std::vector<SymmetricSpaceStub> symmetric_space_stubs() {
  return {
      {"F4", 52},
      {"E6", 78},
      {"E7", 133},
      {"E8", 248},
      {"SO(8)/SO(5)xSO(3)", 15},
      {"E6/[Sp(4)/{+-I}]", 42},
      {"E6/SU(2).SU(6)", 40},
      {"E7/[SU(8)/{+-I}]", 70},
      {"E7/SO(12).SU(2)", 64},
      {"E8/SO(16)", 128},
      {"E8/E7.SU(2)", 112},
      {"F4/Sp(3).SU(2)", 28},
  };
}

}  // namespace sinecone
