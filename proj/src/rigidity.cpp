#include "sinecone/rigidity.hpp"

#include "sinecone/catalog.hpp"
#include "sinecone/conemaps.hpp"
#include "sinecone/errors.hpp"

namespace sinecone {

namespace {

std::optional<int> zero_by_xi(int n, const QuadReal& kappa) {
  QuadReal m = xi(n, kappa);
  if (!m.is_integer()) return std::nullopt;
  if (m > QuadReal(0) || m < QuadReal(ratio(-(n - 1), 2))) return std::nullopt;
  return static_cast<int>(Rational(-m.a()).get_num().get_si());
}

}  // namespace

std::optional<int> solve_zero_equation(int n, const QuadReal& kappa) {
  if (kappa < QuadReal(hardy_bound(n))) {
    fail(ErrorKind::UnboundedBelow, "kappa " + kappa.str() + " below -(n-1)^2/4");
  }
  QuadReal mq = xi(n, kappa);
  // irrational left side against a rational right side
  if (!mq.is_rational()) return std::nullopt;
  const Rational m = mq.a();
  const Rational k = kappa.a();
  // j^2 + (n + 2m) j + (m + kappa) = 0
  const Rational b = Rational(n) + 2 * m;
  const Rational c = m + k;
  const Rational disc = b * b - 4 * c;
  if (disc < 0) return std::nullopt;
  auto root = QuadReal(disc).sqrt();
  if (!root || !root->is_rational()) return std::nullopt;
  std::optional<int> best;
  for (int sgn : {1, -1}) {
    Rational j = (-b + sgn * root->a()) / 2;
    if (j.get_den() != 1 || j < 0) continue;
    // confirm against the equation as written
    if ((2 * j + 1) * m != -k - j * (j + n)) continue;
    int jj = static_cast<int>(j.get_num().get_si());
    if (!best || jj < *best) best = jj;
  }
  return best;
}

std::vector<IEDCertificate> find_ieds(const GeometricSpectrum& gs) {
  if (!gs.specE_TT) fail(ErrorKind::MissingData, "IED search needs the TT spectrum");
  const Spectrum& tt = *gs.specE_TT;
  const int n = gs.n;
  const QuadReal hardy(hardy_bound(n));
  for (const auto& line : tt.lines) {
    if (line.value < hardy) {
      fail(ErrorKind::UnboundedBelow, "TT eigenvalue " + line.value.str() +
                                          " below -(n-1)^2/4: the cone Einstein operator is unbounded below");
    }
  }
  if (tt.cutoff < QuadReal(0)) {
    fail(ErrorKind::InsufficientCutoff, "TT spectrum must be complete up to 0 to search for zeros");
  }
  std::vector<IEDCertificate> out;
  for (std::size_t k = 0; k < tt.lines.size(); ++k) {
    const auto& line = tt.lines[k];
    if (line.value.sign() > 0) break;
    auto a = zero_by_xi(n, line.value);
    auto b = solve_zero_equation(n, line.value);
    if (a != b) {
      fail(ErrorKind::SolverDisagreement, "zero detection disagrees for n=" + std::to_string(n) +
                                              ", kappa=" + line.value.str());
    }
    if (!a) continue;
    QuadReal check = eta(n + 1, xi(n, line.value) + QuadReal(*a));
    if (check.sign() != 0) fail(ErrorKind::SolverDisagreement, "certificate does not vanish");
    out.push_back({line.value, *a, line.value.sign() == 0, line.multiplicity, static_cast<int>(k) + 1});
  }
  return out;
}

std::vector<ScanRow> product_rigidity_scan(int n_min, int n_max) {
  if (n_min < 4 || n_max < n_min) fail(ErrorKind::InvariantViolation, "scan range must satisfy 4 <= from <= to");
  std::vector<ScanRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    ScanRow row;
    row.n = n;
    ProductMarker pm = product_of_dimension(n);
    row.kappa = product_tt_marker(pm).first;
    row.ell_squared = Integer(n - 9) * (n - 1);
    row.ell_integral = row.ell_squared >= 0 && mpz_perfect_square_p(row.ell_squared.get_mpz_t());
    if (row.kappa < QuadReal(hardy_bound(n))) {
      row.status = ScanStatus::UnboundedBelow;
      rows.push_back(row);
      continue;
    }
    row.m1 = xi(n, row.kappa);
    auto certs = find_ieds(product_geometric(pm));
    auto j = solve_zero_equation(n, row.kappa);
    if (certs.empty() != !j.has_value() || (j && certs.front().j != *j)) {
      fail(ErrorKind::SolverDisagreement, "scan paths disagree at n=" + std::to_string(n));
    }
    if (!certs.empty()) {
      row.status = ScanStatus::IED;
      row.certificate = certs.front();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sinecone
