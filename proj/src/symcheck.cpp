#include "sinecone/symcheck.hpp"

#include <functional>
#include <sstream>

#include "sinecone/errors.hpp"

namespace sinecone {

LaurentPoly2 LaurentPoly2::monomial(int p, int q, const Rational& c) {
  LaurentPoly2 f;
  f.add_term(p, q, c);
  return f;
}

Rational LaurentPoly2::coeff(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly2::add_term(int p, int q, const Rational& c) {
  if (c == 0) return;
  if (q < 0) throw std::invalid_argument("negative z exponent");
  auto [it, inserted] = terms_.try_emplace({p, q}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string LaurentPoly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Rational m = abs(c);
    std::string body;
    auto factor = [&body](const char* v, int e) {
      if (e == 0) return;
      if (!body.empty()) body += "*";
      body += v;
      if (e != 1) body += "^" + std::to_string(e);
    };
    factor("r", k.first);
    factor("z", k.second);
    if (body.empty()) out << rational_string(m);
    else if (m == 1) out << body;
    else out << rational_string(m) << "*" << body;
  }
  return out.str();
}

LaurentPoly2 operator+(const LaurentPoly2& x, const LaurentPoly2& y) {
  LaurentPoly2 out = x;
  for (const auto& [k, c] : y.terms_) out.add_term(k.first, k.second, c);
  return out;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

LaurentPoly2 operator-(const LaurentPoly2& x, const LaurentPoly2& y) { return x + (-y); }

LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
  LaurentPoly2 out;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  }
  return out;
}

LaurentPoly2 operator*(const Rational& c, const LaurentPoly2& x) {
  LaurentPoly2 out;
  if (c == 0) return out;
  for (const auto& [k, v] : x.terms_) out.terms_.emplace(k, c * v);
  return out;
}

LaurentPoly2 d_r(const LaurentPoly2& f) {
  LaurentPoly2 out;
  for (const auto& [k, c] : f.terms()) out.add_term(k.first - 1, k.second, c * k.first);
  return out;
}

LaurentPoly2 d_z(const LaurentPoly2& f) {
  LaurentPoly2 out;
  for (const auto& [k, c] : f.terms()) {
    if (k.second > 0) out.add_term(k.first, k.second - 1, c * k.second);
  }
  return out;
}

LaurentPoly2 mul_monomial(int p, int q, const LaurentPoly2& f) { return LaurentPoly2::monomial(p, q) * f; }

LaurentPoly2 hat_laplacian(const Rational& n, const LaurentPoly2& f) {
  LaurentPoly2 fr = d_r(f);
  return -(d_z(d_z(f)) + d_r(fr) + n * mul_monomial(-1, 0, fr));
}

LaurentPoly2 v_field(const LaurentPoly2& f) { return mul_monomial(1, 0, d_z(f)) - mul_monomial(0, 1, d_r(f)); }

namespace {

LaurentPoly2 rm2(const LaurentPoly2& f) { return mul_monomial(-2, 0, f); }
// -(z/r) f
LaurentPoly2 minus_z_over_r(const LaurentPoly2& f) { return -mul_monomial(-1, 1, f); }

void check_zero(IdentityResult& res, const LaurentPoly2& residual, const std::string& input) {
  ++res.checked;
  if (res.pass && !residual.is_zero()) {
    res.pass = false;
    res.witness = "input " + input + ", residual " + residual.str();
  }
}

using Matrix = std::vector<std::vector<Rational>>;

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// basis monomials of P_{k,j}: r^{k+2l} z^{j-2l}
std::vector<LaurentPoly2::Key> family_basis(int k, int j) {
  std::vector<LaurentPoly2::Key> out;
  for (int l = 0; 2 * l <= j; ++l) out.push_back({k + 2 * l, j - 2 * l});
  return out;
}

std::vector<Rational> coordinates(const LaurentPoly2& f, const std::vector<LaurentPoly2::Key>& basis,
                                  const char* what) {
  std::vector<Rational> v;
  std::size_t found = 0;
  for (const auto& key : basis) {
    Rational c = f.coeff(key.first, key.second);
    if (c != 0) ++found;
    v.push_back(c);
  }
  if (found != f.terms().size()) fail(ErrorKind::DimensionMismatch, std::string(what) + " leaves the family span");
  return v;
}

Rational lambda_of(int n, int k) { return Rational(k * (k + n - 1)); }

}  // namespace

SymReport check_commutators(int n, const CommutatorOptions& opt) {
  const Rational nn(n);
  const Rational nt = nn + opt.tamper;
  IdentityResult c1;
  c1.name = "[dV, hatLaplacian] = n r^-2 dV";
  IdentityResult c2;
  c2.name = "[dV, r^-2] = 2 z r^-3";
  IdentityResult c3;
  c3.name = "[dV, z r^-1] = 1 + z^2 r^-2";
  IdentityResult c4;
  c4.name = "hatLaplacian(g) = -z r^-1 hatLaplacian(f) + (n-2) r^-2 g + 2 r^-2 dV f";
  IdentityResult c5;
  c5.name = "r f_z + r g_r = dV f - g";
  for (int p = opt.p_min; p <= opt.p_max; ++p) {
    for (int q = opt.q_min; q <= opt.q_max; ++q) {
      const LaurentPoly2 f = LaurentPoly2::monomial(p, q);
      const std::string in = "r^" + std::to_string(p) + " z^" + std::to_string(q);
      const LaurentPoly2 vf = v_field(f);
      check_zero(c1, v_field(hat_laplacian(nn, f)) - hat_laplacian(nn, vf) - nt * rm2(vf), in);
      check_zero(c2, v_field(rm2(f)) - rm2(vf) - 2 * (1 + opt.tamper) * mul_monomial(-3, 1, f), in);
      const LaurentPoly2 zr = mul_monomial(-1, 1, f);
      check_zero(c3, v_field(zr) - mul_monomial(-1, 1, vf) - (f + (1 + opt.tamper) * mul_monomial(-2, 2, f)), in);
      const LaurentPoly2 g = minus_z_over_r(f);
      check_zero(c4,
                 hat_laplacian(nn, g) -
                     (-mul_monomial(-1, 1, hat_laplacian(nn, f)) + (nt - 2) * rm2(g) + 2 * rm2(vf)),
                 in);
      check_zero(c5, mul_monomial(1, 0, d_z(f)) + mul_monomial(1, 0, d_r(g)) - (vf - (1 + opt.tamper) * g), in);
    }
  }
  SymReport r;
  for (auto* c : {&c1, &c2, &c3, &c4, &c5}) r.add(*c);
  require_pass(r, "commutators n=" + std::to_string(n));
  return r;
}

LaurentPoly2 build_harmonic_family(int n, int k, int j) {
  if (k < 0 || j < 0) fail(ErrorKind::DimensionMismatch, "k and j must be nonnegative");
  const Rational lam = lambda_of(n, k);
  const auto dom = family_basis(k, j);
  const auto cod = j >= 2 ? family_basis(k, j - 2) : std::vector<LaurentPoly2::Key>{};
  // columns: domain monomials; rows: codomain coordinates
  Matrix m(cod.size(), std::vector<Rational>(dom.size(), 0));
  for (std::size_t c = 0; c < dom.size(); ++c) {
    LaurentPoly2 mono = LaurentPoly2::monomial(dom[c].first, dom[c].second);
    LaurentPoly2 img = hat_laplacian(Rational(n), mono) + lam * rm2(mono);
    auto coords = coordinates(img, cod, "reduced operator image");
    for (std::size_t r = 0; r < cod.size(); ++r) m[r][c] = coords[r];
  }
  auto ker = nullspace(m, dom.size());
  if (ker.size() != 1) {
    fail(ErrorKind::DimensionMismatch, "kernel of dimension " + std::to_string(ker.size()) + " for n=" +
                                           std::to_string(n) + ", k=" + std::to_string(k) + ", j=" + std::to_string(j));
  }
  // scale to coprime integers with positive leading coefficient
  std::vector<Rational>& v = ker.front();
  Integer l = 1, g = 0;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : v) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(1, g);
  if (v.front() < 0) scale = -scale;
  LaurentPoly2 h;
  for (std::size_t c = 0; c < dom.size(); ++c) h.add_term(dom[c].first, dom[c].second, v[c] * scale);
  return h;
}

SymReport verify_decomposition(int n, int k, int j) {
  SymReport r;
  IdentityResult res;
  res.name = "P_{k,j} = H_{k,j} + (r^2+z^2) P_{k,j-2}";
  res.checked = 1;
  if (j >= 2) {
    const auto dom = family_basis(k, j);
    const auto lower = family_basis(k, j - 2);
    if (dom.size() != lower.size() + 1) {
      fail(ErrorKind::DecompositionFailed, "dim P_{k,j} != dim P_{k,j-2} + 1");
    }
    Matrix m;
    m.push_back(coordinates(build_harmonic_family(n, k, j), dom, "harmonic member"));
    const LaurentPoly2 s2 = LaurentPoly2::monomial(2, 0) + LaurentPoly2::monomial(0, 2);
    for (const auto& key : lower) {
      m.push_back(coordinates(s2 * LaurentPoly2::monomial(key.first, key.second), dom, "s^2 P_{k,j-2}"));
    }
    auto pivots = rref(m, dom.size());
    if (pivots.size() != dom.size()) {
      res.pass = false;
      res.witness = "rank " + std::to_string(pivots.size()) + " < " + std::to_string(dom.size());
    }
  }
  r.add(res);
  if (!r.pass) {
    fail(ErrorKind::DecompositionFailed, "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                             ", j=" + std::to_string(j) + ": " + res.witness);
  }
  return r;
}

namespace {

void residual(SymReport& r, const std::string& name, const LaurentPoly2& value, const std::string& input) {
  IdentityResult res;
  res.name = name;
  check_zero(res, value, input);
  r.add(res);
}

std::string triple(const char* kname, int n, int k, int j) {
  return "n=" + std::to_string(n) + ", " + kname + "=" + std::to_string(k) + ", j=" + std::to_string(j);
}

}  // namespace

SymReport verify_formulas1(int n, int k, int j, const FormulaOptions& opt) {
  if (k < 1) fail(ErrorKind::IdentityFailed, "formulas1 needs k >= 1");
  const Rational N(n);
  const Rational lam = lambda_of(n, k);
  const std::string in = triple("k", n, k, j);
  const LaurentPoly2 P = build_harmonic_family(n, k, j);
  const LaurentPoly2 Q = minus_z_over_r(P);
  const LaurentPoly2 R =
      (1 / lam) * (mul_monomial(1, 0, d_z(P)) + mul_monomial(1, 0, d_r(Q)) + N * Q) + opt.perturb_r;
  SymReport r;
  residual(r, "eqP", hat_laplacian(N, P) + lam * rm2(P), in);
  residual(r, "eqQ", hat_laplacian(N, Q) + (lam + N) * rm2(Q) - 2 * lam * rm2(R), in);
  residual(r, "eq3R", hat_laplacian(N, R) + (lam + 2 - N) * rm2(R) - 2 * rm2(Q), in);
  require_pass(r, "formulas1 " + in);
  return r;
}

SymReport verify_formulas2(int n, int l, int j, const FormulaOptions& opt) {
  if (l < 2) fail(ErrorKind::IdentityFailed, "formulas2 needs l >= 2");
  const Rational N(n);
  const Rational mu = lambda_of(n, l) - 1;
  const std::string in = triple("l", n, l, j);
  const LaurentPoly2 P = build_harmonic_family(n, l, j);
  const LaurentPoly2 Q = minus_z_over_r(P);
  const Rational scale = (mu - (N - 1)) / 2;
  const LaurentPoly2 R =
      (1 / scale) * (mul_monomial(1, 0, d_z(P)) + mul_monomial(1, 0, d_r(Q)) + (N + 1) * Q) + opt.perturb_r;
  SymReport r;
  residual(r, "eqP", hat_laplacian(N, P) + (mu + 1) * rm2(P), in);
  residual(r, "eq2Q", hat_laplacian(N, Q) + (mu + N + 3) * rm2(Q) - (mu + 1 - N) * rm2(R), in);
  residual(r, "eq2R", hat_laplacian(N, R) + (mu + 1 - N) * rm2(R) - 4 * rm2(Q), in);
  require_pass(r, "formulas2 " + in);
  return r;
}

SymReport verify_formulas3(int n, int k, int j, const FormulaOptions& opt) {
  if (k < 2) fail(ErrorKind::IdentityFailed, "formulas3 needs k >= 2");
  const Rational N(n);
  const Rational lam = lambda_of(n, k);
  const std::string in = triple("k", n, k, j);
  auto rdz = [](const LaurentPoly2& f) { return mul_monomial(1, 0, d_z(f)); };
  auto rdr = [](const LaurentPoly2& f) { return mul_monomial(1, 0, d_r(f)); };
  auto L = [&](const LaurentPoly2& f) { return hat_laplacian(N, f); };

  const LaurentPoly2 P1 = build_harmonic_family(n, k, j);
  const LaurentPoly2 P2 = minus_z_over_r(P1);
  const LaurentPoly2 P3 = mul_monomial(-2, 2, P1);
  const LaurentPoly2 S = (-1 / N) * (P1 + P3);
  const LaurentPoly2 Q1 = (1 / lam) * (rdz(P1) + rdr(P2) + N * P2);
  const LaurentPoly2 Q2 = minus_z_over_r(Q1);
  const LaurentPoly2 R =
      (1 / ((N - 1) * (lam - N))) * (rdz(Q1) + rdr(Q2) + (N + 1) * Q2 + S) + opt.perturb_r;

  SymReport r;
  residual(r, "P3 = -(z/r) P2", P3 - minus_z_over_r(P2), in);
  residual(r, "lambda Q2 = r dz P2 + r dr P3 + n P3 - n S", lam * Q2 - (rdz(P2) + rdr(P3) + N * P3 - N * S), in);
  residual(r, "eqP1", L(P1) + lam * rm2(P1), in);
  residual(r, "eqP2", L(P2) + (lam + N) * rm2(P2) - 2 * lam * rm2(Q1), in);
  residual(r, "eqQ1", L(Q1) + (lam - N + 2) * rm2(Q1) - 2 * rm2(P2), in);
  residual(r, "eqP3", L(P3) + (lam + 2 * N) * rm2(P3) - 2 * N * rm2(S) - 4 * lam * rm2(Q2), in);
  residual(r, "eq2S", L(S) + (lam + 2) * rm2(S) - 2 * rm2(P3) + (4 / N) * lam * rm2(Q2), in);
  residual(r, "eqQ2",
           L(Q2) + (lam + 4) * rm2(Q2) - 2 * rm2(P3) + 2 * rm2(S) + 2 * (N - 1) * (N - lam) * rm2(R), in);
  residual(r, "eq4R", L(R) + (lam - 2 * N + 2) * rm2(R) - (4 / N) * rm2(Q2), in);
  require_pass(r, "formulas3 " + in);
  return r;
}

void require_pass(const SymReport& r, const std::string& context) {
  if (r.pass) return;
  for (const auto& id : r.identities) {
    if (!id.pass) fail(ErrorKind::IdentityFailed, context + ": " + id.name + " fails, " + id.witness);
  }
}

}  // namespace sinecone
