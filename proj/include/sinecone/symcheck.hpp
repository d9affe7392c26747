#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sinecone/exactreal.hpp"

namespace sinecone {

// Sparse sum of c * r^p * z^q, p any integer, q >= 0.
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(int p, int q, const Rational& c = 1);
  static LaurentPoly2 constant(const Rational& c) { return monomial(0, 0, c); }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int p, int q) const;
  void add_term(int p, int q, const Rational& c);
  std::string str() const;

  friend LaurentPoly2 operator+(const LaurentPoly2& x, const LaurentPoly2& y);
  friend LaurentPoly2 operator-(const LaurentPoly2& x, const LaurentPoly2& y);
  friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y);
  friend LaurentPoly2 operator*(const Rational& c, const LaurentPoly2& x);
  LaurentPoly2 operator-() const;
  friend bool operator==(const LaurentPoly2& x, const LaurentPoly2& y) { return x.terms_ == y.terms_; }

 private:
  std::map<Key, Rational> terms_;
};

LaurentPoly2 d_r(const LaurentPoly2& f);
LaurentPoly2 d_z(const LaurentPoly2& f);
// -f_zz - f_rr - n r^{-1} f_r
LaurentPoly2 hat_laplacian(const Rational& n, const LaurentPoly2& f);
// r f_z - z f_r
LaurentPoly2 v_field(const LaurentPoly2& f);
LaurentPoly2 mul_monomial(int p, int q, const LaurentPoly2& f);

struct IdentityResult {
  std::string name;
  long checked = 0;
  bool pass = true;
  std::string witness;  // first failing input and residual
};

struct SymReport {
  std::vector<IdentityResult> identities;
  bool pass = true;
  void add(IdentityResult r) {
    if (!r.pass) pass = false;
    identities.push_back(std::move(r));
  }
};

struct CommutatorOptions {
  int p_min = -6, p_max = 6, q_min = 0, q_max = 6;
  // add this to n on the right-hand sides (negative control)
  Rational tamper = 0;
};

// Throws IdentityFailed on the first failing monomial.
SymReport check_commutators(int n, const CommutatorOptions& opt = {});

// Kernel of the reduced operator hat_laplacian(n) + k(k+n-1) r^{-2} on span{r^{k+2l} z^{j-2l}}.
// Returned with coprime integer coefficients, positive on r^k z^j.
LaurentPoly2 build_harmonic_family(int n, int k, int j);
SymReport verify_decomposition(int n, int k, int j);

// Perturbation hook for negative controls: added to R (or to the named quantity) before the residuals.
struct FormulaOptions {
  LaurentPoly2 perturb_r;
};

SymReport verify_formulas1(int n, int k, int j, const FormulaOptions& opt = {});
SymReport verify_formulas2(int n, int l, int j, const FormulaOptions& opt = {});
SymReport verify_formulas3(int n, int k, int j, const FormulaOptions& opt = {});
// Throws IdentityFailed naming the first failing identity.
void require_pass(const SymReport& r, const std::string& context);

}  // namespace sinecone
