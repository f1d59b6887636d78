#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pn/gf.hpp"

namespace pn {

/// Sparse bivariate polynomial over a field context. Zero coefficients are
/// never stored; the zero polynomial is the empty term map. Values are
/// immutable: every operation returns a new polynomial.
class BiPoly {
 public:
  static constexpr int kDegreeCap = 2000;

  using TermMap = std::map<std::pair<int, int>, FieldElement>;

  explicit BiPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}
  static BiPoly constant(const FieldElement& c);
  static BiPoly monomial(const FieldElement& c, int i, int j);
  static BiPoly var_x(const CtxPtr& ctx);
  static BiPoly var_y(const CtxPtr& ctx);

  const CtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // ZeroPolynomial on 0
  int degree_x() const;
  int degree_y() const;
  FieldElement coeff(int i, int j) const;

  BiPoly operator-() const;
  BiPoly scale(const FieldElement& c) const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Terms sorted by (total degree, i) ascending, "c*x^i*y^j" joined by " + ".
  std::string str(const char* vx = "x", const char* vy = "y") const;

  void add_term(int i, int j, const FieldElement& c);  // accumulate, canonical

 private:
  CtxPtr ctx_;
  TermMap terms_;
};

/// Exact quotient A / D; throws NotDivisible when the division does not come
/// out even. Computed as univariate division in x over F_q[y].
BiPoly exact_div(const BiPoly& a, const BiPoly& d);

/// A(x + x0, y + y0) by Horner-style synthetic shifts, x first then y.
BiPoly taylor_shift(const BiPoly& a, const FieldElement& x0, const FieldElement& y0);

/// Sum of terms of total degree exactly d (possibly zero).
BiPoly homogeneous_component(const BiPoly& a, int d);

/// Lowest total degree with a nonzero homogeneous component (the multiplicity
/// of the origin when a vanishes there).
int lowest_degree(const BiPoly& a);  // ZeroPolynomial on 0

/// Homogeneous trivariate form: the (i, j) term carries the coefficient of
/// x^i y^j z^(deg - i - j).
struct HomForm {
  BiPoly xy;
  int deg;
  std::string str() const;
};

HomForm homogenize(const BiPoly& a);                 // ZeroPolynomial on 0
BiPoly dehomogenize_at_y(const HomForm& f);          // y = 1, result in (x, z)
BiPoly set_z_one(const HomForm& f);                  // recovers the original

bool is_homogeneous(const BiPoly& a);  // true for 0

/// gcd of two homogeneous binary forms, normalized monic in x (monic in y if
/// x-free). gcd(A, 0) = normalized A.
BiPoly hom_gcd(const BiPoly& a, const BiPoly& b);

/// True iff the form has no repeated factor over the algebraic closure,
/// tested via gcds with both partials.
bool squarefree_form(const BiPoly& a);

/// True iff the nonzero form is c * L^deg for a single linear form L over the
/// algebraic closure.
bool single_root_form(const BiPoly& a);

std::pair<BiPoly, BiPoly> partials(const BiPoly& a);

/// Coefficient-wise p-th power; a ring homomorphism fixing exactly the
/// polynomials with prime-subfield coefficients.
BiPoly sigma_map(const BiPoly& a);

FieldElement eval(const BiPoly& a, const FieldElement& x0, const FieldElement& y0);

/// Map the coefficients through a subfield embedding.
BiPoly lift(const BiPoly& a, const SubfieldEmbedding& emb);

}  // namespace pn
