#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pn/error.hpp"

namespace pn {

class FieldCtx;
using CtxPtr = std::shared_ptr<const FieldCtx>;

/// Element of F_{p^s}: a canonical residue vector of length s, entries in
/// [0, p), low degree first. Elements keep a shared handle to their context;
/// mixing contexts in arithmetic throws MixedContext.
class FieldElement {
 public:
  FieldElement(CtxPtr ctx, std::vector<long long> coeffs);

  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<long long>& coeffs() const { return c_; }
  bool is_zero() const;
  /// Encode as sum c_i * p^i; the canonical scan/sort order everywhere.
  std::uint64_t index() const;
  std::string str() const;

  FieldElement operator-() const;
  FieldElement inv() const;               // DivisionByZero on 0
  FieldElement pow(unsigned long long e) const;
  FieldElement frobenius() const;         // a^p

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  friend bool operator<(const FieldElement& a, const FieldElement& b);  // by index

 private:
  CtxPtr ctx_;
  std::vector<long long> c_;
};

/// Immutable description of F_{p^s}. The modulus is the deterministic
/// irreducible of degree s: candidates x^s + c_{s-1}x^{s-1} + ... + c_0 are
/// scanned in increasing order of the encode sum c_i * p^i and the first
/// irreducible wins (irreducibility by trial division over all lower-degree
/// monics). s = 1 uses the degree-1 monic x, i.e. the prime field.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
  struct Private {};

 public:
  static constexpr int kDegreeCap = 12;

  FieldCtx(Private, long long p, int s, std::vector<long long> modulus);
  static CtxPtr create(long long p, int s);

  long long p() const { return p_; }
  int s() const { return s_; }
  const std::vector<long long>& modulus() const { return mod_; }  // size s+1, monic
  std::uint64_t order() const { return q_; }                      // p^s

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;  // constant (prime-subfield) element
  FieldElement from_coeffs(std::vector<long long> c) const;
  FieldElement element(std::uint64_t index) const;  // inverse of FieldElement::index()

  bool same(const FieldCtx& other) const;

 private:
  long long p_;
  int s_;
  std::vector<long long> mod_;
  std::uint64_t q_;
  friend class FieldElement;
};

/// All a with a^K = 1, ascending by index; |result| = gcd(K, p^s - 1).
std::vector<FieldElement> nth_roots_of_unity(const CtxPtr& ctx, unsigned long long K);

/// Smallest t >= 1 with a^t = 1; ZeroElement on 0.
unsigned long long mult_order(const FieldElement& a);

/// a in F_{p^l} (viewed inside its context, which must satisfy l | s).
bool in_subfield(const FieldElement& a, int l);
/// a in F_{p^l}^*, tested as a != 0 and a^(p^l - 1) = 1.
bool in_subfield_star(const FieldElement& a, int l);

/// Embedding F_{p^l} -> F_{p^s} for l | s, by mapping the small generator to
/// the smallest (index order) root of the small modulus in the big field.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(CtxPtr small, CtxPtr big);
  FieldElement operator()(const FieldElement& a) const;
  const CtxPtr& small() const { return small_; }
  const CtxPtr& big() const { return big_; }

 private:
  CtxPtr small_, big_;
  std::vector<FieldElement> rho_pow_;  // rho^0 .. rho^(small.s - 1)
};

bool is_prime(long long n);
/// binom(n, k) mod p via Lucas.
long long binom_mod_p(long long n, long long k, long long p);

}  // namespace pn
