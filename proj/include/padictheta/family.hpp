#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padictheta/padic.hpp"
#include "padictheta/theta.hpp"
#include "padictheta/weight.hpp"

namespace padictheta {

// x + y sqrt(-d) in the order Z[sqrt(-d)].
struct KElement {
  Integer x = 0;
  Integer y = 0;

  KElement conj() const { return {x, -y}; }
  bool operator==(const KElement&) const = default;
};

// An element of O_K (x) Z_p = Z/p^M x Z/p^M through the two embeddings.
struct LocalK {
  PAdicInt s;
  PAdicInt sbar;

  LocalK conj() const { return {sbar, s}; }
  PAdicInt norm() const { return s * sbar; }
  bool is_unit() const { return s.is_unit() && sbar.is_unit(); }
  LocalK operator*(const LocalK& o) const { return {s * o.s, sbar * o.sbar}; }
  LocalK inverse() const { return {s.inverse(), sbar.inverse()}; }
  bool operator==(const LocalK& o) const { return s == o.s && sbar == o.sbar; }
};

// K = Q(sqrt(-d)) with p split, sigma(sqrt(-d)) = r and sigma-bar(sqrt(-d)) = -r
// where r is the Hensel lift of a square root of -d.
class ToyCMContext {
 public:
  // Without d, the smallest squarefree d >= 1 with -d a nonzero square mod p.
  static ToyCMContext make(RingCtxPtr ctx, std::optional<unsigned long> d = std::nullopt);

  const RingCtxPtr& ctx() const { return ctx_; }
  unsigned long d() const { return d_; }
  const PAdicInt& sqrt_minus_d() const { return r_; }

  LocalK embed(const KElement& b) const;
  LocalK embed(const Integer& rational) const { return embed(KElement{rational, 0}); }
  Integer norm(const KElement& b) const { return b.x * b.x + Integer(d_) * b.y * b.y; }
  std::vector<KElement> global_units() const;

 private:
  ToyCMContext(RingCtxPtr ctx, unsigned long d, PAdicInt r) : ctx_(std::move(ctx)), d_(d), r_(std::move(r)) {}

  RingCtxPtr ctx_;
  unsigned long d_;
  PAdicInt r_;
};

// sigma(b)^k (sigma(b) / sigma-bar(b))^nu.
PAdicInt norm_knu(const LocalK& b, long k, long nu);

using PMatrix = std::vector<std::vector<PAdicInt>>;

// A finite-order character of (O_K (x) Z_p)^x: omega(s)^j_sigma omega(sbar)^j_sigmabar.
struct UnitCharacter {
  unsigned j_sigma = 0;
  unsigned j_sigmabar = 0;

  PAdicInt operator()(const LocalK& x) const;
};

struct FData {
  long k = 0;
  long nu = 0;
  UnitCharacter chi_u;
  CharacterZeta zeta;  // over the signature (n, n)
  unsigned level = 1;

  unsigned n() const { return zeta.sig.place(0).plus; }
};

// Checks the shape of zeta and that chi_u agrees with N_{k,nu} on the global
// units, which the transformation law requires.
void validate_fdata(const FData& data, const ToyCMContext& toy);

// F(x, y) = chi_u(x) phi_zeta(N(x) ty), and 0 off units x invertible y.
class FFunction {
 public:
  FFunction(FData data, ToyCMContext toy);

  PAdicInt operator()(const LocalK& x, const PMatrix& y) const;
  const FData& data() const { return data_; }

 private:
  FData data_;
  ToyCMContext toy_;
};

FFunction build_F(const FData& data, const ToyCMContext& toy);

// Entries of the Serre-Tate exponent block of signature (n, n) read off an n x n
// matrix: alpha(l_{i, n+j}) = y[j][i].
std::vector<Integer> exponent_vector(const PMatrix& y);

// A Hermitian matrix over Z[sqrt(-d)], n <= 2.
struct HermitianExponent {
  std::vector<std::vector<KElement>> entries;

  std::size_t n() const { return entries.size(); }
  Integer det(const ToyCMContext& toy) const;
  bool is_positive(const ToyCMContext& toy) const;
  // sigma applied entrywise.
  PMatrix sigma(const ToyCMContext& toy) const;
  // The transpose of sigma(alpha), the block fed to the theta operators.
  PMatrix exponent_matrix(const ToyCMContext& toy) const;
  std::vector<Integer> key() const;

  bool operator<(const HermitianExponent& o) const { return key() < o.key(); }
  bool operator==(const HermitianExponent& o) const { return key() == o.key(); }
};

// Positive Hermitian matrices with every coordinate of height at most bound,
// in increasing key order.
std::vector<HermitianExponent> enumerate_hermitian(std::size_t n, unsigned bound, const ToyCMContext& toy);

// sum_{a} F(a, N(a)^{-1} sigma(alpha)) N_{k,nu}(a^{-1} det alpha) det(alpha)^{-n}.
PAdicInt coefficient(const HermitianExponent& alpha, const std::vector<KElement>& a_set, const FFunction& F,
                     const ToyCMContext& toy);

struct QExpansion {
  std::map<HermitianExponent, PAdicInt> coeffs;
  std::string label;
};

// c(alpha) -> phi_kappa(exponent matrix of alpha) c(alpha) for a symmetric kappa on (n, n).
QExpansion apply_theta_q(const QExpansion& q, const Weight& kappa, const ToyCMContext& toy);

// t_l := 0 for the variables the partition drops: off-block entries of alpha are
// set to zero and coefficients with equal images are added.
QExpansion restrict_q(const QExpansion& q, const PartitionedSignature& part);

struct MomentCharacter {
  long k = 0;
  long nu = 0;
  std::vector<unsigned> psi;  // Teichmueller powers on the n torus coordinates
  UnitCharacter chi_u;
};

// res Theta^kappa of the family with F = F_{chi_u, psi}, over positive alpha of height <= bound.
QExpansion measure_moment(const MomentCharacter& chr, const Weight& kappa, unsigned bound, const ToyCMContext& toy,
                          const std::optional<PartitionedSignature>& part = std::nullopt);

struct SamplePoint {
  LocalK x;
  std::vector<PAdicInt> t;
};

// chi_u(x) N_{k,nu}(x) prod_i omega(t_i)^{psi_i} t_i^{kappa_i}.
PAdicInt character_value(const MomentCharacter& chr, const Weight& kappa, const SamplePoint& pt);

std::vector<SamplePoint> random_sample(const ToyCMContext& toy, std::size_t n, std::size_t count, std::uint64_t seed);

struct KummerTerm {
  MomentCharacter chr;
  Weight kappa;
  Integer b;
};

struct KummerReport {
  std::string status;  // "ok", "premise_not_satisfied" or "counterexample"
  unsigned m = 0;
  std::size_t samples = 0;
  std::size_t coefficients = 0;
  std::optional<std::size_t> premise_witness;  // index into the sample
  std::optional<HermitianExponent> witness;
  Integer combination;  // sum b_i c_i(witness) mod p^M
};

KummerReport kummer_certify(const std::vector<KummerTerm>& tests, unsigned m, const std::vector<SamplePoint>& sample,
                            const ToyCMContext& toy, unsigned bound,
                            const std::optional<PartitionedSignature>& part = std::nullopt);

}  // namespace padictheta
