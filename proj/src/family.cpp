#include "padictheta/family.hpp"

#include <algorithm>
#include <set>

#include "padictheta/pullback.hpp"

namespace padictheta {

namespace {

bool squarefree(unsigned long d) {
  for (unsigned long q = 2; q * q <= d; ++q) {
    if (d % (q * q) == 0) return false;
  }
  return true;
}

std::optional<unsigned long> sqrt_mod_p(long a, unsigned long p) {
  const long r = ((a % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
  for (unsigned long x = 1; x < p; ++x) {
    if ((x * x) % p == static_cast<unsigned long>(r)) return x;
  }
  return std::nullopt;
}

}  // namespace

ToyCMContext ToyCMContext::make(RingCtxPtr ctx, std::optional<unsigned long> d) {
  const unsigned long p = ctx->p();
  auto admissible = [&](unsigned long c) { return squarefree(c) && c % p != 0 && sqrt_mod_p(-static_cast<long>(c), p); };
  unsigned long chosen = 0;
  if (d) {
    if (*d == 0 || !admissible(*d)) throw Error("p must split in Q(sqrt(-" + std::to_string(*d) + "))");
    chosen = *d;
  } else {
    for (chosen = 1; !admissible(chosen); ++chosen) {
    }
  }
  PAdicInt r(ctx, Integer(*sqrt_mod_p(-static_cast<long>(chosen), p)));
  const PAdicInt dd(ctx, Integer(chosen));
  for (unsigned it = 0; it <= ctx->M(); ++it) {
    r = r - (r * r + dd) * (r + r).inverse();
  }
  if (!(r * r + dd).is_zero()) throw InternalError("Hensel lift failed");
  return ToyCMContext(std::move(ctx), chosen, r);
}

LocalK ToyCMContext::embed(const KElement& b) const {
  const PAdicInt x(ctx_, b.x), y(ctx_, b.y);
  return {x + y * r_, x - y * r_};
}

std::vector<KElement> ToyCMContext::global_units() const {
  std::vector<KElement> units{{1, 0}, {-1, 0}};
  if (d_ == 1) {
    units.push_back({0, 1});
    units.push_back({0, -1});
  }
  return units;
}

PAdicInt norm_knu(const LocalK& b, long k, long nu) {
  if ((nu != 0 || k < 0) && !b.is_unit()) throw Error("non-unit");
  PAdicInt value = b.s.pow(Integer(k));
  if (nu != 0) value *= (b.s * b.sbar.inverse()).pow(Integer(nu));
  return value;
}

PAdicInt UnitCharacter::operator()(const LocalK& x) const {
  PAdicInt value(x.s.ctx(), 1);
  if (j_sigma) value *= teichmuller(x.s).pow(Integer(j_sigma));
  if (j_sigmabar) value *= teichmuller(x.sbar).pow(Integer(j_sigmabar));
  return value;
}

void validate_fdata(const FData& data, const ToyCMContext& toy) {
  data.zeta.validate();
  const Signature& sig = data.zeta.sig;
  if (sig.num_places() != 1 || sig.place(0).plus != sig.place(0).minus) {
    throw Error("zeta must live on a signature (n, n) with one place");
  }
  for (const auto& e : toy.global_units()) {
    const LocalK u = toy.embed(e);
    if (!(data.chi_u(u) == norm_knu(u, data.k, data.nu))) {
      throw Error("chi_u disagrees with N_{k,nu} on the global unit " + e.x.get_str() + "+" + e.y.get_str() + "*sqrt(-d)");
    }
  }
}

FFunction::FFunction(FData data, ToyCMContext toy) : data_(std::move(data)), toy_(std::move(toy)) {
  validate_fdata(data_, toy_);
}

FFunction build_F(const FData& data, const ToyCMContext& toy) { return FFunction(data, toy); }

std::vector<Integer> exponent_vector(const PMatrix& y) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out.push_back(y[j][i].residue());
  }
  return out;
}

namespace {

PAdicInt matrix_det(const PMatrix& y, const RingCtxPtr& ctx) {
  std::vector<std::vector<Integer>> m;
  for (const auto& row : y) {
    std::vector<Integer> r;
    for (const auto& v : row) r.push_back(v.residue());
    m.push_back(std::move(r));
  }
  return PAdicInt(ctx, determinant(std::move(m)));
}

}  // namespace

PAdicInt FFunction::operator()(const LocalK& x, const PMatrix& y) const {
  const RingCtxPtr& ctx = toy_.ctx();
  if (y.size() != data_.n()) throw Error("matrix size differs from n");
  if (!x.is_unit() || !matrix_det(y, ctx).is_unit()) return PAdicInt(ctx, 0);
  const PAdicInt nx = x.norm();
  PMatrix arg(y.size(), std::vector<PAdicInt>(y.size(), PAdicInt(ctx, 0)));
  for (std::size_t a = 0; a < y.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) arg[a][b] = nx * y[b][a];
  }
  return data_.chi_u(x) * phi_zeta(data_.zeta, exponent_vector(arg), ctx);
}

Integer HermitianExponent::det(const ToyCMContext& toy) const {
  if (n() == 1) return entries[0][0].x;
  if (n() == 2) return entries[0][0].x * entries[1][1].x - toy.norm(entries[0][1]);
  throw Error("Hermitian exponents are supported for n <= 2");
}

bool HermitianExponent::is_positive(const ToyCMContext& toy) const {
  return entries[0][0].x > 0 && det(toy) > 0;
}

PMatrix HermitianExponent::sigma(const ToyCMContext& toy) const {
  PMatrix out;
  for (const auto& row : entries) {
    std::vector<PAdicInt> r;
    for (const auto& e : row) r.push_back(toy.embed(e).s);
    out.push_back(std::move(r));
  }
  return out;
}

PMatrix HermitianExponent::exponent_matrix(const ToyCMContext& toy) const {
  PMatrix s = sigma(toy);
  PMatrix out = s;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) out[a][b] = s[b][a];
  }
  return out;
}

std::vector<Integer> HermitianExponent::key() const {
  std::vector<Integer> k;
  for (const auto& row : entries) {
    for (const auto& e : row) {
      k.push_back(e.x);
      k.push_back(e.y);
    }
  }
  return k;
}

std::vector<HermitianExponent> enumerate_hermitian(std::size_t n, unsigned bound, const ToyCMContext& toy) {
  std::vector<HermitianExponent> out;
  const long b = bound;
  if (n == 1) {
    for (long a = 1; a <= b; ++a) out.push_back({{{KElement{a, 0}}}});
  } else if (n == 2) {
    for (long a = 1; a <= b; ++a) {
      for (long c = 1; c <= b; ++c) {
        for (long x = -b; x <= b; ++x) {
          for (long y = -b; y <= b; ++y) {
            const KElement off{x, y};
            HermitianExponent h{{{KElement{a, 0}, off}, {off.conj(), KElement{c, 0}}}};
            if (h.is_positive(toy)) out.push_back(std::move(h));
          }
        }
      }
    }
  } else {
    throw Error("Hermitian exponents are supported for n <= 2");
  }
  std::sort(out.begin(), out.end());
  return out;
}

PAdicInt coefficient(const HermitianExponent& alpha, const std::vector<KElement>& a_set, const FFunction& F,
                     const ToyCMContext& toy) {
  const RingCtxPtr& ctx = toy.ctx();
  const long n = static_cast<long>(alpha.n());
  PAdicInt total(ctx, 0);
  const PAdicInt det(ctx, alpha.det(toy));
  if (!det.is_unit()) return total;
  for (const auto& a : a_set) {
    const LocalK A = toy.embed(a);
    if (!A.is_unit()) continue;
    const PAdicInt inv_norm = A.norm().inverse();
    PMatrix y = alpha.sigma(toy);
    for (auto& row : y) {
      for (auto& v : row) v = v * inv_norm;
    }
    total += F(A, y) * norm_knu(A.inverse() * toy.embed(det.residue()), F.data().k, F.data().nu) * det.pow(Integer(-n));
  }
  return total;
}

QExpansion apply_theta_q(const QExpansion& q, const Weight& kappa, const ToyCMContext& toy) {
  if (!is_symmetric(kappa)) throw Error("theta on q-expansions needs a symmetric weight");
  const ThetaKappa theta(kappa);
  QExpansion out{{}, q.label};
  for (const auto& [alpha, c] : q.coeffs) {
    if (kappa.sig().num_places() != 1 || kappa.sig().place(0).plus != alpha.n() || kappa.sig().place(0).minus != alpha.n()) {
      throw Error("weight signature must be (n, n) with n the size of the exponents");
    }
    out.coeffs.emplace(alpha, c * theta.eigenvalue_mod(exponent_vector(alpha.exponent_matrix(toy)), toy.ctx()));
  }
  return out;
}

QExpansion restrict_q(const QExpansion& q, const PartitionedSignature& part) {
  const Signature& amb = part.ambient();
  if (amb.num_places() != 1 || amb.place(0).plus != amb.place(0).minus) {
    throw Error("q-expansion restriction needs an ambient signature (n, n)");
  }
  for (const auto& s : part.parts()) {
    if (s.place(0).plus != s.place(0).minus) throw Error("q-expansion restriction needs parts of signature (m, m)");
  }
  const unsigned n = amb.place(0).plus;
  const RestrictionMap r = build_restriction(part);
  QExpansion out{{}, q.label};
  for (const auto& [alpha, c] : q.coeffs) {
    if (alpha.n() != n) throw Error("exponent size differs from the partition's n");
    HermitianExponent image = alpha;
    for (const auto& l : r.dropped) {
      // alpha(l_{i, n+j}) is the (i, j) entry of sigma(alpha).
      image.entries[l.i - 1][l.j - n - 1] = KElement{};
      image.entries[l.j - n - 1][l.i - 1] = KElement{};
    }
    auto it = out.coeffs.find(image);
    if (it == out.coeffs.end()) {
      out.coeffs.emplace(image, c);
    } else {
      it->second += c;
    }
  }
  return out;
}

QExpansion measure_moment(const MomentCharacter& chr, const Weight& kappa, unsigned bound, const ToyCMContext& toy,
                          const std::optional<PartitionedSignature>& part) {
  const Signature& sig = kappa.sig();
  if (sig.num_places() != 1 || sig.place(0).plus != sig.place(0).minus) {
    throw Error("moment weights live on a signature (n, n) with one place");
  }
  const unsigned n = sig.place(0).plus;
  if (chr.k < static_cast<long>(n)) throw Error("below Eisenstein range");
  if (!is_symmetric(kappa)) throw Error("moment weights must be symmetric");
  if (chr.psi.size() != n) throw Error("psi needs one Teichmueller power per torus coordinate");

  FData data{chr.k, chr.nu, chr.chi_u, CharacterZeta::from_weight(Weight::zero(sig)), 1};
  data.zeta.twist.assign(1, std::vector<unsigned>(2 * n, 0));
  std::copy(chr.psi.begin(), chr.psi.end(), data.zeta.twist[0].begin());
  const FFunction F(data, toy);

  QExpansion q{{}, "k=" + std::to_string(chr.k) + ";nu=" + std::to_string(chr.nu)};
  const std::vector<KElement> a_set{KElement{1, 0}};
  for (const auto& alpha : enumerate_hermitian(n, bound, toy)) q.coeffs.emplace(alpha, coefficient(alpha, a_set, F, toy));
  QExpansion out = apply_theta_q(q, kappa, toy);
  if (part) out = restrict_q(out, *part);
  return out;
}

PAdicInt character_value(const MomentCharacter& chr, const Weight& kappa, const SamplePoint& pt) {
  PAdicInt value = chr.chi_u(pt.x) * norm_knu(pt.x, chr.k, chr.nu);
  if (pt.t.size() != chr.psi.size()) throw Error("sample point has wrong torus dimension");
  for (std::size_t i = 0; i < pt.t.size(); ++i) {
    if (!pt.t[i].is_unit()) throw Error("non-unit");
    value *= pt.t[i].pow(Integer(kappa.at(0, i)));
    if (chr.psi[i]) value *= teichmuller(pt.t[i]).pow(Integer(chr.psi[i]));
  }
  return value;
}

std::vector<SamplePoint> random_sample(const ToyCMContext& toy, std::size_t n, std::size_t count, std::uint64_t seed) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(static_cast<unsigned long>(seed));
  const RingCtxPtr& ctx = toy.ctx();
  auto unit = [&] {
    while (true) {
      PAdicInt v(ctx, rng.get_z_range(ctx->modulus()));
      if (v.is_unit()) return v;
    }
  };
  std::vector<SamplePoint> out;
  for (std::size_t c = 0; c < count; ++c) {
    SamplePoint pt{{unit(), unit()}, {}};
    for (std::size_t i = 0; i < n; ++i) pt.t.push_back(unit());
    out.push_back(std::move(pt));
  }
  return out;
}

KummerReport kummer_certify(const std::vector<KummerTerm>& tests, unsigned m, const std::vector<SamplePoint>& sample,
                            const ToyCMContext& toy, unsigned bound, const std::optional<PartitionedSignature>& part) {
  const RingCtxPtr& ctx = toy.ctx();
  if (m > ctx->M()) throw Error("insufficient precision");
  KummerReport rep;
  rep.m = m;
  rep.samples = sample.size();
  const PAdicInt zero(ctx, 0);
  for (std::size_t s = 0; s < sample.size(); ++s) {
    PAdicInt sum = zero;
    for (const auto& t : tests) sum += PAdicInt(ctx, t.b) * character_value(t.chr, t.kappa, sample[s]);
    if (!congruent(sum, zero, m)) {
      rep.status = "premise_not_satisfied";
      rep.premise_witness = s;
      rep.combination = sum.residue();
      return rep;
    }
  }
  std::vector<QExpansion> tables;
  std::set<HermitianExponent> keys;
  for (const auto& t : tests) {
    tables.push_back(measure_moment(t.chr, t.kappa, bound, toy, part));
    for (const auto& [alpha, c] : tables.back().coeffs) keys.insert(alpha);
  }
  rep.coefficients = keys.size();
  for (const auto& alpha : keys) {
    PAdicInt sum = zero;
    for (std::size_t i = 0; i < tests.size(); ++i) {
      auto it = tables[i].coeffs.find(alpha);
      if (it != tables[i].coeffs.end()) sum += PAdicInt(ctx, tests[i].b) * it->second;
    }
    if (!congruent(sum, zero, m)) {
      rep.status = "counterexample";
      rep.witness = alpha;
      rep.combination = sum.residue();
      return rep;
    }
  }
  rep.status = "ok";
  return rep;
}

}  // namespace padictheta
