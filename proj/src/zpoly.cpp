#include "kdeg/zpoly.hpp"

namespace kdeg {

void CrtVec::absorb(const std::vector<std::uint64_t>& xs, std::uint64_t p) {
  if (xs.size() != residues_.size()) throw internal_inconsistency("CrtVec size mismatch");
  Int pz = Int::from_u64(p);
  if (modulus_.is_one()) {
    for (std::size_t i = 0; i < xs.size(); ++i) residues_[i] = Int::from_u64(xs[i]);
    modulus_ = pz;
    return;
  }
  std::uint64_t m_mod_p = mpz_fdiv_ui(modulus_.raw().get_mpz_t(), p);
  Fp m_inv = Fp(m_mod_p, p).inv();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::uint64_t r_mod_p = mpz_fdiv_ui(residues_[i].raw().get_mpz_t(), p);
    Fp delta = (Fp(xs[i], p) - Fp(r_mod_p, p)) * m_inv;
    residues_[i] += modulus_ * Int::from_u64(delta.value());
  }
  modulus_ *= pz;
}

Int CrtVec::symmetric(std::size_t i) const {
  Int r = residues_[i];
  Int half = Int(mpz_class(modulus_.raw() / 2));
  if (r > half) r -= modulus_;
  return r;
}

std::vector<Int> CrtVec::symmetric_all() const {
  std::vector<Int> out(residues_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = symmetric(i);
  return out;
}

std::optional<UPoly<Int>> try_exact_div(const UPoly<Int>& a, const UPoly<Int>& d) {
  if (d.is_zero()) return std::nullopt;
  if (a.is_zero()) return UPoly<Int>();
  if (a.degree() < d.degree()) return std::nullopt;
  UPoly<Int> r = a;
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - d.degree()) + 1, Int(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    if (!divides(d.lead(), r.lead())) return std::nullopt;
    int k = r.degree() - d.degree();
    Int c = divexact(r.lead(), d.lead());
    q[static_cast<std::size_t>(k)] = c;
    r = r - (d * c).shifted(k);
  }
  if (!r.is_zero()) return std::nullopt;
  return UPoly<Int>(std::move(q));
}

namespace {

std::vector<std::uint64_t> fp_coeff_values(const UPoly<Fp>& p, std::size_t n) {
  std::vector<std::uint64_t> out(n, 0);
  for (int k = 0; k <= p.degree(); ++k) {
    Fp c = p.coeff(k);
    out[static_cast<std::size_t>(k)] = c.is_zero() ? 0 : c.value();
  }
  return out;
}

}  // namespace

UPoly<Int> zpoly_gcd(const UPoly<Int>& a_in, const UPoly<Int>& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) return UPoly<Int>();
  if (a_in.is_zero()) return primitive_part(b_in) * kdeg::abs(content(b_in));
  if (b_in.is_zero()) return primitive_part(a_in) * kdeg::abs(content(a_in));

  Int cg = gcd(content(a_in), content(b_in));
  UPoly<Int> a = primitive_part(a_in);
  UPoly<Int> b = primitive_part(b_in);
  if (a.degree() == 0 || b.degree() == 0) return UPoly<Int>(cg);

  Int gamma = gcd(a.lead(), b.lead());
  int best_deg = INT32_MAX;
  std::optional<CrtVec> acc;
  std::vector<Int> prev;
  bool have_prev = false;

  for (std::size_t pi = 0;; ++pi) {
    if (pi > 512) throw internal_inconsistency("zpoly_gcd: CRT did not stabilize");
    std::uint64_t p = crt_prime(pi);
    if (mpz_fdiv_ui(gamma.raw().get_mpz_t(), p) == 0) continue;
    UPoly<Fp> gp = gcd(reduce_mod(a, p), reduce_mod(b, p));
    if (gp.degree() == 0) return UPoly<Int>(cg);  // coprime
    if (gp.degree() > best_deg) continue;         // unlucky prime
    if (gp.degree() < best_deg) {
      best_deg = gp.degree();
      acc.reset();
      have_prev = false;
    }
    gp = gp * Fp::from_int(gamma, p);  // impose leading coefficient gamma
    if (!acc) acc.emplace(static_cast<std::size_t>(best_deg) + 1);
    acc->absorb(fp_coeff_values(gp, static_cast<std::size_t>(best_deg) + 1), p);
    std::vector<Int> cur = acc->symmetric_all();
    if (have_prev && cur == prev) {
      UPoly<Int> cand = primitive_part(UPoly<Int>(cur));
      if (try_exact_div(a, cand) && try_exact_div(b, cand)) return cand * cg;
    }
    prev = std::move(cur);
    have_prev = true;
  }
}

UPoly<Int> squarefree_part(const UPoly<Int>& p) {
  if (p.is_zero()) throw degenerate_input("squarefree part of zero polynomial");
  UPoly<Int> pp = primitive_part(p);
  if (pp.degree() == 0) return UPoly<Int>(Int(1));
  UPoly<Int> g = zpoly_gcd(pp, pp.derivative());
  if (g.degree() == 0) return pp;
  Int scale = pow(g.lead(), static_cast<unsigned long>(pp.degree() - g.degree()) + 1);
  auto s = try_exact_div(pp * scale, g);  // scaled so the quotient stays in Z[x]
  if (!s) throw internal_inconsistency("squarefree_part: gcd does not divide");
  return primitive_part(*s);
}

UPoly<Rat> upoly_gcd(const UPoly<Rat>& a, const UPoly<Rat>& b) {
  if (a.is_zero() && b.is_zero()) return UPoly<Rat>();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  UPoly<Int> g = zpoly_gcd(to_int_poly(a), to_int_poly(b));
  return to_rat_poly(g).monic();
}

}  // namespace kdeg
