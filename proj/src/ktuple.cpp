#include "kdeg/ktuple.hpp"

namespace kdeg {

int tuple_content_reduce(PolyTuple<Int>& t) {
  if (tuple_all_zero(t)) throw degenerate_input("content of an all-zero tuple");
  UPoly<Int> g;
  for (const auto& p : t) {
    g = zpoly_gcd(g, p);
    if (g.degree() == 0 && g.lead().is_one()) break;
  }
  if (g.is_zero()) throw internal_inconsistency("zero gcd of a nonzero tuple");
  for (auto& p : t) {
    if (p.is_zero()) continue;
    auto d = try_exact_div(p, g);
    if (!d) throw internal_inconsistency("tuple content does not divide a component");
    p = *d;
  }
  return g.degree();
}

namespace {

// Newton interpolation for several value-vectors over the same sample
// points; divided-difference denominators are inverted in batch per level.
std::vector<UPoly<Fp>> newton_interpolate_multi(const std::vector<Fp>& ts,
                                                std::vector<std::vector<Fp>> vals) {
  const std::size_t n = ts.size();
  for (std::size_t level = 1; level < n; ++level) {
    std::vector<Fp> dens;
    dens.reserve(n - level);
    for (std::size_t i = level; i < n; ++i) dens.push_back(ts[i] - ts[i - level]);
    batch_inverse(dens);
    for (auto& v : vals)
      for (std::size_t i = n; i-- > level;)
        v[i] = (v[i] - v[i - 1]) * dens[i - level];
  }
  std::vector<UPoly<Fp>> out;
  out.reserve(vals.size());
  for (auto& v : vals) {
    // Horner over the Newton basis: acc = acc*(x - t_i) + c_i
    std::vector<Fp> acc;
    for (std::size_t i = n; i-- > 0;) {
      acc.push_back(Fp(0));
      for (std::size_t k = acc.size(); k-- > 1;) acc[k] = acc[k - 1] - ts[i] * acc[k];
      acc[0] = Fp(0) - ts[i] * acc[0];
      acc[0] = acc[0] + v[i];
    }
    out.emplace_back(std::move(acc));
  }
  return out;
}

}  // namespace

PolyTuple<Fp> kstep_interp(int q, const PolyTuple<Fp>& in, std::uint64_t p) {
  const int n = q * q;
  if (static_cast<int>(in.size()) != n) throw degenerate_input("kstep: tuple size mismatch");
  for (const auto& c : in)
    if (c.is_zero()) throw degenerate_input("kstep_interp: zero coordinate on the curve");
  const int din = max_tuple_degree(in);
  const std::size_t need = static_cast<std::size_t>((q * q - q + 1) * din) + 1;

  std::vector<Fp> ts;
  std::vector<std::vector<Fp>> vals(static_cast<std::size_t>(n));
  for (auto& v : vals) v.reserve(need);
  ts.reserve(need);

  std::uint64_t t_raw = 0;
  std::uint64_t attempts = 0;
  MatX<Fp> recip(q, q);
  while (ts.size() < need) {
    ++t_raw;
    if (++attempts > 8 * need + 4096)
      throw probe_failure("kstep_interp: could not collect enough good sample points");
    Fp t(t_raw, p);
    // evaluate coordinates; a zero entry disqualifies the sample
    std::vector<Fp> entry(static_cast<std::size_t>(n));
    bool good = true;
    for (int k = 0; k < n && good; ++k) {
      entry[static_cast<std::size_t>(k)] = in[static_cast<std::size_t>(k)].eval(t);
      if (entry[static_cast<std::size_t>(k)].is_zero()) good = false;
    }
    if (!good) continue;
    Fp pi_val(1, p);
    for (const Fp& e : entry) pi_val = pi_val * e;
    std::vector<Fp> inv_entry = entry;
    batch_inverse(inv_entry);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) recip(i, j) = inv_entry[static_cast<std::size_t>(i) * q + j];
    MatX<Fp> adj = adjugate<Fp>(recip);
    ts.push_back(t);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        vals[static_cast<std::size_t>(i) * q + j].push_back(adj(i, j) * pi_val);
  }

  std::vector<UPoly<Fp>> out = newton_interpolate_multi(ts, std::move(vals));

  // spot-check the reconstruction at one fresh point
  {
    std::uint64_t extra = t_raw;
    while (true) {
      ++extra;
      Fp t(extra, p);
      std::vector<Fp> entry(static_cast<std::size_t>(n));
      bool good = true;
      for (int k = 0; k < n && good; ++k) {
        entry[static_cast<std::size_t>(k)] = in[static_cast<std::size_t>(k)].eval(t);
        if (entry[static_cast<std::size_t>(k)].is_zero()) good = false;
      }
      if (!good) continue;
      Fp pi_val(1, p);
      for (const Fp& e : entry) pi_val = pi_val * e;
      std::vector<Fp> inv_entry = entry;
      batch_inverse(inv_entry);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) recip(i, j) = inv_entry[static_cast<std::size_t>(i) * q + j];
      MatX<Fp> adj = adjugate<Fp>(recip);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
          if (!(out[static_cast<std::size_t>(i) * q + j].eval(t) == adj(i, j) * pi_val))
            throw internal_inconsistency("kstep_interp: reconstruction check failed");
      break;
    }
  }
  return out;
}

}  // namespace kdeg
