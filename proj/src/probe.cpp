#include "kdeg/probe.hpp"

#include <algorithm>

#include "kdeg/cache.hpp"

namespace kdeg {

namespace {

ProjPoint<Fp> to_fp_point(const ProjPoint<Rat>& p, std::uint64_t prime) {
  ProjPoint<Fp> out;
  out.q = p.q;
  out.x.resize(p.x.size());
  for (Eigen::Index k = 0; k < p.x.size(); ++k) {
    Fp num = Fp::from_int(p.x(k).num(), prime);
    Fp den = Fp::from_int(p.x(k).den(), prime);
    if (den.is_zero()) throw degenerate_input("line point denominator vanishes mod p");
    out.x(k) = num / den;
  }
  return out;
}

std::vector<Int> run_probe_fp(int q, int n_max, std::uint64_t run_seed, std::uint64_t prime,
                              int max_resamples,
                              const std::optional<std::pair<ProjPoint<Rat>, ProjPoint<Rat>>>& line) {
  for (int attempt = 0; attempt <= max_resamples; ++attempt) {
    SplitMix64 g(derive_seed(run_seed, 40 + static_cast<std::uint64_t>(attempt)));
    ProjPoint<Fp> a, b;
    if (line && attempt == 0) {
      a = to_fp_point(line->first, prime);
      b = to_fp_point(line->second, prime);
    } else {
      a = random_fp_point(q, prime, g);
      b = random_fp_point(q, prime, g);
    }
    if (proj_equal(a, b)) continue;
    PolyTuple<Fp> tuple = line_tuple(a, b);
    std::vector<Int> degrees{Int(1)};
    bool ok = true;
    for (int n = 1; n <= n_max; ++n) {
      PolyTuple<Fp> next;
      try {
        next = kstep_interp(q, tuple, prime);
      } catch (const degenerate_input&) {
        ok = false;  // line fell into a coordinate hyperplane or the map's
        break;       // indeterminacy locus; resample
      } catch (const probe_failure&) {
        ok = false;  // sampling starved on a highly special line; resample
        break;
      }
      if (tuple_all_zero(next)) { ok = false; break; }
      tuple_content_reduce(next);
      degrees.push_back(Int(static_cast<long>(max_tuple_degree(next))));
      tuple = std::move(next);
    }
    if (ok) return degrees;
  }
  throw probe_failure("probe: persistent degeneracy after resampling, q=" + std::to_string(q));
}

std::vector<Int> run_probe_rational(int q, int n_max, std::uint64_t run_seed, int max_resamples,
                                    const std::optional<std::pair<ProjPoint<Rat>, ProjPoint<Rat>>>& line) {
  if (q > 4 || n_max > 3)
    throw scope_error("rational probe is the slow certification path: q <= 4, n <= 3");
  for (int attempt = 0; attempt <= max_resamples; ++attempt) {
    SplitMix64 g(derive_seed(run_seed, 60 + static_cast<std::uint64_t>(attempt)));
    PolyTuple<Int> tuple(static_cast<std::size_t>(q) * q);
    if (line && attempt == 0) {
      for (Eigen::Index k = 0; k < line->first.x.size(); ++k) {
        Rat a = line->first.x(k), b = line->second.x(k);
        if (!a.is_integer() || !b.is_integer())
          throw degenerate_input("rational probe lines take integer coordinates");
        tuple[static_cast<std::size_t>(k)] = UPoly<Int>(std::vector<Int>{a.num(), b.num()});
      }
    } else {
      for (auto& c : tuple)
        c = UPoly<Int>(std::vector<Int>{Int(static_cast<long>(g.uniform(1, 1000000))),
                                        Int(static_cast<long>(g.uniform(1, 1000000)))});
    }
    std::vector<Int> degrees{Int(1)};
    bool ok = true;
    for (int n = 1; n <= n_max; ++n) {
      PolyTuple<Int> next;
      try {
        next = kstep_symbolic<Int>(q, tuple);
      } catch (const degenerate_input&) {
        ok = false;
        break;
      }
      if (tuple_all_zero(next)) { ok = false; break; }
      tuple_content_reduce(next);
      degrees.push_back(Int(static_cast<long>(max_tuple_degree(next))));
      tuple = std::move(next);
    }
    if (ok) return degrees;
  }
  throw probe_failure("rational probe: persistent degeneracy after resampling");
}

}  // namespace

std::vector<DegreeRecord> probe_degrees(int q, int n_max, std::uint64_t seed,
                                        const ProbeOptions& opt) {
  if (q < 2) throw degenerate_input("probe needs q >= 2");
  if (n_max < 0) throw degenerate_input("probe needs n_max >= 0");
  const bool modular = opt.field.modular;

  std::vector<std::uint64_t> run_seeds;
  std::vector<std::uint64_t> run_primes;
  auto add_run_config = [&](std::size_t i) {
    run_seeds.push_back(derive_seed(seed, 1 + i));
    if (!modular) {
      run_primes.push_back(0);
      return;
    }
    std::uint64_t p;
    std::uint64_t stream = 101 + i;
    do {
      p = random_prime(opt.field.prime_bits, derive_seed(seed, stream));
      stream += 100;
    } while (std::find(run_primes.begin(), run_primes.end(), p) != run_primes.end());
    run_primes.push_back(p);
  };

  auto run_one = [&](std::size_t i) -> std::vector<Int> {
    // consult the cache first; explicit lines are not part of the cache
    // key, so those runs bypass it
    if (opt.cache && !opt.line) {
      std::vector<Int> cached;
      bool complete = true;
      for (int n = 0; n <= n_max && complete; ++n) {
        auto hit = opt.cache->lookup(q, n, "probe", run_seeds[i], run_primes[i]);
        if (hit)
          cached.push_back(*hit);
        else
          complete = false;
      }
      if (complete) return cached;
    }
    std::vector<Int> degs =
        modular ? run_probe_fp(q, n_max, run_seeds[i], run_primes[i], opt.max_resamples, opt.line)
                : run_probe_rational(q, n_max, run_seeds[i], opt.max_resamples, opt.line);
    if (opt.cache && !opt.line)
      for (int n = 0; n <= n_max; ++n)
        opt.cache->append(q, n, "probe", run_seeds[i], run_primes[i], degs[static_cast<std::size_t>(n)]);
    return degs;
  };

  add_run_config(0);
  add_run_config(1);
  std::vector<std::vector<Int>> runs;
  runs.push_back(run_one(0));
  runs.push_back(run_one(1));

  bool agree = runs[0] == runs[1];
  if (!agree) {
    add_run_config(2);
    runs.push_back(run_one(2));
  }

  std::vector<DegreeRecord> out;
  for (int n = 0; n <= n_max; ++n) {
    DegreeRecord rec;
    rec.q = q;
    rec.n = n;
    rec.method = "probe";
    rec.seeds = run_seeds;
    rec.primes = run_primes;
    std::size_t idx = static_cast<std::size_t>(n);
    if (agree) {
      rec.degree = runs[0][idx];
      rec.agreement = 2;
    } else {
      // majority of three
      if (runs[0][idx] == runs[1][idx] || runs[0][idx] == runs[2][idx]) {
        rec.degree = runs[0][idx];
      } else if (runs[1][idx] == runs[2][idx]) {
        rec.degree = runs[1][idx];
      } else {
        throw probe_failure("probe runs disagree three ways at n=" + std::to_string(n));
      }
      rec.agreement = static_cast<int>(std::count_if(runs.begin(), runs.end(), [&](const auto& r) {
        return r[idx] == rec.degree;
      }));
      if (rec.agreement < 2) throw probe_failure("probe agreement below 2 at n=" + std::to_string(n));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

DeltaEstimate estimate_delta(const std::vector<DegreeRecord>& records) {
  if (records.size() < 3) throw degenerate_input("estimate_delta needs >= 3 consecutive records");
  std::vector<DegreeRecord> r = records;
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i].n != r[i - 1].n + 1) throw degenerate_input("estimate_delta needs consecutive n");
  const Rat d0(r[r.size() - 3].degree), d1(r[r.size() - 2].degree), d2(r[r.size() - 1].degree);
  if (d1.is_zero()) throw degenerate_input("estimate_delta: zero degree");
  DeltaEstimate est;
  est.last_ratio = d2 / d1;
  Rat du = d2 - d1, dw = d1 - d0;
  est.diff_ratio = dw.is_zero() ? Rat(1) : du / dw;
  return est;
}

SymbolicOracleResult symbolic_degree_oracle(int q, int n, std::uint64_t seed) {
  if (q < 2 || q > 3 || n < 0 || n > 2)
    throw scope_error("symbolic_degree_oracle covers q <= 3, n <= 2");
  SymbolicOracleResult res;
  res.record.q = q;
  res.record.n = n;
  res.record.method = "symbolic";
  res.record.seeds = {seed};
  res.record.primes = {0};
  res.record.agreement = 1;

  if (n == 0) {
    res.record.degree = Int(1);
    res.identity_ok = true;
    res.common_factor_degree = Int(0);
    return res;
  }

  res.identity_ok = khat_composition_identity(q);
  res.common_factor_degree = Int(static_cast<long>(q * q * (q - 2)));
  if (!res.identity_ok)
    throw internal_inconsistency("composition identity I o J = Pi^(q-2) K failed");

  if (n == 1) {
    res.record.degree = Int(static_cast<long>(q * q - q + 1));
    return res;
  }

  // n = 2: restrict K to a random plane, compose with K once more by
  // substituting the restricted tuple into the reduced components, then
  // read the degree off independent lines inside the plane.  A special
  // line (or a special plane) can only lower the measured degree through
  // extra content, so at both levels the value is the largest one seen,
  // accepted once two independent samples agree on it.
  const MapRep& kc = khat_cached(q);
  const int nn = q * q;
  int plane_best = -1, plane_best_count = 0;
  for (int plane = 0; plane < 4; ++plane) {
    SplitMix64 g(derive_seed(seed, 5 + static_cast<std::uint64_t>(plane)));
    std::vector<MPoly> images(static_cast<std::size_t>(nn));
    for (int k = 0; k < nn; ++k) {
      images[static_cast<std::size_t>(k)] =
          MPoly::constant(2, Int(static_cast<long>(g.uniform(1, 97)))) +
          MPoly::variable(2, 0) * MPoly::constant(2, Int(static_cast<long>(g.uniform(1, 97)))) +
          MPoly::variable(2, 1) * MPoly::constant(2, Int(static_cast<long>(g.uniform(1, 97))));
    }
    std::vector<MPoly> p1(static_cast<std::size_t>(nn));
    for (int k = 0; k < nn; ++k) p1[static_cast<std::size_t>(k)] = kc.comp[static_cast<std::size_t>(k)].substitute(images);
    std::vector<MPoly> k2(static_cast<std::size_t>(nn));
    for (int k = 0; k < nn; ++k) k2[static_cast<std::size_t>(k)] = kc.comp[static_cast<std::size_t>(k)].substitute(p1);

    int best = -1, best_count = 0, lines = 0;
    for (int sampled = 0; sampled < 12 && best_count < 2; ++sampled) {
      std::vector<Int> at{Int(static_cast<long>(g.uniform(1, 997))), Int(static_cast<long>(g.uniform(1, 997)))};
      std::vector<Int> bt{Int(static_cast<long>(g.uniform(1, 997))), Int(static_cast<long>(g.uniform(1, 997)))};
      PolyTuple<Int> restricted(static_cast<std::size_t>(nn));
      for (int k = 0; k < nn; ++k)
        restricted[static_cast<std::size_t>(k)] = k2[static_cast<std::size_t>(k)].restrict_line(at, bt);
      if (tuple_all_zero(restricted)) continue;
      tuple_content_reduce(restricted);
      int d = max_tuple_degree(restricted);
      ++lines;
      if (d > best) {
        best = d;
        best_count = 1;
      } else if (d == best) {
        ++best_count;
      }
    }
    if (best_count < 2 || lines < 2) continue;  // plane discarded
    if (best > plane_best) {
      plane_best = best;
      plane_best_count = 1;
    } else if (best == plane_best) {
      ++plane_best_count;
    }
    if (plane_best_count >= 2) {
      res.record.degree = Int(static_cast<long>(plane_best));
      return res;
    }
  }
  throw probe_failure("symbolic oracle: no two planes agreed on the restricted degree");
}

}  // namespace kdeg
