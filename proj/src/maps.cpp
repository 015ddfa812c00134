#include "kdeg/maps.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace kdeg {

namespace {

// Symbolic determinant by first-row expansion; fine for the sizes here
// ((q-1) x (q-1) with q <= 6).
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  int nvars = m[0][0].nvars();
  MPoly acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    MPoly term = m[0][j] * mpoly_det(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

std::vector<std::vector<MPoly>> variable_minor(int q, int del_row, int del_col) {
  const int n = q * q;
  std::vector<std::vector<MPoly>> m;
  m.reserve(static_cast<std::size_t>(q) - 1);
  for (int i = 0; i < q; ++i) {
    if (i == del_row) continue;
    std::vector<MPoly> row;
    row.reserve(static_cast<std::size_t>(q) - 1);
    for (int j = 0; j < q; ++j) {
      if (j == del_col) continue;
      row.push_back(MPoly::variable(n, i * q + j));
    }
    m.push_back(std::move(row));
  }
  return m;
}

void check_q(int q, int max_q, const char* who) {
  if (q < 2) throw degenerate_input(std::string(who) + ": q must be >= 2");
  if (q > max_q)
    throw scope_error(std::string(who) + ": symbolic construction capped at q <= " + std::to_string(max_q));
}

}  // namespace

MPoly pi_monomial(int q) {
  const int n = q * q;
  MPoly::Exps e(static_cast<std::size_t>(n), 1);
  return MPoly::monomial(n, std::move(e), Int(1));
}

MapRep build_ihat(int q) {
  check_q(q, 6, "build_ihat");
  MapRep f;
  f.q = q;
  f.degree = q - 1;
  f.label = "I";
  f.comp.resize(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      MPoly d = mpoly_det(variable_minor(q, j, i));  // delete row j, column i
      f.comp[static_cast<std::size_t>(i) * q + j] = ((i + j) % 2 == 0) ? d : -d;
    }
  return f;
}

MapRep build_jhat(int q) {
  check_q(q, 8, "build_jhat");
  const int n = q * q;
  MapRep f;
  f.q = q;
  f.degree = n - 1;
  f.label = "J";
  f.comp.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    MPoly::Exps e(static_cast<std::size_t>(n), 1);
    e[static_cast<std::size_t>(k)] = 0;
    f.comp[static_cast<std::size_t>(k)] = MPoly::monomial(n, std::move(e), Int(1));
  }
  return f;
}

MapRep build_khat(int q) {
  check_q(q, 4, "build_khat");
  MapRep ih = build_ihat(q);
  MapRep jh = build_jhat(q);
  MPoly divisor = pi_monomial(q).pow(static_cast<unsigned>(q - 2));
  MapRep f;
  f.q = q;
  f.degree = q * q - q + 1;
  f.label = "K";
  f.comp.resize(ih.comp.size());
  for (std::size_t k = 0; k < ih.comp.size(); ++k) {
    MPoly composed = ih.comp[k].substitute(jh.comp);
    f.comp[k] = (q == 2) ? composed : composed.exact_div(divisor);
    if (f.comp[k].total_degree() != f.degree || !f.comp[k].is_homogeneous())
      throw internal_inconsistency("build_khat: component degree mismatch");
  }
  return f;
}

namespace {

void permutations_rec(std::vector<int>& perm, std::vector<bool>& used, int pos, int parity,
                      const std::vector<int>& cols,
                      const std::function<void(const std::vector<int>&, int)>& emit) {
  const int n = static_cast<int>(cols.size());
  if (pos == n) {
    emit(perm, parity);
    return;
  }
  for (int k = 0; k < n; ++k) {
    if (used[static_cast<std::size_t>(k)]) continue;
    // parity update: count used entries after k = inversions added
    int inv = 0;
    for (int m = k + 1; m < n; ++m)
      if (used[static_cast<std::size_t>(m)]) ++inv;
    used[static_cast<std::size_t>(k)] = true;
    perm[static_cast<std::size_t>(pos)] = cols[static_cast<std::size_t>(k)];
    permutations_rec(perm, used, pos + 1, parity ^ (inv & 1), cols, emit);
    used[static_cast<std::size_t>(k)] = false;
  }
}

}  // namespace

MapRep khat_closed_form(int q) {
  check_q(q, 4, "khat_closed_form");
  const int n = q * q;
  MapRep f;
  f.q = q;
  f.degree = n - q + 1;
  f.label = "K";
  f.comp.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      // C_(j,i)(1/x) Pi(x): one squarefree monomial per permutation of the
      // minor with row j and column i deleted.
      std::vector<int> rows, cols;
      for (int r = 0; r < q; ++r)
        if (r != j) rows.push_back(r);
      for (int c = 0; c < q; ++c)
        if (c != i) cols.push_back(c);
      MPoly acc(n);
      std::vector<int> perm(rows.size());
      std::vector<bool> used(cols.size(), false);
      permutations_rec(perm, used, 0, 0, cols, [&](const std::vector<int>& assignment, int parity) {
        MPoly::Exps e(static_cast<std::size_t>(n), 1);
        for (std::size_t r = 0; r < rows.size(); ++r)
          e[static_cast<std::size_t>(rows[r]) * q + assignment[r]] = 0;
        int sign = parity ^ (((i + j) % 2 != 0) ? 1 : 0);
        acc += MPoly::monomial(n, std::move(e), Int(sign ? -1 : 1));
      });
      f.comp[static_cast<std::size_t>(i) * q + j] = std::move(acc);
    }
  return f;
}

const MapRep& khat_cached(int q) {
  static std::map<int, MapRep> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build_khat(q)).first;
  return it->second;
}

bool khat_composition_identity(int q) {
  MapRep ih = build_ihat(q);
  MapRep jh = build_jhat(q);
  MapRep kc = khat_closed_form(q);
  MapRep kb = build_khat(q);
  MPoly factor = pi_monomial(q).pow(static_cast<unsigned>(q - 2));
  for (std::size_t k = 0; k < ih.comp.size(); ++k) {
    MPoly composed = ih.comp[k].substitute(jh.comp);
    if (composed != factor * kc.comp[k]) return false;
    if (kb.comp[k] != kc.comp[k]) return false;
  }
  return true;
}

}  // namespace kdeg
