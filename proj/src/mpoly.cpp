#include "kdeg/mpoly.hpp"

#include <numeric>

namespace kdeg {

MPoly MPoly::constant(int nvars, Int c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Exps(static_cast<std::size_t>(nvars), 0), std::move(c));
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  MPoly p(nvars);
  Exps e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.terms_.emplace(std::move(e), Int(1));
  return p;
}

MPoly MPoly::monomial(int nvars, Exps e, Int c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (t > d) d = t;
  }
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (d < 0) d = t;
    if (t != d) return false;
  }
  return true;
}

void MPoly::add_term(const Exps& e, const Int& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw degenerate_input("MPoly arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw degenerate_input("MPoly arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r += b;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r -= b;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw degenerate_input("MPoly arity mismatch");
  MPoly r(a.nvars_);
  MPoly::Exps e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        unsigned s = static_cast<unsigned>(ea[i]) + eb[i];
        if (s > UINT16_MAX) throw degenerate_input("MPoly exponent overflow");
        e[i] = static_cast<std::uint16_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly acc = constant(nvars_, Int(1));
  MPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MPoly MPoly::exact_div(const MPoly& d) const {
  if (d.is_zero()) throw degenerate_input("MPoly division by zero");
  if (nvars_ != d.nvars_) throw degenerate_input("MPoly arity mismatch");
  MPoly r = *this;
  MPoly q(nvars_);
  const Exps ed = d.terms_.rbegin()->first;
  const Int cd = d.terms_.rbegin()->second;
  Exps e(static_cast<std::size_t>(nvars_)), tmp(static_cast<std::size_t>(nvars_));
  while (!r.is_zero()) {
    const Exps er = r.terms_.rbegin()->first;
    const Int cr = r.terms_.rbegin()->second;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (er[i] < ed[i]) throw internal_inconsistency("MPoly exact_div: leading term not divisible");
      e[i] = static_cast<std::uint16_t>(er[i] - ed[i]);
    }
    Int c = divexact(cr, cd);
    q.add_term(e, c);
    Int negc = -c;
    for (const auto& [et, ct] : d.terms_) {
      for (std::size_t i = 0; i < tmp.size(); ++i)
        tmp[i] = static_cast<std::uint16_t>(e[i] + et[i]);
      r.add_term(tmp, negc * ct);
    }
  }
  return q;
}

bool MPoly::variable_divides(int i) const {
  if (is_zero()) return true;
  for (const auto& [e, c] : terms_)
    if (e[static_cast<std::size_t>(i)] == 0) return false;
  return true;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw degenerate_input("substitute arity mismatch");
  int out_vars = images.empty() ? 0 : images[0].nvars();
  std::vector<std::vector<MPoly>> pw(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    pw[i].push_back(MPoly::constant(out_vars, Int(1)));
    pw[i].push_back(images[i]);
  }
  MPoly acc(out_vars);
  for (const auto& [e, c] : terms_) {
    MPoly t = MPoly::constant(out_vars, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      unsigned ei = e[i];
      while (pw[i].size() <= ei) pw[i].push_back(pw[i].back() * pw[i][1]);
      if (ei > 0) t = t * pw[i][ei];
    }
    acc += t;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.str();
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      out += "*x" + std::to_string(i);
      if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
    }
  }
  return out;
}

}  // namespace kdeg
