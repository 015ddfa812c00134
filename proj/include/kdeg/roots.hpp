#pragma once

#include <optional>

#include "kdeg/upoly.hpp"
#include "kdeg/zpoly.hpp"

namespace kdeg {

// Closed rational interval [lo, hi] certified to contain exactly the root
// it was produced for (by Sturm count or an exact hit).
struct RealInterval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) * Rat(Int(1), Int(2)); }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  double to_double() const { return mid().to_double(); }
};

// Sign of p at the rational point x, evaluated without leaving Z.
int sign_at(const UPoly<Int>& p, const Rat& x);

// Sturm chain of a squarefree primitive integer polynomial.  Elements are
// normalized by positive scalars only, so sign sequences are preserved.
std::vector<UPoly<Int>> sturm_chain(const UPoly<Int>& squarefree);

// Number of distinct real roots in (a, b], by Sturm variation counts.
int sturm_count(const std::vector<UPoly<Int>>& chain, const Rat& a, const Rat& b);

// Interval of width <= precision around the largest real root; nullopt if
// there is no real root.  Throws degenerate_input on the zero polynomial.
std::optional<RealInterval> isolate_max_real_root(const UPoly<Int>& p, const Rat& precision);
std::optional<RealInterval> isolate_max_real_root(const UPoly<Rat>& p, const Rat& precision);

// Polynomial whose roots are the pairwise products z_i * z_j of the roots
// of s (s squarefree with s(0) != 0), via a Sylvester resultant computed
// fraction-free over Z[u].
UPoly<Int> root_product_poly(const UPoly<Int>& s);

// Interval of width <= precision around max |z| over all complex roots z.
// The largest real root of the root-product polynomial is |z_max|^2, so the
// certification reduces to real isolation plus directed rational square
// roots.  nullopt when p has no roots at all (nonzero constant).
std::optional<RealInterval> max_root_modulus(const UPoly<Int>& p, const Rat& precision);
std::optional<RealInterval> max_root_modulus(const UPoly<Rat>& p, const Rat& precision);

// Directed rational square-root bounds: lo <= sqrt(x) <= hi, hi - lo <= eps.
RealInterval rational_sqrt(const Rat& x, const Rat& eps);

}  // namespace kdeg
