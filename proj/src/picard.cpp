#include "kdeg/picard.hpp"

namespace kdeg {

std::string PicBasis::label(int index) const {
  if (index == 0) return "H";
  if (index == 1) return "R1";
  int k = index - 2;
  const char* family = "A";
  if (k >= q * q) {
    family = "B";
    k -= q * q;
  }
  return std::string(family) + "(" + std::to_string(k / q + 1) + "," + std::to_string(k % q + 1) + ")";
}

std::vector<std::pair<int, int>> t_set(int q, int i, int j) {
  if (i < 0 || j < 0 || i >= q || j >= q) throw degenerate_input("t_set index out of range");
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(2 * q - 1));
  for (int b = 0; b < q; ++b) out.emplace_back(i, b);
  for (int a = 0; a < q; ++a)
    if (a != i) out.emplace_back(a, j);
  return out;
}

VecX<Int> sigma_class(int q, int i, int j) {
  PicBasis basis(q);
  VecX<Int> v(basis.dim());
  v.setZero();
  v(basis.H()) = Int(1);
  v(basis.B(i, j)) -= Int(1);
  for (auto [a, b] : t_set(q, i, j)) {
    v(basis.A(a, b)) -= Int(1);
    v(basis.B(a, b)) -= Int(1);
  }
  return v;
}

VecX<Int> jr_class(int q) {
  PicBasis basis(q);
  VecX<Int> v(basis.dim());
  v.setZero();
  v(basis.H()) = Int(static_cast<long>(q * q - q));
  v(basis.R1()) = Int(-static_cast<long>(q - 1));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      v(basis.A(i, j)) = Int(-static_cast<long>(2 * q - 3));
      v(basis.B(i, j)) = Int(-static_cast<long>(2 * q - 2));
    }
  return v;
}

MatX<Int> pullback_matrix(int q, SignConvention conv, ARule arule) {
  PicBasis basis(q);
  const int d = basis.dim();
  MatX<Int> m(d, d);
  m.setZero();
  const long b_sign = (conv == SignConvention::AllNegative) ? -1 : +1;

  // column H
  m(basis.H(), basis.H()) = Int(static_cast<long>(q * q - q + 1));
  m(basis.R1(), basis.H()) = Int(-static_cast<long>(q - 2));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      m(basis.A(i, j), basis.H()) = Int(-static_cast<long>(2 * q - 3));
      m(basis.B(i, j), basis.H()) = Int(b_sign * static_cast<long>(2 * q - 2));
    }

  // column R1: the class of J R_(q-1), with the same inner-sign reading
  m(basis.H(), basis.R1()) = Int(static_cast<long>(q * q - q));
  m(basis.R1(), basis.R1()) = Int(-static_cast<long>(q - 1));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      m(basis.A(i, j), basis.R1()) = Int(-static_cast<long>(2 * q - 3));
      m(basis.B(i, j), basis.R1()) = Int(b_sign * static_cast<long>(2 * q - 2));
    }

  // columns A(i,j): the class of the hyperplane Sigma with transposed
  // indices (the proof's Sigma_(j,i); the display's T_(i,j) under the
  // literal rule)
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      VecX<Int> img(d);
      img.setZero();
      img(basis.H()) = Int(1);
      img(basis.B(j, i)) -= Int(1);
      auto tset = (arule == ARule::ProofTranspose) ? t_set(q, j, i) : t_set(q, i, j);
      for (auto [a, b] : tset) {
        img(basis.A(a, b)) -= Int(1);
        img(basis.B(a, b)) -= Int(1);
      }
      m.col(basis.A(i, j)) = img;
    }

  // columns B(i,j) -> A(j,i) + B(j,i)
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      m(basis.A(j, i), basis.B(i, j)) = Int(1);
      m(basis.B(j, i), basis.B(i, j)) = Int(1);
    }
  return m;
}

std::vector<DegreeRecord> predicted_degrees(int q, int n_max, SignConvention conv) {
  if (n_max < 0) throw degenerate_input("predicted_degrees needs n_max >= 0");
  PicBasis basis(q);
  MatX<Int> m = pullback_matrix(q, conv);
  VecX<Int> v(basis.dim());
  v.setZero();
  v(basis.H()) = Int(1);
  std::vector<DegreeRecord> out;
  for (int n = 0; n <= n_max; ++n) {
    DegreeRecord rec;
    rec.q = q;
    rec.n = n;
    rec.degree = v(basis.H());
    rec.method = "picard";
    rec.agreement = 1;
    out.push_back(std::move(rec));
    if (n < n_max) v = m * v;
  }
  return out;
}

UPoly<Int> p_factor(int q) {
  return UPoly<Int>(std::vector<Int>{Int(1), Int(-static_cast<long>(q * q - 4 * q + 2)), Int(1)});
}

UPoly<Int> q_factor(int q) {
  long c = 2 - static_cast<long>(q - 2) * (q - 2);
  return UPoly<Int>(std::vector<Int>{Int(1), Int(0), Int(c), Int(0), Int(1)});
}

FactorReport charpoly_factor_check(int q, SignConvention conv) {
  if (q < 3) throw scope_error("factorization check needs q >= 3");
  FactorReport rep;
  rep.q = q;
  rep.convention = conv;
  rep.charpoly = charpoly(pullback_matrix(q, conv));

  const unsigned e1 = static_cast<unsigned>(q * q - q + 2);
  const unsigned e2 = static_cast<unsigned>(q * q - 3 * q + 2);
  rep.degree_identity_ok = 2 + 4 * (q - 1) + static_cast<int>(e1) + static_cast<int>(e2) == 2 * q * q + 2;

  struct Divisor {
    std::string name;
    unsigned exponent;
    UPoly<Int> poly;
  };
  UPoly<Int> lm1(std::vector<Int>{Int(-1), Int(1)});
  UPoly<Int> lp1(std::vector<Int>{Int(1), Int(1)});
  std::vector<Divisor> divisors{
      {"P", 1, p_factor(q)},
      {"Q", static_cast<unsigned>(q - 1), q_factor(q)},
      {"lambda-1", e1, lm1},
      {"lambda+1", e2, lp1},
  };

  UPoly<Int> rem = rep.charpoly;
  bool failed = false;
  for (const auto& d : divisors) {
    FactorStage stage{d.name, d.exponent, false};
    if (!failed) {
      auto quo = try_exact_div(rem, d.poly.pow(d.exponent));
      if (quo) {
        stage.exact = true;
        rem = *quo;
      } else {
        failed = true;
        rep.failed_stage = d.name;
      }
    }
    rep.stages.push_back(std::move(stage));
  }
  rep.quotient_is_one = !failed && rem == UPoly<Int>::one();
  rep.ok = rep.degree_identity_ok && rep.quotient_is_one;
  if (!failed && !rep.quotient_is_one) rep.failed_stage = "final quotient";
  return rep;
}

namespace {

// Coordinates of the images of `span` under m in the span's own basis;
// nullopt when some image leaves the span.  Exact rational elimination.
std::optional<MatX<Rat>> restriction_matrix(const MatX<Int>& m, const std::vector<VecX<Int>>& span,
                                            std::string* offending, const PicBasis& basis) {
  const Eigen::Index dim = m.rows();
  const Eigen::Index k = static_cast<Eigen::Index>(span.size());
  MatX<Rat> sys(dim, k + k);  // [span | images]
  for (Eigen::Index c = 0; c < k; ++c) {
    VecX<Int> img = m * span[static_cast<std::size_t>(c)];
    for (Eigen::Index r = 0; r < dim; ++r) {
      sys(r, c) = Rat(span[static_cast<std::size_t>(c)](r));
      sys(r, k + c) = Rat(img(r));
    }
  }
  // eliminate on the first k columns
  Eigen::Index row = 0;
  std::vector<Eigen::Index> pivot_rows;
  for (Eigen::Index col = 0; col < k; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < dim; ++r)
      if (!sys(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) throw degenerate_input("subspace basis is linearly dependent");
    if (piv != row) sys.row(piv).swap(sys.row(row));
    Rat inv = sys(row, col).inv();
    for (Eigen::Index c = 0; c < k + k; ++c) sys(row, c) = sys(row, c) * inv;
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r == row || sys(r, col).is_zero()) continue;
      Rat f = sys(r, col);
      for (Eigen::Index c = 0; c < k + k; ++c) sys(r, c) = sys(r, c) - f * sys(row, c);
    }
    pivot_rows.push_back(row);
    ++row;
  }
  // images must have support only on pivot rows
  for (Eigen::Index c = 0; c < k; ++c)
    for (Eigen::Index r = row; r < dim; ++r)
      if (!sys(r, k + c).is_zero()) {
        if (offending) {
          *offending = "image of span vector " + std::to_string(c) + " escapes (component " +
                       basis.label(static_cast<int>(r)) + ")";
        }
        return std::nullopt;
      }
  MatX<Rat> out(k, k);
  for (Eigen::Index c = 0; c < k; ++c)
    for (Eigen::Index r = 0; r < k; ++r) out(r, c) = sys(pivot_rows[static_cast<std::size_t>(r)], k + c);
  return out;
}

UPoly<Int> charpoly_of_rational(const MatX<Rat>& m) {
  MatX<Int> mi(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer())
        throw internal_inconsistency("restriction matrix expected integral");
      mi(i, j) = m(i, j).num();
    }
  return charpoly(mi);
}

SubspaceCase run_case(const MatX<Int>& m, const PicBasis& basis, std::string name,
                      const std::vector<VecX<Int>>& span, const UPoly<Int>& expected) {
  SubspaceCase c;
  c.name = std::move(name);
  c.expected_charpoly = expected;
  std::string offending;
  auto restr = restriction_matrix(m, span, &offending, basis);
  if (!restr) {
    c.invariant = false;
    c.offending = offending;
    return c;
  }
  c.invariant = true;
  c.restricted_charpoly = charpoly_of_rational(*restr);
  c.charpoly_ok = c.restricted_charpoly == expected;
  return c;
}

}  // namespace

SubspaceReport invariant_subspace_check(int q) {
  if (q < 3) throw scope_error("invariant subspace check needs q >= 3");
  PicBasis basis(q);
  MatX<Int> m = pullback_matrix(q, SignConvention::AllNegative);
  SubspaceReport rep;
  rep.q = q;

  auto unit = [&](int idx) {
    VecX<Int> v(basis.dim());
    v.setZero();
    v(idx) = Int(1);
    return v;
  };
  VecX<Int> sumA(basis.dim()), sumB(basis.dim());
  sumA.setZero();
  sumB.setZero();
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      sumA(basis.A(i, j)) = Int(1);
      sumB(basis.B(i, j)) = Int(1);
    }

  UPoly<Int> lm1_sq = UPoly<Int>(std::vector<Int>{Int(-1), Int(1)}).pow(2);
  UPoly<Int> lp1_sq = UPoly<Int>(std::vector<Int>{Int(1), Int(1)}).pow(2);

  // (a) S1 = span{H, R1, sum A, sum B}: P(lambda)(lambda-1)^2
  rep.cases.push_back(run_case(m, basis, "S1 = <H, R1, sumA, sumB>",
                               {unit(basis.H()), unit(basis.R1()), sumA, sumB},
                               p_factor(q) * lm1_sq));

  // (b) pair spaces: (lambda-1)^2
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      VecX<Int> alpha(basis.dim()), beta(basis.dim());
      alpha.setZero();
      beta.setZero();
      alpha(basis.A(i, i)) += Int(1);
      alpha(basis.A(j, j)) += Int(1);
      alpha(basis.A(i, j)) -= Int(1);
      alpha(basis.A(j, i)) -= Int(1);
      beta(basis.B(i, i)) += Int(1);
      beta(basis.B(j, j)) += Int(1);
      beta(basis.B(i, j)) -= Int(1);
      beta(basis.B(j, i)) -= Int(1);
      rep.cases.push_back(run_case(m, basis,
                                   "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                                   {alpha, beta}, lm1_sq));
    }

  // (c) cyclic triples: the two orientations of a 3-cycle swap under K*,
  // so the (lambda+1)^2 spaces are spanned by orientation differences.
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (int k = j + 1; k < q; ++k) {
        VecX<Int> u(basis.dim()), w(basis.dim());
        u.setZero();
        w.setZero();
        // alpha_(i,j,k) - alpha_(i,k,j)
        u(basis.A(i, j)) -= Int(1);
        u(basis.A(j, k)) -= Int(1);
        u(basis.A(k, i)) -= Int(1);
        u(basis.A(i, k)) += Int(1);
        u(basis.A(k, j)) += Int(1);
        u(basis.A(j, i)) += Int(1);
        w(basis.B(i, j)) -= Int(1);
        w(basis.B(j, k)) -= Int(1);
        w(basis.B(k, i)) -= Int(1);
        w(basis.B(i, k)) += Int(1);
        w(basis.B(k, j)) += Int(1);
        w(basis.B(j, i)) += Int(1);
        rep.cases.push_back(run_case(m, basis,
                                     "triple (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                         "," + std::to_string(k + 1) + ") antisym",
                                     {u, w}, lp1_sq));
      }

  // (d) centered row/column sums: Q(lambda)
  for (int i = 0; i < q; ++i) {
    VecX<Int> ar(basis.dim()), ac(basis.dim()), br(basis.dim()), bc(basis.dim());
    ar.setZero();
    ac.setZero();
    br.setZero();
    bc.setZero();
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        ar(basis.A(a, b)) -= Int(1);
        ac(basis.A(a, b)) -= Int(1);
        br(basis.B(a, b)) -= Int(1);
        bc(basis.B(a, b)) -= Int(1);
      }
    for (int b = 0; b < q; ++b) {
      ar(basis.A(i, b)) += Int(static_cast<long>(q));
      br(basis.B(i, b)) += Int(static_cast<long>(q));
      ac(basis.A(b, i)) += Int(static_cast<long>(q));
      bc(basis.B(b, i)) += Int(static_cast<long>(q));
    }
    rep.cases.push_back(run_case(m, basis, "row/col sums i=" + std::to_string(i + 1),
                                 {ar, ac, br, bc}, q_factor(q)));
  }

  rep.ok = true;
  for (const auto& c : rep.cases)
    if (!c.invariant || !c.charpoly_ok) rep.ok = false;
  return rep;
}

DeltaReport delta(int q, const Rat& precision) {
  if (q < 3) throw scope_error("delta is certified for q >= 3 only");
  DeltaReport rep;
  rep.q = q;
  rep.p_poly = p_factor(q);
  auto from_p = max_root_modulus(rep.p_poly, precision);
  if (!from_p) throw internal_inconsistency("P(lambda) lost its roots");
  rep.from_p = *from_p;
  auto from_full = max_root_modulus(charpoly(pullback_matrix(q)), precision);
  if (!from_full) throw internal_inconsistency("pullback charpoly lost its roots");
  rep.from_full = *from_full;
  Rat lo = std::max(rep.from_p.lo, rep.from_full.lo);
  Rat hi = std::min(rep.from_p.hi, rep.from_full.hi);
  rep.overlap = lo <= hi;
  return rep;
}

}  // namespace kdeg
