#include "padicert/projaut.hpp"

#include <set>

#include "padicert/error.hpp"

namespace padicert {

namespace {

using Vec = std::vector<Rational>;
using RPoly = std::vector<Rational>;  // ascending coefficients

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

// Monic annihilator of v under the operator, from an echelonized Krylov basis.
RPoly krylov_annihilator(const LinearOperator& apply, const Vec& v) {
  struct Row {
    Vec vec;
    RPoly poly;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  Vec cur = v;
  RPoly poly{Rational(1)};
  for (;;) {
    for (const Row& b : basis) {
      if (cur[b.pivot] == 0) continue;
      const Rational factor = cur[b.pivot] / b.vec[b.pivot];
      for (std::size_t k = 0; k < cur.size(); ++k) cur[k] -= factor * b.vec[k];
      for (std::size_t k = 0; k < b.poly.size(); ++k) poly[k] -= factor * b.poly[k];
    }
    if (is_zero(cur)) return poly;
    std::size_t pivot = 0;
    while (cur[pivot] == 0) ++pivot;
    // Next Krylov vector: A applied to the reduced one keeps the polynomial monic.
    Vec next = apply(cur);
    RPoly shifted(poly.size() + 1, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) shifted[k + 1] = poly[k];
    basis.push_back({std::move(cur), std::move(poly), pivot});
    cur = std::move(next);
    poly = std::move(shifted);
  }
}

bool annihilates(const LinearOperator& apply, const IntPolynomial& p, const Vec& v) {
  Vec acc(v.size(), Rational(0));
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = apply(acc);
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c[k] * v[i];
  }
  return is_zero(acc);
}

void require_invertible(const QMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw InvalidArgument("automorphism needs a nonempty square matrix");
  if (m.determinant() == 0) throw InvalidArgument("automorphism matrix is singular");
}

LinearOperator conjugation(const QMatrix& m) {
  const QMatrix inv = m.inverse();
  const std::size_t n = m.rows();
  return [m, inv, n](const Vec& v) {
    QMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) x(i, j) = v[i * n + j];
    }
    const QMatrix y = m * x * inv;
    Vec out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = y(i, j);
    }
    return out;
  };
}

unsigned long lcm_ul(unsigned long a, unsigned long b) { return lcm(Integer(a), Integer(b)).get_ui(); }

// det of the Sylvester matrix of a and b with the given formal degrees.
Rational sylvester_resultant(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  QMatrix s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = a[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = b[n - k];
  }
  return s.determinant();
}

}  // namespace

IntPolynomial minimal_polynomial(std::size_t dim, const LinearOperator& apply) {
  if (dim == 0) throw InvalidArgument("minimal polynomial of a zero-dimensional operator");
  IntPolynomial result = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    if (result.degree() > 0 && annihilates(apply, result, e)) continue;
    result = lcm(result, IntPolynomial::from_rational(krylov_annihilator(apply, e)));
  }
  return result.primitive_part();
}

IntPolynomial minimal_polynomial(const QMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("minimal polynomial of a non-square matrix");
  return minimal_polynomial(m.rows(), [&m](const Vec& v) { return m.apply(v); });
}

bool is_semisimple(const QMatrix& m) { return is_squarefree(minimal_polynomial(m)); }

std::optional<unsigned long> linear_order(const QMatrix& m) {
  const IntPolynomial mp = minimal_polynomial(m);
  if (!is_squarefree(mp)) return std::nullopt;
  return root_of_unity_order(mp);
}

QMatrix conjugation_operator(const QMatrix& m) {
  require_invertible(m);
  return kron(m, m.inverse().transpose());
}

IntPolynomial characteristic_polynomial(const QMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + QMatrix::scalar(n, c[n - k + 1]);
    const QMatrix prod = m * mk;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return IntPolynomial::from_rational(c);
}

IntPolynomial ratio_polynomial(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.degree() < 1 || g.degree() < 1) throw InvalidArgument("ratio polynomial needs nonconstant inputs");
  if (f[0] == 0 || g[0] == 0) throw InvalidArgument("ratio polynomial needs nonzero roots");
  const std::size_t nf = static_cast<std::size_t>(f.degree()), ng = static_cast<std::size_t>(g.degree());
  const std::size_t degree = nf * ng;
  std::vector<Rational> gy(ng + 1);
  for (std::size_t k = 0; k <= ng; ++k) gy[k] = g[k];
  // Sample x = 0..degree and interpolate (Newton divided differences).
  std::vector<Rational> xs(degree + 1), ys(degree + 1);
  for (std::size_t t = 0; t <= degree; ++t) {
    xs[t] = static_cast<long>(t);
    std::vector<Rational> fy(nf + 1);
    Rational xpow = 1;
    for (std::size_t k = 0; k <= nf; ++k) {
      fy[k] = Rational(f[k]) * xpow;
      xpow *= xs[t];
    }
    ys[t] = sylvester_resultant(gy, fy);
  }
  for (std::size_t level = 1; level <= degree; ++level) {
    for (std::size_t t = degree; t >= level; --t) ys[t] = (ys[t] - ys[t - 1]) / (xs[t] - xs[t - level]);
  }
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  for (std::size_t t = degree + 1; t-- > 0;) {
    // coeffs = coeffs * (x - xs[t]) + ys[t]
    for (std::size_t k = degree; k > 0; --k) coeffs[k] = coeffs[k - 1] - xs[t] * coeffs[k];
    coeffs[0] = -xs[t] * coeffs[0] + ys[t];
  }
  std::vector<Integer> ints;
  ints.reserve(coeffs.size());
  for (const auto& q : coeffs) {
    if (q.get_den() != 1) throw Error("resultant interpolation produced a non-integer coefficient");
    ints.push_back(q.get_num());
  }
  return IntPolynomial(std::move(ints));
}

OrderVerdict projective_order(const QMatrix& m, const WitnessOptions& options) {
  require_invertible(m);
  const IntPolynomial mp = minimal_polynomial(m);
  if (!is_squarefree(mp)) return InfiniteOrder{NotSemisimple{mp}};
  const std::size_t n = m.rows();
  const IntPolynomial mr = minimal_polynomial(n * n, conjugation(m));
  const CyclotomicSplit split = split_cyclotomic(mr);
  if (split.cofactor.degree() == 0) {
    unsigned long order = 1;
    for (unsigned long d : split.indices) order = lcm_ul(order, d);
    return FiniteOrder{order, true};
  }
  // Every root of the cofactor is a ratio of eigenvalues that is not a root
  // of unity; a place where it is large proves infinite order.
  const WitnessResult w = find_witness(AlgebraicNumberSpec::make(split.cofactor), options);
  if (!std::holds_alternative<WitnessCertificate>(w)) throw Error("non-cyclotomic ratio factor reported as a root of unity");
  return InfiniteOrder{EigenvalueWitness{std::get<WitnessCertificate>(w), std::nullopt}};
}

OrderVerdict certify_diagonal(const DiagonalAutomorphism& spec, const WitnessOptions& options) {
  unsigned long order = 1;
  bool ratios_in_reach = true;
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    const IntPolynomial& f = spec.eigenvalues[i].defining_poly();
    if (f[0] == 0) throw InvalidArgument("eigenvalue " + std::to_string(i + 1) + " is zero");
    if (f.degree() > kRatioDegreeBound) ratios_in_reach = false;
    const WitnessResult w = find_witness(spec.eigenvalues[i], options);
    if (const auto* cert = std::get_if<WitnessCertificate>(&w)) return InfiniteOrder{EigenvalueWitness{*cert, i}};
    order = lcm_ul(order, std::get<RootOfUnity>(w).order);
  }
  if (!ratios_in_reach) return FiniteOrder{order, false};
  // With the normalization a_0 = 1 the order is the lcm above; the pairwise
  // ratios must then all be roots of unity of order dividing it.
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    for (std::size_t j = 0; j < spec.eigenvalues.size(); ++j) {
      if (i == j) continue;
      const IntPolynomial r = squarefree_part(
          ratio_polynomial(spec.eigenvalues[i].defining_poly(), spec.eigenvalues[j].defining_poly()));
      const auto ro = root_of_unity_order(r);
      if (!ro || order % *ro != 0) throw Error("eigenvalue ratio check disagrees with eigenvalue orders");
    }
  }
  return FiniteOrder{order, true};
}

OrderVerdict projective_order(const ProjAutSpec& spec, const WitnessOptions& options) {
  if (const auto* m = std::get_if<MatrixAutomorphism>(&spec)) return projective_order(m->entries, options);
  return certify_diagonal(std::get<DiagonalAutomorphism>(spec), options);
}

TilingLedger verify_shell_tiling(const Integer& p, long s, long range) {
  require_prime(p);
  if (s < 1) throw InvalidArgument("shell scale must be positive");
  if (range < 0) throw InvalidArgument("tiling range must be nonnegative");
  TilingLedger ledger;
  ledger.prime = p;
  ledger.scale = s;
  ledger.range = range;
  const Rational pq(p);
  auto sphere = [&](long j) -> Rational { return pow(pq, j) * (1 - 1 / pq); };
  for (long j = 0; j < s; ++j) ledger.shell_measure += sphere(j);

  std::multiset<long> hit;
  bool law = true;
  for (long n = -range; n <= range; ++n) {
    ShellTranslate t;
    t.power = n;
    t.first_sphere = n * s;
    t.last_sphere = n * s + s - 1;
    for (long j = t.first_sphere; j <= t.last_sphere; ++j) {
      t.measure += sphere(j);
      hit.insert(j);
    }
    t.predicted = pow(pq, n * s) * ledger.shell_measure;
    law = law && t.measure == t.predicted;
    ledger.total += t.measure;
    ledger.translates.push_back(std::move(t));
  }
  const long lo = -range * s, hi = (range + 1) * s - 1;
  bool exact_cover = static_cast<long>(hit.size()) == hi - lo + 1;
  for (long j = lo; j <= hi && exact_cover; ++j) exact_cover = hit.count(j) == 1;
  ledger.disjoint_union = exact_cover;
  ledger.translate_law = law;
  // The closed ball of radius p^k has measure p^k.
  ledger.annulus_measure = pow(pq, hi) - pow(pq, lo - 1);
  ledger.balanced = ledger.disjoint_union && ledger.translate_law && ledger.total == ledger.annulus_measure;
  return ledger;
}

}  // namespace padicert
