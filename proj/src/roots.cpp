#include "padicert/roots.hpp"

#include <algorithm>
#include <complex>
#include <numbers>

#include "padicert/error.hpp"

namespace padicert {

RationalInterval ComplexBox::modulus_squared() const {
  auto min_abs = [](const RationalInterval& i) -> Rational {
    if (i.lo <= 0 && 0 <= i.hi) return 0;
    return i.lo > 0 ? i.lo : Rational(-i.hi);
  };
  auto max_abs = [](const RationalInterval& i) -> Rational {
    const Rational a = abs(i.lo), b = abs(i.hi);
    return a > b ? a : b;
  };
  const Rational rmin = min_abs(re), imin = min_abs(im);
  const Rational rmax = max_abs(re), imax = max_abs(im);
  return {rmin * rmin + imin * imin, rmax * rmax + imax * imax};
}

RationalInterval ComplexBox::modulus(unsigned bits) const {
  const RationalInterval sq = modulus_squared();
  return {sqrt_lower(sq.lo, bits), sqrt_upper(sq.hi, bits)};
}

Rational ComplexBox::distance_squared(const ComplexRational& z) const {
  auto gap = [](const RationalInterval& i, const Rational& x) -> Rational {
    if (x < i.lo) return i.lo - x;
    if (x > i.hi) return x - i.hi;
    return 0;
  };
  const Rational dx = gap(re, z.re), dy = gap(im, z.im);
  return dx * dx + dy * dy;
}

namespace {

// Upper bound on sqrt(q) with relative error about 2^-40.
Rational sqrt_upper_rel(const Rational& q) {
  if (q == 0) return 0;
  const long num_bits = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  const long log2_sqrt = (num_bits - den_bits) / 2;
  const long bits = std::max<long>(8, 40 - log2_sqrt);
  return root_bounds(q, 2, static_cast<unsigned>(bits)).second;
}

// With c = z/d (z Gaussian integer, d a positive integer), the coefficients
// of h(u) = d^n f((z + u)/d). Then f(c + t) = sum_j h_j d^(j - n) t^j, so the
// disc tests below compare |h_j| (d r)^j and stay in integer arithmetic.
struct ScaledShift {
  std::vector<Integer> re, im;
  Integer d;
};

ScaledShift scaled_shift(const IntPolynomial& f, const ComplexRational& c) {
  ScaledShift s;
  s.d = lcm(c.re.get_den(), c.im.get_den());
  const Integer zr = c.re.get_num() * (s.d / c.re.get_den());
  const Integer zi = c.im.get_num() * (s.d / c.im.get_den());
  const std::size_t n = f.coefficients().size();
  s.re.resize(n);
  s.im.assign(n, Integer(0));
  Integer dk = 1;
  for (std::size_t i = n; i-- > 0;) {
    s.re[i] = f[i] * dk;
    dk *= s.d;
  }
  Integer tr, ti;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 2; j + 1 > i; --j) {
      tr = zr * s.re[j + 1] - zi * s.im[j + 1];
      ti = zr * s.im[j + 1] + zi * s.re[j + 1];
      s.re[j] += tr;
      s.im[j] += ti;
    }
  }
  return s;
}

Integer norm2(const ScaledShift& s, std::size_t k) { return s.re[k] * s.re[k] + s.im[k] * s.im[k]; }

Integer ceil_sqrt(const Integer& n) {
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) ++root;
  return root;
}

// Q^n * sum_{k != skip} |h_k| rho^k rounded up, with rho = P/Q.
Integer weighted_sum_upper(const ScaledShift& s, const Integer& P, const Integer& Q, std::size_t skip) {
  const std::size_t n = s.re.size() - 1;
  std::vector<Integer> qpow(n + 1);
  qpow[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) qpow[k] = qpow[k - 1] * Q;
  Integer sum = 0, pk = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k != skip && (s.re[k] != 0 || s.im[k] != 0)) sum += ceil_sqrt(norm2(s, k)) * pk * qpow[n - k];
    pk *= P;
  }
  return sum;
}

// No root in the closed disc D(c, r): |a_0| > sum_{k>=1} |a_k| r^k.
bool excludes(const IntPolynomial& f, const ComplexRational& c, const Rational& r) {
  const ScaledShift s = scaled_shift(f, c);
  const Rational rho = r * s.d;
  const Integer& P = rho.get_num();
  const Integer& Q = rho.get_den();
  const std::size_t n = s.re.size() - 1;
  const Integer sum = weighted_sum_upper(s, P, Q, 0);
  Integer q2n;
  mpz_pow_ui(q2n.get_mpz_t(), Q.get_mpz_t(), 2 * n);
  return norm2(s, 0) * q2n > sum * sum;
}

// Exactly one root in the open disc D(c, r) (Pellet): |a_1| r > sum_{k!=1} |a_k| r^k.
bool pellet_one_root(const IntPolynomial& f, const ComplexRational& c, const Rational& r) {
  if (f.degree() < 1) return false;
  const ScaledShift s = scaled_shift(f, c);
  const Rational rho = r * s.d;
  const Integer& P = rho.get_num();
  const Integer& Q = rho.get_den();
  const std::size_t n = s.re.size() - 1;
  const Integer sum = weighted_sum_upper(s, P, Q, 1);
  Integer lhs;  // (|h_1| P Q^(n-1))^2
  mpz_pow_ui(lhs.get_mpz_t(), Q.get_mpz_t(), 2 * (n - 1));
  lhs *= norm2(s, 1) * P * P;
  return lhs > sum * sum;
}

struct Cell {
  Integer i, j;  // grid indices at the current level
};

struct Grid {
  Rational origin;     // lower-left corner coordinate (both axes)
  Rational cell_size;  // side length at the current level

  ComplexBox box(const Cell& c) const {
    const Rational x0 = origin + cell_size * Rational(c.i);
    const Rational y0 = origin + cell_size * Rational(c.j);
    return {{x0, x0 + cell_size}, {y0, y0 + cell_size}};
  }
};

bool adjacent(const Cell& a, const Cell& b) { return abs(a.i - b.i) <= 1 && abs(a.j - b.j) <= 1; }

std::vector<std::vector<std::size_t>> components(const std::vector<Cell>& cells) {
  std::vector<std::size_t> parent(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (adjacent(cells[a], cells[b])) parent[find(a)] = find(b);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(cells.size(), -1);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t r = find(k);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(k);
  }
  return groups;
}

}  // namespace

std::vector<ComplexBox> isolate_roots(const IntPolynomial& f, const Rational& eps, IsolationOptions options) {
  if (f.is_zero()) throw InvalidArgument("cannot isolate roots of the zero polynomial");
  if (eps <= 0) throw InvalidArgument("isolation width must be positive");
  if (f.degree() < 1) return {};
  if (gcd(f, f.derivative()).degree() > 0) throw NotSquarefree("isolate_roots needs a squarefree polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());

  // Cauchy bound, rounded up to a power of two.
  Rational bound = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Rational q(abs(f[k]), abs(f.leading()));
    q.canonicalize();
    if (q > bound) bound = q;
  }
  bound += 1;
  Rational half = 1;
  while (half < bound) half *= 2;

  Grid grid{-half, 2 * half};
  std::vector<Cell> cells{{0, 0}};
  const bool parallel = options.execution == Execution::Parallel;

  for (unsigned level = 0; level <= options.max_levels; ++level) {
    // Cell circumradius is side/sqrt(2) <= 3/4 side.
    const Rational radius = grid.cell_size * Rational(3, 4);
    std::vector<char> keep(cells.size(), 1);
    const long count = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic) if (parallel && count > 8)
    for (long k = 0; k < count; ++k) {
      keep[k] = !excludes(f, grid.box(cells[k]).center(), radius);
    }
    std::vector<Cell> survivors;
    for (long k = 0; k < count; ++k) {
      if (keep[k]) survivors.push_back(cells[k]);
    }
    cells = std::move(survivors);

    const auto groups = components(cells);
    if (groups.size() == n && grid.cell_size <= eps) {
      std::vector<ComplexBox> boxes;
      for (const auto& g : groups) {
        ComplexBox bb = grid.box(cells[g.front()]);
        for (std::size_t k : g) {
          const ComplexBox b = grid.box(cells[k]);
          bb.re.lo = std::min(bb.re.lo, b.re.lo);
          bb.re.hi = std::max(bb.re.hi, b.re.hi);
          bb.im.lo = std::min(bb.im.lo, b.im.lo);
          bb.im.hi = std::max(bb.im.hi, b.im.hi);
        }
        boxes.push_back(bb);
      }
      bool certified = true;
      for (std::size_t a = 0; a < boxes.size() && certified; ++a) {
        certified = boxes[a].width() <= eps;
        for (std::size_t b = a + 1; b < boxes.size() && certified; ++b) {
          certified = !boxes[a].intersects(boxes[b]);
        }
      }
      std::vector<char> ok(groups.size(), certified ? 1 : 0);
      if (certified) {
        const long gcount = static_cast<long>(groups.size());
#pragma omp parallel for schedule(dynamic) if (parallel && gcount > 1)
        for (long g = 0; g < gcount; ++g) {
          const ComplexBox& bb = boxes[g];
          const ComplexRational c = bb.center();
          const Rational hx = bb.re.width() / 2, hy = bb.im.width() / 2;
          const Rational r = sqrt_upper_rel(hx * hx + hy * hy);
          bool good = pellet_one_root(f, c, r);
          for (long h = 0; h < gcount && good; ++h) {
            if (h == g) continue;
            for (std::size_t k : groups[h]) {
              if (grid.box(cells[k]).distance_squared(c) <= r * r) {
                good = false;
                break;
              }
            }
          }
          ok[g] = good;
        }
      }
      if (std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; })) {
        std::sort(boxes.begin(), boxes.end(), [](const ComplexBox& a, const ComplexBox& b) {
          if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
          return a.im.lo < b.im.lo;
        });
        return boxes;
      }
    }

    std::vector<Cell> children;
    children.reserve(cells.size() * 4);
    for (const Cell& c : cells) {
      for (int di = 0; di < 2; ++di) {
        for (int dj = 0; dj < 2; ++dj) children.push_back({2 * c.i + di, 2 * c.j + dj});
      }
    }
    cells = std::move(children);
    grid.cell_size /= 2;
  }
  throw MaxPrecisionExceeded("root isolation did not converge within the level cap");
}

namespace {

using Cld = std::complex<long double>;

std::vector<Cld> aberth(const IntPolynomial& f) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<long double> c;
  for (const auto& x : f.coefficients()) c.push_back(static_cast<long double>(x.get_d()));
  auto eval = [&](Cld z, Cld& deriv) {
    Cld p = 0, d = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
      d = d * z + p;
      p = p * z + c[k];
    }
    deriv = d;
    return p;
  };
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(c[k] / c[n]), 1.0L / (n - k)));
  radius = std::max<long double>(radius, 0.5L);
  std::vector<Cld> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double biggest = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Cld d;
      const Cld p = eval(z[k], d);
      if (p == Cld(0)) continue;
      const Cld ratio = p / d;
      Cld sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      const Cld step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      biggest = std::max(biggest, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (biggest < 1e-17L) break;
  }
  return z;
}

Rational to_rational(long double x) {
  const double hi = static_cast<double>(x);
  const double lo = static_cast<double>(x - hi);
  Rational a(hi), b(lo);
  return a + b;
}

ComplexRational eval_complex(const IntPolynomial& f, const ComplexRational& z) {
  ComplexRational acc{0, 0};
  const auto& c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + ComplexRational{Rational(c[k]), 0};
  return acc;
}

}  // namespace

std::optional<std::vector<InclusionDisc>> smith_inclusion(const IntPolynomial& f, unsigned polish_bits) {
  if (f.degree() < 1) return std::vector<InclusionDisc>{};
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const IntPolynomial df = f.derivative();
  std::vector<ComplexRational> z;
  for (const Cld& w : aberth(f)) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
    ComplexRational q{to_rational(w.real()), to_rational(w.imag())};
    for (int step = 0; step < 4; ++step) {
      const ComplexRational d = eval_complex(df, q);
      if (d.norm2() == 0) break;
      q = q - eval_complex(f, q) / d;
      q = {round_dyadic(q.re, polish_bits), round_dyadic(q.im, polish_bits)};
    }
    z.push_back(q);
  }
  std::vector<InclusionDisc> discs;
  const ComplexRational lc{Rational(f.leading()), 0};
  for (std::size_t i = 0; i < n; ++i) {
    ComplexRational denom = lc;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const ComplexRational diff = z[i] - z[j];
      if (diff.norm2() == 0) return std::nullopt;
      denom = denom * diff;
    }
    const ComplexRational w = eval_complex(f, z[i]) / denom;
    discs.push_back({z[i], Rational(static_cast<unsigned long>(n)) * sqrt_upper_rel(w.norm2())});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational reach = discs[i].radius + discs[j].radius;
      if ((discs[i].center - discs[j].center).norm2() <= reach * reach) return std::nullopt;
    }
  }
  return discs;
}

std::optional<std::size_t> count_roots_in_box(const IntPolynomial& f, const ComplexBox& box) {
  const auto discs = smith_inclusion(f);
  if (!discs) return std::nullopt;
  std::size_t inside = 0;
  for (const auto& d : *discs) {
    const bool contained = d.center.re - d.radius >= box.re.lo && d.center.re + d.radius <= box.re.hi &&
                           d.center.im - d.radius >= box.im.lo && d.center.im + d.radius <= box.im.hi;
    if (contained) {
      ++inside;
    } else if (box.distance_squared(d.center) <= d.radius * d.radius) {
      return std::nullopt;
    }
  }
  return inside;
}

}  // namespace padicert
