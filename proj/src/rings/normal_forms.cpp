#include "subq/rings/normal_forms.hpp"

#include <algorithm>
#include <utility>

namespace subq::rings {

namespace {

template <class Ring>
void swap_rows(Matrix<Ring>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

/// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (sgn(q) == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (sgn(m(src, j)) != 0) m(dst, j) -= q * m(src, j);
}

/// col_dst -= q * col_src
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (sgn(q) == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (sgn(m(i, src)) != 0) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

/// Replaces rows (r, i) by (s*r + t*i, -b*r + a*i); the 2x2 transform has
/// determinant s*a + t*b = 1.
int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const mpz_class& s, const mpz_class& t,
                  const mpz_class& a, const mpz_class& b) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_class x = m(r, j), y = m(i, j);
    m(r, j) = s * x + t * y;
    m(i, j) = a * y - b * x;
  }
}

}  // namespace

EchelonForm<IntegerRing> hermite_normal_form(const IntMatrix& a) {
  const IntegerRing z;
  const std::size_t m = a.rows(), n = a.cols();
  EchelonForm<IntegerRing> ef{a, IntMatrix::identity(z, m), 0, {}};
  auto& h = ef.h;
  auto& u = ef.u;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(h(i, j)) == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, j).get_mpz_t(), h(i, j).get_mpz_t());
      mpz_class ca = h(r, j) / g, cb = h(i, j) / g;
      combine_rows(h, r, i, s, t, ca, cb);
      combine_rows(u, r, i, s, t, ca, cb);
    }
    if (sgn(h(r, j)) == 0) continue;
    if (sgn(h(r, j)) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ef.pivots.push_back(j);
    ++r;
  }
  ef.rank = r;
  return ef;
}

EchelonForm<PrimeField> reduced_row_echelon(const FpMatrix& a) {
  const auto& f = a.ring();
  const std::size_t m = a.rows(), n = a.cols();
  EchelonForm<PrimeField> ef{a, FpMatrix::identity(f, m), 0, {}};
  auto& h = ef.h;
  auto& u = ef.u;
  auto scale_row = [&](FpMatrix& x, std::size_t r, std::uint32_t c) {
    for (std::size_t j = 0; j < x.cols(); ++j) x(r, j) = f.mul(c, x(r, j));
  };
  auto eliminate = [&](FpMatrix& x, std::size_t dst, std::size_t src, std::uint32_t c) {
    for (std::size_t j = 0; j < x.cols(); ++j) x(dst, j) = f.sub(x(dst, j), f.mul(c, x(src, j)));
  };
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t piv = r;
    while (piv < m && h(piv, j) == 0) ++piv;
    if (piv == m) continue;
    swap_rows(h, r, piv);
    swap_rows(u, r, piv);
    const auto inv = f.inverse(h(r, j));
    scale_row(h, r, inv);
    scale_row(u, r, inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || h(i, j) == 0) continue;
      const auto c = h(i, j);
      eliminate(h, i, r, c);
      eliminate(u, i, r, c);
    }
    ef.pivots.push_back(j);
    ++r;
  }
  ef.rank = r;
  return ef;
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const IntegerRing z;
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm sf{a, IntMatrix::identity(z, m), IntMatrix::identity(z, n), 0};
  auto& d = sf.d;
  auto& u = sf.u;
  auto& v = sf.v;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(d(i, j)) != 0 && (!found || cmpabs(d(i, j), d(pi, pj)) < 0)) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(d, t, pi);
    swap_rows(u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot: move it into place and repeat.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0 && cmpabs(d(i, t), d(bi, bj)) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(t, j)) != 0 && cmpabs(d(t, j), d(bi, bj)) < 0) bi = t, bj = j;
        swap_rows(d, t, bi);
        swap_rows(u, t, bi);
        swap_cols(d, t, bj);
        swap_cols(v, t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility on the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_axpy(d, t, i, mpz_class(-1));
            row_axpy(u, t, i, mpz_class(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (sgn(d(t, t)) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    sf.rank = t + 1;
  }
  return sf;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t s = k + 1;
      while (s < n && sgn(m(s, k)) == 0) ++s;
      if (s == n) return 0;
      swap_rows(m, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace subq::rings
