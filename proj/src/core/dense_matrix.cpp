// Copyright 2026 The ftl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ftl/core/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ftl {

DenseMatrix::DenseMatrix(std::size_t dim, bool hermitian_hint)
    : dim_(dim), data_(dim * dim, cplx{0.0, 0.0}), hermitian_(hermitian_hint) {}

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<cplx> entries, bool hermitian_hint)
    : dim_(dim), data_(std::move(entries)), hermitian_(hermitian_hint) {
  if (data_.size() != dim_ * dim_) {
    throw std::invalid_argument("DenseMatrix: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(data_.size()));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim, true);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const cplx> diag) {
  DenseMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

DenseMatrix DenseMatrix::outer(std::span<const cplx> v) {
  DenseMatrix m(v.size(), true);
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim_, hermitian_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx DenseMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double DenseMatrix::hermiticity_error() const {
  double err = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return err;
}

double DenseMatrix::unitarity_error() const {
  const DenseMatrix p = adjoint() * (*this);
  double err = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      err = std::max(err, std::abs(p(r, c) - (r == c ? cplx{1.0} : cplx{0.0})));
  return err;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  hermitian_ = hermitian_ && o.hermitian_;
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  hermitian_ = hermitian_ && o.hermitian_;
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  if (s.imag() != 0.0) hermitian_ = false;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch in *");
  const std::size_t n = a.dim_;
  DenseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    cplx* orow = &out.data_[r * n];
    for (std::size_t k = 0; k < n; ++k) {
      const cplx x = a.data_[r * n + k];
      if (x == cplx{0.0, 0.0}) continue;
      const cplx* brow = &b.data_[k * n];
      for (std::size_t c = 0; c < n; ++c) orow[c] += x * brow[c];
    }
  }
  return out;
}

std::vector<cplx> DenseMatrix::apply(std::span<const cplx> v) const {
  if (v.size() != dim_) throw std::invalid_argument("DenseMatrix::apply: size mismatch");
  std::vector<cplx> out(dim_, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < dim_; ++r) {
    cplx acc{0.0, 0.0};
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  DenseMatrix out(na * nb, a.hermitian_hint() && b.hermitian_hint());
  for (std::size_t ra = 0; ra < na; ++ra)
    for (std::size_t ca = 0; ca < na; ++ca) {
      const cplx x = a(ra, ca);
      if (x == cplx{0.0, 0.0}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb)
        for (std::size_t cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = x * b(rb, cb);
    }
  return out;
}

cplx hs_inner(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("hs_inner: dimension mismatch");
  cplx acc{0.0, 0.0};
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) acc += std::conj(da[i]) * db[i];
  return acc;
}

double phase_distance(const DenseMatrix& u, const DenseMatrix& v) {
  return 1.0 - std::abs(hs_inner(u, v)) / static_cast<double>(u.dim());
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

Eigensystem hermitian_eigensystem(const DenseMatrix& m) {
  const std::size_t n = m.dim();
  if (n > 4096) throw std::invalid_argument("hermitian_eigensystem: dimension above 4096");
  const double scale = std::max(1.0, m.frobenius_norm());
  if (m.hermiticity_error() > 1e-8 * scale) {
    throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian (error " +
                                std::to_string(m.hermiticity_error()) + ")");
  }

  DenseMatrix a = m;
  // Symmetrize so that rounding noise in the input does not bias the rotations.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  DenseMatrix v = DenseMatrix::identity(n);

  const double tol = 1e-12 * scale;
  for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        const double mag = std::abs(g);
        if (mag < 1e-300) continue;
        const cplx phase = g / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double zeta = (aqq - app) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const cplx jpp = c;
        const cplx jpq = s;
        const cplx jqp = -s * std::conj(phase);
        const cplx jqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

DenseMatrix hermitian_function(const DenseMatrix& m, const std::function<cplx(double)>& f) {
  const Eigensystem es = hermitian_eigensystem(m);
  const std::size_t n = m.dim();
  DenseMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx fk = f(es.values[k]);
    for (std::size_t r = 0; r < n; ++r) {
      const cplx vr = es.vectors(r, k) * fk;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(es.vectors(c, k));
    }
  }
  return out;
}

DenseMatrix hermitian_exp_i(const DenseMatrix& h, double angle) {
  return hermitian_function(h, [angle](double x) { return std::polar(1.0, angle * x); });
}

}  // namespace ftl
