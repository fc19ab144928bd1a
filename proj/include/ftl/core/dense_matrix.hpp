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

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ftl {

using cplx = std::complex<double>;

/// Square complex matrix, row-major. Used for gate matrices, dense circuit
/// unitaries and reduced density matrices.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim, bool hermitian_hint = false);
  DenseMatrix(std::size_t dim, std::vector<cplx> entries, bool hermitian_hint = false);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix diagonal(std::span<const cplx> diag);
  /// |v><v|
  static DenseMatrix outer(std::span<const cplx> v);

  std::size_t dim() const { return dim_; }
  bool hermitian_hint() const { return hermitian_; }
  void set_hermitian_hint(bool h) { hermitian_ = h; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  DenseMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// max |m_ij - conj(m_ji)|
  double hermiticity_error() const;
  /// || U^dagger U - I ||_max
  double unitarity_error() const;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(cplx s);

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(cplx s, DenseMatrix a) { return a *= s; }

  std::vector<cplx> apply(std::span<const cplx> v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
  bool hermitian_ = false;
};

/// a (x) b with a acting on the more significant index bits.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Tr(A^dagger B)
cplx hs_inner(const DenseMatrix& a, const DenseMatrix& b);

/// Phase-insensitive distance 1 - |Tr(U^dagger V)| / d.
double phase_distance(const DenseMatrix& u, const DenseMatrix& v);

/// Hermitian eigensystem by cyclic Jacobi rotations. Eigenvalues ascending,
/// eigenvectors stored as the columns of `vectors`.
struct Eigensystem {
  std::vector<double> values;
  DenseMatrix vectors;
};

Eigensystem hermitian_eigensystem(const DenseMatrix& m);

/// Matrix function f applied through the eigenbasis of a Hermitian matrix.
DenseMatrix hermitian_function(const DenseMatrix& m, const std::function<cplx(double)>& f);

/// exp(i * angle * H) for Hermitian H, through its eigenbasis.
DenseMatrix hermitian_exp_i(const DenseMatrix& h, double angle);

}  // namespace ftl
