/* Copyright 2026 The pump Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pump/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pump/errors.hpp"

namespace pump {

void require_square_finite(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorKind::NumericalFailure,
                "matrix must be square with dim >= 1, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::NumericalFailure, "matrix has non-finite entries");
  }
}

double unitarity_defect(const ComplexMatrix& m) {
  const auto n = m.rows();
  return (m.adjoint() * m - ComplexMatrix::Identity(n, n)).norm();
}

UnitaryMatrix UnitaryMatrix::certify(ComplexMatrix m, double tol) {
  require_square_finite(m);
  const double defect = unitarity_defect(m);
  if (!(defect <= tol)) {
    throw Error(ErrorKind::NotUnitary,
                "unitarity defect " + format_number(defect) + " exceeds " + format_number(tol));
  }
  return UnitaryMatrix(std::move(m), defect);
}

HermitianMatrix HermitianMatrix::symmetrize(const ComplexMatrix& m) {
  return symmetrize(m, m.norm());
}

HermitianMatrix HermitianMatrix::symmetrize(const ComplexMatrix& m, double reference_norm) {
  require_square_finite(m);
  const ComplexMatrix adj = m.adjoint();
  const double skew = (m - adj).norm();
  double defect = 0.0;
  if (skew > 0.0) {
    defect = reference_norm > 0.0 ? skew / reference_norm : std::numeric_limits<double>::infinity();
  }
  ComplexMatrix sym = 0.5 * (m + adj);
  // exact: force real diagonal and mirrored off-diagonal entries
  for (Eigen::Index j = 0; j < sym.rows(); ++j) {
    sym(j, j) = Complex(sym(j, j).real(), 0.0);
    for (Eigen::Index k = j + 1; k < sym.cols(); ++k) {
      sym(k, j) = std::conj(sym(j, k));
    }
  }
  return HermitianMatrix(std::move(sym), defect);
}

UnitaryMatrix unitarize(const ComplexMatrix& m, double tol) {
  require_square_finite(m);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double smallest = sigma(sigma.size() - 1);
  if (!(smallest > kSingularThreshold)) {
    throw Error(ErrorKind::SingularInput,
                "smallest singular value " + format_number(smallest) + " <= 1e-12");
  }
  return UnitaryMatrix::certify(svd.matrixU() * svd.matrixV().adjoint(), tol);
}

ComplexMatrix expi_hermitian(const ComplexMatrix& h) {
  require_square_finite(h);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "eigendecomposition failed in exp(iH)");
  }
  const auto& lambda = eig.eigenvalues();
  ComplexVector phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k) = std::polar(1.0, lambda(k));
  }
  const ComplexMatrix& v = eig.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

CycleGrid::CycleGrid(double period, std::size_t samples, DerivativeScheme scheme)
    : period_(period), samples_(samples), scheme_(scheme) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw Error(ErrorKind::BadParamRange, "period must be positive and finite", "cycle.period");
  }
  if (samples < 8 || !is_power_of_two(samples)) {
    throw Error(ErrorKind::BadParamRange,
                "samples must be a power of two >= 8, got " + std::to_string(samples),
                "cycle.samples");
  }
}

std::vector<double> CycleGrid::times() const {
  std::vector<double> out(samples_);
  for (std::size_t i = 0; i < samples_; ++i) {
    out[i] = time(i);
  }
  return out;
}

void fft(std::span<Complex> data, bool inverse) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw Error(ErrorKind::GridMismatch, "fft length must be a power of two");
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) {
      j ^= bit;
    }
    j ^= bit;
    if (i < j) {
      std::swap(data[i], data[j]);
    }
  }
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < half; ++k) {
      const Complex w = k == 0 ? Complex(1.0, 0.0)
                               : std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(k) /
                                                     static_cast<double>(len));
      for (std::size_t i = 0; i < n; i += len) {
        const Complex u = data[i + k];
        const Complex v = data[i + k + half] * w;
        data[i + k] = u + v;
        data[i + k + half] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : data) {
      x *= scale;
    }
  }
}

namespace {

void check_length(std::size_t got, const CycleGrid& grid) {
  if (got != grid.samples()) {
    throw Error(ErrorKind::GridMismatch, "expected " + std::to_string(grid.samples()) +
                                             " samples, got " + std::to_string(got));
  }
}

// Signed frequency of FFT bin m; the Nyquist bin maps to 0.
double signed_mode(std::size_t m, std::size_t n) {
  if (2 * m < n) {
    return static_cast<double>(m);
  }
  if (2 * m == n) {
    return 0.0;
  }
  return static_cast<double>(m) - static_cast<double>(n);
}

void differentiate_in_place(std::vector<Complex>& buf, double period) {
  const std::size_t n = buf.size();
  fft(buf);
  const Complex factor(0.0, 2.0 * kPi / period);
  for (std::size_t m = 0; m < n; ++m) {
    buf[m] *= factor * signed_mode(m, n);
  }
  fft(buf, true);
}

}  // namespace

std::vector<Complex> spectral_derivative(std::span<const Complex> samples, const CycleGrid& grid) {
  check_length(samples.size(), grid);
  std::vector<Complex> buf(samples.begin(), samples.end());
  differentiate_in_place(buf, grid.period());
  return buf;
}

std::vector<ComplexMatrix> spectral_derivative(std::span<const ComplexMatrix> samples,
                                               const CycleGrid& grid) {
  check_length(samples.size(), grid);
  const std::size_t n = samples.size();
  const auto rows = samples.front().rows();
  const auto cols = samples.front().cols();
  for (const auto& s : samples) {
    if (s.rows() != rows || s.cols() != cols) {
      throw Error(ErrorKind::GridMismatch, "samples have inconsistent shapes");
    }
  }
  std::vector<ComplexMatrix> out(n, ComplexMatrix::Zero(rows, cols));
  std::vector<Complex> buf(n);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        buf[i] = samples[i](r, c);
      }
      differentiate_in_place(buf, grid.period());
      for (std::size_t i = 0; i < n; ++i) {
        out[i](r, c) = buf[i];
      }
    }
  }
  return out;
}

Complex periodic_integral(std::span<const Complex> samples, const CycleGrid& grid) {
  check_length(samples.size(), grid);
  Complex sum(0.0, 0.0);
  for (const auto& s : samples) {
    sum += s;
  }
  return sum * grid.spacing();
}

double periodic_integral(std::span<const double> samples, const CycleGrid& grid) {
  check_length(samples.size(), grid);
  double sum = 0.0;
  for (double s : samples) {
    sum += s;
  }
  return sum * grid.spacing();
}

double spectral_tail(std::span<const Complex> samples, std::size_t min_mode) {
  const std::size_t n = samples.size();
  std::vector<Complex> buf(samples.begin(), samples.end());
  fft(buf);
  double tail = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t freq = 2 * m <= n ? m : n - m;
    if (freq >= min_mode) {
      tail = std::max(tail, std::abs(buf[m]) / static_cast<double>(n));
    }
  }
  return tail;
}

}  // namespace pump
