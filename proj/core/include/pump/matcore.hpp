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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <type_traits>
#include <vector>

#include "pump/tolerances.hpp"

/// Dense complex matrix numerics shared by the pump library: certified
/// unitary and Hermitian wrappers, the polar projection, and spectral
/// calculus on uniform periodic time grids.
///
/// Units are natural throughout (hbar = e = 1), so Planck's constant is 2 pi
/// and the von Klitzing resistance h/e^2 is 2 pi as well.
namespace pump {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPlanck = 2.0 * kPi;
inline constexpr double kVonKlitzing = 2.0 * kPi;

/// Throws NumericalFailure if any entry is NaN or infinite, or if the
/// matrix is empty or not square.
void require_square_finite(const ComplexMatrix& m);

/// Frobenius norm of m^dagger m - I.
double unitarity_defect(const ComplexMatrix& m);

class UnitaryMatrix {
 public:
  /// Wraps m after checking ||m^dagger m - I||_F <= tol (NotUnitary otherwise).
  static UnitaryMatrix certify(ComplexMatrix m, double tol = Tolerances{}.unitary);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  double defect() const noexcept { return defect_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

 private:
  UnitaryMatrix(ComplexMatrix m, double defect) : m_(std::move(m)), defect_(defect) {}

  ComplexMatrix m_;
  double defect_;
};

class HermitianMatrix {
 public:
  /// Stores (m + m^dagger)/2. The recorded defect is ||m - m^dagger||_F
  /// divided by `reference_norm`, or by ||m||_F when no reference is given;
  /// it is zero for the zero matrix.
  static HermitianMatrix symmetrize(const ComplexMatrix& m);
  static HermitianMatrix symmetrize(const ComplexMatrix& m, double reference_norm);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  double defect() const noexcept { return defect_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

 private:
  HermitianMatrix(ComplexMatrix m, double defect) : m_(std::move(m)), defect_(defect) {}

  ComplexMatrix m_;
  double defect_;
};

/// Unitary polar factor U V^dagger of m = U Sigma V^dagger.
/// Throws SingularInput when the smallest singular value is <= 1e-12.
UnitaryMatrix unitarize(const ComplexMatrix& m, double tol = Tolerances{}.unitary);

/// exp(i h) for Hermitian h, through its eigendecomposition.
ComplexMatrix expi_hermitian(const ComplexMatrix& h);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

enum class DerivativeScheme {
  /// FFT differentiation of the sampled cycle.
  Spectral,
  /// 4th-order central differences on the model, step T/(8N).
  CentralDifference,
};

/// Uniform periodic time grid t_i = i T / N, i = 0..N-1, N a power of two >= 8.
class CycleGrid {
 public:
  CycleGrid(double period, std::size_t samples,
            DerivativeScheme scheme = DerivativeScheme::Spectral);

  double period() const noexcept { return period_; }
  std::size_t samples() const noexcept { return samples_; }
  double spacing() const noexcept { return period_ / static_cast<double>(samples_); }
  double time(std::size_t i) const noexcept { return spacing() * static_cast<double>(i); }
  std::vector<double> times() const;
  DerivativeScheme scheme() const noexcept { return scheme_; }
  /// Step used by the central-difference scheme.
  double difference_step() const noexcept { return period_ / (8.0 * static_cast<double>(samples_)); }

 private:
  double period_;
  std::size_t samples_;
  DerivativeScheme scheme_;
};

bool is_power_of_two(std::size_t n) noexcept;

/// In-place radix-2 discrete Fourier transform. The forward transform uses
/// exp(-2 pi i j k / N); the inverse one is normalized by 1/N.
void fft(std::span<Complex> data, bool inverse = false);

/// Derivative with respect to t of a periodic, band-limited sample sequence.
/// Exact for trigonometric polynomials of degree < N/2; the Nyquist mode is
/// discarded.
std::vector<Complex> spectral_derivative(std::span<const Complex> samples, const CycleGrid& grid);
std::vector<ComplexMatrix> spectral_derivative(std::span<const ComplexMatrix> samples,
                                               const CycleGrid& grid);

/// Rectangle rule T/N * sum(samples), summed in index order.
Complex periodic_integral(std::span<const Complex> samples, const CycleGrid& grid);
double periodic_integral(std::span<const double> samples, const CycleGrid& grid);

/// Largest normalized Fourier amplitude |c_m| among modes with
/// |m| >= min_mode (the Nyquist mode included). Used to detect
/// under-resolved cycles.
double spectral_tail(std::span<const Complex> samples, std::size_t min_mode);

/// Central difference of order four: (-f(x+2h) + 8f(x+h) - 8f(x-h) + f(x-2h)) / 12h.
template <typename F>
auto central_difference(F&& f, double x, double h) {
  using Result = std::decay_t<decltype(f(x))>;
  Result out = (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
  return out;
}

}  // namespace pump
