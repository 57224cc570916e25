#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qwalk {

using Complex = std::complex<double>;

// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

Matrix2 Multiply(const Matrix2& lhs, const Matrix2& rhs);
Matrix2 ConjugateTranspose(const Matrix2& m);

// Max entrywise deviation after removing the best global phase e^{i alpha}
// aligning `rhs` onto `lhs`.
double PhaseInsensitiveDistance(const Matrix2& lhs, const Matrix2& rhs);

// Single-angle coin [[cos t, -i sin t], [-i sin t, cos t]].
struct CoinOperator {
  double theta = 0.0;
  Matrix2 entries{};

  const Complex& operator()(int row, int col) const {
    return entries[static_cast<std::size_t>(2 * row + col)];
  }
};

CoinOperator MakeCoin(double theta);

// Quarter-wave plate at 45 degrees.
Matrix2 QuarterWavePlate();
// Electro-optic modulator with phase phi.
Matrix2 ElectroOpticModulator(double phi);

// EOM(phi) applied after the QWP. Equivalent to MakeCoin(phi + pi/4); the
// returned entries are the literal matrix product.
CoinOperator ComposeEomQwp(double phi);

// The three coins reachable with the voltage settings {-v1, 0, +v1}.
enum class CoinLabel : std::uint8_t {
  kIdentity = 0,    // theta = 0
  kBalanced = 1,    // theta = pi/4
  kReflection = 2,  // theta = pi/2
};

inline constexpr std::size_t kCoinLabelCount = 3;

double CoinAngle(CoinLabel label);
const CoinOperator& CoinFor(CoinLabel label);

char CoinLabelCode(CoinLabel label);
std::optional<CoinLabel> CoinLabelFromCode(char code);

}  // namespace qwalk
