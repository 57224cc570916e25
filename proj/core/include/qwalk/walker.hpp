#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// Two-component amplitude field on the dense lattice x in [-T, T].
//
// Only cells inside the light cone (|x| <= step, x + step even) are ever
// written, so amplitudes outside it are exactly zero.
class WalkerState {
 public:
  using Amplitudes = std::array<Complex, 2>;

  // Walker at x = 0 with coin amplitudes (c0, c1) at step 0.
  static WalkerState Localized(int half_width, Complex c0 = {1.0, 0.0},
                               Complex c1 = {0.0, 0.0});

  int step() const noexcept { return step_; }
  int half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return cells_.size(); }

  const Amplitudes& at(int x) const;
  Complex amplitude(int x, int coin) const { return at(x)[coin == 0 ? 0 : 1]; }

  // Coin then shift: coin 0 moves x -> x-1, coin 1 moves x -> x+1.
  // `coins` is indexed by x + half_width and must span the lattice.
  void Advance(std::span<const CoinOperator> coins);
  void Advance(std::span<const CoinLabel> labels);

  double Norm() const;

 private:
  WalkerState(int half_width);

  template <typename CoinAt>
  void AdvanceImpl(std::size_t coin_count, CoinAt coin_at);

  int half_width_ = 0;
  int step_ = 0;
  std::vector<Amplitudes> cells_;
  std::vector<Amplitudes> scratch_;
};

WalkerState Step(WalkerState state, std::span<const CoinOperator> coins);
WalkerState Step(WalkerState state, std::span<const CoinLabel> labels);

// Position marginal P(x), optionally with the per-coin terms.
struct Distribution {
  int half_width = 0;
  // Step the distribution was taken at; fixes the parity support.
  std::optional<int> step;
  std::vector<double> probability;
  std::vector<double> coin0;
  std::vector<double> coin1;

  static Distribution Zeros(int half_width, std::optional<int> step = {});

  std::size_t size() const noexcept { return probability.size(); }
  bool coin_resolved() const noexcept { return !coin0.empty(); }
  int position(std::size_t index) const {
    return static_cast<int>(index) - half_width;
  }
  double at(int x) const;
  double Total() const;
};

Distribution ProbabilityDistribution(const WalkerState& state,
                                     bool coin_resolved = false);

}  // namespace qwalk
