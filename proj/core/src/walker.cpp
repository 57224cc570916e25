#include "qwalk/walker.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

WalkerState::WalkerState(int half_width)
    : half_width_(half_width),
      cells_(static_cast<std::size_t>(2 * half_width + 1)),
      scratch_(cells_.size()) {}

WalkerState WalkerState::Localized(int half_width, Complex c0, Complex c1) {
  if (half_width < 0) throw InvalidArgument("half_width must be >= 0");
  WalkerState state(half_width);
  state.cells_[static_cast<std::size_t>(half_width)] = {c0, c1};
  return state;
}

const WalkerState::Amplitudes& WalkerState::at(int x) const {
  if (std::abs(x) > half_width_) {
    throw InvalidArgument("position " + std::to_string(x) +
                          " outside lattice");
  }
  return cells_[static_cast<std::size_t>(x + half_width_)];
}

template <typename CoinAt>
void WalkerState::AdvanceImpl(std::size_t coin_count, CoinAt coin_at) {
  if (step_ + 1 > half_width_) {
    throw CapacityError("step " + std::to_string(step_ + 1) +
                        " exceeds lattice half-width " +
                        std::to_string(half_width_));
  }
  if (coin_count != cells_.size()) {
    throw InvalidArgument("coin row has " + std::to_string(coin_count) +
                          " entries, lattice has " +
                          std::to_string(cells_.size()));
  }
  std::fill(scratch_.begin(), scratch_.end(), Amplitudes{});
  const int t = step_;
  for (int x = -t; x <= t; x += 2) {
    const auto i = static_cast<std::size_t>(x + half_width_);
    const auto& [a0, a1] = cells_[i];
    const CoinOperator& c = coin_at(i);
    scratch_[i - 1][0] = c(0, 0) * a0 + c(0, 1) * a1;
    scratch_[i + 1][1] = c(1, 0) * a0 + c(1, 1) * a1;
  }
  cells_.swap(scratch_);
  ++step_;
}

void WalkerState::Advance(std::span<const CoinOperator> coins) {
  AdvanceImpl(coins.size(),
              [&](std::size_t i) -> const CoinOperator& { return coins[i]; });
}

void WalkerState::Advance(std::span<const CoinLabel> labels) {
  AdvanceImpl(labels.size(), [&](std::size_t i) -> const CoinOperator& {
    return CoinFor(labels[i]);
  });
}

double WalkerState::Norm() const {
  return std::accumulate(cells_.begin(), cells_.end(), 0.0,
                         [](double acc, const Amplitudes& a) {
                           return acc + std::norm(a[0]) + std::norm(a[1]);
                         });
}

WalkerState Step(WalkerState state, std::span<const CoinOperator> coins) {
  state.Advance(coins);
  return state;
}

WalkerState Step(WalkerState state, std::span<const CoinLabel> labels) {
  state.Advance(labels);
  return state;
}

Distribution Distribution::Zeros(int half_width, std::optional<int> step) {
  Distribution d;
  d.half_width = half_width;
  d.step = step;
  d.probability.assign(static_cast<std::size_t>(2 * half_width + 1), 0.0);
  return d;
}

double Distribution::at(int x) const {
  if (std::abs(x) > half_width) return 0.0;
  return probability[static_cast<std::size_t>(x + half_width)];
}

double Distribution::Total() const {
  return std::accumulate(probability.begin(), probability.end(), 0.0);
}

Distribution ProbabilityDistribution(const WalkerState& state,
                                     bool coin_resolved) {
  Distribution d = Distribution::Zeros(state.half_width(), state.step());
  if (coin_resolved) {
    d.coin0.assign(d.size(), 0.0);
    d.coin1.assign(d.size(), 0.0);
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& a = state.at(d.position(i));
    const double p0 = std::norm(a[0]);
    const double p1 = std::norm(a[1]);
    d.probability[i] = p0 + p1;
    if (coin_resolved) {
      d.coin0[i] = p0;
      d.coin1[i] = p1;
    }
  }
  return d;
}

}  // namespace qwalk
