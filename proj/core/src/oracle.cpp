#include "risqaoa/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <utility>

#include "risqaoa/errors.hpp"

namespace risq {
namespace {

constexpr std::size_t kRangeBits = 16;

// Walks the 2^bits configurations sharing the high bits of `base` in Gray-code
// order, updating the cost and the local fields f_j = sum_k J_jk x_k with one
// O(n) pass per flip. Each range starts from an exact evaluation.
template <class Visit>
void gray_walk(const IsingInstance& inst, BasisIndex base, std::size_t bits, Visit&& visit) {
  const std::size_t n = inst.n;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = ((base >> i) & 1U) ? -1.0 : 1.0;
  std::vector<double> field(n, 0.0);
  for (const auto& e : inst.edges) {
    field[e.i] += e.weight * x[e.j];
    field[e.j] += e.weight * x[e.i];
  }
  double cost = evaluate_cost(inst, base);
  BasisIndex idx = base;
  visit(idx, cost);

  const BasisIndex count = BasisIndex{1} << bits;
  for (BasisIndex k = 1; k < count; ++k) {
    const auto b = static_cast<std::size_t>(std::countr_zero(k));
    const double xb = x[b];
    cost -= 2.0 * xb * (2.0 * field[b] + inst.h[b]);
    const auto col = inst.J.col(static_cast<Eigen::Index>(b));
    for (std::size_t j = 0; j < n; ++j) field[j] -= 2.0 * col(static_cast<Eigen::Index>(j)) * xb;
    x[b] = -xb;
    idx ^= BasisIndex{1} << b;
    visit(idx, cost);
  }
}

struct Candidate {
  BasisIndex index;
  double value;
};

// Running extrema plus every configuration within `slack` of them.
class ExtremeTracker {
 public:
  explicit ExtremeTracker(double slack) : slack_(slack) {}

  void add(BasisIndex idx, double v) {
    if (v < lo_) lo_ = v;
    if (v > hi_) hi_ = v;
    if (v <= lo_ + slack_) push(low_, low_limit_, idx, v, [this](double w) { return w <= lo_ + slack_; });
    if (v >= hi_ - slack_) push(high_, high_limit_, idx, v, [this](double w) { return w >= hi_ - slack_; });
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<Candidate>& low() const { return low_; }
  const std::vector<Candidate>& high() const { return high_; }

 private:
  template <class Keep>
  static void push(std::vector<Candidate>& list, std::size_t& limit, BasisIndex idx, double v,
                   Keep keep) {
    list.push_back({idx, v});
    if (list.size() > limit) {
      std::erase_if(list, [&](const Candidate& c) { return !keep(c.value); });
      limit = std::max<std::size_t>(limit, 2 * list.size());
    }
  }

  double slack_;
  double lo_ = std::numeric_limits<double>::infinity();
  double hi_ = -std::numeric_limits<double>::infinity();
  std::vector<Candidate> low_;
  std::vector<Candidate> high_;
  std::size_t low_limit_ = 1024;
  std::size_t high_limit_ = 1024;
};

}  // namespace

bool OracleResult::is_optimal(BasisIndex index) const {
  return std::binary_search(optimal_set.begin(), optimal_set.end(), index);
}

OracleResult exhaustive_search(const IsingInstance& instance, const OracleOptions& options) {
  const std::size_t n = instance.n;
  if (n > options.max_qubits || n > 62) {
    throw CapacityError("exhaustive search over 2^" + std::to_string(n) +
                        " configurations exceeds the qubit budget of " +
                        std::to_string(options.max_qubits));
  }

  // Candidates are kept within `slack` of the running extrema. The slack covers
  // the degeneracy window (at most 2 * relative_tolerance * scale) plus the
  // rounding drift of incremental updates; survivors are re-evaluated exactly.
  const double scale = cost_scale(instance);
  const double slack = (2.0 * options.relative_tolerance + 2e-9) * scale;

  const std::size_t bits = std::min(n, kRangeBits);
  const std::size_t ranges = std::size_t{1} << (n - bits);
  std::vector<ExtremeTracker> trackers(ranges, ExtremeTracker(slack));

#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < ranges; ++r) {
    const BasisIndex base = static_cast<BasisIndex>(r) << bits;
    auto& tracker = trackers[r];
    if (options.strategy == EnumerationStrategy::kGrayCode) {
      gray_walk(instance, base, bits, [&](BasisIndex idx, double v) { tracker.add(idx, v); });
    } else {
      const BasisIndex count = BasisIndex{1} << bits;
      for (BasisIndex k = 0; k < count; ++k) tracker.add(base | k, evaluate_cost(instance, base | k));
    }
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& t : trackers) {
    lo = std::min(lo, t.lo());
    hi = std::max(hi, t.hi());
  }

  std::vector<Candidate> low;
  double c_min = std::numeric_limits<double>::infinity();
  double c_max = -std::numeric_limits<double>::infinity();
  for (const auto& t : trackers) {
    for (const auto& c : t.low()) {
      if (c.value > lo + slack) continue;
      const double exact = evaluate_cost(instance, c.index);
      c_min = std::min(c_min, exact);
      low.push_back({c.index, exact});
    }
    for (const auto& c : t.high()) {
      if (c.value < hi - slack) continue;
      c_max = std::max(c_max, evaluate_cost(instance, c.index));
    }
  }

  OracleResult result;
  result.n = n;
  result.c_min = c_min;
  result.c_max = c_max;
  result.tolerance = options.relative_tolerance * (c_max - c_min);
  for (const auto& c : low) {
    if (c.value <= c_min + result.tolerance) result.optimal_set.push_back(c.index);
  }
  std::sort(result.optimal_set.begin(), result.optimal_set.end());
  return result;
}

std::vector<double> gray_code_costs(const IsingInstance& instance) {
  if (instance.n > 20) throw CapacityError("gray_code_costs audit is limited to n <= 20");
  std::vector<double> out(std::size_t{1} << instance.n);
  const std::size_t bits = std::min(instance.n, kRangeBits);
  const std::size_t ranges = std::size_t{1} << (instance.n - bits);
  for (std::size_t r = 0; r < ranges; ++r) {
    gray_walk(instance, static_cast<BasisIndex>(r) << bits, bits,
              [&](BasisIndex idx, double v) { out[idx] = v; });
  }
  return out;
}

}  // namespace risq
