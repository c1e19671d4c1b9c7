#include "grouppack/oracle.hpp"

#include <chrono>

namespace gp {

namespace {

using Clock = std::chrono::steady_clock;

struct WallGuard {
  Clock::time_point start = Clock::now();
  double cap;
  std::size_t tick = 0;

  explicit WallGuard(double seconds) : cap(seconds) {}

  void check() {
    if ((++tick & 0xff) != 0) return;
    std::chrono::duration<double> used = Clock::now() - start;
    require(used.count() <= cap, Errc::limit_exceeded,
            "oracle wall-clock cap exceeded");
  }
};

void validate_instance(const KnapsackInstance& inst) {
  require(inst.target.desc == inst.group, Errc::descriptor_mismatch,
          "target group mismatch");
  for (const GroupElement& g : inst.items)
    require(g.desc == inst.group, Errc::descriptor_mismatch,
            "item group mismatch");
}

}  // namespace

SubsetSumAnswer brute_force_subsetsum(const KnapsackInstance& inst,
                                      const OracleBudget& budget) {
  validate_instance(inst);
  require(!inst.integer_exponents, Errc::invalid_argument,
          "subset sum fixes exponents to 0 or 1");
  std::size_t k = inst.items.size();
  require(k < 8 * sizeof(std::size_t) - 1 &&
              (std::size_t(1) << k) <= budget.max_points,
          Errc::limit_exceeded, "subset count exceeds the candidate cap");

  WallGuard wall(budget.wall_seconds);
  SubsetSumAnswer ans;
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); mask++) {
    wall.check();
    GroupElement acc = identity(inst.group);
    for (std::size_t i = 0; i < k; i++)
      if (mask & (std::size_t(1) << i)) acc = mul(acc, inst.items[i]);
    if (eq(acc, inst.target)) {
      ans.solvable = true;
      ans.witness.assign(k, BigInt(0));
      for (std::size_t i = 0; i < k; i++)
        if (mask & (std::size_t(1) << i)) ans.witness[i] = 1;
      return ans;
    }
  }
  return ans;
}

BruteKnapsackAnswer brute_force_knapsack(const KnapsackInstance& inst,
                                         const OracleBudget& budget) {
  validate_instance(inst);
  require(budget.box >= 0, Errc::invalid_argument, "negative box bound");
  std::size_t k = inst.items.size();
  long lo = inst.integer_exponents ? -budget.box : 0;
  long hi = budget.box;
  std::size_t span = static_cast<std::size_t>(hi - lo) + 1;

  double points = 1.0;
  for (std::size_t i = 0; i < k; i++) points *= static_cast<double>(span);
  require(points <= static_cast<double>(budget.max_points),
          Errc::limit_exceeded, "box volume exceeds the candidate cap");

  BruteKnapsackAnswer ans;
  if (k == 0) {
    ans.found = is_identity(inst.target);
    return ans;
  }

  // items[i]^e for every exponent in range, so the odometer below only
  // multiplies cached powers
  std::vector<std::vector<GroupElement>> pow(k);
  for (std::size_t i = 0; i < k; i++) {
    pow[i].reserve(span);
    for (long e = lo; e <= hi; e++)
      pow[i].push_back(elem_pow(inst.items[i], BigInt(e)));
  }

  WallGuard wall(budget.wall_seconds);
  std::vector<std::size_t> idx(k, 0);
  // prefix[i] = product of the first i factors; prefix[0] = 1
  std::vector<GroupElement> prefix;
  prefix.push_back(identity(inst.group));
  for (std::size_t i = 0; i < k; i++)
    prefix.push_back(mul(prefix[i], pow[i][0]));

  for (;;) {
    wall.check();
    if (eq(prefix[k], inst.target)) {
      ans.found = true;
      ans.witness.resize(k);
      for (std::size_t i = 0; i < k; i++)
        ans.witness[i] = BigInt(lo + static_cast<long>(idx[i]));
      return ans;
    }
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == span) {
      idx[pos - 1] = 0;
      pos--;
    }
    if (pos == 0) return ans;
    idx[pos - 1]++;
    for (std::size_t i = pos - 1; i < k; i++)
      prefix[i + 1] = mul(prefix[i], pow[i][idx[i]]);
  }
}

}  // namespace gp
