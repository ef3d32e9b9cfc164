#include "gramclass/partition.hpp"

#include <functional>
#include <numeric>

namespace gramclass {

int Partition::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

long long Partition::lcm() const {
  long long l = 1;
  for (int p : parts) l = std::lcm(l, static_cast<long long>(p));
  return l;
}

bool Partition::valid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_all(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

long long partitions_exact_length(int m, int l) {
  if (l < 0 || m < 0) return 0;
  if (l == 0) return m == 0 ? 1 : 0;
  if (m < l) return 0;
  std::vector<std::vector<long long>> dp(size_t(l) + 1, std::vector<long long>(size_t(m) + 1, 0));
  dp[0][0] = 1;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= m; ++j)
      dp[size_t(i)][size_t(j)] = dp[size_t(i) - 1][size_t(j) - 1] + (j >= i ? dp[size_t(i)][size_t(j - i)] : 0);
  return dp[size_t(l)][size_t(m)];
}

}  // namespace gramclass
