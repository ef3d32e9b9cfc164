#pragma once

#include <string>
#include <vector>

namespace gramclass {

// Non-increasing sequence of positive integers.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) {}
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int sum() const;
  int length() const { return int(parts.size()); }
  long long lcm() const;
  bool valid() const;

  bool operator==(const Partition&) const = default;
  std::string str() const;  // e.g. "(3,1,1)"
};

// All partitions of m, lexicographically decreasing.
std::vector<Partition> partitions_all(int m);

// Number of partitions of m into exactly l parts.
long long partitions_exact_length(int m, int l);

}  // namespace gramclass
