#pragma once

#include <string>
#include <vector>

namespace lrb {

// Parts are kept weakly decreasing with trailing zeros stripped.
using Partition = std::vector<int>;

enum class Family { ALL, EVEN_ROWS, EVEN_COLUMNS, BOTH };

Partition canonical(Partition p);
bool is_partition(const Partition& p);
int weight(const Partition& p);
int length(const Partition& p);
int part(const Partition& p, int i);  // 1-based, 0 past the end
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

bool is_in_family(const Partition& p, Family f, int max_length = -1);

// every member with |p| <= max_weight and l(p) <= max_length, lexicographic
std::vector<Partition> enumerate_family(Family f, int max_weight, int max_length);
// partitions of exactly w, lexicographic, with optional bounds on length and first part
std::vector<Partition> partitions_of(int w, int max_length = -1, int max_part = -1);

// delta^rev, zero padded to n; throws if l(delta) > n
std::vector<int> reverse_padded(const Partition& d, int n);

std::string to_string(const Partition& p);
Partition parse_partition(const std::string& s);  // "5,4,4" or ""

}  // namespace lrb
