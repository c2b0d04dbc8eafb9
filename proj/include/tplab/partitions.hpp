#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

namespace tplab {

// Partition of an integer, parts weakly decreasing: lambda[0] >= lambda[1] >= ...
using Partition = std::vector<int>;

// Visit every partition of k into at most maxParts parts, in a fixed
// deterministic order (largest first part first, then recursively).  The
// vector passed to fn is reused between calls; copy it if you need to keep it.
void for_each_partition(int k, int maxParts, const std::function<void(const Partition&)>& fn);

std::vector<Partition> partitions_of(int k, int maxParts);

long partition_count(int k, int maxParts);

// Raw staircase product prod_{1<=i<j<=n} (l_i - l_j + j - i) where l_i is the
// i-th part of lambda padded with zeros to n parts.  For the empty partition
// this is superfactorial(n-1).
mpz_class partition_det_factor(const Partition& lambda, int n);

// Number of semistandard tableaux of shape lambda with entries in 1..n,
// i.e. partition_det_factor(lambda, n) / superfactorial(n-1).  Exact.
mpz_class schur_dim(const Partition& lambda, int n);

}  // namespace tplab
