#include "tplab/partitions.hpp"

#include "tplab/bigint.hpp"

namespace tplab {

namespace {

void recurse(int remaining, int maxPart, int maxParts, Partition& cur,
             const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(cur);
    return;
  }
  if (maxParts == 0) return;
  int hi = remaining < maxPart ? remaining : maxPart;
  for (int p = hi; p >= 1; --p) {
    cur.push_back(p);
    recurse(remaining - p, p, maxParts - 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_partition(int k, int maxParts, const std::function<void(const Partition&)>& fn) {
  if (k < 0 || maxParts < 0) return;
  Partition cur;
  cur.reserve(size_t(maxParts));
  recurse(k, k, maxParts, cur, fn);
}

std::vector<Partition> partitions_of(int k, int maxParts) {
  std::vector<Partition> out;
  for_each_partition(k, maxParts, [&](const Partition& p) { out.push_back(p); });
  return out;
}

long partition_count(int k, int maxParts) {
  long n = 0;
  for_each_partition(k, maxParts, [&](const Partition&) { ++n; });
  return n;
}

mpz_class partition_det_factor(const Partition& lambda, int n) {
  mpz_class prod = 1;
  auto part = [&](int i) -> int {  // 1-based, zero padded
    return i <= int(lambda.size()) ? lambda[size_t(i - 1)] : 0;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) prod *= part(i) - part(j) + j - i;
  return prod;
}

mpz_class schur_dim(const Partition& lambda, int n) {
  mpz_class num = partition_det_factor(lambda, n);
  mpz_class den = superfactorial(unsigned(n - 1));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace tplab
