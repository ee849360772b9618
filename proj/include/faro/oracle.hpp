#pragma once

#include <map>
#include <span>
#include <string>

#include "faro/words.hpp"

namespace faro {

/// Exhaustive-enumeration counting, fully independent of the series code:
/// every value is obtained by generating the objects and evaluating the
/// statistic directly.  Desk-scale only; calls beyond kMaxOracleObjects
/// objects are refused with a std::invalid_argument.
inline constexpr long long kMaxOracleObjects = 20'000'000;

/// Number of k-ary faro words of length n with exactly t occurrences of p.
long long oracle_distribution(std::span<const int> pattern, int n, int k, long long t);
std::map<long long, long long> oracle_distribution_all(std::span<const int> pattern, int n, int k);

/// Total occurrences of p over S_{n,k}.
long long oracle_popularity(std::span<const int> pattern, int n, int k);

/// Number of k-ary faro words of length n avoiding p.
long long oracle_avoidance(std::span<const int> pattern, int n, int k);

/// Same over faro permutations of length n.
long long oracle_perm_distribution(std::span<const int> pattern, int n, long long t);
std::map<long long, long long> oracle_perm_distribution_all(std::span<const int> pattern, int n);
long long oracle_perm_popularity(std::span<const int> pattern, int n);

/// Parse a pattern given as digits ("132") and dispatch on kind:
/// distribution | popularity | avoidance | perm-distribution | perm-popularity.
long long enumeration_oracle(const std::string& kind, const std::string& pattern, int n, int k,
                             long long t);

}  // namespace faro
