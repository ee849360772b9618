#include "faro/oracle.hpp"

#include <stdexcept>

namespace faro {

namespace {

void guard_words(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("oracle: need n >= 0, k >= 1");
    if (faro_word_count(n, k) > kMaxOracleObjects)
        throw std::invalid_argument("oracle: S_{" + std::to_string(n) + "," + std::to_string(k) +
                                    "} exceeds the enumeration cap");
}

void guard_perms(int n) {
    if (n < 0) throw std::invalid_argument("oracle: need n >= 0");
    if (faro_permutation_count(n) > kMaxOracleObjects)
        throw std::invalid_argument("oracle: P_" + std::to_string(n) +
                                    " exceeds the enumeration cap");
}

}  // namespace

std::map<long long, long long> oracle_distribution_all(std::span<const int> pattern, int n, int k) {
    guard_words(n, k);
    std::map<long long, long long> hist;
    for_each_faro_word(n, k, [&](const Word& w) {
        ++hist[count_consecutive_pattern(w, pattern)];
    });
    return hist;
}

long long oracle_distribution(std::span<const int> pattern, int n, int k, long long t) {
    const auto hist = oracle_distribution_all(pattern, n, k);
    const auto it = hist.find(t);
    return it == hist.end() ? 0 : it->second;
}

long long oracle_popularity(std::span<const int> pattern, int n, int k) {
    guard_words(n, k);
    long long total = 0;
    for_each_faro_word(n, k, [&](const Word& w) {
        total += count_consecutive_pattern(w, pattern);
    });
    return total;
}

long long oracle_avoidance(std::span<const int> pattern, int n, int k) {
    guard_words(n, k);
    long long total = 0;
    for_each_faro_word(n, k, [&](const Word& w) {
        if (count_consecutive_pattern(w, pattern) == 0) ++total;
    });
    return total;
}

std::map<long long, long long> oracle_perm_distribution_all(std::span<const int> pattern, int n) {
    guard_perms(n);
    std::map<long long, long long> hist;
    for (const Word& w : enumerate_faro_permutations(n))
        ++hist[count_consecutive_pattern(w, pattern)];
    return hist;
}

long long oracle_perm_distribution(std::span<const int> pattern, int n, long long t) {
    const auto hist = oracle_perm_distribution_all(pattern, n);
    const auto it = hist.find(t);
    return it == hist.end() ? 0 : it->second;
}

long long oracle_perm_popularity(std::span<const int> pattern, int n) {
    guard_perms(n);
    long long total = 0;
    for (const Word& w : enumerate_faro_permutations(n))
        total += count_consecutive_pattern(w, pattern);
    return total;
}

long long enumeration_oracle(const std::string& kind, const std::string& pattern, int n, int k,
                             long long t) {
    const Word p = parse_word(pattern, 9);
    if (kind == "distribution") return oracle_distribution(p, n, k, t);
    if (kind == "popularity") return oracle_popularity(p, n, k);
    if (kind == "avoidance") return oracle_avoidance(p, n, k);
    if (kind == "perm-distribution") return oracle_perm_distribution(p, n, t);
    if (kind == "perm-popularity") return oracle_perm_popularity(p, n);
    throw std::invalid_argument("oracle: unknown kind '" + kind + "'");
}

}  // namespace faro
