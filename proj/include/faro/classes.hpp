#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "faro/words.hpp"

namespace faro {

// ---- faro permutation subclasses -----------------------------------------

/// Down-up alternating: w1 > w2 < w3 > ...; equivalently the block
/// decomposition has no singleton (so only even lengths qualify).
bool is_alternating(std::span<const int> perm);

std::vector<Word> alternating_faro_permutations(int n);
long long alternating_count(int n);  // c_{n/2} for even n, 0 for odd n

bool is_derangement(std::span<const int> perm);
bool is_involution(std::span<const int> perm);

struct ClassReport {
    std::string name;
    long long objects = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Alternating faro permutations coincide with faro derangements.
ClassReport derangement_equivalence_check(int n);

/// Count of faro permutations of length n avoiding the classical pattern
/// (231 or 312); equals the Fibonacci number f_n with f_1 = 1, f_2 = 2.
long long fibonacci_class_count(int n, const std::string& pattern);
long long fibonacci_number(int n);

/// The classical-231 avoiders coincide with the faro involutions.
ClassReport involution_equivalence_check(int n);

// ---- subexcedent faro words (0-based alphabet) ----------------------------

/// Subexcedent operations use the 0-based alphabet {0,...,n-1}: w is a faro
/// word (both parity subsequences nondecreasing) with w_i <= i-1 at 1-based
/// position i.  This is the one module boundary where letters are 0-based.
bool is_subexcedent(std::span<const int> w);

void for_each_subexcedent(int n, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_subexcedent(int n);
long long subexcedent_count(int n);  // a_n * a_{n+1}

/// A047749: a_{2m} = C(3m,m)/(2m+1), a_{2m+1} = C(3m+1,m)/(m+1).
long long a047749(int m);

/// North-east lattice path over N=(0,1), E=(1,0).
struct NEPath {
    std::string steps;  // 'N' / 'E'
    bool operator==(const NEPath&) const = default;
};

/// 2-Dyck (ternary) path over u=(1,1), d=(1,-2).
struct TwoDyckPath {
    std::string steps;  // 'u' / 'd'
    bool operator==(const TwoDyckPath&) const = default;
};

/// Split into odd-position and even-position subsequences.
std::pair<Word, Word> parity_split(std::span<const int> w);

/// The encoding N^{a_1} E N^{a_2-a_1} E ... E N^{a_{k+1}-a_k} of a parity
/// subsequence, with a_{k+1} = 2k for the odd part and 2k+1 for the even part.
std::pair<NEPath, NEPath> subexcedent_to_path_pair(std::span<const int> w);

/// Reverse the path and map N -> u, E -> d.
TwoDyckPath nepath_to_2dyck(const NEPath& p);

/// First-quadrant condition for 2-Dyck paths; final height must be 0 or 1.
bool is_valid_2dyck(const TwoDyckPath& p);
long long twodyck_final_height(const TwoDyckPath& p);

struct TwoDyckStats {
    long long pk0 = 0;  // peaks (ud) with apex at even height
    long long pk1 = 0;  // peaks with apex at odd height
    long long dd = 0;   // double descents
    bool operator==(const TwoDyckStats&) const = default;
};
TwoDyckStats twodyck_stats(const TwoDyckPath& p);

/// (eOdis, oOdis, aOrpt, eEdis, oEdis, aErpt): distinct positive even letters
/// of the odd part, distinct odd letters of the odd part, adjacent
/// repetitions in the odd part, then distinct even letters (0 included),
/// distinct odd letters and adjacent repetitions of the even part.
struct SubexcedentStats {
    long long eOdis = 0, oOdis = 0, aOrpt = 0;
    long long eEdis = 0, oEdis = 0, aErpt = 0;
    bool operator==(const SubexcedentStats&) const = default;
    std::array<long long, 6> as_array() const { return {eOdis, oOdis, aOrpt, eEdis, oEdis, aErpt}; }
};
SubexcedentStats subexcedent_stats(std::span<const int> w);

using StatsHistogram = std::map<std::array<long long, 6>, long long>;
StatsHistogram subexcedent_histogram(int n);

/// Joint histogram of (eOdis,oOdis,aOrpt) invariant under all six coordinate
/// permutations; (eEdis,oEdis) invariant under swap.
ClassReport equidistribution_check(int n);

/// Number of subexcedent faro words of length n with the given statistics
/// 6-tuple.  Requires r1+r2+r3 = ceil(n/2)-1 (n >= 1) and r4+r5+r6 = floor(n/2).
long long closed_form_count(int n, const std::array<long long, 6>& r);

// ---- Dumont permutations of the second kind --------------------------------

/// pi(2i-1) >= 2i-1 and pi(2i) <= 2i-1 for all i.
bool is_dumont_second_kind(std::span<const int> perm);

/// All 2143-avoiding Dumont permutations of the second kind of length two_n.
/// Refused above length 14 (desk-scale backtracking).
void for_each_dumont_2143_avoiding(int two_n, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_dumont_2143_avoiding(int two_n);

/// |2143-avoiding Dumont_II of length 2n| = a_n * a_{n+1} = |subexcedent(n)|.
ClassReport dumont_count_check(int n);

}  // namespace faro
