#pragma once

#include <span>
#include <string>
#include <vector>

#include "faro/paths.hpp"
#include "faro/words.hpp"

namespace faro {

/// The run-length sequence T_0..T_{3(k-1)} of the image of w under the word
/// bijection: for x in [1,k],
///   T_{3(x-1)}   = number of singleton occurrences of x,
///   T_{3(x-1)-1} = 1 + number of pairs (x,y) with y < x,
///   T_{3(x-1)+1} = 1 + number of pairs (y,x) with y > x.
RunEncoding t_encoding(std::span<const int> w, int arity);

/// Map a k-ary faro word of length n to the dispersed Dyck path of length
/// n + 2(k-1) with exactly k-1 peaks given by F^{T_0} U^{T_1} D^{T_2} ...
Path faro_to_path(std::span<const int> w, int arity);

/// Inverse of faro_to_path: left-to-right scan with peak skipping and
/// marked-D bookkeeping.  Requires a dispersed Dyck path with k-1 peaks.
Word path_to_faro(const Path& p, int arity);

/// Map a faro permutation of length n to a dispersed Dyck path of length n
/// by deleting every UD factor from its word image (arity n).
Path perm_to_path(std::span<const int> perm);

/// Inverse: insert one UD in each of the n-1 gaps of q, then invert the word
/// bijection with arity n.
Word path_to_perm(const Path& q);

/// Image characterizations inside B_{n+2(k-1),k-1}:
/// surjective words <-> paths avoiding UDUD that neither start nor end with UD;
/// injective words  <-> paths avoiding FF, DDD, UUU, DDF, FUU, DDUU.
bool image_is_surjective_word(const Path& p);
bool image_is_injective_word(const Path& p);

bool word_is_surjective(std::span<const int> w, int arity);
bool word_is_injective(std::span<const int> w);

/// Standard cycle form: each cycle led by its maximum, cycles sorted by
/// leading element.
std::vector<std::vector<int>> standard_cycle_form(std::span<const int> perm);

/// Foata's first fundamental transformation (erase the parentheses of the
/// standard cycle form) and its inverse (cut before each left-to-right
/// maximum).
Word foata(std::span<const int> perm);
Word foata_inverse(std::span<const int> perm);

enum class TransportTheorem { length2_f, length3_f, perm_g };

struct TransportReport {
    std::string which;
    long long objects_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Check every statistic identity of the named transport theorem on every
/// object of the class (S_{n,k} for the word theorems, P_n for perm_g).
TransportReport statistic_transport_check(int n, int k, TransportTheorem which);

}  // namespace faro
