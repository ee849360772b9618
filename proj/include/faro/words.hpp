#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace faro {

/// A word is a sequence of letters; general faro-word operations use the
/// 1-based alphabet [1,k].  (The subexcedent operations in classes.hpp use a
/// 0-based alphabet; that boundary is explicit, never inferred.)
using Word = std::vector<int>;

/// A faro word together with the arity it is considered over.  The same
/// letter sequence behaves differently under the bijections for different k,
/// so the arity always travels with the word.
struct FaroWord {
    Word letters;
    int arity = 1;
};

/// True iff w[i] <= w[i+2] for every valid i, i.e. the odd-index and
/// even-index subsequences are each nondecreasing.
/// Throws std::domain_error if a letter lies outside [1,arity].
bool is_faro_word(std::span<const int> letters, int arity);

/// Interlace two nondecreasing words u, v as u1 v1 u2 v2 ...
/// Requires 0 <= |u| - |v| <= 1; throws std::invalid_argument otherwise or if
/// an input is not nondecreasing.
Word faro_shuffle(std::span<const int> u, std::span<const int> v);

/// Split a word into its odd-index and even-index subsequences
/// (the inverse of faro_shuffle on faro words).
std::pair<Word, Word> deinterleave(std::span<const int> w);

/// Visit every k-ary faro word of length n in lexicographic order.
void for_each_faro_word(int n, int k, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_faro_words(int n, int k);

/// Faro permutations of length n (n-ary faro words using every value of
/// [1,n] exactly once), lexicographic order.
std::vector<Word> enumerate_faro_permutations(int n);

bool is_faro_permutation(std::span<const int> w);

/// One block of the pair/singleton decomposition.  A pair holds the
/// adjacent descent (hi, lo) with hi > lo; a singleton holds one letter in hi.
struct Block {
    enum class Kind { singleton, pair };
    Kind kind = Kind::singleton;
    int hi = 0;
    int lo = 0;

    bool operator==(const Block&) const = default;
};

/// Unique decomposition of a faro word into pairs (adjacent descents) and
/// singletons.  Consecutive blocks form a multichain in the faro lattice.
std::vector<Block> block_decomposition(std::span<const int> w);

/// Concatenate blocks back into a word.
Word reassemble(std::span<const Block> blocks);

/// Faro-lattice order: p <= q iff the concatenation pq is a faro word that is
/// not itself a single pair.  Both blocks are over the alphabet [1,arity].
bool lattice_leq(const Block& p, const Block& q, int arity);

/// Number of length-|p| factors of w order-isomorphic to the pattern p
/// (equal letters must map to equal letters).  p must be nonempty.
long long count_consecutive_pattern(std::span<const int> w, std::span<const int> pattern);

/// Number of subsequences of w order-isomorphic to p (classical occurrence).
long long count_classical_pattern(std::span<const int> w, std::span<const int> pattern);
bool avoids_classical(std::span<const int> w, std::span<const int> pattern);

/// Reverse the word and replace each letter x by arity+1-x.  An involution
/// on the set of k-ary faro words of a given length.
Word reverse_complement(std::span<const int> w, int arity);

/// Word text format: a digit string for arity <= 9 ("1122"), comma-separated
/// integers otherwise.  Arity is always an explicit parameter.
std::string format_word(std::span<const int> w, int arity);
Word parse_word(const std::string& text, int arity);

long long binomial(long long n, long long k);

/// |S_{n,k}| = C(floor(n/2)+k-1, k-1) * C(ceil(n/2)+k-1, k-1)
long long faro_word_count(int n, int k);

/// |P_n| = C(n, floor(n/2))
long long faro_permutation_count(int n);

}  // namespace faro
