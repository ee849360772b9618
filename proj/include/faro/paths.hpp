#pragma once

#include <functional>
#include <string>
#include <vector>

namespace faro {

/// Lattice path steps: level F = (1,0), up U = (1,1), down D = (1,-1).
enum class Step : unsigned char { F, U, D };

using Path = std::vector<Step>;

/// Parse a bare step string over {F,U,D}; any other character is rejected.
Path parse_path(const std::string& text);
std::string format_path(const Path& p);

/// Prefix heights never negative.
bool first_quadrant(const Path& p);

/// First-quadrant, ends at height 0, every F at height 0.
bool is_dispersed_dyck(const Path& p);

/// Dispersed Dyck with no level step (even length).
bool is_dyck(const Path& p);

/// Number of UD factors.
long long count_peaks(const Path& p);

/// All dispersed Dyck paths of length n, lexicographic in step order F < U < D.
void for_each_dispersed(int n, const std::function<void(const Path&)>& visit);
std::vector<Path> enumerate_dispersed(int n);

/// Dispersed Dyck paths of length n with exactly k peaks.
std::vector<Path> enumerate_dispersed_with_peaks(int n, int k);

/// Dyck paths of semilength n (2n steps, no F).
std::vector<Path> enumerate_dyck(int semilength);

long long dispersed_count(int n);                   // b_n = C(n, floor(n/2))
long long dispersed_with_peaks_count(int n, int k); // C(floor(n/2),k)*C(ceil(n/2),k)
long long catalan(int n);                           // c_n = C(2n,n)/(n+1)

/// Run-length encoding T_0..T_{3(k-1)} of a dispersed Dyck path with k-1
/// peaks: indices 0 mod 3 are F-run lengths, 1 mod 3 U-run lengths, 2 mod 3
/// D-run lengths; interior entries are >= 1.
struct RunEncoding {
    std::vector<long long> t;
    int arity = 1;
};

/// Throws std::invalid_argument when the run structure of p is incompatible
/// with arity k (wrong peak count or not dispersed).
RunEncoding run_encoding(const Path& p, int arity);
Path decode_runs(const RunEncoding& enc);

}  // namespace faro
