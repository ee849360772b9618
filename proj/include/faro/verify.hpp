#pragma once

#include <string>
#include <vector>

namespace faro {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int workers = 1;
    unsigned seed = 1;
    std::string fixtures_path;
};

// ---- bijections ------------------------------------------------------------
CheckResult check_word_cardinalities(int n_max, int k_max);
CheckResult check_perm_cardinalities(int n_max);
CheckResult check_dispersed_peak_cardinalities(int n_max, int k_max);
CheckResult check_f_bijection(int n_max, int k_max);
CheckResult check_fig2_instance();
CheckResult check_g_bijection(int n_max);
CheckResult check_image_characterizations(int n_max, int k_max);
CheckResult check_reverse_complement(int n_max, int k_max);
CheckResult check_random_roundtrips(unsigned seed, int trials);

// ---- transport -------------------------------------------------------------
CheckResult check_transport_length2(int n_max, int k_max);
CheckResult check_transport_length3(int n_max, int k_max);
CheckResult check_transport_perm(int n_max);
CheckResult check_peaks_preserved(int n_max, int k_max);

// ---- series vs oracle -------------------------------------------------------
CheckResult check_distribution_series(const std::string& pattern, int n_max, int k_max);
CheckResult check_popularity_series(const std::string& pattern, int n_max, int k_max);
CheckResult check_avoidance_series(const std::string& pattern, int n_max, int k_max);
CheckResult check_perm_distribution_series(const std::string& pattern, int n_max);
CheckResult check_perm_popularity_series(const std::string& pattern, int n_max);
CheckResult check_table1_rows();
CheckResult check_zero_popularity(int n_max);
CheckResult check_diagonal_h21(int n_max);
CheckResult check_diagonal_h12(int n_max);
CheckResult check_popularity_k2_sequences(const std::string& fixtures_path, int n_max);

// ---- classes ----------------------------------------------------------------
CheckResult check_alternating(int n_max);
CheckResult check_derangements(int n_max);
CheckResult check_fibonacci(int n_max);
CheckResult check_involutions(int n_max);
CheckResult check_foata(int n_max);
CheckResult check_subexcedent_counts(int n_max);
CheckResult check_dumont(int n_max);
CheckResult check_path_pair_injective(int n_max);
CheckResult check_path_pair_transport(int n_max);

// ---- equidistribution ---------------------------------------------------------
CheckResult check_equidistribution(int n_max);
CheckResult check_closed_form_counts(int n_max);
CheckResult check_twodyck_tabulation(int steps_max);

// ---- oeis ----------------------------------------------------------------------
CheckResult check_oeis_fixtures(const std::string& fixtures_path);

/// Named suites: bijections, transport, series-vs-oracle, classes,
/// equidistribution, oeis, or all.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);
std::vector<std::string> suite_names();

}  // namespace faro
