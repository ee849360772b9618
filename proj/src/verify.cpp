#include "faro/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <span>
#include <sstream>

#include "faro/bijections.hpp"
#include "faro/classes.hpp"
#include "faro/closed_form.hpp"
#include "faro/oeis.hpp"
#include "faro/oracle.hpp"
#include "faro/path_pattern.hpp"
#include "faro/paths.hpp"
#include "faro/words.hpp"

namespace faro {

namespace {

CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

std::string box(int n_max, int k_max) {
    return "n<=" + std::to_string(n_max) + ", k<=" + std::to_string(k_max);
}

}  // namespace

CheckResult check_word_cardinalities(int n_max, int k_max) {
    const std::string name = "cardinality |S_{n,k}| (" + box(n_max, k_max) + ")";
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) {
            long long seen = 0;
            for_each_faro_word(n, k, [&](const Word&) { ++seen; });
            if (seen != faro_word_count(n, k))
                return fail(name, "mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    return pass(name);
}

CheckResult check_perm_cardinalities(int n_max) {
    const std::string name = "cardinality |P_n| (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        const auto perms = enumerate_faro_permutations(n);
        if (static_cast<long long>(perms.size()) != faro_permutation_count(n))
            return fail(name, "mismatch at n=" + std::to_string(n));
        for (const Word& w : perms)
            if (!is_faro_permutation(w))
                return fail(name, "non-permutation emitted at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_dispersed_peak_cardinalities(int n_max, int k_max) {
    const std::string name = "cardinality |B_{n,k}| (" + box(n_max, k_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        const auto all = enumerate_dispersed(n);
        if (static_cast<long long>(all.size()) != dispersed_count(n))
            return fail(name, "b_n mismatch at n=" + std::to_string(n));
        for (int k = 0; k <= k_max; ++k) {
            long long seen = 0;
            for (const Path& p : all)
                if (count_peaks(p) == k) ++seen;
            if (seen != dispersed_with_peaks_count(n, k))
                return fail(name, "mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
    return pass(name);
}

CheckResult check_f_bijection(int n_max, int k_max) {
    const std::string name = "word bijection roundtrip + image (" + box(n_max, k_max) + ")";
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) {
            std::set<Path> images;
            bool bad = false;
            std::string detail;
            for_each_faro_word(n, k, [&](const Word& w) {
                if (bad) return;
                const Path p = faro_to_path(w, k);
                if (static_cast<int>(p.size()) != n + 2 * (k - 1) || !is_dispersed_dyck(p) ||
                    count_peaks(p) != k - 1) {
                    bad = true;
                    detail = "image not in B_{n+2(k-1),k-1} for " + format_word(w, k);
                    return;
                }
                if (path_to_faro(p, k) != w) {
                    bad = true;
                    detail = "roundtrip failed for " + format_word(w, k);
                    return;
                }
                images.insert(p);
            });
            if (bad) return fail(name, detail);
            if (static_cast<long long>(images.size()) != faro_word_count(n, k))
                return fail(name, "not injective at n=" + std::to_string(n) +
                                      ", k=" + std::to_string(k));
            // onto: every path with k-1 peaks is hit
            for (const Path& p : enumerate_dispersed_with_peaks(n + 2 * (k - 1), k - 1))
                if (!images.count(p))
                    return fail(name, "not onto: " + format_path(p) + " missed (n=" +
                                          std::to_string(n) + ", k=" + std::to_string(k) + ")");
        }
    return pass(name);
}

CheckResult check_fig2_instance() {
    const std::string name = "golden instance 11313232343 (k=5)";
    const Word w = parse_word("11313232343", 5);
    const RunEncoding enc = t_encoding(w, 5);
    const std::vector<long long> expected_t{2, 2, 1, 0, 3, 4, 1, 2, 2, 0, 1, 1, 0};
    if (enc.t != expected_t) return fail(name, "T-encoding mismatch");
    const Path p = faro_to_path(w, 5);
    if (format_path(p) != "FFUUDUUUDDDDFUUDDUD")
        return fail(name, "image mismatch: " + format_path(p));
    if (path_to_faro(p, 5) != w) return fail(name, "inverse mismatch");
    return pass(name);
}

CheckResult check_g_bijection(int n_max) {
    const std::string name = "permutation bijection roundtrip (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        std::set<Path> images;
        for (const Word& w : enumerate_faro_permutations(n)) {
            const Path q = perm_to_path(w);
            if (static_cast<int>(q.size()) != n || !is_dispersed_dyck(q))
                return fail(name, "image not in B_n for " + format_word(w, n));
            if (path_to_perm(q) != w)
                return fail(name, "roundtrip failed for " + format_word(w, n));
            images.insert(q);
        }
        if (static_cast<long long>(images.size()) != dispersed_count(n))
            return fail(name, "not a bijection onto B_" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_image_characterizations(int n_max, int k_max) {
    const std::string name = "surjective/injective image characterizations (" + box(n_max, k_max) + ")";
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) {
            bool bad = false;
            std::string detail;
            for_each_faro_word(n, k, [&](const Word& w) {
                if (bad) return;
                const Path p = faro_to_path(w, k);
                if (word_is_surjective(w, k) != image_is_surjective_word(p)) {
                    bad = true;
                    detail = "surjective test disagrees for " + format_word(w, k) +
                             " (k=" + std::to_string(k) + ")";
                }
                if (word_is_injective(w) != image_is_injective_word(p)) {
                    bad = true;
                    detail = "injective test disagrees for " + format_word(w, k) +
                             " (k=" + std::to_string(k) + ")";
                }
            });
            if (bad) return fail(name, detail);
        }
    return pass(name);
}

CheckResult check_reverse_complement(int n_max, int k_max) {
    const std::string name = "reverse-complement involution + distribution transport (" +
                             box(n_max, k_max) + ")";
    const std::pair<Word, Word> pairs[] = {
        {{1, 1, 2}, {1, 2, 2}}, {{1, 2, 1}, {2, 1, 2}}, {{1, 3, 2}, {2, 1, 3}}};
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) {
            std::set<Word> all;
            bool bad = false;
            std::string detail;
            for_each_faro_word(n, k, [&](const Word& w) { all.insert(w); });
            std::map<std::pair<int, long long>, long long> lhs, rhs;  // (pair idx, count) hist
            for (const Word& w : all) {
                const Word c = reverse_complement(w, k);
                if (!all.count(c) || reverse_complement(c, k) != w) {
                    bad = true;
                    detail = "chi not an involution on S_{n,k} at " + format_word(w, k);
                    break;
                }
                for (int i = 0; i < 3; ++i) {
                    ++lhs[{i, count_consecutive_pattern(w, pairs[i].first)}];
                    ++rhs[{i, count_consecutive_pattern(w, pairs[i].second)}];
                }
            }
            if (bad) return fail(name, detail);
            if (lhs != rhs)
                return fail(name, "distributions differ at n=" + std::to_string(n) +
                                      ", k=" + std::to_string(k));
        }
    return pass(name);
}

CheckResult check_random_roundtrips(unsigned seed, int trials) {
    const std::string name = "random large-instance roundtrips (seed " + std::to_string(seed) + ")";
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int n = std::uniform_int_distribution<int>(0, 40)(rng);
        const int k = std::uniform_int_distribution<int>(1, 12)(rng);
        Word u((n + 1) / 2), v(n / 2);
        auto fill = [&](Word& part) {
            std::uniform_int_distribution<int> dist(1, k);
            for (int& x : part) x = dist(rng);
            std::sort(part.begin(), part.end());
        };
        fill(u);
        fill(v);
        const Word w = faro_shuffle(u, v);
        if (path_to_faro(faro_to_path(w, k), k) != w)
            return fail(name, "word roundtrip failed for " + format_word(w, k) +
                                  " (k=" + std::to_string(k) + ")");
    }
    for (int t = 0; t < trials; ++t) {
        const int n = std::uniform_int_distribution<int>(0, 24)(rng);
        // random faro permutation: random odd-position value set
        Word all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        std::shuffle(all.begin(), all.end(), rng);
        Word u(all.begin(), all.begin() + (n + 1) / 2), v(all.begin() + (n + 1) / 2, all.end());
        std::sort(u.begin(), u.end());
        std::sort(v.begin(), v.end());
        const Word w = faro_shuffle(u, v);
        if (path_to_perm(perm_to_path(w)) != w)
            return fail(name, "perm roundtrip failed for " + format_word(w, std::max(n, 1)));
    }
    return pass(name, std::to_string(2 * trials) + " trials");
}

namespace {

CheckResult transport_box(const std::string& name, int n_max, int k_max, TransportTheorem which) {
    long long objects = 0;
    for (int n = 0; n <= n_max; ++n) {
        if (which == TransportTheorem::perm_g) {
            const TransportReport rep = statistic_transport_check(n, 0, which);
            objects += rep.objects_checked;
            if (!rep.ok()) return fail(name, rep.violations.front());
        } else {
            for (int k = 1; k <= k_max; ++k) {
                const TransportReport rep = statistic_transport_check(n, k, which);
                objects += rep.objects_checked;
                if (!rep.ok()) return fail(name, rep.violations.front() + " (k=" + std::to_string(k) + ")");
            }
        }
    }
    return pass(name, std::to_string(objects) + " objects");
}

}  // namespace

CheckResult check_transport_length2(int n_max, int k_max) {
    return transport_box("length-2 statistic transport (" + box(n_max, k_max) + ")", n_max, k_max,
                         TransportTheorem::length2_f);
}

CheckResult check_transport_length3(int n_max, int k_max) {
    return transport_box("length-3 statistic transport (" + box(n_max, k_max) + ")", n_max, k_max,
                         TransportTheorem::length3_f);
}

CheckResult check_transport_perm(int n_max) {
    return transport_box("permutation statistic transport (n<=" + std::to_string(n_max) + ")",
                         n_max, 0, TransportTheorem::perm_g);
}

CheckResult check_peaks_preserved(int n_max, int k_max) {
    const std::string name = "images carry exactly k-1 peaks (" + box(n_max, k_max) + ")";
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) {
            bool bad = false;
            for_each_faro_word(n, k, [&](const Word& w) {
                if (!bad && count_pattern(faro_to_path(w, k), "UD") != k - 1) bad = true;
            });
            if (bad) return fail(name, "peak count off at n=" + std::to_string(n) +
                                           ", k=" + std::to_string(k));
        }
    return pass(name);
}

namespace {

long long to_ll(const Rational& v) {
    if (boost::multiprecision::denominator(v) != 1)
        throw std::runtime_error("expected integer coefficient");
    return static_cast<long long>(boost::multiprecision::numerator(v));
}

Word pattern_word(const std::string& digits) {
    return parse_word(digits, 9);
}

}  // namespace

CheckResult check_distribution_series(const std::string& pattern, int n_max, int k_max) {
    const std::string name = "F" + pattern + " vs oracle (" + box(n_max, k_max) + ", all t)";
    const MultiSeries s = expand_distribution(pattern, {n_max, k_max, n_max});
    const Word p = pattern_word(pattern);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k) {
            const auto hist = oracle_distribution_all(p, n, k);
            for (int t = 0; t <= n_max; ++t) {
                const auto it = hist.find(t);
                const long long want = it == hist.end() ? 0 : it->second;
                if (to_ll(s.at(n, k, t)) != want)
                    return fail(name, "mismatch at (n,k,t)=(" + std::to_string(n) + "," +
                                          std::to_string(k) + "," + std::to_string(t) + ")");
            }
        }
    return pass(name);
}

CheckResult check_popularity_series(const std::string& pattern, int n_max, int k_max) {
    const std::string name = "G" + pattern + " vs oracle (" + box(n_max, k_max) + ")";
    const MultiSeries s = expand_popularity_words(pattern, {n_max, k_max, 0});
    const Word p = pattern_word(pattern);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k)
            if (to_ll(s.at(n, k, 0)) != oracle_popularity(p, n, k))
                return fail(name, "mismatch at (n,k)=(" + std::to_string(n) + "," +
                                      std::to_string(k) + ")");
    return pass(name);
}

CheckResult check_avoidance_series(const std::string& pattern, int n_max, int k_max) {
    const std::string name = "H" + pattern + " vs oracle (" + box(n_max, k_max) + ")";
    const MultiSeries s = expand_avoidance(pattern, {n_max, k_max, 0});
    const Word p = pattern_word(pattern);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k)
            if (to_ll(s.at(n, k, 0)) != oracle_avoidance(p, n, k))
                return fail(name, "mismatch at (n,k)=(" + std::to_string(n) + "," +
                                      std::to_string(k) + ")");
    return pass(name);
}

CheckResult check_perm_distribution_series(const std::string& pattern, int n_max) {
    const std::string name = "K" + pattern + " vs oracle (n<=" + std::to_string(n_max) + ")";
    const MultiSeries s = expand_perm_distribution(pattern, {n_max, n_max, 0});
    const Word p = pattern_word(pattern);
    for (int n = 0; n <= n_max; ++n) {
        const auto hist = oracle_perm_distribution_all(p, n);
        for (int t = 0; t <= n_max; ++t) {
            const auto it = hist.find(t);
            const long long want = it == hist.end() ? 0 : it->second;
            if (to_ll(s.at(n, t, 0)) != want)
                return fail(name, "mismatch at (n,t)=(" + std::to_string(n) + "," +
                                      std::to_string(t) + ")");
        }
    }
    return pass(name);
}

CheckResult check_perm_popularity_series(const std::string& pattern, int n_max) {
    const std::string name = "L" + pattern + " vs oracle (n<=" + std::to_string(n_max) + ")";
    const auto terms = expand_perm_popularity(pattern, n_max);
    const Word p = pattern_word(pattern);
    for (int n = 0; n <= n_max; ++n)
        if (to_ll(terms[n]) != oracle_perm_popularity(p, n))
            return fail(name, "mismatch at n=" + std::to_string(n));
    return pass(name);
}

CheckResult check_table1_rows() {
    const std::string name = "popularity table rows (n=1..11)";
    const std::map<std::string, std::vector<long long>> rows{
        {"21", {0, 1, 2, 7, 14, 38, 76, 187, 374, 874, 1748}},
        {"12", {0, 1, 4, 11, 26, 62, 134, 303, 634, 1394, 2872}},
        {"132", {0, 0, 1, 4, 10, 28, 61, 152, 318, 748, 1538}},
        {"213", {0, 0, 1, 4, 10, 28, 61, 152, 318, 748, 1538}},
        {"123", {0, 0, 1, 4, 10, 24, 53, 116, 246, 520, 1082}}};
    for (const auto& [pattern, row] : rows) {
        const auto terms = expand_perm_popularity(pattern, 11);
        for (int n = 1; n <= 11; ++n)
            if (to_ll(terms[n]) != row[n - 1])
                return fail(name, "L" + pattern + " term " + std::to_string(n) + " is " +
                                      std::to_string(to_ll(terms[n])) + ", expected " +
                                      std::to_string(row[n - 1]));
    }
    return pass(name);
}

CheckResult check_zero_popularity(int n_max) {
    const std::string name = "popularity of 231/312/321 is zero (n<=" + std::to_string(n_max) + ")";
    for (const char* pat : {"231", "312", "321"}) {
        const Word p = pattern_word(pat);
        for (int n = 0; n <= n_max; ++n)
            if (oracle_perm_popularity(p, n) != 0)
                return fail(name, std::string(pat) + " popular at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_diagonal_h21(int n_max) {
    const std::string name = "diagonal of H21 = C(2n-1,n) (n<=" + std::to_string(n_max) + ")";
    const MultiSeries s = expand_avoidance("21", {n_max, n_max, 0});
    const auto diag = s.diagonal();
    const Word p21 = pattern_word("21");
    for (int n = 1; n <= n_max; ++n) {
        if (to_ll(diag[n]) != binomial(2 * n - 1, n))
            return fail(name, "formula mismatch at n=" + std::to_string(n));
        if (to_ll(diag[n]) != oracle_avoidance(p21, n, n))
            return fail(name, "oracle mismatch at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_diagonal_h12(int n_max) {
    const std::string name = "diagonal of H12 = 1,3,n (n<=" + std::to_string(n_max) + ")";
    const MultiSeries s = expand_avoidance("12", {n_max, n_max, 0});
    const auto diag = s.diagonal();
    const Word p12 = pattern_word("12");
    for (int n = 1; n <= n_max; ++n) {
        const long long want = n == 1 ? 1 : n == 2 ? 3 : n;
        if (to_ll(diag[n]) != want)
            return fail(name, "formula mismatch at n=" + std::to_string(n));
        if (to_ll(diag[n]) != oracle_avoidance(p12, n, n))
            return fail(name, "oracle mismatch at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_popularity_k2_sequences(const std::string& fixtures_path, int n_max) {
    const std::string name = "binary popularity sequences (n<=" + std::to_string(n_max) + ")";
    const FixtureStore store = FixtureStore::load_file(fixtures_path);
    const MultiSeries g11 = expand_popularity_words("11", {n_max, 2, 0});
    const MultiSeries g21 = expand_popularity_words("21", {n_max, 2, 0});
    // popularity of 11 in S_{n,2} = A212964 term for ground-set size n+2
    const SequenceFixture* fx = store.find("A212964");
    if (!fx) return fail(name, "fixture A212964 missing");
    std::vector<long long> computed;
    for (int n = 1; n <= n_max; ++n) computed.push_back(to_ll(g11.at(n, 2, 0)));
    const PrefixReport rep = check_prefix(*fx, computed, /*first_index=*/3);  // index n+2
    if (!rep.ok || rep.compared < n_max) return fail(name, rep.message);
    // popularity of 21 in S_{n,2} = A006918(n-1): C(n+3,3)/4 odd, n(n+2)(n+4)/24 even
    for (int n = 1; n <= n_max; ++n) {
        const long long m = n - 1;
        const long long want =
            m % 2 == 1 ? binomial(m + 3, 3) / 4 : m * (m + 2) * (m + 4) / 24;
        if (to_ll(g21.at(n, 2, 0)) != want)
            return fail(name, "21-popularity mismatch at n=" + std::to_string(n));
    }
    const SequenceFixture* fx2 = store.find("A006918");
    if (!fx2) return fail(name, "fixture A006918 missing");
    std::vector<long long> computed21;
    for (int n = 1; n <= n_max; ++n) computed21.push_back(to_ll(g21.at(n, 2, 0)));
    const PrefixReport rep2 = check_prefix(*fx2, computed21, /*first_index=*/0);  // index n-1
    if (!rep2.ok || rep2.compared < n_max) return fail(name, rep2.message);
    return pass(name);
}

CheckResult check_alternating(int n_max) {
    const std::string name = "alternating counts are Catalan (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        const auto alt = alternating_faro_permutations(n);
        if (static_cast<long long>(alt.size()) != alternating_count(n))
            return fail(name, "count mismatch at n=" + std::to_string(n));
        for (const Word& w : alt) {
            const Path q = perm_to_path(w);
            for (Step st : q)
                if (st == Step::F)
                    return fail(name, "alternating image has a level step: " + format_word(w, n));
        }
        // and conversely: images without F are exactly the alternating ones
        for (const Word& w : enumerate_faro_permutations(n)) {
            const Path q = perm_to_path(w);
            const bool no_f = std::none_of(q.begin(), q.end(), [](Step s) { return s == Step::F; });
            if (no_f != is_alternating(w))
                return fail(name, "no-F characterization fails at " + format_word(w, std::max(n, 1)));
        }
    }
    return pass(name);
}

CheckResult check_derangements(int n_max) {
    const std::string name = "alternating = derangements (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        const ClassReport rep = derangement_equivalence_check(n);
        if (!rep.ok()) return fail(name, rep.violations.front());
    }
    return pass(name);
}

CheckResult check_fibonacci(int n_max) {
    const std::string name = "231/312 avoiders are Fibonacci (n<=" + std::to_string(n_max) + ")";
    for (int n = 1; n <= n_max; ++n)
        for (const char* pat : {"231", "312"})
            if (fibonacci_class_count(n, pat) != fibonacci_number(n))
                return fail(name, std::string(pat) + " count off at n=" + std::to_string(n));
    return pass(name);
}

CheckResult check_involutions(int n_max) {
    const std::string name = "231-avoiders = involutions (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        const ClassReport rep = involution_equivalence_check(n);
        if (!rep.ok()) return fail(name, rep.violations.front());
    }
    return pass(name);
}

namespace {

void for_each_involution(int n, const std::function<void(const Word&)>& visit) {
    Word perm(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        while (i < n && perm[i] != 0) ++i;
        if (i == n) {
            visit(perm);
            return;
        }
        perm[i] = i + 1;  // fixed point
        self(self, i + 1);
        perm[i] = 0;
        for (int j = i + 1; j < n; ++j) {
            if (perm[j] != 0) continue;
            perm[i] = j + 1;
            perm[j] = i + 1;
            self(self, i + 1);
            perm[i] = perm[j] = 0;
        }
    };
    rec(rec, 0);
}

long long excedances(const Word& w) {
    long long c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > static_cast<int>(i) + 1) ++c;
    return c;
}

}  // namespace

CheckResult check_foata(int n_max) {
    const std::string name = "Foata maps 321-avoiding involutions onto P_n (n<=" +
                             std::to_string(n_max) + ")";
    const Word p321{3, 2, 1};
    for (int n = 0; n <= n_max; ++n) {
        std::set<Word> images;
        bool bad = false;
        std::string detail;
        for_each_involution(n, [&](const Word& v) {
            if (bad || !avoids_classical(v, p321)) return;
            const Word f = foata(v);
            if (foata_inverse(f) != v) {
                bad = true;
                detail = "foata_inverse(foata(v)) != v for " + format_word(v, std::max(n, 1));
                return;
            }
            if (!is_faro_permutation(f)) {
                bad = true;
                detail = "image not a faro permutation: " + format_word(f, std::max(n, 1));
                return;
            }
            if (excedances(v) != count_consecutive_pattern(f, Word{2, 1})) {
                bad = true;
                detail = "excedances != descents for " + format_word(v, std::max(n, 1));
                return;
            }
            images.insert(f);
        });
        if (bad) return fail(name, detail);
        const auto perms = enumerate_faro_permutations(n);
        if (images != std::set<Word>(perms.begin(), perms.end()))
            return fail(name, "image set != P_n at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_subexcedent_counts(int n_max) {
    const std::string name = "subexcedent counts a_n*a_{n+1} (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        long long seen = 0;
        bool bad = false;
        for_each_subexcedent(n, [&](const Word& w) {
            ++seen;
            if (!is_subexcedent(w)) bad = true;
        });
        if (bad) return fail(name, "invalid word emitted at n=" + std::to_string(n));
        if (seen != subexcedent_count(n))
            return fail(name, "count mismatch at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_dumont(int n_max) {
    const std::string name = "2143-avoiding Dumont counts (n<=" + std::to_string(n_max) + ")";
    const Word p213{2, 1, 3}, p132{1, 3, 2};
    for (int n = 0; n <= n_max; ++n) {
        const ClassReport rep = dumont_count_check(n);
        if (!rep.ok()) return fail(name, rep.violations.front());
        bool bad = false;
        std::string detail;
        for_each_dumont_2143_avoiding(2 * n, [&](const Word& pi) {
            if (bad) return;
            if (!is_dumont_second_kind(pi)) {
                bad = true;
                detail = "not Dumont II";
                return;
            }
            Word evens, odds;
            for (std::size_t i = 0; i < pi.size(); ++i)
                ((i + 1) % 2 == 0 ? evens : odds).push_back(pi[i]);
            for (int v : evens)
                if (v > n) { bad = true; detail = "even positions not {1..n}"; }
            for (int v : odds)
                if (v <= n) { bad = true; detail = "odd positions not {n+1..2n}"; }
            if (!avoids_classical(evens, p213)) { bad = true; detail = "even half contains 213"; }
            if (!avoids_classical(odds, p132)) { bad = true; detail = "odd half contains 132"; }
        });
        if (bad) return fail(name, detail + " at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_path_pair_injective(int n_max) {
    const std::string name = "path-pair encoding injective (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        std::set<std::pair<std::string, std::string>> seen;
        long long total = 0;
        for_each_subexcedent(n, [&](const Word& w) {
            const auto [po, pe] = subexcedent_to_path_pair(w);
            seen.insert({po.steps, pe.steps});
            ++total;
        });
        if (static_cast<long long>(seen.size()) != total)
            return fail(name, "collision at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_path_pair_transport(int n_max) {
    const std::string name = "path-pair statistic transport (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        bool bad = false;
        std::string detail;
        for_each_subexcedent(n, [&](const Word& w) {
            if (bad) return;
            const auto [po, pe] = subexcedent_to_path_pair(w);
            const TwoDyckPath qo = nepath_to_2dyck(po), qe = nepath_to_2dyck(pe);
            if (!is_valid_2dyck(qo) || twodyck_final_height(qo) != 0) {
                bad = true;
                detail = "phi(P_o) not a height-0 2-Dyck path";
                return;
            }
            if (!is_valid_2dyck(qe) || twodyck_final_height(qe) != 1) {
                bad = true;
                detail = "phi(P_e) not a height-1 2-Dyck path";
                return;
            }
            const SubexcedentStats s = subexcedent_stats(w);
            const TwoDyckStats so = twodyck_stats(qo), se = twodyck_stats(qe);
            // a_{k+1} is even for the odd part, odd for the even part
            if (s.eOdis != so.pk0 - 1 || s.oOdis != so.pk1 || s.aOrpt != so.dd) {
                bad = true;
                detail = "odd-part stats do not transport";
                return;
            }
            if (s.eEdis != se.pk1 || s.oEdis != se.pk0 || s.aErpt != se.dd) {
                bad = true;
                detail = "even-part stats do not transport";
                return;
            }
        });
        if (bad) return fail(name, detail + " at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_equidistribution(int n_max) {
    const std::string name = "statistic equidistribution (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        const ClassReport rep = equidistribution_check(n);
        if (!rep.ok())
            return fail(name, rep.violations.front() + " at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_closed_form_counts(int n_max) {
    const std::string name = "closed-form statistic counts (n<=" + std::to_string(n_max) + ")";
    for (int n = 0; n <= n_max; ++n) {
        const StatsHistogram hist = subexcedent_histogram(n);
        const long long no = (n + 1) / 2, ne = n / 2;
        long long total = 0;
        // every admissible tuple, including those the histogram misses (count 0)
        for (long long r1 = 0; r1 <= std::max(no - 1, 0LL); ++r1)
            for (long long r2 = 0; r1 + r2 <= std::max(no - 1, 0LL); ++r2)
                for (long long r4 = 0; r4 <= ne; ++r4)
                    for (long long r5 = 0; r4 + r5 <= ne; ++r5) {
                        const long long r3 = (n == 0 ? 0 : no - 1 - r1 - r2);
                        const long long r6 = ne - r4 - r5;
                        if (r3 < 0) continue;
                        const std::array<long long, 6> r{r1, r2, r3, r4, r5, r6};
                        const long long cf = closed_form_count(n, r);
                        const auto it = hist.find(r);
                        const long long brute = it == hist.end() ? 0 : it->second;
                        if (cf != brute)
                            return fail(name, "mismatch at n=" + std::to_string(n) +
                                                  " r=(" + std::to_string(r1) + "," +
                                                  std::to_string(r2) + "," + std::to_string(r3) +
                                                  "," + std::to_string(r4) + "," +
                                                  std::to_string(r5) + "," + std::to_string(r6) +
                                                  "): closed form " + std::to_string(cf) +
                                                  ", tabulated " + std::to_string(brute));
                        total += cf;
                    }
        if (total != subexcedent_count(n))
            return fail(name, "simplex sum != a_n*a_{n+1} at n=" + std::to_string(n));
    }
    return pass(name);
}

CheckResult check_twodyck_tabulation(int steps_max) {
    const std::string name = "2-Dyck tabulation (<=" + std::to_string(steps_max) + " steps)";
    // enumerate all first-quadrant u/d paths of each length, split by final height
    for (int len = 0; len <= steps_max; ++len) {
        std::map<std::array<long long, 3>, long long> tri;  // height 0
        std::map<std::array<long long, 2>, long long> bi;   // height 1
        TwoDyckPath p;
        auto rec = [&](auto&& self, long long h) -> void {
            if (static_cast<int>(p.steps.size()) == len) {
                const TwoDyckStats s = twodyck_stats(p);
                if (h == 0) ++tri[{s.pk0 - 1, s.pk1, s.dd}];
                if (h == 1) ++bi[{s.pk0, s.pk1}];
                return;
            }
            p.steps.push_back('u');
            self(self, h + 1);
            p.steps.pop_back();
            if (h >= 2) {
                p.steps.push_back('d');
                self(self, h - 2);
                p.steps.pop_back();
            }
        };
        rec(rec, 0);
        std::array<int, 3> perm{0, 1, 2};
        do {
            for (const auto& [key, cnt] : tri) {
                const std::array<long long, 3> img{key[perm[0]], key[perm[1]], key[perm[2]]};
                const auto it = tri.find(img);
                if (it == tri.end() || it->second != cnt)
                    return fail(name, "tristatistic not invariant at " + std::to_string(len) +
                                          " steps");
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (const auto& [key, cnt] : bi) {
            const auto it = bi.find({key[1], key[0]});
            if (it == bi.end() || it->second != cnt)
                return fail(name, "bistatistic not symmetric at " + std::to_string(len) + " steps");
        }
    }
    return pass(name);
}

CheckResult check_oeis_fixtures(const std::string& fixtures_path) {
    const std::string name = "sequence fixtures";
    const FixtureStore store = FixtureStore::load_file(fixtures_path);
    auto require = [&](const std::string& id, std::span<const long long> computed,
                       long long first_index) -> std::string {
        const SequenceFixture* fx = store.find(id);
        if (!fx) return "fixture " + id + " missing";
        const PrefixReport rep = check_prefix(*fx, computed, first_index);
        if (!rep.ok) return rep.message;
        return "";
    };

    {
        std::vector<long long> catalans;
        for (int n = 0; n <= 12; ++n) catalans.push_back(catalan(n));
        if (auto m = require("A000108", catalans, 0); !m.empty()) return fail(name, m);
    }
    {
        std::vector<long long> bn;
        for (int n = 0; n <= 14; ++n) bn.push_back(dispersed_count(n));
        if (auto m = require("A001405", bn, 0); !m.empty()) return fail(name, m);
    }
    {
        // triangle of dispersed-path peak counts, flattened by rows
        std::vector<long long> tri;
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n / 2; ++k) tri.push_back(dispersed_with_peaks_count(n, k));
        if (auto m = require("A124428", tri, 0); !m.empty()) return fail(name, m);
    }
    {
        std::vector<long long> a;
        for (int m = 0; m <= 13; ++m) a.push_back(a047749(m));
        if (auto m = require("A047749", a, 0); !m.empty()) return fail(name, m);
    }
    {
        std::vector<long long> central;
        for (int n = 0; n <= 8; ++n) central.push_back(binomial(2 * n + 1, n + 1));
        if (auto m = require("A001700", central, 0); !m.empty()) return fail(name, m);
    }
    {
        // direct tabulation of the 3-subset definition: all pairwise sums
        // a1+a2 (a1 <= a2) distinct, ground set [1,m]
        std::vector<long long> counts;
        for (int m = 1; m <= 14; ++m) {
            long long c = 0;
            for (int a = 1; a <= m; ++a)
                for (int b = a + 1; b <= m; ++b)
                    for (int d = b + 1; d <= m; ++d) {
                        const int sums[] = {a + a, a + b, a + d, b + b, b + d, d + d};
                        std::set<int> uniq(std::begin(sums), std::end(sums));
                        if (uniq.size() == 6) ++c;
                    }
            counts.push_back(c);
        }
        if (auto m = require("A212964", counts, 1); !m.empty()) return fail(name, m);
    }
    {
        std::vector<long long> a6918;
        for (long long m = 0; m <= 12; ++m)
            a6918.push_back(m % 2 == 1 ? binomial(m + 3, 3) / 4 : m * (m + 2) * (m + 4) / 24);
        if (auto m = require("A006918", a6918, 0); !m.empty()) return fail(name, m);
    }
    {
        const auto terms = expand_perm_popularity("21", 11);
        std::vector<long long> l21;
        for (int n = 1; n <= 11; ++n) l21.push_back(to_ll(terms[n]));
        if (auto m = require("A107373", l21, 1); !m.empty()) return fail(name, m);
    }
    return pass(name, std::to_string(store.ids().size()) + " fixtures");
}

namespace {

using CheckFn = std::function<CheckResult()>;

std::vector<CheckResult> run_parallel(const std::vector<CheckFn>& checks, int workers) {
    std::vector<CheckResult> results(checks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) results[i] = checks[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            results[i] = checks[i]();
        }
    };
    std::vector<std::future<void>> futures;
    for (int t = 0; t < workers; ++t)
        futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
    return results;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"bijections", "transport", "series-vs-oracle", "classes", "equidistribution", "oeis"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<CheckFn> checks;
    if (suite == "bijections") {
        checks = {
            [] { return check_word_cardinalities(10, 5); },
            [] { return check_perm_cardinalities(12); },
            [] { return check_dispersed_peak_cardinalities(12, 5); },
            [] { return check_f_bijection(8, 4); },
            [] { return check_fig2_instance(); },
            [] { return check_g_bijection(10); },
            [] { return check_image_characterizations(6, 4); },
            [] { return check_reverse_complement(6, 4); },
            [opt] { return check_random_roundtrips(opt.seed, 100); },
        };
    } else if (suite == "transport") {
        checks = {
            [] { return check_transport_length2(8, 4); },
            [] { return check_transport_length3(8, 4); },
            [] { return check_transport_perm(10); },
            [] { return check_peaks_preserved(8, 4); },
        };
    } else if (suite == "series-vs-oracle") {
        for (const char* p : {"11", "21", "12"}) {
            checks.push_back([p] { return check_distribution_series(p, 8, 4); });
            checks.push_back([p] { return check_popularity_series(p, 8, 4); });
            checks.push_back([p] { return check_avoidance_series(p, 8, 4); });
        }
        for (const char* p : {"21", "12", "132", "213", "123"}) {
            checks.push_back([p] { return check_perm_distribution_series(p, 10); });
            checks.push_back([p] { return check_perm_popularity_series(p, 10); });
        }
        checks.push_back([] { return check_table1_rows(); });
        checks.push_back([] { return check_zero_popularity(11); });
        checks.push_back([] { return check_diagonal_h21(8); });
        checks.push_back([] { return check_diagonal_h12(10); });
        checks.push_back([opt] { return check_popularity_k2_sequences(opt.fixtures_path, 12); });
    } else if (suite == "classes") {
        checks = {
            [] { return check_alternating(14); },
            [] { return check_derangements(10); },
            [] { return check_fibonacci(12); },
            [] { return check_involutions(12); },
            [] { return check_foata(9); },
            [] { return check_subexcedent_counts(8); },
            [] { return check_dumont(5); },
            [] { return check_path_pair_injective(8); },
            [] { return check_path_pair_transport(10); },
        };
    } else if (suite == "equidistribution") {
        checks = {
            [] { return check_equidistribution(10); },
            [] { return check_closed_form_counts(10); },
            [] { return check_twodyck_tabulation(12); },
        };
    } else if (suite == "oeis") {
        checks = {
            [opt] { return check_oeis_fixtures(opt.fixtures_path); },
        };
    } else if (suite == "all") {
        std::vector<CheckResult> all;
        for (const std::string& s : suite_names()) {
            auto part = run_suite(s, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return run_parallel(checks, opt.workers);
}

}  // namespace faro
