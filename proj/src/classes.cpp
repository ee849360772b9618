#include "faro/classes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "faro/paths.hpp"

namespace faro {

bool is_alternating(std::span<const int> perm) {
    if (perm.size() % 2 != 0) return false;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
        if (i % 2 == 0 ? perm[i] <= perm[i + 1] : perm[i] >= perm[i + 1]) return false;
    }
    return true;
}

std::vector<Word> alternating_faro_permutations(int n) {
    std::vector<Word> out;
    for (const Word& w : enumerate_faro_permutations(n))
        if (is_alternating(w)) out.push_back(w);
    return out;
}

long long alternating_count(int n) {
    if (n % 2 != 0) return 0;
    return catalan(n / 2);
}

bool is_derangement(std::span<const int> perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == static_cast<int>(i) + 1) return false;
    return true;
}

bool is_involution(std::span<const int> perm) {
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const int j = perm[i];
        if (j < 1 || j > static_cast<int>(perm.size())) return false;
        if (perm[j - 1] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

ClassReport derangement_equivalence_check(int n) {
    ClassReport rep;
    rep.name = "alternating = derangements (n=" + std::to_string(n) + ")";
    for (const Word& w : enumerate_faro_permutations(n)) {
        ++rep.objects;
        if (is_alternating(w) != is_derangement(w))
            rep.violations.push_back(format_word(w, n));
    }
    return rep;
}

long long fibonacci_number(int n) {
    // f_1 = 1, f_2 = 2, f_n = f_{n-1} + f_{n-2}; f_0 = 1 so that f_2 = f_1 + f_0
    long long a = 1, b = 1;
    for (int i = 1; i <= n; ++i) {
        const long long c = a + b;
        a = b;
        b = c;
    }
    return a;
}

long long fibonacci_class_count(int n, const std::string& pattern) {
    if (pattern != "231" && pattern != "312")
        throw std::invalid_argument("fibonacci_class_count: pattern must be 231 or 312");
    const Word p = parse_word(pattern, 9);
    long long count = 0;
    for (const Word& w : enumerate_faro_permutations(n))
        if (avoids_classical(w, p)) ++count;
    return count;
}

ClassReport involution_equivalence_check(int n) {
    ClassReport rep;
    rep.name = "231-avoiders = involutions (n=" + std::to_string(n) + ")";
    const Word p231{2, 3, 1};
    for (const Word& w : enumerate_faro_permutations(n)) {
        ++rep.objects;
        if (avoids_classical(w, p231) != is_involution(w))
            rep.violations.push_back(format_word(w, n));
    }
    return rep;
}

// ---- subexcedent words -----------------------------------------------------

bool is_subexcedent(std::span<const int> w) {
    // w_i <= i-1 at 1-based position i, letters 0-based
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < 0 || w[i] > static_cast<int>(i)) return false;
    // faro condition: both parity subsequences nondecreasing
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] > w[i + 2]) return false;
    return true;
}

void for_each_subexcedent(int n, const std::function<void(const Word&)>& visit) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    Word w;
    w.reserve(n);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n) {
            visit(w);
            return;
        }
        const int i = static_cast<int>(w.size());  // next letter sits at 1-based position i+1
        const int lo = i >= 2 ? w[i - 2] : 0;
        for (int c = lo; c <= i; ++c) {
            w.push_back(c);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
}

std::vector<Word> enumerate_subexcedent(int n) {
    std::vector<Word> out;
    for_each_subexcedent(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

long long a047749(int m) {
    if (m < 0) throw std::invalid_argument("a047749: negative index");
    if (m % 2 == 0) {
        const int half = m / 2;
        return binomial(3LL * half, half) / (2LL * half + 1);
    }
    const int half = (m - 1) / 2;
    return binomial(3LL * half + 1, half) / (half + 1);
}

long long subexcedent_count(int n) {
    return a047749(n) * a047749(n + 1);
}

std::pair<Word, Word> parity_split(std::span<const int> w) {
    Word odd, even;
    for (std::size_t i = 0; i < w.size(); ++i)
        (i % 2 == 0 ? odd : even).push_back(w[i]);
    return {std::move(odd), std::move(even)};
}

namespace {

NEPath encode_ne(const Word& a, int last) {
    NEPath p;
    int h = 0;
    for (int v : a) {
        p.steps.append(static_cast<std::size_t>(v - h), 'N');
        p.steps.push_back('E');
        h = v;
    }
    p.steps.append(static_cast<std::size_t>(last - h), 'N');
    return p;
}

}  // namespace

std::pair<NEPath, NEPath> subexcedent_to_path_pair(std::span<const int> w) {
    if (!is_subexcedent(w))
        throw std::invalid_argument("subexcedent_to_path_pair: not a subexcedent faro word");
    const auto [odd, even] = parity_split(w);
    const int ko = static_cast<int>(odd.size());
    const int ke = static_cast<int>(even.size());
    return {encode_ne(odd, 2 * ko), encode_ne(even, 2 * ke + 1)};
}

TwoDyckPath nepath_to_2dyck(const NEPath& p) {
    TwoDyckPath q;
    q.steps.reserve(p.steps.size());
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
        q.steps.push_back(*it == 'N' ? 'u' : 'd');
    return q;
}

long long twodyck_final_height(const TwoDyckPath& p) {
    long long h = 0;
    for (char c : p.steps) h += c == 'u' ? 1 : -2;
    return h;
}

bool is_valid_2dyck(const TwoDyckPath& p) {
    long long h = 0;
    for (char c : p.steps) {
        if (c == 'u') ++h;
        else if (c == 'd') h -= 2;
        else return false;
        if (h < 0) return false;
    }
    return h == 0 || h == 1;
}

TwoDyckStats twodyck_stats(const TwoDyckPath& p) {
    TwoDyckStats s;
    long long h = 0;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        h += p.steps[i] == 'u' ? 1 : -2;
        if (i + 1 < p.steps.size()) {
            if (p.steps[i] == 'u' && p.steps[i + 1] == 'd')
                (h % 2 == 0 ? s.pk0 : s.pk1) += 1;  // apex height = height after the u
            if (p.steps[i] == 'd' && p.steps[i + 1] == 'd') s.dd += 1;
        }
    }
    return s;
}

SubexcedentStats subexcedent_stats(std::span<const int> w) {
    if (!is_subexcedent(w))
        throw std::invalid_argument("subexcedent_stats: not a subexcedent faro word");
    const auto [odd, even] = parity_split(w);
    SubexcedentStats s;
    std::set<int> dis_o(odd.begin(), odd.end());
    for (int v : dis_o) {
        if (v == 0) continue;  // the odd part always starts with 0
        (v % 2 == 0 ? s.eOdis : s.oOdis) += 1;
    }
    for (std::size_t i = 0; i + 1 < odd.size(); ++i)
        if (odd[i] == odd[i + 1]) ++s.aOrpt;
    std::set<int> dis_e(even.begin(), even.end());
    for (int v : dis_e) (v % 2 == 0 ? s.eEdis : s.oEdis) += 1;
    for (std::size_t i = 0; i + 1 < even.size(); ++i)
        if (even[i] == even[i + 1]) ++s.aErpt;
    return s;
}

StatsHistogram subexcedent_histogram(int n) {
    StatsHistogram hist;
    for_each_subexcedent(n, [&](const Word& w) {
        ++hist[subexcedent_stats(w).as_array()];
    });
    return hist;
}

ClassReport equidistribution_check(int n) {
    ClassReport rep;
    rep.name = "equidistribution (n=" + std::to_string(n) + ")";
    // joint histograms over the word class
    std::map<std::array<long long, 3>, long long> tri;
    std::map<std::array<long long, 2>, long long> bi;
    for_each_subexcedent(n, [&](const Word& w) {
        ++rep.objects;
        const SubexcedentStats s = subexcedent_stats(w);
        ++tri[{s.eOdis, s.oOdis, s.aOrpt}];
        ++bi[{s.eEdis, s.oEdis}];
    });
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        for (const auto& [key, cnt] : tri) {
            const std::array<long long, 3> img{key[perm[0]], key[perm[1]], key[perm[2]]};
            const auto it = tri.find(img);
            if (it == tri.end() || it->second != cnt) {
                rep.violations.push_back("tristatistic not invariant under permutation (" +
                                         std::to_string(perm[0]) + std::to_string(perm[1]) +
                                         std::to_string(perm[2]) + ")");
                break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& [key, cnt] : bi) {
        const auto it = bi.find({key[1], key[0]});
        if (it == bi.end() || it->second != cnt) {
            rep.violations.push_back("bistatistic not symmetric");
            break;
        }
    }
    return rep;
}

long long closed_form_count(int n, const std::array<long long, 6>& r) {
    if (n < 0) throw std::invalid_argument("closed_form_count: negative length");
    for (long long v : r)
        if (v < 0) throw std::invalid_argument("closed_form_count: negative statistic");
    const long long no = (n + 1) / 2, ne = n / 2;
    if (n == 0) {
        return (r == std::array<long long, 6>{0, 0, 0, 0, 0, 0}) ? 1 : 0;
    }
    if (r[0] + r[1] + r[2] != no - 1 || r[3] + r[4] + r[5] != ne)
        throw std::invalid_argument("closed_form_count: statistics violate the simplex constraints");
    // odd part: (1/n_o) C(n_o,r1) C(n_o,r2) C(n_o,r3)
    const long long odd_num = binomial(no, r[0]) * binomial(no, r[1]) * binomial(no, r[2]);
    if (odd_num % no != 0)
        throw std::domain_error("closed_form_count: odd factor not an integer");
    const long long odd = odd_num / no;
    // even part: ((r4+r5)/(n_e(n_e+1))) C(n_e+1,r4) C(n_e+1,r5) C(n_e,r6)
    long long even = 1;  // empty even part contributes the empty product
    if (ne >= 1) {
        const long long num =
            (r[3] + r[4]) * binomial(ne + 1, r[3]) * binomial(ne + 1, r[4]) * binomial(ne, r[5]);
        const long long den = ne * (ne + 1);
        if (num % den != 0)
            throw std::domain_error("closed_form_count: even factor not an integer");
        even = num / den;
    }
    return odd * even;
}

// ---- Dumont permutations ----------------------------------------------------

bool is_dumont_second_kind(std::span<const int> perm) {
    if (perm.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const int pos = static_cast<int>(i) + 1;
        if (pos % 2 == 1 && perm[i] < pos) return false;
        if (pos % 2 == 0 && perm[i] > pos - 1) return false;
    }
    return true;
}

void for_each_dumont_2143_avoiding(int two_n, const std::function<void(const Word&)>& visit) {
    if (two_n < 0 || two_n % 2 != 0)
        throw std::invalid_argument("dumont enumeration: length must be even and nonnegative");
    if (two_n > 14)
        throw std::invalid_argument("dumont enumeration: refused beyond length 14");
    const Word p2143{2, 1, 4, 3};
    std::vector<bool> used(two_n + 1, false);
    Word perm;
    perm.reserve(two_n);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(perm.size()) == two_n) {
            if (avoids_classical(perm, p2143)) visit(perm);
            return;
        }
        const int pos = static_cast<int>(perm.size()) + 1;
        const int lo = pos % 2 == 1 ? pos : 1;
        const int hi = pos % 2 == 1 ? two_n : pos - 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[v]) continue;
            used[v] = true;
            perm.push_back(v);
            self(self);
            perm.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
}

std::vector<Word> enumerate_dumont_2143_avoiding(int two_n) {
    std::vector<Word> out;
    for_each_dumont_2143_avoiding(two_n, [&](const Word& w) { out.push_back(w); });
    return out;
}

ClassReport dumont_count_check(int n) {
    ClassReport rep;
    rep.name = "dumont count (n=" + std::to_string(n) + ")";
    long long dumont = 0;
    for_each_dumont_2143_avoiding(2 * n, [&](const Word&) { ++dumont; });
    rep.objects = dumont;
    const long long expected = subexcedent_count(n);
    long long subexc = 0;
    for_each_subexcedent(n, [&](const Word&) { ++subexc; });
    if (dumont != expected)
        rep.violations.push_back("dumont count " + std::to_string(dumont) + " != a_n*a_{n+1} = " +
                                 std::to_string(expected));
    if (subexc != expected)
        rep.violations.push_back("subexcedent count " + std::to_string(subexc) +
                                 " != a_n*a_{n+1} = " + std::to_string(expected));
    return rep;
}

}  // namespace faro
