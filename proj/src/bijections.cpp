#include "faro/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "faro/path_pattern.hpp"

namespace faro {

RunEncoding t_encoding(std::span<const int> w, int arity) {
    if (arity < 1) throw std::invalid_argument("t_encoding: arity must be >= 1");
    if (!is_faro_word(w, arity)) throw std::invalid_argument("t_encoding: not a faro word");
    RunEncoding enc;
    enc.arity = arity;
    enc.t.assign(3 * (arity - 1) + 1, 0);
    for (int i = 1; i <= 3 * (arity - 1) - 1; ++i)
        if (i % 3 != 0) enc.t[i] = 1;
    for (const Block& b : block_decomposition(w)) {
        if (b.kind == Block::Kind::singleton) {
            enc.t[3 * (b.hi - 1)] += 1;
        } else {
            enc.t[3 * (b.hi - 1) - 1] += 1;  // pairs (x,y), y<x, at the D-run of x
            enc.t[3 * (b.lo - 1) + 1] += 1;  // pairs (y,x), y>x, at the U-run of x
        }
    }
    return enc;
}

Path faro_to_path(std::span<const int> w, int arity) {
    return decode_runs(t_encoding(w, arity));
}

Word path_to_faro(const Path& p, int arity) {
    if (arity < 1) throw std::invalid_argument("path_to_faro: arity must be >= 1");
    if (!is_dispersed_dyck(p))
        throw std::invalid_argument("path_to_faro: not a dispersed Dyck path");
    if (count_peaks(p) != arity - 1)
        throw std::invalid_argument("path_to_faro: peak count must be arity-1");

    const std::size_t n = p.size();
    // u_runs_before[i]: number of U-runs that end strictly before position i;
    // u_run_of[i]: 1-based index of the U-run containing position i (0 if none).
    std::vector<int> u_runs_before(n + 1, 0), u_run_of(n, 0);
    std::vector<std::vector<std::size_t>> d_runs;  // positions per D-run
    {
        int completed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u_runs_before[i] = completed;
            if (p[i] == Step::U) {
                u_run_of[i] = completed + 1;
                if (i + 1 == n || p[i + 1] != Step::U) ++completed;
            } else if (p[i] == Step::D) {
                if (i == 0 || p[i - 1] != Step::D) d_runs.emplace_back();
                d_runs.back().push_back(i);
            }
        }
        u_runs_before[n] = completed;
    }

    // mark every D preceded by a U; the rest start unmarked
    std::vector<bool> marked(n, false);
    for (std::size_t i = 1; i < n; ++i)
        if (p[i] == Step::D && p[i - 1] == Step::U) marked[i] = true;
    // per D-run cursor to the first unmarked step
    std::vector<std::size_t> cursor(d_runs.size(), 0);
    auto first_unmarked_run = [&]() -> int {
        for (std::size_t r = 0; r < d_runs.size(); ++r) {
            while (cursor[r] < d_runs[r].size() && marked[d_runs[r][cursor[r]]]) ++cursor[r];
            if (cursor[r] < d_runs[r].size()) return static_cast<int>(r);
        }
        return -1;
    };

    Word out;
    std::size_t i = 0;
    while (i < n) {
        switch (p[i]) {
            case Step::D:
                ++i;
                break;
            case Step::F:
                // singleton letter = 1 + number of U-runs already completed
                out.push_back(u_runs_before[i] + 1);
                ++i;
                break;
            case Step::U:
                if (i + 1 < n && p[i + 1] == Step::D) {
                    i += 2;  // skip the peak
                    break;
                }
                {
                    const int small = u_run_of[i];
                    const int run = first_unmarked_run();
                    if (run < 0)
                        throw std::invalid_argument("path_to_faro: malformed path (no unmarked D)");
                    marked[d_runs[run][cursor[run]]] = true;
                    const int big = run + 2;  // the (j-1)-th D-run belongs to letter j
                    out.push_back(big);
                    out.push_back(small);
                }
                ++i;
                break;
        }
    }
    return out;
}

Path perm_to_path(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    if (!is_faro_permutation(perm))
        throw std::invalid_argument("perm_to_path: not a faro permutation");
    if (n == 0) return {};
    const Path f = faro_to_path(perm, n);
    // the image avoids UDUD, so UD occurrences are pairwise disjoint
    std::vector<bool> drop(f.size(), false);
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] == Step::U && f[i + 1] == Step::D) drop[i] = drop[i + 1] = true;
    Path q;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!drop[i]) q.push_back(f[i]);
    return q;
}

Word path_to_perm(const Path& q) {
    if (!is_dispersed_dyck(q))
        throw std::invalid_argument("path_to_perm: not a dispersed Dyck path");
    const int n = static_cast<int>(q.size());
    if (n == 0) return {};
    Path full;
    full.reserve(3 * q.size() - 2);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) {
            full.push_back(Step::U);
            full.push_back(Step::D);
        }
        full.push_back(q[i]);
    }
    return path_to_faro(full, n);
}

bool image_is_surjective_word(const Path& p) {
    const Path udud = parse_path("UDUD");
    for (std::size_t i = 0; i + 4 <= p.size(); ++i)
        if (std::equal(udud.begin(), udud.end(), p.begin() + i)) return false;
    if (p.size() >= 2 && p[0] == Step::U && p[1] == Step::D) return false;
    if (p.size() >= 2 && p[p.size() - 2] == Step::U && p[p.size() - 1] == Step::D) return false;
    return true;
}

bool image_is_injective_word(const Path& p) {
    static const char* forbidden[] = {"FF", "DDD", "UUU", "DDF", "FUU", "DDUU"};
    for (const char* f : forbidden) {
        const Path pat = parse_path(f);
        for (std::size_t i = 0; i + pat.size() <= p.size(); ++i)
            if (std::equal(pat.begin(), pat.end(), p.begin() + i)) return false;
    }
    return true;
}

bool word_is_surjective(std::span<const int> w, int arity) {
    std::vector<bool> seen(arity + 1, false);
    for (int x : w) {
        if (x < 1 || x > arity) throw std::domain_error("letter outside [1,arity]");
        seen[x] = true;
    }
    for (int x = 1; x <= arity; ++x)
        if (!seen[x]) return false;
    return true;
}

bool word_is_injective(std::span<const int> w) {
    std::vector<int> copy(w.begin(), w.end());
    std::sort(copy.begin(), copy.end());
    return std::adjacent_find(copy.begin(), copy.end()) == copy.end();
}

std::vector<std::vector<int>> standard_cycle_form(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n + 1, false);
    for (int x : perm) {
        if (x < 1 || x > n || seen[x])
            throw std::invalid_argument("standard_cycle_form: not a permutation of [1,n]");
        seen[x] = true;
    }
    std::vector<std::vector<int>> cycles;
    std::vector<bool> done(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (done[start]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            cyc.push_back(x);
            done[x] = true;
            x = perm[x - 1];
        } while (x != start);
        // rotate so the maximum leads
        const auto mx = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mx, cyc.end());
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cycles;
}

Word foata(std::span<const int> perm) {
    Word out;
    for (const auto& cyc : standard_cycle_form(perm))
        out.insert(out.end(), cyc.begin(), cyc.end());
    return out;
}

Word foata_inverse(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    std::vector<bool> seen(n + 1, false);
    for (int x : w) {
        if (x < 1 || x > n || seen[x])
            throw std::invalid_argument("foata_inverse: not a permutation of [1,n]");
        seen[x] = true;
    }
    Word perm(n, 0);
    std::size_t i = 0;
    while (i < w.size()) {
        // cut before each left-to-right maximum: segment = one cycle
        std::size_t j = i + 1;
        while (j < w.size() && w[j] < w[i]) ++j;
        for (std::size_t t = i; t + 1 < j; ++t) perm[w[t] - 1] = w[t + 1];
        perm[w[j - 1] - 1] = w[i];
        i = j;
    }
    return perm;
}

namespace {

Path lit(const char* s) { return parse_path(s); }

PatternPiece group(const char* body, Quant q) { return PatternGroup{parse_path(body), q}; }

using Pieces = std::vector<PatternPiece>;

long long cnt(const Path& p, const Pieces& pieces) { return count_pieces(p, pieces); }

long long word_count(const Word& w, std::initializer_list<int> pat) {
    return count_consecutive_pattern(w, std::vector<int>(pat));
}

void expect(TransportReport& rep, bool cond, const Word& w, int arity, const char* what) {
    if (!cond)
        rep.violations.push_back(format_word(w, arity) + ": " + what);
}

}  // namespace

TransportReport statistic_transport_check(int n, int k, TransportTheorem which) {
    TransportReport rep;
    const Pieces FF{lit("FF")}, UU{lit("UU")}, DD{lit("DD")};
    const Pieces five_12[] = {
        {lit("DD"), group("UD", Quant::star), lit("UU")},
        {lit("DD"), group("UD", Quant::star), lit("D")},
        {lit("DD"), group("UD", Quant::star), lit("F")},
        {lit("F"), group("UD", Quant::plus), lit("F")},
        {lit("F"), group("UD", Quant::star), lit("UU")},
    };

    switch (which) {
        case TransportTheorem::length2_f: {
            rep.which = "length2-f";
            for_each_faro_word(n, k, [&](const Word& w) {
                ++rep.objects_checked;
                const Path p = faro_to_path(w, k);
                expect(rep, word_count(w, {1, 1}) == cnt(p, FF), w, k, "11 != FF");
                const long long uu = cnt(p, UU);
                expect(rep, word_count(w, {2, 1}) == uu, w, k, "21 != UU");
                expect(rep, uu == cnt(p, DD), w, k, "UU != DD");
                long long sum = 0;
                for (const Pieces& pat : five_12) sum += cnt(p, pat);
                const long long twelve = word_count(w, {1, 2});
                expect(rep, twelve == sum, w, k, "12 != five-pattern sum");
                if (n >= 1)
                    expect(rep, twelve == n - 1 - uu - cnt(p, FF), w, k, "12 != n-1-UU-FF");
            });
            break;
        }
        case TransportTheorem::length3_f: {
            rep.which = "length3-f";
            const Pieces p111{lit("FFF")};
            const Pieces p112[] = {{lit("FF"), group("UD", Quant::plus), lit("F")},
                                   {lit("FF"), group("UD", Quant::star), lit("UU")}};
            const Pieces p122[] = {{lit("F"), group("UD", Quant::plus), lit("FF")},
                                   {lit("DD"), group("UD", Quant::star), lit("FF")}};
            const Pieces p121[] = {{lit("FUU")}, {lit("UUU")}};
            const Pieces p212[] = {{lit("DDF")}, {lit("DDD")}};
            const Pieces p132[] = {{lit("F"), group("UD", Quant::plus), lit("UU")},
                                   {lit("U"), group("UD", Quant::plus), lit("UU")},
                                   {lit("DD"), group("UD", Quant::star), lit("UU")}};
            const Pieces p213[] = {{lit("DD"), group("UD", Quant::plus), lit("F")},
                                   {lit("DD"), group("UD", Quant::plus), lit("D")},
                                   {lit("DD"), group("UD", Quant::star), lit("UU")}};
            const Pieces p123[] = {
                {lit("DD"), group("UD", Quant::star), lit("F"), group("UD", Quant::star), lit("UU")},
                {lit("DD"), group("UD", Quant::star), lit("F"), group("UD", Quant::plus), lit("F")},
                {lit("F"), group("UD", Quant::plus), lit("F"), group("UD", Quant::star), lit("UU")},
                {lit("F"), group("UD", Quant::plus), lit("F"), group("UD", Quant::plus), lit("F")}};
            for_each_faro_word(n, k, [&](const Word& w) {
                ++rep.objects_checked;
                const Path p = faro_to_path(w, k);
                auto sum = [&](std::span<const Pieces> pats) {
                    long long s = 0;
                    for (const Pieces& pat : pats) s += cnt(p, pat);
                    return s;
                };
                expect(rep, word_count(w, {1, 1, 1}) == cnt(p, p111), w, k, "111 != FFF");
                expect(rep, word_count(w, {1, 1, 2}) == sum(p112), w, k, "112 identity");
                expect(rep, word_count(w, {1, 2, 2}) == sum(p122), w, k, "122 identity");
                expect(rep, word_count(w, {1, 2, 1}) == sum(p121), w, k, "121 identity");
                expect(rep, word_count(w, {2, 1, 2}) == sum(p212), w, k, "212 identity");
                expect(rep, word_count(w, {1, 3, 2}) == sum(p132), w, k, "132 identity");
                expect(rep, word_count(w, {2, 1, 3}) == sum(p213), w, k, "213 identity");
                expect(rep, word_count(w, {1, 2, 3}) == sum(p123), w, k, "123 identity");
                expect(rep, word_count(w, {2, 1, 1}) == 0, w, k, "211 not zero");
                expect(rep, word_count(w, {2, 2, 1}) == 0, w, k, "221 not zero");
                expect(rep, word_count(w, {2, 3, 1}) == 0, w, k, "231 not zero");
                expect(rep, word_count(w, {3, 1, 2}) == 0, w, k, "312 not zero");
                expect(rep, word_count(w, {3, 2, 1}) == 0, w, k, "321 not zero");
            });
            break;
        }
        case TransportTheorem::perm_g: {
            rep.which = "perm-g";
            const Pieces U{lit("U")};
            const Pieces g12[] = {{lit("DU")}, {lit("DD")}, {lit("DF")}, {lit("FF")}, {lit("FU")}};
            const Pieces g132[] = {{lit("FU")}, {lit("UU")}, {lit("DU")}};
            const Pieces g213[] = {{lit("DF")}, {lit("DD")}, {lit("DU")}};
            const Pieces g123[] = {{lit("DFU")}, {lit("DFF")}, {lit("FFU")}, {lit("FFF")}};
            for (const Word& w : enumerate_faro_permutations(n)) {
                ++rep.objects_checked;
                const Path q = perm_to_path(w);
                auto sum = [&](std::span<const Pieces> pats) {
                    long long s = 0;
                    for (const Pieces& pat : pats) s += cnt(q, pat);
                    return s;
                };
                const long long u = cnt(q, U);
                expect(rep, word_count(w, {2, 1}) == u, w, n, "21 != U");
                expect(rep, word_count(w, {1, 2}) == sum(g12), w, n, "12 identity");
                if (n >= 1)
                    expect(rep, word_count(w, {1, 2}) == n - 1 - u, w, n, "12 != n-1-U");
                expect(rep, word_count(w, {1, 3, 2}) == sum(g132), w, n, "132 identity");
                expect(rep, word_count(w, {2, 1, 3}) == sum(g213), w, n, "213 identity");
                const long long c123 = word_count(w, {1, 2, 3});
                expect(rep, c123 == sum(g123), w, n, "123 identity");
                if (n >= 2) {
                    const long long rhs = n - 2 - cnt(q, Pieces{lit("FU")}) - cnt(q, Pieces{lit("UU")}) -
                                          2 * cnt(q, Pieces{lit("DU")}) - cnt(q, Pieces{lit("DF")}) -
                                          cnt(q, Pieces{lit("DD")});
                    expect(rep, c123 == rhs, w, n, "123 linear identity");
                }
                expect(rep, word_count(w, {2, 3, 1}) == 0, w, n, "231 not zero");
                expect(rep, word_count(w, {3, 1, 2}) == 0, w, n, "312 not zero");
                expect(rep, word_count(w, {3, 2, 1}) == 0, w, n, "321 not zero");
            }
            break;
        }
    }
    return rep;
}

}  // namespace faro
