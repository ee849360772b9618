#include "faro/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace faro {

namespace {

void check_arity(int arity) {
    if (arity < 0) throw std::invalid_argument("arity must be nonnegative");
}

bool nondecreasing(std::span<const int> w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) return false;
    return true;
}

}  // namespace

bool is_faro_word(std::span<const int> letters, int arity) {
    check_arity(arity);
    for (int x : letters)
        if (x < 1 || x > arity) throw std::domain_error("letter outside [1,arity]");
    for (std::size_t i = 0; i + 2 < letters.size(); ++i)
        if (letters[i] > letters[i + 2]) return false;
    return true;
}

Word faro_shuffle(std::span<const int> u, std::span<const int> v) {
    const auto du = static_cast<long long>(u.size()) - static_cast<long long>(v.size());
    if (du < 0 || du > 1)
        throw std::invalid_argument("faro_shuffle: need 0 <= |u|-|v| <= 1");
    if (!nondecreasing(u) || !nondecreasing(v))
        throw std::invalid_argument("faro_shuffle: inputs must be nondecreasing");
    Word w;
    w.reserve(u.size() + v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        w.push_back(u[i]);
        if (i < v.size()) w.push_back(v[i]);
    }
    return w;
}

std::pair<Word, Word> deinterleave(std::span<const int> w) {
    Word u, v;
    for (std::size_t i = 0; i < w.size(); ++i)
        (i % 2 == 0 ? u : v).push_back(w[i]);
    return {std::move(u), std::move(v)};
}

void for_each_faro_word(int n, int k, const std::function<void(const Word&)>& visit) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    check_arity(k);
    Word w;
    w.reserve(static_cast<std::size_t>(std::max(n, 0)));
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n) {
            visit(w);
            return;
        }
        const int lo = w.size() >= 2 ? w[w.size() - 2] : 1;
        for (int c = lo; c <= k; ++c) {
            w.push_back(c);
            self(self);
            w.pop_back();
        }
    };
    if (n == 0) {
        visit(w);
        return;
    }
    rec(rec);
}

std::vector<Word> enumerate_faro_words(int n, int k) {
    std::vector<Word> out;
    for_each_faro_word(n, k, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> enumerate_faro_permutations(int n) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    // A faro permutation is determined by the set of values on odd indices.
    std::vector<Word> out;
    const int m = (n + 1) / 2;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i + 1;
    auto emit = [&]() {
        std::vector<bool> taken(n + 1, false);
        for (int x : pick) taken[x] = true;
        Word u = pick, v;
        for (int x = 1; x <= n; ++x)
            if (!taken[x]) v.push_back(x);
        out.push_back(faro_shuffle(u, v));
    };
    if (m == 0) {
        out.push_back({});
        return out;
    }
    // iterate m-subsets of [1,n] in lexicographic order
    while (true) {
        emit();
        int i = m - 1;
        while (i >= 0 && pick[i] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_faro_permutation(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    std::vector<bool> seen(n + 1, false);
    for (int x : w) {
        if (x < 1 || x > n || seen[x]) return false;
        seen[x] = true;
    }
    return is_faro_word(w, std::max(n, 1));
}

std::vector<Block> block_decomposition(std::span<const int> w) {
    std::vector<Block> blocks;
    std::size_t i = 0;
    while (i < w.size()) {
        if (i + 1 < w.size() && w[i] > w[i + 1]) {
            blocks.push_back({Block::Kind::pair, w[i], w[i + 1]});
            i += 2;
        } else {
            blocks.push_back({Block::Kind::singleton, w[i], 0});
            i += 1;
        }
    }
    return blocks;
}

Word reassemble(std::span<const Block> blocks) {
    Word w;
    for (const Block& b : blocks) {
        w.push_back(b.hi);
        if (b.kind == Block::Kind::pair) w.push_back(b.lo);
    }
    return w;
}

bool lattice_leq(const Block& p, const Block& q, int arity) {
    Word pq = reassemble(std::array{p, q});
    const bool is_pair = pq.size() == 2 && pq[0] > pq[1];
    return is_faro_word(pq, arity) && !is_pair;
}

namespace {

bool order_isomorphic(std::span<const int> factor, std::span<const int> pattern) {
    for (std::size_t a = 0; a < pattern.size(); ++a)
        for (std::size_t b = a + 1; b < pattern.size(); ++b) {
            if ((pattern[a] < pattern[b]) != (factor[a] < factor[b])) return false;
            if ((pattern[a] == pattern[b]) != (factor[a] == factor[b])) return false;
        }
    return true;
}

}  // namespace

long long count_consecutive_pattern(std::span<const int> w, std::span<const int> pattern) {
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    if (pattern.size() > w.size()) return 0;
    long long count = 0;
    for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i)
        if (order_isomorphic(w.subspan(i, pattern.size()), pattern)) ++count;
    return count;
}

namespace {

long long classical_rec(std::span<const int> w, std::span<const int> p,
                        std::vector<int>& chosen, std::size_t from) {
    if (chosen.size() == p.size()) return 1;
    long long total = 0;
    const std::size_t j = chosen.size();
    for (std::size_t i = from; i + (p.size() - j) <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t a = 0; a < j && ok; ++a) {
            ok = (p[a] < p[j]) == (chosen[a] < w[i]) && (p[a] == p[j]) == (chosen[a] == w[i]);
        }
        if (!ok) continue;
        chosen.push_back(w[i]);
        total += classical_rec(w, p, chosen, i + 1);
        chosen.pop_back();
    }
    return total;
}

}  // namespace

long long count_classical_pattern(std::span<const int> w, std::span<const int> pattern) {
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    std::vector<int> chosen;
    return classical_rec(w, pattern, chosen, 0);
}

bool avoids_classical(std::span<const int> w, std::span<const int> pattern) {
    return count_classical_pattern(w, pattern) == 0;
}

Word reverse_complement(std::span<const int> w, int arity) {
    is_faro_word(w, arity);  // letter-range check
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = arity + 1 - x;
    return out;
}

std::string format_word(std::span<const int> w, int arity) {
    std::ostringstream os;
    if (arity <= 9) {
        for (int x : w) os << x;
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ',';
            os << w[i];
        }
    }
    return os.str();
}

Word parse_word(const std::string& text, int arity) {
    Word w;
    if (arity <= 9) {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("word text: expected digits 1-9");
            w.push_back(c - '0');
        }
    } else if (!text.empty()) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("word text: bad integer");
            w.push_back(v);
        }
    }
    for (int x : w)
        if (x < 1 || x > arity) throw std::domain_error("letter outside [1,arity]");
    return w;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: product of i consecutive ints divisible by i!
    }
    return r;
}

long long faro_word_count(int n, int k) {
    return binomial(n / 2 + k - 1, k - 1) * binomial((n + 1) / 2 + k - 1, k - 1);
}

long long faro_permutation_count(int n) {
    return binomial(n, n / 2);
}

}  // namespace faro
