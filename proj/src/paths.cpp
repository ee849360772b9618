#include "faro/paths.hpp"

#include <stdexcept>

#include "faro/words.hpp"  // binomial

namespace faro {

Path parse_path(const std::string& text) {
    Path p;
    p.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'F': p.push_back(Step::F); break;
            case 'U': p.push_back(Step::U); break;
            case 'D': p.push_back(Step::D); break;
            default: throw std::invalid_argument(std::string("path text: bad step '") + c + "'");
        }
    }
    return p;
}

std::string format_path(const Path& p) {
    std::string s;
    s.reserve(p.size());
    for (Step st : p) s.push_back(st == Step::F ? 'F' : st == Step::U ? 'U' : 'D');
    return s;
}

bool first_quadrant(const Path& p) {
    long long h = 0;
    for (Step st : p) {
        if (st == Step::U) ++h;
        else if (st == Step::D) --h;
        if (h < 0) return false;
    }
    return true;
}

bool is_dispersed_dyck(const Path& p) {
    long long h = 0;
    for (Step st : p) {
        if (st == Step::F) {
            if (h != 0) return false;
        } else if (st == Step::U) {
            ++h;
        } else {
            if (--h < 0) return false;
        }
    }
    return h == 0;
}

bool is_dyck(const Path& p) {
    for (Step st : p)
        if (st == Step::F) return false;
    return is_dispersed_dyck(p);
}

long long count_peaks(const Path& p) {
    long long c = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == Step::U && p[i + 1] == Step::D) ++c;
    return c;
}

void for_each_dispersed(int n, const std::function<void(const Path&)>& visit) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    Path p;
    p.reserve(n);
    auto rec = [&](auto&& self, int h) -> void {
        const int rest = n - static_cast<int>(p.size());
        if (rest == 0) {
            if (h == 0) visit(p);
            return;
        }
        if (h > rest) return;  // cannot come back to the axis
        if (h == 0) {
            p.push_back(Step::F);
            self(self, 0);
            p.pop_back();
        }
        p.push_back(Step::U);
        self(self, h + 1);
        p.pop_back();
        if (h > 0) {
            p.push_back(Step::D);
            self(self, h - 1);
            p.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<Path> enumerate_dispersed(int n) {
    std::vector<Path> out;
    for_each_dispersed(n, [&](const Path& p) { out.push_back(p); });
    return out;
}

std::vector<Path> enumerate_dispersed_with_peaks(int n, int k) {
    std::vector<Path> out;
    for_each_dispersed(n, [&](const Path& p) {
        if (count_peaks(p) == k) out.push_back(p);
    });
    return out;
}

std::vector<Path> enumerate_dyck(int semilength) {
    if (semilength < 0) throw std::invalid_argument("semilength must be nonnegative");
    const int n = 2 * semilength;
    std::vector<Path> out;
    Path p;
    p.reserve(n);
    auto rec = [&](auto&& self, int h) -> void {
        const int rest = n - static_cast<int>(p.size());
        if (rest == 0) {
            if (h == 0) out.push_back(p);
            return;
        }
        if (h > rest) return;
        p.push_back(Step::U);
        self(self, h + 1);
        p.pop_back();
        if (h > 0) {
            p.push_back(Step::D);
            self(self, h - 1);
            p.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

long long dispersed_count(int n) {
    return binomial(n, n / 2);
}

long long dispersed_with_peaks_count(int n, int k) {
    return binomial(n / 2, k) * binomial((n + 1) / 2, k);
}

long long catalan(int n) {
    return binomial(2LL * n, n) / (n + 1);
}

RunEncoding run_encoding(const Path& p, int arity) {
    if (arity < 1) throw std::invalid_argument("run_encoding: arity must be >= 1");
    if (!is_dispersed_dyck(p)) throw std::invalid_argument("run_encoding: not a dispersed Dyck path");
    if (count_peaks(p) != arity - 1)
        throw std::invalid_argument("run_encoding: peak count incompatible with arity");
    RunEncoding enc;
    enc.arity = arity;
    enc.t.assign(3 * (arity - 1) + 1, 0);
    std::size_t i = 0;
    for (int g = 0; g < arity - 1; ++g) {
        while (i < p.size() && p[i] == Step::F) { ++enc.t[3 * g]; ++i; }
        if (i >= p.size() || p[i] != Step::U)
            throw std::invalid_argument("run_encoding: run structure incompatible with arity");
        while (i < p.size() && p[i] == Step::U) { ++enc.t[3 * g + 1]; ++i; }
        if (i >= p.size() || p[i] != Step::D)
            throw std::invalid_argument("run_encoding: run structure incompatible with arity");
        while (i < p.size() && p[i] == Step::D) { ++enc.t[3 * g + 2]; ++i; }
    }
    while (i < p.size() && p[i] == Step::F) { ++enc.t[3 * (arity - 1)]; ++i; }
    if (i != p.size())
        throw std::invalid_argument("run_encoding: run structure incompatible with arity");
    return enc;
}

Path decode_runs(const RunEncoding& enc) {
    if (enc.arity < 1 || enc.t.size() != static_cast<std::size_t>(3 * (enc.arity - 1) + 1))
        throw std::invalid_argument("decode_runs: bad encoding shape");
    Path p;
    for (std::size_t i = 0; i < enc.t.size(); ++i) {
        if (enc.t[i] < 0 || (i % 3 != 0 && enc.t[i] < 1))
            throw std::invalid_argument("decode_runs: interior run lengths must be >= 1");
        const Step st = i % 3 == 0 ? Step::F : i % 3 == 1 ? Step::U : Step::D;
        for (long long r = 0; r < enc.t[i]; ++r) p.push_back(st);
    }
    return p;
}

}  // namespace faro
