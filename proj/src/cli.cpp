#include "faro/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "faro/bijections.hpp"
#include "faro/classes.hpp"
#include "faro/closed_form.hpp"
#include "faro/oeis.hpp"
#include "faro/path_pattern.hpp"
#include "faro/verify.hpp"
#include "faro/words.hpp"

#ifndef FARO_DEFAULT_FIXTURES
#define FARO_DEFAULT_FIXTURES "data/oeis.txt"
#endif

namespace faro::cli {

namespace {

using nlohmann::json;

struct EnumerateConfig {
    bool words = false, perms = false, dispersed = false, dyck = false;
    bool subexcedent = false, dumont = false;
    int n = 0, k = 0, peaks = -1;
    std::string format = "plain";
};

// digits when possible, comma-separated otherwise (mirrors the word text format)
Word parse_word_flexible(const std::string& text) {
    const bool commas = text.find(',') != std::string::npos;
    return parse_word(text, commas ? 1000000000 : 9);
}

std::string format_any_word(const Word& w, int max_letter_bound) {
    if (max_letter_bound <= 9) return format_word(w, std::max(max_letter_bound, 1));
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

std::string format_zero_based(const Word& w, int n) {
    // 0-based alphabet (subexcedent module); digits while letters fit
    if (n <= 10) {
        std::string s;
        for (int x : w) s.push_back(static_cast<char>('0' + x));
        return s;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

void emit_list(std::ostream& out, const std::vector<std::string>& items, const std::string& format) {
    if (format == "json") {
        out << json(items).dump() << '\n';
    } else if (format == "csv") {
        out << "object\n";
        for (const auto& s : items) out << s << '\n';
    } else {
        for (const auto& s : items) out << s << '\n';
    }
}

int run_enumerate(const EnumerateConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::string> items;
    if (cfg.words) {
        if (cfg.k < 1) {
            err << "enumerate --words requires -k\n";
            return 2;
        }
        for (const Word& w : enumerate_faro_words(cfg.n, cfg.k))
            items.push_back(format_any_word(w, cfg.k));
    } else if (cfg.perms) {
        for (const Word& w : enumerate_faro_permutations(cfg.n))
            items.push_back(format_any_word(w, cfg.n));
    } else if (cfg.dispersed) {
        const auto paths = cfg.peaks >= 0 ? enumerate_dispersed_with_peaks(cfg.n, cfg.peaks)
                                          : enumerate_dispersed(cfg.n);
        for (const Path& p : paths) items.push_back(format_path(p));
    } else if (cfg.dyck) {
        for (const Path& p : enumerate_dyck(cfg.n)) items.push_back(format_path(p));
    } else if (cfg.subexcedent) {
        for (const Word& w : enumerate_subexcedent(cfg.n))
            items.push_back(format_zero_based(w, cfg.n));
    } else if (cfg.dumont) {
        for (const Word& w : enumerate_dumont_2143_avoiding(cfg.n))
            items.push_back(format_any_word(w, cfg.n));
    } else {
        err << "enumerate: pick one of --words --perms --dispersed --dyck --subexcedent --dumont\n";
        return 2;
    }
    emit_list(out, items, cfg.format);
    return 0;
}

int run_map(const std::string& direction, const std::string& input, int arity, std::ostream& out,
            std::ostream& err) {
    if (direction == "f") {
        if (arity < 1) {
            err << "map f requires --arity\n";
            return 2;
        }
        out << format_path(faro_to_path(parse_word(input, arity), arity)) << '\n';
    } else if (direction == "f-inv") {
        if (arity < 1) {
            err << "map f-inv requires --arity\n";
            return 2;
        }
        const Word w = path_to_faro(parse_path(input), arity);
        out << format_any_word(w, arity) << '\n';
    } else if (direction == "g") {
        const Word w = parse_word_flexible(input);
        out << format_path(perm_to_path(w)) << '\n';
    } else if (direction == "g-inv") {
        const Path q = parse_path(input);
        out << format_any_word(path_to_perm(q), static_cast<int>(q.size())) << '\n';
    } else if (direction == "foata" || direction == "foata-inv") {
        const Word w = parse_word_flexible(input);
        const Word r = direction == "foata" ? foata(w) : foata_inverse(w);
        out << format_any_word(r, static_cast<int>(r.size())) << '\n';
    } else if (direction == "chi") {
        if (arity < 1) {
            err << "map chi requires --arity\n";
            return 2;
        }
        out << format_any_word(reverse_complement(parse_word(input, arity), arity), arity) << '\n';
    } else {
        err << "map: unknown direction '" << direction << "'\n";
        return 2;
    }
    return 0;
}

int run_series(const std::string& name, SeriesCaps caps, const std::string& format,
               std::ostream& out) {
    const MultiSeries s = expand_named(name, caps);
    const SeriesCaps c = s.caps();
    if (format == "json") {
        json arr = json::array();
        for (int i = 0; i <= c.x; ++i)
            for (int j = 0; j <= c.y; ++j)
                for (int l = 0; l <= c.z; ++l) {
                    const Rational& v = s.at(i, j, l);
                    if (v == 0) continue;
                    arr.push_back({{"n", i}, {"k", j}, {"t", l}, {"value", v.str()}});
                }
        out << arr.dump() << '\n';
    } else {
        if (format == "csv") out << "n,k,t,value\n";
        for (int i = 0; i <= c.x; ++i)
            for (int j = 0; j <= c.y; ++j)
                for (int l = 0; l <= c.z; ++l) {
                    const Rational& v = s.at(i, j, l);
                    if (v == 0) continue;
                    const char sep = format == "csv" ? ',' : ' ';
                    out << i << sep << j << sep << l << sep << v.str() << '\n';
                }
    }
    return 0;
}

int run_classes(const std::string& cls, int n, bool count_only, bool histogram, std::ostream& out,
                std::ostream& err) {
    if (histogram) {
        if (cls != "subexcedent") {
            err << "--histogram is only available for the subexcedent class\n";
            return 2;
        }
        out << "eOdis,oOdis,aOrpt,eEdis,oEdis,aErpt,count\n";
        for (const auto& [key, cnt] : subexcedent_histogram(n)) {
            for (long long v : key) out << v << ',';
            out << cnt << '\n';
        }
        return 0;
    }
    std::vector<std::string> items;
    if (cls == "alternating") {
        for (const Word& w : alternating_faro_permutations(n)) items.push_back(format_any_word(w, n));
    } else if (cls == "derangements") {
        for (const Word& w : enumerate_faro_permutations(n))
            if (is_derangement(w)) items.push_back(format_any_word(w, n));
    } else if (cls == "involutions") {
        for (const Word& w : enumerate_faro_permutations(n))
            if (is_involution(w)) items.push_back(format_any_word(w, n));
    } else if (cls == "avoid231" || cls == "avoid312") {
        const Word p = parse_word(cls == "avoid231" ? "231" : "312", 9);
        for (const Word& w : enumerate_faro_permutations(n))
            if (avoids_classical(w, p)) items.push_back(format_any_word(w, n));
    } else if (cls == "subexcedent") {
        for (const Word& w : enumerate_subexcedent(n)) items.push_back(format_zero_based(w, n));
    } else if (cls == "dumont") {
        for (const Word& w : enumerate_dumont_2143_avoiding(n))
            items.push_back(format_any_word(w, n));
    } else {
        err << "classes: unknown class '" << cls << "'\n";
        return 2;
    }
    if (count_only)
        out << items.size() << '\n';
    else
        for (const auto& s : items) out << s << '\n';
    return 0;
}

int run_verify(const std::vector<std::string>& suites, const VerifyOptions& opt, std::ostream& out) {
    bool any_fail = false;
    out << "workers: " << opt.workers << ", seed: " << opt.seed << '\n';
    for (const std::string& suite : suites) {
        for (const CheckResult& r : run_suite(suite, opt)) {
            out << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty()) out << (r.pass ? " -- " : ": ") << r.detail;
            out << '\n';
            any_fail |= !r.pass;
        }
    }
    out << (any_fail ? "verification FAILED\n" : "all checks passed\n");
    return any_fail ? 1 : 0;
}

int run_oeis(const std::string& check_id, const std::string& terms_text, long long first_index,
             const std::string& lookup_id, bool online, const std::string& cache_dir,
             const std::string& fixtures, std::ostream& out, std::ostream& err) {
    if (!check_id.empty()) {
        const FixtureStore store = FixtureStore::load_file(fixtures);
        const SequenceFixture* fx = store.find(check_id);
        if (!fx) {
            err << "unknown sequence id: " << check_id << '\n';
            return 2;
        }
        std::vector<long long> terms;
        std::istringstream is(terms_text);
        std::string tok;
        while (std::getline(is, tok, ',')) terms.push_back(std::stoll(tok));
        const PrefixReport rep = check_prefix(*fx, terms, first_index);
        out << rep.message << '\n';
        return rep.ok ? 0 : 1;
    }
    if (!lookup_id.empty()) {
        RemoteConfig cfg;
        cfg.enabled = online;
        cfg.cache_dir = cache_dir;
        const SequenceFixture fx = remote_lookup(lookup_id, cfg);
        out << fx.id << ' ' << fx.offset;
        for (long long t : fx.terms) out << ' ' << t;
        out << '\n';
        return 0;
    }
    err << "oeis: pass --check ID or --lookup ID\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"faro shuffle combinatorics toolkit"};
    app.require_subcommand(1);

    // enumerate
    EnumerateConfig ecfg;
    auto* enumerate = app.add_subcommand("enumerate", "list combinatorial objects");
    enumerate->add_flag("--words", ecfg.words, "k-ary faro words of length n");
    enumerate->add_flag("--perms", ecfg.perms, "faro permutations of length n");
    enumerate->add_flag("--dispersed", ecfg.dispersed, "dispersed Dyck paths of length n");
    enumerate->add_flag("--dyck", ecfg.dyck, "Dyck paths of semilength n");
    enumerate->add_flag("--subexcedent", ecfg.subexcedent, "subexcedent faro words of length n");
    enumerate->add_flag("--dumont", ecfg.dumont, "2143-avoiding Dumont permutations of length n");
    enumerate->add_option("-n", ecfg.n, "object length (semilength for --dyck)")->required();
    enumerate->add_option("-k", ecfg.k, "arity for --words");
    enumerate->add_option("--peaks", ecfg.peaks, "restrict --dispersed to this peak count");
    enumerate->add_option("--format", ecfg.format, "plain | json | csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    // map
    std::string direction, map_input;
    int map_arity = 0;
    auto* map_cmd = app.add_subcommand("map", "apply a bijection");
    map_cmd->add_option("direction", direction, "f | f-inv | g | g-inv | foata | foata-inv | chi")
        ->required();
    map_cmd->add_option("input", map_input, "word or path text")->required();
    map_cmd->add_option("--arity", map_arity, "arity for f, f-inv and chi");

    // count
    std::string count_pattern_text, count_word, count_path;
    int count_arity = 0;
    bool classical = false;
    auto* count_cmd = app.add_subcommand("count", "count pattern occurrences");
    count_cmd->add_option("--pattern", count_pattern_text, "word pattern or path pattern text")
        ->required();
    count_cmd->add_option("--word", count_word, "count in this word (needs --arity)");
    count_cmd->add_option("--path", count_path, "count in this path");
    count_cmd->add_option("--arity", count_arity, "arity of --word");
    count_cmd->add_flag("--classical", classical, "classical (subsequence) occurrences for words");

    // series
    std::string series_name, series_format = "csv";
    int xcap = 16, ycap = 8, zcap = 16, allcap = -1;
    auto* series_cmd = app.add_subcommand("series", "expand a named generating function");
    series_cmd->add_option("name", series_name, "F11 F21 F12 G11 G21 G12 H11 H21 H12 "
                                                "K21 K12 K132 K213 K123 L21 L12 L132 L213 L123")
        ->required();
    series_cmd->add_option("--xcap", xcap, "x-degree cap (default 16)");
    series_cmd->add_option("--ycap", ycap, "y-degree cap (default 8)");
    series_cmd->add_option("--zcap", zcap, "z-degree cap (default 16)");
    series_cmd->add_option("--cap", allcap, "set all three caps at once");
    series_cmd->add_option("--format", series_format, "plain | json | csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    // classes
    std::string cls;
    int cls_n = 0;
    bool count_only = false, histogram = false;
    auto* classes_cmd = app.add_subcommand("classes", "faro word and permutation subclasses");
    classes_cmd->add_option("class", cls, "alternating | derangements | involutions | avoid231 | "
                                          "avoid312 | subexcedent | dumont")
        ->required();
    classes_cmd->add_option("-n", cls_n, "object length")->required();
    classes_cmd->add_flag("--count", count_only, "print the count only");
    classes_cmd->add_flag("--histogram", histogram, "CSV statistics histogram (subexcedent)");

    // verify
    std::vector<std::string> suites;
    VerifyOptions vopt;
    vopt.fixtures_path = FARO_DEFAULT_FIXTURES;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("suites", suites, "bijections transport series-vs-oracle classes "
                                             "equidistribution oeis all (default all)");
    verify_cmd->add_option("--workers", vopt.workers, "worker threads (default 1)");
    verify_cmd->add_option("--seed", vopt.seed, "seed for sampled large-instance checks");
    verify_cmd->add_option("--fixtures", vopt.fixtures_path, "sequence fixture file");

    // oeis
    std::string check_id, terms_text, lookup_id, cache_dir;
    long long first_index = 0;
    bool online = false;
    std::string fixtures = FARO_DEFAULT_FIXTURES;
    auto* oeis_cmd = app.add_subcommand("oeis", "sequence fixtures and lookups");
    oeis_cmd->add_option("--check", check_id, "compare --terms against this fixture id");
    oeis_cmd->add_option("--terms", terms_text, "comma-separated computed terms");
    oeis_cmd->add_option("--first-index", first_index, "sequence index of the first term");
    oeis_cmd->add_option("--lookup", lookup_id, "fetch this id (cache first)");
    oeis_cmd->add_flag("--online", online, "allow network access (off by default)");
    oeis_cmd->add_option("--cache-dir", cache_dir, "cache directory for lookups");
    oeis_cmd->add_option("--fixtures", fixtures, "sequence fixture file");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(ecfg, out, err);
        if (map_cmd->parsed()) return run_map(direction, map_input, map_arity, out, err);
        if (count_cmd->parsed()) {
            if (!count_word.empty() == !count_path.empty()) {
                err << "count: pass exactly one of --word or --path\n";
                return 2;
            }
            if (!count_word.empty()) {
                if (count_arity < 1) {
                    err << "count --word requires --arity\n";
                    return 2;
                }
                const Word w = parse_word(count_word, count_arity);
                const Word p = parse_word(count_pattern_text, 9);
                out << (classical ? count_classical_pattern(w, p)
                                  : count_consecutive_pattern(w, p))
                    << '\n';
            } else {
                out << count_pattern(parse_path(count_path), count_pattern_text) << '\n';
            }
            return 0;
        }
        if (series_cmd->parsed()) {
            if (allcap >= 0) xcap = ycap = zcap = allcap;
            SeriesCaps caps{xcap, ycap, zcap};
            if (series_name[0] == 'G' || series_name[0] == 'H' || series_name[0] == 'K')
                caps.z = 0;
            if (series_name[0] == 'L') caps.y = caps.z = 0;
            return run_series(series_name, caps, series_format, out);
        }
        if (classes_cmd->parsed()) return run_classes(cls, cls_n, count_only, histogram, out, err);
        if (verify_cmd->parsed()) {
            if (suites.empty()) suites = {"all"};
            return run_verify(suites, vopt, out);
        }
        if (oeis_cmd->parsed())
            return run_oeis(check_id, terms_text, first_index, lookup_id, online, cache_dir,
                            fixtures, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace faro::cli
