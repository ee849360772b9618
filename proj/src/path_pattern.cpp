#include "faro/path_pattern.hpp"

#include <cassert>
#include <stdexcept>

namespace faro {

namespace {

bool is_step_char(char c) { return c == 'F' || c == 'U' || c == 'D'; }

bool matches_at(const Path& p, const Path& factor, std::size_t pos) {
    if (pos + factor.size() > p.size()) return false;
    for (std::size_t i = 0; i < factor.size(); ++i)
        if (p[pos + i] != factor[i]) return false;
    return true;
}

}  // namespace

PatternExpr parse_pattern(const std::string& text) {
    PatternExpr e;
    std::size_t i = 0;
    while (i < text.size() && is_step_char(text[i]))
        e.prefix.push_back(parse_path(std::string(1, text[i++])).front());
    if (i == text.size()) {
        if (e.prefix.empty()) throw PatternParseError(0, "empty pattern");
        return e;
    }
    if (text[i] != '(')
        throw PatternParseError(i, "expected step or '('");
    const std::size_t group_pos = i;
    ++i;
    PatternGroup g;
    while (i < text.size() && is_step_char(text[i]))
        g.body.push_back(parse_path(std::string(1, text[i++])).front());
    if (g.body.empty()) throw PatternParseError(i, "empty group body");
    if (i == text.size() || text[i] != ')')
        throw PatternParseError(i, "expected ')'");
    ++i;
    if (i == text.size() || text[i] != '^')
        throw PatternParseError(i, "expected '^+' or '^*'");
    ++i;
    if (i == text.size() || (text[i] != '+' && text[i] != '*'))
        throw PatternParseError(i, "expected '+' or '*' after '^'");
    g.quant = text[i] == '+' ? Quant::plus : Quant::star;
    ++i;
    e.group = g;
    while (i < text.size() && is_step_char(text[i]))
        e.suffix.push_back(parse_path(std::string(1, text[i++])).front());
    if (i != text.size()) {
        if (text[i] == '(')
            throw PatternParseError(i, "at most one quantified group is supported");
        throw PatternParseError(i, "unexpected character");
    }
    if (g.quant == Quant::star && e.prefix.empty() && e.suffix.empty())
        throw PatternParseError(group_pos, "star group requires a nonempty prefix or suffix");
    return e;
}

std::string format_pattern(const PatternExpr& e) {
    std::string s = format_path(e.prefix);
    if (e.group) {
        s += "(" + format_path(e.group->body) + ")^";
        s += e.group->quant == Quant::plus ? '+' : '*';
    }
    s += format_path(e.suffix);
    return s;
}

namespace {

// Match pieces[idx..] at position pos.  Groups take the maximal run of their
// body; the k of each matched run is forced, so the match is deterministic.
bool match_from(const Path& p, std::span<const PatternPiece> pieces,
                std::size_t idx, std::size_t pos, bool at_pattern_start) {
    if (idx == pieces.size()) return true;
    if (const auto* lit = std::get_if<Path>(&pieces[idx])) {
        if (!matches_at(p, *lit, pos)) return false;
        return match_from(p, pieces, idx + 1, pos + lit->size(), false);
    }
    const auto& g = std::get<PatternGroup>(pieces[idx]);
    if (at_pattern_start) {
        // a leading group must be left-maximal: no copy of the body ends here
        if (pos >= g.body.size() && matches_at(p, g.body, pos - g.body.size()))
            return false;
    }
    long long k = 0;
    std::size_t q = pos;
    while (matches_at(p, g.body, q)) {
        ++k;
        q += g.body.size();
    }
    if (g.quant == Quant::plus && k == 0) return false;
    // the run is maximal by construction; the occurrence's k is unique
    assert(!matches_at(p, g.body, q));
    return match_from(p, pieces, idx + 1, q, false);
}

}  // namespace

long long count_pieces(const Path& p, std::span<const PatternPiece> pieces) {
    if (pieces.empty()) throw std::invalid_argument("empty pattern");
    bool anchored = false;  // something other than a star group
    for (const auto& piece : pieces) {
        if (const auto* lit = std::get_if<Path>(&piece)) {
            if (lit->empty()) throw std::invalid_argument("empty literal piece");
            anchored = true;
        } else if (std::get<PatternGroup>(piece).quant == Quant::plus) {
            anchored = true;
        }
    }
    if (!anchored)
        throw std::invalid_argument("pattern made only of star groups");
    long long count = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (match_from(p, pieces, 0, i, true)) ++count;
    return count;
}

long long count_pattern(const Path& p, const PatternExpr& e) {
    std::vector<PatternPiece> pieces;
    if (!e.prefix.empty()) pieces.emplace_back(e.prefix);
    if (e.group) pieces.emplace_back(*e.group);
    if (!e.suffix.empty()) pieces.emplace_back(e.suffix);
    return count_pieces(p, pieces);
}

long long count_pattern(const Path& p, const std::string& pattern_text) {
    return count_pattern(p, parse_pattern(pattern_text));
}

long long evaluate_statistic(const Path& p, const StatisticExpr& s, long long n_value) {
    long long total = 0;
    for (const StatisticTerm& term : s.terms) {
        switch (term.kind) {
            case StatisticTerm::Kind::pattern:
                total += term.coefficient * count_pieces(p, term.pattern);
                break;
            case StatisticTerm::Kind::length_symbol:
                total += term.coefficient * n_value;
                break;
            case StatisticTerm::Kind::one:
                total += term.coefficient;
                break;
        }
    }
    return total;
}

}  // namespace faro
