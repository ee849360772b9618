#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "faro/paths.hpp"

namespace faro {

enum class Quant { plus, star };

/// A quantified group (BODY)^+ or (BODY)^*; the body is a nonempty step literal.
struct PatternGroup {
    Path body;
    Quant quant = Quant::plus;
};

/// One pattern expression of the text grammar
///     STEPS | STEPS? '(' STEPS ')' ('^+'|'^*') STEPS?
/// Examples: "FFF", "DD(UD)^*UU", "F(UD)^+F".
struct PatternExpr {
    Path prefix;
    std::optional<PatternGroup> group;
    Path suffix;
};

struct PatternParseError : std::invalid_argument {
    std::size_t position;
    PatternParseError(std::size_t pos, const std::string& what)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Parse the grammar above.  A star group with empty prefix and suffix is a
/// semantic error; a second group is a parse error.
PatternExpr parse_pattern(const std::string& text);
std::string format_pattern(const PatternExpr& e);

/// Generalized matching unit: a literal factor or a quantified group.  The
/// length-three transport identities need patterns with two groups, e.g.
/// DD(UD)^*F(UD)^*UU; those are built programmatically as piece lists (the
/// text grammar stays single-group).
using PatternPiece = std::variant<Path, PatternGroup>;

/// Occurrences counted by start position, overlaps allowed.  A group matches
/// the maximal run of its body at that point (k >= 1 for ^+, k >= 0 for ^*);
/// a group at the very start of the pattern must also be left-maximal.
long long count_pieces(const Path& p, std::span<const PatternPiece> pieces);

long long count_pattern(const Path& p, const PatternExpr& e);

/// Count by DSL text directly.
long long count_pattern(const Path& p, const std::string& pattern_text);

/// A Z-linear combination of pattern statistics, the length symbol n, and
/// the constant 1.
struct StatisticTerm {
    enum class Kind { pattern, length_symbol, one };
    long long coefficient = 1;
    Kind kind = Kind::pattern;
    std::vector<PatternPiece> pattern;  // used when kind == pattern
};

struct StatisticExpr {
    std::vector<StatisticTerm> terms;
};

/// n_value is supplied by the caller: in the transport identities the symbol
/// n means the faro word length, not the path length.
long long evaluate_statistic(const Path& p, const StatisticExpr& s, long long n_value);

}  // namespace faro
