#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "faro/series.hpp"

namespace faro {

/// Expression tree over rational constants, the variables x/y/z, +, -, *, /,
/// and square root.  Expansion is exact truncated-series evaluation; every
/// division must reduce to a unit after factoring out a common monomial, and
/// every square root must have a constant term that is a positive rational
/// square (the positive branch is taken).
class ClosedForm {
public:
    struct Node;  // implementation detail, defined in closed_form.cpp
    using NodePtr = std::shared_ptr<const Node>;

    static ClosedForm constant(Rational v);
    static ClosedForm variable(int axis);

    friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
    friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
    friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
    friend ClosedForm operator/(const ClosedForm& a, const ClosedForm& b);
    friend ClosedForm sqrt(const ClosedForm& a);

    /// Expand as a truncated series.  Internally evaluated with slack caps so
    /// that monomial-factored divisions stay exact, then truncated.
    MultiSeries expand(SeriesCaps caps) const;

private:
    explicit ClosedForm(NodePtr n) : root_(std::move(n)) {}
    NodePtr root_;
};

/// The named generating functions: F11, F21, F12 (pattern distribution over
/// k-ary faro words), G11, G21, G12 (pattern popularity), H11, H21, H12
/// (pattern avoidance), K21, K12, K132, K213, K123 (distribution over faro
/// permutations), L21, L12, L132, L213, L123 (popularity over faro
/// permutations).
const std::map<std::string, ClosedForm>& closed_form_catalog();

/// Expand a catalog entry and verify the counting-series invariant: every
/// coefficient inside the caps must be a nonnegative integer (throws
/// std::runtime_error otherwise -- a wrong branch or transcription).
MultiSeries expand_named(const std::string& name, SeriesCaps caps);

/// Convenience wrappers over the catalog.  Pattern names: "11", "21", "12"
/// for words; "21", "12", "132", "213", "123" for permutations.
MultiSeries expand_distribution(const std::string& pattern, SeriesCaps caps);
MultiSeries expand_popularity_words(const std::string& pattern, SeriesCaps caps);
MultiSeries expand_avoidance(const std::string& pattern, SeriesCaps caps);
MultiSeries expand_perm_distribution(const std::string& pattern, SeriesCaps caps);
std::vector<Rational> expand_perm_popularity(const std::string& pattern, int cap);

/// Coefficients of x^n y^n (z = 0) as exact rationals.
std::vector<Rational> diagonal(const MultiSeries& s);

}  // namespace faro
