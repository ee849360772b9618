#include "faro/closed_form.hpp"

#include <stdexcept>

namespace faro {

struct ClosedForm::Node {
    enum class Op { constant, variable, add, sub, mul, div, sqrt };
    Op op = Op::constant;
    Rational value;
    int axis = 0;
    NodePtr lhs, rhs;
};

ClosedForm ClosedForm::constant(Rational v) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::constant;
    n->value = std::move(v);
    return ClosedForm(std::move(n));
}

ClosedForm ClosedForm::variable(int axis) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
    auto n = std::make_shared<Node>();
    n->op = Node::Op::variable;
    n->axis = axis;
    return ClosedForm(std::move(n));
}

namespace {

using Op = ClosedForm::Node::Op;

}  // namespace

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
    auto n = std::make_shared<ClosedForm::Node>();
    n->op = Op::add;
    n->lhs = a.root_;
    n->rhs = b.root_;
    return ClosedForm(std::move(n));
}
ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) {
    auto n = std::make_shared<ClosedForm::Node>();
    n->op = Op::sub;
    n->lhs = a.root_;
    n->rhs = b.root_;
    return ClosedForm(std::move(n));
}
ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
    auto n = std::make_shared<ClosedForm::Node>();
    n->op = Op::mul;
    n->lhs = a.root_;
    n->rhs = b.root_;
    return ClosedForm(std::move(n));
}
ClosedForm operator/(const ClosedForm& a, const ClosedForm& b) {
    auto n = std::make_shared<ClosedForm::Node>();
    n->op = Op::div;
    n->lhs = a.root_;
    n->rhs = b.root_;
    return ClosedForm(std::move(n));
}
ClosedForm sqrt(const ClosedForm& a) {
    auto n = std::make_shared<ClosedForm::Node>();
    n->op = Op::sqrt;
    n->lhs = a.root_;
    return ClosedForm(std::move(n));
}

namespace {

MultiSeries eval(const ClosedForm::Node& n, SeriesCaps caps) {
    using Op = ClosedForm::Node::Op;
    switch (n.op) {
        case Op::constant: return MultiSeries::constant(n.value, caps);
        case Op::variable: return MultiSeries::variable(n.axis, caps);
        case Op::add: return eval(*n.lhs, caps) + eval(*n.rhs, caps);
        case Op::sub: return eval(*n.lhs, caps) - eval(*n.rhs, caps);
        case Op::mul: return eval(*n.lhs, caps) * eval(*n.rhs, caps);
        case Op::div: return eval(*n.lhs, caps).div(eval(*n.rhs, caps));
        case Op::sqrt: return eval(*n.lhs, caps).sqrt();
    }
    throw std::logic_error("unreachable");
}

}  // namespace

MultiSeries ClosedForm::expand(SeriesCaps caps) const {
    // slack absorbs degree shifts from monomial-factored divisions (the
    // printed formulas divide by at most one power of y or z)
    const SeriesCaps work{caps.x + 2, caps.y + 2, caps.z + 2};
    return eval(*root_, work).truncated(caps);
}

namespace {

std::map<std::string, ClosedForm> make_catalog() {
    const ClosedForm x = ClosedForm::variable(0);
    const ClosedForm y = ClosedForm::variable(1);
    const ClosedForm z = ClosedForm::variable(2);
    auto c = [](long long v) { return ClosedForm::constant(Rational(v)); };
    const ClosedForm one = c(1), two = c(2), three = c(3), four = c(4);

    const ClosedForm x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x;

    const ClosedForm A1 = sqrt(x4 - two * x2 * y - two * x2 + y * y - two * y + one);
    const ClosedForm A2 =
        sqrt(x4 * z * z - two * x2 * y * z - two * x2 * z + y * y - two * y + one);
    const ClosedForm A3 = x5 - two * x4 - x3 * y - three * x3 + four * x2 * y + four * x2 -
                          two * x * y - two * y * y + two * x + four * y - two;

    std::map<std::string, ClosedForm> cat;

    cat.emplace("F11", two * y * (x * z - x - one) /
                           (c(0) - x * y * z + x * y + x3 * z - x3 + y - x2 + x * z + x - one +
                            (x * z - x - one) * A1));
    cat.emplace("F21", two * y / (c(0) - y + x2 * z - two * x + one + A2));
    cat.emplace("F12",
                y * (x3 * z * z - x3 * z + x2 * z + x * y * z - x * y - three * x * z + x + y -
                     one + (x * z - x + one) * A2) /
                        ((x3 * z * z - x3 * z + x2 * z - x * y * z + x * y - x * z - x - y + one +
                          (x * z - x + one) * A2) *
                         (y - one) * z) +
                    y / (one - y));

    const ClosedForm P = one - y - two * x + x2 + A1;
    cat.emplace("G11", four * x2 * y / (P * P));
    cat.emplace("G21", two * x2 * y * (one + y - x2 - A1) / (P * P * A1));
    cat.emplace("G12", two * x * y * (A3 + (x3 - two * x2 + two * x * y - two * x - two * y + two) * A1) /
                           (P * P * (one - y) * A1));

    cat.emplace("H11", two * y * (x + one) /
                           (one - x - y - x * y + x2 + x3 +
                            (one + x) * sqrt((x2 - two * x - y + one) * (x2 + two * x - y + one))));
    cat.emplace("H21", y / (one - x - y));
    cat.emplace("H12", y * (c(0) - x3 * y + x2 * y - x * y * y + x * y + y * y - two * y + one) /
                           (x * y * y * y - three * x * y * y - y * y * y + three * x * y +
                            three * y * y - x - three * y + one));

    const ClosedForm S = sqrt(one - four * x2 * y);
    const ClosedForm S0 = sqrt(one - four * x2);
    cat.emplace("K21", two / (one - two * x + S));
    cat.emplace("K12", (one + y + two * x * y - two * x * y * y + (y - one) * S) /
                           (y * (one - two * x * y + S)));
    const ClosedForm K132 = (one + y + (y - one) * S) / (y * (one - two * x + S));
    cat.emplace("K132", K132);
    cat.emplace("K213", K132);
    cat.emplace("K123", (two + three * x - three * x * y + two * x2 - two * x2 * y -
                         x * (one - y) * S0) /
                            (one - two * x * y + S0));

    cat.emplace("L21", (one - S0) / (two * (one - two * x) * S0));
    cat.emplace("L12", two * x * (c(-1) + four * x2 + x + S0) /
                           ((one - two * x) * (one + S0) * S0));
    const ClosedForm L132 = x * (c(-1) + four * x2 + two * x + (one - two * x) * S0) /
                            ((one - two * x) * (one + S0) * S0);
    cat.emplace("L132", L132);
    cat.emplace("L213", L132);
    cat.emplace("L123", x * (one + two * x) * (one - S0) / ((one - two * x) * (one + S0)));

    return cat;
}

void check_counting_series(const std::string& name, const MultiSeries& s) {
    const SeriesCaps c = s.caps();
    for (int i = 0; i <= c.x; ++i)
        for (int j = 0; j <= c.y; ++j)
            for (int l = 0; l <= c.z; ++l) {
                const Rational& v = s.at(i, j, l);
                if (boost::multiprecision::denominator(v) != 1 || v < 0)
                    throw std::runtime_error(name + ": coefficient at (" + std::to_string(i) +
                                             "," + std::to_string(j) + "," + std::to_string(l) +
                                             ") is not a nonnegative integer");
            }
}

}  // namespace

const std::map<std::string, ClosedForm>& closed_form_catalog() {
    static const std::map<std::string, ClosedForm> cat = make_catalog();
    return cat;
}

MultiSeries expand_named(const std::string& name, SeriesCaps caps) {
    const auto& cat = closed_form_catalog();
    const auto it = cat.find(name);
    if (it == cat.end()) throw std::invalid_argument("unknown closed form: " + name);
    MultiSeries s = it->second.expand(caps);
    check_counting_series(name, s);
    return s;
}

namespace {
void check_word_pattern(const std::string& p) {
    if (p != "11" && p != "21" && p != "12")
        throw std::invalid_argument("word pattern must be one of 11, 21, 12");
}
void check_perm_pattern(const std::string& p) {
    if (p != "21" && p != "12" && p != "132" && p != "213" && p != "123")
        throw std::invalid_argument("perm pattern must be one of 21, 12, 132, 213, 123");
}
}  // namespace

MultiSeries expand_distribution(const std::string& pattern, SeriesCaps caps) {
    check_word_pattern(pattern);
    return expand_named("F" + pattern, caps);
}

MultiSeries expand_popularity_words(const std::string& pattern, SeriesCaps caps) {
    check_word_pattern(pattern);
    return expand_named("G" + pattern, {caps.x, caps.y, 0});
}

MultiSeries expand_avoidance(const std::string& pattern, SeriesCaps caps) {
    check_word_pattern(pattern);
    return expand_named("H" + pattern, {caps.x, caps.y, 0});
}

MultiSeries expand_perm_distribution(const std::string& pattern, SeriesCaps caps) {
    check_perm_pattern(pattern);
    return expand_named("K" + pattern, {caps.x, caps.y, 0});
}

std::vector<Rational> expand_perm_popularity(const std::string& pattern, int cap) {
    check_perm_pattern(pattern);
    const MultiSeries s = expand_named("L" + pattern, {cap, 0, 0});
    std::vector<Rational> out;
    out.reserve(cap + 1);
    for (int n = 0; n <= cap; ++n) out.push_back(s.at(n, 0, 0));
    return out;
}

std::vector<Rational> diagonal(const MultiSeries& s) {
    return s.diagonal();
}

}  // namespace faro
