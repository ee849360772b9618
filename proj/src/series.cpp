#include "faro/series.hpp"

#include <stdexcept>

namespace faro {

namespace {
const Rational kZero = 0;

void check_caps(SeriesCaps caps) {
    if (caps.x < 0 || caps.y < 0 || caps.z < 0)
        throw std::invalid_argument("series caps must be nonnegative");
}
}  // namespace

MultiSeries::MultiSeries(SeriesCaps caps) : caps_(caps) {
    check_caps(caps);
    c_.assign(static_cast<std::size_t>(caps.x + 1) * (caps.y + 1) * (caps.z + 1), Rational(0));
}

std::size_t MultiSeries::index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * (caps_.y + 1) + j) * (caps_.z + 1) + l;
}

MultiSeries MultiSeries::constant(const Rational& v, SeriesCaps caps) {
    MultiSeries s(caps);
    s.c_[0] = v;
    return s;
}

MultiSeries MultiSeries::variable(int axis, SeriesCaps caps) {
    MultiSeries s(caps);
    int e[3] = {0, 0, 0};
    if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
    e[axis] = 1;
    if (e[0] <= caps.x && e[1] <= caps.y && e[2] <= caps.z) s.set(e[0], e[1], e[2], 1);
    return s;
}

const Rational& MultiSeries::at(int i, int j, int l) const {
    if (i < 0 || j < 0 || l < 0) throw std::invalid_argument("negative exponent");
    if (i > caps_.x || j > caps_.y || l > caps_.z) return kZero;
    return c_[index(i, j, l)];
}

void MultiSeries::set(int i, int j, int l, Rational v) {
    if (i < 0 || j < 0 || l < 0 || i > caps_.x || j > caps_.y || l > caps_.z)
        throw std::invalid_argument("exponent outside caps");
    c_[index(i, j, l)] = std::move(v);
}

bool MultiSeries::is_zero() const {
    for (const Rational& v : c_)
        if (v != 0) return false;
    return true;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    if (!(caps_ == o.caps_)) throw std::invalid_argument("caps mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
    if (!(caps_ == o.caps_)) throw std::invalid_argument("caps mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

MultiSeries MultiSeries::operator-() const {
    MultiSeries r(caps_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    if (!(a.caps_ == b.caps_)) throw std::invalid_argument("caps mismatch");
    MultiSeries r(a.caps_);
    const SeriesCaps& c = a.caps_;
    for (int i1 = 0; i1 <= c.x; ++i1)
        for (int j1 = 0; j1 <= c.y; ++j1)
            for (int l1 = 0; l1 <= c.z; ++l1) {
                const Rational& v1 = a.c_[a.index(i1, j1, l1)];
                if (v1 == 0) continue;
                for (int i2 = 0; i1 + i2 <= c.x; ++i2)
                    for (int j2 = 0; j1 + j2 <= c.y; ++j2)
                        for (int l2 = 0; l1 + l2 <= c.z; ++l2) {
                            const Rational& v2 = b.c_[b.index(i2, j2, l2)];
                            if (v2 == 0) continue;
                            r.c_[r.index(i1 + i2, j1 + j2, l1 + l2)] += v1 * v2;
                        }
            }
    return r;
}

std::array<int, 3> MultiSeries::valuation() const {
    std::array<int, 3> m = {caps_.x + 1, caps_.y + 1, caps_.z + 1};
    bool any = false;
    for (int i = 0; i <= caps_.x; ++i)
        for (int j = 0; j <= caps_.y; ++j)
            for (int l = 0; l <= caps_.z; ++l)
                if (c_[index(i, j, l)] != 0) {
                    any = true;
                    m[0] = std::min(m[0], i);
                    m[1] = std::min(m[1], j);
                    m[2] = std::min(m[2], l);
                }
    if (!any) return {0, 0, 0};
    return m;
}

MultiSeries MultiSeries::shift_down(const std::array<int, 3>& m) const {
    MultiSeries r(caps_);
    for (int i = 0; i <= caps_.x; ++i)
        for (int j = 0; j <= caps_.y; ++j)
            for (int l = 0; l <= caps_.z; ++l) {
                const Rational& v = c_[index(i, j, l)];
                if (v == 0) continue;
                if (i < m[0] || j < m[1] || l < m[2])
                    throw std::domain_error("series not divisible by monomial");
                r.c_[r.index(i - m[0], j - m[1], l - m[2])] = v;
            }
    return r;
}

MultiSeries MultiSeries::shift_up(const std::array<int, 3>& m) const {
    MultiSeries r(caps_);
    for (int i = 0; i <= caps_.x; ++i)
        for (int j = 0; j <= caps_.y; ++j)
            for (int l = 0; l <= caps_.z; ++l) {
                const Rational& v = c_[index(i, j, l)];
                if (v == 0) continue;
                const int ni = i + m[0], nj = j + m[1], nl = l + m[2];
                if (ni <= caps_.x && nj <= caps_.y && nl <= caps_.z)
                    r.c_[r.index(ni, nj, nl)] = v;
            }
    return r;
}

MultiSeries MultiSeries::div(const MultiSeries& d) const {
    if (!(caps_ == d.caps_)) throw std::invalid_argument("caps mismatch");
    if (d.is_zero()) throw std::domain_error("division by zero series");
    if (is_zero()) return MultiSeries(caps_);

    const auto md = d.valuation();
    const MultiSeries den = d.shift_down(md);
    if (den.at(0, 0, 0) == 0)
        throw std::domain_error("divisor is not a monomial times a unit");
    // the numerator must absorb the divisor's monomial
    const MultiSeries num = shift_down(md);

    MultiSeries q(caps_);
    const Rational inv0 = Rational(1) / den.at(0, 0, 0);
    // graded long division: coefficients of q in increasing total degree
    const int dmax = caps_.x + caps_.y + caps_.z;
    for (int deg = 0; deg <= dmax; ++deg) {
        for (int i = 0; i <= std::min(deg, caps_.x); ++i)
            for (int j = 0; j <= std::min(deg - i, caps_.y); ++j) {
                const int l = deg - i - j;
                if (l > caps_.z) continue;
                Rational acc = num.at(i, j, l);
                for (int a = 0; a <= i; ++a)
                    for (int b = 0; b <= j; ++b)
                        for (int c = 0; c <= l; ++c) {
                            if (a == i && b == j && c == l) continue;
                            const Rational& dv = den.at(i - a, j - b, l - c);
                            if (dv == 0) continue;
                            const Rational& qv = q.at(a, b, c);
                            if (qv == 0) continue;
                            acc -= dv * qv;
                        }
                if (acc != 0) q.set(i, j, l, acc * inv0);
            }
    }
    return q;
}

MultiSeries MultiSeries::sqrt() const {
    const Rational c0 = at(0, 0, 0);
    if (c0 <= 0) throw std::domain_error("sqrt: constant term must be positive");
    const BigInt num = boost::multiprecision::numerator(c0);
    const BigInt den = boost::multiprecision::denominator(c0);
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den)
        throw std::domain_error("sqrt: constant term is not a rational square");
    MultiSeries u = MultiSeries::constant(Rational(rn, rd), caps_);
    const MultiSeries half = MultiSeries::constant(Rational(1, 2), caps_);
    // Newton doubles the correct degree each step
    int steps = 1;
    while ((1 << steps) <= caps_.x + caps_.y + caps_.z + 1) ++steps;
    for (int s = 0; s <= steps; ++s) u = half * (u + this->div(u));
    if (!((u * u) - *this).is_zero())
        throw std::domain_error("sqrt: iteration failed to converge");
    return u;
}

MultiSeries MultiSeries::truncated(SeriesCaps caps) const {
    check_caps(caps);
    if (!caps_.contains(caps))
        throw std::invalid_argument("truncated: target caps exceed current caps");
    MultiSeries r(caps);
    for (int i = 0; i <= caps.x; ++i)
        for (int j = 0; j <= caps.y; ++j)
            for (int l = 0; l <= caps.z; ++l) r.set(i, j, l, at(i, j, l));
    return r;
}

MultiSeries MultiSeries::slice_z0() const {
    MultiSeries r({caps_.x, caps_.y, 0});
    for (int i = 0; i <= caps_.x; ++i)
        for (int j = 0; j <= caps_.y; ++j) r.set(i, j, 0, at(i, j, 0));
    return r;
}

MultiSeries MultiSeries::eval_z_one() const {
    MultiSeries r({caps_.x, caps_.y, 0});
    for (int i = 0; i <= caps_.x; ++i)
        for (int j = 0; j <= caps_.y; ++j) {
            Rational s = 0;
            for (int l = 0; l <= caps_.z; ++l) s += at(i, j, l);
            r.set(i, j, 0, s);
        }
    return r;
}

MultiSeries MultiSeries::z_derivative_at_one() const {
    MultiSeries r({caps_.x, caps_.y, 0});
    for (int i = 0; i <= caps_.x; ++i)
        for (int j = 0; j <= caps_.y; ++j) {
            Rational s = 0;
            for (int l = 1; l <= caps_.z; ++l) s += Rational(l) * at(i, j, l);
            r.set(i, j, 0, s);
        }
    return r;
}

MultiSeries MultiSeries::y_derivative_at_one() const {
    MultiSeries r({caps_.x, 0, caps_.z});
    for (int i = 0; i <= caps_.x; ++i)
        for (int l = 0; l <= caps_.z; ++l) {
            Rational s = 0;
            for (int j = 1; j <= caps_.y; ++j) s += Rational(j) * at(i, j, l);
            r.set(i, 0, l, s);
        }
    return r;
}

std::vector<Rational> MultiSeries::diagonal() const {
    const int m = std::min(caps_.x, caps_.y);
    std::vector<Rational> d;
    d.reserve(m + 1);
    for (int n = 0; n <= m; ++n) d.push_back(at(n, n, 0));
    return d;
}

}  // namespace faro
