#pragma once

#include <array>
#include <vector>

#include "faro/rational.hpp"

namespace faro {

/// Inclusive per-variable degree bounds for a truncated series in x, y, z.
struct SeriesCaps {
    int x = 0, y = 0, z = 0;

    bool operator==(const SeriesCaps&) const = default;
    bool contains(const SeriesCaps& other) const {
        return other.x <= x && other.y <= y && other.z <= z;
    }
};

/// Truncated multivariate power series with exact rational coefficients.
/// Arithmetic is exact up to the caps; no floating point anywhere.
class MultiSeries {
public:
    explicit MultiSeries(SeriesCaps caps);

    static MultiSeries constant(const Rational& v, SeriesCaps caps);
    static MultiSeries variable(int axis, SeriesCaps caps);  // axis 0=x, 1=y, 2=z

    const SeriesCaps& caps() const { return caps_; }

    /// Coefficient of x^i y^j z^l; zero outside the caps.
    const Rational& at(int i, int j, int l) const;
    void set(int i, int j, int l, Rational v);

    bool is_zero() const;

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    MultiSeries operator-() const;

    /// Division with monomial factoring: the largest monomial dividing every
    /// term is removed from both operands first; if the divisor is still not
    /// a unit afterwards, throws std::domain_error (no guessing).
    MultiSeries div(const MultiSeries& d) const;

    /// Square root by Newton iteration, branch with positive constant term.
    /// The constant term must be a positive rational square.
    MultiSeries sqrt() const;

    /// Copy truncated to smaller caps.
    MultiSeries truncated(SeriesCaps caps) const;

    /// Componentwise minimum exponent over the support; {0,0,0} if zero.
    std::array<int, 3> valuation() const;

    /// Divide by the monomial x^m0 y^m1 z^m2 (throws if not divisible) or
    /// multiply by it (terms beyond the caps are dropped).
    MultiSeries shift_down(const std::array<int, 3>& m) const;
    MultiSeries shift_up(const std::array<int, 3>& m) const;

    /// Slice at z = 0.
    MultiSeries slice_z0() const;
    /// Sum over z exponents (evaluation at z = 1).
    MultiSeries eval_z_one() const;
    /// Sum of t * coeff over z exponents (d/dz at z = 1).
    MultiSeries z_derivative_at_one() const;
    /// Same on the y axis.
    MultiSeries y_derivative_at_one() const;

    /// Coefficients of x^n y^n z^0 for n = 0..min(caps.x, caps.y).
    std::vector<Rational> diagonal() const;

private:
    std::size_t index(int i, int j, int l) const;

    SeriesCaps caps_;
    std::vector<Rational> c_;
};

}  // namespace faro
