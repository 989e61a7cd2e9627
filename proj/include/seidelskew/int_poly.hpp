#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "seidelskew/bigint.hpp"

namespace seidelskew {

/// Dense univariate polynomial with exact coefficients, index = degree.
/// Normalized so the leading coefficient is nonzero; the zero polynomial is
/// the empty coefficient list (degree -1).
template <class Coeff>
class DensePoly {
   public:
    DensePoly() = default;
    DensePoly(std::initializer_list<Coeff> ascending) : c_(ascending) { normalize(); }
    explicit DensePoly(std::vector<Coeff> ascending) : c_(std::move(ascending)) { normalize(); }

    static DensePoly constant(Coeff v) { return DensePoly({std::move(v)}); }

    /// x^k with unit coefficient.
    static DensePoly monomial(int k, Coeff coeff = Coeff(1)) {
        std::vector<Coeff> c(static_cast<std::size_t>(k) + 1, Coeff(0));
        c.back() = std::move(coeff);
        return DensePoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^k; zero beyond the degree.
    const Coeff& coeff(int k) const {
        static const Coeff zero(0);
        if (k < 0 || k > degree()) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<Coeff>& coeffs() const { return c_; }

    bool operator==(const DensePoly&) const = default;

    DensePoly operator-() const {
        auto c = c_;
        for (auto& v : c) v = -v;
        return DensePoly(std::move(c));
    }

    DensePoly operator+(const DensePoly& o) const {
        std::vector<Coeff> c(std::max(c_.size(), o.c_.size()), Coeff(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
        return DensePoly(std::move(c));
    }

    DensePoly operator-(const DensePoly& o) const { return *this + (-o); }

    DensePoly operator*(const DensePoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Coeff> c(c_.size() + o.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        return DensePoly(std::move(c));
    }

    DensePoly pow(int e) const {
        DensePoly r = constant(Coeff(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Coeff eval(const Coeff& x) const {
        Coeff acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Horner evaluation at a complex point; coefficients go through double,
    /// so callers must keep |coeff| within exact double range (< 2^53).
    std::complex<double> eval(const std::complex<double>& x) const {
        std::complex<double> acc(0.0, 0.0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + std::complex<double>(it->template convert_to<double>(), 0.0);
        return acc;
    }

    /// Degree-ascending decimal strings, the wire form used by JSON reports.
    std::vector<std::string> decimal_coeffs() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(to_decimal(v));
        return out;
    }

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<BigRat>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<BigRat> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

}  // namespace seidelskew
