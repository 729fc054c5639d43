#include "berez/poly.hpp"

#include <sstream>

namespace berez {

GrassmannPoly GrassmannPoly::zero(int n_generators) {
    GrassmannPoly p;
    p.n_gens_ = n_generators;
    GrassmannElement::zero(n_generators); // range check
    return p;
}

GrassmannPoly GrassmannPoly::constant(GrassmannElement c) {
    GrassmannPoly p = zero(c.generators());
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

GrassmannPoly GrassmannPoly::variable(int n_generators) {
    GrassmannPoly p = zero(n_generators);
    p.coeffs_.push_back(GrassmannElement::zero(n_generators));
    p.coeffs_.push_back(GrassmannElement::constant(n_generators, Rational(1)));
    return p;
}

GrassmannPoly GrassmannPoly::from_coefficients(int n_generators, std::vector<GrassmannElement> coeffs) {
    GrassmannPoly p = zero(n_generators);
    for (const auto& c : coeffs)
        if (c.generators() != n_generators)
            throw DimensionError("polynomial coefficient from a different algebra");
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

GrassmannElement GrassmannPoly::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return GrassmannElement::zero(n_gens_);
    return coeffs_[i];
}

bool GrassmannPoly::is_even() const {
    for (const auto& c : coeffs_)
        if (!c.is_even()) return false;
    return true;
}

bool GrassmannPoly::is_odd() const {
    for (const auto& c : coeffs_)
        if (!c.is_odd()) return false;
    return true;
}

GrassmannPoly GrassmannPoly::inverse() const {
    if (!is_unit())
        throw NotInvertibleError("only invertible constants have polynomial inverses");
    return constant(coeffs_[0].inverse());
}

GrassmannPoly GrassmannPoly::scaled(const GrassmannElement& c) const {
    GrassmannPoly p = zero(n_gens_);
    p.coeffs_.reserve(coeffs_.size());
    for (const auto& own : coeffs_) p.coeffs_.push_back(c * own);
    p.trim();
    return p;
}

GrassmannPoly GrassmannPoly::div_exact(long k) const {
    GrassmannPoly p = zero(n_gens_);
    p.coeffs_.reserve(coeffs_.size());
    for (const auto& own : coeffs_) p.coeffs_.push_back(own.div_exact(k));
    return p;
}

GrassmannElement GrassmannPoly::eval(const GrassmannElement& at) const {
    if (!at.is_even()) throw ParityError("polynomial evaluation point must be even");
    if (at.generators() != n_gens_)
        throw DimensionError("evaluation point from a different algebra");
    GrassmannElement acc = GrassmannElement::zero(n_gens_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

void GrassmannPoly::check_same_algebra(const GrassmannPoly& o) const {
    if (n_gens_ != o.n_gens_)
        throw DimensionError("mixing polynomials over different Grassmann algebras");
}

void GrassmannPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GrassmannPoly& GrassmannPoly::operator+=(const GrassmannPoly& o) {
    check_same_algebra(o);
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), GrassmannElement::zero(n_gens_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

GrassmannPoly& GrassmannPoly::operator-=(const GrassmannPoly& o) {
    return *this += -o;
}

GrassmannPoly operator-(const GrassmannPoly& a) {
    GrassmannPoly p = GrassmannPoly::zero(a.n_gens_);
    p.coeffs_.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) p.coeffs_.push_back(-c);
    return p;
}

GrassmannPoly operator*(const GrassmannPoly& a, const GrassmannPoly& b) {
    a.check_same_algebra(b);
    GrassmannPoly p = GrassmannPoly::zero(a.n_gens_);
    if (a.is_zero() || b.is_zero()) return p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1,
                     GrassmannElement::zero(a.n_gens_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.trim();
    return p;
}

std::string GrassmannPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << " + ";
        os << "(" << coeffs_[i].to_string() << ")";
        if (i == 1) os << "*z";
        if (i > 1) os << "*z^" << i;
    }
    return os.str();
}

} // namespace berez
