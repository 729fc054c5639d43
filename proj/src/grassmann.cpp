#include "berez/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace berez {

int koszul_sign(std::uint32_t a, std::uint32_t b) {
    // Each generator in b moves left past every generator in a with a
    // larger index; count those crossings.
    int swaps = 0;
    std::uint32_t rest = b;
    while (rest) {
        const std::uint32_t low = rest & (~rest + 1);
        swaps += std::popcount(a & ~(low | (low - 1)));
        rest ^= low;
    }
    return (swaps & 1) ? -1 : 1;
}

static void check_generator_count(int n) {
    if (n < 0 || n > GrassmannElement::max_generators)
        throw DimensionError("generator count " + std::to_string(n) + " out of range [0, " +
                             std::to_string(GrassmannElement::max_generators) + "]");
}

GrassmannElement GrassmannElement::zero(int n_generators) {
    check_generator_count(n_generators);
    GrassmannElement g;
    g.n_gens_ = n_generators;
    return g;
}

GrassmannElement GrassmannElement::constant(int n_generators, Rational c) {
    return monomial(n_generators, 0u, std::move(c));
}

GrassmannElement GrassmannElement::generator(int n_generators, int index) {
    if (index < 1 || index > n_generators)
        throw DimensionError("generator index " + std::to_string(index) + " out of range");
    return monomial(n_generators, 1u << (index - 1), Rational(1));
}

GrassmannElement GrassmannElement::monomial(int n_generators, std::uint32_t mask, Rational c) {
    check_generator_count(n_generators);
    if (n_generators < 32 && (mask >> n_generators) != 0)
        throw DimensionError("monomial uses generators beyond g" + std::to_string(n_generators));
    GrassmannElement g;
    g.n_gens_ = n_generators;
    if (!c.is_zero()) g.terms_.emplace_back(mask, std::move(c));
    return g;
}

GrassmannElement GrassmannElement::from_terms(int n_generators, std::vector<Term> terms) {
    check_generator_count(n_generators);
    GrassmannElement g;
    g.n_gens_ = n_generators;
    for (auto& [mask, coeff] : terms) {
        if (n_generators < 32 && (mask >> n_generators) != 0)
            throw DimensionError("monomial uses generators beyond g" + std::to_string(n_generators));
        g.terms_.emplace_back(mask, std::move(coeff));
    }
    g.normalize();
    return g;
}

Rational GrassmannElement::coefficient(std::uint32_t mask) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                                     [](const Term& t, std::uint32_t m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask) return it->second;
    return Rational(0);
}

bool GrassmannElement::is_even() const {
    for (const auto& [mask, coeff] : terms_)
        if (std::popcount(mask) & 1) return false;
    return true;
}

bool GrassmannElement::is_odd() const {
    for (const auto& [mask, coeff] : terms_)
        if (!(std::popcount(mask) & 1)) return false;
    return true;
}

Parity GrassmannElement::parity() const {
    if (is_even()) return Parity::even;
    if (is_odd()) return Parity::odd;
    return Parity::mixed;
}

GrassmannElement GrassmannElement::soul() const {
    GrassmannElement g = *this;
    if (!g.terms_.empty() && g.terms_.front().first == 0)
        g.terms_.erase(g.terms_.begin());
    return g;
}

GrassmannElement GrassmannElement::inverse() const {
    if (!is_even()) throw ParityError("inverse requires an even element");
    const Rational b = body();
    if (b.is_zero()) throw NotInvertibleError("element with zero body has no inverse");
    const Rational b_inv = b.inverse();
    // x = b + s  =>  x^{-1} = b^{-1} sum_k (-s/b)^k, finite since s is nilpotent.
    const GrassmannElement t = soul().scaled(-b_inv);
    GrassmannElement acc = one();
    GrassmannElement pw = one();
    for (int k = 1; k <= n_gens_; ++k) {
        pw = pw * t;
        if (pw.is_zero()) break;
        acc += pw;
    }
    return acc.scaled(b_inv);
}

GrassmannElement GrassmannElement::scaled(const Rational& r) const {
    GrassmannElement g = zero(n_gens_);
    if (r.is_zero()) return g;
    g.terms_.reserve(terms_.size());
    for (const auto& [mask, coeff] : terms_) g.terms_.emplace_back(mask, coeff * r);
    return g;
}

GrassmannElement GrassmannElement::div_exact(long k) const {
    if (k == 0) throw DomainError("division by zero integer");
    return scaled(Rational(1, k));
}

void GrassmannElement::check_same_algebra(const GrassmannElement& o) const {
    if (n_gens_ != o.n_gens_)
        throw DimensionError("mixing Grassmann algebras with " + std::to_string(n_gens_) +
                             " and " + std::to_string(o.n_gens_) + " generators");
}

void GrassmannElement::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& term : terms_) {
        if (!out.empty() && out.back().first == term.first)
            out.back().second += term.second;
        else
            out.push_back(std::move(term));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.second.is_zero(); }),
              out.end());
    terms_ = std::move(out);
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
    check_same_algebra(o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first < b->first) {
            merged.push_back(*a++);
        } else if (b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rational sum = a->second + b->second;
            if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), a, terms_.end());
    merged.insert(merged.end(), b, o.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
    return *this += -o;
}

GrassmannElement operator-(const GrassmannElement& a) {
    return a.scaled(Rational(-1));
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    a.check_same_algebra(b);
    std::vector<GrassmannElement::Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma & mb) continue; // repeated generator
            Rational c = ca * cb;
            if (koszul_sign(ma, mb) < 0) c = -c;
            products.emplace_back(ma | mb, std::move(c));
        }
    }
    GrassmannElement out = GrassmannElement::zero(a.n_gens_);
    out.terms_ = std::move(products);
    out.normalize();
    return out;
}

std::string GrassmannElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, coeff] : terms_) {
        if (!first) os << (coeff.sign() < 0 ? " - " : " + ");
        else if (coeff.sign() < 0) os << "-";
        first = false;
        os << coeff.abs().to_string();
        std::uint32_t rest = mask;
        if (rest) os << "*";
        for (int i = 0; rest; ++i, rest >>= 1)
            if (rest & 1) os << "g" << (i + 1);
    }
    return os.str();
}

GrassmannElement exp_soul(const GrassmannElement& x) {
    if (!x.body().is_zero())
        throw DomainError("exp requires an element with zero body");
    GrassmannElement acc = x.one();
    GrassmannElement pw = x.one();
    long factorial = 1;
    for (int k = 1; k <= x.generators(); ++k) {
        pw = pw * x;
        if (pw.is_zero()) break;
        factorial *= k;
        acc += pw.div_exact(factorial);
    }
    return acc;
}

} // namespace berez
