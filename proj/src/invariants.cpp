#include "berez/invariants.hpp"

namespace berez {

std::map<int, GrassmannElement> dual_coeffs(const Supermatrix& a, int depth) {
    if (depth < 0) throw DomainError("dual coefficient depth must be non-negative");
    const int top = a.dims().p - a.dims().q;
    const GrassmannElement ber = berezinian_classical(a);
    const auto inv_series = char_series(inverse(a), depth);
    std::map<int, GrassmannElement> out;
    for (int k = top; k >= top - depth; --k) out[k] = ber * inv_series.at(top - k);
    return out;
}

std::map<int, GrassmannElement> gamma_seq(const Supermatrix& a, int lo, int hi) {
    if (lo > hi) throw DomainError("empty gamma window");
    const int top = a.dims().p - a.dims().q;
    const auto cs = char_series(a, std::max(hi, 0));
    std::map<int, GrassmannElement> c_star;
    if (lo <= top) c_star = dual_coeffs(a, top - lo);
    const GrassmannElement zero = a.entries().front().zero();
    std::map<int, GrassmannElement> out;
    for (int k = lo; k <= hi; ++k) {
        const GrassmannElement ck = k >= 0 ? cs.at(k) : zero;
        const auto it = c_star.find(k);
        const GrassmannElement star = it != c_star.end() ? it->second : zero;
        out[k] = ck - star;
    }
    return out;
}

GrassmannElement hankel_det(const std::map<int, GrassmannElement>& seq, int k, int size) {
    if (size <= 0) throw DomainError("Hankel size must be positive");
    std::vector<std::vector<GrassmannElement>> m(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            const auto it = seq.find(k + i + j);
            if (it == seq.end())
                throw Error("sequence window does not cover index " + std::to_string(k + i + j));
            m[i].push_back(it->second);
        }
    }
    return even_block_det(m, seq.begin()->second.zero());
}

GrassmannPoly min_poly(const Supermatrix& a) {
    const int order = a.dims().p + a.dims().q;
    const GrassmannElement r = resultant(char_series(a, order));
    if (!r.is_unit()) throw NonGenericError("resultant body singular");
    const auto shifted = characteristic_matrix(a);
    const auto cs = char_series(shifted, order);
    const GrassmannPoly product = ber_plus(cs) * ber_minus(cs);
    return product.scaled(r.inverse());
}

} // namespace berez
