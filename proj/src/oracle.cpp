#include "berez/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace berez {

std::vector<Rational> eigen_char_series(const EigenData& e, int max_k) {
    if (max_k < 0) throw DomainError("series order must be non-negative");
    // Numerator product, truncated.
    std::vector<Rational> c{Rational(1)};
    for (const auto& lambda : e.lambdas) {
        std::vector<Rational> next(std::min<std::size_t>(c.size() + 1, max_k + 1), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < next.size()) next[i] += c[i];
            if (i + 1 < next.size()) next[i + 1] += c[i] * lambda;
        }
        c = std::move(next);
    }
    c.resize(max_k + 1, Rational(0));
    // Series division by each (1 + mu z): g_k = f_k - mu g_{k-1}.
    for (const auto& mu : e.mus) {
        std::vector<Rational> g(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            g[k] = c[k];
            if (k > 0) g[k] -= mu * g[k - 1];
        }
        c = std::move(g);
    }
    return c;
}

Supermatrix diag_supermatrix(const EigenData& e, int n_generators) {
    const Dims d = e.dims();
    const int n = d.total();
    std::vector<GrassmannElement> entries(static_cast<std::size_t>(n) * n,
                                          GrassmannElement::zero(n_generators));
    for (int i = 0; i < d.p; ++i)
        entries[static_cast<std::size_t>(i) * n + i] =
            GrassmannElement::constant(n_generators, e.lambdas[i]);
    for (int i = 0; i < d.q; ++i)
        entries[static_cast<std::size_t>(d.p + i) * n + (d.p + i)] =
            GrassmannElement::constant(n_generators, e.mus[i]);
    return Supermatrix(d, std::move(entries));
}

Supermatrix conjugated(const EigenData& e, const Supermatrix& t) {
    return t * diag_supermatrix(e, t.generators()) * inverse(t);
}

namespace {

void enumerate_even(int p, int k, int from, std::vector<int>& acc,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(acc.size()) == k) {
        emit(acc);
        return;
    }
    for (int i = from; i <= p; ++i) {
        acc.push_back(i);
        enumerate_even(p, k, i + 1, acc, emit);
        acc.pop_back();
    }
}

void enumerate_odd(int q, int k, int from, std::vector<int>& acc,
                   const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(acc.size()) == k) {
        emit(acc);
        return;
    }
    for (int i = from; i <= q; ++i) {
        acc.push_back(i);
        enumerate_odd(q, k, i, acc, emit); // repeats allowed
        acc.pop_back();
    }
}

} // namespace

std::vector<ExteriorBasisVector> exterior_basis(Dims dims, int k) {
    if (k < 0) throw DomainError("exterior power order must be non-negative");
    std::vector<ExteriorBasisVector> basis;
    for (int r = 0; r <= std::min(k, dims.p); ++r) {
        const int s = k - r;
        if (s > 0 && dims.q == 0) continue;
        std::vector<int> evens;
        enumerate_even(dims.p, r, 1, evens, [&](const std::vector<int>& ev) {
            std::vector<int> odds;
            enumerate_odd(dims.q, s, 1, odds, [&](const std::vector<int>& od) {
                basis.push_back(ExteriorBasisVector{ev, od});
            });
        });
    }
    return basis;
}

long exterior_basis_size(Dims dims, int k) {
    // Convolution of C(p, r) with the multichoose count C(q + s - 1, s).
    auto binom = [](long n, long r) {
        if (r < 0 || r > n) return 0L;
        long out = 1;
        for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
        return out;
    };
    long total = 0;
    for (int r = 0; r <= std::min(k, dims.p); ++r) {
        const int s = k - r;
        total += binom(dims.p, r) * (s == 0 ? 1 : binom(dims.q + s - 1, s));
    }
    return total;
}

GrassmannElement exterior_power_trace(const Supermatrix& a, int k) {
    const Dims d = a.dims();
    if (exterior_basis_size(d, k) > 10000)
        throw Error("exterior power basis too large");
    const int p = d.p;
    const GrassmannElement zero = a.entries().front().zero();
    if (k == 0) return zero.one();

    // Codes 1..p are even directions, p+1..p+q odd ones.
    auto entry = [&](int i, int j) -> const GrassmannElement& { return a.at(i - 1, j - 1); };
    const int n = d.total();

    GrassmannElement trace = zero;
    for (const auto& w : exterior_basis(d, k)) {
        std::vector<int> target;
        for (int i : w.even_indices) target.push_back(i);
        for (int i : w.odd_indices) target.push_back(p + i);
        std::vector<int> target_count(static_cast<std::size_t>(n) + 1, 0);
        for (int i : target) ++target_count[static_cast<std::size_t>(i)];

        // Expand (A v_{t_1}) ^ ... ^ (A v_{t_k}) keeping, for each canonical
        // wedge word, the Grassmann coefficient standing to its right. Only
        // the diagonal entry is wanted, and each step appends one direction,
        // so any word leaving the target multiset can be dropped right away.
        std::map<std::vector<int>, GrassmannElement> state{{{}, zero.one()}};
        for (int step = 0; step < k; ++step) {
            const int t = target[static_cast<std::size_t>(step)];
            std::map<std::vector<int>, GrassmannElement> next;
            for (const auto& [word, coeff] : state) {
                const bool coeff_odd = !coeff.is_zero() && coeff.is_odd();
                std::vector<int> used(static_cast<std::size_t>(n) + 1, 0);
                for (int i : word) ++used[static_cast<std::size_t>(i)];
                for (int i = 1; i <= n; ++i) {
                    if (used[static_cast<std::size_t>(i)] >= target_count[static_cast<std::size_t>(i)])
                        continue;
                    const GrassmannElement& aij = entry(i, t);
                    if (aij.is_zero()) continue;
                    // (W c) ^ (v_i a): the coefficient hops over v_i first.
                    int sign = (coeff_odd && i > p) ? -1 : 1;
                    // Bubble v_i left into canonical position.
                    std::vector<int> new_word = word;
                    std::size_t pos = new_word.size();
                    bool dead = false;
                    while (pos > 0) {
                        const int left = new_word[pos - 1];
                        if (left < i) break;
                        if (left == i) {
                            if (i <= p) dead = true; // repeated even direction
                            break;
                        }
                        if (!(left > p && i > p)) sign = -sign;
                        --pos;
                    }
                    if (dead) continue;
                    new_word.insert(new_word.begin() + static_cast<std::ptrdiff_t>(pos), i);
                    GrassmannElement add = coeff * aij;
                    if (sign < 0) add = -add;
                    auto [it, inserted] = next.emplace(std::move(new_word), add);
                    if (!inserted) it->second += add;
                }
            }
            for (auto it = next.begin(); it != next.end();)
                it = it->second.is_zero() ? next.erase(it) : std::next(it);
            state = std::move(next);
        }

        const auto it = state.find(target);
        if (it == state.end()) continue;
        trace += w.parity() ? -it->second : it->second;
    }
    return trace;
}

long MatrixSampler::int_in(long lo, long hi) {
    // Plain modulo keeps draws identical across standard libraries.
    const unsigned long span = static_cast<unsigned long>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational MatrixSampler::small_rational() {
    long num = 0;
    while (num == 0) num = int_in(-3, 3);
    return Rational(num, int_in(1, 3));
}

GrassmannElement MatrixSampler::soul_monomial(int n_generators, bool odd) {
    std::vector<int> bits(static_cast<std::size_t>(n_generators));
    std::iota(bits.begin(), bits.end(), 0);
    for (std::size_t i = bits.size(); i > 1; --i)
        std::swap(bits[i - 1], bits[static_cast<std::size_t>(int_in(0, static_cast<long>(i) - 1))]);
    int grade = odd ? 1 : 2;
    if (odd && n_generators >= 3 && int_in(0, 3) == 0) grade = 3;
    if (!odd && n_generators >= 4 && int_in(0, 3) == 0) grade = 4;
    if (grade > n_generators) return GrassmannElement::zero(n_generators);
    std::uint32_t mask = 0;
    for (int b = 0; b < grade; ++b) mask |= 1u << bits[static_cast<std::size_t>(b)];
    return GrassmannElement::monomial(n_generators, mask, small_rational());
}

Supermatrix MatrixSampler::even_supermatrix(Dims dims, int n_generators, bool with_souls) {
    const int n = dims.total();
    std::vector<GrassmannElement> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool diagonal_block = (i < dims.p) == (j < dims.p);
            GrassmannElement e = GrassmannElement::zero(n_generators);
            if (diagonal_block) {
                e = GrassmannElement::constant(n_generators, Rational(int_in(-9, 9)));
                if (with_souls && n_generators >= 2 && int_in(0, 2) != 0)
                    e += soul_monomial(n_generators, false);
            } else if (with_souls && n_generators >= 1 && int_in(0, 2) != 0) {
                e = soul_monomial(n_generators, true);
            }
            entries.push_back(std::move(e));
        }
    }
    return Supermatrix(dims, std::move(entries));
}

Supermatrix MatrixSampler::soul_supermatrix(Dims dims, int n_generators) {
    const int n = dims.total();
    std::vector<GrassmannElement> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool diagonal_block = (i < dims.p) == (j < dims.p);
            GrassmannElement e = GrassmannElement::zero(n_generators);
            const int min_gens = diagonal_block ? 2 : 1;
            if (n_generators >= min_gens && int_in(0, 2) != 0)
                e = soul_monomial(n_generators, !diagonal_block);
            entries.push_back(std::move(e));
        }
    }
    return Supermatrix(dims, std::move(entries));
}

Supermatrix MatrixSampler::unit_conjugator(Dims dims, int n_generators) {
    const int n = dims.total();
    std::vector<GrassmannElement> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool diagonal_block = (i < dims.p) == (j < dims.p);
            GrassmannElement e = GrassmannElement::zero(n_generators);
            if (i == j) {
                e = GrassmannElement::constant(n_generators, Rational(1));
            } else if (diagonal_block && j > i) {
                e = GrassmannElement::constant(n_generators, Rational(int_in(-2, 2)));
            }
            if (!diagonal_block && n_generators >= 1 && int_in(0, 2) != 0)
                e += soul_monomial(n_generators, true);
            else if (diagonal_block && i != j && n_generators >= 2 && int_in(0, 3) == 0)
                e += soul_monomial(n_generators, false);
            entries.push_back(std::move(e));
        }
    }
    return Supermatrix(dims, std::move(entries));
}

EigenData MatrixSampler::eigen_data(Dims dims) {
    std::vector<Rational> pool;
    for (long v = 1; v <= 9; ++v) {
        pool.emplace_back(v);
        pool.emplace_back(-v);
    }
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[static_cast<std::size_t>(int_in(0, static_cast<long>(i) - 1))]);
    EigenData e;
    for (int i = 0; i < dims.p; ++i) e.lambdas.push_back(pool[static_cast<std::size_t>(i)]);
    for (int i = 0; i < dims.q; ++i) e.mus.push_back(pool[static_cast<std::size_t>(dims.p + i)]);
    return e;
}

} // namespace berez
