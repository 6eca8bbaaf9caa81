#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracles {

using parstream::coeff_t;
using parstream::monomial;
using parstream::term;

std::vector<std::int64_t> eratosthenes_below(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n <= 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n), false);
    for (std::int64_t i = 2; i < n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j < n; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

namespace {

std::size_t dense_size(std::uint32_t vars, std::uint32_t degree_bound) {
    std::size_t size = 1;
    for (std::uint32_t i = 0; i < vars; ++i) size *= degree_bound + 1;
    return size;
}

std::size_t index_of(const std::vector<std::uint32_t>& exps, std::uint32_t degree_bound) {
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (std::uint32_t e : exps) {
        if (e > degree_bound) throw std::out_of_range("exponent exceeds dense bound");
        idx += e * stride;
        stride *= degree_bound + 1;
    }
    return idx;
}

std::vector<std::uint32_t> exps_of(std::size_t idx, std::uint32_t vars,
                                   std::uint32_t degree_bound) {
    std::vector<std::uint32_t> exps(vars);
    for (std::uint32_t i = 0; i < vars; ++i) {
        exps[i] = static_cast<std::uint32_t>(idx % (degree_bound + 1));
        idx /= degree_bound + 1;
    }
    return exps;
}

}  // namespace

dense_poly dense_zero(std::uint32_t vars, std::uint32_t degree_bound) {
    dense_poly p{vars, degree_bound, {}};
    p.coeffs.assign(dense_size(vars, degree_bound), coeff_t(0));
    return p;
}

dense_poly dense_from_terms(const std::vector<term>& terms, std::uint32_t vars,
                            std::uint32_t degree_bound) {
    dense_poly p = dense_zero(vars, degree_bound);
    for (const term& t : terms)
        p.coeffs[index_of(t.mono.exponents(), degree_bound)] += t.coeff;
    return p;
}

dense_poly dense_add(const dense_poly& a, const dense_poly& b) {
    const std::uint32_t bound = std::max(a.degree_bound, b.degree_bound);
    dense_poly out = dense_zero(a.vars, bound);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        out.coeffs[index_of(exps_of(i, a.vars, a.degree_bound), bound)] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        out.coeffs[index_of(exps_of(i, b.vars, b.degree_bound), bound)] += b.coeffs[i];
    return out;
}

dense_poly dense_mul(const dense_poly& a, const dense_poly& b) {
    dense_poly out = dense_zero(a.vars, a.degree_bound + b.degree_bound);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        const auto ea = exps_of(i, a.vars, a.degree_bound);
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j] == 0) continue;
            const auto eb = exps_of(j, b.vars, b.degree_bound);
            std::vector<std::uint32_t> e(a.vars);
            for (std::uint32_t v = 0; v < a.vars; ++v) e[v] = ea[v] + eb[v];
            out.coeffs[index_of(e, out.degree_bound)] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

bool lex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<term> dense_to_terms(const dense_poly& p) {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] != 0) nonzero.push_back(i);
    std::vector<term> out;
    out.reserve(nonzero.size());
    for (std::size_t i : nonzero)
        out.push_back(term{monomial(exps_of(i, p.vars, p.degree_bound)), p.coeffs[i]});
    std::sort(out.begin(), out.end(), [](const term& x, const term& y) {
        return lex_less(y.mono.exponents(), x.mono.exponents());
    });
    return out;
}

std::vector<term> random_terms(std::mt19937_64& rng, std::uint32_t vars,
                               std::uint32_t max_exp, std::size_t max_terms,
                               int coeff_bound) {
    std::uniform_int_distribution<std::uint32_t> exp_dist(0, max_exp);
    std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<std::size_t> count_dist(0, max_terms);

    std::map<std::vector<std::uint32_t>, coeff_t> acc;
    const std::size_t wanted = count_dist(rng);
    for (std::size_t i = 0; i < wanted; ++i) {
        std::vector<std::uint32_t> exps(vars);
        for (auto& e : exps) e = exp_dist(rng);
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        acc[exps] = coeff_t(c);  // later draw wins; keeps monomials distinct
    }
    std::vector<term> out;
    out.reserve(acc.size());
    for (const auto& [exps, c] : acc) out.push_back(term{monomial(exps), c});
    std::sort(out.begin(), out.end(), [](const term& x, const term& y) {
        return lex_less(y.mono.exponents(), x.mono.exponents());
    });
    return out;
}

}  // namespace oracles
