#include "parstream/polynomial.hpp"

#include <algorithm>
#include <memory>

namespace parstream {

monomial monomial::operator*(const monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw ring_mismatch_error();
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
    return monomial(std::move(e));
}

std::strong_ordering monomial_compare(const monomial& a, const monomial& b) {
    if (a.size() != b.size()) throw ring_mismatch_error();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) <=> b.exponent(i);
    }
    return std::strong_ordering::equal;
}

polynomial polynomial::constant(poly_ring ring, coeff_t c) {
    if (c == 0) return zero(ring);
    return polynomial(
        ring, stream<term>::cons(term{monomial::unit(ring.variable_count), std::move(c)},
                                 suspension<stream<term>>::ready({})));
}

polynomial from_terms(std::vector<term> terms, poly_ring ring, const eval_context& ctx) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].mono.size() != ring.variable_count)
            throw ring_mismatch_error();
        if (terms[i].coeff == 0)
            throw std::invalid_argument("from_terms: zero coefficient");
        if (i > 0 && monomial_compare(terms[i - 1].mono, terms[i].mono) <= 0)
            throw std::invalid_argument("from_terms: terms not strictly decreasing");
    }
    return polynomial(ring, from_vector(std::move(terms), ctx));
}

std::vector<term> to_terms(const polynomial& p) { return to_vector(p.terms()); }

namespace {

void require_same_ring(const polynomial& x, const polynomial& y) {
    if (!(x.ring() == y.ring())) throw ring_mismatch_error();
}

stream<term> multiply_stream(const stream<term>& x, const monomial& m, const coeff_t& c) {
    if (x.is_empty()) return {};
    const term& xt = x.head();
    term head{xt.mono * m, xt.coeff * c};
    const bool dropped = (head.coeff == 0);
    stream<term> result = stream<term>::cons(
        std::move(head), x.tail_suspension().map([m, c](const stream<term>& rest) {
            return multiply_stream(rest, m, c);
        }));
    return dropped ? result.tail() : result;
}

stream<term> plus_stream(const stream<term>& x, const stream<term>& y) {
    if (x.is_empty()) return y;
    if (y.is_empty()) return x;
    const term& xt = x.head();
    const term& yt = y.head();
    const auto cmp = monomial_compare(xt.mono, yt.mono);
    if (cmp > 0) {
        return stream<term>::cons(
            xt, x.tail_suspension().map([y](const stream<term>& tx) {
                return plus_stream(tx, y);
            }));
    }
    if (cmp < 0) {
        return stream<term>::cons(
            yt, y.tail_suspension().map([x](const stream<term>& ty) {
                return plus_stream(x, ty);
            }));
    }
    coeff_t c = xt.coeff + yt.coeff;
    const bool cancels = (c == 0);
    auto rest = x.tail_suspension().bind(
        [ys = y.tail_suspension()](const stream<term>& tx) {
            return ys.map([tx](const stream<term>& ty) { return plus_stream(tx, ty); });
        });
    stream<term> result =
        stream<term>::cons(term{xt.mono, std::move(c)}, std::move(rest));
    // The one place the merge must block: a cancelled head forces the
    // suspended remainder to find the next surviving term.
    return cancels ? result.tail() : result;
}

}  // namespace

polynomial multiply_by_term(const polynomial& x, const monomial& m, const coeff_t& c) {
    if (c == 0) throw std::invalid_argument("multiply_by_term: zero coefficient");
    if (m.size() != x.ring().variable_count) throw ring_mismatch_error();
    return polynomial(x.ring(), multiply_stream(x.terms(), m, c));
}

polynomial plus(const polynomial& x, const polynomial& y) {
    require_same_ring(x, y);
    return polynomial(x.ring(), plus_stream(x.terms(), y.terms()));
}

polynomial times(const polynomial& x, const polynomial& y) {
    require_same_ring(x, y);
    polynomial acc = polynomial::zero(x.ring());
    for (stream<term> s = y.terms(); !s.is_empty(); s = s.tail())
        acc = plus(acc, multiply_by_term(x, s.head().mono, s.head().coeff));
    return acc;
}

namespace {

// Classical sorted-vector kernels for the data-parallel control path.

std::vector<term> mul_terms(const std::vector<term>& xs, const monomial& m,
                            const coeff_t& c) {
    std::vector<term> out;
    out.reserve(xs.size());
    for (const term& t : xs) {
        coeff_t prod = t.coeff * c;
        if (prod == 0) continue;
        out.push_back(term{t.mono * m, std::move(prod)});
    }
    return out;
}

std::vector<term> merge_terms(const std::vector<term>& a, const std::vector<term>& b) {
    std::vector<term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const auto cmp = monomial_compare(a[i].mono, b[j].mono);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(b[j++]);
        } else {
            coeff_t c = a[i].coeff + b[j].coeff;
            if (c != 0) out.push_back(term{a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

}  // namespace

polynomial times_data_parallel(const polynomial& x, const polynomial& y,
                               const eval_context& ctx) {
    require_same_ring(x, y);
    auto xs = std::make_shared<const std::vector<term>>(to_terms(x));
    const std::vector<term> ys = to_terms(y);
    if (xs->empty() || ys.empty()) return polynomial::zero(x.ring());

    std::vector<suspension<std::vector<term>>> parts;
    parts.reserve(ys.size());
    for (const term& t : ys)
        parts.push_back(delay(
            [xs, m = t.mono, c = t.coeff] { return mul_terms(*xs, m, c); }, ctx));

    while (parts.size() > 1) {
        std::vector<suspension<std::vector<term>>> next;
        next.reserve(parts.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
            auto a = parts[i];
            auto b = parts[i + 1];
            next.push_back(delay([a, b] { return merge_terms(a.force(), b.force()); }, ctx));
        }
        if (parts.size() % 2 == 1) next.push_back(parts.back());
        parts = std::move(next);
    }
    return from_terms(parts.front().force(), x.ring(), ctx);
}

polynomial scale(const polynomial& p, const coeff_t& c) {
    return multiply_by_term(p, monomial::unit(p.ring().variable_count), c);
}

polynomial negate(const polynomial& p) { return scale(p, coeff_t(-1)); }

std::pair<polynomial, polynomial> fateman_input(unsigned k, std::uint32_t variable_count,
                                                bool big) {
    if (k < 1) throw std::invalid_argument("fateman_input: k must be >= 1");
    const poly_ring ring{variable_count};
    const auto ctx = eval_context::lazy();

    // 1 + x1 + ... + xv; this term order is already strictly decreasing.
    std::vector<term> base_terms;
    base_terms.reserve(variable_count + 1);
    for (std::uint32_t i = 0; i < variable_count; ++i)
        base_terms.push_back(term{monomial::variable(variable_count, i), 1});
    base_terms.push_back(term{monomial::unit(variable_count), 1});
    const polynomial base = from_terms(std::move(base_terms), ring, ctx);

    polynomial p = base;
    for (unsigned i = 1; i < k; ++i) p = times(p, base);
    polynomial q = plus(p, polynomial::constant(ring, 1));
    if (big) {
        const coeff_t factor{10000000001LL};
        p = scale(p, factor);
        q = scale(q, factor);
    }
    force_all(p.terms());
    force_all(q.terms());
    return {std::move(p), std::move(q)};
}

bool well_formed(const polynomial& p) {
    monomial prev;
    bool have_prev = false;
    for (stream<term> s = p.terms(); !s.is_empty(); s = s.tail()) {
        const term& t = s.head();
        if (t.mono.size() != p.ring().variable_count) return false;
        if (t.coeff == 0) return false;
        if (have_prev && monomial_compare(prev, t.mono) <= 0) return false;
        prev = t.mono;
        have_prev = true;
    }
    return true;
}

std::string to_string(const polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (stream<term> s = p.terms(); !s.is_empty(); s = s.tail()) {
        if (!first) out += '+';
        first = false;
        const term& t = s.head();
        out += t.coeff.str();
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono.exponent(i) == 0) continue;
            out += "*x";
            out += std::to_string(i + 1);
            out += '^';
            out += std::to_string(t.mono.exponent(i));
        }
    }
    return out;
}

}  // namespace parstream
