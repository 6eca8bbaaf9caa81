#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parstream/stream.hpp"

namespace parstream {

/// Coefficients are arbitrary-precision integers: repeated products and
/// the big-coefficient benchmark variant overflow any fixed width.
using coeff_t = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

struct ring_mismatch_error : std::logic_error {
    ring_mismatch_error() : std::logic_error("polynomial ring mismatch") {}
};

enum class monomial_order { lex };

struct poly_ring {
    std::uint32_t variable_count = 0;
    monomial_order order = monomial_order::lex;
    friend bool operator==(const poly_ring&, const poly_ring&) = default;
};

/// Exponent vector, one non-negative entry per ring variable.
/// Multiplication adds exponents componentwise.
class monomial {
public:
    monomial() = default;
    explicit monomial(std::vector<std::uint32_t> exponents)
        : exps_(std::move(exponents)) {}

    /// The multiplicative unit (all exponents zero).
    static monomial unit(std::uint32_t variable_count) {
        return monomial(std::vector<std::uint32_t>(variable_count, 0));
    }

    /// x_index, zero-based.
    static monomial variable(std::uint32_t variable_count, std::uint32_t index) {
        std::vector<std::uint32_t> e(variable_count, 0);
        e.at(index) = 1;
        return monomial(std::move(e));
    }

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    monomial operator*(const monomial& o) const;

    friend bool operator==(const monomial&, const monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Total order on equal-length monomials; lexicographic on the exponent
/// vector. Throws ring_mismatch_error on a length mismatch.
std::strong_ordering monomial_compare(const monomial& a, const monomial& b);

struct term {
    monomial mono;
    coeff_t coeff;
    friend bool operator==(const term&, const term&) = default;
};

/// Sparse polynomial in distributive representation: a stream of terms in
/// strictly decreasing monomial order with no zero coefficients. The term
/// stream may still be unevaluated; all arithmetic preserves both
/// invariants for every forced prefix.
class polynomial {
public:
    /// Wraps a term stream as-is; the caller guarantees well-formedness.
    polynomial(poly_ring ring, stream<term> terms)
        : ring_(ring), terms_(std::move(terms)) {}

    static polynomial zero(poly_ring ring) { return polynomial(ring, {}); }
    static polynomial constant(poly_ring ring, coeff_t c);

    const poly_ring& ring() const noexcept { return ring_; }
    const stream<term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.is_empty(); }

private:
    poly_ring ring_;
    stream<term> terms_;
};

/// Builds a polynomial from terms already in strictly decreasing order
/// with no zero coefficients (validated), tails suspended under ctx.
polynomial from_terms(std::vector<term> terms, poly_ring ring, const eval_context& ctx);

/// Forces the whole term stream into a vector.
std::vector<term> to_terms(const polynomial& p);

/// x * (c * m): every term (s, a) becomes (s*m, a*c). c must be nonzero.
/// A zero product coefficient (possible only over rings with zero
/// divisors) is dropped by taking the result's tail.
polynomial multiply_by_term(const polynomial& x, const monomial& m, const coeff_t& c);

/// Merge by decreasing monomial order; equal monomials add coefficients,
/// and a zero sum is elided by forcing the merged tail.
polynomial plus(const polynomial& x, const polynomial& y);

/// Product as a fold of multiply-by-a-term-and-add over y's terms.
polynomial times(const polynomial& x, const polynomial& y);

/// Data-parallel control variant: the partial products x * (a_i, b_i) are
/// computed independently (plain sorted-vector kernels, one pool task
/// each) and combined by pairwise merge reduction. Same value as times().
polynomial times_data_parallel(const polynomial& x, const polynomial& y,
                               const eval_context& ctx);

/// Every coefficient multiplied by c (c != 0).
polynomial scale(const polynomial& p, const coeff_t& c);

polynomial negate(const polynomial& p);

/// The Fateman-style test pair: p = (1 + x1 + ... + xv)^k and p + 1,
/// fully forced. When big is set every coefficient of both outputs is
/// multiplied by 10000000001.
std::pair<polynomial, polynomial> fateman_input(unsigned k, std::uint32_t variable_count,
                                                bool big);

/// Validator walk: strictly decreasing monomials of the ring's width and
/// no zero coefficients. Forces the whole stream.
bool well_formed(const polynomial& p);

/// Renders terms in order as c*x1^e1*...*xv^ev (zero exponents omitted,
/// bare coefficient for the constant term), '+'-separated; the zero
/// polynomial renders as "0". The format is stable: goldens and
/// checksums hash it.
std::string to_string(const polynomial& p);

}  // namespace parstream
