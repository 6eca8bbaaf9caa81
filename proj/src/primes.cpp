#include "parstream/primes.hpp"

#include <stdexcept>

namespace parstream {

stream<std::int64_t> sieve(stream<std::int64_t> s) {
    if (s.is_empty()) return {};
    const std::int64_t h = s.head();
    return stream<std::int64_t>::cons(
        h, s.tail_suspension().map([h](const stream<std::int64_t>& rest) {
            return sieve(filter(rest, [h](std::int64_t x) { return x % h != 0; }));
        }));
}

stream<std::int64_t> primes_up_to(std::int64_t n, const eval_context& ctx) {
    if (n < 2) throw std::invalid_argument("primes_up_to: n must be >= 2");
    return force_all(sieve(range(2, n, 1, ctx)));
}

}  // namespace parstream
