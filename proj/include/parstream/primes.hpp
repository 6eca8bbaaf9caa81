#pragma once

#include <cstdint>

#include "parstream/stream.hpp"

namespace parstream {

/// Trial-division sieve over a strictly increasing stream whose first
/// element is >= 2: keeps the head, recursively sieves the tail filtered
/// of the head's multiples. Deliberately the naive recursion — it scans
/// every divisor — because its stream shape is what gets parallelized.
stream<std::int64_t> sieve(stream<std::int64_t> s);

/// All primes below n (n >= 2), forced to completion under ctx.
stream<std::int64_t> primes_up_to(std::int64_t n, const eval_context& ctx);

}  // namespace parstream
