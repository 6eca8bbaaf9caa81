#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "parstream/suspension.hpp"

namespace parstream {

struct empty_stream_error : std::logic_error {
    empty_stream_error() : std::logic_error("empty stream has no head or tail") {}
};

/// Cons-cell stream whose tail is a suspension<stream>.
///
/// A stream is either empty or a cell of head element plus suspended
/// tail. Handles are cheap shared references: copying never copies cells,
/// and a shared tail is evaluated once no matter how many handles force
/// it. head() and tail_suspension() never force; tail() does.
template <typename A>
class stream {
    struct cell {
        A head;
        suspension<stream<A>> tail;
        std::atomic<bool> tail_forced{false};
        cell(A h, suspension<stream<A>> t)
            : head(std::move(h)), tail(std::move(t)) {}
    };

public:
    using value_type = A;

    stream() = default;
    static stream empty() { return stream(); }

    static stream cons(A head, suspension<stream<A>> tail) {
        return stream(std::make_shared<cell>(std::move(head), std::move(tail)));
    }

    bool is_empty() const noexcept { return cell_ == nullptr; }

    /// Never forces the tail.
    const A& head() const {
        if (!cell_) throw empty_stream_error();
        return cell_->head;
    }

    /// Forces the tail suspension (blocking) and flips tail_defined().
    stream tail() const {
        if (!cell_) throw empty_stream_error();
        stream t = cell_->tail.force();
        cell_->tail_forced.store(true, std::memory_order_release);
        return t;
    }

    /// Non-forcing extraction: the genuine suspension, laziness intact.
    const suspension<stream<A>>& tail_suspension() const {
        if (!cell_) throw empty_stream_error();
        return cell_->tail;
    }

    /// Advisory flag: has tail() completed at least once on this cell?
    bool tail_defined() const noexcept {
        return cell_ && cell_->tail_forced.load(std::memory_order_acquire);
    }

private:
    explicit stream(std::shared_ptr<cell> c) : cell_(std::move(c)) {}
    std::shared_ptr<cell> cell_;
};

/// Integers start, start+step, ... strictly below end, each tail
/// suspended under ctx. start >= end gives the empty stream.
inline stream<std::int64_t> range(std::int64_t start, std::int64_t end,
                                  std::int64_t step, const eval_context& ctx) {
    if (step <= 0) throw std::invalid_argument("range: step must be positive");
    if (start >= end) return {};
    return stream<std::int64_t>::cons(
        start, delay([=] { return range(start + step, end, step, ctx); }, ctx));
}

/// Elements of s satisfying p, in order. Scans to the first match with a
/// plain loop, so an arbitrarily long run of rejects costs no stack; the
/// remainder is suspended by mapping over the tail suspension.
template <typename A, typename Pred>
stream<A> filter(stream<A> s, Pred p) {
    while (!s.is_empty() && !p(s.head())) s = s.tail();
    if (s.is_empty()) return {};
    return stream<A>::cons(
        s.head(), s.tail_suspension().map([p](const stream<A>& rest) {
            return filter(rest, p);
        }));
}

/// Element-wise image of s under f, laziness preserved.
template <typename A, typename F>
auto map(const stream<A>& s, F f) -> stream<std::invoke_result_t<F&, const A&>> {
    using B = std::invoke_result_t<F&, const A&>;
    if (s.is_empty()) return {};
    return stream<B>::cons(
        f(s.head()), s.tail_suspension().map([f](const stream<A>& rest) {
            return map(rest, f);
        }));
}

/// First min(n, length) elements. Forces nothing past the cut: the cell
/// before the cut gets a ready empty tail rather than a forcing one.
template <typename A>
stream<A> take(const stream<A>& s, std::size_t n) {
    if (n == 0 || s.is_empty()) return {};
    if (n == 1)
        return stream<A>::cons(s.head(), suspension<stream<A>>::ready(stream<A>()));
    return stream<A>::cons(
        s.head(), s.tail_suspension().map([n](const stream<A>& rest) {
            return take(rest, n - 1);
        }));
}

/// Forces every tail of a finite stream and returns it; traversing the
/// result afterwards performs no computation. Does not terminate on
/// infinite streams.
template <typename A>
stream<A> force_all(const stream<A>& s) {
    for (stream<A> t = s; !t.is_empty(); t = t.tail()) {
    }
    return s;
}

/// Collects a finite stream into a vector, forcing every tail.
template <typename A>
std::vector<A> to_vector(const stream<A>& s) {
    std::vector<A> out;
    for (stream<A> t = s; !t.is_empty(); t = t.tail()) out.push_back(t.head());
    return out;
}

namespace detail {

template <typename A>
stream<A> stream_from_index(std::shared_ptr<const std::vector<A>> xs,
                            std::size_t i, const eval_context& ctx) {
    if (i >= xs->size()) return {};
    return stream<A>::cons(
        (*xs)[i], delay([xs, i, ctx] { return stream_from_index(xs, i + 1, ctx); }, ctx));
}

}  // namespace detail

/// Stream over the elements of xs in order, each tail wrapped in a fresh
/// suspension under ctx. to_vector(from_vector(xs, ctx)) == xs.
template <typename A>
stream<A> from_vector(std::vector<A> xs, const eval_context& ctx) {
    auto shared = std::make_shared<const std::vector<A>>(std::move(xs));
    return detail::stream_from_index(std::move(shared), 0, ctx);
}

}  // namespace parstream
