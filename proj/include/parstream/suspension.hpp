#pragma once

#include <chrono>
#include <condition_variable>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "parstream/scheduler.hpp"

namespace parstream {

enum class eval_strategy { lazy, async };

/// Thrown by force_for() when the value is not ready within the timeout.
struct suspension_timeout_error : std::runtime_error {
    suspension_timeout_error() : std::runtime_error("timed out waiting for suspension") {}
};

/// Evaluation strategy plus the pool backing async suspensions.
/// Lazy contexts carry no pool.
struct eval_context {
    eval_strategy strategy = eval_strategy::lazy;
    std::shared_ptr<parstream::scheduler> pool;

    static eval_context lazy() { return {}; }
    static eval_context async(std::shared_ptr<parstream::scheduler> pool) {
        return {eval_strategy::async, std::move(pool)};
    }
};

namespace detail {

template <typename A>
struct suspension_state {
    enum class phase { pending, running, done, failed };

    std::mutex mu;
    std::condition_variable cv;
    phase ph = phase::pending;
    std::function<A()> thunk;   // valid while pending
    std::optional<A> value;     // set once, in done
    std::exception_ptr error;   // set once, in failed
    eval_context ctx;
};

// Runs the pending thunk on the calling thread. The caller holds lk and
// has observed phase::pending. A failed thunk memoizes its exception and
// is never re-run.
template <typename A>
void run_claimed(const std::shared_ptr<suspension_state<A>>& st,
                 std::unique_lock<std::mutex>& lk) {
    using phase = typename suspension_state<A>::phase;
    auto thunk = std::move(st->thunk);
    st->thunk = nullptr;
    st->ph = phase::running;
    lk.unlock();
    try {
        A v = thunk();
        lk.lock();
        st->value.emplace(std::move(v));
        st->ph = phase::done;
    } catch (...) {
        lk.lock();
        st->error = std::current_exception();
        st->ph = phase::failed;
    }
    st->cv.notify_all();
}

// Pool-side entry point: run the thunk unless a forcing thread got there
// first.
template <typename A>
void claim_if_pending(const std::shared_ptr<suspension_state<A>>& st) {
    using phase = typename suspension_state<A>::phase;
    std::unique_lock<std::mutex> lk(st->mu);
    if (st->ph == phase::pending) run_claimed(st, lk);
}

}  // namespace detail

/// A deferred value evaluated at most once, thereafter memoized.
///
/// Copies share state, so memoization is per underlying computation, not
/// per handle. Under eval_strategy::lazy nothing runs until the first
/// force(); under eval_strategy::async the thunk is handed to the pool at
/// creation time and may start immediately.
///
/// force() is safe to call from any number of threads. A thread that
/// forces a still-pending suspension claims the thunk and runs it inline;
/// it only ever waits on a thunk some other thread is actively running.
/// This is what makes blocking forces from pool workers deadlock-free at
/// any worker count: a cycle would require a value to depend on itself,
/// which no strategy can evaluate.
template <typename A>
class suspension {
public:
    using value_type = A;

    /// Wraps a thunk. Async suspensions are enqueued on ctx.pool right
    /// away; a missing or shut-down pool is a creation error.
    static suspension delay(std::function<A()> thunk, const eval_context& ctx) {
        if (!thunk) throw std::invalid_argument("suspension: null thunk");
        auto st = std::make_shared<detail::suspension_state<A>>();
        st->thunk = std::move(thunk);
        st->ctx = ctx;
        if (ctx.strategy == eval_strategy::async) {
            if (!ctx.pool)
                throw std::invalid_argument("async suspension requires a scheduler");
            ctx.pool->submit([st] { detail::claim_if_pending<A>(st); });
        }
        return suspension(std::move(st));
    }

    /// An already-evaluated suspension.
    static suspension ready(A value) {
        auto st = std::make_shared<detail::suspension_state<A>>();
        st->value.emplace(std::move(value));
        st->ph = detail::suspension_state<A>::phase::done;
        return suspension(std::move(st));
    }

    /// Blocks until the value is available and returns it. Idempotent:
    /// every call yields the identical memoized value, and a thunk that
    /// threw rethrows the same exception on every force.
    const A& force() const { return force_impl(std::nullopt); }

    /// Like force(), but gives up after `timeout` when the thunk is being
    /// run by another thread. A pending thunk is still claimed and run to
    /// completion inline (our own work cannot time out).
    template <class Rep, class Period>
    const A& force_for(std::chrono::duration<Rep, Period> timeout) const {
        return force_impl(std::chrono::duration_cast<std::chrono::nanoseconds>(timeout));
    }

    /// Suspension of the same strategy holding f(force()). Nothing — not
    /// the source, not f — runs before the result is forced under lazy.
    template <typename F>
    auto map(F f) const -> suspension<std::invoke_result_t<F&, const A&>> {
        using B = std::invoke_result_t<F&, const A&>;
        suspension self = *this;
        return suspension<B>::delay(
            [self, f = std::move(f)] { return f(self.force()); }, st_->ctx);
    }

    /// Monadic bind: f maps the value to another suspension, whose value
    /// becomes the result.
    template <typename F>
    auto bind(F f) const -> std::invoke_result_t<F&, const A&> {
        using susp_b = std::invoke_result_t<F&, const A&>;
        suspension self = *this;
        return susp_b::delay(
            [self, f = std::move(f)] { return f(self.force()).force(); }, st_->ctx);
    }

    eval_strategy strategy() const noexcept { return st_->ctx.strategy; }
    const eval_context& context() const noexcept { return st_->ctx; }

    /// True once the thunk has finished (with a value or an error).
    bool evaluated() const {
        using phase = typename detail::suspension_state<A>::phase;
        std::lock_guard<std::mutex> lk(st_->mu);
        return st_->ph == phase::done || st_->ph == phase::failed;
    }

private:
    explicit suspension(std::shared_ptr<detail::suspension_state<A>> st)
        : st_(std::move(st)) {}

    const A& force_impl(std::optional<std::chrono::nanoseconds> timeout) const {
        using phase = typename detail::suspension_state<A>::phase;
        std::unique_lock<std::mutex> lk(st_->mu);
        if (st_->ph == phase::pending) {
            detail::run_claimed(st_, lk);
        } else if (st_->ph == phase::running) {
            auto settled = [this] {
                return st_->ph == phase::done || st_->ph == phase::failed;
            };
            if (timeout) {
                if (!st_->cv.wait_for(lk, *timeout, settled))
                    throw suspension_timeout_error();
            } else {
                st_->cv.wait(lk, settled);
            }
        }
        if (st_->ph == phase::failed) std::rethrow_exception(st_->error);
        return *st_->value;
    }

    std::shared_ptr<detail::suspension_state<A>> st_;
};

/// delay() with the value type deduced from the thunk.
template <typename Thunk>
auto delay(Thunk thunk, const eval_context& ctx)
    -> suspension<std::invoke_result_t<Thunk&>> {
    using A = std::invoke_result_t<Thunk&>;
    return suspension<A>::delay(std::move(thunk), ctx);
}

}  // namespace parstream
