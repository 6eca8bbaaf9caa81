#pragma once

#include <condition_variable>
#include <deque>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace parstream {

/// Thrown when a task is submitted after shutdown().
struct scheduler_shutdown_error : std::runtime_error {
    scheduler_shutdown_error() : std::runtime_error("scheduler is shut down") {}
};

/// Fixed-size worker pool executing submitted tasks in FIFO order.
///
/// At most worker_count() tasks run on pool threads at once, and every
/// submitted task is executed exactly once: shutdown() lets the workers
/// finish the queue before they exit. Tasks must not throw. Forcing
/// threads may additionally run a suspension's thunk inline (see
/// suspension.hpp); that happens outside the pool and is what keeps
/// blocking forces from wedging a fully occupied pool.
class scheduler {
public:
    explicit scheduler(unsigned worker_count);
    ~scheduler();

    scheduler(const scheduler&) = delete;
    scheduler& operator=(const scheduler&) = delete;

    /// Enqueues a task. Throws scheduler_shutdown_error once shut down.
    void submit(std::function<void()> task);

    /// Blocks until the queue is empty and no worker is running a task.
    void drain();

    /// Stops accepting new tasks, waits for the queue to be worked off,
    /// joins the workers. Idempotent; the destructor calls it.
    void shutdown();

    unsigned worker_count() const noexcept { return worker_count_; }

private:
    void worker_loop();

    unsigned worker_count_;
    std::mutex mu_;
    std::condition_variable work_cv_;
    std::condition_variable idle_cv_;
    std::deque<std::function<void()>> queue_;
    std::vector<std::thread> workers_;
    unsigned active_ = 0;
    bool stopping_ = false;
};

}  // namespace parstream
