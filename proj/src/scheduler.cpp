#include "parstream/scheduler.hpp"

namespace parstream {

scheduler::scheduler(unsigned worker_count) : worker_count_(worker_count) {
    if (worker_count == 0)
        throw std::invalid_argument("scheduler needs at least one worker");
    workers_.reserve(worker_count_);
    for (unsigned i = 0; i < worker_count_; ++i)
        workers_.emplace_back([this] { worker_loop(); });
}

scheduler::~scheduler() { shutdown(); }

void scheduler::submit(std::function<void()> task) {
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (stopping_) throw scheduler_shutdown_error();
        queue_.push_back(std::move(task));
    }
    work_cv_.notify_one();
}

void scheduler::drain() {
    std::unique_lock<std::mutex> lk(mu_);
    idle_cv_.wait(lk, [this] { return queue_.empty() && active_ == 0; });
}

void scheduler::shutdown() {
    {
        std::lock_guard<std::mutex> lk(mu_);
        stopping_ = true;
    }
    work_cv_.notify_all();
    for (auto& w : workers_)
        if (w.joinable()) w.join();
}

void scheduler::worker_loop() {
    std::unique_lock<std::mutex> lk(mu_);
    for (;;) {
        work_cv_.wait(lk, [this] { return stopping_ || !queue_.empty(); });
        if (queue_.empty()) {
            if (stopping_) return;
            continue;
        }
        auto task = std::move(queue_.front());
        queue_.pop_front();
        ++active_;
        lk.unlock();
        task();
        lk.lock();
        --active_;
        if (queue_.empty() && active_ == 0) idle_cv_.notify_all();
    }
}

}  // namespace parstream
