#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <stdexcept>
#include <utility>

#if defined(__unix__) || defined(__APPLE__)
#include <pthread.h>
#endif

namespace ptfree::detail {

/// Runs fn() to completion on a thread with at least `stack_bytes` of stack and
/// rethrows whatever it threw. Branching recursions go one level deeper per
/// deleted vertex, so their depth can reach n.
template <typename Fn>
void run_with_stack(std::size_t stack_bytes, Fn&& fn) {
#if defined(__unix__) || defined(__APPLE__)
    struct Job {
        std::function<void()> body;
        std::exception_ptr error;
    } job{std::forward<Fn>(fn), nullptr};

    auto trampoline = [](void* arg) -> void* {
        auto* j = static_cast<Job*>(arg);
        try {
            j->body();
        } catch (...) {
            j->error = std::current_exception();
        }
        return nullptr;
    };

    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, stack_bytes);
    pthread_t thread;
    const int rc = pthread_create(&thread, &attr, trampoline, &job);
    pthread_attr_destroy(&attr);
    if (rc != 0) {
        // Fall back to the caller's stack.
        job.body();
        return;
    }
    pthread_join(thread, nullptr);
    if (job.error) std::rethrow_exception(job.error);
#else
    (void)stack_bytes;
    fn();
#endif
}

inline constexpr std::size_t solver_stack_bytes = std::size_t{512} << 20;

}  // namespace ptfree::detail
