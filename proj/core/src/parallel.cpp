#include "plurizero/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace plurizero {

ParallelRunner::ParallelRunner(int workers) {
    if (workers <= 0) {
        if (const char* env = std::getenv("PLURIZERO_WORKERS")) {
            workers = std::atoi(env);
        }
    }
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
    }
    workers_ = workers > 0 ? workers : 1;
}

void ParallelRunner::for_each(std::size_t count, const std::function<void(std::size_t)>& fn) const {
    if (count == 0) return;
    const std::size_t nthreads = std::min<std::size_t>(workers_, count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace plurizero
