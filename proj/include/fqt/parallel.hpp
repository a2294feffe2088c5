#ifndef FQT_PARALLEL_HPP
#define FQT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace fqt {

/// Evaluates fn(0), ..., fn(blocks-1) on up to `threads` workers and returns
/// the results indexed by block. If any block throws, the exception of the
/// lowest-numbered failing block is rethrown.
template <class T, class Fn>
std::vector<T> run_blocks(std::size_t blocks, unsigned threads, Fn fn)
{
    std::vector<T> results(blocks);
    std::vector<std::exception_ptr> errors(blocks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next++; b < blocks; b = next++) {
            try {
                results[b] = fn(b);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace fqt

#endif
