#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace splitalg {

/// Worker count from SPLITALG_WORKERS, else the hardware concurrency.
inline std::size_t worker_count()
{
	if (const char* env = std::getenv("SPLITALG_WORKERS")) {
		char* end = nullptr;
		long n = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && n > 0)
			return static_cast<std::size_t>(n);
	}
	return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace detail {
inline thread_local bool inside_parallel_region = false;
}

/// Splits [0, n) into contiguous chunks, one per worker, and calls
/// fn(chunk_index, begin, end) for each. Returns the number of chunks;
/// chunk c covers indices below those of chunk c + 1. The first exception
/// thrown by any chunk is rethrown after all workers join. Calls made from
/// inside a worker run serially as a single chunk.
template <class Fn>
std::size_t parallel_chunks(std::size_t n, Fn&& fn)
{
	std::size_t chunks = detail::inside_parallel_region ? 1 : std::min(worker_count(), n);
	if (chunks <= 1) {
		if (n > 0)
			fn(std::size_t{0}, std::size_t{0}, n);
		return n > 0 ? 1 : 0;
	}
	std::vector<std::thread> threads;
	std::exception_ptr failure;
	std::mutex failure_mutex;
	for (std::size_t c = 0; c < chunks; ++c) {
		std::size_t begin = n * c / chunks;
		std::size_t end = n * (c + 1) / chunks;
		threads.emplace_back([&, c, begin, end] {
			detail::inside_parallel_region = true;
			try {
				fn(c, begin, end);
			} catch (...) {
				std::lock_guard lock(failure_mutex);
				if (!failure)
					failure = std::current_exception();
			}
		});
	}
	for (auto& t : threads)
		t.join();
	if (failure)
		std::rethrow_exception(failure);
	return chunks;
}

} // namespace splitalg
