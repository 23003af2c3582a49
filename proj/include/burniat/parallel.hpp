#pragma once

#include <cstddef>
#include <functional>

namespace burniat {

// hardware_concurrency, capped by BURNIAT_THREADS when set to a positive
// integer; at least 1.
unsigned worker_count();

// Calls body(i) for every i in [0, n), spread over worker_count() threads.
// body must be safe to call concurrently for distinct i. The first exception
// thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace burniat
