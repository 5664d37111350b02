#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace aluffi::util {

// Thrown when a cooperative deadline expires inside a long-running
// computation (Buchberger loops, minor enumeration).
class Timeout : public std::runtime_error {
public:
    explicit Timeout(const std::string& what) : std::runtime_error(what) {}
};

// Deadlines are per-thread. A value of 0 means "no deadline".
void set_deadline(std::chrono::steady_clock::time_point when);
void clear_deadline();
// Cheap to call in hot loops; only consults the clock every few hundred calls.
void poll_deadline();

struct DeadlineGuard {
    explicit DeadlineGuard(double seconds);
    ~DeadlineGuard();
    DeadlineGuard(const DeadlineGuard&) = delete;
    DeadlineGuard& operator=(const DeadlineGuard&) = delete;
};

// Worker count for data-parallel sweeps: ALUFFI_WORKERS if set, else the
// hardware concurrency (at least 1).
int worker_count();

// Runs fn(0..n-1) on `workers` threads (0 = worker_count()). Exceptions from
// tasks are rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int workers = 0);

mpz_class binomial(int n, int k);

// Parses "p" or "p/q" with optional sign into a canonical rational.
mpq_class parse_rational(const std::string& text);

}  // namespace aluffi::util
