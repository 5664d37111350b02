#include "aluffi/util.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <thread>
#include <vector>

namespace aluffi::util {

namespace {

thread_local std::chrono::steady_clock::time_point tl_deadline{};
thread_local int tl_poll_counter = 0;

}  // namespace

void set_deadline(std::chrono::steady_clock::time_point when) {
    tl_deadline = when;
    tl_poll_counter = 0;
}

void clear_deadline() { tl_deadline = {}; }

void poll_deadline() {
    if (tl_deadline == std::chrono::steady_clock::time_point{}) return;
    if (++tl_poll_counter < 256) return;
    tl_poll_counter = 0;
    if (std::chrono::steady_clock::now() > tl_deadline)
        throw Timeout("computation exceeded its deadline");
}

DeadlineGuard::DeadlineGuard(double seconds) {
    if (seconds > 0) {
        set_deadline(std::chrono::steady_clock::now() +
                     std::chrono::milliseconds(static_cast<long>(seconds * 1000)));
    }
}

DeadlineGuard::~DeadlineGuard() { clear_deadline(); }

int worker_count() {
    if (const char* env = std::getenv("ALUFFI_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int workers) {
    if (workers <= 0) workers = worker_count();
    if (workers == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int count = static_cast<int>(std::min<std::size_t>(n, workers));
    pool.reserve(count);
    for (int w = 0; w < count; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' &&
            c != '+')
            throw std::invalid_argument("bad rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

}  // namespace aluffi::util
