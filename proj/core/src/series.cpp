#include "geoint/series.hpp"

#include "geoint/geodesic.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace geoint {

std::int64_t theta_coeff(const FFormContext& ctx, const std::vector<OrbitRep>& orbits) {
    std::int64_t total = 0;
    for (const OrbitRep& o : orbits) total += ctx.varsigma(o.b);
    return total;
}

std::int64_t elliptic_coeff(std::int64_t n, const FFormContext& ctx, EnumOptions opt) {
    if (n <= 0) return 0;
    return theta_coeff(ctx, enumerate_orbits(n, ctx, opt));
}

std::int64_t elliptic_coeff(const Rational& n, const FFormContext& ctx, EnumOptions opt) {
    Rational m = n;
    m.canonicalize();
    if (!is_integer(m) || m <= 0) return 0;
    return elliptic_coeff(to_int64(m.get_num()), ctx, opt);
}

std::map<QuadElem, std::int64_t> hilbert_coeffs(std::int64_t trace_bound, const FFormContext& ctx, EnumOptions opt) {
    std::map<QuadElem, std::int64_t> out;
    for (std::int64_t n = 1; n <= trace_bound; ++n)
        for (const OrbitRep& o : enumerate_orbits(n, ctx, opt)) out[ctx.q_F(o.b)] += ctx.varsigma(o.b);
    return out;
}

bool CoeffTable::all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const CoeffRow& r) { return r.match; });
}

bool CoeffTable::all_coprime_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const CoeffRow& r) { return !r.coprime || r.match; });
}

CoeffTable report(const FFormContext& ctx, std::int64_t n_max, Method method, EnumOptions opt, unsigned threads) {
    CoeffTable table;
    if (n_max <= 0) return table;
    const bool want_theta = method != Method::oracle;
    const bool want_oracle = method != Method::theta;
    std::optional<GeodesicOracle> oracle;
    if (want_oracle) oracle.emplace(ctx);

    table.rows.resize(static_cast<std::size_t>(n_max));
    std::atomic<std::int64_t> next{1};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::int64_t n = next++; n <= n_max; n = next++) {
                std::vector<OrbitRep> orbits = enumerate_orbits(n, ctx, opt);
                CoeffRow& row = table.rows[static_cast<std::size_t>(n - 1)];
                row.n = n;
                if (want_theta) row.theta = theta_coeff(ctx, orbits);
                if (want_oracle) row.oracle = oracle_coeff(n, *oracle, orbits);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n_max + 1;
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, n_max));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    const std::int64_t level_disc = ctx.level() * ctx.ramification().discriminant;
    if (want_theta && want_oracle)
        for (const CoeffRow& r : table.rows)
            if (*r.theta != 0 || *r.oracle != 0) {
                if (*r.theta != 0 && *r.oracle != 0 && (*r.theta > 0) != (*r.oracle > 0)) table.calibration_sign = -1;
                break;
            }
    for (CoeffRow& r : table.rows) {
        r.coprime = std::gcd(r.n, level_disc) == 1;
        if (want_theta && want_oracle) r.match = *r.theta == table.calibration_sign * *r.oracle;
    }
    return table;
}

}  // namespace geoint
