#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "matchbox/axioms.hpp"
#include "matchbox/lincomb.hpp"
#include "matchbox/rng.hpp"

namespace matchbox {

enum class Mode { Exhaustive, Random };

inline const char* mode_str(Mode m) { return m == Mode::Exhaustive ? "exhaustive" : "random"; }

struct Witness {
    std::string identity;
    std::string alpha, beta;
    std::string x, y, z;
    std::string residual; // encoded nonzero value of the identity residual
};

// Outcome of a check. `trials` counts identity instances in canonical order:
// the total on a pass, the witness position + 1 on a failure, so the number
// is independent of thread count.
struct Verdict {
    bool pass = true;
    Mode mode = Mode::Exhaustive;
    std::uint64_t seed = 0; // random mode only
    std::uint64_t trials = 0;
    std::optional<Witness> witness;
};

template <typename E>
using Sampler = std::function<E(Rng&)>;

struct CheckOptions {
    std::uint64_t seed = 1;
    std::uint64_t trials = 200; // per identity per (alpha, beta) in random mode
    int threads = 0;            // 0: honor MATCHBOX_THREADS, default 1
};

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MATCHBOX_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

namespace detail {

// One (identity, alpha, beta) cell of the instance space; the sweep
// enumerates cells in canonical order and triples within each cell.
struct Cell {
    std::size_t id, a, b;
};

template <typename E>
std::vector<Cell> cells_of(const OpStructure<E>& s, const AxiomSet<E>& set) {
    for (OpName op : set.required)
        if (!s.has_op(op))
            throw missing_operation("axiom set '" + set.name + "' needs operation '" +
                                    op_token(op) + "' which structure '" + s.name + "' lacks");
    std::vector<Cell> cells;
    const std::size_t m = s.omega.size();
    for (std::size_t i = 0; i < set.identities.size(); ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) cells.push_back(Cell{i, a, b});
    return cells;
}

// Runs fn(cell_index) over [0, n) on `threads` threads. fn returns the
// first failing in-cell position or npos; the minimal global failure across
// cells wins, making the outcome schedule-independent.
inline constexpr std::uint64_t knofail = ~std::uint64_t{0};

template <typename Fn>
std::uint64_t sweep_cells(std::size_t ncells, std::uint64_t per_cell, int threads, Fn&& fn) {
    std::atomic<std::uint64_t> best(knofail);
    const auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t c = lo; c < hi; ++c) {
            if (best.load(std::memory_order_relaxed) <= c * per_cell) continue;
            const std::uint64_t pos = fn(c);
            if (pos == knofail) continue;
            const std::uint64_t global = c * per_cell + pos;
            std::uint64_t cur = best.load();
            while (global < cur && !best.compare_exchange_weak(cur, global)) {
            }
        }
    };
    threads = resolve_threads(threads);
    if (threads <= 1 || ncells <= 1) {
        run_range(0, ncells);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (ncells + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = static_cast<std::size_t>(t) * chunk;
            const std::size_t hi = std::min(ncells, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return best.load();
}

} // namespace detail

// Every identity of `set` on every (alpha, beta) and every pool triple.
template <typename E>
Verdict check_exhaustive(const OpStructure<E>& s, const AxiomSet<E>& set,
                         const std::vector<E>& pool, int threads = 0) {
    const std::vector<detail::Cell> cells = detail::cells_of(s, set);
    const std::uint64_t n = pool.size();
    const std::uint64_t per_cell = n * n * n;

    const std::uint64_t best =
        detail::sweep_cells(cells.size(), per_cell, threads, [&](std::size_t c) -> std::uint64_t {
            const auto& [id, a, b] = cells[c];
            const Identity<E>& ident = set.identities[id];
            const std::string& alpha = s.omega.symbols()[a];
            const std::string& beta = s.omega.symbols()[b];
            for (std::uint64_t xi = 0; xi < n; ++xi)
                for (std::uint64_t yi = 0; yi < n; ++yi)
                    for (std::uint64_t zi = 0; zi < n; ++zi) {
                        const E r = ident.residual(s, alpha, beta, pool[xi], pool[yi], pool[zi]);
                        if (!r.is_zero()) return (xi * n + yi) * n + zi;
                    }
            return detail::knofail;
        });

    Verdict v;
    v.mode = Mode::Exhaustive;
    if (best == detail::knofail) {
        v.pass = true;
        v.trials = cells.size() * per_cell;
    } else {
        v.pass = false;
        v.trials = best + 1;
        // The sweep may have recorded a later witness first; recompute at the
        // canonical minimum to stay deterministic.
        const std::size_t c = static_cast<std::size_t>(best / per_cell);
        const std::uint64_t pos = best % per_cell;
        const auto& [id, a, b] = cells[c];
        const Identity<E>& ident = set.identities[id];
        const std::string& alpha = s.omega.symbols()[a];
        const std::string& beta = s.omega.symbols()[b];
        const E& x = pool[pos / (n * n)];
        const E& y = pool[(pos / n) % n];
        const E& z = pool[pos % n];
        const E r = ident.residual(s, alpha, beta, x, y, z);
        v.witness = Witness{ident.name, alpha, beta, x.encode(), y.encode(), z.encode(), r.encode()};
    }
    return v;
}

// Seeded random triples: opt.trials per identity per (alpha, beta). Each cell
// draws from its own forked stream, so results do not depend on the thread
// partition.
template <typename E>
Verdict check_random(const OpStructure<E>& s, const AxiomSet<E>& set, const Sampler<E>& sample,
                     const CheckOptions& opt = {}) {
    const std::vector<detail::Cell> cells = detail::cells_of(s, set);
    const Rng root(opt.seed);

    Verdict v;
    v.mode = Mode::Random;
    v.seed = opt.seed;
    const std::uint64_t best = detail::sweep_cells(
        cells.size(), opt.trials, opt.threads, [&](std::size_t c) -> std::uint64_t {
            const auto& [id, a, b] = cells[c];
            const Identity<E>& ident = set.identities[id];
            const std::string& alpha = s.omega.symbols()[a];
            const std::string& beta = s.omega.symbols()[b];
            Rng rng = root.fork(c);
            for (std::uint64_t t = 0; t < opt.trials; ++t) {
                const E x = sample(rng);
                const E y = sample(rng);
                const E z = sample(rng);
                const E r = ident.residual(s, alpha, beta, x, y, z);
                if (!r.is_zero()) return t;
            }
            return detail::knofail;
        });

    if (best == detail::knofail) {
        v.pass = true;
        v.trials = cells.size() * opt.trials;
    } else {
        v.pass = false;
        v.trials = best + 1;
        const std::size_t c = static_cast<std::size_t>(best / opt.trials);
        const std::uint64_t pos = best % opt.trials;
        const auto& [id, a, b] = cells[c];
        const Identity<E>& ident = set.identities[id];
        const std::string& alpha = s.omega.symbols()[a];
        const std::string& beta = s.omega.symbols()[b];
        Rng rng = root.fork(c);
        E x = sample(rng), y = sample(rng), z = sample(rng);
        for (std::uint64_t t = 0; t < pos; ++t) {
            x = sample(rng);
            y = sample(rng);
            z = sample(rng);
        }
        const E r = ident.residual(s, alpha, beta, x, y, z);
        v.witness = Witness{ident.name, alpha, beta, x.encode(), y.encode(), z.encode(), r.encode()};
    }
    return v;
}

// First witness in canonical order, or nullopt when the pool passes.
template <typename E>
std::optional<Witness> find_counterexample(const OpStructure<E>& s, const AxiomSet<E>& set,
                                           const std::vector<E>& pool, int threads = 0) {
    return check_exhaustive(s, set, pool, threads).witness;
}

// Random element of the span of a basis pool: up to max_terms keys with
// nonzero coefficients of numerator magnitude <= bound.
template <typename Key>
LinComb<Key> sample_element(const std::vector<Key>& pool, Rng& rng, int max_terms = 3,
                            long long bound = 3) {
    LinComb<Key> out;
    const int nterms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int i = 0; i < nterms; ++i) {
        const Key& k = pool[rng.below(pool.size())];
        const long long num = rng.int_in(1, bound) * (rng.below(2) ? 1 : -1);
        out.add_term(k, Rational(Integer(num), Integer(rng.int_in(1, 3))));
    }
    return out;
}

template <typename Key>
Sampler<LinComb<Key>> pool_sampler(std::vector<Key> pool, int max_terms = 3, long long bound = 3) {
    return [pool = std::move(pool), max_terms, bound](Rng& rng) {
        return sample_element(pool, rng, max_terms, bound);
    };
}

} // namespace matchbox
