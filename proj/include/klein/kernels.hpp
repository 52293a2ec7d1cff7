#pragma once

// Data-parallel sweeps shared by the verification modules. Every kernel has a
// serial path and an OpenMP path; both produce identical results, including
// which counterexample is reported, so the serial path doubles as the test
// reference and the benchmark baseline.

#include <omp.h>

#include <array>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace klein {

enum class Execution { serial, parallel };

/// Runs fn(chunk, out) for chunk = 0..chunks-1 and concatenates the per-chunk
/// outputs in chunk order.
template <class T, class Fn>
std::vector<T> collect_chunks(std::size_t chunks, Fn&& fn, Execution exec)
{
    std::vector<std::vector<T>> parts(chunks);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) fn(static_cast<std::size_t>(c), parts[c]);
    } else {
        for (std::size_t c = 0; c < chunks; ++c) fn(c, parts[c]);
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<T> out;
    out.reserve(total);
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

/// Runs fn(k) for k = 0..n-1.
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, Execution exec)
{
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) fn(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < n; ++k) fn(k);
    }
}

template <class Elem>
struct CocycleSweep {
    bool normalized = true;
    bool identity_holds = true;
    std::size_t triples_checked = 0;
    /// First element (in list order) with mu(e,g) != 1 or mu(g,e) != 1.
    std::optional<Elem> normalization_witness;
    /// First triple (in lexicographic index order) violating
    /// mu(g,h) mu(gh,k) == mu(h,k) mu(g,hk).
    std::optional<std::array<Elem, 3>> identity_witness;

    bool pass() const { return normalized && identity_holds; }
};

/// Exhaustive normalization and 2-cocycle identity check over all triples
/// drawn from elems. mul is the group law, mu returns a value with operator*
/// and operator==, and one is the unit of that value type.
template <class Elem, class Mul, class Mu, class Val>
CocycleSweep<Elem> sweep_cocycle(std::span<const Elem> elems, const Elem& identity, const Val& one, Mul&& mul, Mu&& mu,
                                 Execution exec)
{
    CocycleSweep<Elem> out;
    const std::size_t n = elems.size();

    for (const Elem& g : elems) {
        if (!(mu(identity, g) == one) || !(mu(g, identity) == one)) {
            out.normalized = false;
            out.normalization_witness = g;
            break;
        }
    }

    auto holds = [&](std::size_t i, std::size_t j, std::size_t k) {
        const Elem& g = elems[i];
        const Elem& h = elems[j];
        const Elem& l = elems[k];
        return mu(g, h) * mu(mul(g, h), l) == mu(h, l) * mu(g, mul(h, l));
    };

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::size_t first_bad = none;

    if (exec == Execution::parallel) {
        std::atomic<std::size_t> best{none};
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
            const std::size_t i = static_cast<std::size_t>(si);
            if (i * n * n > best.load(std::memory_order_relaxed)) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (holds(i, j, k)) continue;
                    const std::size_t idx = (i * n + j) * n + k;
                    std::size_t cur = best.load();
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                    j = n;
                    break;
                }
        }
        first_bad = best.load();
    } else {
        for (std::size_t i = 0; i < n && first_bad == none; ++i)
            for (std::size_t j = 0; j < n && first_bad == none; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!holds(i, j, k)) {
                        first_bad = (i * n + j) * n + k;
                        break;
                    }
    }

    if (first_bad == none) {
        out.triples_checked = n * n * n;
    } else {
        out.identity_holds = false;
        out.triples_checked = first_bad + 1;
        const std::size_t k = first_bad % n;
        const std::size_t j = (first_bad / n) % n;
        const std::size_t i = first_bad / (n * n);
        out.identity_witness = std::array<Elem, 3>{elems[i], elems[j], elems[k]};
    }
    return out;
}

}  // namespace klein
