#ifndef CURVEARITH_COUNTERS_HPP
#define CURVEARITH_COUNTERS_HPP

#include <atomic>
#include <cstdint>

namespace curvearith {

// Global operation counters.  The amortized divisor scan asserts that no
// function-field arithmetic happens after precomputation; these counters make
// that observable (and feed the CLI statistics block).
struct OpCounters {
    std::atomic<std::uint64_t> poly_ops{0};     // polynomial mul/divmod/gcd
    std::atomic<std::uint64_t> funcfield_ops{0}; // function-field mul/div/add
    std::atomic<std::uint64_t> expansions{0};   // expansion table columns computed
    std::atomic<std::uint64_t> rank_queries{0}; // matrix rank queries answered

    static OpCounters& global() {
        static OpCounters c;
        return c;
    }
};

// Snapshot of the symbolic-arithmetic counters, for "no polynomial work
// happened in this region" assertions.
struct SymbolicOpSnapshot {
    std::uint64_t poly_ops;
    std::uint64_t funcfield_ops;

    static SymbolicOpSnapshot take() {
        auto& c = OpCounters::global();
        return {c.poly_ops.load(), c.funcfield_ops.load()};
    }
    std::uint64_t delta() const {
        auto& c = OpCounters::global();
        return (c.poly_ops.load() - poly_ops) + (c.funcfield_ops.load() - funcfield_ops);
    }
};

} // namespace curvearith

#endif
