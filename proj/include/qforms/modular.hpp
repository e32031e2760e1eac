#pragma once

// Probabilistic rank checks: evaluate z at a random residue modulo the
// Mersenne prime 2^61 - 1 and compute the rank there. The result is a lower
// bound on the rank over Q(z); per trial it misses with probability at most
// (total entry degree)/p, so two independent trials are run and the larger
// value returned.

#include <cstdint>
#include <vector>

#include "qforms/matrix.hpp"

namespace qf {

struct Zp {
    static constexpr uint64_t P = (uint64_t(1) << 61) - 1;
    uint64_t v = 0;

    Zp() = default;
    Zp(long x) : v(x >= 0 ? uint64_t(x) % P : P - (uint64_t(-(x + 1)) + 1) % P) {
        if (v == P) v = 0;
    }
    static Zp raw(uint64_t x) { Zp z; z.v = x % P; return z; }

    bool is_zero() const { return v == 0; }
    bool operator==(const Zp& o) const { return v == o.v; }
    bool operator!=(const Zp& o) const { return v != o.v; }
    bool operator<(const Zp& o) const { return v < o.v; }

    Zp operator-() const { return raw(v == 0 ? 0 : P - v); }
    Zp operator+(const Zp& o) const { uint64_t s = v + o.v; return raw(s >= P ? s - P : s); }
    Zp operator-(const Zp& o) const { return *this + (-o); }
    Zp operator*(const Zp& o) const {
        unsigned __int128 prod = static_cast<unsigned __int128>(v) * o.v;
        uint64_t lo = static_cast<uint64_t>(prod & P);
        uint64_t hi = static_cast<uint64_t>(prod >> 61);
        uint64_t s = lo + hi;
        return raw(s >= P ? s - P : s);
    }
    Zp inverse() const;
};

using ModMatrix = SMat<Zp>;

// deterministic PRNG used wherever a seed enters the public interface
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next();
};

// evaluation z -> x of a polynomial / rational function modulo P
Zp eval_mod(const Poly& p, Zp x);
// throws StructureError if the reduced denominator vanishes at x; callers
// resample instead of letting that propagate
Zp eval_mod(const RatFunc& f, Zp x);

// evaluates every entry; returns false (leaving out untouched) if any
// denominator vanishes at x
bool try_eval_mod(const OpMatrix& m, Zp x, ModMatrix& out);

int rank_mod(const ModMatrix& m);

// Two seeded evaluation trials, maximum of the two modular ranks. Points that
// hit a denominator zero are resampled.
int rank_probabilistic(const OpMatrix& m, uint64_t seed);

// a nonzero evaluation point that avoids denominator zeros of the supplied
// matrices' entries (resampling driven by the PRNG)
Zp random_point(SplitMix64& rng);

} // namespace qf
