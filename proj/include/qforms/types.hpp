#pragma once

#include <cstdint>
#include <vector>

namespace qf {

// The two bicovariant bimodules: Plus carries the omega basis, Minus the
// theta basis.
enum class FormType : uint8_t { Plus, Minus };

inline FormType opposite(FormType t) {
    return t == FormType::Plus ? FormType::Minus : FormType::Plus;
}

// Which of the two mutually inverse braidings a word is built from.
enum class BraidSign : uint8_t { Plus, Minus };

inline BraidSign opposite(BraidSign s) {
    return s == BraidSign::Plus ? BraidSign::Minus : BraidSign::Plus;
}

// Identifies a tensor product of bimodules slot by slot. Each slot is the
// N^2-dimensional space of left-invariant 1-forms of its type; slots flatten
// big-endian (leftmost slot is the most significant digit).
struct SpaceSignature {
    int N = 0;
    std::vector<FormType> slots;

    SpaceSignature() = default;
    SpaceSignature(int n, std::vector<FormType> s) : N(n), slots(std::move(s)) {}
    // uniform signature (tau, tau, ..., tau) of the given length
    static SpaceSignature uniform(int n, FormType tau, int length) {
        return SpaceSignature(n, std::vector<FormType>(length, tau));
    }

    int length() const { return static_cast<int>(slots.size()); }
    long slot_dim() const { return static_cast<long>(N) * N; }
    long dim() const {
        long d = 1;
        for (int i = 0; i < length(); ++i) d *= slot_dim();
        return d;
    }
    bool operator==(const SpaceSignature& o) const { return N == o.N && slots == o.slots; }
};

} // namespace qf
