#pragma once

// Bit-sliced here-and-there satisfaction kernels.
//
// A compiled formula is a postfix program over atom indices. One evaluation
// processes a block of 256 interpretations: lane j of the block is one
// interpretation, described by two bit planes per atom (membership of the
// atom in the here set and in the there set of lane j). The kernel computes,
// for every lane in parallel, satisfaction of the formula at both worlds:
//
//   atom      h = here plane           t = there plane
//   bot       h = t = 0
//   f & g     pointwise and            f | g     pointwise or
//   f -> g    t' = ~f.t | g.t          h' = t' & (~f.h | g.h)
//
// Planes must satisfy here <= there per lane; outputs then satisfy the same
// (persistence). A scalar reference kernel and SIMD variants (AVX2, NEON)
// are selected at runtime and are required to produce bit-identical output.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eqlog/formula.hpp"
#include "eqlog/vocabulary.hpp"

namespace eqlog::kernel {

inline constexpr std::size_t kBlockWords = 4;
inline constexpr std::size_t kBlockLanes = kBlockWords * 64;

struct alignas(32) Lanes {
    std::uint64_t w[kBlockWords];

    static Lanes zero() { return Lanes{{0, 0, 0, 0}}; }
    static Lanes ones() { return Lanes{{~0ull, ~0ull, ~0ull, ~0ull}}; }

    bool test(std::size_t lane) const { return w[lane >> 6] >> (lane & 63) & 1u; }
    void set(std::size_t lane) { w[lane >> 6] |= 1ull << (lane & 63); }
    bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }

    Lanes operator&(const Lanes& o) const {
        return Lanes{{w[0] & o.w[0], w[1] & o.w[1], w[2] & o.w[2], w[3] & o.w[3]}};
    }
    Lanes operator|(const Lanes& o) const {
        return Lanes{{w[0] | o.w[0], w[1] | o.w[1], w[2] | o.w[2], w[3] | o.w[3]}};
    }
    Lanes operator~() const { return Lanes{{~w[0], ~w[1], ~w[2], ~w[3]}}; }
    bool operator==(const Lanes&) const = default;
};

enum class Op : std::uint8_t { PushBottom, PushAtom, And, Or, Implies };

struct Instr {
    Op op;
    std::uint16_t atom; // PushAtom only
};

struct CompiledFormula {
    std::vector<Instr> code;
    std::size_t stack_depth = 0;
    std::size_t atom_count = 0;
};

// Maps atoms to plane indices through the vocabulary; throws VocabularyError
// on atoms outside it.
CompiledFormula compile(const Formula& f, const Vocabulary& vocab);

struct EvalOut {
    Lanes here;
    Lanes there;
};

// planes[2*k] is the here plane of atom k, planes[2*k+1] its there plane.
// stack provides scratch for 2*stack_depth Lanes.
using KernelFn = void (*)(const Instr* code, std::size_t code_len, const Lanes* planes,
                          Lanes* stack, EvalOut& out);

enum class Variant : std::uint8_t { Scalar, Avx2, Neon };

const char* variant_name(Variant v);
// Null when the variant is not compiled in or the CPU lacks the feature.
KernelFn kernel(Variant v);
std::vector<Variant> available_variants();

// Dispatch choice: fastest available variant, overridable with
// EQLOG_KERNEL=scalar|avx2|neon (silently ignored when unavailable).
Variant active_variant();

// Evaluates with the active kernel; scratch space is reused per thread.
void eval(const CompiledFormula& cf, const Lanes* planes, EvalOut& out);

} // namespace eqlog::kernel
