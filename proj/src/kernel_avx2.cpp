// AVX2 kernel: one 256-bit register per plane, whole block per op.
// Compiled with -mavx2 in its own translation unit; callers must gate on
// runtime CPU support (see kernel.cpp).

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "eqlog/kernel.hpp"

namespace eqlog::kernel {

void eval_avx2(const Instr* code, std::size_t code_len, const Lanes* planes, Lanes* stack,
               EvalOut& out) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    __m256i* st = reinterpret_cast<__m256i*>(stack);
    std::size_t sp = 0;
    for (std::size_t pc = 0; pc < code_len; ++pc) {
        const Instr in = code[pc];
        switch (in.op) {
        case Op::PushBottom:
            _mm256_store_si256(st + 2 * sp, _mm256_setzero_si256());
            _mm256_store_si256(st + 2 * sp + 1, _mm256_setzero_si256());
            ++sp;
            break;
        case Op::PushAtom: {
            const __m256i* pl = reinterpret_cast<const __m256i*>(planes) + 2 * in.atom;
            _mm256_store_si256(st + 2 * sp, _mm256_load_si256(pl));
            _mm256_store_si256(st + 2 * sp + 1, _mm256_load_si256(pl + 1));
            ++sp;
            break;
        }
        case Op::And: {
            --sp;
            __m256i* a = st + 2 * (sp - 1);
            const __m256i* b = st + 2 * sp;
            _mm256_store_si256(a, _mm256_and_si256(_mm256_load_si256(a), _mm256_load_si256(b)));
            _mm256_store_si256(
                a + 1, _mm256_and_si256(_mm256_load_si256(a + 1), _mm256_load_si256(b + 1)));
            break;
        }
        case Op::Or: {
            --sp;
            __m256i* a = st + 2 * (sp - 1);
            const __m256i* b = st + 2 * sp;
            _mm256_store_si256(a, _mm256_or_si256(_mm256_load_si256(a), _mm256_load_si256(b)));
            _mm256_store_si256(
                a + 1, _mm256_or_si256(_mm256_load_si256(a + 1), _mm256_load_si256(b + 1)));
            break;
        }
        case Op::Implies: {
            --sp;
            __m256i* a = st + 2 * (sp - 1);
            const __m256i* b = st + 2 * sp;
            const __m256i ah = _mm256_load_si256(a);
            const __m256i at = _mm256_load_si256(a + 1);
            const __m256i bh = _mm256_load_si256(b);
            const __m256i bt = _mm256_load_si256(b + 1);
            const __m256i t = _mm256_or_si256(_mm256_xor_si256(at, ones), bt);
            const __m256i h =
                _mm256_and_si256(t, _mm256_or_si256(_mm256_xor_si256(ah, ones), bh));
            _mm256_store_si256(a, h);
            _mm256_store_si256(a + 1, t);
            break;
        }
        }
    }
    out.here = stack[0];
    out.there = stack[1];
}

} // namespace eqlog::kernel

#endif // x86-64
