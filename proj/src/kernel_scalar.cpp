// Scalar reference kernel. The SIMD variants must match it bit for bit.

#include "eqlog/kernel.hpp"

namespace eqlog::kernel {

void eval_scalar(const Instr* code, std::size_t code_len, const Lanes* planes, Lanes* stack,
                 EvalOut& out) {
    // Stack slot i occupies stack[2*i] (here) and stack[2*i+1] (there).
    std::size_t sp = 0;
    for (std::size_t pc = 0; pc < code_len; ++pc) {
        const Instr in = code[pc];
        switch (in.op) {
        case Op::PushBottom:
            stack[2 * sp] = Lanes::zero();
            stack[2 * sp + 1] = Lanes::zero();
            ++sp;
            break;
        case Op::PushAtom:
            stack[2 * sp] = planes[2 * in.atom];
            stack[2 * sp + 1] = planes[2 * in.atom + 1];
            ++sp;
            break;
        case Op::And: {
            --sp;
            Lanes* a = &stack[2 * (sp - 1)];
            const Lanes* b = &stack[2 * sp];
            for (std::size_t w = 0; w < kBlockWords; ++w) {
                a[0].w[w] &= b[0].w[w];
                a[1].w[w] &= b[1].w[w];
            }
            break;
        }
        case Op::Or: {
            --sp;
            Lanes* a = &stack[2 * (sp - 1)];
            const Lanes* b = &stack[2 * sp];
            for (std::size_t w = 0; w < kBlockWords; ++w) {
                a[0].w[w] |= b[0].w[w];
                a[1].w[w] |= b[1].w[w];
            }
            break;
        }
        case Op::Implies: {
            --sp;
            Lanes* a = &stack[2 * (sp - 1)];
            const Lanes* b = &stack[2 * sp];
            for (std::size_t w = 0; w < kBlockWords; ++w) {
                const std::uint64_t t = ~a[1].w[w] | b[1].w[w];
                const std::uint64_t h = t & (~a[0].w[w] | b[0].w[w]);
                a[0].w[w] = h;
                a[1].w[w] = t;
            }
            break;
        }
        }
    }
    out.here = stack[0];
    out.there = stack[1];
}

} // namespace eqlog::kernel
