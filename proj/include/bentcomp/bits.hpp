#pragma once
#include <cstdint>

namespace bentcomp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline int parity(u32 x) { return __builtin_parity(x); }
inline int popcount(u32 x) { return __builtin_popcount(x); }
inline int ctz(u32 x) { return __builtin_ctz(x); }
inline int bitlen(u64 x) { return x ? 64 - __builtin_clzll(x) : 0; }

// dot product over F_2 of two coordinate masks
inline int dot(u32 a, u32 b) { return parity(a & b); }

} // namespace bentcomp
