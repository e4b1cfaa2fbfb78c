#pragma once

#include <cstdint>

// Seed manifest: every sampled suite draws from one of these fixed seeds so
// failures reproduce bit-for-bit.
namespace seeds {
inline constexpr std::uint64_t kMainTheorem = 20260809;  // stability suite
inline constexpr std::uint64_t kLieDimension = 31415926; // finite-stabilizer suite
inline constexpr std::uint64_t kFletcher = 70301;        // fletcher coherence
inline constexpr std::uint64_t kDiscriminant = 20260809; // reuses the QS samples
inline constexpr std::uint64_t kPolytopeLp = 552211;     // LP vs brute force
inline constexpr std::uint64_t kGroebnerFf = 99173;      // GB vs finite fields
inline constexpr std::uint64_t kUnitProps = 8675309;     // module property suites
}  // namespace seeds
