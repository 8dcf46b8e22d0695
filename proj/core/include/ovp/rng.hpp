/*
   Copyright 2026 The ovpbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>

namespace ovp {

/**
 * Counter-based pseudorandom stream in the splitmix64 family
 * (Steele, Lea & Flood; finalizer due to Vigna).
 *
 * The n-th output is a pure function of (seed, stream_id, n), so a stream
 * can be reconstructed anywhere: identical (seed, stream_id) give identical
 * sequences regardless of thread schedule, and distinct stream_ids give
 * statistically independent streams.
 *
 * Stream ids are laid out as theta_index * 2^32 + replicate_index.
 * Indices >= kMetaThetaIndex are reserved for non-replicate streams
 * (localization samples, cross-validation draws); see evaluation.cpp
 * and crossval.cpp for the assignments.
 */
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : state_(mix(mix(seed) ^ mix(stream_id ^ 0x9E3779B97F4A7C15ull))) {}

    /// Stream for the (theta_index, replicate) cell of an experiment grid.
    static RngStream for_cell(std::uint64_t seed, std::uint32_t theta_index,
                              std::uint32_t replicate) {
        return RngStream(seed, (static_cast<std::uint64_t>(theta_index) << 32) |
                                   static_cast<std::uint64_t>(replicate));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double strictly inside (0, 1): 53 random bits offset by half an ulp,
    /// so downstream logs never see 0 or 1.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// First theta_index value reserved for non-replicate streams.
inline constexpr std::uint32_t kMetaThetaIndex = 0xFFFFFFF0u;

} // namespace ovp
