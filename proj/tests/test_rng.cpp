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

#include <doctest.h>

#include <set>
#include <thread>
#include <vector>

#include "ovp/rng.hpp"

using namespace ovp;

TEST_CASE("identical (seed, stream_id) reproduce the same sequence") {
    RngStream a(123, 456);
    RngStream b(123, 456);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("distinct stream ids decorrelate") {
    RngStream a(123, 0);
    RngStream b(123, 1);
    int agreements = 0;
    for (int i = 0; i < 1000; ++i) {
        if (a.next_u64() == b.next_u64()) {
            ++agreements;
        }
    }
    CHECK(agreements == 0);

    // Crude independence check: the fraction of (u, v) pairs in each
    // quadrant of the unit square should be about a quarter.
    RngStream u(7, 100);
    RngStream v(7, 200);
    int q11 = 0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        if (u.next_unit() < 0.5 && v.next_unit() < 0.5) {
            ++q11;
        }
    }
    CHECK(q11 > trials / 4 - 1000);
    CHECK(q11 < trials / 4 + 1000);
}

TEST_CASE("for_cell packs theta index and replicate into disjoint streams") {
    std::set<std::uint64_t> firsts;
    for (std::uint32_t theta = 0; theta < 20; ++theta) {
        for (std::uint32_t rep = 0; rep < 20; ++rep) {
            firsts.insert(RngStream::for_cell(99, theta, rep).next_u64());
        }
    }
    CHECK(firsts.size() == 400);
}

TEST_CASE("unit draws stay strictly inside (0,1)") {
    RngStream rng(5, 5);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.next_unit();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("streams are value types; results do not depend on thread schedule") {
    std::vector<std::uint64_t> serial(8);
    for (std::uint32_t i = 0; i < 8; ++i) {
        RngStream rng = RngStream::for_cell(11, i, 0);
        serial[i] = rng.next_u64();
    }
    std::vector<std::uint64_t> threaded(8);
    std::vector<std::thread> pool;
    for (std::uint32_t i = 0; i < 8; ++i) {
        pool.emplace_back([i, &threaded]() {
            RngStream rng = RngStream::for_cell(11, i, 0);
            threaded[i] = rng.next_u64();
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    CHECK(serial == threaded);
}
