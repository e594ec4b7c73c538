#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "autgrp/perm.hpp"
#include "autgrp/rng.hpp"
#include "support.hpp"

using autgrp::Permutation;

TEST_CASE("identity") {
    Permutation id(5);
    CHECK(id.is_identity());
    CHECK(id.is_valid());
    for (int v = 0; v < 5; ++v) CHECK(id(v) == v);
    CHECK(id.to_cycles() == "()");
}

TEST_CASE("compose follows function composition") {
    // a = (0 1 2), b = (0 1): a(b(0)) = a(1) = 2
    Permutation a(std::vector<int>{1, 2, 0});
    Permutation b(std::vector<int>{1, 0, 2});
    Permutation ab = a.compose(b);
    CHECK(ab(0) == 2);
    CHECK(ab(1) == 1);
    CHECK(ab(2) == 0);
}

TEST_CASE("inverse and group axioms on random permutations") {
    autgrp::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Permutation p = corpus::random_perm(9, rng);
        Permutation q = corpus::random_perm(9, rng);
        CHECK(p.is_valid());
        CHECK(p.compose(p.inverse()).is_identity());
        CHECK(p.inverse().compose(p).is_identity());
        // associativity with a third element
        Permutation r = corpus::random_perm(9, rng);
        CHECK(p.compose(q).compose(r) == p.compose(q.compose(r)));
    }
}

TEST_CASE("cycle notation round-trip") {
    autgrp::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Permutation p = corpus::random_perm(8, rng);
        CHECK(Permutation::from_cycles(p.to_cycles(), 8) == p);
    }
    CHECK(Permutation::from_cycles("()", 4).is_identity());
    CHECK(Permutation::from_cycles("(1 2 3)(4 5)", 5).to_cycles() == "(1 2 3)(4 5)");
}

TEST_CASE("from_cycles rejects malformed input") {
    CHECK_THROWS_AS((void)Permutation::from_cycles("(1 2", 3), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation::from_cycles("(1 9)", 3), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation::from_cycles("(1 1)", 3), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation::from_cycles("abc", 3), std::invalid_argument);
    CHECK_THROWS_AS((void)Permutation::from_cycles("(0 1)", 3), std::invalid_argument);
}

TEST_CASE("invalid image detected") {
    CHECK_FALSE(Permutation(std::vector<int>{0, 0, 2}).is_valid());
    CHECK_FALSE(Permutation(std::vector<int>{0, 3, 1}).is_valid());
}
