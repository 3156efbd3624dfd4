#pragma once

// Seeded random instance generators and the randomized invariant suite run
// by `parbelos fuzz`. Each case draws from its own generator seeded with
// (seed, case index), so results do not depend on scheduling.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "parbelos/figure.hpp"

namespace parbelos::fuzz {

class RandomSource {
public:
    RandomSource(std::uint64_t seed, std::uint64_t stream);

    long integer(long lo, long hi);
    /// p/q with |p| <= height, 1 <= q <= height.
    Rational rational(long height);
    /// p/q with 1 <= p, q <= height.
    Rational positive(long height);
    Point point(long height);
    /// Nonzero rational vector.
    Vec2 direction(long height);
    Side side();
    Parabola parabola(long height);
    /// `count` pairwise distinct rationals.
    std::vector<Rational> distinct(std::size_t count, long height);
    /// (p, q) with p^2 + q^2 a perfect square, from Euclid's formula.
    std::pair<Rational, Rational> pythagorean(long height);
    /// Cusps C1, C1 + a*d, C1 + (a+b)*d on a random rational line.
    CuspInputs cusps(long height);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Booleans of every parbelos check plus a few predicates that must be false;
/// similarity transforms must leave this vector unchanged.
std::vector<bool> verdict_signature(const ParbelosFigure& fig);

/// (d.u)^2 * 2 == |d|^2 |u|^2 at both latus endpoints of `g`.
bool latus_tangent_angle_holds(const Parabola& g);

struct FuzzOptions {
    std::uint64_t cases = 100;
    std::uint64_t seed = 1;
    long max_height = 100;
    bool parallel = false;
};

struct CaseResult {
    std::uint64_t index = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

struct FuzzSummary {
    std::uint64_t cases = 0;
    std::uint64_t failed_cases = 0;
    std::size_t checks = 0;
    std::vector<std::string> messages;
};

CaseResult run_case(std::uint64_t seed, std::uint64_t index, long max_height);
FuzzSummary run_fuzz(const FuzzOptions& options);

}  // namespace parbelos::fuzz
