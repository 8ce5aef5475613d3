#pragma once

#include "classnum/arithmetic.hpp"
#include "classnum/congruence.hpp"
#include "classnum/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace classnum {

struct FieldNode {
    std::string label;
    Integer degree = 1;
    std::optional<Integer> discriminant;     /* nonzero when present */
    std::optional<Integer> class_number;
    std::optional<Factorization> class_factors;
};

/*
 * K = L_0 < L_1 < ... < L_t = L with [L_{j+1}:L_j] = q_j cyclic of odd
 * prime degree; steps are read bottom-up (q_1 first).
 */
struct CyclicTower {
    FieldNode base;               /* degree 2^a, possibly 1 */
    std::vector<Integer> steps;   /* nonempty, odd primes */
    FieldNode top;                /* degree = base.degree * prod steps */
};

/* Convenience constructor from bare degrees. */
CyclicTower make_tower(const Integer& base_degree, std::vector<Integer> steps);

/*
 * True iff all CyclicTower invariants hold; on failure, *error (when given)
 * receives the first violated invariant.
 */
bool validate_tower(const CyclicTower& tower, std::string* error = nullptr);

enum class StepOutcome { WitnessHere, PushedDown };

struct DescentStep {
    Integer q;
    std::optional<Integer> order;  /* ord_q(p); absent when q | p */
    StepOutcome outcome = StepOutcome::PushedDown;
};

struct DescentTrace {
    std::vector<DescentStep> steps;
    Verdict final = Verdict::subfield_divisibility();
};

/*
 * Simulates the descent in the proof of the coprimality theorem: walk the
 * tower top-down (q_t first); the rank theorem stops the walk at the first
 * step whose prime divides rank_product(p, r) (WitnessHere), otherwise p
 * divides the class number one level down (PushedDown, with p-rank still
 * <= r by the pushing-up corollary).  If every step pushes down, p must
 * divide h(K): final = SubfieldDivisibility.
 * Throws std::invalid_argument on an invalid tower or r = 0.
 */
DescentTrace descend(const CyclicTower& tower, const Integer& p, unsigned r);

/* "base_deg:q1,q2,..." literal used by the CLI, e.g. "2:5,13". */
CyclicTower parse_tower_literal(const std::string& text);
std::string tower_literal(const CyclicTower& tower);

} // namespace classnum
