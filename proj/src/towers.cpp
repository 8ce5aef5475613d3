#include "classnum/towers.hpp"

#include <sstream>
#include <stdexcept>

namespace classnum {

CyclicTower make_tower(const Integer& base_degree, std::vector<Integer> steps)
{
    CyclicTower t;
    t.base.label = "K";
    t.base.degree = base_degree;
    t.steps = std::move(steps);
    t.top.label = "L";
    t.top.degree = base_degree;
    for (const Integer& q : t.steps)
        t.top.degree *= q;
    return t;
}

namespace {

bool is_power_of_two(const Integer& n)
{
    return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

bool node_consistent(const FieldNode& node, std::string* error)
{
    if (node.degree < 1) {
        if (error)
            *error = "field degree must be positive";
        return false;
    }
    if (node.discriminant && *node.discriminant == 0) {
        if (error)
            *error = "field discriminant must be nonzero";
        return false;
    }
    if (node.class_number && node.class_factors &&
        node.class_factors->product() != *node.class_number) {
        if (error)
            *error = "class number and its factorization disagree";
        return false;
    }
    return true;
}

} // namespace

bool validate_tower(const CyclicTower& tower, std::string* error)
{
    if (!node_consistent(tower.base, error) || !node_consistent(tower.top, error))
        return false;
    if (!is_power_of_two(tower.base.degree)) {
        if (error)
            *error = "base degree must be a power of 2";
        return false;
    }
    if (tower.steps.empty()) {
        if (error)
            *error = "tower needs at least one cyclic step";
        return false;
    }
    Integer product = tower.base.degree;
    for (const Integer& q : tower.steps) {
        if (q < 3 || mpz_even_p(q.get_mpz_t()) || !is_prime(q)) {
            if (error)
                *error = "step degree " + to_string(q) + " is not an odd prime";
            return false;
        }
        product *= q;
    }
    if (product != tower.top.degree) {
        if (error)
            *error = "top degree " + to_string(tower.top.degree) +
                     " does not match base times steps " + to_string(product);
        return false;
    }
    return true;
}

DescentTrace descend(const CyclicTower& tower, const Integer& p, unsigned r)
{
    std::string error;
    if (!validate_tower(tower, &error))
        throw std::invalid_argument("descend: " + error);
    if (p < 2)
        throw std::invalid_argument("descend: p must be a prime >= 2");
    if (r == 0)
        throw std::invalid_argument("descend: rank must be positive");

    DescentTrace trace;
    for (auto it = tower.steps.rbegin(); it != tower.steps.rend(); ++it) {
        const Integer& q = *it;
        DescentStep step;
        step.q = q;
        if (p % q == 0) {
            /* p = q: the rank product is divisible by q through its leading
             * factor, no order to speak of. */
            step.outcome = StepOutcome::WitnessHere;
            trace.steps.push_back(std::move(step));
            trace.final = Verdict::witness(q);
            return trace;
        }
        Integer f = multiplicative_order(p, q);
        step.order = f;
        /* q | prod_{i=1}^{r}(p^i - 1)  iff  ord_q(p) <= r */
        if (f <= r) {
            step.outcome = StepOutcome::WitnessHere;
            trace.steps.push_back(std::move(step));
            trace.final = Verdict::witness(q);
            return trace;
        }
        step.outcome = StepOutcome::PushedDown;
        trace.steps.push_back(std::move(step));
    }
    trace.final = Verdict::subfield_divisibility();
    return trace;
}

CyclicTower parse_tower_literal(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("tower literal needs the form base:q1,q2,...");
    auto parse_int = [&](const std::string& part) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("tower literal: '" + part + "' is not a positive integer");
        return Integer(part);
    };
    Integer base = parse_int(text.substr(0, colon));
    std::vector<Integer> steps;
    std::string rest = text.substr(colon + 1);
    std::istringstream in(rest);
    std::string piece;
    while (std::getline(in, piece, ','))
        steps.push_back(parse_int(piece));
    if (steps.empty() || rest.empty() || rest.back() == ',')
        throw std::invalid_argument("tower literal needs at least one step degree");
    CyclicTower tower = make_tower(base, std::move(steps));
    std::string error;
    if (!validate_tower(tower, &error))
        throw std::invalid_argument("tower literal: " + error);
    return tower;
}

std::string tower_literal(const CyclicTower& tower)
{
    std::string out = to_string(tower.base.degree) + ":";
    for (std::size_t i = 0; i < tower.steps.size(); ++i) {
        if (i)
            out += ',';
        out += to_string(tower.steps[i]);
    }
    return out;
}

} // namespace classnum
