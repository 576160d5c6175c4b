#pragma once

#include <string>
#include <vector>

#include "equibir/character.hpp"

namespace equibir {

/// Numerical data of a linear section of the Grassmannian of planes in an
/// n-dimensional representation: V inside the wedge square with codimension
/// r, remembered together with the chosen summand labels.
struct LinearSectionScenario {
    std::string name;
    unsigned n = 0;                                        // dim W
    unsigned r = 0;                                        // codim of V
    std::vector<std::pair<std::string, unsigned>> chosen;  // label, dimension

    unsigned wedge_dim() const { return n * (n - 1) / 2; }
    unsigned v_dim() const { return wedge_dim() - r; }
};

struct ScenarioReport {
    bool precondition = false; // r <= n - 2
    long dim_x = 0;            // 2(n-2) - r
    long fiber_dim = 0;        // n - 2 - r
    unsigned bound = 0;        // n - 2
    // the geometric hypothesis (irreducibility, expected dimension) is not
    // decided here; callers must consult an external check
    std::string external = "irreducibility/expected-dimension not decided here";
};

/// Dimension bookkeeping; throws BadScenario on inconsistent input.
ScenarioReport check_scenario(const LinearSectionScenario& s);

/// Build a scenario from a character and a choice of wedge-square summands.
/// Throws BadChoice if a label is not a constituent of the wedge square.
LinearSectionScenario scenario_from_decomposition(const ClassFunction& w, const CharTable& t,
                                                  const std::vector<std::string>& chosen);

} // namespace equibir
