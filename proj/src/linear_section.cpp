#include "equibir/linear_section.hpp"

#include <algorithm>

namespace equibir {

ScenarioReport check_scenario(const LinearSectionScenario& s) {
    if (s.n < 2) throw BadScenario("need dim W >= 2");
    if (s.r > s.wedge_dim()) throw BadScenario("codimension exceeds the wedge square");
    unsigned total = 0;
    for (const auto& [label, dim] : s.chosen) total += dim;
    if (!s.chosen.empty() && total != s.v_dim())
        throw BadScenario("chosen summand dimensions sum to " + std::to_string(total) +
                          ", expected " + std::to_string(s.v_dim()));
    ScenarioReport rep;
    rep.bound = s.n - 2;
    rep.precondition = s.r <= rep.bound;
    rep.dim_x = 2 * static_cast<long>(s.n - 2) - static_cast<long>(s.r);
    rep.fiber_dim = static_cast<long>(s.n) - 2 - static_cast<long>(s.r);
    return rep;
}

LinearSectionScenario scenario_from_decomposition(const ClassFunction& w, const CharTable& t,
                                                  const std::vector<std::string>& chosen) {
    auto deg = w.degree().rational_integer();
    if (!deg || *deg < 2) throw BadScenario("representation degree must be an integer >= 2");

    auto decomposition = decompose(wedge_square(w), t);
    LinearSectionScenario s;
    s.n = static_cast<unsigned>(deg->get_ui());
    unsigned v_dim = 0;
    for (const std::string& label : chosen) {
        auto it = std::find_if(decomposition.begin(), decomposition.end(),
                               [&](const auto& p) { return p.first == label; });
        if (it == decomposition.end() || it->second == 0)
            throw BadChoice(label + " is not a constituent of the wedge square");
        auto d = t.row(label).degree().rational_integer();
        s.chosen.emplace_back(label, static_cast<unsigned>(d->get_ui()));
        v_dim += s.chosen.back().second;
    }
    if (v_dim > s.wedge_dim()) throw BadChoice("chosen summands exceed the wedge square");
    s.r = s.wedge_dim() - v_dim;
    return s;
}

} // namespace equibir
