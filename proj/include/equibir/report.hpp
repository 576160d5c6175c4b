#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

#include "equibir/dp4.hpp"
#include "equibir/euler.hpp"
#include "equibir/fixtures.hpp"
#include "equibir/glattice.hpp"
#include "equibir/linear_section.hpp"
#include "equibir/obstruction.hpp"

namespace equibir::report {

using Json = nlohmann::ordered_json;

/// Every report is one object {verdict, evidence: [...], provenance}; the
/// text output is a rendering of the same object.
Json envelope(const std::string& verdict, Json evidence,
              const std::vector<std::pair<std::string, std::string>>& fixtures = {});

Json lines_report(const Dp4Data& d, bool count_only = false);
Json euler_report(const Dp4Data& d, const EulerLattice& l);
Json h1_report(const EulerLattice& l);
Json obstruction_json(const ObstructionReport& rep);
Json wedge_report(const LoadedTable& t, const std::string& label);
Json sl2_report(unsigned n);
Json linsec_report(const ScenarioFile& f, const LinearSectionScenario& s,
                   const ScenarioReport& rep, const std::string& table_digest);
Json fixtures_report(const std::filesystem::path& dir);

std::string render_text(const Json& j);

} // namespace equibir::report
