#include "equibir/report.hpp"

#include <sstream>

#include "equibir/character.hpp"
#include "equibir/sl2.hpp"

namespace equibir::report {

namespace {

Json int_matrix(const IntMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json rat_matrix(const RatMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json int_vector(const std::vector<BigInt>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

Json divisor_list(const std::vector<BigInt>& divs) {
    Json out = Json::array();
    for (const auto& d : divs) out.push_back(d.get_str());
    return out;
}

} // namespace

Json envelope(const std::string& verdict, Json evidence,
              const std::vector<std::pair<std::string, std::string>>& fixtures) {
    Json prov;
    prov["tool"] = "equibir";
    prov["version"] = EQUIBIR_VERSION;
    Json fx;
    for (const auto& [name, digest] : fixtures) fx[name] = "fnv1a64:" + digest;
    prov["fixtures"] = std::move(fx);
    Json out;
    out["verdict"] = verdict;
    out["evidence"] = std::move(evidence);
    out["provenance"] = std::move(prov);
    return out;
}

Json lines_report(const Dp4Data& d, bool count_only) {
    Json ev = Json::array();
    ev.push_back({{"kind", "line-count"}, {"value", d.lines.size()}});
    if (!count_only) {
        Json planes = Json::array();
        for (const auto& line : d.lines) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < 2; ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < 5; ++j)
                    row.push_back(line.plane(i, j).embedded(3).str());
                rows.push_back(std::move(row));
            }
            planes.push_back(std::move(rows));
        }
        ev.push_back({{"kind", "lines"}, {"echelon_planes", std::move(planes)}});

        Json inc = Json::array();
        for (std::size_t i = 0; i < 16; ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < 16; ++j) row.push_back(d.incidence(i, j));
            inc.push_back(std::move(row));
        }
        ev.push_back({{"kind", "incidence"}, {"matrix", std::move(inc)}});

        Json basis;
        basis["kind"] = "basis";
        basis["base_line"] = d.basis.base;
        basis["basis_lines"] = d.basis.lines;
        basis["gamma_invariant_lines"] = d.basis.gamma_invariant;
        basis["tie_breaks"] = d.basis.tie_break_log;
        basis["gram"] = int_matrix(d.basis.gram);
        ev.push_back(std::move(basis));

        ev.push_back({{"kind", "action-matrices"},
                      {"convention", "column vectors"},
                      {"beta", int_matrix(d.b)},
                      {"gamma", int_matrix(d.c)}});
        ev.push_back({{"kind", "anticanonical"},
                      {"coordinates", int_vector(d.neg_kx)},
                      {"base_line_class", int_vector(d.base_class)}});
        Json align;
        align["kind"] = "relabeling";
        align["note"] = "beta is the order-4 monomial symmetry (sign twist on x4, x5); "
                        "its induced matrix on the line lattice is reported as B";
        align["matches"] = d.alignment_matches;
        if (d.alignment)
            align["sigma"] = std::vector<std::size_t>(d.alignment->begin(), d.alignment->end());
        ev.push_back(std::move(align));
    }
    return envelope(d.alignment ? "OK" : "RELABELING_NOT_FOUND", std::move(ev));
}

Json euler_report(const Dp4Data& d, const EulerLattice& l) {
    Json ev = Json::array();
    ev.push_back({{"kind", "euler-gram"},
                  {"basis", "1, l1..l6, p/2"},
                  {"matrix", rat_matrix(l.gram())}});
    if (d.alignment)
        ev.push_back({{"kind", "relabeling"},
                      {"sigma", std::vector<std::size_t>(d.alignment->begin(),
                                                         d.alignment->end())}});
    K0Report k0 = k0_decomposition_check(l);
    ev.push_back({{"kind", "k0-blocks"},
                  {"rank_part_fixed", k0.rank_fixed},
                  {"point_part_fixed", k0.point_fixed},
                  {"picard_action_nontrivial", k0.picard_nontrivial},
                  {"invariant_rank", k0.invariant_rank}});
    return envelope("OK", std::move(ev));
}

Json h1_report(const EulerLattice& l) {
    H1Report rep = h1_all_subgroups(l.picard_module());
    Json ev = Json::array();
    for (const auto& row : rep.rows) {
        ev.push_back({{"kind", "subgroup"},
                      {"order", row.subgroup_order},
                      {"structure", row.subgroup_kind},
                      {"h1_divisors", divisor_list(row.divisors)},
                      {"h1_dual_divisors", divisor_list(row.dual_divisors)},
                      {"trivial", row.trivial()}});
    }
    ev.push_back({{"kind", "stable-permutation-condition"}, {"status", "not evaluated"}});
    return envelope(rep.all_trivial ? "PASS" : "FAIL", std::move(ev));
}

Json obstruction_json(const ObstructionReport& rep) {
    Json ev = Json::array();
    ev.push_back({{"kind", "setup"},
                  {"group_order", rep.group_order},
                  {"slots", rep.slots},
                  {"invariant_rank", rep.invariant_rank},
                  {"action_nontrivial", rep.k0_moves}});
    for (const auto& out : rep.subgroups) {
        Json e;
        e["kind"] = "subgroup";
        e["order"] = out.order;
        e["index"] = out.index;
        e["cyclic"] = out.cyclic;
        e["method"] = out.method;
        e["excluded"] = out.excluded;
        if (out.certificate) {
            e["modulus"] = out.certificate->modulus;
            e["residues_enumerated"] = out.certificate->enumerated.get_str();
            e["conditions"] = out.certificate->polynomials;
            if (!out.certificate->note.empty()) e["note"] = out.certificate->note;
        }
        if (out.method == "mod-p")
            e["integral_sublattice_certified"] =
                out.restricted_certificate.has_value()
                    ? Json(out.restricted_certificate->modulus)
                    : Json();
        ev.push_back(std::move(e));
    }
    if (!rep.failing_subgroup.empty())
        ev.push_back({{"kind", "failure"}, {"at", rep.failing_subgroup}});
    return envelope(rep.verdict, std::move(ev));
}

Json wedge_report(const LoadedTable& t, const std::string& label) {
    ClassFunction w = wedge_square(t.table.row(label));
    auto decomposition = decompose(w, t.table);
    Json parts = Json::array();
    for (const auto& [name, mult] : decomposition)
        if (mult != 0) parts.push_back({{"label", name}, {"multiplicity", mult.get_str()}});
    Json ev = Json::array();
    ev.push_back({{"kind", "wedge-square"},
                  {"table", t.name},
                  {"character", label},
                  {"degree", w.degree().str()},
                  {"decomposition", std::move(parts)}});
    return envelope("OK", std::move(ev), {{t.name + ".chartab", t.digest}});
}

Json sl2_report(unsigned n) {
    WeightModule m = sym_power(n);
    WeightModule w = wedge_square(m);
    if (!m.relations_hold() || !w.relations_hold())
        throw Error("commutation relations failed");
    Json summands = Json::array();
    for (auto [hw, mult] : decompose_wedge(n)) {
        Json s;
        s["highest_weight"] = hw;
        s["multiplicity"] = mult;
        auto basis = highest_weight_vectors(w, static_cast<long>(hw));
        Json chains = Json::array();
        for (const auto& v : basis) {
            Json chain = Json::array();
            for (const auto& step : lowering_orbit(w, v, hw))
                chain.push_back(format_vector(w, step));
            chains.push_back(std::move(chain));
        }
        s["lowering_chains"] = std::move(chains);
        summands.push_back(std::move(s));
    }
    Json ev = Json::array();
    ev.push_back({{"kind", "wedge-square-of-sym"},
                  {"n", n},
                  {"dimension", w.dim()},
                  {"summands", std::move(summands)}});
    return envelope("OK", std::move(ev));
}

Json linsec_report(const ScenarioFile& f, const LinearSectionScenario& s,
                   const ScenarioReport& rep, const std::string& table_digest) {
    Json chosen = Json::array();
    for (const auto& [label, dim] : s.chosen)
        chosen.push_back({{"label", label}, {"dimension", dim}});
    std::string verdict = rep.precondition ? "PASS" : "FAIL";
    Json ev = Json::array();
    ev.push_back({{"kind", "scenario"},
                  {"name", f.name},
                  {"n", s.n},
                  {"v_dim", s.v_dim()},
                  {"r", s.r},
                  {"chosen", std::move(chosen)},
                  {"codimension_bound", rep.bound},
                  {"dim_x", rep.dim_x},
                  {"fiber_dim", rep.fiber_dim},
                  {"external", rep.external}});
    bool matches = f.expect.empty() || f.expect == verdict;
    if (!f.expect.empty())
        ev.push_back({{"kind", "expectation"}, {"expected", f.expect}, {"matches", matches}});
    return envelope(matches ? verdict : "MISMATCH", std::move(ev),
                    {{f.table + ".chartab", table_digest}, {f.name + ".scn", f.digest}});
}

Json fixtures_report(const std::filesystem::path& dir) {
    Json ev = Json::array();
    std::vector<std::pair<std::string, std::string>> digests;
    bool all_ok = true;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".chartab") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        Json e;
        e["kind"] = "character-table";
        e["file"] = file.filename().string();
        try {
            LoadedTable t = load_char_table(file);
            TableReport rep = verify_table(t.table);
            e["group_order"] = t.group->order();
            e["classes"] = t.group->num_classes();
            e["label"] = t.iso_label;
            e["ok"] = rep.ok;
            e["violations"] = rep.violations;
            all_ok = all_ok && rep.ok;
            digests.emplace_back(file.filename().string(), t.digest);
        } catch (const Error& err) {
            e["ok"] = false;
            e["error"] = err.what();
            all_ok = false;
        }
        ev.push_back(std::move(e));
    }
    return envelope(all_ok ? "PASS" : "FAIL", std::move(ev), digests);
}

namespace {

void render(const Json& j, std::ostringstream& os, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                os << pad << key << ":\n";
                render(value, os, depth + 1);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>()
                                                               : value.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j) scalars = scalars && !v.is_object() && !v.is_array();
        if (scalars) {
            os << pad << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << " ";
                os << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            }
            os << "]\n";
        } else {
            for (const auto& v : j) {
                render(v, os, depth + 1);
                os << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

} // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, os, 0);
    return os.str();
}

} // namespace equibir::report
