// Command-line front end: construct groups, inspect centralizer structure,
// compute commuting-graph spectra along independent paths, run the
// verification suite, export tables and graphs.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "commspec/charpoly.hpp"
#include "commspec/closed_forms.hpp"
#include "commspec/commuting_graph.hpp"
#include "commspec/families.hpp"
#include "commspec/group_table.hpp"
#include "commspec/json_io.hpp"
#include "commspec/spec_parse.hpp"
#include "commspec/spectrum.hpp"
#include "commspec/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

long long configured_max_order() {
    const char* env = std::getenv("COMMUTE_SPECTRA_MAX_ORDER");
    if (!env) return commspec::kDefaultMaxOrder;
    try {
        std::size_t pos = 0;
        long long v = std::stoll(env, &pos);
        if (pos != std::string(env).size() || v < 1) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("COMMUTE_SPECTRA_MAX_ORDER must be a positive integer, got '" +
                                    std::string(env) + "'");
    }
}

void warn_if_degenerate(const commspec::FamilySpec& spec) {
    if (spec.family == commspec::Family::HanakiA && !spec.params.empty() && spec.params[0] == 1)
        std::cerr << "warning: A(1,theta) is abelian; commuting-graph operations will reject it\n";
    for (const auto& f : spec.factors) warn_if_degenerate(f);
}

// Closed-form spectrum for the given family, when one exists. Named families
// evaluate directly from their parameters; products of one non-abelian factor
// with abelian factors go through the scaled-centralizer form; any other
// AC-group falls back to the general centralizer-order formula.
std::optional<commspec::PredictedSpectrum> closed_form_for(const commspec::FamilySpec& spec, long long cap) {
    using namespace commspec;
    switch (spec.family) {
        case Family::Dihedral: return spec_dihedral(spec.params[0] / 2);
        case Family::GenQuaternion: return spec_quaternion(spec.params[0] / 4);
        case Family::Quasidihedral: {
            int n = 0;
            for (long long v = spec.params[0]; v > 1; v /= 2) ++n;
            return spec_quasidihedral(n);
        }
        case Family::PSL2: {
            auto pp = prime_power_decompose(spec.params[0]);
            return spec_psl2(pp->second);
        }
        case Family::GL2: return spec_gl2(spec.params[0]);
        case Family::HanakiA:
            if (spec.params[0] < 2) return std::nullopt;
            return spec_hanaki_a(static_cast<int>(spec.params[0]));
        case Family::HanakiB: return spec_hanaki_b(spec.params[0], static_cast<int>(spec.params[1]));
        case Family::SemidirectPQ: return spec_pq(spec.params[0], spec.params[1]);
        case Family::F20: return spec_sz2_quotient(1);
        case Family::M16:
        case Family::Z4rtimesZ4:
        case Family::D8centralZ4:
        case Family::SG16_3: return spec_central_quotient_pp(2, 4);
        case Family::Alternating:
            if (spec.params[0] == 4) return spec_fixed_group("A4");
            if (spec.params[0] == 5) return spec_psl2(2);
            break;
        case Family::SL2:
            if (spec.params[0] == 3) return spec_fixed_group("SL23");
            break;
        case Family::Product: {
            // flatten, demand exactly one non-abelian factor
            std::vector<const FamilySpec*> stack{&spec}, leaves;
            while (!stack.empty()) {
                const FamilySpec* cur = stack.back();
                stack.pop_back();
                if (cur->family == Family::Product) {
                    stack.push_back(&cur->factors[1]);
                    stack.push_back(&cur->factors[0]);
                } else {
                    leaves.push_back(cur);
                }
            }
            std::optional<GroupTable> base;
            long long abelian_order = 1;
            for (const FamilySpec* leaf : leaves) {
                GroupTable g = build_group(*leaf, cap);
                if (is_abelian(g)) {
                    abelian_order *= g.order;
                } else if (base) {
                    return std::nullopt; // two non-abelian factors: no closed form here
                } else {
                    base = std::move(g);
                }
            }
            if (!base || !is_ac_group(*base)) return std::nullopt;
            auto fam = centralizer_family(*base);
            std::vector<long long> orders;
            for (const auto& m : fam.members) orders.push_back(m.size());
            return spec_ac_times_abelian(orders, center(*base).size(), abelian_order);
        }
        default: break;
    }
    // general AC route
    GroupTable g = build_group(spec, cap);
    if (is_abelian(g) || !is_ac_group(g)) return std::nullopt;
    auto fam = centralizer_family(g);
    std::vector<long long> orders;
    for (const auto& m : fam.members) orders.push_back(m.size());
    return spec_ac(orders, center(g).size());
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

int cmd_info(const std::string& spec_text, long long cap) {
    using namespace commspec;
    FamilySpec spec = parse_group_spec(spec_text);
    warn_if_degenerate(spec);
    GroupTable g = build_group(spec, cap);
    ElementSet z = center(g);
    std::cout << "group: " << g.family << "\n";
    std::cout << "order: " << g.order << "\n";
    std::cout << "center: " << z.size() << "\n";
    if (z.size() == g.order) {
        std::cout << "abelian: yes\n";
        return kExitOk;
    }
    std::cout << "abelian: no\n";
    std::cout << "ac: " << (is_ac_group(g) ? "yes" : "no") << "\n";
    auto fam = centralizer_family(g);
    auto sizes = fam.sizes();
    std::cout << "centralizer sizes:";
    for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) std::cout << " " << *it;
    std::cout << "\n";
    return kExitOk;
}

int cmd_spectrum(const std::string& spec_text, const std::string& method, bool as_json, long long cap) {
    using namespace commspec;
    FamilySpec spec = parse_group_spec(spec_text);
    warn_if_degenerate(spec);

    if (method == "formula") {
        auto predicted = closed_form_for(spec, cap);
        if (!predicted) throw std::invalid_argument("no closed-form spectrum for '" + spec_text + "'");
        if (as_json) {
            std::cout << spectrum_to_json(predicted->spectrum).dump(2) << "\n";
        } else {
            std::cout << "group: " << spec.to_string() << "\n";
            std::cout << "method: formula (" << predicted->provenance << ")\n";
            std::cout << "spectrum: " << predicted->spectrum.to_string() << "\n";
        }
        return kExitOk;
    }

    GroupTable g = build_group(spec, cap);
    CommutingGraph cg = build_commuting_graph(g);
    auto decomp = clique_decomposition(cg.adj);

    std::string effective = method;
    if (method == "auto") effective = decomp ? "clique" : "charpoly";

    std::optional<Spectrum> clique_spec, charpoly_spec;
    if (effective == "clique" || effective == "both") {
        if (!decomp)
            throw std::invalid_argument("the commuting graph of " + g.family +
                                        " is not a disjoint union of cliques; use --method charpoly");
        clique_spec = clique_union_spectrum(*decomp);
    }
    if (effective == "charpoly" || effective == "both") charpoly_spec = integer_spectrum(char_poly(cg));

    bool agree = true;
    if (effective == "both") agree = (*clique_spec == *charpoly_spec);
    const Spectrum& result = charpoly_spec ? *charpoly_spec : *clique_spec;

    if (as_json) {
        std::cout << spectrum_to_json(result).dump(2) << "\n";
    } else {
        std::cout << "group: " << g.family << " (order " << g.order << ", center " << cg.center_size << ")\n";
        std::cout << "method: " << effective << "\n";
        std::cout << "spectrum: " << result.to_string() << "\n";
        if (!result.is_integral) std::cout << "integral: no\n";
        if (effective == "both") std::cout << "paths agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& filter, int jobs, const std::string& json_path, bool quiet, long long cap) {
    using namespace commspec;
    auto cases = default_suite();
    if (!filter.empty()) {
        std::vector<VerificationCase> kept;
        for (auto& c : cases)
            if (c.id.find(filter) != std::string::npos) kept.push_back(std::move(c));
        cases = std::move(kept);
    }
    VerificationReport report = run_suite(cases, jobs, cap);
    if (!quiet) {
        for (const auto& c : report.cases) {
            std::cout << (c.match ? "[ OK ] " : "[FAIL] ") << c.id << "  " << c.group;
            if (c.brute) std::cout << "  " << c.brute->to_string();
            if (!c.error.empty()) std::cout << "  error: " << c.error;
            std::cout << "\n";
        }
        std::cout << "matched " << report.matched << "/" << report.total << " cases\n";
    }
    if (!json_path.empty()) write_text(json_path, report_to_json(report).dump(2) + "\n");
    return report.all_match() ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra of commuting graphs of finite groups"};
    app.require_subcommand(1);

    std::string spec_text, method = "auto", out_path, json_path, filter;
    bool as_json = false, quiet = false;
    int jobs = 1;

    auto* info = app.add_subcommand("info", "order, centre, AC flag and centralizer sizes of a group");
    info->add_option("spec", spec_text,
                     "group spec, e.g. QD:16 or 'D:6 x Z:3' (D:<n> and Q:<n> take the group order)")
        ->required();

    auto* spectrum = app.add_subcommand("spectrum", "spectrum of the commuting graph");
    spectrum->add_option("spec", spec_text, "group spec")->required();
    spectrum->add_option("--method", method, "auto|charpoly|clique|formula|both (default auto)")
        ->check(CLI::IsMember({"auto", "charpoly", "clique", "formula", "both"}));
    spectrum->add_flag("--json", as_json, "emit the spectrum as JSON");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--filter", filter, "only run cases whose id contains this substring");
    verify->add_option("--jobs", jobs, "number of concurrent workers")->check(CLI::PositiveNumber);
    verify->add_option("--json", json_path, "write the report as JSON to this path ('-' for stdout)");
    verify->add_flag("--quiet", quiet, "suppress the per-case lines");

    auto* export_dot_cmd = app.add_subcommand("export-dot", "commuting graph as DOT text");
    export_dot_cmd->add_option("spec", spec_text, "group spec")->required();
    export_dot_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* export_table = app.add_subcommand("export-table", "group multiplication table as JSON");
    export_table->add_option("spec", spec_text, "group spec")->required();
    export_table->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        long long cap = configured_max_order();
        if (*info) return cmd_info(spec_text, cap);
        if (*spectrum) return cmd_spectrum(spec_text, method, as_json, cap);
        if (*verify) return cmd_verify(filter, jobs, json_path, quiet, cap);
        if (*export_dot_cmd) {
            auto g = commspec::build_group(commspec::parse_group_spec(spec_text), cap);
            write_text(out_path, commspec::export_dot(commspec::build_commuting_graph(g)));
            return kExitOk;
        }
        if (*export_table) {
            auto g = commspec::build_group(commspec::parse_group_spec(spec_text), cap);
            write_text(out_path, commspec::table_to_json(g).dump(2) + "\n");
            return kExitOk;
        }
    } catch (const commspec::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
