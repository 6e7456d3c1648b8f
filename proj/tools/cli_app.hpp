#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <schubert/schubert.hpp>

namespace schubert::cli {

namespace detail {

inline BoxFrame parse_box(const std::string& text) {
    const auto split = text.find_first_of("xX");
    if (split == std::string::npos || split == 0 || split + 1 == text.size())
        throw std::invalid_argument("box: expected MxK, got '" + text + "'");
    std::size_t used_m = 0, used_k = 0;
    const std::int64_t m = std::stoll(text.substr(0, split), &used_m);
    const std::int64_t k = std::stoll(text.substr(split + 1), &used_k);
    if (used_m != split || used_k != text.size() - split - 1 || m < 0 || k < 0)
        throw std::invalid_argument("box: expected MxK with nonnegative sides, got '" + text + "'");
    return {m, k};
}

inline std::string counts_text(const std::vector<Count>& counts) {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ',';
        out += counts[i].str();
    }
    return out;
}

inline void print_report(std::ostream& out, const std::string& name, const Report& report) {
    out << name << ": checked " << report.checked << ", failures " << report.failures.size() << "\n";
    for (const auto& f : report.failures) out << "  " << f << "\n";
}

} // namespace detail

/// Parses the arguments (program name excluded) and executes one
/// subcommand, writing results to out and diagnostics to err.  Returns the
/// process exit code: 0 success or positive verdict, 1 negative or unknown
/// verdict or sweep failures, 2 usage/parse/domain errors, 3 resource
/// bounds exceeded.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial isomorphism tools for partitions and skew shapes"};
    int verdict = 0;

    // check-schubert
    std::string cs_left, cs_right;
    bool cs_explain = false, cs_json = false;
    auto* cs = app.add_subcommand("check-schubert",
                                  "Decide isomorphism for a pair of box partitions");
    cs->add_option("first", cs_left, "first partition")->required();
    cs->add_option("second", cs_right, "second partition")->required();
    cs->add_flag("--explain", cs_explain, "print the separating-invariant trace");
    cs->add_flag("--json", cs_json, "structured verdict");
    cs->callback([&] {
        const auto a = parse_partition(cs_left);
        const auto b = parse_partition(cs_right);
        const auto rep = distinguish_schubert(a, b);
        if (cs_json) {
            out << nlohmann::json{{"isomorphic", rep.isomorphic},
                                  {"relation", rep.relation},
                                  {"rung", rep.rung},
                                  {"witness", rep.witness},
                                  {"trace", rep.trace}}
                       .dump(2)
                << "\n";
        } else {
            out << (rep.isomorphic ? "isomorphic (" + rep.relation + ")" : "not isomorphic") << "\n";
            if (cs_explain && !rep.isomorphic)
                for (const auto& line : rep.trace) out << line << "\n";
        }
        verdict = rep.isomorphic ? 0 : 1;
    });

    // check-richardson
    std::string cr_left, cr_right;
    bool cr_explain = false, cr_json = false;
    auto* cr = app.add_subcommand("check-richardson",
                                  "Decide semi-isomorphism for a pair of skew shapes");
    cr->add_option("first", cr_left, "first skew shape")->required();
    cr->add_option("second", cr_right, "second skew shape")->required();
    cr->add_flag("--explain", cr_explain, "print the reason in detail");
    cr->add_flag("--json", cr_json, "structured verdict");
    cr->callback([&] {
        const auto a = parse_skew(cr_left);
        const auto b = parse_skew(cr_right);
        const auto rep = richardson_sufficient(a, b);
        if (cr_json) {
            out << nlohmann::json{{"isomorphic", rep.isomorphic}, {"detail", rep.detail}}.dump(2)
                << "\n";
        } else {
            out << (rep.isomorphic ? "isomorphic" : "not proven isomorphic") << "\n";
            if (cr_explain || !rep.isomorphic) out << rep.detail << "\n";
        }
        verdict = rep.isomorphic ? 0 : 1;
    });

    // sing
    std::string sing_arg;
    bool sing_json = false;
    auto* sg = app.add_subcommand("sing", "Singular-locus components of a partition");
    sg->add_option("partition", sing_arg, "partition")->required();
    sg->add_flag("--json", sing_json, "structured output");
    sg->callback([&] {
        const auto p = parse_partition(sing_arg);
        const bool smooth = is_smooth(p);
        if (sing_json) {
            nlohmann::json comps = nlohmann::json::array();
            nlohmann::json lambda0;
            if (!smooth) {
                for (const auto& c : singular_components(p)) comps.push_back(to_json(c));
                lambda0 = to_json(singular_intersection(p));
            }
            out << nlohmann::json{{"components", comps}, {"lambda0", lambda0}, {"smooth", smooth}}
                       .dump(2)
                << "\n";
            return;
        }
        if (smooth) {
            out << "smooth: no singular locus\n";
            return;
        }
        const auto comps = singular_components(p);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            out << "component " << i + 1 << ": " << to_text(comps[i]) << "\n";
            out << render_ascii(comps[i]);
        }
        const auto z = singular_intersection(p);
        out << "intersection: " << to_text(z) << "\n";
        out << render_ascii(z);
    });

    // xi
    std::string xi_arg;
    bool xi_json = false;
    auto* xs = app.add_subcommand("xi", "Longest hook length of a partition");
    xs->add_option("partition", xi_arg, "partition")->required();
    xs->add_flag("--json", xi_json, "structured output");
    xs->callback([&] {
        const auto value = xi(parse_partition(xi_arg));
        if (xi_json)
            out << nlohmann::json{{"xi", value}}.dump(2) << "\n";
        else
            out << value << "\n";
    });

    // betti
    std::string betti_arg;
    bool betti_json = false;
    auto* bt = app.add_subcommand("betti", "Subdiagram counts of a partition, by size");
    bt->add_option("partition", betti_arg, "partition")->required();
    bt->add_flag("--json", betti_json, "structured output");
    bt->callback([&] {
        const auto counts = subdiagram_counts(parse_partition(betti_arg));
        if (betti_json)
            out << counts_to_json(counts).dump(2) << "\n";
        else
            out << detail::counts_text(counts) << "\n";
    });

    // poset
    std::string poset_arg;
    bool poset_json = false;
    auto* ps = app.add_subcommand("poset", "Cell poset of a skew shape, as DOT or JSON");
    ps->add_option("skew", poset_arg, "skew shape")->required();
    ps->add_flag("--json", poset_json, "JSON instead of DOT");
    ps->callback([&] {
        const auto poset = build_poset(parse_skew(poset_arg));
        if (poset_json)
            out << to_json(poset).dump(2) << "\n";
        else
            out << to_dot(poset);
    });

    // render
    std::string render_arg;
    bool render_json = false;
    auto* rd = app.add_subcommand("render", "Draw a partition or skew shape");
    rd->add_option("shape", render_arg, "partition or skew shape")->required();
    rd->add_flag("--json", render_json, "row intervals instead of a drawing");
    rd->callback([&] {
        const auto shape = parse_skew(render_arg);
        if (render_json)
            out << to_json(shape).dump(2) << "\n";
        else
            out << render_ascii(shape);
    });

    // verify
    std::string sweep;
    std::string box_arg;
    std::int64_t max_cells = -1;
    int jobs = 1;
    bool verify_json = false;
    auto* vf = app.add_subcommand("verify", "Exhaustively re-check the library's identities");
    vf->add_option("sweep", sweep, "sing|conn|strongskew|betti|dagger|semi|all")
        ->required()
        ->check(CLI::IsMember({"sing", "conn", "strongskew", "betti", "dagger", "semi", "all"}));
    vf->add_option("--box", box_arg, "partition box MxK (sing default 6x6, betti default 5x5)");
    vf->add_option("--max-cells", max_cells,
                   "shape size bound (conn/strongskew/dagger default 8, semi default 7)");
    vf->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    vf->add_flag("--json", verify_json, "structured reports");
    vf->callback([&] {
        const bool all = sweep == "all";
        nlohmann::json json_out = nlohmann::json::object();
        std::int64_t failures = 0;
        auto run_one = [&](const std::string& name, const Report& report) {
            failures += static_cast<std::int64_t>(report.failures.size());
            if (verify_json)
                json_out[name] = to_json(report);
            else
                detail::print_report(out, name, report);
        };
        auto cells = [&](std::int64_t fallback) { return max_cells < 0 ? fallback : max_cells; };
        if (all || sweep == "sing")
            run_one("sing", verify_sing_identities(
                                box_arg.empty() ? BoxFrame{6, 6} : detail::parse_box(box_arg), jobs));
        if (all || sweep == "conn") run_one("conn", verify_lemma_conn(cells(8), jobs));
        if (all || sweep == "strongskew") run_one("strongskew", verify_strongskew(cells(8), jobs));
        if (all || sweep == "dagger") run_one("dagger", verify_dagger_duality(cells(8), jobs));
        if (all || sweep == "betti")
            run_one("betti", verify_betti_identities(
                                 box_arg.empty() ? BoxFrame{5, 5} : detail::parse_box(box_arg), jobs));
        if (all || sweep == "semi") run_one("semi", verify_semi_agreement(cells(7), jobs));
        // one sweep prints its report directly; "all" maps name to report
        if (verify_json) out << (all ? json_out : json_out[sweep]).dump(2) << "\n";
        verdict = failures == 0 ? 0 : 1;
    });

    // explore
    auto* ex = app.add_subcommand("explore", "Observational searches");
    ex->require_subcommand(1);
    std::int64_t ex_cells = 7;
    bool ex_json = false;
    auto* co = ex->add_subcommand("collisions",
                                  "Shapes sharing all numerical invariants without being semi-isomorphic");
    co->add_option("--max-cells", ex_cells, "shape size bound (default 7)");
    co->add_flag("--json", ex_json, "structured output");
    co->callback([&] {
        const auto report = collision_search(ex_cells);
        if (ex_json) {
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto& c : report.collisions)
                pairs.push_back({{"left", to_text(c.left)}, {"right", to_text(c.right)}});
            out << nlohmann::json{{"checked", report.checked},
                                  {"collisions", pairs},
                                  {"elapsedMs", report.elapsed_ms}}
                       .dump(2)
                << "\n";
        } else {
            out << "checked " << report.checked << " shapes, " << report.collisions.size()
                << " collisions\n";
            for (const auto& c : report.collisions)
                out << "  " << to_text(c.left) << "  vs  " << to_text(c.right) << "\n";
        }
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("schub");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        // an unknown first token is reported by the extras check above, with
        // its name; an empty command line reaches this point instead
        if (app.get_subcommands().empty()) {
            err << "error: a subcommand is required\n" << app.help();
            return 2;
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return verdict;
}

} // namespace schubert::cli
