#include "cli.hh"

#include <mdstab/delta.hh>
#include <mdstab/errors.hh>
#include <mdstab/gallery.hh>
#include <mdstab/graph_io.hh>
#include <mdstab/homomorphism.hh>
#include <mdstab/verifier.hh>
#include <mdstab/witness.hh>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <ostream>

namespace mdstab::cli
{
    namespace
    {
        struct Context
        {
            std::ostream & out;
            std::ostream & err;
            std::optional<std::string> format;

            auto load(const std::string & path) const -> Graph
            {
                auto f = format ? parse_graph_format(*format) : format_for_path(path);
                return read_graph_file(path, f);
            }
        };

        void print_mapping(std::ostream & out, const std::vector<int> & mapping)
        {
            for (std::size_t i = 0; i < mapping.size(); ++i)
                out << (i ? " " : "") << mapping[i];
            out << "\n";
        }

        auto family_label(TargetFamily f) -> const char *
        {
            switch (f) {
            case TargetFamily::odd_cycle: return "C";
            case TargetFamily::f_join: return "F";
            case TargetFamily::cycle_join: return "K+C";
            }
            return "?";
        }

        void print_certificate_summary(std::ostream & out, const DeltaResult & result)
        {
            out << "certificate: " << result.certificate.size() << " witnessed homomorphism"
                << (result.certificate.size() == 1 ? "" : "s");
            if (! result.certificate.empty()) {
                out << " (";
                for (std::size_t i = 0; i < result.certificate.size(); ++i)
                    out << (i ? ", " : "") << family_label(result.certificate[i].family)
                        << result.certificate[i].index;
                out << ")";
            }
            out << ", " << result.nodes << " search nodes\n";
        }

        auto report_exit(const VerificationReport & report) -> int
        {
            return report.passed() ? exit_ok : exit_violation;
        }

        auto run_suite(const std::string & suite, const CorpusSpec & corpus, std::optional<int> g_max, int g)
            -> VerificationReport
        {
            auto colon = suite.find(':');
            auto name = suite.substr(0, colon);
            auto argument = [&]() -> int {
                if (colon == std::string::npos)
                    throw InvalidParameter("suite '" + name + "' needs an argument, e.g. " + name + ":3");
                try {
                    std::size_t used = 0;
                    int value = std::stoi(suite.substr(colon + 1), &used);
                    if (used != suite.size() - colon - 1)
                        throw std::invalid_argument("trailing characters");
                    return value;
                }
                catch (const std::logic_error &) {
                    throw InvalidParameter("bad suite argument in '" + suite + "'");
                }
            };
            auto no_argument = [&] {
                if (colon != std::string::npos)
                    throw InvalidParameter("suite '" + name + "' takes no argument");
            };

            if (name == "odd-girth") {
                no_argument();
                return check_hom_odd_girth(corpus, g_max.value_or(3));
            }
            if (name == "haggkvist") {
                no_argument();
                return check_haggkvist(corpus, g);
            }
            if (name == "properties")
                return check_properties(argument(), g_max.value_or(11));
            if (name == "local-bip")
                return check_locally_bipartite_claims(argument(), corpus);
            throw InvalidParameter("unknown suite '" + suite + "'");
        }
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Minimum-degree stability thresholds for graphs", "mdstab"};
        app.require_subcommand(1);
        Context ctx{out, err, std::nullopt};
        std::function<int()> action;

        auto add_format = [&](CLI::App * sub) {
            sub->add_option("--format", ctx.format, "Graph format: g6, edges or json (default: by extension)");
        };

        // gallery
        std::string gallery_id;
        std::string gallery_format = "g6";
        auto * gallery = app.add_subcommand("gallery", "Print a named gallery graph");
        gallery->add_option("id", gallery_id, "Gallery name, e.g. K4, W5, C7bar, H2plus")->required();
        gallery->add_option("--format", gallery_format, "Output format: g6, edges or json");
        gallery->callback([&] {
            action = [&] {
                auto id = parse_gallery_id(gallery_id);
                if (! id)
                    throw InvalidParameter("unknown gallery graph '" + gallery_id + "'");
                auto text = encode(gallery_graph(*id), parse_graph_format(gallery_format));
                out << text;
                if (text.empty() || text.back() != '\n')
                    out << "\n";
                return int(exit_ok);
            };
        });

        // hom
        std::string pattern_path, target_path;
        auto * hom = app.add_subcommand("hom", "Find a homomorphism or print NONE");
        hom->add_option("pattern", pattern_path)->required();
        hom->add_option("target", target_path)->required();
        add_format(hom);
        hom->callback([&] {
            action = [&] {
                auto result = has_homomorphism(ctx.load(pattern_path), ctx.load(target_path));
                if (result)
                    print_mapping(out, result->mapping);
                else
                    out << "NONE\n";
                return int(exit_ok);
            };
        });

        // chromatic / oddgirth
        std::string graph_path;
        auto * chromatic = app.add_subcommand("chromatic", "Print the chromatic number");
        chromatic->add_option("file", graph_path)->required();
        add_format(chromatic);
        chromatic->callback([&] {
            action = [&] {
                out << chromatic_number(ctx.load(graph_path)) << "\n";
                return int(exit_ok);
            };
        });

        auto * oddgirth = app.add_subcommand("oddgirth", "Print the odd girth, or 'none' when bipartite");
        oddgirth->add_option("file", graph_path)->required();
        add_format(oddgirth);
        oddgirth->callback([&] {
            action = [&] {
                auto g = odd_girth(ctx.load(graph_path));
                if (g)
                    out << *g << "\n";
                else
                    out << "none\n";
                return int(exit_ok);
            };
        });

        // delta
        bool delta_json = false;
        auto * delta = app.add_subcommand("delta", "Classify the stability threshold of a graph");
        delta->add_option("file", graph_path)->required();
        delta->add_flag("--json", delta_json, "Print the full result as JSON");
        add_format(delta);
        delta->callback([&] {
            action = [&] {
                auto result = classify(ctx.load(graph_path));
                if (delta_json)
                    out << to_json(result).dump(2) << "\n";
                else {
                    out << describe(result) << "\n";
                    print_certificate_summary(out, result);
                }
                return int(exit_ok);
            };
        });

        // witness / certify
        int n = 0;
        std::string out_path;
        auto * witness = app.add_subcommand("witness", "Build the lower-bound witness on N vertices");
        witness->add_option("file", graph_path)->required();
        witness->add_option("--n", n, "Witness order")->required();
        witness->add_option("--out", out_path, "Write the witness here (format by extension)");
        add_format(witness);
        witness->callback([&] {
            action = [&] {
                auto w = build_witness(classify(ctx.load(graph_path)), n);
                if (out_path.empty())
                    out << encode(w, GraphFormat::graph6) << "\n";
                else {
                    write_graph_file(out_path, w, format_for_path(out_path));
                    out << "wrote " << w.order() << " vertices, min degree " << w.min_degree() << " to " << out_path
                        << "\n";
                }
                return int(exit_ok);
            };
        });

        bool certify_json = false;
        auto * certify_cmd = app.add_subcommand("certify", "Build and check the lower-bound witness");
        certify_cmd->add_option("file", graph_path)->required();
        certify_cmd->add_option("--n", n, "Witness order")->required();
        certify_cmd->add_flag("--json", certify_json, "Print the report as JSON");
        add_format(certify_cmd);
        certify_cmd->callback([&] {
            action = [&] {
                auto h = ctx.load(graph_path);
                auto report = certify(h, classify(h), n);
                if (certify_json)
                    out << to_json(report).dump(2) << "\n";
                else
                    for (const auto & c : report.checks)
                        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
                return report.passed() ? int(exit_ok) : int(exit_violation);
            };
        });

        // verify
        std::string suite;
        std::string corpus_text = "exhaustive:6";
        std::optional<int> g_max;
        int g = 2;
        bool verify_json = false;
        auto * verify = app.add_subcommand("verify", "Run a verification suite over a corpus");
        verify->add_option("suite", suite, "odd-girth, haggkvist, properties:R or local-bip:A")->required();
        verify->add_option("--corpus", corpus_text, "exhaustive:K or random:COUNT,ORDER,P,SEED");
        verify->add_option("--g-max", g_max, "Largest index (default 3 for odd-girth, 11 for properties)");
        verify->add_option("--g", g, "Cycle index for haggkvist");
        verify->add_flag("--json", verify_json, "Print the report as JSON");
        verify->callback([&] {
            action = [&] {
                auto corpus = parse_corpus_spec(corpus_text);
                auto report = run_suite(suite, corpus, g_max, g);
                if (verify_json)
                    out << to_json(report).dump(2) << "\n";
                else {
                    out << suite;
                    if (! suite.starts_with("properties"))
                        out << " on " << describe(corpus);
                    out << ": checked " << report.checked << ", "
                        << report.violations.size() << " violation" << (report.violations.size() == 1 ? "" : "s")
                        << "\n";
                    for (const auto & v : report.violations)
                        out << "  #" << v.index << " " << v.graph6 << ": " << v.detail << "\n";
                }
                return report_exit(report);
            };
        });

        // oracle edits
        int k = 0;
        auto * oracle = app.add_subcommand("oracle", "Brute-force oracles");
        oracle->require_subcommand(1);
        auto * edits = oracle->add_subcommand("edits", "Least deletions making a graph k-partite");
        edits->add_option("file", graph_path)->required();
        edits->add_option("--k", k, "Number of parts")->required();
        add_format(edits);
        edits->callback([&] {
            action = [&] {
                out << brute_min_edits_to_k_partite(ctx.load(graph_path), k) << "\n";
                return int(exit_ok);
            };
        });

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            if (code == 0)
                return exit_ok;
            err << app.help();
            return exit_usage;
        }

        try {
            return action();
        }
        catch (const ResourceError & e) {
            err << "error: " << e.what() << "\n";
            return exit_resource;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::ios_base::failure & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
    }
}
