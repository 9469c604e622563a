// aomtool: command-line front end for the aom library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aom/aom.hpp"

namespace {

using nlohmann::json;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw aom::ParseError(path, 0, "cannot write file");
    out << text;
}

void write_json(const std::string& path, const json& j) {
    if (!path.empty()) write_text(path, j.dump(2) + "\n");
}

std::optional<std::string> opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s;
}

aom::AffineOM affine_of(const aom::Instance& inst) {
    if (!inst.g_label) throw aom::PreconditionError("no distinguished element: add a 'g <label>' line or pass --g");
    return aom::AffineOM(inst.covectors, *inst.g_label);
}

int cmd_axioms(const std::string& input, const std::string& g, const std::string& json_path) {
    const auto inst = aom::load_instance(input, opt(g));
    const auto rep = aom::verify_covector_axioms(inst.covectors);
    const auto& ground = inst.covectors.ground();
    std::cout << "covectors: " << inst.covectors.size() << "\n";
    std::cout << "L0 " << (rep.l0_ok ? "ok" : "FAIL") << "  L1 " << (rep.l1_ok ? "ok" : "FAIL") << "  L2 "
              << (rep.l2_ok ? "ok" : "FAIL") << "  L3 " << (rep.l3_ok ? "ok" : "FAIL") << "\n";
    json wit = json::array();
    for (const auto& w : rep.witnesses) {
        std::cout << "  " << aom::to_string(w.clause) << ": X=" << w.x.str();
        json e = {{"clause", aom::to_string(w.clause)}, {"x", w.x.str()}};
        if (w.y) {
            std::cout << " Y=" << w.y->str();
            e["y"] = w.y->str();
        }
        if (w.element) {
            std::cout << " e=" << ground.label(*w.element);
            e["element"] = ground.label(*w.element);
        }
        std::cout << "\n";
        wit.push_back(e);
    }
    json j = {{"schema", 1},
              {"source", input},
              {"ok", rep.all_ok()},
              {"L0", rep.l0_ok},
              {"L1", rep.l1_ok},
              {"L2", rep.l2_ok},
              {"L3", rep.l3_ok},
              {"witnesses", wit}};
    if (rep.all_ok()) {
        const auto u = aom::is_uniform(inst.covectors);
        j["rank"] = u.rank;
        j["uniform"] = u.uniform;
        std::cout << "rank " << u.rank << ", " << (u.uniform ? "uniform" : "not uniform") << "\n";
    }
    write_json(json_path, j);
    return rep.all_ok() ? aom::exit_code::kSuccess : aom::exit_code::kFailed;
}

int cmd_realize(const std::string& input, const std::string& out) {
    const auto text = aom::read_file(input);
    std::istringstream in(text);
    const auto arr = aom::parse_arrangement(in, input);
    write_text(out, aom::format_covector_file(aom::realize(arr), std::string(aom::Arrangement::kGLabel)));
    return aom::exit_code::kSuccess;
}

int cmd_bounded(const std::string& input, const std::string& g, const std::string& json_path) {
    const auto inst = aom::load_instance(input, opt(g));
    const auto m = affine_of(inst);
    const auto bc = aom::bounded_complex(m);
    std::cout << "f-vector (";
    for (std::size_t i = 0; i < bc.f_vector.size(); ++i) std::cout << (i ? "," : "") << bc.f_vector[i];
    std::cout << ")  dim " << bc.dim << (bc.pure ? "  pure" : "  not pure") << "\n";
    for (std::size_t i = 0; i < bc.covectors.size(); ++i)
        std::cout << bc.covectors[i].str() << "  " << bc.ranks[i] - 1 << "\n";
    json cells = json::array();
    for (std::size_t i = 0; i < bc.covectors.size(); ++i)
        cells.push_back({{"covector", bc.covectors[i].str()}, {"dim", bc.ranks[i] - 1}});
    write_json(json_path, {{"schema", 1},
                           {"source", input},
                           {"f_vector", bc.f_vector},
                           {"dim", bc.dim},
                           {"pure", bc.pure},
                           {"common_support", bc.common_support},
                           {"euler_characteristic", bc.euler_characteristic()},
                           {"cells", cells}});
    return aom::exit_code::kSuccess;
}

int cmd_verify(const std::string& input, const std::string& g, const std::string& json_path, std::size_t budget,
               bool allow_evidence, std::uint64_t seed, bool no_timestamp) {
    const auto inst = aom::load_instance(input, opt(g));
    aom::VerifyOptions opts;
    opts.certify.collapse_budget = budget;
    opts.certify.shelling_budget = budget;
    opts.seed = seed;
    const auto rep = aom::run_verification(inst, opts);

    std::cout << "source    " << rep.source << "\n";
    std::cout << "axioms    " << (rep.axioms.all_ok() ? "ok" : "FAIL") << "\n";
    if (rep.uniformity) {
        const auto& bc = *rep.bounded;
        std::cout << "uniform   " << (rep.uniformity->uniform ? "yes" : "no") << "\n";
        std::cout << "L++       f-vector (";
        for (std::size_t i = 0; i < bc.f_vector.size(); ++i) std::cout << (i ? "," : "") << bc.f_vector[i];
        std::cout << "), dim " << bc.dim << (bc.pure ? ", pure" : ", not pure") << ", euler "
                  << bc.euler_characteristic() << "\n";
        std::cout << "collapse  "
                  << (rep.collapse->certificate ? std::to_string(rep.collapse->certificate->steps.size()) + " steps"
                                                : std::string("not found"))
                  << "\n";
        if (rep.links) {
            std::cout << "links     " << rep.links->vertices.size() << " vertices, "
                      << (rep.links->manifold ? "all sphere or ball" : "some neither") << "\n";
            for (const auto& v : rep.links->refuted_vertices()) std::cout << "  other: " << v << "\n";
        }
        std::cout << "local     " << rep.local_status;
        if (rep.local_status == "checked") {
            std::cout << ", " << rep.local_failures() << " failures";
            if (rep.induced_failures()) std::cout << " (" << rep.induced_failures() << " induced orders not shellings)";
        }
        std::cout << "\n";
        std::cout << "oracle    " << rep.oracle.status << (rep.oracle.agrees ? "" : ", DISAGREES") << "\n";
    }
    std::cout << "verdict   " << aom::to_string(rep.verdict) << " (" << rep.reason << ")\n";
    write_json(json_path, rep.to_json(!no_timestamp));
    return rep.exit_code(allow_evidence);
}

int cmd_svg(const std::string& input, const std::string& bounds, const std::string& out) {
    const auto text = aom::read_file(input);
    std::istringstream in(text);
    const auto arr = aom::parse_arrangement(in, input);
    aom::SvgOptions opts;
    if (!bounds.empty()) opts.bounds = aom::parse_bounds(bounds);
    write_text(out, aom::render_svg(arr, opts));
    return aom::exit_code::kSuccess;
}

int cmd_generate(std::uint64_t seed, std::size_t n, std::size_t d, const std::string& out) {
    write_text(out, "# seed " + std::to_string(seed) + "\n" + aom::format_arrangement(aom::generate_arrangement(seed, n, d)));
    return aom::exit_code::kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine oriented matroids and their bounded complexes"};
    app.require_subcommand(1);

    std::string input, g, json_path, out, bounds;
    std::size_t budget = 1'000'000, n = 0, d = 0;
    std::uint64_t seed = 0;
    bool allow_evidence = false, no_timestamp = false;

    auto* axioms = app.add_subcommand("axioms", "check the covector axioms");
    axioms->add_option("input", input, "arrangement or covector file")->required();
    axioms->add_option("--g", g, "distinguished element label");
    axioms->add_option("--json", json_path, "write a JSON report ('-' for stdout)");

    auto* realize = app.add_subcommand("realize", "arrangement file to covector file");
    realize->add_option("input", input, "arrangement file")->required();
    realize->add_option("-o,--output", out, "output path (default stdout)");

    auto* bounded = app.add_subcommand("bounded", "list the bounded complex");
    bounded->add_option("input", input, "arrangement or covector file")->required();
    bounded->add_option("--g", g, "distinguished element label");
    bounded->add_option("--json", json_path, "write a JSON report ('-' for stdout)");

    auto* verify = app.add_subcommand("verify", "certify that the bounded complex is a ball");
    verify->add_option("input", input, "arrangement or covector file")->required();
    verify->add_option("--g", g, "distinguished element label");
    verify->add_option("--json", json_path, "write the JSON report ('-' for stdout)");
    verify->add_option("--budget", budget, "node budget for collapse and shelling searches")->capture_default_str();
    verify->add_flag("--allow-evidence", allow_evidence, "exit 0 on evidence-only verdicts");
    verify->add_option("--seed", seed, "seed for sampled tope-poset shellings")->capture_default_str();
    verify->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from the report");

    auto* svg = app.add_subcommand("svg", "draw a planar arrangement");
    svg->add_option("input", input, "arrangement file")->required();
    svg->add_option("--bounds", bounds, "xmin,ymin,xmax,ymax");
    svg->add_option("-o,--output", out, "output path (default stdout)");

    auto* generate = app.add_subcommand("generate", "random simple arrangement");
    generate->add_option("--seed", seed, "generator seed")->capture_default_str();
    generate->add_option("--n", n, "number of hyperplanes")->required();
    generate->add_option("--d", d, "dimension")->required();
    generate->add_option("-o,--output", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return aom::exit_code::kInputError;
    }

    try {
        if (*axioms) return cmd_axioms(input, g, json_path);
        if (*realize) return cmd_realize(input, out);
        if (*bounded) return cmd_bounded(input, g, json_path);
        if (*verify) return cmd_verify(input, g, json_path, budget, allow_evidence, seed, no_timestamp);
        if (*svg) return cmd_svg(input, bounds, out);
        if (*generate) return cmd_generate(seed, n, d, out);
    } catch (const aom::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return aom::exit_code::kResource;
    } catch (const aom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return aom::exit_code::kInputError;
    }
    return aom::exit_code::kInputError;
}
