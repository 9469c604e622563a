#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "aom/aom.hpp"

using namespace aom;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(AOM_DATA_DIR) + "/" + name; }

VerificationReport verify_file(const std::string& name, VerifyOptions opts = {}) {
    return run_verification(load_instance(data(name)), opts);
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("aom_test_verify_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Runs the tool with stdout and stderr sent to files; returns the exit status.
int tool(const std::string& args, const std::string& tag = "run") {
    const auto out = scratch() / (tag + ".out");
    const auto err = scratch() / (tag + ".err");
    const std::string cmd = std::string(AOMTOOL_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

CovectorSet triangle_set() { return realize(load_instance(data("triangle.arr")).arrangement.value()); }

}  // namespace

TEST_CASE("pipeline verdicts on the data files", "[verify]") {
    for (const char* f : {"line.arr", "triangle.arr", "four_generic.arr"}) {
        INFO(f);
        const auto rep = verify_file(f);
        CHECK(rep.verdict == Verdict::BallCertified);
        CHECK(rep.exit_code(false) == exit_code::kSuccess);
        CHECK(rep.axioms.all_ok());
        CHECK(rep.uniformity->uniform);
        CHECK(rep.replay->ok);
        CHECK(rep.links->manifold);
        CHECK(rep.link_identity_failures.empty());
        CHECK(rep.link_identity_checked == rep.bounded->covectors.size());
        CHECK(rep.oracle.status == "checked");
        CHECK(rep.oracle.agrees);
        CHECK(rep.local_status == "checked");
        CHECK(rep.local_failures() == 0);
        CHECK(rep.lawrence.status == "checked");
        CHECK(rep.lawrence.failures == 0);
        CHECK(rep.lawrence.sphere_failures == 0);
    }
}

TEST_CASE("two triangles meeting at a point are refuted", "[verify]") {
    const auto rep = verify_file("four_lines.arr");
    CHECK(rep.verdict == Verdict::Refuted);
    CHECK(rep.exit_code(true) == exit_code::kFailed);
    CHECK_FALSE(rep.uniformity->uniform);
    CHECK(rep.bounded->f_vector == std::vector<std::size_t>{5, 6, 2});
    CHECK(rep.bounded->euler_characteristic() == 1);
    CHECK(rep.homology.is_point_like());
    CHECK(rep.collapse->certificate.has_value());
    CHECK(rep.links->refuted_vertices() == std::vector<std::string>{"00-++"});
    CHECK(rep.reason.find("00-++") != std::string::npos);
    CHECK(rep.local_status == "not applicable: non-uniform");
    CHECK(rep.lawrence.status == "not applicable: non-uniform");
}

TEST_CASE("triangle local checks", "[verify]") {
    const auto rep = verify_file("triangle.arr");
    CHECK(rep.local.size() == 7);
    for (const auto& c : rep.local) {
        INFO(c.x.str());
        CHECK(c.ok());
        CHECK(c.error.empty());
        CHECK(c.c_x.size() == c.d_x.size());
        if (c.x.str() == "++-+") CHECK(c.upper_case == UpperCase::Empty);
        if (c.x.str() == "00-+") {
            CHECK(c.c_x.size() == 3);
            CHECK(c.induced_required);
            CHECK(c.induced->check.holds);
        }
    }
    CHECK(rep.positive_count == 19);
}

TEST_CASE("covector-file instances", "[verify]") {
    const auto text = format_covector_file(triangle_set(), std::string("g"));
    const auto inst = load_instance_text(text, "tri.cov");
    CHECK_FALSE(inst.arrangement.has_value());
    const auto rep = run_verification(inst);
    CHECK(rep.kind == "covectors");
    CHECK(rep.verdict == Verdict::BallCertified);
    CHECK(rep.oracle.status == "not run");

    // no g line: the caller must supply one
    const auto bare = load_instance_text(format_covector_file(triangle_set()), "bare.cov");
    CHECK_FALSE(bare.g_label.has_value());
    CHECK_THROWS_AS(run_verification(bare), PreconditionError);
    CHECK(run_verification(load_instance_text(format_covector_file(triangle_set()), "bare.cov", "g")).verdict ==
          Verdict::BallCertified);
    CHECK_THROWS_AS(load_instance_text(text, "tri.cov", "zz"), DomainError);
    CHECK_THROWS_AS(load_instance_text("dim 1\na 1 0\n", "x.arr", "a"), PreconditionError);
}

TEST_CASE("inputs outside the scope of the theorem", "[verify]") {
    // axioms fail
    auto rep = run_verification(load_instance_text("a g\ng g\n++\n--\n", "bad.cov"));
    CHECK(rep.verdict == Verdict::NotApplicable);
    CHECK(rep.reason.find("L0") != std::string::npos);
    CHECK(rep.exit_code(true) == exit_code::kFailed);
    // g is a loop
    rep = run_verification(load_instance_text("a g\ng g\n00\n+0\n-0\n", "loop.cov"));
    CHECK(rep.verdict == Verdict::NotApplicable);
    CHECK(rep.reason.find("loop") != std::string::npos);
    // a single element
    rep = run_verification(load_instance_text("g\ng g\n0\n+\n-\n", "one.cov"));
    CHECK(rep.verdict == Verdict::NotApplicable);
}

TEST_CASE("a single line in the plane", "[verify]") {
    // one covector in L++, which is not metrically bounded
    const auto rep = run_verification(load_instance_text("dim 2\na 1 0 0\n", "one.arr"));
    CHECK(rep.bounded->f_vector == std::vector<std::size_t>{1});
    CHECK(rep.verdict == Verdict::BallCertified);
    CHECK(rep.oracle.status == "not applicable: arrangement is not essential");
}

TEST_CASE("collapse budget exhaustion", "[verify]") {
    VerifyOptions opts;
    opts.certify.collapse_budget = 1;
    const auto rep = run_verification(load_instance_text(format_arrangement(generate_arrangement(1, 5, 2)), "g.arr"), opts);
    CHECK(rep.verdict == Verdict::EvidenceOnly);
    CHECK(rep.budget_exhausted);
    CHECK(rep.exit_code(false) == exit_code::kResource);
    CHECK(rep.exit_code(true) == exit_code::kSuccess);
}

TEST_CASE("JSON report", "[verify][json]") {
    const auto rep = verify_file("triangle.arr");
    const auto a = rep.to_json(false).dump();
    CHECK(a == verify_file("triangle.arr").to_json(false).dump());
    const auto j = rep.to_json(false);
    CHECK_FALSE(j.contains("timestamp"));
    CHECK(rep.to_json(true).contains("timestamp"));
    CHECK(j["schema"] == 1);
    CHECK(j["verdict"] == "ball-certified");
    CHECK(j["instance"]["n"] == 3);
    CHECK(j["instance"]["d"] == 2);
    CHECK(j["instance"]["g"] == "g");
    CHECK(j["bounded_complex"]["f_vector"] == nlohmann::json::array({3, 3, 1}));
    CHECK(j["collapse"]["replay"]["ok"] == true);
    CHECK(j["local"]["failures"] == 0);
    CHECK(j["local"]["cells"].size() == 7);
    for (const char* key : {"axioms", "uniformity", "positive_part", "boundary_criterion", "order_complex", "links",
                            "link_join_identity", "tope_poset_shellings", "oracle", "reason", "budget_exhausted"})
        CHECK(j.contains(key));
    // different seeds change only the sampled shellings
    VerifyOptions other;
    other.seed = 99;
    auto k = run_verification(load_instance(data("triangle.arr")), other).to_json(false);
    k.erase("tope_poset_shellings");
    auto j2 = j;
    j2.erase("tope_poset_shellings");
    CHECK(k == j2);
}

TEST_CASE("covector file format", "[io]") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_covector_file(in, "t.cov");
    };
    auto line_of = [&](const std::string& text) -> std::size_t {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    const auto f = parse("# header\na b g\ng g\n\n000\n+-+ # comment\n-+-\n");
    CHECK(f.set.size() == 3);
    CHECK(f.g_label == "g");
    CHECK(line_of("a b\n00\n+-\n00\n") == 4);
    CHECK(line_of("a b\ng z\n00\n") == 2);
    CHECK(line_of("a b\n00\n+\n") == 3);
    CHECK(line_of("a b\n00\n+x\n") == 3);
    CHECK(line_of("a b\n00\n+- --\n") == 3);
    CHECK(line_of("a a\n00\n") == 1);
    CHECK(line_of("# nothing\n") == 1);
    // a g line after sign strings is not a header
    CHECK(line_of("a g\n00\ng g\n") == 3);

    const auto set = triangle_set();
    std::istringstream again(format_covector_file(set, std::string("g")));
    const auto back = parse_covector_file(again);
    CHECK(back.set.covectors() == set.covectors());
    CHECK(back.set.ground().labels() == set.ground().labels());
    CHECK(back.g_label == "g");
}

TEST_CASE("svg output", "[svg]") {
    const auto arr = load_instance(data("four_generic.arr")).arrangement.value();
    const auto svg = render_svg(arr);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t polygons = 0;
    for (auto p = svg.find("<polygon"); p != std::string::npos; p = svg.find("<polygon", p + 1)) ++polygons;
    CHECK(polygons == 3);
    std::size_t circles = 0;
    for (auto p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
    CHECK(circles == 6);
    CHECK(render_svg(arr) == svg);

    CHECK_THROWS_AS(render_svg(load_instance(data("line.arr")).arrangement.value()), PreconditionError);
    CHECK_THROWS_AS(parse_bounds("0,0,1"), DomainError);
    CHECK_THROWS_AS(parse_bounds("0,0,1,x"), DomainError);
    CHECK_THROWS_AS(parse_bounds("1,0,0,1"), DomainError);
    const auto b = parse_bounds("-1,-2,3,4.5");
    CHECK(b.xmax == 3);
    CHECK(b.ymax == 4.5);
}

TEST_CASE("command-line exit codes", "[cli]") {
    const auto dir = scratch();
    CHECK(tool("verify " + data("triangle.arr") + " --no-timestamp --json " + (dir / "t1.json").string()) == 0);
    CHECK(tool("verify " + data("triangle.arr") + " --no-timestamp --json " + (dir / "t2.json").string()) == 0);
    CHECK(slurp(dir / "t1.json") == slurp(dir / "t2.json"));
    CHECK(nlohmann::json::parse(slurp(dir / "t1.json"))["verdict"] == "ball-certified");

    CHECK(tool("verify " + data("four_lines.arr")) == 1);
    CHECK(tool("verify " + data("four_lines.arr") + " --allow-evidence") == 1);
    CHECK(tool("verify " + (dir / "missing.arr").string()) == 2);
    CHECK(tool("verify " + data("triangle.arr") + " --budget abc") == 2);
    CHECK(tool("verify") == 2);
    CHECK(tool("frobnicate") == 2);
    CHECK(tool("verify " + data("triangle.arr") + " --g a") == 2);

    // generate, realize and verify a covector file
    CHECK(tool("generate --seed 4 --n 5 --d 2 -o " + (dir / "g.arr").string()) == 0);
    CHECK(tool("generate --seed 4 --n 5 --d 2", "gen") == 0);
    CHECK(slurp(dir / "gen.out") == slurp(dir / "g.arr"));
    CHECK(slurp(dir / "g.arr").rfind("# seed 4\n", 0) == 0);
    CHECK(tool("generate --seed 4 --n 2 --d 2") == 2);
    CHECK(tool("realize " + (dir / "g.arr").string() + " -o " + (dir / "g.cov").string()) == 0);
    CHECK(tool("verify " + (dir / "g.cov").string()) == 0);
    CHECK(tool("verify " + (dir / "g.arr").string() + " --budget 1") == 3);
    CHECK(tool("verify " + (dir / "g.arr").string() + " --budget 1 --allow-evidence") == 0);

    // axioms on a damaged covector file
    auto text = slurp(dir / "g.cov");
    text.erase(text.find("\n0") + 1, text.find('\n', text.find("\n0") + 1) - text.find("\n0"));
    write(dir / "bad.cov", text);
    CHECK(tool("axioms " + (dir / "bad.cov").string() + " --json " + (dir / "ax.json").string()) == 1);
    CHECK(nlohmann::json::parse(slurp(dir / "ax.json"))["ok"] == false);
    CHECK(tool("axioms " + (dir / "g.cov").string()) == 0);

    // covector file without a g line
    write(dir / "bare.cov", format_covector_file(triangle_set()));
    CHECK(tool("bounded " + (dir / "bare.cov").string()) == 2);
    CHECK(tool("bounded " + (dir / "bare.cov").string() + " --g g --json " + (dir / "b.json").string()) == 0);
    CHECK(nlohmann::json::parse(slurp(dir / "b.json"))["f_vector"] == nlohmann::json::array({3, 3, 1}));

    CHECK(tool("svg " + data("triangle.arr") + " -o " + (dir / "t.svg").string()) == 0);
    CHECK(slurp(dir / "t.svg").find("<svg") == 0);
    CHECK(tool("svg " + data("line.arr")) == 2);
    CHECK(tool("svg " + data("triangle.arr") + " --bounds 1,2") == 2);
}
