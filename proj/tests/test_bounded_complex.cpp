#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "aom/bounded_complex.hpp"
#include "aom/homology.hpp"
#include "aom/realization.hpp"
#include "oracles.hpp"

using namespace aom;

namespace {

Arrangement load(const std::string& name) {
    std::ifstream in(std::string(AOM_DATA_DIR) + "/" + name);
    REQUIRE(in);
    return parse_arrangement(in, name);
}

AffineOM affine(const Arrangement& arr) { return AffineOM(realize(arr), Arrangement::kGLabel); }

AffineOM affine(const std::string& text) {
    std::istringstream in(text);
    return affine(parse_arrangement(in));
}

CovectorSet make(std::vector<std::string> labels, std::vector<const char*> strings) {
    std::vector<SignVector> v;
    for (auto s : strings) v.push_back(SignVector::parse(s));
    return CovectorSet(GroundSet(std::move(labels)), std::move(v));
}

}  // namespace

TEST_CASE("affine oriented matroid preconditions", "[bounded]") {
    const auto set = realize(load("line.arr"));
    CHECK(AffineOM(set, "g").g() == 2);
    CHECK(AffineOM(set, std::size_t{0}).g() == 0);
    CHECK_THROWS_AS(AffineOM(set, "z"), DomainError);
    CHECK_THROWS_AS(AffineOM(set, std::size_t{3}), DomainError);
    CHECK_THROWS_AS(AffineOM(make({"g"}, {"0", "+", "-"}), "g"), PreconditionError);
    // g is a loop
    CHECK_THROWS_AS(AffineOM(make({"a", "g"}, {"00", "+0", "-0"}), "g"), PreconditionError);
    // axioms fail: no zero vector
    CHECK_THROWS_AS(AffineOM(make({"a", "g"}, {"++", "--"}), "g"), PreconditionError);
    AxiomReport bad;
    bad.l2_ok = false;
    CHECK_THROWS_AS(AffineOM(set, 2, bad), PreconditionError);
}

TEST_CASE("positive parts", "[bounded]") {
    // affine faces: 2 points and 3 intervals; 3 + 9 + 7; 5 + 14 + 10
    CHECK(positive_part(affine(load("line.arr"))).size() == 5);
    CHECK(positive_part(affine(load("triangle.arr"))).size() == 19);
    CHECK(positive_part(affine(load("four_lines.arr"))).size() == 29);
    for (const auto& x : positive_part(affine(load("triangle.arr")))) CHECK(x[3] == Sign::Plus);
}

TEST_CASE("bounded complexes of the data files", "[bounded]") {
    struct Case {
        const char* file;
        std::vector<std::size_t> f;
    };
    for (const auto& c : {Case{"line.arr", {2, 1}}, Case{"triangle.arr", {3, 3, 1}}, Case{"four_lines.arr", {5, 6, 2}},
                          Case{"four_generic.arr", {6, 8, 3}}}) {
        INFO(c.file);
        const auto bc = bounded_complex(affine(load(c.file)));
        CHECK(bc.f_vector == c.f);
        CHECK(bc.dim == static_cast<int>(c.f.size()) - 1);
        CHECK(bc.pure);
        CHECK(bc.common_support);
        CHECK(bc.support.size() == bc.covectors.front().size());
        CHECK(bc.euler_characteristic() == 1);
    }
}

TEST_CASE("bounded cells of the triangle", "[bounded]") {
    const auto bc = bounded_complex(affine(load("triangle.arr")));
    CHECK(bc.maximal.size() == 1);
    CHECK(bc.maximal.front().str() == "++-+");
    for (const char* s : {"00-+", "+00+", "0+0+", "+0-+", "0+-+", "++0+", "++-+"}) CHECK(bc.contains(SignVector::parse(s)));
    CHECK_FALSE(bc.contains(SignVector::parse("-0-+")));
    CHECK_FALSE(bc.contains(SignVector::parse("+++0")));
}

TEST_CASE("bounded f-vectors match the census of simple arrangements", "[bounded]") {
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t n = d + 1; n <= d + 3; ++n) {
            INFO("d=" << d << " n=" << n);
            const auto bc = bounded_complex(affine(generate_arrangement(11, n, d)));
            CHECK(bc.f_vector == oracle::simple_bounded_f_vector(n, d));
            CHECK(bc.pure);
        }
}

TEST_CASE("order complex of the bounded complex", "[bounded]") {
    const auto bc = bounded_complex(affine(load("four_generic.arr")));
    const auto k = bc.order_complex();
    CHECK(k.vertex_count() == 17);
    CHECK(k.dimension() == 2);
    CHECK(oracle::betti(k) == std::vector<std::size_t>{1, 0, 0});
    CHECK(homology(k).is_point_like());
}

TEST_CASE("restriction to the support of the maximal cells", "[bounded]") {
    // x = 0, x = 1, y = 0: the only bounded cells lie on y = 0
    const auto m = affine("dim 2\na 1 0 0\nb 1 0 1\nc 0 1 0\n");
    const auto bc = bounded_complex(m);
    CHECK(bc.f_vector == std::vector<std::size_t>{2, 1});
    CHECK(bc.pure);
    CHECK(bc.common_support);
    CHECK(bc.support.indices() == std::vector<std::size_t>{0, 1, 3});

    const auto r = restrict_to_support(m, bc.support);
    CHECK(r.ground().labels() == std::vector<std::string>{"a", "b", "g"});
    CHECK(r.g() == 2);
    const auto rbc = bounded_complex(r);
    CHECK(rbc.f_vector == std::vector<std::size_t>{2, 1});
    CHECK(bounded_complexes_isomorphic(bc, rbc, ElementSet::of({2})));
    // same as the two-point line
    CHECK(r.om() == AffineOM(realize(load("line.arr")), "g").om());
    CHECK_THROWS_AS(restrict_to_support(m, ElementSet::of({0, 1})), PreconditionError);
}

TEST_CASE("isomorphism check rejects mismatches", "[bounded]") {
    const auto a = bounded_complex(affine(load("triangle.arr")));
    const auto b = bounded_complex(affine(load("line.arr")));
    CHECK_FALSE(bounded_complexes_isomorphic(a, b, ElementSet::of({0})));
}

TEST_CASE("boundary criterion", "[bounded]") {
    for (const char* f : {"line.arr", "triangle.arr", "four_generic.arr"}) {
        INFO(f);
        const auto m = affine(load(f));
        const auto bc = bounded_complex(m);
        const auto rep = check_boundary_criterion(m, bc);
        CHECK(rep.holds);
        CHECK(rep.counterexamples.empty());
        CHECK(rep.checked == positive_part(m).size());
    }
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto m = affine(generate_arrangement(2, d + 3, d));
        CHECK(check_boundary_criterion(m, bounded_complex(m)).holds);
    }
}
