#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "aom/collapse.hpp"
#include "aom/homology.hpp"
#include "aom/manifold.hpp"
#include "aom/shelling.hpp"
#include "aom/simplicial.hpp"
#include "oracles.hpp"

using namespace aom;

namespace {

using Facets = std::vector<std::vector<std::string>>;

SimplicialComplex cx(const Facets& f) { return SimplicialComplex::from_labeled_facets(f); }

std::vector<std::string> verts(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
    return v;
}

SimplicialComplex cycle(std::size_t n) {
    Facets f;
    for (std::size_t i = 0; i < n; ++i) f.push_back({"c" + std::to_string(i), "c" + std::to_string((i + 1) % n)});
    return cx(f);
}

// six-vertex real projective plane
SimplicialComplex rp2() {
    return cx({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "6", "2"},
               {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"}, {"5", "6", "3"}, {"6", "2", "4"}});
}

SimplicialComplex wedge() {
    std::ifstream in(std::string(AOM_DATA_DIR) + "/wedge.cx");
    REQUIRE(in);
    return parse_complex(in, "wedge.cx");
}

Poset chain(std::size_t n) {
    return Poset(verts(n), [](std::size_t i, std::size_t j) { return i <= j; });
}

}  // namespace

TEST_CASE("posets: ranks, covers, extremes", "[topology][poset]") {
    // boolean lattice on {a,b} without its bottom
    Poset p({"a", "b", "ab"}, [](std::size_t i, std::size_t j) { return i == j || j == 2; });
    CHECK(p.rank(0) == 1);
    CHECK(p.rank(2) == 2);
    CHECK(p.covers(0, 2));
    CHECK_FALSE(p.covers(0, 1));
    CHECK(p.minimal() == std::vector<std::size_t>{0, 1});
    CHECK(p.maximal() == std::vector<std::size_t>{2});
    CHECK(p.index_of("ab") == 2);
    CHECK_THROWS_AS(p.index_of("zz"), DomainError);
    CHECK(p.induced({0, 2}).size() == 2);
    CHECK(is_simplicial(p));
    CHECK_THROWS_AS(Poset({"x", "x"}, [](std::size_t, std::size_t) { return false; }), DomainError);
    CHECK(chain(4).rank(3) == 4);
}

TEST_CASE("order complexes", "[topology]") {
    CHECK(order_complex(chain(3)) == SimplicialComplex::simplex(verts(3)));
    auto anti = Poset({"x", "y"}, [](std::size_t i, std::size_t j) { return i == j; });
    CHECK(order_complex(anti).f_vector() == std::vector<std::size_t>{2});
    CHECK(order_complex(Poset()).is_empty_sphere());
}

TEST_CASE("face posets and barycentric subdivision", "[topology]") {
    const auto hex = cycle(6);
    const auto fp = face_poset(hex);
    CHECK(fp.size() == 12);
    CHECK(is_simplicial(fp));
    const auto sd = barycentric_subdivision(hex);
    CHECK(sd.f_vector() == std::vector<std::size_t>{12, 12});
    CHECK(homology(sd).is_sphere_like(1));
    const auto tri = barycentric_subdivision(SimplicialComplex::simplex({"a", "b", "c"}));
    CHECK(tri.f_vector() == std::vector<std::size_t>{7, 12, 6});
}

TEST_CASE("links and joins", "[topology]") {
    const auto tet = SimplicialComplex::simplex_boundary(verts(4));
    CHECK(link(tet, "v0") == SimplicialComplex::simplex_boundary({"v1", "v2", "v3"}));
    CHECK(link(SimplicialComplex::simplex({"a"}), "a").is_empty_sphere());
    CHECK_THROWS(link(tet, "zz"));

    const auto square = join(SimplicialComplex::simplex_boundary({"a", "b"}), SimplicialComplex::simplex_boundary({"c", "d"}));
    CHECK(square.f_vector() == std::vector<std::size_t>{4, 4});
    CHECK(homology(square).is_sphere_like(1));
    CHECK(join(tet, SimplicialComplex::empty_sphere()) == tet);
    CHECK(join(tet, SimplicialComplex()).is_void());

    // lk_{A*B}(v) = lk_A(v) * B for v in A
    const auto a = cycle(5);
    const auto b = SimplicialComplex::simplex_boundary({"x", "y"});
    const auto ab = join(a, b);
    for (const auto& v : a.labels()) CHECK(link(ab, v) == join(link(a, v), b));
    // the suspension of a circle is a 2-sphere
    CHECK(homology(ab).is_sphere_like(2));
}

TEST_CASE("join can rename clashing labels", "[topology]") {
    const auto a = SimplicialComplex::simplex({"p"});
    const auto j = join(a, a, true);
    CHECK(j.vertex_count() == 2);
    CHECK(j.dimension() == 1);
}

TEST_CASE("homology agrees with the rational oracle", "[topology]") {
    for (std::size_t n = 1; n <= 6; ++n) {
        INFO("n=" << n);
        const auto s = SimplicialComplex::simplex(verts(n));
        CHECK(homology(s).betti == oracle::betti(s));
        CHECK(homology(s).is_point_like());
        if (n >= 2) {
            const auto bd = SimplicialComplex::simplex_boundary(verts(n));
            CHECK(homology(bd).betti == oracle::betti(bd));
            CHECK(homology(bd).is_sphere_like(static_cast<int>(n) - 2));
            CHECK(bd.euler_characteristic() == (n % 2 == 0 ? 2 : 0));
        }
    }
    for (const auto& k : {cycle(7), wedge(), rp2(), join(cycle(4), cycle(3), true)}) CHECK(homology(k).betti == oracle::betti(k));
}

TEST_CASE("torsion is detected", "[topology]") {
    const auto h = homology(rp2());
    CHECK(h.betti == std::vector<std::size_t>{1, 0, 0});
    REQUIRE(h.torsion.size() == 3);
    CHECK(h.torsion[1] == std::vector<Integer>{2});
    CHECK_FALSE(h.is_point_like());
    CHECK(h.euler_characteristic() == 1);
    CHECK(rp2().euler_characteristic() == 1);
}

TEST_CASE("collapses and their replay", "[topology][collapse]") {
    const auto s = SimplicialComplex::simplex(verts(4));
    const auto r = find_collapse(s);
    REQUIRE(r.certificate);
    CHECK(r.certificate->steps.size() == 7);  // (15 faces - 1) / 2
    CHECK(replay_collapse(s, *r.certificate).ok);

    const auto w = wedge();
    const auto rw = find_collapse(w);
    REQUIRE(rw.certificate);
    CHECK(replay_collapse(w, *rw.certificate).ok);

    CHECK_FALSE(find_collapse(cycle(4)).certificate);
    CHECK_FALSE(find_collapse(rp2()).certificate);

    // a tampered certificate fails at the tampered step
    auto bad = *r.certificate;
    std::swap(bad.steps[0], bad.steps[3]);
    const auto rep = replay_collapse(s, bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failed_step == 0);
    CHECK_FALSE(rep.message.empty());

    auto truncated = *r.certificate;
    truncated.steps.pop_back();
    CHECK_FALSE(replay_collapse(s, truncated).ok);
}

TEST_CASE("collapse budget", "[topology][collapse]") {
    const auto s = SimplicialComplex::simplex(verts(5));
    CHECK_FALSE(find_collapse(s, 3).certificate);
    CHECK(find_collapse(s).certificate);
}

TEST_CASE("shellings", "[topology][shelling]") {
    const auto tet = SimplicialComplex::simplex_boundary(verts(4));
    const auto order = find_shelling(tet);
    REQUIRE(order);
    CHECK(verify_shelling(tet, *order).holds);

    // two triangles sharing only a vertex
    const auto w = wedge();
    CHECK_FALSE(find_shelling(w));
    const auto check = verify_shelling(w, {0, 1});
    CHECK_FALSE(check.holds);
    CHECK(check.failures == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    CHECK_THROWS_AS(verify_shelling(w, {0}), PreconditionError);

    // a path of three edges: only orders that keep a connected prefix work
    const auto path = cx({{"a", "b"}, {"b", "c"}, {"c", "d"}});
    CHECK(verify_shelling(path, {0, 1, 2}).holds);
    CHECK(verify_shelling(path, {1, 0, 2}).holds);
    CHECK_FALSE(verify_shelling(path, {0, 2, 1}).holds);
}

TEST_CASE("shelling check on face posets", "[topology][shelling]") {
    const auto path = cx({{"a", "b"}, {"b", "c"}, {"c", "d"}});
    const auto fp = face_poset(path);
    // edges appear in face order: ab, bc, cd
    const auto good = fp.maximal();
    REQUIRE(good.size() == 3);
    CHECK(verify_shelling(fp, good).holds);
    CHECK(verify_shelling(fp, good).exact);
    const std::vector<std::size_t> bad{good[0], good[2], good[1]};
    CHECK_FALSE(verify_shelling(fp, bad).holds);
}

TEST_CASE("shape certification", "[topology][manifold]") {
    const auto sphere = certify_shape(SimplicialComplex::simplex_boundary(verts(5)), 3);
    CHECK(sphere.shape == Shape::Sphere);
    CHECK(sphere.strength == Strength::Certified);
    CHECK(sphere.shelling.has_value());

    const auto ball = certify_shape(SimplicialComplex::simplex(verts(4)), 3);
    CHECK(ball.shape == Shape::Ball);
    CHECK(ball.strength == Strength::Certified);
    REQUIRE(ball.collapse.has_value());
    CHECK(replay_collapse(SimplicialComplex::simplex(verts(4)), *ball.collapse).ok);

    CHECK(certify_shape(SimplicialComplex::empty_sphere(), -1).shape == Shape::Sphere);
    CHECK(certify_shape(SimplicialComplex::simplex({"a"}), -1).shape == Shape::Other);
    CHECK(certify_shape(SimplicialComplex::simplex({"a"}), 0).shape == Shape::Ball);
    CHECK(certify_shape(SimplicialComplex::simplex_boundary({"a", "b"}), 0).shape == Shape::Sphere);
    CHECK(certify_shape(cx({{"a"}, {"b"}, {"c"}}), 0).shape == Shape::Other);
    CHECK(certify_shape(rp2(), 2).shape == Shape::Other);
    CHECK(certify_shape(rp2(), 2).strength == Strength::Refuted);
    CHECK(certify_shape(cycle(5), 2).shape == Shape::Other);
    // three triangles on one edge
    CHECK_FALSE(certify_shape(cx({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}}), 2).pseudomanifold);
    CHECK(std::string(to_string(Shape::Ball)) == "ball-like");
}

TEST_CASE("vertex links of the wedge", "[topology][manifold]") {
    const auto lc = classify_links(wedge());
    CHECK_FALSE(lc.manifold);
    CHECK_FALSE(lc.all_certified);
    CHECK(lc.refuted_vertices() == std::vector<std::string>{"o"});
    for (const auto& v : lc.vertices)
        if (v.vertex == "o") CHECK(v.evidence.homology.betti == std::vector<std::size_t>{2, 0});
    CHECK(lc.vertices.size() == 5);
    CHECK_THROWS_AS(classify_links(cx({{"a", "b", "c"}, {"c", "d"}})), PreconditionError);
}

TEST_CASE("vertex links of a disc", "[topology][manifold]") {
    const auto lc = classify_links(SimplicialComplex::simplex(verts(3)));
    CHECK(lc.manifold);
    CHECK(lc.all_certified);
    for (const auto& v : lc.vertices) CHECK(v.evidence.shape == Shape::Ball);
}

TEST_CASE("ridges and boundaries", "[topology]") {
    const auto s = SimplicialComplex::simplex(verts(4));
    CHECK(boundary_complex(s) == SimplicialComplex::simplex_boundary(verts(4)));
    CHECK(boundary_complex(SimplicialComplex::simplex_boundary(verts(4))).is_void());
    const auto c = ridge_census(cx({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}}));
    CHECK(c.singular == 1);
    CHECK(c.boundary == 6);
    CHECK(c.interior == 0);
}

TEST_CASE("complex text format", "[topology]") {
    const auto w = wedge();
    CHECK(w.f_vector() == std::vector<std::size_t>{5, 6, 2});
    CHECK(w.euler_characteristic() == 1);
    std::istringstream again(format_complex(w));
    CHECK(parse_complex(again) == w);

    std::istringstream bad("a b\n# c\nc c\n");
    try {
        parse_complex(bad, "bad.cx");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    // facets contained in others are dropped
    CHECK(cx({{"a", "b", "c"}, {"a", "b"}}).facets().size() == 1);
}
