#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "aom/oriented_matroid.hpp"
#include "aom/realization.hpp"

using namespace aom;

namespace {

SignVector sv(const char* s) { return SignVector::parse(s); }

CovectorSet make(std::vector<std::string> labels, std::vector<const char*> strings) {
    std::vector<SignVector> v;
    for (auto s : strings) v.push_back(sv(s));
    return CovectorSet(GroundSet(std::move(labels)), std::move(v));
}

// Points x = 0 and x = 1 on the line, homogenized: a = x, b = x - t, g = t.
CovectorSet line_example() {
    return make({"a", "b", "g"}, {"000", "--+", "0-+", "+-+", "+0+", "+++", "++0", "++-", "0+-", "-+-", "-0-", "---", "--0"});
}

std::vector<std::string> strs(const std::vector<SignVector>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

TEST_CASE("covector sets sort, deduplicate and check lengths", "[om]") {
    auto s = make({"a", "b"}, {"+-", "00", "+-", "-+"});
    CHECK(s.size() == 3);
    CHECK(s[0].str() == "+-");
    CHECK(s.contains(sv("-+")));
    CHECK_FALSE(s.contains(sv("++")));
    CHECK_THROWS_AS(make({"a", "b"}, {"+"}), DimensionError);
}

TEST_CASE("rank one oriented matroid", "[om]") {
    auto s = make({"e"}, {"0", "+", "-"});
    CHECK(verify_covector_axioms(s).all_ok());
    CHECK(s.rank() == 1);
    CHECK(strs(topes(s)) == std::vector<std::string>{"+", "-"});
    CHECK(strs(atoms(s)) == std::vector<std::string>{"+", "-"});
}

TEST_CASE("line example: axioms, rank, topes", "[om]") {
    auto s = line_example();
    auto rep = verify_covector_axioms(s);
    CHECK(rep.all_ok());
    CHECK(rep.witnesses.empty());
    CHECK(s.rank() == 2);
    CHECK(topes(s).size() == 6);
    CHECK(atoms(s).size() == 6);
    CHECK(loops(s).empty());
    CHECK(covector_rank(s, sv("000")) == 0);
    CHECK(covector_rank(s, sv("+0+")) == 1);
    CHECK(covector_rank(s, sv("+++")) == 2);
    CHECK_THROWS_AS(covector_rank(s, sv("0+0")), MembershipError);
    CHECK(is_uniform(s).uniform);
}

TEST_CASE("axiom witnesses name the failing clause", "[om]") {
    SECTION("missing zero") {
        auto rep = verify_covector_axioms(make({"e"}, {"+", "-"}));
        CHECK_FALSE(rep.l0_ok);
        CHECK(rep.witnesses.front().clause == Axiom::L0);
    }
    SECTION("missing opposite") {
        auto rep = verify_covector_axioms(make({"e"}, {"0", "+"}));
        CHECK_FALSE(rep.l1_ok);
        CHECK(rep.l0_ok);
        REQUIRE(rep.witnesses.size() >= 1);
        CHECK(rep.witnesses.front().clause == Axiom::L1);
        CHECK(rep.witnesses.front().x.str() == "+");
    }
    SECTION("missing composition") {
        // +0 and 0+ present but ++ missing
        auto rep = verify_covector_axioms(make({"a", "b"}, {"00", "+0", "-0", "0+", "0-"}));
        CHECK_FALSE(rep.l2_ok);
        bool found = false;
        for (const auto& w : rep.witnesses)
            if (w.clause == Axiom::L2 && w.x.str() == "+0" && w.y->str() == "0+") found = true;
        CHECK(found);
    }
    SECTION("missing elimination") {
        // {0, ±(++), ±(+-)} is closed under composition but eliminating
        // between ++ and +- at b needs +0
        auto rep = verify_covector_axioms(make({"a", "b"}, {"00", "++", "--", "+-", "-+"}));
        CHECK(rep.l0_ok);
        CHECK(rep.l1_ok);
        CHECK(rep.l2_ok);
        CHECK_FALSE(rep.l3_ok);
        const auto& w = rep.witnesses.front();
        CHECK(w.clause == Axiom::L3);
        CHECK(separation_set(w.x, *w.y).contains(*w.element));
    }
}

TEST_CASE("uniformity criteria", "[om]") {
    // rank 2 with a parallel to b: no covector vanishes on a alone, and
    // 00+ has rank 1 while r - |z| = 0
    auto s = make({"a", "b", "c"}, {"000", "++0", "--0", "+++", "---", "++-", "--+", "00+", "00-"});
    CHECK(verify_covector_axioms(s).all_ok());
    auto u = is_uniform(s);
    CHECK(u.rank == 2);
    CHECK_FALSE(u.uniform);
    CHECK_FALSE(u.zero_set_criterion);
    REQUIRE(u.missing_zero_set.has_value());
    CHECK(u.missing_zero_set->indices() == std::vector<std::size_t>{0});
    CHECK_FALSE(u.rank_criterion);
    REQUIRE(u.rank_witness.has_value());
    CHECK(u.rank_witness->str() == "00+");
}

TEST_CASE("four-line arrangement is not uniform", "[om]") {
    std::istringstream in("dim 2\na 1 0 0\nb 0 1 0\nc 1 1 1\nd 1 1 -1\n");
    auto s = realize(parse_arrangement(in));
    auto u = is_uniform(s);
    CHECK_FALSE(u.uniform);
    CHECK(u.rank == 3);
    // c and d are parallel: no covector vanishes on exactly {c, d}
    REQUIRE(u.missing_zero_set.has_value());
    CHECK(u.missing_zero_set->indices() == std::vector<std::size_t>{2, 3});
    CHECK_FALSE(u.rank_criterion);
}

TEST_CASE("deletion and contraction", "[om]") {
    auto s = line_example();
    auto del = delete_minor(s, ElementSet::of({2}));
    CHECK(del.size() == 9);
    CHECK(del.ground().labels() == std::vector<std::string>{"a", "b"});
    CHECK(verify_covector_axioms(del).all_ok());
    auto con = contract(s, ElementSet::of({2}));
    CHECK(strs(con.covectors()) == std::vector<std::string>{"++", "--", "00"});
    CHECK(verify_covector_axioms(con).all_ok());
    CHECK(con.rank() == 1);
}

TEST_CASE("tope poset of the line example is a hexagon", "[om]") {
    auto s = line_example();
    auto p = tope_poset(s, sv("+++"));
    CHECK(p.size() == 6);
    auto idx = [&](const char* t) { return *p.index_of(sv(t)); };
    CHECK(p.leq(idx("+++"), idx("---")));
    CHECK(p.leq(idx("+-+"), idx("--+")));
    CHECK(p.leq(idx("++-"), idx("-+-")));
    CHECK_FALSE(p.leq(idx("+-+"), idx("-+-")));
    CHECK_FALSE(p.leq(idx("--+"), idx("++-")));
    // strict pairs: 5 above the bottom, 4 more below the top, 2 inside the chains
    CHECK(p.pairs().size() == 11);
    CHECK_THROWS_AS(tope_poset(s, sv("+0+")), MembershipError);
}

TEST_CASE("deterministic linear extension", "[om]") {
    auto p = tope_poset(line_example(), sv("+++"));
    auto ext = linear_extension(p);
    CHECK(strs(ext) == std::vector<std::string>{"+++", "+-+", "++-", "--+", "-+-", "---"});
    CHECK(is_linear_extension(p, ext));
}

TEST_CASE("random linear extensions reach every extension", "[om]") {
    auto p = tope_poset(line_example(), sv("+++"));
    std::mt19937_64 rng(7);
    std::set<std::vector<std::string>> seen;
    for (int i = 0; i < 300; ++i) {
        auto ext = random_linear_extension(p, rng);
        REQUIRE(is_linear_extension(p, ext));
        seen.insert(strs(ext));
    }
    // interleavings of two 2-chains between bottom and top
    CHECK(seen.size() == 6);
}

TEST_CASE("order ideals and intervals", "[om]") {
    auto p = tope_poset(line_example(), sv("+++"));
    CHECK(is_order_ideal(p, {sv("+++"), sv("+-+")}));
    CHECK_FALSE(is_order_ideal(p, {sv("+-+")}));
    CHECK_FALSE(is_linear_extension(p, {sv("+-+"), sv("+++"), sv("++-"), sv("--+"), sv("-+-"), sv("---")}));
    auto iv = tope_interval(p, *p.index_of(sv("+++")), *p.index_of(sv("--+")));
    CHECK(iv.size() == 3);
}
