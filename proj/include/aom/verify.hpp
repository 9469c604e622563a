/**
 * Full verification pipeline for one affine oriented matroid and its JSON
 * report.
 *
 * Stages: axioms, uniformity, L+ and L++, purity and common support, the
 * boundary criterion, the order complex of L++ (homology, collapse with
 * replay, boundary, vertex links, link/join identity), per-cell local checks
 * (uniform inputs only), sampled tope-poset shellings (uniform, rank <= 3),
 * and the metric boundedness census (essential arrangements only).
 */
#pragma once

#include <chrono>
#include <ctime>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aom/bounded_complex.hpp"
#include "aom/collapse.hpp"
#include "aom/homology.hpp"
#include "aom/io.hpp"
#include "aom/local_structure.hpp"
#include "aom/manifold.hpp"
#include "aom/oriented_matroid.hpp"
#include "aom/realization.hpp"
#include "aom/shelling.hpp"
#include "aom/simplicial.hpp"

namespace aom {

enum class Verdict { BallCertified, EvidenceOnly, Refuted, NotApplicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::BallCertified: return "ball-certified";
        case Verdict::EvidenceOnly: return "evidence-only";
        case Verdict::Refuted: return "refuted";
        default: return "not-applicable";
    }
}

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResource = 3;
}  // namespace exit_code

struct VerifyOptions {
    CertifyOptions certify;
    bool local_checks = true;
    bool oracle = true;
    std::size_t lawrence_samples = 10;
    std::uint64_t seed = 0;
};

struct LocalCheck {
    SignVector x;
    CubeCheck cube;
    std::vector<SignVector> c_x, d_x;
    BijectionCheck bijection;
    std::vector<SignVector> dx_order;
    bool dx_prefixes_are_ideals = true;
    std::optional<InducedShelling> induced;
    bool induced_required = false;  ///< C_X nonempty and not all topes above X
    /// Shelling of [C_X] found by search, independent of the induced order.
    std::optional<std::vector<std::vector<std::string>>> searched_shelling;
    UpperCase upper_case = UpperCase::Proper;
    std::string error;

    bool induced_failed() const { return induced_required && (!induced || !induced->check.holds); }
    bool ok() const {
        return error.empty() && cube.ok && bijection.ok && dx_prefixes_are_ideals && !induced_failed();
    }
};

struct LawrenceSample {
    SignVector x, base;
    std::vector<SignVector> order;
    ShellingCheck check;
};

struct LawrenceCheck {
    std::string status = "not run";
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::size_t sphere_samples = 0;   ///< X = 0, necessary-condition mode
    std::size_t sphere_failures = 0;
    std::vector<LawrenceSample> failing;
};

struct OracleCensus {
    std::string status = "not run";
    bool agrees = true;
    std::size_t checked = 0;
    std::vector<std::size_t> f_vector;
    std::vector<SignVector> mismatches;
};

struct VerificationReport {
    std::string source;
    std::string kind;  ///< "arrangement" or "covectors"
    std::vector<std::string> elements;
    std::string g_label;
    std::optional<std::size_t> arrangement_dim;
    std::size_t covector_count = 0;

    AxiomReport axioms;
    std::optional<UniformityReport> uniformity;
    std::size_t positive_count = 0;
    std::optional<BoundedComplex> bounded;
    std::optional<BoundaryCriterionCheck> boundary_criterion;

    std::optional<SimplicialComplex> order_complex;
    HomologyTable homology;
    std::optional<CollapseResult> collapse;
    std::size_t collapse_budget = 0;
    std::optional<ReplayResult> replay;
    std::optional<ShapeEvidence> boundary_shape;
    std::optional<LinkClassification> links;
    std::size_t link_identity_checked = 0;
    std::vector<std::string> link_identity_failures;

    std::string local_status = "not run";
    std::vector<std::string> restricted_away;
    std::vector<LocalCheck> local;
    LawrenceCheck lawrence;
    OracleCensus oracle;

    Verdict verdict = Verdict::NotApplicable;
    std::string reason;
    bool budget_exhausted = false;

    std::size_t local_failures() const {
        std::size_t n = 0;
        for (const auto& c : local)
            if (!c.ok()) ++n;
        return n;
    }
    std::size_t induced_failures() const {
        std::size_t n = 0;
        for (const auto& c : local)
            if (c.induced_failed()) ++n;
        return n;
    }

    int exit_code(bool allow_evidence) const {
        switch (verdict) {
            case Verdict::BallCertified: return exit_code::kSuccess;
            case Verdict::EvidenceOnly:
                if (allow_evidence) return exit_code::kSuccess;
                return budget_exhausted ? exit_code::kResource : exit_code::kFailed;
            default: return exit_code::kFailed;
        }
    }

    nlohmann::json to_json(bool with_timestamp) const;
};

namespace detail {

inline LocalCheck check_cell(const LocalStructure& ls, const SignVector& x) {
    LocalCheck c;
    c.x = x;
    try {
        c.cube = check_cube(ls.affine().om(), x);
        c.c_x = ls.unbounded_topes_above(x);
        c.d_x = ls.contraction_topes_above(x);
        c.bijection = ls.check_bijection(x);
        if (!c.d_x.empty()) {
            c.dx_order = ls.shelling_of_DX(x);
            const auto poset = ls.contraction_tope_poset(c.dx_order.front());
            std::vector<SignVector> prefix;
            for (const auto& t : c.dx_order) {
                prefix.push_back(t);
                if (!is_order_ideal(poset, prefix)) c.dx_prefixes_are_ideals = false;
            }
        }
        std::size_t topes_above = 0;
        for (const auto& t : topes(ls.affine().om()))
            if (strictly_below(x, t)) ++topes_above;
        c.induced_required = !c.c_x.empty() && c.c_x.size() < topes_above;
        if (!c.c_x.empty()) {
            c.induced = ls.induced_shelling_of_CX(x, c.dx_order);
            if (!c.induced->check.holds) {
                const auto cx = ls.closed_unbounded_complex(x);
                if (auto order = find_shelling(cx); order && verify_shelling(cx, *order).holds) {
                    c.searched_shelling.emplace();
                    for (auto f : *order) c.searched_shelling->push_back(cx.names(cx.facets()[f]));
                }
            }
        }
        c.upper_case = ls.link_decomposition(x).upper_case;
    } catch (const Error& e) {
        c.error = e.what();
    }
    return c;
}

inline Poset up_set_poset(const CovectorSet& set, const SignVector& x) {
    std::vector<SignVector> elems;
    for (const auto& y : set)
        if (strictly_below(x, y)) elems.push_back(y);
    std::vector<std::string> labels;
    for (const auto& y : elems) labels.push_back(y.str());
    return Poset(std::move(labels), [&](std::size_t i, std::size_t j) { return below(elems[i], elems[j]); });
}

/// Random linear extensions of the tope poset restricted to topes above X,
/// checked as shellings of L_{>X}.
inline LawrenceCheck lawrence_shellings(const CovectorSet& set, std::size_t samples, std::uint64_t seed) {
    LawrenceCheck out;
    std::mt19937_64 rng(seed);
    const auto all_topes = topes(set);
    for (const auto& x : set) {
        if (set.height(*set.index_of(x)) == set.rank()) continue;
        std::vector<SignVector> above;
        for (const auto& t : all_topes)
            if (below(x, t)) above.push_back(t);
        const auto poset = up_set_poset(set, x);
        for (std::size_t s = 0; s < samples; ++s) {
            const auto base = above[rng() % above.size()];
            const auto order = random_linear_extension(TopePoset(base, above), rng);
            std::vector<std::size_t> idx;
            for (const auto& t : order) idx.push_back(poset.index_of(t.str()));
            auto check = verify_shelling(poset, idx);
            const bool sphere = x.is_zero();
            (sphere ? out.sphere_samples : out.samples)++;
            if (!check.holds) {
                (sphere ? out.sphere_failures : out.failures)++;
                out.failing.push_back({x, base, order, check});
            }
        }
    }
    out.status = "checked";
    return out;
}

inline std::vector<std::vector<std::string>> face_list(const std::vector<CollapseStep>& steps, bool coface) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : steps) out.push_back(coface ? s.coface : s.free_face);
    return out;
}

}  // namespace detail

/// Runs every stage on an instance; `inst.g_label` must be set.
inline VerificationReport run_verification(const Instance& inst, const VerifyOptions& opts = {}) {
    VerificationReport rep;
    rep.source = inst.source;
    rep.kind = inst.arrangement ? "arrangement" : "covectors";
    rep.elements = inst.covectors.ground().labels();
    if (!inst.g_label) throw PreconditionError("no distinguished element: add a 'g <label>' line or pass --g");
    rep.g_label = *inst.g_label;
    const auto g = inst.covectors.ground().index_of(rep.g_label);
    if (inst.arrangement) rep.arrangement_dim = inst.arrangement->dim();
    rep.covector_count = inst.covectors.size();
    rep.collapse_budget = opts.certify.collapse_budget;

    rep.axioms = verify_covector_axioms(inst.covectors);
    if (!rep.axioms.all_ok()) {
        rep.verdict = Verdict::NotApplicable;
        rep.reason = std::string("covector axiom ") + to_string(rep.axioms.witnesses.front().clause) + " fails";
        return rep;
    }
    if (inst.covectors.ground().size() <= 1) {
        rep.reason = "an affine oriented matroid needs at least two elements";
        return rep;
    }
    if (loops(inst.covectors).contains(g)) {
        rep.reason = "distinguished element " + rep.g_label + " is a loop";
        return rep;
    }
    const AffineOM m(inst.covectors, g, rep.axioms);
    rep.uniformity = is_uniform(m.om());
    rep.positive_count = positive_part(m).size();
    rep.bounded = bounded_complex(m);
    const auto& bc = *rep.bounded;
    rep.boundary_criterion = check_boundary_criterion(m, bc);

    // Order complex of L++.
    const auto delta = bc.order_complex();
    rep.order_complex = delta;
    rep.homology = homology(delta);
    rep.collapse = find_collapse(delta, opts.certify.collapse_budget);
    if (rep.collapse->certificate) rep.replay = replay_collapse(delta, *rep.collapse->certificate);
    if (bc.pure && bc.dim >= 1) rep.boundary_shape = certify_shape(boundary_complex(delta), bc.dim - 1, opts.certify);
    if (bc.pure) rep.links = classify_links(delta, opts.certify);

    // link(X) = Delta(L++_{<X}) * Delta(L++_{>X})
    for (const auto& x : bc.covectors) {
        std::vector<SignVector> lower, upper;
        for (const auto& y : bc.covectors) {
            if (strictly_below(y, x)) lower.push_back(y);
            if (strictly_below(x, y)) upper.push_back(y);
        }
        auto make = [](const std::vector<SignVector>& v) {
            std::vector<std::string> labels;
            for (const auto& y : v) labels.push_back(y.str());
            return order_complex(Poset(std::move(labels), [&](std::size_t i, std::size_t j) { return below(v[i], v[j]); }));
        };
        ++rep.link_identity_checked;
        if (!(link(delta, x.str()) == join(make(lower), make(upper)))) rep.link_identity_failures.push_back(x.str());
    }

    // Local checks need uniformity.
    if (opts.local_checks) {
        if (!rep.uniformity->uniform) {
            rep.local_status = "not applicable: non-uniform";
        } else if (!bc.common_support) {
            rep.local_status = "not applicable: maximal cells have different supports";
        } else if (bc.support == ElementSet::of({g})) {
            rep.local_status = "not applicable: L++ is the single cell with X \\ g = 0";
        } else {
            const LocalStructure ls(m);
            for (auto i : ls.removed().indices()) rep.restricted_away.push_back(m.ground().label(i));
            for (const auto& x : ls.bounded().covectors) rep.local.push_back(detail::check_cell(ls, x));
            rep.local_status = "checked";
        }
        if (rep.uniformity->uniform && m.om().rank() <= 3)
            rep.lawrence = detail::lawrence_shellings(m.om(), opts.lawrence_samples, opts.seed);
        else
            rep.lawrence.status = rep.uniformity->uniform ? "not applicable: rank above 3" : "not applicable: non-uniform";
    }

    // Metric boundedness census.
    if (opts.oracle && inst.arrangement) {
        if (!is_essential(*inst.arrangement)) {
            rep.oracle.status = "not applicable: arrangement is not essential";
        } else {
            rep.oracle.status = "checked";
            const auto gset = ElementSet::of({g});
            for (const auto& x : positive_part(m)) {
                ++rep.oracle.checked;
                const bool metric = face_is_bounded(*inst.arrangement, delete_elements(x, gset));
                if (metric) {
                    const auto r = m.om().height(*m.om().index_of(x));
                    if (rep.oracle.f_vector.size() < r) rep.oracle.f_vector.resize(r, 0);
                    ++rep.oracle.f_vector[r - 1];
                }
                if (metric != bc.contains(x)) rep.oracle.mismatches.push_back(x);
            }
            rep.oracle.agrees = rep.oracle.mismatches.empty() && rep.oracle.f_vector == bc.f_vector;
        }
    }

    // Verdict.
    const bool collapse_ok = rep.collapse->certificate && rep.replay && rep.replay->ok;
    rep.budget_exhausted = !rep.collapse->certificate && rep.collapse->nodes >= opts.certify.collapse_budget;
    const long chi = delta.euler_characteristic();
    std::vector<std::string> refutations, doubts;
    if (!bc.pure) refutations.push_back("L++ is not pure");
    if (rep.links && !rep.links->manifold) {
        std::string names;
        for (const auto& v : rep.links->refuted_vertices()) names += (names.empty() ? "" : ", ") + v;
        refutations.push_back("vertex link is neither a sphere nor a ball at " + names);
    }
    if (!rep.homology.is_point_like()) refutations.push_back("homology is not that of a point");
    if (chi != 1) refutations.push_back("Euler characteristic " + std::to_string(chi));
    if (rep.boundary_shape && rep.boundary_shape->strength == Strength::Refuted)
        refutations.push_back("boundary is not a sphere");
    if (!collapse_ok) doubts.push_back(rep.budget_exhausted ? "collapse budget exhausted" : "no collapse found");
    if (rep.links && !rep.links->all_certified) {
        doubts.push_back("some vertex link is not certified");
        rep.budget_exhausted = true;
    }
    if (rep.boundary_shape && rep.boundary_shape->strength == Strength::EvidenceOnly) {
        doubts.push_back("boundary sphere not certified");
        rep.budget_exhausted = true;
    }
    if (!rep.link_identity_failures.empty()) doubts.push_back("link/join identity fails");
    // Local checks and tope-poset shellings are reported alongside; the verdict
    // rests on the collapse and link certificates above.
    if (!rep.oracle.agrees) doubts.push_back("metric boundedness census disagrees");

    auto joined = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& p : v) s += (s.empty() ? "" : "; ") + p;
        return s;
    };
    if (!refutations.empty()) {
        rep.verdict = Verdict::Refuted;
        rep.reason = joined(refutations);
    } else if (!doubts.empty()) {
        rep.verdict = Verdict::EvidenceOnly;
        rep.reason = joined(doubts);
    } else {
        rep.verdict = Verdict::BallCertified;
        rep.reason = "collapsible, every vertex link a sphere or ball, homology of a point";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace detail {

using nlohmann::json;

inline json strings(const std::vector<SignVector>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline json labels_of(const GroundSet& ground, ElementSet s) {
    json a = json::array();
    for (auto i : s.indices()) a.push_back(ground.label(i));
    return a;
}

inline json homology_json(const HomologyTable& h) {
    json t = json::array();
    for (const auto& row : h.torsion) {
        json r = json::array();
        for (const auto& q : row) r.push_back(q.str());
        t.push_back(r);
    }
    return {{"betti", h.betti}, {"torsion", t}, {"reduced", h.reduced}};
}

inline json collapse_json(const CollapseCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back({{"free_face", s.free_face}, {"coface", s.coface}});
    return {{"steps", steps}, {"terminal", c.terminal}};
}

inline json shape_json(const ShapeEvidence& e) {
    json j = {{"shape", to_string(e.shape)},
              {"strength", to_string(e.strength)},
              {"dimension", e.dimension},
              {"reason", e.reason},
              {"pseudomanifold", e.pseudomanifold},
              {"boundary_ridges", e.boundary_ridges},
              {"homology", homology_json(e.homology)}};
    if (e.collapse) j["collapse"] = collapse_json(*e.collapse);
    if (e.shelling) j["shelling"] = *e.shelling;
    if (e.links_checked) j["links_checked"] = true;
    return j;
}

inline json shelling_json(const ShellingCheck& c) {
    json f = json::array();
    for (auto [i, j] : c.failures) f.push_back({i, j});
    return {{"holds", c.holds}, {"exact", c.exact}, {"failures", f}};
}

inline std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

}  // namespace detail

inline nlohmann::json VerificationReport::to_json(bool with_timestamp) const {
    using nlohmann::json;
    using namespace detail;
    json j;
    j["schema"] = 1;
    if (with_timestamp) j["timestamp"] = utc_now();
    j["instance"] = {{"source", source},
                     {"kind", kind},
                     {"elements", elements},
                     {"g", g_label},
                     {"n", elements.size() - 1},
                     {"covectors", covector_count}};
    if (arrangement_dim) j["instance"]["d"] = *arrangement_dim;

    json wit = json::array();
    for (const auto& w : axioms.witnesses) {
        json e = {{"clause", to_string(w.clause)}, {"x", w.x.str()}};
        if (w.y) e["y"] = w.y->str();
        if (w.element) e["element"] = elements.at(*w.element);
        wit.push_back(e);
    }
    j["axioms"] = {{"ok", axioms.all_ok()},
                   {"L0", axioms.l0_ok},
                   {"L1", axioms.l1_ok},
                   {"L2", axioms.l2_ok},
                   {"L3", axioms.l3_ok},
                   {"witnesses", wit}};
    j["verdict"] = to_string(verdict);
    j["reason"] = reason;
    j["budget_exhausted"] = budget_exhausted;
    if (!uniformity) return j;

    const GroundSet ground(elements);
    json u = {{"uniform", uniformity->uniform},
              {"rank", uniformity->rank},
              {"zero_set_criterion", uniformity->zero_set_criterion},
              {"rank_criterion", uniformity->rank_criterion}};
    if (uniformity->missing_zero_set) u["missing_zero_set"] = labels_of(ground, *uniformity->missing_zero_set);
    if (uniformity->rank_witness) u["rank_witness"] = uniformity->rank_witness->str();
    j["uniformity"] = u;
    j["positive_part"] = {{"size", positive_count}};

    const auto& bc = *bounded;
    j["bounded_complex"] = {{"f_vector", bc.f_vector},
                            {"dim", bc.dim},
                            {"pure", bc.pure},
                            {"common_support", bc.common_support},
                            {"support", labels_of(ground, bc.support)},
                            {"euler_characteristic", bc.euler_characteristic()},
                            {"maximal", strings(bc.maximal)},
                            {"covectors", strings(bc.covectors)}};
    j["boundary_criterion"] = {{"holds", boundary_criterion->holds},
                               {"checked", boundary_criterion->checked},
                               {"counterexamples", strings(boundary_criterion->counterexamples)}};

    json oc = {{"f_vector", order_complex->f_vector()},
               {"euler_characteristic", order_complex->euler_characteristic()},
               {"homology", homology_json(homology)}};
    if (boundary_shape) oc["boundary"] = shape_json(*boundary_shape);
    j["order_complex"] = oc;

    json col = {{"found", collapse->certificate.has_value()},
                {"nodes", collapse->nodes},
                {"budget", collapse_budget}};
    if (collapse->certificate) {
        col["certificate"] = collapse_json(*collapse->certificate);
        col["replay"] = {{"ok", replay->ok}, {"message", replay->message}};
    }
    j["collapse"] = col;

    if (links) {
        json vs = json::array();
        for (const auto& v : links->vertices) vs.push_back({{"vertex", v.vertex}, {"link", shape_json(v.evidence)}});
        j["links"] = {{"manifold", links->manifold},
                      {"all_certified", links->all_certified},
                      {"refuted_vertices", links->refuted_vertices()},
                      {"vertices", vs}};
    }
    j["link_join_identity"] = {{"checked", link_identity_checked}, {"failures", link_identity_failures}};

    json loc = json::array();
    for (const auto& c : local) {
        json e = {{"x", c.x.str()}, {"ok", c.ok()}};
        if (!c.error.empty()) {
            e["error"] = c.error;
            loc.push_back(e);
            continue;
        }
        e["cube"] = {{"ok", c.cube.ok}, {"expected", c.cube.expected}, {"actual", c.cube.actual}};
        if (!c.cube.failure.empty()) e["cube"]["failure"] = c.cube.failure;
        e["c_x"] = strings(c.c_x);
        e["d_x"] = strings(c.d_x);
        json pairs = json::array();
        for (const auto& [t, r] : c.bijection.pairing) pairs.push_back({t.str(), r.str()});
        e["bijection"] = {{"ok", c.bijection.ok}, {"pairing", pairs}};
        if (!c.bijection.failure.empty()) e["bijection"]["failure"] = c.bijection.failure;
        e["d_x_order"] = strings(c.dx_order);
        e["d_x_prefixes_are_ideals"] = c.dx_prefixes_are_ideals;
        if (c.induced) {
            e["c_x_order"] = {{"order", strings(c.induced->order)},
                              {"required", c.induced_required},
                              {"check", shelling_json(c.induced->check)}};
            if (!c.induced->check.holds)
                e["c_x_searched_shelling"] = c.searched_shelling ? json(*c.searched_shelling) : json(nullptr);
        }
        e["upper_case"] = to_string(c.upper_case);
        loc.push_back(e);
    }
    j["local"] = {{"status", local_status},
                  {"restricted_away", restricted_away},
                  {"failures", local_failures()},
                  {"induced_order_failures", induced_failures()},
                  {"cells", loc}};

    json lf = json::array();
    for (const auto& s : lawrence.failing)
        lf.push_back({{"x", s.x.str()}, {"base", s.base.str()}, {"order", strings(s.order)}, {"check", shelling_json(s.check)}});
    j["tope_poset_shellings"] = {{"status", lawrence.status},
                                 {"samples", lawrence.samples},
                                 {"failures", lawrence.failures},
                                 {"sphere_samples", lawrence.sphere_samples},
                                 {"sphere_failures", lawrence.sphere_failures},
                                 {"failing", lf}};

    j["oracle"] = {{"status", oracle.status},
                   {"agrees", oracle.agrees},
                   {"checked", oracle.checked},
                   {"f_vector", oracle.f_vector},
                   {"mismatches", strings(oracle.mismatches)}};
    return j;
}

}  // namespace aom
