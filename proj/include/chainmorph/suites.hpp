#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curated.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "green.hpp"
#include "io.hpp"
#include "qbijection.hpp"
#include "regularity.hpp"
#include "regularity_q.hpp"
#include "symbolic.hpp"
#include "transforms.hpp"

namespace chainmorph {

struct SuiteParams {
    int n = 0;                              // 0 picks the suite default
    std::optional<ClassTag> cls;            // green-crossval only
    std::uint64_t samples = 0;              // 0 picks the suite default
    std::uint64_t seed = 20240611;
    std::string fixture_dir;                // golden-counts only
    std::uint64_t max_candidates = configured_max_candidates();
};

struct SuiteReport {
    explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> counterexamples;
    json details = json::object();

    static constexpr std::size_t max_listed = 20;

    void fail(const std::string& what) {
        pass = false;
        ++violations;
        if (counterexamples.size() < max_listed) counterexamples.push_back(what);
    }
    void check(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (!ok) fail(what());
    }
};

inline json report_to_json(const SuiteReport& r) {
    return json{{"suite", r.name},
                {"pass", r.pass},
                {"checked", r.checked},
                {"violations", r.violations},
                {"counterexamples", r.counterexamples},
                {"details", r.details}};
}

namespace detail {

inline int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }
inline std::uint64_t pick(std::uint64_t requested, std::uint64_t fallback) { return requested > 0 ? requested : fallback; }

// The closed convex hull of a set of chain points, as a sorted list.
inline Subset hull(const Subset& s) {
    Subset out;
    if (s.empty()) return out;
    for (int x = s.front(); x <= s.back(); ++x) out.push_back(x);
    return out;
}

inline bool order_preserving_on(const PartialMap& m, const Subset& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (m(s[i]) > m(s[i + 1])) return false;
    return true;
}

// ---- closure ----

inline void closure_pairs(SuiteReport& rep, ClassTag tag, const std::vector<PartialMap>& ms, std::size_t i, std::size_t j) {
    auto c = compose(ms[i], ms[j]);
    rep.check(is_member(c, tag), [&] {
        return std::string(tag_name(tag)) + ": " + ms[i].to_string() + " * " + ms[j].to_string() + " = " + c.to_string();
    });
}

inline SuiteReport suite_closure(const SuiteParams& p) {
    SuiteReport rep{"closure"};
    const int n = pick(p.n, 4);
    const auto samples = pick(p.samples, std::uint64_t{100000});
    std::mt19937_64 rng(p.seed);
    json per_n = json::object();
    for (int m = 1; m <= n; ++m) {
        for (auto tag : {ClassTag::POP, ClassTag::OP}) {
            auto ms = enumerate_class(tag, m, p.max_candidates);
            auto before = rep.checked;
            if (m <= 4) {
                for (std::size_t i = 0; i < ms.size(); ++i)
                    for (std::size_t j = 0; j < ms.size(); ++j) closure_pairs(rep, tag, ms, i, j);
            } else if (m == n) {
                std::uniform_int_distribution<std::size_t> d(0, ms.size() - 1);
                for (std::uint64_t s = 0; s < samples; ++s) closure_pairs(rep, tag, ms, d(rng), d(rng));
            } else {
                continue;
            }
            per_n[std::string(tag_name(tag)) + "_" + std::to_string(m)] =
                json{{"elements", ms.size()}, {"products", rep.checked - before}, {"mode", m <= 4 ? "exhaustive" : "sampled"}};
        }
    }
    rep.details = per_n;
    return rep;
}

// ---- unique ideal ----

inline SuiteReport suite_unique_ideal(const SuiteParams& p) {
    SuiteReport rep{"unique-ideal"};
    const int n = pick(p.n, 5);
    std::uint64_t constants = 0, non_constants = 0;
    for (int m = 1; m <= n; ++m) {
        for (const auto& a : enumerate_class(ClassTag::POP, m, p.max_candidates)) {
            auto ideals = find_ideals(a);
            if (a.empty()) {
                rep.check(ideals.size() == 1 && ideals.front().empty(), [&] { return a.to_string() + ": empty map needs the empty ideal"; });
            } else if (a.is_constant()) {
                ++constants;
                rep.check(ideals.size() == a.domain().size(), [&] {
                    return a.to_string() + ": constant with " + std::to_string(ideals.size()) + " ideals, domain size " +
                           std::to_string(a.domain().size());
                });
            } else {
                ++non_constants;
                rep.check(ideals.size() == 1, [&] { return a.to_string() + ": " + std::to_string(ideals.size()) + " ideals"; });
            }
        }
    }
    rep.details = json{{"n", n}, {"constants", constants}, {"non_constants", non_constants}};
    return rep;
}

// ---- zeta soundness ----

inline SuiteReport suite_zeta(const SuiteParams& p) {
    SuiteReport rep{"zeta-soundness"};
    const int n = pick(p.n, 4);
    std::uint64_t choices = 0;
    for (const auto& a : enumerate_class(ClassTag::POP, n, p.max_candidates)) {
        const bool in_po = is_order_preserving(a);
        for (const auto& y : find_ideals(a)) {
            for_each_choice(a, y, [&](const ChoiceFunction& c) {
                ++choices;
                PartialMap z(a.n());
                for (int v : a.image()) z.set(v, c(v));
                auto tag = "alpha=" + a.to_string() + " Y=" + format_subset(y) + " zeta=" + z.to_string();
                rep.check(compose(compose(a, z), a) == a, [&] { return tag + ": alpha zeta alpha != alpha"; });
                rep.check(is_member(z, ClassTag::POPI), [&] { return tag + ": zeta not in POPI"; });
                if (in_po) rep.check(is_member(z, ClassTag::POI), [&] { return tag + ": zeta not in POI"; });
            });
            auto z = zeta_inverse(a, y);
            rep.check(compose(compose(a, z), a) == a, [&] { return "default choice for " + a.to_string() + " fails"; });
        }
    }
    rep.details = json{{"n", n}, {"choice_functions", choices}};
    return rep;
}

// ---- beta soundness ----

inline void check_beta(SuiteReport& rep, const PartialMap& a, const Subset& y, std::uint64_t& two_sided) {
    auto bc = build_op_inverse_detailed(a, y);
    const auto& b = bc.beta;
    auto tag = "alpha=" + a.to_string() + " Y=" + format_subset(y) + " beta=" + b.to_string();
    rep.check(b.is_full() && is_orientation_preserving(b), [&] { return tag + ": beta not in OP"; });
    rep.check(compose(compose(a, b), a) == a, [&] { return tag + ": alpha beta alpha != alpha"; });
    if (compose(compose(b, a), b) == b) ++two_sided;

    auto ya = a.image_of(y);
    rep.check(order_preserving_on(b, hull(ya)), [&] { return tag + ": not order-preserving on cl(Y alpha)"; });

    auto rest = complement_in_domain(a, y);
    if (!rest.empty()) {
        auto ca = a.image_of(rest);
        if (auto m = glued_point(a, y)) ca.erase(std::remove(ca.begin(), ca.end(), *m), ca.end());
        rep.check(order_preserving_on(b, hull(ca)), [&] { return tag + ": not order-preserving on cl((X\\Y) alpha)"; });
    }

    auto im = a.image();
    const int zmax = bc.choice(im.back()), zmin = bc.choice(im.front());
    for (int x = 1; x <= a.n(); ++x) {
        if (x >= im.front() && x <= im.back()) continue;
        rep.check(b(x) == zmax || b(x) == zmin, [&] { return tag + ": bound point " + std::to_string(x) + " not sent to z_max or z_min"; });
    }
}

inline SuiteReport suite_beta(const SuiteParams& p) {
    SuiteReport rep{"beta-soundness"};
    const int n = pick(p.n, 5);
    std::uint64_t maps = 0, constructions = 0, two_sided = 0;
    for (int m = 1; m <= n; ++m) {
        for (const auto& a : enumerate_class(ClassTag::OP, m, p.max_candidates)) {
            ++maps;
            for (const auto& y : find_ideals(a)) {
                ++constructions;
                check_beta(rep, a, y, two_sided);
            }
        }
    }
    rep.details = json{{"n", n},
                       {"maps", maps},
                       {"constructions", constructions},
                       {"beta_alpha_beta_equals_beta", two_sided},
                       {"beta_alpha_beta_differs", constructions - two_sided}};
    return rep;
}

// ---- criterion on the rationals ----

inline SuiteReport suite_q_open_image(const SuiteParams&) {
    SuiteReport rep{"q-open-image"};
    auto a = curated::open_image_map();
    auto im = image_of(a);
    rep.check(im == IntervalUnion(QInterval::open(-1, 1)), [&] { return "image is " + format_union(im) + ", expected {(-1,1)}"; });
    rep.check(is_order_preserving_symbolic(a), [] { return "open-image map is not order-preserving"; });
    auto r = reg_op_criterion(ImageSet{im});
    rep.check(!r.verdict && !r.condition1, [&] { return "OP criterion: " + criterion_to_json(r).dump(); });
    bool refused = false;
    try {
        build_op_inverse_symbolic(a);
    } catch (const Error& e) {
        refused = e.kind() == ErrorKind::CriterionFails;
    }
    rep.check(refused, [] { return "symbolic inverse did not refuse the open-image map"; });

    auto o = curated::half_open_image_map();
    auto oim = image_of(o);
    rep.check(oim == IntervalUnion(QInterval::make(-1, true, 0, false)), [&] { return "image is " + format_union(oim) + ", expected {[-1,0)}"; });
    rep.check(is_order_preserving_symbolic(o), [] { return "half-open-image map is not order-preserving"; });
    auto ro = reg_o_criterion(ImageSet{oim});
    auto rop = reg_op_criterion(ImageSet{oim});
    rep.check(!ro.verdict, [&] { return "O criterion accepted [-1,0): " + criterion_to_json(ro).dump(); });
    rep.check(rop.verdict, [&] { return "OP criterion rejected [-1,0): " + criterion_to_json(rop).dump(); });

    auto b = curated::half_open_partner();
    auto ideal = is_orientation_preserving_symbolic(b);
    rep.check(ideal.has_value() && !is_order_preserving_symbolic(b), [] { return "partner is not in OP \\ O"; });
    bool aba = maps_equal(compose_symbolic(compose_symbolic(o, b), o), o);
    bool bab = maps_equal(compose_symbolic(compose_symbolic(b, o), b), b);
    rep.check(aba && bab, [] { return "partner is not a two-sided inverse"; });
    auto sig = union_signature(oim);
    rep.check(sig.bounded_above && sig.bounded_below, [] { return "image of the O map with an OP inverse is unbounded"; });

    rep.details = json{{"open_image", json{{"image", format_union(im)}, {"op_criterion", criterion_to_json(r)}}},
                       {"half_open_image", json{{"image", format_union(oim)}, {"o_criterion", criterion_to_json(ro)},
                                                {"op_criterion", criterion_to_json(rop)}}},
                       {"partner_ideal", ideal ? format_union(*ideal) : std::string("none")},
                       {"summary", std::string(r.verdict ? "regular" : "not regular") + ", criterion " +
                                       (r.condition1 ? "condition2" : "condition1") + " failed"}};
    return rep;
}

// ---- Green's relations ----

inline void crossval_pair(SuiteReport& rep, ClassTag tag, const MonoidTable& t, const std::map<Relation, GreenOracleResult>& oracle,
                          std::size_t i, std::size_t j) {
    const auto& a = t.elements[i];
    const auto& b = t.elements[j];
    for (const auto& [rel, o] : oracle) {
        auto v = tag == ClassTag::OP ? green_check_op(a, b, rel) : green_check_regular(a, b, rel, tag);
        bool expect = o.related(i, j);
        auto tagline = [&] {
            return std::string(tag_name(tag)) + " " + std::string(relation_name(rel)) + ": " + a.to_string() + " vs " + b.to_string() +
                   " criterion=" + (v.holds ? "true" : "false") + " oracle=" + (expect ? "true" : "false");
        };
        rep.check(v.holds == expect, tagline);
        if (v.holds) rep.check(v.witnesses_verified(), [&] { return tagline() + " (witness failed)"; });
    }
}

inline SuiteReport suite_green(const SuiteParams& p) {
    SuiteReport rep{"green-crossval"};
    const int n = pick(p.n, 3);
    const auto samples = pick(p.samples, std::uint64_t{10000});
    std::vector<ClassTag> tags;
    if (p.cls)
        tags = {*p.cls};
    else
        tags = {ClassTag::OP, ClassTag::PO, ClassTag::POP, ClassTag::POI, ClassTag::POPI};
    std::mt19937_64 rng(p.seed);
    for (auto tag : tags) {
        if (tag != ClassTag::OP && tag != ClassTag::PO && tag != ClassTag::POP && tag != ClassTag::POI && tag != ClassTag::POPI)
            throw Error(ErrorKind::NotInClass, "green-crossval covers OP, PO, POP, POI and POPI");
        auto t = build_monoid(tag, n, p.max_candidates);
        std::map<Relation, GreenOracleResult> oracle;
        for (auto rel : {Relation::L, Relation::R, Relation::H, Relation::D, Relation::J}) oracle.emplace(rel, green_oracle(t, rel));
        const bool exhaustive = n <= 3 || (tag == ClassTag::OP && n <= 4);
        auto before = rep.checked;
        const auto size = t.elements.size();
        if (exhaustive) {
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j) crossval_pair(rep, tag, t, oracle, i, j);
        } else {
            std::uniform_int_distribution<std::size_t> d(0, size - 1);
            for (std::uint64_t s = 0; s < samples; ++s) crossval_pair(rep, tag, t, oracle, d(rng), d(rng));
        }
        json classes = json::object();
        for (const auto& [rel, o] : oracle) classes[std::string(relation_name(rel))] = o.classes;
        rep.details[std::string(tag_name(tag))] =
            json{{"n", n}, {"elements", t.size()}, {"mode", exhaustive ? "exhaustive" : "sampled"}, {"checks", rep.checked - before}, {"classes", classes}};
    }
    return rep;
}

// ---- canonical bijection ----

inline std::vector<int> kernel_key(const PartialMap& a) {
    std::vector<int> key(static_cast<std::size_t>(a.n()), 0);
    std::map<int, int> ids;
    for (int x : a.domain()) key[static_cast<std::size_t>(x - 1)] = ids.emplace(a(x), static_cast<int>(ids.size()) + 1).first->second;
    return key;
}

inline void canonical_for(SuiteReport& rep, ClassTag tag, ClassTag target, int n, std::uint64_t max_candidates, std::uint64_t& pairs) {
    std::map<std::vector<int>, std::vector<PartialMap>> by_kernel;
    for (auto& a : enumerate_class(tag, n, max_candidates)) by_kernel[kernel_key(a)].push_back(std::move(a));
    for (const auto& [key, group] : by_kernel) {
        for (const auto& a : group) {
            for (const auto& b : group) {
                ++pairs;
                auto th = canonical_bijection(a, b);
                rep.check(is_member(th, target) && compose(a, th) == b, [&] {
                    return std::string(tag_name(tag)) + ": " + a.to_string() + ", " + b.to_string() + " theta=" + th.to_string();
                });
            }
        }
    }
}

inline SuiteReport suite_canonical(const SuiteParams& p) {
    SuiteReport rep{"canonical-bijection"};
    const int n = pick(p.n, 4);
    std::uint64_t pop = 0, po = 0;
    canonical_for(rep, ClassTag::POP, ClassTag::POPI, n, p.max_candidates, pop);
    canonical_for(rep, ClassTag::PO, ClassTag::POI, n, p.max_candidates, po);
    rep.details = json{{"n", n}, {"POP_pairs", pop}, {"PO_pairs", po}};
    return rep;
}

// ---- D and J on the rationals ----

inline SuiteReport suite_dj(const SuiteParams&) {
    SuiteReport rep{"dj-witness"};
    const std::vector<std::array<Rat, 4>> cases{{0, 1, 0, 1}, {-2, 5, 1, 3}, {Rat(1) / 3, Rat(1) / 2, -7, 4}};
    json out = json::array();
    for (const auto& c : cases) {
        auto r = dj_gap_witness(c[0], c[1], c[2], c[3]);
        auto label = "(" + format_rat(c[0]) + "," + format_rat(c[1]) + ") vs [" + format_rat(c[2]) + "," + format_rat(c[3]) + "]";
        rep.check(r.d_holds.has_value() && !*r.d_holds, [&] { return label + ": D not refuted"; });
        rep.check(r.j_holds, [&] { return label + ": J not established"; });
        for (const auto& [k, v] : r.checks) rep.check(v, [&] { return label + ": " + k; });
        out.push_back(dj_to_json(r));
    }
    rep.details = json{{"cases", out}};
    return rep;
}

// ---- golden counts ----

inline std::string counts_text(ClassTag tag, int max_n, std::uint64_t max_candidates) {
    json j = json::object();
    for (int n = 1; n <= max_n; ++n) j[std::to_string(n)] = count_class(tag, n, max_candidates);
    return j.dump(2) + "\n";
}

inline SuiteReport suite_golden(const SuiteParams& p) {
    SuiteReport rep{"golden-counts"};
    const int n = pick(p.n, 5);
    if (p.fixture_dir.empty()) throw Error(ErrorKind::ParseError, "golden-counts needs a fixture directory");
    for (auto tag : all_tags) {
        auto path = p.fixture_dir + "/counts_" + std::string(tag_name(tag)) + ".json";
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            rep.fail("missing fixture " + path);
            continue;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        auto first = counts_text(tag, n, p.max_candidates);
        auto second = counts_text(tag, n, p.max_candidates);
        rep.check(first == second, [&] { return std::string(tag_name(tag)) + ": counts differ between runs"; });
        rep.check(first == ss.str(), [&] { return std::string(tag_name(tag)) + ": computed " + first + " vs fixture " + ss.str(); });
        rep.details[std::string(tag_name(tag))] = json::parse(first);
    }
    return rep;
}

// ---- symbolic inverse and closure ----

inline SuiteReport suite_symbolic_beta(const SuiteParams&) {
    SuiteReport rep{"symbolic-beta"};
    for (const auto& c : curated_maps()) {
        if (c.regular) {
            auto s = build_op_inverse_symbolic(c.map);
            rep.check(s.aba_equals_a, [&] { return c.name + ": alpha beta alpha != alpha, beta=" + symbolic_to_json(s.beta).dump(); });
            rep.check(s.beta.is_full() && is_orientation_preserving_symbolic(s.beta).has_value(),
                      [&] { return c.name + ": beta not in OP, beta=" + symbolic_to_json(s.beta).dump(); });
            rep.details[c.name] = json{{"beta", symbolic_to_json(s.beta)}, {"beta_alpha_beta_equals_beta", s.bab_equals_b}};
        } else {
            std::string got = "no error";
            try {
                build_op_inverse_symbolic(c.map);
            } catch (const Error& e) {
                got = std::string(kind_name(e.kind()));
            }
            rep.check(got == "CriterionFails", [&] { return c.name + ": expected CriterionFails, got " + got; });
            rep.details[c.name] = json{{"result", got}};
        }
    }
    return rep;
}

inline SuiteReport suite_symbolic_closure(const SuiteParams&) {
    SuiteReport rep{"symbolic-closure"};
    auto maps = curated_maps();
    for (const auto& a : maps)
        for (const auto& b : maps) {
            auto c = compose_symbolic(a.map, b.map);
            rep.check(is_orientation_preserving_symbolic(c).has_value(), [&] { return a.name + " then " + b.name + ": " + symbolic_to_json(c).dump(); });
        }
    rep.details = json{{"maps", maps.size()}};
    return rep;
}

// ---- completability of partial injections (recorded, not asserted) ----

inline SuiteReport suite_completability(const SuiteParams& p) {
    SuiteReport rep{"op-completability"};
    const int n = pick(p.n, 5);
    json per_n = json::object();
    for (int m = 1; m <= n; ++m) {
        std::uint64_t total = 0, completable = 0;
        std::vector<std::string> stuck;
        for (const auto& th : enumerate_class(ClassTag::POPI, m, p.max_candidates)) {
            ++total;
            if (is_completable(th, ClassTag::OP, p.max_candidates))
                ++completable;
            else if (stuck.size() < SuiteReport::max_listed)
                stuck.push_back(th.to_string());
        }
        rep.checked += total;
        per_n[std::to_string(m)] = json{{"partial_injections", total}, {"completable", completable}, {"not_completable", stuck}};
    }
    rep.details = per_n;
    return rep;
}

} // namespace detail

using SuiteFn = std::function<SuiteReport(const SuiteParams&)>;

inline const std::map<std::string, SuiteFn>& suite_registry() {
    static const std::map<std::string, SuiteFn> reg{
        {"closure", detail::suite_closure},
        {"unique-ideal", detail::suite_unique_ideal},
        {"zeta-soundness", detail::suite_zeta},
        {"beta-soundness", detail::suite_beta},
        {"q-open-image", detail::suite_q_open_image},
        {"green-crossval", detail::suite_green},
        {"canonical-bijection", detail::suite_canonical},
        {"dj-witness", detail::suite_dj},
        {"golden-counts", detail::suite_golden},
        {"symbolic-beta", detail::suite_symbolic_beta},
        {"symbolic-closure", detail::suite_symbolic_closure},
        {"op-completability", detail::suite_completability},
    };
    return reg;
}

inline SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    const auto& reg = suite_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
    return it->second(params);
}

} // namespace chainmorph
