#include <gtest/gtest.h>

#include <algorithm>

#include "chainmorph/enumerate.hpp"
#include "chainmorph/green.hpp"
#include "chainmorph/suites.hpp"
#include "oracles.hpp"

using namespace chainmorph;

namespace {

PartialMap F(std::vector<int> v) { return PartialMap::full(v); }
PartialMap P(int n, std::vector<std::pair<int, int>> pairs) { return PartialMap::from_pairs(n, pairs); }

template <class Fn>
ErrorKind kind_of(Fn&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::ParseError;
}

// D by definition of the bicompletable bijection: every bijection of the images,
// each direction checked by scanning all full maps.
bool d_by_bijection_scan(const PartialMap& a, const PartialMap& b) {
    auto ia = a.image(), ib = b.image();
    if (ia.size() != ib.size()) return false;
    auto perm = ib;
    do {
        oracle::Raw t(static_cast<std::size_t>(a.n()), 0), inv(static_cast<std::size_t>(a.n()), 0);
        for (std::size_t i = 0; i < ia.size(); ++i) {
            t[static_cast<std::size_t>(ia[i] - 1)] = perm[i];
            inv[static_cast<std::size_t>(perm[i] - 1)] = ia[i];
        }
        if (oracle::completable(t, "OP") && oracle::completable(inv, "OP")) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST(CanonicalBijection, Examples) {
    EXPECT_EQ(canonical_bijection(F({1, 1, 2}), F({2, 2, 3})), P(3, {{1, 2}, {2, 3}}));
    EXPECT_EQ(canonical_bijection(F({2, 2, 1}), F({1, 1, 2})), P(3, {{2, 1}, {1, 2}}));
    EXPECT_EQ(kind_of([] { canonical_bijection(F({1, 1, 2}), F({1, 2, 2})); }), ErrorKind::KernelMismatch);
}

TEST(Completable, Examples) {
    EXPECT_TRUE(is_completable(P(3, {{1, 2}, {2, 3}}), ClassTag::OP).has_value());
    EXPECT_TRUE(is_completable(P(4, {{1, 3}, {3, 1}}), ClassTag::OP).has_value());
    EXPECT_FALSE(is_completable(P(4, {{1, 3}, {3, 1}}), ClassTag::O).has_value());
    EXPECT_FALSE(is_completable(P(3, {{1, 2}, {2, 1}, {3, 3}}), ClassTag::OP).has_value());
    auto ext = is_completable(P(4, {{2, 4}, {4, 2}}), ClassTag::OP);
    ASSERT_TRUE(ext.has_value());
    EXPECT_EQ((*ext)(2), 4);
    EXPECT_EQ((*ext)(4), 2);
    EXPECT_TRUE(oracle::member(ext->raw(), "OP"));
    EXPECT_EQ(kind_of([] { is_completable(P(3, {{1, 1}}), ClassTag::POP); }), ErrorKind::NotInClass);
    EXPECT_EQ(kind_of([] { is_completable(PartialMap(6), ClassTag::OP, 3); }), ErrorKind::SizeLimit);
}

TEST(Completable, AgreesWithFullMapScan) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& v : oracle::all_vectors(n, true)) {
            auto m = PartialMap::from_raw(n, v);
            for (auto [tag, name] : {std::pair{ClassTag::OP, "OP"}, std::pair{ClassTag::O, "O"}}) {
                auto ext = is_completable(m, tag);
                ASSERT_EQ(ext.has_value(), oracle::completable(v, name)) << m.to_string() << " in " << name;
                if (ext) {
                    ASSERT_TRUE(oracle::member(ext->raw(), name));
                    ASSERT_EQ(restrict(*ext, m.domain()), m);
                }
            }
        }
}

TEST(Bicompletable, Examples) {
    EXPECT_TRUE(is_bicompletable(P(3, {{1, 2}, {2, 3}})));
    EXPECT_TRUE(is_bicompletable(P(4, {{1, 3}, {3, 1}})));
    EXPECT_FALSE(is_bicompletable(P(3, {{1, 2}, {2, 1}, {3, 3}})));
    EXPECT_EQ(kind_of([] { is_bicompletable(P(3, {{1, 2}, {2, 2}})); }), ErrorKind::NotInjective);
}

TEST(GreenOP, Examples) {
    EXPECT_TRUE(green_check_op(F({1, 1, 2}), F({2, 1, 1}), Relation::L).holds);
    EXPECT_TRUE(green_check_op(F({1, 1, 2}), F({2, 2, 3}), Relation::R).holds);
    EXPECT_FALSE(green_check_op(F({1, 1, 2}), F({1, 2, 2}), Relation::R).holds);
    EXPECT_TRUE(green_check_op(F({1, 2, 3}), F({2, 3, 1}), Relation::H).holds);
    EXPECT_TRUE(green_check_op(F({1, 1, 2}), F({3, 3, 1}), Relation::D).holds);
    EXPECT_FALSE(green_check_op(F({1, 1, 2}), F({1, 1, 1}), Relation::J).holds);
    auto v = green_check_op(F({1, 1, 2}), F({3, 3, 1}), Relation::J);
    EXPECT_TRUE(v.holds);
    EXPECT_FALSE(v.witnesses.empty());
    EXPECT_TRUE(v.witnesses_verified());
    EXPECT_EQ(kind_of([] { green_check_op(P(3, {{1, 1}}), F({1, 2, 3}), Relation::L); }), ErrorKind::NotFull);
    EXPECT_EQ(kind_of([] { green_check_op(F({1, 3, 2}), F({1, 2, 3}), Relation::L); }), ErrorKind::NotInClass);
}

TEST(GreenOP, WitnessesVerifyEverywhere) {
    auto maps = enumerate_class(ClassTag::OP, 4);
    std::size_t holds = 0;
    for (std::size_t i = 0; i < maps.size(); i += 3)
        for (std::size_t j = 0; j < maps.size(); j += 5)
            for (auto rel : {Relation::L, Relation::R, Relation::H, Relation::D, Relation::J}) {
                auto v = green_check_op(maps[i], maps[j], rel);
                if (!v.holds) continue;
                ++holds;
                ASSERT_TRUE(v.witnesses_verified()) << maps[i].to_string() << " " << relation_name(rel) << " " << maps[j].to_string();
            }
    EXPECT_GT(holds, 0u);
}

TEST(GreenOP, DMatchesBijectionScan) {
    for (int n = 1; n <= 4; ++n) {
        auto t = build_monoid(ClassTag::OP, n);
        auto d = green_oracle(t, Relation::D);
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j) {
                const auto& a = t.elements[static_cast<std::size_t>(i)];
                const auto& b = t.elements[static_cast<std::size_t>(j)];
                if (n == 4 && (i % 4 != 0)) continue;
                bool scan = d_by_bijection_scan(a, b);
                ASSERT_EQ(scan, d.related(i, j)) << a.to_string() << " " << b.to_string();
                ASSERT_EQ(green_check_op(a, b, Relation::D).holds, scan) << a.to_string() << " " << b.to_string();
            }
    }
}

TEST(GreenRegular, Examples) {
    auto id12 = P(3, {{1, 1}, {2, 2}});
    auto id23 = P(3, {{2, 2}, {3, 3}});
    EXPECT_FALSE(green_check_regular(id12, id23, Relation::L, ClassTag::POI).holds);
    EXPECT_FALSE(green_check_regular(id12, id23, Relation::R, ClassTag::POI).holds);
    auto d = green_check_regular(id12, id23, Relation::D, ClassTag::POI);
    EXPECT_TRUE(d.holds);
    EXPECT_TRUE(d.witnesses_verified());
    EXPECT_TRUE(green_check_regular(id12, id23, Relation::J, ClassTag::POI).holds);
    auto empty = PartialMap(3);
    auto id = PartialMap::identity(3);
    EXPECT_FALSE(green_check_regular(empty, id, Relation::J, ClassTag::POPI).holds);
    EXPECT_TRUE(green_check_regular(empty, empty, Relation::H, ClassTag::POPI).holds);
    EXPECT_TRUE(green_check_regular(F({1, 1, 2}), F({2, 2, 3}), Relation::R, ClassTag::PO).holds);
    EXPECT_EQ(kind_of([] { green_check_regular(F({2, 3, 1}), F({1, 2, 3}), Relation::L, ClassTag::PO); }), ErrorKind::NotInClass);
    EXPECT_EQ(kind_of([] { green_check_regular(F({1, 2, 3}), F({1, 2, 3}), Relation::L, ClassTag::OP); }), ErrorKind::NotInClass);
}

TEST(Injection, Examples) {
    auto w = injection_exists(3, {2, 3}, {1, 3}, InjectionFlavor::Order);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, P(3, {{2, 1}, {3, 3}}));
    EXPECT_FALSE(injection_exists(3, {1, 2, 3}, {1, 3}, InjectionFlavor::Orientation).has_value());
    auto e = injection_exists(3, {}, {1}, InjectionFlavor::Order);
    ASSERT_TRUE(e.has_value());
    EXPECT_TRUE(e->empty());
}

TEST(GreenCrossValidation, AllClassesSmallChains) {
    for (auto tag : {ClassTag::OP, ClassTag::PO, ClassTag::POP, ClassTag::POI, ClassTag::POPI}) {
        SuiteParams p;
        p.n = 3;
        p.cls = tag;
        auto r = run_suite("green-crossval", p);
        EXPECT_TRUE(r.pass) << tag_name(tag) << ": " << report_to_json(r).dump();
        EXPECT_GT(r.checked, 0u);
    }
}

TEST(GreenCrossValidation, CanonicalBijectionSuite) {
    SuiteParams p;
    p.n = 3;
    auto r = run_suite("canonical-bijection", p);
    EXPECT_TRUE(r.pass) << report_to_json(r).dump();
}

TEST(GreenCrossValidation, PartialInjectionsAreCompletable) {
    SuiteParams p;
    p.n = 4;
    auto r = run_suite("op-completability", p);
    EXPECT_TRUE(r.pass) << report_to_json(r).dump();
}
