#include <gtest/gtest.h>

#include <random>

#include "chainmorph/curated.hpp"
#include "chainmorph/qbijection.hpp"
#include "chainmorph/suites.hpp"
#include "chainmorph/symbolic.hpp"

using namespace chainmorph;

namespace {

QInterval iv(const std::string& s) { return parse_interval(s); }
IntervalUnion un(const std::string& s) { return parse_union(s); }

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

std::vector<Rat> random_rats(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3000, 3000), den(1, 61);
    std::vector<Rat> out;
    for (int k = 0; k < count; ++k) out.push_back(Rat(num(rng)) / den(rng));
    return out;
}

std::vector<std::string> names(const std::vector<ClassTag>& tags) {
    std::vector<std::string> s;
    for (auto t : tags) s.emplace_back(tag_name(t));
    return s;
}

} // namespace

TEST(Moebius, Operations) {
    MoebiusMap f{1, 0, 1, 1}; // x / (x + 1)
    EXPECT_EQ(f.eval(1), Rat(1) / 2);
    EXPECT_EQ(f.det(), 1);
    EXPECT_EQ(f.pole(), Rat(-1));
    EXPECT_EQ(f.inverse().eval(f.eval(Rat(3) / 7)), Rat(3) / 7);
    auto g = MoebiusMap::affine(2, 1);
    EXPECT_EQ(f.then(g).eval(3), g.eval(f.eval(3)));
    EXPECT_TRUE(MoebiusMap({2, 0, 0, 2}).proportional(MoebiusMap::identity()));
    EXPECT_FALSE(g.proportional(MoebiusMap::identity()));
    EXPECT_EQ(limit_at(f, ExtRat::pos_inf(), Side::FromBelow), ExtRat(Rat(1)));
    EXPECT_EQ(limit_at(f, ExtRat(Rat(-1)), Side::FromAbove), ExtRat::neg_inf());
    EXPECT_EQ(limit_at(g, ExtRat::neg_inf(), Side::FromAbove), ExtRat::neg_inf());
    EXPECT_EQ(kind_of([&] { f.eval(-1); }), ErrorKind::MalformedMap);
}

TEST(PiecewiseMap, MakeRejectsBadPieces) {
    EXPECT_EQ(kind_of([] { PiecewiseMoebiusMap::single(iv("[0,1]"), MoebiusMap{1, 1, 1, 1}); }), ErrorKind::MalformedMap);
    EXPECT_EQ(kind_of([] { PiecewiseMoebiusMap::single(iv("[0,1]"), MoebiusMap{-1, 0, 0, 1}); }), ErrorKind::UnsupportedShape);
    EXPECT_EQ(kind_of([] { PiecewiseMoebiusMap::single(iv("[-2,0]"), MoebiusMap{1, 0, 1, 1}); }), ErrorKind::MalformedMap);
    EXPECT_EQ(kind_of([] { PiecewiseMoebiusMap::make({Piece{iv("[0,2]"), Rat(1)}, Piece{iv("[1,3]"), Rat(2)}}); }),
              ErrorKind::MalformedMap);
    EXPECT_NO_THROW(PiecewiseMoebiusMap::single(iv("(-1,inf)"), MoebiusMap{1, 0, 1, 1}));
}

TEST(PiecewiseMap, ImageExamples) {
    EXPECT_EQ(image_of(PiecewiseMoebiusMap::single(iv("[0,inf)"), MoebiusMap{1, 0, 1, 1})), un("{[0,1)}"));
    EXPECT_EQ(image_of(curated::open_image_map()), un("{(-1,1)}"));
    EXPECT_EQ(image_of(curated::half_open_image_map()), un("{[-1,0)}"));
    EXPECT_EQ(image_of(curated::unattained_gap()), un("{(-inf,0),(1,2]}"));
    EXPECT_EQ(image_of(curated::two_gaps()), un("{(-inf,0],(1,2],(3,inf)}"));
    EXPECT_EQ(image_of(PiecewiseMoebiusMap::make({Piece{iv("(-inf,inf)"), Rat(5)}})), un("{[5,5]}"));
}

TEST(PiecewiseMap, ImageMatchesProbes) {
    for (const auto& c : curated_maps()) {
        auto im = image_of(c.map);
        for (const auto& x : random_rats(21, 200)) {
            auto y = c.map.eval(x);
            ASSERT_TRUE(y.has_value()) << c.name;
            ASSERT_TRUE(im.contains(*y)) << c.name << " at " << format_rat(x);
        }
    }
}

TEST(PiecewiseMap, CompositionMatchesProbes) {
    auto maps = curated_maps();
    auto xs = random_rats(22, 200);
    for (const auto& a : maps)
        for (const auto& b : maps) {
            auto ab = compose_symbolic(a.map, b.map);
            EXPECT_TRUE(ab.is_full()) << a.name << " ; " << b.name;
            for (std::size_t k = 0; k < xs.size(); k += 8) {
                auto direct = b.map.eval(*a.map.eval(xs[k]));
                ASSERT_EQ(ab.eval(xs[k]), direct) << a.name << " ; " << b.name << " at " << format_rat(xs[k]);
            }
        }
    auto sq = compose_symbolic(curated::open_image_map(), curated::open_image_map());
    for (const auto& x : random_rats(23, 25)) {
        auto once = curated::open_image_map().eval(x);
        EXPECT_EQ(sq.eval(x), curated::open_image_map().eval(*once));
    }
}

TEST(PiecewiseMap, CompositionOfPartialMapsRestrictsDomain) {
    auto a = PiecewiseMoebiusMap::single(iv("[0,4]"), MoebiusMap::affine(1, 0));
    auto b = PiecewiseMoebiusMap::single(iv("[2,10]"), MoebiusMap::affine(2, 0));
    auto ab = compose_symbolic(a, b);
    EXPECT_EQ(ab.domain(), un("{[2,4]}"));
    EXPECT_EQ(ab.eval(3), Rat(6));
}

TEST(PiecewiseMap, MapsEqual) {
    auto dom = iv("(-inf,inf)");
    EXPECT_TRUE(maps_equal(PiecewiseMoebiusMap::identity_on(dom), PiecewiseMoebiusMap::single(dom, MoebiusMap{2, 0, 0, 2})));
    EXPECT_FALSE(maps_equal(PiecewiseMoebiusMap::identity_on(dom), PiecewiseMoebiusMap::single(dom, MoebiusMap::affine(1, 1))));
    auto split = PiecewiseMoebiusMap::make({Piece{iv("(-inf,0)"), MoebiusMap::identity()}, Piece{iv("[0,inf)"), MoebiusMap::identity()}});
    EXPECT_TRUE(maps_equal(split, PiecewiseMoebiusMap::identity_on(dom)));
    auto point = PiecewiseMoebiusMap::make({Piece{iv("(-inf,0)"), MoebiusMap::identity()}, Piece{iv("[0,0]"), Rat(0)},
                                            Piece{iv("(0,inf)"), MoebiusMap::identity()}});
    EXPECT_TRUE(maps_equal(point, PiecewiseMoebiusMap::identity_on(dom)));
    EXPECT_FALSE(maps_equal(PiecewiseMoebiusMap::identity_on(iv("[0,1]")), PiecewiseMoebiusMap::identity_on(dom)));
}

TEST(SymbolicClasses, IdealsOfCuratedMaps) {
    for (const auto& c : curated_maps()) EXPECT_TRUE(is_orientation_preserving_symbolic(c.map).has_value()) << c.name;
    EXPECT_EQ(*is_orientation_preserving_symbolic(curated::half_open_partner()), un("{(-inf,0)}"));
    EXPECT_EQ(*is_orientation_preserving_symbolic(curated::identity()), IntervalUnion::whole());
    auto down = PiecewiseMoebiusMap::make({Piece{iv("(-inf,0)"), MoebiusMap::identity()}, Piece{iv("[0,inf)"), MoebiusMap::affine(1, -10)}});
    EXPECT_FALSE(is_orientation_preserving_symbolic(down).has_value());
    EXPECT_FALSE(is_order_preserving_symbolic(down));
}

TEST(SymbolicClasses, Classify) {
    EXPECT_EQ(names(classify_symbolic(curated::identity())), (std::vector<std::string>{"PT", "T", "I", "O", "PO", "POI", "OP", "POP", "POPI"}));
    EXPECT_EQ(names(classify_symbolic(curated::wrap())), (std::vector<std::string>{"PT", "T", "OP", "POP"}));
    auto part = PiecewiseMoebiusMap::identity_on(iv("[0,1]"));
    EXPECT_EQ(names(classify_symbolic(part)), (std::vector<std::string>{"PT", "I", "PO", "POI", "POP", "POPI"}));
}

TEST(QBijection, SignatureIso) {
    EXPECT_TRUE(q_interval_signature_iso(union_signature(un("{[0,1)}")), union_signature(un("{[5,9)}"))));
    EXPECT_FALSE(q_interval_signature_iso(union_signature(un("{[0,1)}")), union_signature(un("{(0,1]}"))));
    EXPECT_EQ(kind_of([] { q_interval_signature_iso(union_signature(un("{[0,inf)}")), union_signature(un("{[0,1]}"))); }),
              ErrorKind::UnboundedUnsupported);
}

TEST(QBijection, Examples) {
    auto r = orientation_bijection_exists(iv("(0,1]"), iv("[0,1)"));
    EXPECT_EQ(r.decision, Decision::Exists);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(r.witness_verified);
    EXPECT_EQ(orientation_bijection_exists(iv("(0,1)"), iv("[0,1]")).decision, Decision::DoesNotExist);
    auto u = orientation_bijection_exists(iv("[0,1)"), iv("(0,1)"));
    EXPECT_EQ(u.decision, Decision::Undecided);
    EXPECT_FALSE(u.reason.empty());
    EXPECT_EQ(orientation_bijection_exists(iv("[0,1]"), iv("[2,7]")).decision, Decision::Exists);
    EXPECT_EQ(orientation_bijection_exists(iv("[3,3]"), iv("[4,4]")).decision, Decision::Exists);
    EXPECT_EQ(orientation_bijection_exists(iv("[3,3]"), iv("[0,1]")).decision, Decision::DoesNotExist);
    EXPECT_EQ(kind_of([] { orientation_bijection_exists(iv("[0,inf)"), iv("[0,1]")); }), ErrorKind::UnboundedUnsupported);
}

TEST(QBijection, DecisionIsSymmetricAndWitnessesVerify) {
    std::vector<std::string> shapes{"[0,1]", "[0,1)", "(0,1]", "(0,1)", "[2,2]", "(-3,5]", "[1/2,7/3)"};
    for (const auto& s : shapes)
        for (const auto& t : shapes) {
            auto ab = orientation_bijection_exists(iv(s), iv(t));
            auto ba = orientation_bijection_exists(iv(t), iv(s));
            EXPECT_EQ(ab.decision, ba.decision) << s << " " << t;
            if (ab.decision == Decision::Exists) {
                EXPECT_TRUE(ab.witness_verified) << s << " " << t;
                EXPECT_TRUE(verify_orientation_bijection(*ab.witness, iv(s), iv(t)));
            }
        }
}

TEST(QBijection, SplitsOfAClosedInterval) {
    auto splits = enumerate_splits(iv("[0,1]"));
    ASSERT_FALSE(splits.empty());
    EXPECT_EQ(splits.front().cut, CutKind::Trivial);
    bool gap = false;
    for (const auto& s : splits) gap = gap || s.cut == CutKind::Gap;
    EXPECT_TRUE(gap);
}

TEST(DJWitness, Examples) {
    for (auto [a, b, c, d] : {std::array<int, 4>{0, 1, 0, 1}, std::array<int, 4>{0, 3, 1, 2}, std::array<int, 4>{-2, 5, 1, 3}}) {
        auto r = dj_gap_witness(a, b, c, d);
        EXPECT_TRUE(r.j_holds) << a << b << c << d;
        ASSERT_TRUE(r.d_holds.has_value());
        EXPECT_FALSE(*r.d_holds);
        for (const auto& [name, ok] : r.checks) EXPECT_TRUE(ok) << name;
        EXPECT_TRUE(r.theta_image.subset_of(IntervalUnion(QInterval::closed(c, d))));
    }
    auto q = dj_gap_witness(Rat(1) / 3, Rat(1) / 2, -7, 4);
    EXPECT_TRUE(q.j_holds);
    EXPECT_EQ(kind_of([] { dj_gap_witness(0, 0, 0, 1); }), ErrorKind::BadInterval);
    EXPECT_EQ(kind_of([] { dj_gap_witness(0, 1, 2, 1); }), ErrorKind::BadInterval);
}

TEST(SymbolicSuites, ClosureAndBeta) {
    for (auto name : {"symbolic-closure", "symbolic-beta", "dj-witness", "q-open-image"}) {
        auto r = run_suite(name, SuiteParams{});
        EXPECT_TRUE(r.pass) << name << ": " << report_to_json(r).dump();
    }
}
