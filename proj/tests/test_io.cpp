#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "chainmorph/curated.hpp"
#include "chainmorph/enumerate.hpp"
#include "chainmorph/io.hpp"

using namespace chainmorph;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

CliResult cli(const std::vector<std::string>& args) {
    std::string cmd = quote(CHAINMORPH_CLI);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json cli_json(const std::vector<std::string>& args, int expected_code = 0) {
    auto r = cli(args);
    EXPECT_EQ(r.code, expected_code) << r.out;
    return json::parse(r.out);
}

std::string sample(const std::string& name) { return std::string("@") + CHAINMORPH_SAMPLES_DIR + "/" + name; }

} // namespace

TEST(Json, FiniteMapRoundTrip) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& m : enumerate_class(ClassTag::PT, n)) {
            auto j = map_to_json(m);
            ASSERT_EQ(map_from_json(j), m) << j.dump();
            ASSERT_EQ(parse_map_spec(j.dump(), std::nullopt), m);
            ASSERT_EQ(parse_map_spec(m.to_string(), n), m);
        }
    EXPECT_EQ(map_to_json(PartialMap::full({2, 3, 1})).dump(), R"j({"chain":3,"full":[2,3,1]})j");
    EXPECT_EQ(map_to_json(PartialMap::from_pairs(3, {{1, 2}})).dump(), R"j({"chain":3,"map":{"1":2}})j");
}

TEST(Json, SymbolicRoundTrip) {
    for (const auto& c : curated_maps()) {
        auto j = symbolic_to_json(c.map);
        auto back = symbolic_from_json(j);
        EXPECT_TRUE(maps_equal(back, c.map)) << c.name;
        EXPECT_EQ(symbolic_to_json(back), j) << c.name;
        EXPECT_TRUE(maps_equal(parse_symbolic_spec(j.dump()), c.map)) << c.name;
    }
}

TEST(Json, SymbolicFieldsAndErrors) {
    auto m = parse_symbolic_spec(R"j({"pieces":[{"interval":"(-inf,inf)","const":"3/2"}]})j");
    EXPECT_EQ(m.eval(0), Rat(3) / 2);
    auto kind = [](const std::string& text) {
        try {
            parse_symbolic_spec(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    EXPECT_EQ(kind(R"j({"pieces":[{"interval":"(-inf,inf)","poly":[1,2]}]})j"), ErrorKind::MalformedMap);
    EXPECT_EQ(kind(R"j({"pieces":[{"interval":"(-inf,inf)","const":1,"moebius":[1,0,0,1]}]})j"), ErrorKind::MalformedMap);
    EXPECT_EQ(kind(R"j({"pieces":[{"interval":"(-inf,inf)"}]})j"), ErrorKind::MalformedMap);
    EXPECT_EQ(kind(R"j({"pieces":[{"interval":"(-inf,inf)","moebius":[1,0,0]}]})j"), ErrorKind::MalformedMap);
    EXPECT_EQ(kind(R"j({"pieces":[{"interval":"(-inf,inf)","moebius":[1.5,0,0,1]}]})j"), ErrorKind::MalformedMap);
    EXPECT_EQ(kind(R"j({"segments":[]})j"), ErrorKind::MalformedMap);
    EXPECT_EQ(kind(R"j({"pieces":)j"), ErrorKind::ParseError);
}

TEST(Json, RationalEncoding) {
    EXPECT_EQ(rat_to_json(Rat(4)).dump(), "4");
    EXPECT_EQ(rat_to_json(Rat(-1) / 3).dump(), "\"-1/3\"");
    EXPECT_EQ(rat_from_json(json("6/4")), Rat(3) / 2);
    EXPECT_EQ(rat_from_json(json(-2)), Rat(-2));
}

TEST(Cli, ClassifyExample) {
    auto j = cli_json({"classify", "--chain", "finite:3", "--map", "[2,3,1]"});
    EXPECT_EQ(j["classes"], json::parse(R"j(["PT","T","I","OP","POP","POPI"])j"));
    EXPECT_EQ(map_from_json(j["map"]), PartialMap::full({2, 3, 1}));
}

TEST(Cli, ClassifyFromSampleFiles) {
    auto j = cli_json({"classify", "--chain", "finite:5", "--map", sample("finite_cycle.json")});
    EXPECT_EQ(j["classes"].size(), 6u);
    auto q = cli_json({"classify", "--chain", "q", "--map", sample("wrap.json")});
    EXPECT_EQ(q["classes"], json::parse(R"j(["PT","T","OP","POP"])j"));
}

TEST(Cli, GreenExample) {
    auto j = cli_json({"green", "--class", "OP", "--rel", "R", "--alpha", "[1,1,2]", "--beta", "[2,2,3]"});
    EXPECT_TRUE(j["holds"].get<bool>());
    EXPECT_TRUE(j["witnesses_verified"].get<bool>());
    auto k = cli_json({"green", "--class", "POI", "--rel", "D", "--alpha", "{1:1,2:2}", "--beta", "{2:2,3:3}", "--chain", "finite:3"});
    EXPECT_TRUE(k["holds"].get<bool>());
}

TEST(Cli, InversePrintsMapsThatParseBack) {
    auto j = cli_json({"inverse", "--chain", "finite:3", "--map", "[2,3,1]", "--construct", "beta"});
    auto b = map_from_json(j["inverse"]);
    EXPECT_EQ(b, PartialMap::full({3, 1, 2}));
    auto again = cli_json({"classify", "--chain", "finite:3", "--map", j["inverse"].dump()});
    EXPECT_EQ(map_from_json(again["map"]), b);
    auto z = cli_json({"inverse", "--chain", "finite:3", "--map", "[2,3,1]", "--construct", "zeta", "--ideal", "{1,2}"});
    EXPECT_EQ(map_from_json(z["inverse"]), PartialMap::full({3, 1, 2}));
}

TEST(Cli, SymbolicActions) {
    auto im = cli_json({"symbolic", "image", "--map", sample("open_image.json")});
    EXPECT_EQ(im["image"], "{(-1,1)}");
    auto reg = cli_json({"symbolic", "regular", "--map", sample("unattained_gap.json")});
    EXPECT_FALSE(reg["verdict"].get<bool>());
    EXPECT_FALSE(reg["condition2"].get<bool>());
    auto inv = cli_json({"symbolic", "inverse", "--map", sample("glued.json")});
    EXPECT_TRUE(inv["aba_equals_a"].get<bool>());
    auto beta = symbolic_from_json(inv["beta"]);
    EXPECT_TRUE(beta.is_full());
    auto dj = cli_json({"symbolic", "djwitness", "--a", "0", "--b", "1", "--c", "0", "--d", "1"});
    EXPECT_TRUE(dj.dump().find("true") != std::string::npos);
    auto bij = cli_json({"symbolic", "bijection", "--from", "(0,1]", "--to", "[0,1)"});
    EXPECT_EQ(bij["decision"], "exists");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli({"classify", "--chain", "finite:3"}).code, 1);
    EXPECT_EQ(cli({"classify", "--chain", "finite:3", "--map", "[1,2"}).code, 1);
    auto bad = cli({"ideal", "--chain", "finite:3", "--map", "[1,3,2]"});
    EXPECT_EQ(bad.code, 2);
    auto err = json::parse(bad.out);
    EXPECT_EQ(err["error"], "NotOrientationPreserving");
    EXPECT_EQ(cli({"symbolic", "inverse", "--map", sample("open_image.json")}).code, 2);
    EXPECT_EQ(cli({"suite", "--name", "no-such-suite"}).code, 2);
    EXPECT_EQ(cli({"suite", "--name", "dj-witness"}).code, 0);

    auto dir = std::filesystem::temp_directory_path() / "chainmorph_bad_fixtures";
    std::filesystem::create_directories(dir);
    for (const auto& e : std::filesystem::directory_iterator(CHAINMORPH_DEFAULT_FIXTURES))
        std::filesystem::copy_file(e.path(), dir / e.path().filename(), std::filesystem::copy_options::overwrite_existing);
    std::ofstream(dir / "counts_OP.json") << "{\n  \"1\": 1,\n  \"2\": 4,\n  \"3\": 24,\n  \"4\": 128,\n  \"5\": 611\n}\n";
    auto failed = cli({"suite", "--name", "golden-counts", "--fixtures", dir.string()});
    EXPECT_EQ(failed.code, 3);
    EXPECT_FALSE(json::parse(failed.out)["pass"].get<bool>());
    std::filesystem::remove_all(dir);
}

TEST(Cli, CountAndEnumerate) {
    auto c = cli_json({"count", "--class", "POPI", "--n", "5"});
    EXPECT_EQ(c["counts"]["5"], 631);
    auto e = cli_json({"enumerate", "--class", "OP", "--n", "2"});
    EXPECT_EQ(e["count"], 4);
    EXPECT_EQ(e["maps"], json::parse(R"j(["[1,1]","[1,2]","[2,1]","[2,2]"])j"));
    EXPECT_EQ(cli({"--max-candidates", "10", "count", "--class", "PT", "--n", "3"}).code, 2);
}

TEST(Cli, OutputFile) {
    auto path = std::filesystem::temp_directory_path() / "chainmorph_out.json";
    std::filesystem::remove(path);
    EXPECT_EQ(cli({"--output", path.string(), "count", "--class", "O", "--n", "3"}).code, 0);
    std::ifstream in(path);
    auto j = json::parse(in);
    EXPECT_EQ(j["counts"]["3"], 10);
    std::filesystem::remove(path);
}
