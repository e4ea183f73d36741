#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chainmorph/chainmorph.hpp"

using namespace chainmorph;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;
constexpr int exit_suite_failed = 3;

struct ChainSpec {
    bool rational = false;
    int n = 0;
};

ChainSpec parse_chain(const std::string& s) {
    if (s == "q" || s == "Q") return {true, 0};
    const std::string prefix = "finite:";
    if (s.rfind(prefix, 0) == 0 && is_integer_text(s.substr(prefix.size()))) {
        int n = std::stoi(s.substr(prefix.size()));
        if (n >= 0) return {false, n};
    }
    throw Error(ErrorKind::ParseError, "chain must be finite:<n> or q, got '" + s + "'");
}

// "@path" reads the argument from a file.
std::string read_arg(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PartialMap finite_map(const ChainSpec& c, const std::string& spec) {
    if (c.rational) throw Error(ErrorKind::ParseError, "expected a finite chain");
    return parse_map_spec(read_arg(spec), c.n);
}

PiecewiseMoebiusMap symbolic_map(const std::string& spec) { return parse_symbolic_spec(read_arg(spec)); }

json ideals_json(const std::vector<Subset>& ys) {
    json a = json::array();
    for (const auto& y : ys) a.push_back(y);
    return a;
}

struct Options {
    std::string chain = "finite:3";
    std::string map, alpha, beta;
    std::string criterion = "op";
    std::string construct = "beta";
    std::string ideal;
    std::string cls = "op";
    std::string rel = "L";
    std::string output;
    std::string suite_name;
    std::string fixtures = CHAINMORPH_DEFAULT_FIXTURES;
    std::string from, to;
    std::string a = "0", b = "1", c = "0", d = "1";
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 20240611;
    std::uint64_t max_candidates = 0;
    bool all = false;
    bool list = false;
};

json cmd_classify(const Options& o) {
    auto c = parse_chain(o.chain);
    if (c.rational) {
        auto m = symbolic_map(o.map);
        return json{{"map", symbolic_to_json(m)}, {"classes", tags_to_json(classify_symbolic(m))}};
    }
    auto m = finite_map(c, o.map);
    return json{{"map", map_to_json(m)}, {"classes", tags_to_json(classify(m))}};
}

json cmd_ideal(const Options& o) {
    auto c = parse_chain(o.chain);
    if (c.rational) {
        auto m = symbolic_map(o.map);
        auto y = is_orientation_preserving_symbolic(m);
        if (!y) throw Error(ErrorKind::NotOrientationPreserving, "map admits no ideal");
        return json{{"ideal", format_union(*y)}};
    }
    auto m = finite_map(c, o.map);
    auto ys = find_ideals(m);
    if (ys.empty()) throw Error(ErrorKind::NotOrientationPreserving, m.to_string() + " is not orientation-preserving");
    json out{{"map", map_to_json(m)}, {"ideals", ideals_json(ys)}, {"constant", m.is_constant()}};
    if (ys.size() == 1 && !ys.front().empty()) {
        auto g = glued_point(m, ys.front());
        out["glued_point"] = g ? json(*g) : json(nullptr);
    }
    return out;
}

RegCriterionReport criterion_for(const std::string& which, const ImageSet& im) {
    if (which == "o") return reg_o_criterion(im);
    if (which == "op") return reg_op_criterion(im);
    throw Error(ErrorKind::ParseError, "criterion must be o or op");
}

json cmd_regular(const Options& o) {
    auto c = parse_chain(o.chain);
    if (c.rational) return criterion_to_json(criterion_for(o.criterion, ImageSet{image_of(symbolic_map(o.map))}));
    auto m = finite_map(c, o.map);
    return criterion_to_json(criterion_for(o.criterion, finite_image(m)));
}

json cmd_inverse(const Options& o) {
    auto c = parse_chain(o.chain);
    if (c.rational) {
        if (o.construct != "beta") throw Error(ErrorKind::ParseError, "the rational chain supports --construct beta only");
        std::optional<IntervalUnion> y;
        if (!o.ideal.empty()) y = parse_union(o.ideal);
        return symbolic_inverse_to_json(build_op_inverse_symbolic(symbolic_map(o.map), y));
    }
    auto m = finite_map(c, o.map);
    std::optional<Subset> y;
    if (!o.ideal.empty()) y = parse_subset(c.n, o.ideal);
    PartialMap inv(c.n);
    if (o.construct == "zeta") {
        require_pop(m);
        inv = zeta_inverse(m, y ? *y : find_ideals(m).front());
    } else if (o.construct == "beta") {
        inv = build_op_inverse(m, y);
    } else {
        throw Error(ErrorKind::ParseError, "construct must be zeta or beta");
    }
    auto r = inverse_report(m, inv);
    return json{{"map", map_to_json(m)}, {"inverse", map_to_json(inv)}, {"aba_equals_a", r.aba_equals_a}, {"bab_equals_b", r.bab_equals_b}};
}

json cmd_green(const Options& o) {
    auto c = parse_chain(o.chain);
    auto a = finite_map(c, o.alpha);
    auto b = finite_map(c, o.beta);
    auto rel = parse_relation(o.rel);
    std::string upper;
    for (char ch : o.cls) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    auto tag = parse_tag(upper);
    auto v = tag == ClassTag::OP ? green_check_op(a, b, rel) : green_check_regular(a, b, rel, tag);
    auto out = verdict_to_json(v);
    out["class"] = upper;
    return out;
}

ClassTag tag_arg(const std::string& s) {
    std::string upper;
    for (char ch : s) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return parse_tag(upper);
}

int size_arg(const Options& o) {
    if (o.n > 0) return o.n;
    auto c = parse_chain(o.chain);
    if (c.rational) throw Error(ErrorKind::ParseError, "enumeration needs a finite chain");
    return c.n;
}

json cmd_enumerate(const Options& o, std::uint64_t max) {
    auto tag = tag_arg(o.cls);
    int n = size_arg(o);
    json maps = json::array();
    for_each_in_class(tag, n, [&](const PartialMap& m) { maps.push_back(m.to_string()); }, max);
    return json{{"class", std::string(tag_name(tag))}, {"n", n}, {"count", maps.size()}, {"maps", maps}};
}

json cmd_count(const Options& o, std::uint64_t max) {
    int n = size_arg(o);
    auto counts_for = [&](ClassTag t) {
        json j = json::object();
        for (int k = 1; k <= n; ++k) j[std::to_string(k)] = count_class(t, k, max);
        return j;
    };
    if (o.all) {
        json out = json::object();
        for (auto t : all_tags) out[std::string(tag_name(t))] = counts_for(t);
        return out;
    }
    auto tag = tag_arg(o.cls);
    return json{{"class", std::string(tag_name(tag))}, {"counts", counts_for(tag)}};
}

json cmd_symbolic(const std::string& action, const Options& o) {
    if (action == "image") return json{{"image", format_union(image_of(symbolic_map(o.map)))}};
    if (action == "classify") {
        auto m = symbolic_map(o.map);
        auto y = is_orientation_preserving_symbolic(m);
        return json{{"classes", tags_to_json(classify_symbolic(m))}, {"ideal", y ? json(format_union(*y)) : json(nullptr)}};
    }
    if (action == "regular") return criterion_to_json(criterion_for(o.criterion, ImageSet{image_of(symbolic_map(o.map))}));
    if (action == "inverse") {
        std::optional<IntervalUnion> y;
        if (!o.ideal.empty()) y = parse_union(o.ideal);
        return symbolic_inverse_to_json(build_op_inverse_symbolic(symbolic_map(o.map), y));
    }
    if (action == "djwitness") return dj_to_json(dj_gap_witness(parse_rat(o.a), parse_rat(o.b), parse_rat(o.c), parse_rat(o.d)));
    if (action == "bijection") return bijection_to_json(orientation_bijection_exists(parse_interval(o.from), parse_interval(o.to)));
    throw Error(ErrorKind::ParseError, "unknown symbolic action '" + action + "'");
}

void emit(const json& j, const std::string& path) {
    auto text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orientation-preserving transformations of chains"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--output", o.output, "Write the JSON result to this file");
    app.add_option("--max-candidates", o.max_candidates, "Enumeration ceiling (also CHAINMORPH_MAX_CANDIDATES)");

    auto chain_opt = [&](CLI::App* s) { s->add_option("--chain", o.chain, "finite:<n> or q")->capture_default_str(); };
    auto map_opt = [&](CLI::App* s) { s->add_option("--map", o.map, "Map spec, or @file")->required(); };

    auto* classify_cmd = app.add_subcommand("classify", "List the classes a map belongs to");
    chain_opt(classify_cmd);
    map_opt(classify_cmd);

    auto* ideal_cmd = app.add_subcommand("ideal", "Ideals witnessing orientation preservation");
    chain_opt(ideal_cmd);
    map_opt(ideal_cmd);

    auto* regular_cmd = app.add_subcommand("regular", "Evaluate a regularity criterion on the image");
    chain_opt(regular_cmd);
    map_opt(regular_cmd);
    regular_cmd->add_option("--criterion", o.criterion, "o or op")->capture_default_str();

    auto* inverse_cmd = app.add_subcommand("inverse", "Build an inner inverse");
    chain_opt(inverse_cmd);
    map_opt(inverse_cmd);
    inverse_cmd->add_option("--construct", o.construct, "zeta or beta")->capture_default_str();
    inverse_cmd->add_option("--ideal", o.ideal, "Ideal to use, e.g. \"{1,2}\" or an interval union");

    auto* green_cmd = app.add_subcommand("green", "Decide a Green's relation between two maps");
    chain_opt(green_cmd);
    green_cmd->add_option("--class", o.cls, "op, po, pop, poi or popi")->capture_default_str();
    green_cmd->add_option("--rel", o.rel, "L, R, H, D or J")->capture_default_str();
    green_cmd->add_option("--alpha", o.alpha, "First map")->required();
    green_cmd->add_option("--beta", o.beta, "Second map")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every member of a class");
    chain_opt(enumerate_cmd);
    enumerate_cmd->add_option("--class", o.cls, "Class tag")->required();
    enumerate_cmd->add_option("--n", o.n, "Chain size (overrides --chain)");

    auto* count_cmd = app.add_subcommand("count", "Count class members for sizes 1..n");
    chain_opt(count_cmd);
    count_cmd->add_option("--class", o.cls, "Class tag");
    count_cmd->add_option("--n", o.n, "Largest chain size (overrides --chain)");
    count_cmd->add_flag("--all", o.all, "Count all nine classes");

    auto* symbolic_cmd = app.add_subcommand("symbolic", "Piecewise Moebius maps of the rationals");
    std::string action;
    symbolic_cmd->add_option("action", action, "image, classify, regular, inverse, djwitness or bijection")->required();
    symbolic_cmd->add_option("--map", o.map, "Symbolic map spec (JSON), or @file");
    symbolic_cmd->add_option("--criterion", o.criterion, "o or op")->capture_default_str();
    symbolic_cmd->add_option("--ideal", o.ideal, "Ideal as an interval union");
    symbolic_cmd->add_option("--a", o.a, "Left end of the open interval")->capture_default_str();
    symbolic_cmd->add_option("--b", o.b, "Right end of the open interval")->capture_default_str();
    symbolic_cmd->add_option("--c", o.c, "Left end of the closed interval")->capture_default_str();
    symbolic_cmd->add_option("--d", o.d, "Right end of the closed interval")->capture_default_str();
    symbolic_cmd->add_option("--from", o.from, "Source interval");
    symbolic_cmd->add_option("--to", o.to, "Target interval");

    auto* suite_cmd = app.add_subcommand("suite", "Run a verification suite");
    suite_cmd->add_option("--name", o.suite_name, "Suite name");
    suite_cmd->add_flag("--list", o.list, "List the registered suites");
    suite_cmd->add_option("--n", o.n, "Chain size");
    suite_cmd->add_option("--class", o.cls, "Class for green-crossval");
    suite_cmd->add_option("--samples", o.samples, "Sample count for randomized parts");
    suite_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    suite_cmd->add_option("--fixtures", o.fixtures, "Directory holding counts_<tag>.json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    const std::uint64_t max = o.max_candidates > 0 ? o.max_candidates : configured_max_candidates();
    try {
        json out;
        int code = exit_ok;
        if (*classify_cmd) out = cmd_classify(o);
        else if (*ideal_cmd) out = cmd_ideal(o);
        else if (*regular_cmd) out = cmd_regular(o);
        else if (*inverse_cmd) out = cmd_inverse(o);
        else if (*green_cmd) out = cmd_green(o);
        else if (*enumerate_cmd) out = cmd_enumerate(o, max);
        else if (*count_cmd) out = cmd_count(o, max);
        else if (*symbolic_cmd) out = cmd_symbolic(action, o);
        else if (*suite_cmd) {
            if (o.list) {
                json names = json::array();
                for (const auto& [name, fn] : suite_registry()) names.push_back(name);
                out = json{{"suites", names}};
            } else {
                if (o.suite_name.empty()) throw Error(ErrorKind::ParseError, "suite needs --name or --list");
                SuiteParams p;
                p.n = o.n;
                if (suite_cmd->count("--class")) p.cls = tag_arg(o.cls);
                p.samples = o.samples;
                p.seed = o.seed;
                p.fixture_dir = o.fixtures;
                p.max_candidates = max;
                auto r = run_suite(o.suite_name, p);
                out = report_to_json(r);
                if (!r.pass) code = exit_suite_failed;
            }
        }
        emit(out, o.output);
        return code;
    } catch (const Error& e) {
        std::cout << error_to_json(e).dump(2) << "\n";
        return e.kind() == ErrorKind::ParseError ? exit_usage : exit_domain;
    }
}
