// qbruhat: quasiminors, Gauss and Bruhat factorizations, twists, and the
// verification suites from the command line.
//
// Exit codes: 0 ok, 1 property failure, 2 usage or parse error,
// 3 not generic (after the retry budget for suites).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <qbruhat/fixtures.hpp>
#include <qbruhat/qbruhat.hpp>
#include <qbruhat/suites.hpp>

using namespace qbruhat;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, property_failure = 1, usage = 2, not_generic = 3 };

struct Options {
    std::string input;
    std::string scalar = "quaternion";
    std::string word;
    std::string suite = "all";
    std::string fixture = "all";
    std::string kind = "upper";
    std::string u, v;
    int n = 3;
    int trials = 100;
    int row = 1, col = 1, k = 1;
    long bound = 3;
    std::uint64_t seed = 1;
};

/// --input is a path unless it already looks like JSON.
std::string read_input(const std::string& arg)
{
    if (arg.empty())
        throw ParseError("--input is required");
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{')
        return arg;
    std::ifstream in(arg);
    if (!in)
        throw ParseError("cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int retry_budget()
{
    const char* env = std::getenv("QBRUHAT_RETRY_BUDGET");
    if (!env || !*env)
        return 100;
    try {
        int b = std::stoi(env);
        if (b < 0)
            throw ParseError("QBRUHAT_RETRY_BUDGET must be >= 0");
        return b;
    }
    catch (const std::logic_error&) {
        throw ParseError("QBRUHAT_RETRY_BUDGET is not an integer");
    }
}

template <DivisionRing S>
json scalars_json(const std::vector<S>& v)
{
    json a = json::array();
    for (const auto& s : v)
        a.push_back(to_string(s));
    return a;
}

Permutation permutation_arg(const std::string& text, int n, const char* flag)
{
    if (text.empty())
        return Permutation::identity(n);
    auto p = Permutation::parse(text);
    if (p.size() != n)
        throw ParseError(std::string(flag) + " has degree " + std::to_string(p.size()) + ", matrix has " +
                         std::to_string(n));
    return p;
}

template <DivisionRing S>
int run_matrix_command(const std::string& cmd, const Options& o)
{
    const Matrix<S> x = parse_matrix<S>(read_input(o.input));
    if (cmd == "quasidet") {
        std::cout << to_string(quasidet(x, o.row, o.col)) << "\n";
        return ok;
    }
    if (!x.square())
        throw ShapeMismatch("expected a square matrix");
    const int n = x.rows();
    if (cmd == "minor") {
        auto u = permutation_arg(o.u, n, "--u"), v = permutation_arg(o.v, n, "--v");
        std::cout << to_string(quasiminor_indexed(x, SnMinorSpec{u, v, o.k})) << "\n";
        return ok;
    }
    if (cmd == "ldu") {
        auto g = ldu(x);
        std::cout << json{{"lower", to_json(g.lower)}, {"diag", to_json(g.diag)}, {"upper", to_json(g.upper)}}.dump(2)
                  << "\n";
        return ok;
    }
    if (cmd == "classify") {
        auto c = classify(x);
        std::cout << json{{"u", c.u.str()}, {"v", c.v.str()}}.dump() << "\n";
        return ok;
    }
    if (cmd == "twist") {
        auto u = permutation_arg(o.u, n, "--u"), v = permutation_arg(o.v, n, "--v");
        std::cout << to_json(twist_general(x, u, v)).dump(2) << "\n";
        return ok;
    }
    if (cmd == "recover") {
        if (o.word.empty())
            throw ParseError("recover needs --word");
        auto w = DoubleWord::parse(o.word, n);
        auto out = recover_params(x, w);
        std::cout << json{{"word", w.str()}, {"h", scalars_json(out.h)}, {"t", scalars_json(out.t)}}.dump(2) << "\n";
        return ok;
    }
    if (cmd == "factor") {
        json r;
        if (o.kind == "upper" || o.kind == "positive") {
            std::vector<ClearingStep<S>> steps;
            Matrix<S> rest;
            if (o.kind == "upper") {
                auto f = upper_factorize(x);
                steps = f.steps;
                rest = f.residual();
            }
            else {
                auto f = factor_u_w0(x);
                steps = f.steps;
                rest = f.lower_part;
            }
            json params = json::array();
            for (const auto& s : steps)
                params.push_back({{"m", s.m}, {"k", s.k}, {"t", to_string(s.t)}});
            r = {{"kind", o.kind}, {"t", params}, {"lower", to_json(rest)}};
        }
        else if (o.kind == "negative") {
            auto f = factor_w0_v(x);
            json params = json::array();
            for (const auto& p : f.tau)
                params.push_back({{"m", p.m}, {"k", p.k}, {"tau", to_string(p.tau)}});
            r = {{"kind", o.kind}, {"h", scalars_json(f.h)}, {"tau", params}, {"upper", to_json(f.upper_part)}};
        }
        else if (o.kind == "unipotent") {
            auto t = solve_standard_unipotent(x);
            if (!(product_map(standard_unipotent_word(n), t) == x))
                throw WrongCell("x is not a generic upper unitriangular matrix");
            r = {{"kind", o.kind}, {"word", standard_unipotent_word(n).str()}, {"t", scalars_json(t)}};
        }
        else
            throw ParseError("unknown --kind '" + o.kind + "'");
        std::cout << r.dump(2) << "\n";
        return ok;
    }
    throw ParseError("unknown command '" + cmd + "'");
}

int run_verify(const Options& o)
{
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else
        names.push_back(o.suite);
    const int budget = retry_budget();
    int status = ok;
    for (const auto& name : names) {
        auto r = run_suite(name, o.n, o.trials, o.seed, o.bound, budget);
        std::cout << r.suite << " n=" << r.n << " trials=" << r.trials << " passed=" << r.passed
                  << " failed=" << r.failed << " exhausted=" << r.exhausted << " checks=" << r.checks << "\n";
        if (r.counterexample)
            std::cout << "counterexample " << r.counterexample->dump() << "\n";
        if (r.failed > 0)
            status = property_failure;
        else if (r.exhausted > 0 && status == ok)
            status = not_generic;
    }
    return status;
}

template <DivisionRing S>
bool print_fixture(const Fixture<S>& f)
{
    bool all = true;
    for (const auto& c : f.checks) {
        all = all && c.holds();
        std::cout << "  " << c.name << " = " << to_string(c.rhs) << (c.holds() ? "" : "   FAILED: expected " + to_string(c.lhs))
                  << "\n";
    }
    return all;
}

int run_demo(const Options& o)
{
    static const std::vector<std::string> known{"borel3", "gl3", "sl4", "negative3"};
    std::vector<std::string> names;
    if (o.fixture == "all")
        names = known;
    else if (std::find(known.begin(), known.end(), o.fixture) != known.end())
        names.push_back(o.fixture);
    else
        throw ParseError("unknown fixture '" + o.fixture + "' (borel3, gl3, sl4, negative3, all)");

    ParamSource<RationalFunction> symbol = [](const std::string& name) { return RationalFunction::variable(name); };
    Sampler rng(o.seed);
    ParamSource<Quaternion> sample = [&rng, &o](const std::string&) { return rng.quaternion(o.bound); };

    auto replay = [&](auto&& build) {
        auto sym = build(symbol);
        std::cout << sym.name << " (symbolic)\n";
        bool a = print_fixture(sym);
        auto num = build(sample);
        bool b = num.all_hold();
        std::cout << num.name << " (quaternion, seed " << o.seed << "): " << num.checks.size() << " checks "
                  << (b ? "hold" : "FAIL") << "\n";
        if (!b)
            print_fixture(num);
        return a && b;
    };
    bool all = true;
    for (const auto& name : names) {
        if (name == "borel3")
            all &= replay([](const auto& p) { return borel_gl3_fixture(p); });
        else if (name == "gl3")
            all &= replay([](const auto& p) { return gl3_fixture(p); });
        else if (name == "sl4")
            all &= replay([](const auto& p) { return unipotent_gl4_fixture(p); });
        else
            all &= replay([](const auto& p) { return negative_standard_gl3_fixture(p); });
    }
    return all ? ok : property_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quasiminors and factorizations on double Bruhat cells over division rings"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_scalar = [&](CLI::App* c) {
        c->add_option("--scalar", o.scalar, "Scalar ring")->check(CLI::IsMember({"rational", "quaternion"}));
    };
    auto add_input = [&](CLI::App* c) {
        c->add_option("--input", o.input, "Matrix JSON file or inline JSON")->required();
        add_scalar(c);
    };

    auto* quasidet_cmd = app.add_subcommand("quasidet", "Quasideterminant |A|_{row,col}");
    add_input(quasidet_cmd);
    quasidet_cmd->add_option("--row", o.row, "Row index (1-based)");
    quasidet_cmd->add_option("--col", o.col, "Column index (1-based)");

    auto* minor_cmd = app.add_subcommand("minor", "Positive quasiminor Delta^k_{u,v}");
    add_input(minor_cmd);
    minor_cmd->add_option("--u", o.u, "Row permutation, e.g. [2,1,3]");
    minor_cmd->add_option("--v", o.v, "Column permutation");
    minor_cmd->add_option("--k", o.k, "Level")->check(CLI::PositiveNumber);

    auto* ldu_cmd = app.add_subcommand("ldu", "Gauss decomposition lower * diagonal * upper");
    add_input(ldu_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "Double Bruhat cell (u, v) of a matrix");
    add_input(classify_cmd);

    auto* twist_cmd = app.add_subcommand("twist", "Twist psi^{u,v}");
    add_input(twist_cmd);
    twist_cmd->add_option("--u", o.u, "Positive-cell permutation");
    twist_cmd->add_option("--v", o.v, "Negative-cell permutation");

    auto* factor_cmd = app.add_subcommand("factor", "Factorizations of a matrix");
    add_input(factor_cmd);
    factor_cmd->add_option("--kind", o.kind, "upper, positive (G^{u,w0}), negative (G^{w0,v}) or unipotent")
        ->check(CLI::IsMember({"upper", "positive", "negative", "unipotent"}));

    auto* recover_cmd = app.add_subcommand("recover", "Recover (h, t) along a double reduced word");
    add_input(recover_cmd);
    recover_cmd->add_option("--word", o.word, "Signed letters, e.g. -2,-1,1")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run property suites over random quaternion matrices");
    verify_cmd->add_option("--suite", o.suite, "Suite name or 'all'");
    verify_cmd->add_option("--n", o.n, "Matrix size")->check(CLI::Range(2, 8));
    verify_cmd->add_option("--trials", o.trials, "Trials per suite")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", o.seed, "Seed");
    verify_cmd->add_option("--bound", o.bound, "Component bound for sampled scalars")->check(CLI::PositiveNumber);

    auto* demo_cmd = app.add_subcommand("demo", "Replay the worked factorization examples");
    demo_cmd->add_option("--fixture", o.fixture, "borel3, gl3, sl4, negative3 or all");
    demo_cmd->add_option("--seed", o.seed, "Seed for the quaternion replay");
    demo_cmd->add_option("--bound", o.bound, "Component bound for the quaternion replay")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "verify") {
            if (o.suite != "all" &&
                std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
                throw ParseError("unknown suite '" + o.suite + "'");
            return run_verify(o);
        }
        if (cmd == "demo")
            return run_demo(o);
        return o.scalar == "rational" ? run_matrix_command<Rational>(cmd, o) : run_matrix_command<Quaternion>(cmd, o);
    }
    catch (const NotGeneric& e) {
        std::cerr << e.what() << "\n";
        return not_generic;
    }
    catch (const ZeroInverse& e) {
        std::cerr << e.what() << "\n";
        return not_generic;
    }
    catch (const IdentityViolation& e) {
        std::cerr << e.what() << "\n";
        return property_failure;
    }
    catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return usage;
    }
}
