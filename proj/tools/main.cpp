#include "plucker/charclasses.hpp"
#include "plucker/chowring.hpp"
#include "plucker/cli.hpp"
#include "plucker/pairing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace plucker;
using namespace plucker::cli;

namespace {

struct VarietyArgs {
    std::string file;
    std::string poly;
    std::size_t ambient = 2;

    void attach(CLI::App* app)
    {
        app->add_option("file", file, "Variety JSON file");
        app->add_option("--poly", poly, "Homogeneous polynomial in x0..xn (instead of a file)");
        app->add_option("-n,--ambient", ambient, "Ambient dimension for --poly")->check(CLI::PositiveNumber);
    }

    ProjVariety load() const
    {
        if (!poly.empty()) {
            VarietySpec spec;
            spec.ambient_dim = ambient;
            spec.kind = "hypersurface";
            spec.polynomial = poly;
            return build_variety(spec);
        }
        if (file.empty())
            throw Error(ErrorKind::InvalidArgument, "give a variety file or --poly");
        return build_variety(load_variety_spec(file));
    }
};

std::string point_str(const RationalPoint& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? ":" : "") + p[i].str();
    return out + "]";
}

void print_census(const CurveCensus& c)
{
    std::cout << "degree: " << c.degree << '\n'
              << "nodes: " << c.delta << '\n'
              << "cusps: " << c.kappa << '\n'
              << "genus: " << c.geomgenus << '\n'
              << "chi: " << c.chi << '\n'
              << "chi_bar: " << c.chibar << '\n';
    for (const auto& p : c.nodes)
        std::cout << "node: " << point_str(p) << '\n';
    for (const auto& p : c.cusps)
        std::cout << "cusp: " << point_str(p) << '\n';
}

int cmd_dual(const VarietyArgs& args)
{
    const ProjVariety s = args.load();
    if (s.kind() != ProjVariety::Kind::Hypersurface) {
        const ResolvedDual d = resolve_dual(s);
        std::cout << "dual: linear subspace of dimension " << d.variety.dim() << '\n';
        return 0;
    }
    const DualResult r = dual_hypersurface(s);
    if (const auto* low = std::get_if<LowerDimensional>(&r)) {
        std::cout << "dual: not a hypersurface\n"
                  << "dimension: " << low->hilbert.projdim << '\n'
                  << "degree: " << low->hilbert.degree << '\n';
        for (const auto& g : low->ideal.gens())
            std::cout << "generator: " << g.str() << '\n';
        return 0;
    }
    const Poly& g = std::get<Poly>(r);
    std::cout << "degree: " << g.total_degree() << '\n' << "dual: " << g.str() << '\n';
    return 0;
}

int cmd_census(const VarietyArgs& args)
{
    print_census(singular_census(args.load()));
    return 0;
}

int cmd_chi(const VarietyArgs& args, unsigned quadric)
{
    if (quadric > 0) {
        std::cout << "chi: " << chi_quadric(quadric) << '\n';
        return 0;
    }
    std::cout << "chi_bar: " << chi_bar_of(args.load()) << '\n';
    return 0;
}

int cmd_profile(const VarietyArgs& args)
{
    const SectionProfile p = section_profile(args.load());
    for (std::size_t k = 0; k < p.values.size(); ++k)
        std::cout << "chi_bar(S^" << k << "): " << p.values[k] << '\n';
    return 0;
}

struct VerifyArgs {
    std::string suite;
    bool include_slow = false;
    unsigned jobs = 0;
    std::string output;
    std::string format = "text";
    bool timings = false;
};

int cmd_verify(const VerifyArgs& args)
{
    const Format format = parse_format(args.format);
    const SuiteConfig suite = load_suite(args.suite);
    RunOptions opts;
    opts.include_slow = args.include_slow;
    opts.jobs = args.jobs > 0 ? args.jobs : default_jobs();
    const auto reports = run_suite(suite, opts);
    if (args.output.empty()) {
        emit_report(reports, format, std::cout, args.timings);
    } else {
        std::ofstream out(args.output, std::ios::binary);
        if (!out)
            throw Error(ErrorKind::Io, "cannot write " + args.output);
        emit_report(reports, format, out, args.timings);
    }
    for (const auto& r : reports)
        if (r.error)
            std::cerr << r.name << ": " << *r.error << '\n';
    return exit_code(reports);
}

struct ChowArgs {
    bool pp = false;
    bool ext = false;
    unsigned n = 1;
    std::string a = "0", p1 = "0", p2 = "0";
};

int cmd_chow(const ChowArgs& args)
{
    if (args.pp == args.ext)
        throw Error(ErrorKind::InvalidArgument, "choose exactly one of --pp and --ext-identity");
    if (args.pp) {
        std::cout << "P.P: " << p_self_intersection(args.n).get_str() << '\n';
        return 0;
    }
    const ExtIdentity r =
        ext_identity(args.n, Rat::from_string(args.a), Rat::from_string(args.p1), Rat::from_string(args.p2));
    std::cout << "expanded: " << r.expanded << '\n'
              << "bracket: " << r.bracket << '\n'
              << "equal: " << (r.equal ? "true" : "false") << '\n';
    return r.equal ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Pluecker-type identities for projective varieties and their duals"};
    app.require_subcommand(1);

    VarietyArgs dual_args, census_args, chi_args, profile_args;
    unsigned quadric = 0;
    auto* dual = app.add_subcommand("dual", "Dual hypersurface by elimination");
    dual_args.attach(dual);
    auto* census = app.add_subcommand("census", "Nodes and cusps of a plane curve");
    census_args.attach(census);
    auto* chi = app.add_subcommand("chi", "Euler characteristic weighted by Euler obstruction");
    chi_args.attach(chi);
    chi->add_option("--quadric", quadric, "Smooth quadric of this dimension instead of a variety");
    auto* profile = app.add_subcommand("profile", "chi_bar of generic linear sections");
    profile_args.attach(profile);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", verify_args.suite, "Suite JSON file")->required();
    verify->add_flag("--include-slow", verify_args.include_slow, "Also run cases marked slow");
    verify->add_option("-j,--jobs", verify_args.jobs, "Concurrent cases (default PLUCKER_JOBS or 1)");
    verify->add_option("-o,--output", verify_args.output, "Write the report to a file");
    verify->add_option("--format", verify_args.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_flag("--timings", verify_args.timings, "Include wall times in the report");

    ChowArgs chow_args;
    auto* chow = app.add_subcommand("chow", "Chow ring of P(T*P^n + O)");
    chow->add_flag("--pp", chow_args.pp, "Self-intersection of the zero section");
    chow->add_flag("--ext-identity", chow_args.ext, "Check the expanded pairing identity");
    chow->add_option("-n", chow_args.n, "Base dimension")->check(CLI::PositiveNumber);
    chow->add_option("--a", chow_args.a, "C1.C2");
    chow->add_option("--p1", chow_args.p1, "C1.P");
    chow->add_option("--p2", chow_args.p2, "C2.P");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dual)
            return cmd_dual(dual_args);
        if (*census)
            return cmd_census(census_args);
        if (*chi)
            return cmd_chi(chi_args, quadric);
        if (*profile)
            return cmd_profile(profile_args);
        if (*verify)
            return cmd_verify(verify_args);
        if (*chow)
            return cmd_chow(chow_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
