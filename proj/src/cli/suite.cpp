#include "plucker/cli.hpp"

#include "plucker/charclasses.hpp"
#include "plucker/chowring.hpp"
#include "plucker/pairing.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

namespace plucker::cli {

namespace {

const Json& require(const Json& obj, const char* key)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        throw Error(ErrorKind::InvalidArgument, std::string("missing input \"") + key + "\"");
    return *it;
}

long require_int(const Json& obj, const char* key)
{
    const Json& v = require(obj, key);
    if (!v.is_number_integer())
        throw Error(ErrorKind::InvalidArgument, std::string("input \"") + key + "\" must be an integer");
    return v.get<long>();
}

unsigned require_positive(const Json& obj, const char* key)
{
    const long v = require_int(obj, key);
    if (v < 1)
        throw Error(ErrorKind::InvalidArgument, std::string("input \"") + key + "\" must be >= 1");
    return static_cast<unsigned>(v);
}

Rat require_rat(const Json& obj, const char* key)
{
    const Json& v = require(obj, key);
    if (v.is_number_integer())
        return Rat(v.get<long>());
    if (v.is_string())
        return Rat::from_string(v.get<std::string>());
    throw Error(ErrorKind::InvalidArgument, std::string("input \"") + key + "\" must be a rational");
}

ProjVariety variety_input(const SuiteCase& c, const char* key)
{
    const Json& ref = require(c.inputs, key);
    if (ref.is_string())
        return build_variety(load_variety_spec(c.base_dir / ref.get<std::string>()));
    return build_variety(variety_spec_from_json(ref));
}

Intersection intersection_input(const SuiteCase& c, const char* key)
{
    const Json& j = require(c.inputs, key);
    const Json& kind = require(j, "kind");
    if (kind == "empty")
        return Intersection::empty();
    if (kind == "points")
        return Intersection::points(require_int(j, "count"));
    if (kind == "smooth")
        return Intersection::smooth(require_int(j, "dim"), require_int(j, "chibar"));
    throw Error(ErrorKind::InvalidArgument, "unknown intersection kind " + kind.dump());
}

std::string str(long v) { return std::to_string(v); }
std::string str(const Rat& v) { return v.str(); }
std::string str(const BigInt& v) { return v.get_str(); }
std::string str(bool v) { return v ? "true" : "false"; }

struct Outcome {
    Values values;
    bool internal_ok = true;
};

void add_report(Outcome& o, const PairingReport& r)
{
    o.values.emplace_back("lhs", str(r.lhs));
    o.values.emplace_back("rhs", str(r.rhs));
    o.internal_ok = r.equal;
}

Outcome run_theorem1(const SuiteCase& c)
{
    const ProjVariety s1 = variety_input(c, "s1");
    const ProjVariety s2 = variety_input(c, "s2");
    const PairingReport r =
        theorem1_check(s1, s2, intersection_input(c, "primal"), intersection_input(c, "dual"));
    Outcome o;
    add_report(o, r);
    o.values.emplace_back("c12", str(r.parts.c12));
    o.values.emplace_back("c1p", str(r.parts.c1p));
    o.values.emplace_back("c2p", str(r.parts.c2p));
    o.values.emplace_back("d12", str(r.parts.d12));
    o.values.emplace_back("d1p", str(r.parts.d1p));
    o.values.emplace_back("d2p", str(r.parts.d2p));
    o.values.emplace_back("dual1", to_string(r.dual1));
    o.values.emplace_back("dual2", to_string(r.dual2));
    return o;
}

Outcome run_pairing(const SuiteCase& c)
{
    const ProjVariety s = variety_input(c, "variety");
    const long m = require_int(c.inputs, "m");
    if (m < 0)
        throw Error(ErrorKind::InvalidArgument, "input \"m\" must be >= 0");
    Outcome o;
    add_report(o, pairing_relation(s, static_cast<std::size_t>(m)));
    return o;
}

Outcome run_corollary1(const SuiteCase& c)
{
    const ProjVariety s = variety_input(c, "variety");
    const ResolvedDual dual = resolve_dual(s);
    const long formula = corollary1_deg_dual(s);
    const long direct = dual.variety.kind() == ProjVariety::Kind::Hypersurface ? dual.variety.degree() : 0;
    Outcome o;
    o.values.emplace_back("deg_dual", str(formula));
    o.values.emplace_back("deg_dual_direct", str(direct));
    o.values.emplace_back("dual_source", to_string(dual.source));
    o.internal_ok = formula == direct;
    return o;
}

Outcome run_corollary2(const SuiteCase& c)
{
    const ProjVariety s = variety_input(c, "variety");
    const ResolvedDual dual = resolve_dual(s);
    const long formula = corollary2_chi_bar_dual(s);
    const long direct = chi_bar_of(dual.variety);
    Outcome o;
    o.values.emplace_back("chi_bar_dual", str(formula));
    o.values.emplace_back("chi_bar_dual_direct", str(direct));
    o.values.emplace_back("dual_source", to_string(dual.source));
    o.internal_ok = formula == direct;
    return o;
}

Outcome run_corollary3(const SuiteCase& c)
{
    const ProjVariety s = variety_input(c, "variety");
    const ResolvedDual dual = resolve_dual(s);
    const long formula = corollary3_dual_codim(s);
    const long direct = static_cast<long>(s.ambient_dim() - dual.variety.dim());
    Outcome o;
    o.values.emplace_back("dual_codim", str(formula));
    o.values.emplace_back("dual_codim_direct", str(direct));
    o.internal_ok = formula == direct;
    return o;
}

Outcome run_corollary4(const SuiteCase& c)
{
    Outcome o;
    add_report(o, corollary4_check(variety_input(c, "variety")));
    return o;
}

Outcome run_chow(const SuiteCase& c)
{
    const unsigned n = require_positive(c.inputs, "n");
    const BigInt pp = p_self_intersection(n);
    const BigInt closed = BigInt(sign_power(n)) * (n + 1);
    Outcome o;
    o.values.emplace_back("pp", str(pp));
    o.values.emplace_back("closed_form", str(closed));
    o.internal_ok = pp == closed;
    return o;
}

Outcome run_ext_identity(const SuiteCase& c)
{
    const unsigned n = require_positive(c.inputs, "n");
    const ExtIdentity r =
        ext_identity(n, require_rat(c.inputs, "a"), require_rat(c.inputs, "p1"), require_rat(c.inputs, "p2"));
    Outcome o;
    o.values.emplace_back("expanded", str(r.expanded));
    o.values.emplace_back("bracket", str(r.bracket));
    o.internal_ok = r.equal;
    return o;
}

Outcome run_quadric_chi(const SuiteCase& c)
{
    const unsigned m = require_positive(c.inputs, "m");
    const long closed = chi_quadric(m);
    const long chern = chi_smooth_hypersurface(m + 1, 2);
    Outcome o;
    o.values.emplace_back("chi", str(closed));
    o.values.emplace_back("chi_chern", str(chern));
    o.internal_ok = closed == chern;
    return o;
}

Outcome run_dual(const SuiteCase& c)
{
    const ProjVariety s = variety_input(c, "variety");
    Outcome o;
    if (s.kind() != ProjVariety::Kind::Hypersurface) {
        const ResolvedDual d = resolve_dual(s);
        o.values.emplace_back("dual_dim", str(static_cast<long>(d.variety.dim())));
        return o;
    }
    const DualResult r = dual_hypersurface(s);
    if (const auto* low = std::get_if<LowerDimensional>(&r)) {
        o.values.emplace_back("dual_dim", str(low->hilbert.projdim));
        o.values.emplace_back("dual_degree", str(low->hilbert.degree));
        return o;
    }
    const Poly& g = std::get<Poly>(r);
    o.values.emplace_back("degree", str(static_cast<long>(g.total_degree())));
    o.values.emplace_back("dual", g.str());
    if (s.degree() == 2) {
        const bool match = proportional(g, quadric_dual(quadric_matrix(s.equation())));
        o.values.emplace_back("quadric_oracle", str(match));
        o.internal_ok = o.internal_ok && match;
    }
    if (s.is_plane_curve()) {
        const CurveCensus k = s.census() ? *s.census() : singular_census(s);
        const long d = k.degree;
        const long plucker = d * (d - 1) - 2 * k.delta - 3 * k.kappa;
        o.values.emplace_back("class_formula", str(plucker));
        o.internal_ok = o.internal_ok && plucker == static_cast<long>(g.total_degree());
    }
    return o;
}

Outcome run_census(const SuiteCase& c)
{
    const CurveCensus k = singular_census(variety_input(c, "variety"));
    Outcome o;
    o.values.emplace_back("degree", str(static_cast<long>(k.degree)));
    o.values.emplace_back("nodes", str(k.delta));
    o.values.emplace_back("cusps", str(k.kappa));
    o.values.emplace_back("genus", str(k.geomgenus));
    o.values.emplace_back("chi", str(k.chi));
    o.values.emplace_back("chi_bar", str(k.chibar));
    return o;
}

Outcome run_bidual(const SuiteCase& c)
{
    const bool ok = bidual_check(variety_input(c, "variety"));
    Outcome o;
    o.values.emplace_back("bidual", str(ok));
    o.internal_ok = ok;
    return o;
}

using Runner = std::function<Outcome(const SuiteCase&)>;

const std::map<std::string, Runner>& runners()
{
    static const std::map<std::string, Runner> table = {
        {"theorem1", run_theorem1},     {"pairing", run_pairing},
        {"corollary1", run_corollary1}, {"corollary2", run_corollary2},
        {"corollary3", run_corollary3}, {"corollary4", run_corollary4},
        {"chow", run_chow},             {"ext-identity", run_ext_identity},
        {"quadric-chi", run_quadric_chi}, {"dual", run_dual},
        {"census", run_census},         {"bidual", run_bidual},
    };
    return table;
}

bool values_equal(const std::string& a, const std::string& b)
{
    if (a == b)
        return true;
    try {
        return Rat::from_string(a) == Rat::from_string(b);
    } catch (const Error&) {
        return false;
    }
}

std::string expected_string(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    return v.dump();
}

} // namespace

bool is_input_error(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownVariable:
    case ErrorKind::VariableMismatch:
    case ErrorKind::NegativeExponent:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::NotHomogeneous:
    case ErrorKind::InvalidArgument:
    case ErrorKind::Io:
        return true;
    default:
        return false;
    }
}

SuiteConfig suite_from_json(const Json& j, const std::filesystem::path& base_dir)
{
    const Json* cases = &j;
    if (j.is_object()) {
        const auto it = j.find("cases");
        if (it == j.end())
            throw Error(ErrorKind::InvalidArgument, "suite needs a \"cases\" array");
        cases = &*it;
    }
    if (!cases->is_array())
        throw Error(ErrorKind::InvalidArgument, "suite cases must be an array");
    SuiteConfig suite;
    for (const Json& e : *cases) {
        if (!e.is_object())
            throw Error(ErrorKind::InvalidArgument, "suite case must be an object");
        SuiteCase c;
        c.kind = require(e, "kind").get<std::string>();
        if (runners().count(c.kind) == 0)
            throw Error(ErrorKind::InvalidArgument, "unknown case kind \"" + c.kind + "\"");
        c.name = e.value("name", c.kind + "#" + std::to_string(suite.cases.size()));
        c.inputs = e.value("inputs", Json::object());
        c.expected = e.value("expected", Json::object());
        if (!c.expected.is_object())
            throw Error(ErrorKind::InvalidArgument, "case \"" + c.name + "\": expected must be an object");
        c.slow = e.value("slow", false);
        c.base_dir = base_dir;
        suite.cases.push_back(std::move(c));
    }
    return suite;
}

SuiteConfig load_suite(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + file.string());
    Json j;
    try {
        j = Json::parse(in, nullptr, true, true);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Syntax, file.string() + ": " + e.what());
    }
    return suite_from_json(j, file.parent_path());
}

CaseReport run_case(const SuiteCase& c, const RunOptions& opts)
{
    CaseReport r;
    r.name = c.name;
    r.kind = c.kind;
    for (const auto& [key, v] : c.expected.items())
        r.expected.emplace_back(key, expected_string(v));
    if (c.slow && !opts.include_slow) {
        r.skipped = true;
        r.pass = true;
        return r;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = runners().at(c.kind)(c);
        r.computed = o.values;
        bool ok = o.internal_ok;
        for (const auto& [key, want] : r.expected) {
            bool found = false;
            for (const auto& [k, got] : r.computed)
                if (k == key) {
                    found = true;
                    ok = ok && values_equal(got, want);
                }
            ok = ok && found;
        }
        r.pass = ok;
    } catch (const Error& e) {
        r.error = e.what();
        r.error_kind = e.kind();
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CaseReport> run_suite(const SuiteConfig& suite, const RunOptions& opts)
{
    std::vector<CaseReport> reports(suite.cases.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(opts.jobs, suite.cases.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < suite.cases.size(); i = next++)
            reports[i] = run_case(suite.cases[i], opts);
    };
    if (workers <= 1) {
        work();
        return reports;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    return reports;
}

int exit_code(const std::vector<CaseReport>& reports)
{
    int code = 0;
    for (const auto& r : reports) {
        if (r.error_kind && is_input_error(*r.error_kind))
            return 2;
        if (!r.pass)
            code = 1;
    }
    return code;
}

unsigned default_jobs()
{
    if (const char* env = std::getenv("PLUCKER_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(v);
    }
    return 1;
}

} // namespace plucker::cli
