#include "plucker/cli.hpp"

#include "plucker/parse.hpp"

#include <fstream>

namespace plucker::cli {

VarietySpec variety_spec_from_json(const Json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::InvalidArgument, "variety must be a JSON object");
    VarietySpec spec;
    const auto n = j.find("ambient_dim");
    if (n == j.end() || !n->is_number_unsigned())
        throw Error(ErrorKind::InvalidArgument, "variety needs a non-negative integer \"ambient_dim\"");
    spec.ambient_dim = n->get<std::size_t>();
    const auto kind = j.find("kind");
    if (kind == j.end() || !kind->is_string())
        throw Error(ErrorKind::InvalidArgument, "variety needs a string \"kind\"");
    spec.kind = kind->get<std::string>();
    if (const auto p = j.find("polynomial"); p != j.end()) {
        if (!p->is_string())
            throw Error(ErrorKind::InvalidArgument, "\"polynomial\" must be a string");
        spec.polynomial = p->get<std::string>();
    }
    if (const auto m = j.find("linear_dim"); m != j.end()) {
        if (!m->is_number_unsigned())
            throw Error(ErrorKind::InvalidArgument, "\"linear_dim\" must be a non-negative integer");
        spec.linear_dim = m->get<std::size_t>();
    }
    return spec;
}

Json to_json(const VarietySpec& spec)
{
    Json j;
    j["ambient_dim"] = spec.ambient_dim;
    j["kind"] = spec.kind;
    if (spec.polynomial)
        j["polynomial"] = *spec.polynomial;
    if (spec.linear_dim)
        j["linear_dim"] = *spec.linear_dim;
    return j;
}

VarietySpec load_variety_spec(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + file.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Syntax, file.string() + ": " + e.what());
    }
    return variety_spec_from_json(j);
}

ProjVariety build_variety(const VarietySpec& spec)
{
    if (spec.ambient_dim < 1)
        throw Error(ErrorKind::InvalidArgument, "ambient_dim must be >= 1");
    if (spec.kind == "hypersurface") {
        if (!spec.polynomial)
            throw Error(ErrorKind::InvalidArgument, "hypersurface needs \"polynomial\"");
        const Poly f = parse_polynomial(*spec.polynomial, primal_ring(spec.ambient_dim));
        return ProjVariety::hypersurface(f);
    }
    if (spec.kind == "linear") {
        if (!spec.linear_dim)
            throw Error(ErrorKind::InvalidArgument, "linear variety needs \"linear_dim\"");
        if (*spec.linear_dim >= spec.ambient_dim)
            throw Error(ErrorKind::InvalidArgument, "linear_dim must be below ambient_dim");
        return ProjVariety::linear(spec.ambient_dim, *spec.linear_dim);
    }
    if (spec.kind == "point")
        return ProjVariety::point(spec.ambient_dim);
    throw Error(ErrorKind::InvalidArgument, "unknown variety kind \"" + spec.kind + "\"");
}

} // namespace plucker::cli
