#include "plucker/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace plucker::cli {

namespace {

const char* status(const CaseReport& r)
{
    if (r.skipped)
        return "skip";
    if (r.error)
        return "error";
    return r.pass ? "pass" : "fail";
}

Json values_json(const Values& values)
{
    Json j = Json::object();
    for (const auto& [k, v] : values)
        j[k] = v;
    return j;
}

std::string joined(const Values& values)
{
    std::string out;
    for (const auto& [k, v] : values) {
        if (!out.empty())
            out += ';';
        out += k + '=' + v;
    }
    return out;
}

std::string ms(double wall_ms)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << wall_ms;
    return s.str();
}

void emit_json(const std::vector<CaseReport>& reports, std::ostream& out, bool with_timings)
{
    Json arr = Json::array();
    for (const auto& r : reports) {
        Json j;
        j["name"] = r.name;
        j["kind"] = r.kind;
        j["status"] = status(r);
        j["pass"] = r.pass;
        j["computed"] = values_json(r.computed);
        j["expected"] = values_json(r.expected);
        j["error"] = r.error ? Json(*r.error) : Json(nullptr);
        if (with_timings)
            j["wall_ms"] = ms(r.wall_ms);
        arr.push_back(std::move(j));
    }
    out << (arr.empty() ? std::string("[]") : arr.dump(2)) << '\n';
}

void emit_csv(const std::vector<CaseReport>& reports, std::ostream& out, bool with_timings)
{
    out << "name,kind,status,pass,computed,expected,error";
    if (with_timings)
        out << ",wall_ms";
    out << "\r\n";
    for (const auto& r : reports) {
        out << csv_field(r.name) << ',' << csv_field(r.kind) << ',' << status(r) << ','
            << (r.pass ? "true" : "false") << ',' << csv_field(joined(r.computed)) << ','
            << csv_field(joined(r.expected)) << ',' << csv_field(r.error.value_or(""));
        if (with_timings)
            out << ',' << ms(r.wall_ms);
        out << "\r\n";
    }
}

void emit_text(const std::vector<CaseReport>& reports, std::ostream& out, bool with_timings)
{
    std::size_t passed = 0;
    for (const auto& r : reports) {
        std::string tag = status(r);
        for (auto& ch : tag)
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out << '[' << tag << "] " << r.name << " (" << r.kind << ")";
        if (with_timings && !r.skipped)
            out << ' ' << ms(r.wall_ms) << " ms";
        out << '\n';
        if (!r.computed.empty())
            out << "    computed: " << joined(r.computed) << '\n';
        if (!r.expected.empty())
            out << "    expected: " << joined(r.expected) << '\n';
        if (r.error)
            out << "    error: " << *r.error << '\n';
        if (r.pass)
            ++passed;
    }
    out << passed << '/' << reports.size() << " passed\n";
}

} // namespace

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

Format parse_format(const std::string& name)
{
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "text")
        return Format::Text;
    throw Error(ErrorKind::InvalidArgument, "unknown format \"" + name + "\"");
}

void emit_report(const std::vector<CaseReport>& reports, Format format, std::ostream& out, bool with_timings)
{
    switch (format) {
    case Format::Json: emit_json(reports, out, with_timings); break;
    case Format::Csv: emit_csv(reports, out, with_timings); break;
    case Format::Text: emit_text(reports, out, with_timings); break;
    }
    if (!out)
        throw Error(ErrorKind::Io, "failed to write report");
}

std::string emit_report(const std::vector<CaseReport>& reports, Format format, bool with_timings)
{
    std::ostringstream s;
    emit_report(reports, format, s, with_timings);
    return s.str();
}

} // namespace plucker::cli
