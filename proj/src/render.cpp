#include <flatdim/render.hpp>

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace flatdim {

namespace {

using json = nlohmann::ordered_json;

const char* kScanHeader = "n,k,deg_source,deg_target,adim,vdim,verdict";

std::string join(const std::vector<long long>& values, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

json record_json(const ClassificationRecord& r)
{
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["deg_source"] = r.deg_source;
    j["deg_target"] = r.deg_target;
    j["adim"] = to_decimal(r.adim);
    j["vdim"] = to_decimal(r.vdim);
    j["verdict"] = to_string(r.verdict);
    return j;
}

std::string record_csv_row(const ClassificationRecord& r)
{
    std::ostringstream os;
    os << r.n << ',' << r.k << ',' << r.deg_source << ',' << r.deg_target << ','
       << r.adim << ',' << r.vdim << ',' << to_string(r.verdict);
    return os.str();
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

long long parse_ll(const std::string& s)
{
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size())
        throw std::invalid_argument("trailing characters in integer: " + s);
    return v;
}

}  // namespace

OutputFormat parse_format(const std::string& name)
{
    if (name == "table")
        return OutputFormat::Table;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    throw std::invalid_argument("unknown output format: " + name);
}

const char* to_string(Verdict v)
{
    switch (v) {
        case Verdict::Unexpected: return "Unexpected";
        case Verdict::MissingExpected: return "MissingExpected";
        case Verdict::Equal: return "Equal";
        case Verdict::NoForms: return "NoForms";
    }
    throw std::logic_error("to_string(Verdict): bad value");
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "Unexpected")
        return Verdict::Unexpected;
    if (s == "MissingExpected")
        return Verdict::MissingExpected;
    if (s == "Equal")
        return Verdict::Equal;
    if (s == "NoForms")
        return Verdict::NoForms;
    throw std::invalid_argument("unknown verdict: " + s);
}

std::string render_scan(const std::vector<ClassificationRecord>& records, OutputFormat fmt)
{
    switch (fmt) {
        case OutputFormat::Csv: {
            std::string out = kScanHeader;
            out += '\n';
            for (const auto& r : records) {
                out += record_csv_row(r);
                out += '\n';
            }
            return out;
        }
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& r : records)
                arr.push_back(record_json(r));
            return arr.dump(2) + "\n";
        }
        case OutputFormat::Table: {
            // column widths over header + rows
            const std::vector<std::string> header = split(kScanHeader, ',');
            std::vector<std::vector<std::string>> rows;
            rows.reserve(records.size());
            for (const auto& r : records)
                rows.push_back(split(record_csv_row(r), ','));
            std::vector<std::size_t> width(header.size());
            for (std::size_t c = 0; c < header.size(); ++c) {
                width[c] = header[c].size();
                for (const auto& row : rows)
                    width[c] = std::max(width[c], row[c].size());
            }
            std::ostringstream os;
            auto emit = [&](const std::vector<std::string>& row) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c)
                        os << "  ";
                    os << row[c] << std::string(width[c] - row[c].size(), ' ');
                }
                os << '\n';
            };
            emit(header);
            for (const auto& row : rows)
                emit(row);
            return os.str();
        }
    }
    throw std::logic_error("render_scan: bad format");
}

std::string render_record(const ClassificationRecord& r, OutputFormat fmt)
{
    switch (fmt) {
        case OutputFormat::Csv:
            return std::string(kScanHeader) + "\n" + record_csv_row(r) + "\n";
        case OutputFormat::Json:
            return record_json(r).dump(2) + "\n";
        case OutputFormat::Table: {
            std::ostringstream os;
            os << "n:          " << r.n << '\n'
               << "k:          " << r.k << '\n'
               << "deg_source: " << r.deg_source << '\n'
               << "deg_target: " << r.deg_target << '\n'
               << "adim:       " << r.adim << '\n'
               << "vdim:       " << r.vdim << '\n'
               << "verdict:    " << to_string(r.verdict) << '\n';
            return os.str();
        }
    }
    throw std::logic_error("render_record: bad format");
}

std::string render_system(const LinearSystem& sys, OutputFormat fmt)
{
    switch (fmt) {
        case OutputFormat::Csv: {
            std::ostringstream os;
            os << "ambient_dim,degree,multiplicities,valid\n"
               << sys.ambient_dim << ',' << sys.degree << ',' << join(sys.multiplicities, " ")
               << ',' << (sys.valid ? "true" : "false") << '\n';
            return os.str();
        }
        case OutputFormat::Json: {
            json j;
            j["ambient_dim"] = sys.ambient_dim;
            j["degree"] = sys.degree;
            j["multiplicities"] = sys.multiplicities;
            j["valid"] = sys.valid;
            return j.dump(2) + "\n";
        }
        case OutputFormat::Table: {
            std::ostringstream os;
            os << "ambient_dim:    " << sys.ambient_dim << '\n'
               << "degree:         " << sys.degree << '\n'
               << "multiplicities: " << join(sys.multiplicities, ",") << '\n'
               << "valid:          " << (sys.valid ? "true" : "false") << '\n';
            return os.str();
        }
    }
    throw std::logic_error("render_system: bad format");
}

std::vector<ClassificationRecord> parse_scan_csv(const std::string& csv)
{
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line) || line != kScanHeader)
        throw std::invalid_argument("parse_scan_csv: missing or wrong header");
    std::vector<ClassificationRecord> out;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto fields = split(line, ',');
        if (fields.size() != 7)
            throw std::invalid_argument("parse_scan_csv: wrong field count: " + line);
        ClassificationRecord r;
        r.n = parse_ll(fields[0]);
        r.k = parse_ll(fields[1]);
        r.deg_source = parse_ll(fields[2]);
        r.deg_target = parse_ll(fields[3]);
        r.adim = exact_from_decimal(fields[4]);
        r.vdim = exact_from_decimal(fields[5]);
        r.verdict = verdict_from_string(fields[6]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace flatdim
