#include "kprim/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kprim {

OutputFormat format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "md") return OutputFormat::md;
    throw std::invalid_argument("unknown format: " + s);
}

nlohmann::ordered_json to_json(const MarginReport& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["variant"] = to_string(r.variant);
    j["claim"] = r.claim;
    j["applicable"] = r.applicable;
    j["pass"] = r.pass;
    j["margin"] = r.margin;
    nlohmann::ordered_json terms;
    for (const auto& [name, value] : r.terms) terms[name] = value;
    j["terms"] = std::move(terms);
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    nlohmann::ordered_json j = v;  // shortest round-trip representation
    return j.dump();
}

std::string render_csv(const std::vector<MarginReport>& reports) {
    std::vector<std::string> term_cols;
    for (const auto& r : reports)
        for (const auto& [name, value] : r.terms)
            if (std::find(term_cols.begin(), term_cols.end(), name) == term_cols.end())
                term_cols.push_back(name);

    std::ostringstream os;
    os << "k,variant,claim,applicable,pass,margin";
    for (const auto& c : term_cols) os << ",terms." << csv_escape(c);
    os << "\n";
    for (const auto& r : reports) {
        os << r.k << ',' << to_string(r.variant) << ',' << csv_escape(r.claim) << ','
           << (r.applicable ? "true" : "false") << ',' << (r.pass ? "true" : "false") << ','
           << format_double(r.margin);
        for (const auto& c : term_cols) {
            os << ',';
            const double v = r.term_value(c);
            if (!std::isnan(v)) os << format_double(v);
        }
        os << "\n";
    }
    return os.str();
}

std::string render_md(const std::vector<MarginReport>& reports) {
    std::ostringstream os;
    os << "| k | variant | claim | pass | margin | terms |\n";
    os << "|---|---------|-------|------|--------|-------|\n";
    for (const auto& r : reports) {
        os << "| " << r.k << " | " << to_string(r.variant) << " | " << r.claim << " | "
           << (r.applicable ? (r.pass ? "pass" : "FAIL") : "n/a") << " | "
           << format_double(r.margin) << " | ";
        bool first = true;
        for (const auto& [name, value] : r.terms) {
            if (!first) os << "; ";
            os << name << "=" << format_double(value);
            first = false;
        }
        os << " |\n";
    }
    return os.str();
}

} // namespace

std::string render_reports(const std::vector<MarginReport>& reports, OutputFormat f,
                           const nlohmann::ordered_json& params) {
    if (f == OutputFormat::csv) return render_csv(reports);
    if (f == OutputFormat::md) return render_md(reports);
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["params"] = params;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = std::move(arr);
    return j.dump(2) + "\n";
}

} // namespace kprim
