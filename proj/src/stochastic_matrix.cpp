#include "fpt/stochastic_matrix.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "fpt/errors.hpp"

namespace fpt {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> content_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        if (!line.empty() && line.front() != '#') lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::vector<ExactRational>> parse_csv(std::string_view text) {
    std::vector<std::vector<ExactRational>> rows;
    for (auto line : content_lines(text)) {
        std::vector<ExactRational> row;
        while (true) {
            const auto comma = line.find(',');
            row.push_back(ExactRational::parse(line.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<ExactRational>> parse_whitespace(std::string_view text) {
    std::vector<std::vector<ExactRational>> rows;
    for (auto line : content_lines(text)) {
        std::vector<ExactRational> row;
        std::istringstream in{std::string(line)};
        std::string token;
        while (in >> token) row.push_back(ExactRational::parse(token));
        rows.push_back(std::move(row));
    }
    return rows;
}

using json = nlohmann::json;

// DOM builder that keeps floating-point literals as their source text, so
// "0.4" reaches ExactRational::parse instead of passing through a double.
class ExactNumberDomParser : public nlohmann::detail::json_sax_dom_parser<json> {
public:
    using json_sax_dom_parser::json_sax_dom_parser;

    bool number_float(number_float_t /*unused*/, const string_t& literal) {
        string_t copy = literal;
        return json_sax_dom_parser::string(copy);
    }
};

ExactRational json_entry(const json& v, std::size_t r, std::size_t c) {
    if (v.is_string()) return ExactRational::parse(v.get<std::string>());
    if (v.is_number_integer()) return ExactRational::parse(v.dump());
    throw ParseError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                     ") is not a number");
}

StochasticMatrix parse_json(std::string_view text, bool normalize_rows) {
    json doc;
    ExactNumberDomParser sax(doc, true);
    try {
        if (!json::sax_parse(text, &sax)) throw ParseError("malformed JSON");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        throw ParseError("JSON matrix must be an object with a \"rows\" array");
    }
    const json& rows_json = doc["rows"];
    std::vector<std::vector<ExactRational>> rows;
    for (std::size_t r = 0; r < rows_json.size(); ++r) {
        if (!rows_json[r].is_array()) throw ParseError("row " + std::to_string(r + 1) + " is not an array");
        std::vector<ExactRational> row;
        for (std::size_t c = 0; c < rows_json[r].size(); ++c) row.push_back(json_entry(rows_json[r][c], r, c));
        rows.push_back(std::move(row));
    }
    if (doc.contains("n")) {
        if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != rows.size()) {
            throw ParseError("\"n\" does not match the number of rows (" + std::to_string(rows.size()) + ")");
        }
    }
    std::vector<std::string> labels;
    if (doc.contains("labels") && !doc["labels"].is_null()) {
        if (!doc["labels"].is_array()) throw ParseError("\"labels\" must be an array of strings");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw ParseError("\"labels\" must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return StochasticMatrix::from_rows(std::move(rows), std::move(labels), normalize_rows);
}

} // namespace

StochasticMatrix StochasticMatrix::from_rows(std::vector<std::vector<ExactRational>> rows,
                                             std::vector<std::string> labels, bool normalize_rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("matrix has no rows");
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) {
            throw ParseError("non-square matrix: row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " + std::to_string(n));
        }
    }
    if (!labels.empty() && labels.size() != n) {
        throw ParseError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
    }
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            if (labels[a] == labels[b]) throw ParseError("duplicate state label '" + labels[a] + "'");
        }
    }

    StochasticMatrix m;
    m.m_n = n;
    m.m_labels = std::move(labels);
    m.m_entries.reserve(n * n);
    const ExactRational one(1);
    for (std::size_t r = 0; r < n; ++r) {
        ExactRational sum;
        for (std::size_t c = 0; c < n; ++c) {
            const ExactRational& v = rows[r][c];
            if (v.sign() < 0 || v > one) {
                throw ParseError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " +
                                 v.to_fraction_string() + " is outside [0,1]");
            }
            sum += v;
        }
        if (sum != one) {
            if (!normalize_rows || sum.is_zero()) {
                throw ParseError("row " + std::to_string(r + 1) + " sums to " + sum.to_fraction_string() +
                                 ", expected 1");
            }
            for (auto& v : rows[r]) v /= sum;
            m.m_rows_normalized = true;
        }
        for (auto& v : rows[r]) m.m_entries.push_back(std::move(v));
    }
    return m;
}

std::string StochasticMatrix::state_name(std::size_t state) const {
    return m_labels.empty() ? std::to_string(state + 1) : m_labels.at(state);
}

void StochasticMatrix::check_state(std::size_t state) const {
    if (state >= m_n) {
        throw IndexError("state " + std::to_string(state + 1) + " out of range 1.." + std::to_string(m_n));
    }
}

std::size_t StochasticMatrix::resolve_state(std::string_view token) const {
    token = trim(token);
    for (std::size_t s = 0; s < m_labels.size(); ++s) {
        if (m_labels[s] == token) return s;
    }
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end || token.empty()) {
        throw IndexError("unknown state '" + std::string(token) + "'");
    }
    if (value < 1 || value > m_n) {
        throw IndexError("state " + std::string(token) + " out of range 1.." + std::to_string(m_n));
    }
    return value - 1;
}

StochasticMatrix parse_matrix(std::string_view text, MatrixFormat format, bool normalize_rows) {
    switch (format) {
    case MatrixFormat::csv:
        return StochasticMatrix::from_rows(parse_csv(text), {}, normalize_rows);
    case MatrixFormat::whitespace:
        return StochasticMatrix::from_rows(parse_whitespace(text), {}, normalize_rows);
    case MatrixFormat::json:
        return parse_json(text, normalize_rows);
    }
    throw ParseError("unknown matrix format");
}

MatrixFormat guess_format(std::string_view path, std::string_view text) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
    };
    if (ends_with(".json")) return MatrixFormat::json;
    if (ends_with(".csv")) return MatrixFormat::csv;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return MatrixFormat::json;
    for (auto line : content_lines(text)) {
        if (line.find(',') != std::string_view::npos) return MatrixFormat::csv;
    }
    return MatrixFormat::whitespace;
}

std::string render_matrix(const StochasticMatrix& matrix, MatrixFormat format) {
    const std::size_t n = matrix.size();
    std::ostringstream out;
    if (format == MatrixFormat::json) {
        json doc;
        doc["n"] = n;
        json rows = json::array();
        for (std::size_t r = 0; r < n; ++r) {
            json row = json::array();
            for (const auto& v : matrix.row(r)) row.push_back(v.to_fraction_string());
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        if (!matrix.labels().empty()) doc["labels"] = matrix.labels();
        out << doc.dump() << '\n';
        return out.str();
    }
    const char* sep = format == MatrixFormat::csv ? "," : " ";
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (c > 0) out << sep;
            out << matrix(r, c).to_fraction_string();
        }
        out << '\n';
    }
    return out.str();
}

} // namespace fpt
