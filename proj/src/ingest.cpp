#include "lghodge/ingest.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace lghodge {

namespace {

std::vector<std::string> split_ws(const std::string &line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

bool is_blank(const std::string &line) { return line.find_first_not_of(" \t\r\n") == std::string::npos; }

std::optional<std::int64_t> parse_int(std::string_view tok) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
    return value;
}

bool next_content_line(std::istream &in, std::string &line, std::size_t &line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_blank(line)) return true;
    }
    return false;
}

} // namespace

std::vector<CensusEntry> parse_palp(std::istream &in) {
    std::vector<CensusEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (next_content_line(in, line, line_no)) {
        const auto where = " (line " + std::to_string(line_no) + ")";
        const auto tokens = split_ws(line);
        if (tokens.size() < 2) throw Error(ErrorCode::MalformedHeader, "expected 'rows cols'" + where);
        const auto rows = parse_int(tokens[0]);
        const auto cols = parse_int(tokens[1]);
        if (!rows || !cols || *rows <= 0 || *cols <= 0)
            throw Error(ErrorCode::MalformedHeader, "expected two positive integers" + where);
        const bool coordinate_rows = *rows <= *cols;
        if ((coordinate_rows ? *rows : *cols) != 3)
            throw Error(ErrorCode::WrongDimension, "matrix " + tokens[0] + "x" + tokens[1] + " is not 3-dimensional" + where);

        CensusEntry entry;
        entry.id = entries.size() + 1;
        const auto after_cols = line.find(tokens[1], line.find(tokens[0]) + tokens[0].size()) + tokens[1].size();
        const auto comment_start = line.find_first_not_of(" \t", after_cols);
        if (comment_start != std::string::npos) {
            entry.comment = line.substr(comment_start);
            entry.comment.erase(entry.comment.find_last_not_of(" \t\r") + 1);
        }

        std::vector<std::vector<std::int64_t>> matrix;
        for (std::int64_t r = 0; r < *rows; ++r) {
            if (!next_content_line(in, line, line_no))
                throw Error(ErrorCode::MatrixShapeMismatch, "block ended after " + std::to_string(r) + " rows" + where);
            const auto cells = split_ws(line);
            std::vector<std::int64_t> row;
            for (const auto &cell : cells) {
                const auto v = parse_int(cell);
                if (!v) throw Error(ErrorCode::NonInteger, "'" + cell + "' (line " + std::to_string(line_no) + ")");
                row.push_back(*v);
            }
            if (static_cast<std::int64_t>(row.size()) != *cols)
                throw Error(ErrorCode::MatrixShapeMismatch, "expected " + tokens[1] + " entries (line " +
                                                                std::to_string(line_no) + ")");
            matrix.push_back(std::move(row));
        }

        if (coordinate_rows) {
            for (std::int64_t c = 0; c < *cols; ++c)
                entry.vertices.emplace_back(matrix[0][static_cast<std::size_t>(c)], matrix[1][static_cast<std::size_t>(c)],
                                            matrix[2][static_cast<std::size_t>(c)]);
        } else {
            for (const auto &row : matrix) entry.vertices.emplace_back(row[0], row[1], row[2]);
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CensusEntry> parse_simple(std::istream &in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
    if (doc.is_object()) doc = nlohmann::json::array({doc});
    if (!doc.is_array()) throw Error(ErrorCode::SchemaError, "top level must be an object or an array of objects");
    if (doc.empty()) throw Error(ErrorCode::SchemaError, "no polytopes in input");

    std::vector<CensusEntry> entries;
    for (const auto &obj : doc) {
        const auto where = " (entry " + std::to_string(entries.size() + 1) + ")";
        if (!obj.is_object() || !obj.contains("vertices"))
            throw Error(ErrorCode::SchemaError, "missing \"vertices\"" + where);
        const auto &verts = obj.at("vertices");
        if (!verts.is_array() || verts.empty())
            throw Error(ErrorCode::SchemaError, "\"vertices\" must be a non-empty array" + where);
        CensusEntry entry;
        entry.id = entries.size() + 1;
        if (obj.contains("name")) {
            if (!obj.at("name").is_string()) throw Error(ErrorCode::SchemaError, "\"name\" must be a string" + where);
            entry.comment = obj.at("name").get<std::string>();
        }
        for (const auto &v : verts) {
            if (!v.is_array() || v.size() != 3 ||
                !std::all_of(v.begin(), v.end(), [](const nlohmann::json &x) { return x.is_number_integer(); }))
                throw Error(ErrorCode::SchemaError, "each vertex must be an integer triple" + where);
            entry.vertices.emplace_back(v[0].get<std::int64_t>(), v[1].get<std::int64_t>(), v[2].get<std::int64_t>());
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CensusEntry> parse_any(std::istream &in) {
    in >> std::ws;
    const int c = in.peek();
    if (c == '[' || c == '{') return parse_simple(in);
    return parse_palp(in);
}

std::vector<CensusEntry> load_entries(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_any(in);
}

std::string emit_simple(std::span<const CensusEntry> entries) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        out << "  {";
        if (!e.comment.empty()) out << "\"name\": " << nlohmann::json(e.comment).dump() << ", ";
        out << "\"vertices\": [";
        for (std::size_t j = 0; j < e.vertices.size(); ++j) {
            const auto &v = e.vertices[j];
            out << (j ? ", " : "") << '[' << v.x() << ", " << v.y() << ", " << v.z() << ']';
        }
        out << "]}" << (i + 1 < entries.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return out.str();
}

} // namespace lghodge
