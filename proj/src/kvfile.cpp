#include "cvar/kvfile.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "cvar/errors.hpp"

namespace cvar {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    double v = 0.0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
        throw Error(ErrorCode::InvalidArgument, "bad number '" + s + "' for " + what);
    return v;
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(s);
    while (std::getline(ss, cell, delim)) out.push_back(cell);
    return out;
}

}  // namespace

Eigen::MatrixXd parse_matrix_literal(const std::string& text) {
    std::string body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw Error(ErrorCode::InvalidArgument, "matrix literal must be bracketed: " + text);
    body = body.substr(1, body.size() - 2);
    const auto row_strs = split(body, ';');
    std::vector<std::vector<double>> rows;
    for (const auto& rs : row_strs) {
        std::vector<double> row;
        std::stringstream ss(rs);
        std::string tok;
        while (ss >> tok) row.push_back(to_double(tok, "matrix literal"));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) return Eigen::MatrixXd(0, 0);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw Error(ErrorCode::InvalidArgument, "ragged matrix literal: " + text);
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return m;
}

KvFile KvFile::parse_text(const std::string& text, const std::string& origin) {
    KvFile out;
    out.origin_ = origin;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        // Multi-line matrix block: "matrix NAME ROWS COLS" ... "endmatrix".
        if (stripped.rfind("matrix ", 0) == 0 || stripped.rfind("vector ", 0) == 0) {
            std::stringstream head(stripped);
            std::string kind, name;
            long rows = 0, cols = 1;
            head >> kind >> name >> rows;
            if (kind == "matrix") head >> cols;
            if (name.empty() || rows < 0 || cols < 0 || head.fail())
                throw Error(ErrorCode::InvalidArgument,
                            origin + ":" + std::to_string(line_no) + ": bad block header");
            Entry e;
            e.key = name;
            e.is_matrix_block = true;
            e.line = line_no;
            e.matrix = Eigen::MatrixXd(rows, cols);
            for (long i = 0; i < rows; ++i) {
                if (!std::getline(ss, line))
                    throw Error(ErrorCode::InvalidArgument,
                                origin + ": unexpected end of '" + name + "' block");
                ++line_no;
                std::stringstream row(line);
                for (long j = 0; j < cols; ++j) {
                    std::string tok;
                    if (!(row >> tok))
                        throw Error(ErrorCode::InvalidArgument,
                                    origin + ":" + std::to_string(line_no) + ": short row");
                    e.matrix(i, j) = to_double(tok, name);
                }
            }
            std::getline(ss, line);
            ++line_no;
            if (trim(line) != (kind == "matrix" ? "endmatrix" : "endvector"))
                throw Error(ErrorCode::InvalidArgument,
                            origin + ":" + std::to_string(line_no) + ": missing end" + kind);
            out.entries_.push_back(std::move(e));
            continue;
        }

        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::InvalidArgument,
                        origin + ":" + std::to_string(line_no) + ": expected 'key = value' on '" +
                            stripped + "'");
        Entry e;
        e.key = trim(stripped.substr(0, eq));
        e.value = trim(stripped.substr(eq + 1));
        e.line = line_no;
        if (e.key.empty())
            throw Error(ErrorCode::InvalidArgument,
                        origin + ":" + std::to_string(line_no) + ": empty key");
        out.entries_.push_back(std::move(e));
    }
    return out;
}

KvFile KvFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), path);
}

const KvFile::Entry* KvFile::find(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.key == key) return &e;
    return nullptr;
}

const KvFile::Entry& KvFile::require(const std::string& key) const {
    const Entry* e = find(key);
    if (!e)
        throw Error(ErrorCode::InvalidArgument,
                    origin_ + ": missing required key '" + key + "'");
    return *e;
}

bool KvFile::has(const std::string& key) const { return find(key) != nullptr; }

std::string KvFile::get_string(const std::string& key) const { return require(key).value; }

std::string KvFile::get_string_or(const std::string& key,
                                  const std::string& fallback) const {
    const Entry* e = find(key);
    return e ? e->value : fallback;
}

long KvFile::get_int(const std::string& key) const {
    return static_cast<long>(to_double(require(key).value, key));
}

long KvFile::get_int_or(const std::string& key, long fallback) const {
    const Entry* e = find(key);
    return e ? static_cast<long>(to_double(e->value, key)) : fallback;
}

double KvFile::get_double(const std::string& key) const {
    return to_double(require(key).value, key);
}

double KvFile::get_double_or(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    return e ? to_double(e->value, key) : fallback;
}

bool KvFile::get_bool_or(const std::string& key, bool fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    const std::string v = e->value;
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw Error(ErrorCode::InvalidArgument, "bad boolean '" + v + "' for " + key);
}

std::vector<std::string> KvFile::get_list(const std::string& key) const {
    const Entry* e = find(key);
    std::vector<std::string> out;
    if (!e || trim(e->value).empty()) return out;
    for (const auto& item : split(e->value, ',')) {
        const std::string t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

std::vector<int> KvFile::get_int_list_or(const std::string& key) const {
    std::vector<int> out;
    for (const auto& s : get_list(key))
        out.push_back(static_cast<int>(to_double(s, key)));
    return out;
}

std::vector<std::pair<std::string, double>> KvFile::get_weights(
    const std::string& key) const {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& item : get_list(key)) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::InvalidArgument,
                        key + ": expected name:weight entries, got '" + item + "'");
        out.emplace_back(trim(item.substr(0, colon)),
                         to_double(item.substr(colon + 1), key));
    }
    return out;
}

Eigen::MatrixXd KvFile::get_matrix(const std::string& key) const {
    const Entry& e = require(key);
    if (e.is_matrix_block) return e.matrix;
    return parse_matrix_literal(e.value);
}

std::string content_hash(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return content_hash(buffer.str());
}

}  // namespace cvar
