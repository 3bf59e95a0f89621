#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cvar {

// Line-oriented key-value text used by every config and artifact format:
//
//   # comment
//   key = value
//   weights = y:1, c:0.5
//   h = [1 0; 0 1; 0 0]          (rows separated by ';')
//   matrix alpha 4 2             (multi-line block, row-major)
//   0.1 0.2
//   ...
//   endmatrix
//
// Keys repeat (e.g. "beta 1", "beta 2"); lookups return the first match and
// `entries` preserves file order for sectioned formats.
class KvFile {
  public:
    struct Entry {
        std::string key;
        std::string value;            // empty for matrix blocks
        Eigen::MatrixXd matrix;       // filled for matrix blocks
        bool is_matrix_block = false;
        int line = 0;
    };

    static KvFile parse_file(const std::string& path);
    static KvFile parse_text(const std::string& text, const std::string& origin = "<text>");

    const std::vector<Entry>& entries() const { return entries_; }
    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    long get_int(const std::string& key) const;
    long get_int_or(const std::string& key, long fallback) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;
    std::vector<std::string> get_list(const std::string& key) const;  // comma split
    std::vector<int> get_int_list_or(const std::string& key) const;
    // "y:1, c:0.5" pairs.
    std::vector<std::pair<std::string, double>> get_weights(const std::string& key) const;
    Eigen::MatrixXd get_matrix(const std::string& key) const;

    const std::string& origin() const { return origin_; }

  private:
    const Entry* find(const std::string& key) const;
    const Entry& require(const std::string& key) const;
    std::vector<Entry> entries_;
    std::string origin_;
};

// Inline "[a b; c d]" matrix literal.
Eigen::MatrixXd parse_matrix_literal(const std::string& text);

// FNV-1a hash of file bytes, as 16 hex chars; echoed into output headers so
// runs are attributable to their configs.
std::string content_hash(const std::string& text);
std::string file_hash(const std::string& path);

}  // namespace cvar
