#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "thincode/bounds.hpp"
#include "thincode/code.hpp"
#include "thincode/search.hpp"
#include "thincode/simplex.hpp"

namespace thincode {

// Why a textual input was rejected. The three grammar-level mistakes get
// their own codes so callers can react to them individually; everything
// structural (wrong counts, unbuildable objects) shares BadStructure.
enum class ParseErrorCode {
    EmptyInput,
    MissingHeader,
    MalformedInteger,
    InconsistentRowLength,
    NonExtendedRow,
    BadStructure,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, std::size_t position, const std::string& message);

    ParseErrorCode code() const { return code_; }
    // character offset into the rejected input (0 when none applies)
    std::size_t position() const { return position_; }

private:
    ParseErrorCode code_;
    std::size_t position_;
};

// "N=<modulus>; <row>; <row>; ..." with space-separated integer entries.
// Entries are reduced mod N; every row must sum to 0 mod N (the extended
// condition), all rows must share one length. Emitted specs parse back to an
// equal matrix and re-emit to the identical string.
GeneratingMatrix parse_matrix_spec(const std::string& text);
std::string emit_matrix_spec(const GeneratingMatrix& g);

// "d=<dim>; <vertex>; <vertex>; ..." with exactly dim + 1 vertices of dim
// space-separated coordinates each. Same round-trip guarantee.
LatticeSimplex parse_vertex_spec(const std::string& text);
std::string emit_vertex_spec(const LatticeSimplex& s);

// One-line JSON object per record; polynomials appear as coefficient arrays,
// lowest degree first. Parsing rebuilds the code from the generator rows and
// rejects stored hstar, weight or thin values that disagree with it.
std::string emit_record_json(const CodeRecord& r);
CodeRecord parse_record_json(const std::string& text);

std::string emit_config_json(const SearchConfig& c);
SearchConfig parse_config_json(const std::string& text);

// Append-only JSON-lines store for search output. The first line is a header
// with the schema version and the config that created the file; every other
// line is one record. Appends skip codes the file already holds, so
// re-running a configuration leaves the file unchanged.
class ResultDatabase {
public:
    static constexpr std::int64_t schema_version = 1;

    // Loads the file when it exists. A missing file is created by the first
    // append, not the constructor.
    explicit ResultDatabase(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }
    const std::vector<CodeRecord>& records() const { return records_; }

    // Number of records actually written; duplicates cost nothing.
    std::size_t append(const std::string& config_id, const std::vector<CodeRecord>& batch);

private:
    std::filesystem::path path_;
    std::vector<CodeRecord> records_;
    std::set<std::string> keys_;
    bool header_written_ = false;
};

// Markdown and CSV tables with one row per record. Generator rows are packed
// into a single cell ("1 1 0; 0 1 1"); polynomials print human-readable in
// Markdown and as space-joined coefficient lists in CSV.
std::string markdown_table(const std::vector<CodeRecord>& records);
std::string csv_table(const std::vector<CodeRecord>& records);

std::string markdown_bound_table(const std::vector<BoundTable>& rows);
std::string csv_bound_table(const std::vector<BoundTable>& rows);

}  // namespace thincode
