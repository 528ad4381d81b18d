#include "thincode/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <utility>

#include "json.hpp"

namespace thincode {

namespace {

using nlohmann::json;

struct Segment {
    std::size_t begin;  // absolute index into the input
    std::size_t end;    // one past the last character before the ';'
};

std::vector<Segment> split_segments(const std::string& s) {
    std::vector<Segment> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ';') {
            out.push_back({start, i});
            start = i + 1;
        }
    }
    return out;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// index of the first non-space character, seg.end when the segment is blank
std::size_t first_content(const std::string& s, Segment seg) {
    std::size_t i = seg.begin;
    while (i < seg.end && is_space(s[i])) ++i;
    return i;
}

struct Token {
    std::size_t offset;
    std::int64_t value;
};

std::vector<Token> parse_tokens(const std::string& s, Segment seg) {
    std::vector<Token> out;
    std::size_t i = seg.begin;
    while (i < seg.end) {
        if (is_space(s[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < seg.end && !is_space(s[j])) ++j;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
        if (ec != std::errc() || ptr != s.data() + j) {
            throw ParseError(ParseErrorCode::MalformedInteger, i,
                             "expected an integer at offset " + std::to_string(i) +
                                 ", found '" + s.substr(i, j - i) + "'");
        }
        out.push_back({i, value});
        i = j;
    }
    return out;
}

void reject_blank(const std::string& text, const char* kind) {
    for (char c : text) {
        if (!is_space(c)) return;
    }
    throw ParseError(ParseErrorCode::EmptyInput, 0,
                     std::string("empty ") + kind + " spec; expected '" +
                         (kind[0] == 'm' ? "N=<modulus>" : "d=<dim>") + "; ...'");
}

// "K=<integer>" with optional surrounding spaces; returns the value token
Token parse_header(const std::string& s, Segment seg, char key, const char* kind) {
    std::size_t i = first_content(s, seg);
    if (i + 1 >= seg.end || s[i] != key || s[i + 1] != '=') {
        throw ParseError(ParseErrorCode::MissingHeader, i < seg.end ? i : seg.begin,
                         std::string("a ") + kind + " spec must start with '" + key +
                             "=<integer>'");
    }
    std::vector<Token> toks = parse_tokens(s, {i + 2, seg.end});
    if (toks.size() != 1) {
        throw ParseError(ParseErrorCode::MalformedInteger, i + 2,
                         std::string("expected exactly one integer after '") + key + "='");
    }
    return toks[0];
}

// data segments between header and an ignorable trailing blank
std::vector<std::size_t> body_segments(const std::string& s, const std::vector<Segment>& segs) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < segs.size(); ++i) {
        if (first_content(s, segs[i]) == segs[i].end) {
            if (i + 1 == segs.size()) continue;
            throw ParseError(ParseErrorCode::BadStructure, segs[i].begin,
                             "empty entry at offset " + std::to_string(segs[i].begin));
        }
        out.push_back(i);
    }
    return out;
}

std::string join_rows(const std::vector<Word>& rows) {
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out += "; ";
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i) out += " ";
            out += std::to_string(rows[r][i]);
        }
    }
    return out;
}

json parse_json(const std::string& text, const char* kind) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseErrorCode::BadStructure, e.byte,
                         std::string(kind) + ": " + e.what());
    }
}

const char* convention_name(CompositionConvention c) {
    return c == CompositionConvention::TupleCount ? "tuple-count" : "totient-like";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

std::string coeff_list(const HeightPolynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) out += " ";
        out += std::to_string(p.coefficients()[i]);
    }
    return out.empty() ? "0" : out;
}

json record_to_json(const CodeRecord& r) {
    return json{{"modulus", r.modulus},
                {"generators", r.generators.rows()},
                {"hstar", r.hstar.coefficients()},
                {"weight_enum", r.weight_enum.coefficients()},
                {"flags",
                 {{"thin", r.flags.thin},
                  {"degenerate", r.flags.degenerate},
                  {"direct_sum", r.flags.direct_sum},
                  {"spanning", r.flags.spanning},
                  {"width_one", r.flags.width_one},
                  {"empty", r.flags.empty},
                  {"hollow", r.flags.hollow},
                  {"trivially_thin", r.flags.trivially_thin}}},
                {"config_id", r.config_id}};
}

}  // namespace

ParseError::ParseError(ParseErrorCode code, std::size_t position, const std::string& message)
    : std::runtime_error(message), code_(code), position_(position) {}

GeneratingMatrix parse_matrix_spec(const std::string& text) {
    reject_blank(text, "matrix");
    std::vector<Segment> segs = split_segments(text);
    Token modulus_tok = parse_header(text, segs[0], 'N', "matrix");
    std::int64_t n = modulus_tok.value;
    if (n < 2) {
        throw ParseError(ParseErrorCode::BadStructure, modulus_tok.offset,
                         "modulus must be at least 2, got " + std::to_string(n));
    }

    std::vector<Word> rows;
    std::size_t expected = 0;
    for (std::size_t si : body_segments(text, segs)) {
        std::size_t content = first_content(text, segs[si]);
        std::vector<Token> toks = parse_tokens(text, segs[si]);
        if (rows.empty()) {
            expected = toks.size();
        } else if (toks.size() != expected) {
            throw ParseError(ParseErrorCode::InconsistentRowLength, content,
                             "row " + std::to_string(rows.size() + 1) + " has " +
                                 std::to_string(toks.size()) + " entries where earlier rows have " +
                                 std::to_string(expected));
        }
        Word w;
        std::int64_t sum = 0;
        for (const Token& t : toks) {
            std::int64_t v = ((t.value % n) + n) % n;
            w.push_back(v);
            sum += v;
        }
        if (sum % n != 0) {
            throw ParseError(ParseErrorCode::NonExtendedRow, content,
                             "row " + std::to_string(rows.size() + 1) + " sums to " +
                                 std::to_string(sum % n) + " mod " + std::to_string(n) +
                                 "; an extended code requires every row to sum to 0 mod N");
        }
        rows.push_back(std::move(w));
    }
    if (rows.empty()) {
        throw ParseError(ParseErrorCode::BadStructure, text.size(),
                         "a matrix spec needs at least one row after the modulus");
    }
    try {
        return GeneratingMatrix(n, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorCode::BadStructure, 0, e.what());
    }
}

std::string emit_matrix_spec(const GeneratingMatrix& g) {
    return "N=" + std::to_string(g.modulus()) + "; " + join_rows(g.rows());
}

LatticeSimplex parse_vertex_spec(const std::string& text) {
    reject_blank(text, "vertex");
    std::vector<Segment> segs = split_segments(text);
    Token dim_tok = parse_header(text, segs[0], 'd', "vertex");
    std::int64_t dim = dim_tok.value;
    if (dim < 1) {
        throw ParseError(ParseErrorCode::BadStructure, dim_tok.offset,
                         "dimension must be at least 1, got " + std::to_string(dim));
    }

    std::vector<LatticePoint> vertices;
    for (std::size_t si : body_segments(text, segs)) {
        std::size_t content = first_content(text, segs[si]);
        std::vector<Token> toks = parse_tokens(text, segs[si]);
        if (toks.size() != static_cast<std::size_t>(dim)) {
            throw ParseError(ParseErrorCode::InconsistentRowLength, content,
                             "vertex " + std::to_string(vertices.size() + 1) + " has " +
                                 std::to_string(toks.size()) + " coordinates where dimension " +
                                 std::to_string(dim) + " needs exactly " + std::to_string(dim));
        }
        LatticePoint p;
        for (const Token& t : toks) p.push_back(t.value);
        vertices.push_back(std::move(p));
    }
    if (vertices.size() != static_cast<std::size_t>(dim) + 1) {
        throw ParseError(ParseErrorCode::BadStructure, text.size(),
                         "a " + std::to_string(dim) + "-dimensional simplex needs " +
                             std::to_string(dim + 1) + " vertices, got " +
                             std::to_string(vertices.size()));
    }
    try {
        return LatticeSimplex(dim, std::move(vertices));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorCode::BadStructure, 0, e.what());
    }
}

std::string emit_vertex_spec(const LatticeSimplex& s) {
    std::vector<Word> rows(s.vertices().begin(), s.vertices().end());
    return "d=" + std::to_string(s.dim()) + "; " + join_rows(rows);
}

std::string emit_record_json(const CodeRecord& r) { return record_to_json(r).dump(); }

CodeRecord parse_record_json(const std::string& text) {
    json j = parse_json(text, "record json");
    std::int64_t modulus = 0;
    std::vector<Word> rows;
    std::vector<std::int64_t> hstar_coeffs;
    std::vector<std::int64_t> weight_coeffs;
    CodeFlags flags;
    std::string config_id;
    try {
        modulus = j.at("modulus").get<std::int64_t>();
        rows = j.at("generators").get<std::vector<Word>>();
        hstar_coeffs = j.at("hstar").get<std::vector<std::int64_t>>();
        weight_coeffs = j.at("weight_enum").get<std::vector<std::int64_t>>();
        const json& f = j.at("flags");
        flags.thin = f.at("thin").get<bool>();
        flags.degenerate = f.at("degenerate").get<bool>();
        flags.direct_sum = f.at("direct_sum").get<bool>();
        flags.spanning = f.at("spanning").get<bool>();
        flags.width_one = f.at("width_one").get<bool>();
        flags.empty = f.at("empty").get<bool>();
        flags.hollow = f.at("hollow").get<bool>();
        flags.trivially_thin = f.at("trivially_thin").get<bool>();
        config_id = j.at("config_id").get<std::string>();
    } catch (const json::exception& e) {
        throw ParseError(ParseErrorCode::BadStructure, 0,
                         std::string("record json: ") + e.what());
    }

    try {
        GeneratingMatrix generators(modulus, std::move(rows));
        LinearCode canonical = canonical_form(span_words(generators));
        HeightPolynomial stored_h{std::move(hstar_coeffs)};
        HeightPolynomial stored_w{std::move(weight_coeffs)};
        if (stored_h != hstar(canonical)) {
            throw ParseError(ParseErrorCode::BadStructure, 0,
                             "stored hstar disagrees with the generator span");
        }
        if (stored_w != weight_enumerator(canonical)) {
            throw ParseError(ParseErrorCode::BadStructure, 0,
                             "stored weight enumerator disagrees with the generator span");
        }
        if (flags.thin != lstar(canonical).is_zero()) {
            throw ParseError(ParseErrorCode::BadStructure, 0,
                             "stored thin flag disagrees with the generator span");
        }
        return CodeRecord{modulus,
                          std::move(generators),
                          std::move(canonical),
                          std::move(stored_h),
                          std::move(stored_w),
                          flags,
                          std::move(config_id)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorCode::BadStructure, 0,
                         std::string("record json: ") + e.what());
    }
}

std::string emit_config_json(const SearchConfig& c) {
    return json{{"dimension", c.dimension},
                {"moduli", c.moduli},
                {"max_rows", c.max_rows},
                {"epsilon", c.entry_cap_epsilon},
                {"equivalence",
                 c.equivalence == Equivalence::Full ? "full" : "fingerprint"},
                {"skip_pyramid_bases", c.skip_pyramid_bases_from_row_three},
                {"prefilter", c.use_thinness_prefilter},
                {"budget", c.budget},
                {"threads", c.threads}}
        .dump();
}

SearchConfig parse_config_json(const std::string& text) {
    json j = parse_json(text, "config json");
    SearchConfig c;
    try {
        c.dimension = j.at("dimension").get<std::int64_t>();
        c.moduli = j.at("moduli").get<std::vector<std::int64_t>>();
        c.max_rows = j.at("max_rows").get<std::int64_t>();
        c.entry_cap_epsilon = j.at("epsilon").get<std::int64_t>();
        std::string eq = j.at("equivalence").get<std::string>();
        if (eq == "full") {
            c.equivalence = Equivalence::Full;
        } else if (eq == "fingerprint") {
            c.equivalence = Equivalence::Fingerprint;
        } else {
            throw ParseError(ParseErrorCode::BadStructure, 0,
                             "equivalence must be 'full' or 'fingerprint', got '" + eq + "'");
        }
        c.skip_pyramid_bases_from_row_three = j.at("skip_pyramid_bases").get<bool>();
        c.use_thinness_prefilter = j.at("prefilter").get<bool>();
        c.budget = j.at("budget").get<std::int64_t>();
        c.threads = j.at("threads").get<std::int64_t>();
    } catch (const json::exception& e) {
        throw ParseError(ParseErrorCode::BadStructure, 0,
                         std::string("config json: ") + e.what());
    }
    return c;
}

ResultDatabase::ResultDatabase(std::filesystem::path path) : path_(std::move(path)) {
    if (!std::filesystem::exists(path_)) return;
    std::ifstream in(path_);
    if (!in) throw std::runtime_error("cannot open database file: " + path_.string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!header_written_) {
            json h = parse_json(line, "database header");
            if (!h.is_object() || !h.contains("schema") || !h.contains("config")) {
                throw ParseError(ParseErrorCode::BadStructure, 0,
                                 "database header must carry 'schema' and 'config'");
            }
            if (h["schema"] != schema_version) {
                throw ParseError(ParseErrorCode::BadStructure, 0,
                                 "unsupported database schema " + h["schema"].dump() +
                                     "; this build reads schema " +
                                     std::to_string(schema_version));
            }
            header_written_ = true;
            continue;
        }
        CodeRecord r = parse_record_json(line);
        keys_.insert(emit_matrix_spec(r.generators));
        records_.push_back(std::move(r));
    }
}

std::size_t ResultDatabase::append(const std::string& config_id,
                                   const std::vector<CodeRecord>& batch) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot write database file: " + path_.string());
    if (!header_written_) {
        out << json{{"schema", schema_version}, {"config", config_id}}.dump() << '\n';
        header_written_ = true;
    }
    std::size_t added = 0;
    for (const CodeRecord& r : batch) {
        if (!keys_.insert(emit_matrix_spec(r.generators)).second) continue;
        out << emit_record_json(r) << '\n';
        records_.push_back(r);
        ++added;
    }
    return added;
}

std::string markdown_table(const std::vector<CodeRecord>& records) {
    std::string out =
        "| N | generators | h* | weights | thin | spanning | width 1 | empty | trivially thin |\n"
        "|---:|---|---|---|:-:|:-:|:-:|:-:|:-:|\n";
    for (const CodeRecord& r : records) {
        out += "| " + std::to_string(r.modulus) + " | " + join_rows(r.generators.rows()) +
               " | " + r.hstar.to_string() + " | " + r.weight_enum.to_string() + " | " +
               yes_no(r.flags.thin) + " | " + yes_no(r.flags.spanning) + " | " +
               yes_no(r.flags.width_one) + " | " + yes_no(r.flags.empty) + " | " +
               yes_no(r.flags.trivially_thin) + " |\n";
    }
    return out;
}

std::string csv_table(const std::vector<CodeRecord>& records) {
    std::string out =
        "modulus,generators,hstar,weight_enum,thin,spanning,width_one,empty,trivially_thin\n";
    for (const CodeRecord& r : records) {
        out += std::to_string(r.modulus) + "," + join_rows(r.generators.rows()) + "," +
               coeff_list(r.hstar) + "," + coeff_list(r.weight_enum) + "," +
               true_false(r.flags.thin) + "," + true_false(r.flags.spanning) + "," +
               true_false(r.flags.width_one) + "," + true_false(r.flags.empty) + "," +
               true_false(r.flags.trivially_thin) + "\n";
    }
    return out;
}

std::string markdown_bound_table(const std::vector<BoundTable>& rows) {
    std::string out =
        "| m | threshold integer | threshold prime | convention |\n|---:|---:|---:|---|\n";
    for (const BoundTable& b : rows) {
        out += "| " + std::to_string(b.m) + " | " + std::to_string(b.threshold_integer) +
               " | " + std::to_string(b.threshold_prime) + " | " +
               convention_name(b.convention) + " |\n";
    }
    return out;
}

std::string csv_bound_table(const std::vector<BoundTable>& rows) {
    std::string out = "m,threshold_integer,threshold_prime,convention\n";
    for (const BoundTable& b : rows) {
        out += std::to_string(b.m) + "," + std::to_string(b.threshold_integer) + "," +
               std::to_string(b.threshold_prime) + "," + convention_name(b.convention) + "\n";
    }
    return out;
}

}  // namespace thincode
