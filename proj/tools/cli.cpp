#include "cli.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thincode/bounds.hpp"
#include "thincode/code.hpp"
#include "thincode/io.hpp"
#include "thincode/search.hpp"
#include "thincode/simplex.hpp"

namespace thincode {

namespace {

using nlohmann::json;

bool looks_like_vertex_spec(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == 'd';
    }
    return false;
}

std::string join_cell(const std::vector<Word>& rows) {
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

std::string tuple_string(const std::vector<std::int64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string poly_string(const json& coeffs) {
    return HeightPolynomial(coeffs.get<std::vector<std::int64_t>>()).to_string();
}

json geometry_report(const LatticeSimplex& s, std::int64_t width_bound) {
    json g;
    g["dimension"] = s.dim();
    g["volume"] = normalized_volume(s).str();
    g["quotient_group"] = quotient_group(s);
    PointProfile p = point_profile(s);
    g["point_profile"] = {{"total", p.total_lattice_points},
                          {"interior", p.interior_points},
                          {"empty", p.is_empty},
                          {"hollow", p.is_hollow}};
    WidthReport w = width_report(s, width_bound);
    g["width"] = {{"is_width_one", w.is_width_one},
                  {"width_upper", w.width_upper},
                  {"certificate", w.certificate},
                  {"bound", width_bound}};
    return g;
}

// invariants readable straight off the code; geometry is attached by the
// caller, which knows which simplex the code came from
json code_report(const LinearCode& code) {
    json r;
    r["modulus"] = code.modulus();
    r["length"] = code.length();
    r["word_count"] = code.word_count();
    GeneratingMatrix gens = generators_of(code);
    r["generators"] = gens.rows();
    HeightPolynomial h = hstar(code);
    r["hstar"] = h.coefficients();
    r["lstar"] = lstar(code).coefficients();
    r["weight_enum"] = weight_enumerator(code).coefficients();
    r["thin"] = is_thin(code);
    r["degenerate"] = is_degenerate(code);
    r["direct_sum"] = find_direct_sum(code).has_value();
    r["spanning"] = is_spanning(code);
    r["width_one"] = cayley_partition(gens).size() >= 2;
    std::int64_t dim = static_cast<std::int64_t>(code.length()) - 1;
    r["trivially_thin"] = 2 * static_cast<std::int64_t>(h.is_zero() ? 0 : h.degree()) <= dim;
    return r;
}

json analyze_matrix(const GeneratingMatrix& g, std::int64_t width_bound) {
    LinearCode code = span_words(g);
    json r = code_report(code);
    r["kind"] = "matrix";
    r["input"] = emit_matrix_spec(g);
    LinearCode prim = primitivize(code);
    std::int64_t content = code.modulus() / prim.modulus();
    r["content"] = content;
    try {
        LatticeSimplex s = code_to_simplex(prim);
        r["geometry"] = geometry_report(s, width_bound);
        if (content > 1) {
            r["geometry"]["note"] = "geometry uses the primitivized code over Z_" +
                                    std::to_string(prim.modulus());
        }
    } catch (const std::exception& e) {
        r["geometry"] = json{{"unavailable", e.what()}};
    }
    return r;
}

json analyze_simplex(const LatticeSimplex& s, std::int64_t width_bound) {
    CodeOfSimplex cs = simplex_to_code(s);
    json r = code_report(cs.code);
    r["kind"] = "vertices";
    r["input"] = emit_vertex_spec(s);
    r["content"] = 1;
    r["geometry"] = geometry_report(s, width_bound);
    return r;
}

void print_geometry(std::ostream& out, const json& g) {
    if (g.contains("unavailable")) {
        out << "geometry: unavailable (" << g["unavailable"].get<std::string>() << ")\n";
        return;
    }
    out << "dimension: " << g["dimension"] << "\n";
    out << "volume: " << g["volume"].get<std::string>() << "\n";
    out << "quotient group: "
        << tuple_string(g["quotient_group"].get<std::vector<std::int64_t>>()) << "\n";
    const json& p = g["point_profile"];
    out << "points: " << p["total"] << " total, " << p["interior"] << " interior\n";
    out << "empty: " << yes_no(p["empty"].get<bool>())
        << "\nhollow: " << yes_no(p["hollow"].get<bool>()) << "\n";
    const json& w = g["width"];
    out << "width upper bound: " << w["width_upper"] << " via functional "
        << tuple_string(w["certificate"].get<std::vector<std::int64_t>>())
        << " (search bound " << w["bound"] << ")\n";
    if (g.contains("note")) out << "note: " << g["note"].get<std::string>() << "\n";
}

void print_analysis(std::ostream& out, const json& r) {
    out << "input: " << r["input"].get<std::string>() << "\n";
    out << "modulus: " << r["modulus"] << "\n";
    out << "length: " << r["length"] << "\n";
    out << "words: " << r["word_count"] << "\n";
    out << "generators: " << join_cell(r["generators"].get<std::vector<Word>>()) << "\n";
    out << "h*: " << poly_string(r["hstar"]) << "\n";
    out << "l*: " << poly_string(r["lstar"]) << "\n";
    out << "weights: " << poly_string(r["weight_enum"]) << "\n";
    for (const char* flag :
         {"thin", "degenerate", "direct_sum", "spanning", "width_one", "trivially_thin"}) {
        std::string label = flag;
        for (char& c : label) {
            if (c == '_') c = ' ';
        }
        out << label << ": " << yes_no(r[flag].get<bool>()) << "\n";
    }
    if (r["content"].get<std::int64_t>() > 1) out << "content: " << r["content"] << "\n";
    print_geometry(out, r["geometry"]);
}

int cmd_analyze(const std::string& spec, std::int64_t width_bound, bool as_json,
                std::ostream& out) {
    json r = looks_like_vertex_spec(spec)
                 ? analyze_simplex(parse_vertex_spec(spec), width_bound)
                 : analyze_matrix(parse_matrix_spec(spec), width_bound);
    if (as_json) {
        out << r.dump() << "\n";
    } else {
        print_analysis(out, r);
    }
    return 0;
}

int cmd_convert(const std::string& spec, bool as_json, std::ostream& out, std::ostream& err) {
    if (looks_like_vertex_spec(spec)) {
        LatticeSimplex s = parse_vertex_spec(spec);
        CodeOfSimplex cs = simplex_to_code(s);
        std::string matrix = emit_matrix_spec(generators_of(cs.code));
        if (as_json) {
            out << json{{"kind", "matrix"}, {"matrix", matrix}, {"modulus", cs.modulus}}.dump()
                << "\n";
        } else {
            out << matrix << "\n";
        }
        return 0;
    }
    GeneratingMatrix g = parse_matrix_spec(spec);
    LinearCode code = span_words(g);
    LinearCode prim = primitivize(code);
    bool primitivized = prim.modulus() != code.modulus();
    if (primitivized) {
        err << "note: the code has content " << code.modulus() / prim.modulus()
            << "; converting its primitivization over Z_" << prim.modulus() << "\n";
    }
    LatticeSimplex s = code_to_simplex(prim);
    std::string vertices = emit_vertex_spec(s);
    if (as_json) {
        out << json{{"kind", "vertices"},
                    {"vertices", vertices},
                    {"modulus", prim.modulus()},
                    {"primitivized", primitivized}}
                   .dump()
            << "\n";
    } else {
        out << vertices << "\n";
    }
    return 0;
}

LatticeSimplex simplex_from_spec(const std::string& spec, std::ostream& err) {
    if (looks_like_vertex_spec(spec)) return parse_vertex_spec(spec);
    LinearCode code = span_words(parse_matrix_spec(spec));
    LinearCode prim = primitivize(code);
    if (prim.modulus() != code.modulus()) {
        err << "note: joining the primitivization of '" << emit_matrix_spec(generators_of(code))
            << "' over Z_" << prim.modulus() << "\n";
    }
    return code_to_simplex(prim);
}

int cmd_join(const std::string& spec_a, const std::string& spec_b, bool as_json,
             std::ostream& out, std::ostream& err) {
    LatticeSimplex joined =
        free_join(simplex_from_spec(spec_a, err), simplex_from_spec(spec_b, err));
    CodeOfSimplex cs = simplex_to_code(joined);
    HeightPolynomial h = hstar(cs.code);
    if (as_json) {
        out << json{{"vertices", emit_vertex_spec(joined)},
                    {"dimension", joined.dim()},
                    {"volume", normalized_volume(joined).str()},
                    {"modulus", cs.modulus},
                    {"hstar", h.coefficients()},
                    {"thin", is_thin(cs.code)}}
                   .dump()
            << "\n";
    } else {
        out << emit_vertex_spec(joined) << "\n";
        out << "dimension: " << joined.dim() << "\n";
        out << "volume: " << normalized_volume(joined).str() << "\n";
        out << "h*: " << h.to_string() << "\n";
        out << "thin: " << yes_no(is_thin(cs.code)) << "\n";
    }
    return 0;
}

int cmd_bounds(std::int64_t m, bool all, const std::string& convention_name, bool as_json,
               bool as_csv, std::ostream& out, std::ostream& err) {
    CompositionConvention convention = resolve_convention();
    if (convention_name == "tuple-count") convention = CompositionConvention::TupleCount;
    if (convention_name == "totient-like") convention = CompositionConvention::TotientLike;

    if (all && m >= 0) {
        err << "give either a single m or --all, not both\n";
        return 1;
    }
    std::vector<std::int64_t> ms;
    if (all) {
        ms = {2, 3, 4, 5, 6, 7};
    } else if (m >= 0) {
        ms = {m};
    } else {
        err << "bounds needs a composition count m (2..7) or --all\n";
        return 1;
    }
    std::vector<BoundTable> rows;
    for (std::int64_t mi : ms) rows.push_back(n_m_bound(mi, convention));

    if (as_json) {
        json arr = json::array();
        for (const BoundTable& b : rows) {
            arr.push_back({{"m", b.m},
                           {"threshold_integer", b.threshold_integer},
                           {"threshold_prime", b.threshold_prime},
                           {"convention", b.convention == CompositionConvention::TupleCount
                                              ? "tuple-count"
                                              : "totient-like"}});
        }
        out << arr.dump() << "\n";
    } else if (as_csv) {
        out << csv_bound_table(rows);
    } else {
        out << markdown_bound_table(rows);
    }
    return 0;
}

struct SearchOutput {
    bool as_json = false;
    bool as_csv = false;
    std::string db_path;
};

void append_db(const std::string& path, const std::string& id,
               const std::vector<CodeRecord>& records, std::ostream& err) {
    if (path.empty()) return;
    ResultDatabase db(path);
    std::size_t added = db.append(id, records);
    err << "database " << path << ": " << added << " new record(s), " << db.records().size()
        << " total\n";
}

void write_records(const std::string& id, const std::vector<CodeRecord>& records,
                   const SearchOutput& mode, std::ostream& out, std::ostream& err) {
    append_db(mode.db_path, id, records, err);
    if (mode.as_json) {
        out << json{{"schema", ResultDatabase::schema_version}, {"config", id}}.dump() << "\n";
        for (const CodeRecord& r : records) out << emit_record_json(r) << "\n";
    } else if (mode.as_csv) {
        out << csv_table(records);
    } else {
        out << markdown_table(records);
        out << "\n" << records.size() << " class(es); config " << id << "\n";
    }
}

int cmd_search(const SearchConfig& cfg, const SearchOutput& mode, std::ostream& out,
               std::ostream& err) {
    std::vector<CodeRecord> records = enumerate_thin_codes(cfg);
    write_records(config_identifier(cfg), records, mode, out, err);
    return 0;
}

struct ReferenceFacts {
    std::vector<std::int64_t> hstar;
    bool spanning;
    bool width_one;
};

// invariants of the ten reference classes, index-aligned with
// d4_reference_generators(): six sporadic classes, then the family at
// N = 2, 4, 6, 8
const std::vector<ReferenceFacts>& reference_facts() {
    static const std::vector<ReferenceFacts> facts{
        {{1, 10, 5}, true, false},  {{1, 1, 7}, false, true},
        {{1, 2, 5}, false, true},   {{1, 3, 11, 1}, false, false},
        {{1, 6, 9}, true, false},   {{1, 3, 11, 1}, false, false},
        {{1, 1, 2}, false, true},   {{1, 2, 5}, false, true},
        {{1, 3, 8}, false, true},   {{1, 4, 11}, false, true},
    };
    return facts;
}

std::vector<std::string> classify_diff(const std::vector<CodeRecord>& records) {
    std::vector<std::string> diff;
    std::map<LinearCode, const CodeRecord*> by_canonical;
    for (const CodeRecord& r : records) by_canonical[r.canonical] = &r;

    std::vector<GeneratingMatrix> refs = d4_reference_generators();
    const std::vector<ReferenceFacts>& facts = reference_facts();
    std::set<LinearCode> expected;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        LinearCode canon = canonical_form(span_words(refs[i]));
        expected.insert(canon);
        std::string name = emit_matrix_spec(refs[i]);
        auto it = by_canonical.find(canon);
        if (it == by_canonical.end()) {
            diff.push_back("missing class: " + name);
            continue;
        }
        const CodeRecord& r = *it->second;
        if (r.hstar.coefficients() != facts[i].hstar) {
            diff.push_back("class " + name + ": h* is " + r.hstar.to_string() + ", expected " +
                           HeightPolynomial(facts[i].hstar).to_string());
        }
        if (r.flags.spanning != facts[i].spanning) {
            diff.push_back("class " + name + ": spanning is " + yes_no(r.flags.spanning) +
                           ", expected " + yes_no(facts[i].spanning));
        }
        if (r.flags.width_one != facts[i].width_one) {
            diff.push_back("class " + name + ": width 1 is " + yes_no(r.flags.width_one) +
                           ", expected " + yes_no(facts[i].width_one));
        }
    }
    for (const CodeRecord& r : records) {
        if (!expected.count(r.canonical)) {
            diff.push_back("unexpected class: " + emit_matrix_spec(r.generators));
        }
    }
    return diff;
}

int cmd_classify_d4(std::int64_t threads, const SearchOutput& mode, std::ostream& out,
                    std::ostream& err) {
    std::vector<CodeRecord> records = classify_d4(threads);
    std::vector<std::string> diff = classify_diff(records);
    std::string id = records.empty() ? std::string("classify-d4") : records.front().config_id;

    if (mode.as_json) {
        append_db(mode.db_path, id, records, err);
        json result;
        result["match"] = diff.empty();
        result["diff"] = diff;
        result["classes"] = json::array();
        for (const CodeRecord& r : records) {
            result["classes"].push_back(json::parse(emit_record_json(r)));
        }
        out << result.dump() << "\n";
    } else {
        write_records(id, records, mode, out, err);
        if (diff.empty()) {
            if (!mode.as_csv) {
                out << "classification matches the built-in reference: " << records.size()
                    << " classes\n";
            }
        } else {
            for (const std::string& line : diff) err << "diff: " << line << "\n";
        }
    }
    return diff.empty() ? 0 : 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"extended linear codes of lattice simplices: analysis and search"};
    app.name("thincode");
    app.require_subcommand(1);

    std::int64_t seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized self-checks (every current command is deterministic)");

    // analyze
    std::string analyze_spec;
    std::int64_t analyze_width_bound = 3;
    bool analyze_json = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "full report for one code matrix or vertex list");
    analyze->add_option("spec", analyze_spec,
                        "matrix 'N=4; 0 0 1 1 2; 2 2 1 3 0' or vertices 'd=2; 0 0; 2 0; 0 2'")
        ->required();
    analyze->add_option("--width-bound", analyze_width_bound,
                        "functional entry bound for the width scan");
    analyze->add_flag("--json", analyze_json, "machine-readable output");

    // search
    SearchConfig cfg;
    SearchOutput search_mode;
    std::string equivalence = "full";
    bool skip_pyramids = false;
    bool no_prefilter = false;
    CLI::App* search =
        app.add_subcommand("search", "enumerate thin code classes for a configuration");
    search->add_option("--moduli", cfg.moduli, "moduli to scan, e.g. 2,3,4")
        ->required()
        ->delimiter(',');
    search->add_option("--dimension", cfg.dimension, "simplex dimension (code length - 1)");
    search->add_option("--max-rows", cfg.max_rows, "generator rows per code");
    search->add_option("--epsilon", cfg.entry_cap_epsilon,
                       "entry cap N-1-epsilon on enumerated rows");
    search->add_option("--equivalence", equivalence, "class identity: full or fingerprint")
        ->check(CLI::IsMember({"full", "fingerprint"}));
    search->add_flag("--skip-pyramid-bases", skip_pyramids,
                     "drop degenerate bases from row three on (lossy shortcut)");
    search->add_flag("--no-prefilter", no_prefilter, "disable the thinness prefilter");
    search->add_option("--budget", cfg.budget, "candidate budget; exceeding it refuses the run");
    search->add_option("--threads", cfg.threads, "worker threads");
    search->add_option("--db", search_mode.db_path, "append results to this JSON-lines file");
    search->add_flag("--json", search_mode.as_json, "JSON-lines output (header, then records)");
    search->add_flag("--csv", search_mode.as_csv, "CSV table output")
        ->excludes(search->get_option("--json"));

    // classify-d4
    std::int64_t classify_threads = 0;
    SearchOutput classify_mode;
    CLI::App* classify = app.add_subcommand(
        "classify-d4", "run the four-dimensional classification and diff it "
                       "against the built-in reference");
    classify->add_option("--threads", classify_threads, "worker threads (0 = hardware)");
    classify->add_option("--db", classify_mode.db_path, "append results to this JSON-lines file");
    classify->add_flag("--json", classify_mode.as_json, "machine-readable output");
    classify->add_flag("--csv", classify_mode.as_csv, "CSV table output")
        ->excludes(classify->get_option("--json"));

    // bounds
    std::int64_t bounds_m = -1;
    bool bounds_all = false;
    std::string bounds_convention = "auto";
    bool bounds_json = false;
    bool bounds_csv = false;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "spanning thresholds: largest n passing the step-count test");
    bounds->add_option("m", bounds_m, "composition count, 2..7");
    bounds->add_flag("--all", bounds_all, "the whole table, m = 2..7");
    bounds->add_option("--convention", bounds_convention,
                       "coprime composition convention")
        ->check(CLI::IsMember({"auto", "tuple-count", "totient-like"}));
    bounds->add_flag("--json", bounds_json, "machine-readable output");
    bounds->add_flag("--csv", bounds_csv, "CSV table output")
        ->excludes(bounds->get_option("--json"));

    // convert
    std::string convert_spec;
    bool convert_json = false;
    CLI::App* convert = app.add_subcommand(
        "convert", "matrix spec to vertex spec, or vertex spec to matrix spec");
    convert->add_option("spec", convert_spec, "input in either form")->required();
    convert->add_flag("--json", convert_json, "machine-readable output");

    // join
    std::string join_a;
    std::string join_b;
    bool join_json = false;
    CLI::App* join_cmd = app.add_subcommand(
        "join", "free join of two simplices, each given as matrix or vertices");
    join_cmd->add_option("first", join_a, "first input in either form")->required();
    join_cmd->add_option("second", join_b, "second input in either form")->required();
    join_cmd->add_flag("--json", join_json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_spec, analyze_width_bound, analyze_json, out);
        if (*search) {
            cfg.equivalence =
                equivalence == "full" ? Equivalence::Full : Equivalence::Fingerprint;
            cfg.skip_pyramid_bases_from_row_three = skip_pyramids;
            cfg.use_thinness_prefilter = !no_prefilter;
            return cmd_search(cfg, search_mode, out, err);
        }
        if (*classify) return cmd_classify_d4(classify_threads, classify_mode, out, err);
        if (*bounds) {
            return cmd_bounds(bounds_m, bounds_all, bounds_convention, bounds_json, bounds_csv,
                              out, err);
        }
        if (*convert) return cmd_convert(convert_spec, convert_json, out, err);
        if (*join_cmd) return cmd_join(join_a, join_b, join_json, out, err);
    } catch (const ParseError& e) {
        err << "parse error at offset " << e.position() << ": " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand selected\n";
    return 1;
}

}  // namespace thincode
