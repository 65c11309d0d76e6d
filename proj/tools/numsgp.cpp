// Command-line front end: semigroup invariants, the ideal census oracle,
// generating functions with their closed forms, path/grid renderings, and
// the verification harness.
//
// Exit codes: 0 success (all checks PASS for verify), 1 computational
// failure or any FAIL, 2 usage/input error. Every error is a single
// stderr line of the form `error[Code] message`.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numsgp/census.hpp"
#include "numsgp/errors.hpp"
#include "numsgp/paths.hpp"
#include "numsgp/qpoly.hpp"
#include "numsgp/render.hpp"
#include "numsgp/semigroup.hpp"
#include "numsgp/tritab.hpp"
#include "numsgp/verify.hpp"

namespace {

using numsgp::Int;
using json = nlohmann::json;  // std::map-backed: keys serialize sorted

// ---------------------------------------------------------------- plumbing

std::string single_line(std::string s) {
    for (char& ch : s)
        if (ch == '\n' || ch == '\r') ch = ' ';
    return s;
}

/// Arbitrary-precision integers ride as JSON numbers while they fit into
/// the double-safe window, as decimal strings beyond it.
json int_to_json(const Int& v) {
    static const Int kSafe = Int(1) << 53;
    if (v >= -kSafe && v <= kSafe) return v.convert_to<std::int64_t>();
    return v.str();
}

json ints_to_json(const std::vector<Int>& values) {
    json arr = json::array();
    for (const Int& v : values) arr.push_back(int_to_json(v));
    return arr;
}

json poly_to_json(const numsgp::IntPolynomial& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(int_to_json(c));
    return arr;
}

struct OutputSink {
    std::string path;  // empty = stdout

    void write(const std::string& payload) const {
        const bool add_newline = !payload.empty() && payload.back() != '\n';
        if (path.empty()) {
            std::cout << payload;
            if (add_newline) std::cout << '\n';
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw numsgp::BadArguments("cannot open output file: " + path);
        out << payload;
        if (add_newline) out << '\n';
    }
};

/// Node budget: --budget beats NUMSGP_BUDGET beats the library default.
numsgp::CensusOptions census_options(std::optional<std::int64_t> budget_flag, int threads) {
    numsgp::CensusOptions opt;
    if (const char* env = std::getenv("NUMSGP_BUDGET")) {
        try {
            opt.node_budget = std::stoll(env);
        } catch (const std::exception&) {
            throw numsgp::BadArguments("NUMSGP_BUDGET is not an integer: " +
                                       std::string(env));
        }
        if (opt.node_budget < 1)
            throw numsgp::BadArguments("NUMSGP_BUDGET must be >= 1");
    }
    if (budget_flag) {
        if (*budget_flag < 1) throw numsgp::BadArguments("--budget must be >= 1");
        opt.node_budget = *budget_flag;
    }
    opt.threads = threads;
    return opt;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const std::string& subcommand) {
    for (const char* ok : allowed)
        if (format == ok) return;
    std::string list;
    for (const char* ok : allowed) {
        if (!list.empty()) list += ", ";
        list += ok;
    }
    throw numsgp::BadArguments(subcommand + " supports --format {" + list + "}, not '" +
                               format + "'");
}

std::string join64(const std::vector<std::int64_t>& v, const char* sep = " ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

// ------------------------------------------------------------ subcommands

int cmd_info(const std::vector<std::int64_t>& gens, const std::string& format,
             const OutputSink& sink) {
    require_format(format, {"text", "json"}, "info");
    numsgp::NumericalSemigroup s = numsgp::make_semigroup(gens);
    std::vector<std::int64_t> gaps = s.gaps();
    std::vector<std::int64_t> small = s.small_elements();
    if (format == "json") {
        json j;
        j["apery"] = s.apery();
        j["embedding_dimension"] = s.embedding_dimension();
        j["frobenius"] = s.frobenius();
        j["gaps"] = gaps;
        j["generators"] = s.generators();
        j["genus"] = s.genus();
        j["multiplicity"] = s.multiplicity();
        j["small_elements"] = small;
        sink.write(j.dump());
        return 0;
    }
    std::ostringstream out;
    out << "generators: " << join64(s.generators()) << '\n'
        << "embedding dimension: " << s.embedding_dimension() << '\n'
        << "multiplicity: " << s.multiplicity() << '\n'
        << "apery: " << join64(s.apery()) << '\n'
        << "frobenius: " << s.frobenius() << '\n'
        << "genus: " << s.genus() << '\n'
        << "gaps: " << join64(gaps) << '\n'
        << "small elements: " << join64(small) << '\n';
    sink.write(out.str());
    return 0;
}

int cmd_census(const std::vector<std::int64_t>& gens, std::int64_t max_codim,
               const numsgp::CensusOptions& options, const std::string& format,
               const OutputSink& sink) {
    require_format(format, {"text", "json", "csv"}, "census");
    numsgp::NumericalSemigroup s = numsgp::make_semigroup(gens);
    numsgp::CensusTable table = numsgp::census(s, max_codim, options);
    if (format == "json") {
        json j;
        j["counts"] = ints_to_json(table.counts);
        j["generators"] = s.generators();
        j["onset"] = table.onset ? json(*table.onset) : json(nullptr);
        j["stable"] = int_to_json(table.stable_value);
        sink.write(j.dump());
        return 0;
    }
    std::ostringstream out;
    if (format == "csv") {
        out << "k,count\n";
        for (std::size_t k = 0; k < table.counts.size(); ++k)
            out << k << ',' << table.counts[k] << '\n';
    } else {
        out << "k  m(S,k)\n";
        for (std::size_t k = 0; k < table.counts.size(); ++k)
            out << k << "  " << table.counts[k] << '\n';
        out << "onset: "
            << (table.onset ? std::to_string(*table.onset) : "not yet constant") << '\n'
            << "stable: " << table.stable_value << '\n';
    }
    sink.write(out.str());
    return 0;
}

/// Series coefficients plus the Theorem-1 numerator for the chosen method.
struct GfResult {
    std::vector<Int> coeffs;
    numsgp::IntPolynomial numerator;
    int degree;
};

GfResult gf_by_method(const std::vector<std::int64_t>& gens, std::int64_t order,
                      const std::string& method, const numsgp::CensusOptions& options) {
    GfResult r;
    if (method == "oracle") {
        numsgp::NumericalSemigroup s = numsgp::make_semigroup(gens);
        numsgp::SeriesTruncation series = numsgp::ideal_gf(s, order, options);
        numsgp::SeriesNumerator f;
        try {
            f = numsgp::extract_numerator(series, s.multiplicity());
        } catch (const numsgp::NotStabilized& ex) {
            throw numsgp::NotStabilized(std::string(ex.what()) +
                                        " (raise -N above frobenius + 2*multiplicity + 2 = " +
                                        std::to_string(s.frobenius() + 2 * s.multiplicity() + 2) +
                                        ")");
        }
        r.coeffs = series.coeffs();
        r.numerator = f.numerator;
        r.degree = f.series_degree;
        return r;
    }

    numsgp::GFRational gf;
    std::int64_t divisor_len = 0;  // the closed forms are f(q)·(1+q+..)/(1−q^a)
    if (method == "closed2") {
        if (gens.size() != 2)
            throw numsgp::BadArguments("--method closed2 needs exactly two generators");
        gf = numsgp::closed_form_two_gen(gens[0], gens[1]);
        divisor_len = gens[0];
    } else if (method == "tri") {
        if (gens.size() != 3)
            throw numsgp::BadArguments("--method tri needs exactly three generators");
        gf = numsgp::thm_tri_gf(gens[0], gens[1], gens[2], options);
        divisor_len = gens[0];
    } else if (method == "family3") {
        if (gens.size() != 3 || gens[0] != 3 || gens[2] != 2 * (gens[1] - 2) + 1)
            throw numsgp::BadArguments(
                "--method family3 needs generators of the shape 3, n+2, 2n+1");
        gf = numsgp::family_gf_3(gens[1] - 2).closed;
        divisor_len = 3;
    } else {
        throw numsgp::BadArguments("unknown --method '" + method +
                                   "' (expected oracle, closed2, tri, or family3)");
    }
    r.coeffs = numsgp::expand(gf, static_cast<int>(order)).coeffs();
    // numerator/(1−q^a) = f/(1−q), so f = numerator / (1 + q + ... + q^{a−1}).
    r.numerator = numsgp::exact_div(gf.numerator, numsgp::IntPolynomial::geometric_block(
                                                      static_cast<int>(divisor_len)));
    r.degree = r.numerator.degree() - 1;
    return r;
}

int cmd_gf(const std::vector<std::int64_t>& gens, std::int64_t order,
           const std::string& method, const numsgp::CensusOptions& options,
           const std::string& format, const OutputSink& sink) {
    require_format(format, {"text", "json", "csv", "latex"}, "gf");
    if (order < 0) throw numsgp::BadArguments("-N must be >= 0");
    GfResult r = gf_by_method(gens, order, method, options);
    if (format == "json") {
        json j;
        j["coeffs"] = ints_to_json(r.coeffs);
        j["degree"] = r.degree;
        j["generators"] = gens;
        j["method"] = method;
        j["numerator"] = poly_to_json(r.numerator);
        sink.write(j.dump());
        return 0;
    }
    std::ostringstream out;
    if (format == "csv") {
        out << "k,count\n";
        for (std::size_t k = 0; k < r.coeffs.size(); ++k)
            out << k << ',' << r.coeffs[k] << '\n';
    } else if (format == "latex") {
        out << "\\frac{" << numsgp::latex_polynomial(r.numerator) << "}{1-q}\n";
    } else {
        out << "coeffs:";
        for (const Int& c : r.coeffs) out << ' ' << c;
        out << '\n'
            << "numerator: " << r.numerator.to_string() << '\n'
            << "degree: " << r.degree << '\n'
            << "method: " << method << '\n';
    }
    sink.write(out.str());
    return 0;
}

int report_to_sink(const numsgp::VerifyReport& report, const std::string& format,
                   const OutputSink& sink) {
    if (format == "json") {
        json arr = json::array();
        for (const numsgp::CheckResult& c : report.checks) {
            json j;
            j["actual"] = c.actual;
            j["expected"] = c.expected;
            j["ms"] = static_cast<std::int64_t>(c.ms + 0.5);
            j["name"] = c.name;
            j["status"] = numsgp::to_string(c.status);
            arr.push_back(std::move(j));
        }
        json top;
        top["checks"] = std::move(arr);
        top["passed"] = report.all_passed();
        sink.write(top.dump());
    } else {
        std::ostringstream out;
        for (const numsgp::CheckResult& c : report.checks)
            out << numsgp::format_check_line(c) << '\n';
        out << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << '\n';
        sink.write(out.str());
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_verify(const std::vector<std::int64_t>& gens, std::optional<std::int64_t> family_n,
               bool suite, const numsgp::CensusOptions& options, const std::string& format,
               const OutputSink& sink) {
    require_format(format, {"text", "json"}, "verify");
    int modes = (!gens.empty() ? 1 : 0) + (family_n ? 1 : 0) + (suite ? 1 : 0);
    if (modes != 1)
        throw numsgp::BadArguments(
            "verify needs exactly one of: generators, --family3 N, --suite");
    numsgp::VerifyReport report;
    if (suite) report = numsgp::acceptance_suite(options);
    else if (family_n) report = numsgp::verify_family3(*family_n, options);
    else report = numsgp::verify_semigroup(gens, options);
    return report_to_sink(report, format, sink);
}

int cmd_paths(std::int64_t a, std::int64_t b, std::optional<std::int64_t> codim,
              const std::string& word, const numsgp::CensusOptions& options,
              const std::string& format, const OutputSink& sink) {
    if (word.empty() == !codim)
        throw numsgp::BadArguments("paths needs exactly one of --codim K or --word W");

    if (!word.empty()) {
        require_format(format, {"text", "json", "svg"}, "paths --word");
        if (auto why = numsgp::word_violation(word, a, b))
            throw numsgp::InvalidWord(*why);
        numsgp::IdealGapSet d = numsgp::word_to_gapset(word, a, b);
        std::vector<std::int64_t> minima = numsgp::row_minima(word, a, b);
        if (format == "svg") {
            sink.write(numsgp::render_path_svg(word, a, b));
        } else if (format == "json") {
            json j;
            j["codim"] = d.codim();
            j["gapset"] = d.gaps_of_ideal;
            j["row_minima"] = minima;
            j["word"] = word;
            sink.write(j.dump());
        } else {
            std::ostringstream out;
            out << "word: " << word << '\n'
                << "gap set: {" << join64(d.gaps_of_ideal, ", ") << "}\n"
                << "codim: " << d.codim() << '\n'
                << "row minima: " << join64(minima, ", ") << '\n'
                << numsgp::render_path_text(word, a, b);
            sink.write(out.str());
        }
        return 0;
    }

    require_format(format, {"text", "json"}, "paths --codim");
    if (*codim > 12)
        throw numsgp::BadArguments("paths --codim listing is capped at 12");
    std::vector<std::string> words = numsgp::words_of_codim(a, b, *codim, options);
    if (format == "json") {
        json arr = json::array();
        for (const std::string& w : words) {
            numsgp::IdealGapSet d = numsgp::word_to_gapset(w, a, b);
            json j;
            j["gapset"] = d.gaps_of_ideal;
            j["row_minima"] = numsgp::row_minima(w, a, b);
            j["word"] = w;
            arr.push_back(std::move(j));
        }
        json top;
        top["a"] = a;
        top["b"] = b;
        top["codim"] = *codim;
        top["words"] = std::move(arr);
        sink.write(top.dump());
    } else {
        std::ostringstream out;
        for (const std::string& w : words) {
            numsgp::IdealGapSet d = numsgp::word_to_gapset(w, a, b);
            out << w << "  gaps {" << join64(d.gaps_of_ideal, ", ") << "}  minima {"
                << join64(numsgp::row_minima(w, a, b), ", ") << "}\n";
        }
        out << words.size() << " word(s) of codim " << *codim << '\n';
        sink.write(out.str());
    }
    return 0;
}

int cmd_grid(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t columns,
             const std::string& format, const OutputSink& sink) {
    require_format(format, {"text", "json", "csv", "latex", "svg"}, "grid");
    if (columns < 1) throw numsgp::BadArguments("--columns must be >= 1");
    numsgp::TabularGrid g = numsgp::build_grid(a, b, c);
    if (format == "svg") {
        sink.write(numsgp::render_grid_svg(g, columns));
    } else if (format == "json") {
        json rows = json::array();
        for (const auto& row : numsgp::grid_rows(g, columns)) rows.push_back(row);
        sink.write(rows.dump());
    } else if (format == "csv") {
        sink.write(numsgp::to_csv(numsgp::grid_rows(g, columns)));
    } else if (format == "latex") {
        sink.write(numsgp::to_latex_table(numsgp::grid_rows(g, columns)));
    } else {
        sink.write(numsgp::render_grid_text(g, columns));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup ideals: census oracle, closed forms, verification"};
    app.require_subcommand(1);

    std::vector<std::int64_t> gens;
    std::string format = "text";
    std::string out_path;
    std::string method = "oracle";
    std::string word;
    std::int64_t max_codim = 0, order = 0, columns = 6;
    std::optional<std::int64_t> budget_flag, codim_flag, family_n;
    int threads = 1;
    bool suite = false;

    auto add_common = [&](CLI::App* sub, bool with_census_knobs) {
        sub->add_option("--format", format, "output format")->capture_default_str();
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
        if (with_census_knobs) {
            sub->add_option("--budget", budget_flag,
                            "node budget for enumeration (overrides NUMSGP_BUDGET)");
            sub->add_option("--threads", threads, "worker threads for the census")
                ->capture_default_str();
        }
    };

    CLI::App* info = app.add_subcommand("info", "invariants of a numerical semigroup");
    info->add_option("generators", gens, "semigroup generators")->required();
    add_common(info, false);

    CLI::App* census = app.add_subcommand("census", "count ideals by codimension");
    census->add_option("generators", gens, "semigroup generators")->required();
    census->add_option("-K,--max-codim", max_codim, "largest codimension to count")
        ->required();
    add_common(census, true);

    CLI::App* gf = app.add_subcommand("gf", "ideal generating function");
    gf->add_option("generators", gens, "semigroup generators")->required();
    gf->add_option("-N,--order", order, "series truncation order")->required();
    gf->add_option("--method", method, "oracle | closed2 | tri | family3")
        ->capture_default_str();
    add_common(gf, true);

    CLI::App* verify = app.add_subcommand("verify", "cross-check the closed forms");
    verify->add_option("generators", gens, "semigroup generators");
    verify->add_option("--family3", family_n, "check the 3, n+2, 2n+1 family at this n");
    verify->add_flag("--suite", suite, "run the full acceptance battery");
    add_common(verify, true);

    CLI::App* paths = app.add_subcommand("paths", "two-generator lattice paths");
    paths->add_option("a", gens, "generators a b (a = number of grid rows)")
        ->expected(2)
        ->required();
    paths->add_option("--codim", codim_flag, "list all words of this codimension (<= 12)");
    paths->add_option("--word", word, "inspect/render one word over {D,R}");
    add_common(paths, true);

    CLI::App* grid = app.add_subcommand("grid", "three-generator tabular grid");
    grid->add_option("generators", gens, "generators a b c")->expected(3)->required();
    grid->add_option("--columns", columns, "columns to print")->capture_default_str();
    add_common(grid, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        OutputSink sink{out_path};
        if (info->parsed()) return cmd_info(gens, format, sink);
        if (census->parsed())
            return cmd_census(gens, max_codim, census_options(budget_flag, threads), format,
                              sink);
        if (gf->parsed())
            return cmd_gf(gens, order, method, census_options(budget_flag, threads), format,
                          sink);
        if (verify->parsed())
            return cmd_verify(gens, family_n, suite, census_options(budget_flag, threads),
                              format, sink);
        if (paths->parsed())
            return cmd_paths(gens[0], gens[1], codim_flag, word,
                             census_options(budget_flag, threads), format, sink);
        if (grid->parsed()) return cmd_grid(gens[0], gens[1], gens[2], columns, format, sink);
        throw numsgp::BadArguments("no subcommand selected");
    } catch (const numsgp::Error& err) {
        std::cerr << "error[" << err.code() << "] " << single_line(err.what()) << '\n';
        return err.kind() == numsgp::ErrorKind::Usage ? 2 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error[Internal] " << single_line(ex.what()) << '\n';
        return 1;
    }
}
