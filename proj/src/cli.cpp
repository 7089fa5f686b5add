#include "bumpkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "bumpkit/bump_diagram.hpp"
#include "bumpkit/genfun.hpp"
#include "bumpkit/report.hpp"
#include "bumpkit/rs.hpp"
#include "bumpkit/statistics.hpp"
#include "bumpkit/verify.hpp"
#include "bumpkit/viennot.hpp"

namespace bumpkit {

namespace {

int env_cap(int fallback) {
    const char* value = std::getenv("BUMPKIT_MAX_N");
    if (!value) return fallback;
    try {
        return std::max(0, std::stoi(value));
    } catch (const std::exception&) {
        return fallback;
    }
}

void write_output(const std::string& content, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw IoError("error writing '" + path + "'");
}

int run_stats(const std::string& perm_text, const std::string& format, std::ostream& out) {
    const auto p = parse_permutation(perm_text);
    const auto report = make_stats_report(p);
    out << (format == "json" ? stats_to_json(report) + "\n" : stats_to_text(report));
    return 0;
}

int run_poly(const std::string& kind, int n, std::string method, const std::string& format,
             std::ostream& out) {
    const int enum_cap = env_cap(kEnumerationCap);
    const int exhaustive_cap = env_cap(kExhaustiveCap);

    std::string text, json;
    const auto univariate = [&](const SparsePolynomial& p) {
        text = p.to_string();
        json = p.to_json(n);
    };
    if (kind == "bn") {
        if (method.empty()) method = "shape";
        if (method == "enum")
            univariate(bn_by_enumeration(n, enum_cap));
        else if (method == "shape")
            univariate(bn_by_shapes(n));
        else
            throw Error("poly bn supports --method enum|shape");
    } else if (kind == "bn321") {
        if (method.empty()) method = "closed";
        if (method == "closed")
            univariate(bn_321_closed_form(n));
        else if (method == "enum")
            univariate(bn_321_by_enumeration(n, exhaustive_cap));
        else
            throw Error("poly bn321 supports --method closed|enum");
    } else if (kind == "tn") {
        if (method.empty()) method = "direct";
        if (method == "direct")
            univariate(tn_direct(n));
        else if (method == "product")
            univariate(tn_via_product(n));
        else
            throw Error("poly tn supports --method direct|product");
    } else if (kind == "weakbump") {
        if (method.empty()) method = "shape";
        if (method == "shape")
            univariate(weakbump_polynomial(n));
        else if (method == "enum")
            univariate(weakbump_polynomial_by_enumeration(n, enum_cap));
        else
            throw Error("poly weakbump supports --method shape|enum");
    } else if (kind == "head") {
        if (!method.empty()) throw Error("poly head has a single method");
        univariate(tn_head_series(n));
    } else if (kind == "bivariate") {
        if (method.empty()) method = "shape";
        BivariatePolynomial b;
        if (method == "enum")
            b = bn_bivariate(n, enum_cap);
        else if (method == "shape")
            b = bn_bivariate_by_shapes(n);
        else
            throw Error("poly bivariate supports --method enum|shape");
        text = b.to_string();
        json = b.to_json(n);
    } else {
        throw Error("unknown polynomial kind '" + kind + "'");
    }
    out << (format == "json" ? json : text) << '\n';
    return 0;
}

int run_render(const std::string& kind, const std::string& perm_text, const std::string& format,
               const std::string& output, std::ostream& out) {
    const auto p = parse_permutation(perm_text);
    std::string content;
    if (kind == "shadows") {
        if (format != "svg") throw Error("render shadows supports --format svg");
        content = render_shadows_svg(shadow_diagram(p));
    } else {
        const auto d = build_bump_diagram(p);
        if (format == "ascii")
            content = render_diagram_ascii(d);
        else if (format == "svg")
            content = render_diagram_svg(d);
        else
            throw Error("render diagram supports --format ascii|svg");
    }
    write_output(content, output, out);
    return 0;
}

// Golden tables: Table-1 polynomials, B_8, and T_n up to 12.
std::vector<std::pair<std::string, std::string>> golden_contents() {
    std::ostringstream table1, b8, tn12;
    for (int n = 1; n <= 5; ++n)
        table1 << "B_" << n << "(q) = " << bn_by_shapes(n).to_string() << '\n';
    for (int n = 1; n <= 5; ++n)
        table1 << "T_" << n << "(q) = " << tn_direct(n).to_string() << '\n';
    b8 << "B_8(q) = " << bn_by_shapes(8).to_string() << '\n';
    for (int n = 1; n <= 12; ++n)
        tn12 << "T_" << n << "(q) = " << tn_direct(n).to_string() << '\n';
    return {{"table1.txt", table1.str()}, {"b8.txt", b8.str()}, {"tn12.txt", tn12.str()}};
}

int run_golden(const std::string& dir, bool write, std::ostream& out, std::ostream& err) {
    int mismatches = 0;
    for (const auto& [name, content] : golden_contents()) {
        const std::string path = dir + "/" + name;
        if (write) {
            write_output(content, path, out);
            out << "wrote " << path << '\n';
            continue;
        }
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            err << "missing golden file " << path << " (use --write to create)\n";
            ++mismatches;
            continue;
        }
        std::stringstream buffer;
        buffer << file.rdbuf();
        if (buffer.str() == content) {
            out << "ok " << path << '\n';
        } else {
            err << "MISMATCH " << path << '\n';
            ++mismatches;
        }
    }
    return mismatches == 0 ? 0 : 1;
}

} // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bumpkit: Robinson-Schensted insertion, bump statistics, and their "
                 "generating polynomials"};
    app.require_subcommand(1);

    std::string perm_text, format = "text", method, output, kind;
    int n = 0;

    auto* stats = app.add_subcommand("stats", "shape, (P,Q), bump data for a permutation");
    stats->add_option("permutation", perm_text,
                      "one-line word: digits (n <= 9) or comma/space separated")
        ->required();
    stats->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* poly = app.add_subcommand("poly", "bump generating polynomials");
    poly->add_option("kind", kind, "bn|bn321|tn|bivariate|weakbump|head")
        ->required()
        ->check(CLI::IsMember({"bn", "bn321", "tn", "bivariate", "weakbump", "head"}));
    poly->add_option("n", n, "size (for head: the maximum exponent)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    poly->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    poly->add_option("--method", method, "computation route where several exist");

    auto* render = app.add_subcommand("render", "shadow or bump-diagram renderings");
    render->add_option("kind", kind, "shadows|diagram")
        ->required()
        ->check(CLI::IsMember({"shadows", "diagram"}));
    render->add_option("permutation", perm_text, "permutation to draw")->required();
    std::string render_format;
    render->add_option("--format", render_format, "svg|ascii")
        ->check(CLI::IsMember({"svg", "ascii"}));
    render->add_option("--output,-o", output, "write to file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run invariant/oracle suites");
    int max_n = 6;
    std::vector<std::string> suites;
    verify->add_option("--max-n", max_n,
                       "exhaustive bound (hard cap 8 for permutation suites, 40 for "
                       "partition suites)");
    verify->add_option("--suites", suites, "suite names (default: all)")->delimiter(',');
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list registered suites and exit");

    auto* golden = app.add_subcommand("golden", "check or regenerate golden tables");
    std::string golden_dir = "golden";
    bool golden_write = false;
    golden->add_option("--dir", golden_dir, "golden file directory");
    golden->add_flag("--write", golden_write, "regenerate instead of checking");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (stats->parsed()) return run_stats(perm_text, format, out);
        if (poly->parsed()) return run_poly(kind, n, method, format, out);
        if (render->parsed()) {
            if (render_format.empty()) render_format = kind == "shadows" ? "svg" : "ascii";
            return run_render(kind, perm_text, render_format, output, out);
        }
        if (verify->parsed()) {
            if (list_suites) {
                for (const auto& s : verify_suites())
                    out << s.name << (s.partition_scale ? " [partition]" : " [permutation]")
                        << ": " << s.description << '\n';
                return 0;
            }
            return run_verify(VerifyOptions{max_n, suites}, out) ? 0 : 1;
        }
        if (golden->parsed()) return run_golden(golden_dir, golden_write, out, err);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return 2;
    } catch (const MalformedInput& e) {
        err << "bad input: " << e.what() << '\n';
        return 2;
    } catch (const NotAPermutation& e) {
        err << "not a permutation: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace bumpkit
