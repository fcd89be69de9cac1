// Command-line surface: counting runs, the formula catalog, functional
// equation reports, poset experiments, and the cross-verification suite.
// Exit codes: 0 = success / all checks passed, 1 = a verification failed,
// 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qz/expr.hpp"
#include "qz/forms.hpp"
#include "qz/funeq.hpp"
#include "qz/lattice.hpp"
#include "qz/posets.hpp"
#include "qz/quiver.hpp"
#include "qz/series.hpp"
#include "qz/structure.hpp"
#include "qz/verify.hpp"

namespace {

using qz::Error;
using qz::Int;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << text << "\n";
}

// "--params a=3,m=2" or repeated occurrences; values are integers.
std::map<std::string, long> parse_params(const std::vector<std::string>& specs) {
    std::map<std::string, long> out;
    for (const std::string& spec : specs) {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw Error("parameter '" + item + "' is not of the form key=value");
            std::string key = item.substr(0, eq);
            try {
                out[key] = std::stol(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw Error("parameter '" + item + "' has a non-integer value");
            }
        }
    }
    return out;
}

qz::MatZ mat_from_json(const nlohmann::json& rows, const std::string& where) {
    if (!rows.is_array()) throw Error(where + ": expected an array of rows");
    std::vector<std::vector<long long>> data;
    for (const auto& r : rows) {
        if (!r.is_array()) throw Error(where + ": matrix row is not an array");
        std::vector<long long> row;
        for (const auto& e : r) {
            if (!e.is_number_integer()) throw Error(where + ": non-integer matrix entry");
            row.push_back(e.get<long long>());
        }
        data.push_back(std::move(row));
    }
    size_t width = data.empty() ? 0 : data[0].size();
    for (const auto& r : data)
        if (r.size() != width) throw Error(where + ": ragged matrix rows");
    return qz::MatZ::from_int_rows(data);
}

// {"c":2,"vertices":[{"layer_ranks":[...],"basis_change":[[...],...]},...]}
qz::Grading load_grading(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(std::string("grading JSON is malformed: ") + e.what());
    }
    qz::Grading g;
    if (!j.contains("c") || !j["c"].is_number_integer())
        throw Error("grading file: missing integer 'c'");
    g.c = j["c"].get<int>();
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw Error("grading file: missing 'vertices' array");
    for (size_t h = 0; h < j["vertices"].size(); ++h) {
        const auto& vj = j["vertices"][h];
        std::string where = "grading vertices[" + std::to_string(h) + "]";
        if (!vj.contains("layer_ranks") || !vj["layer_ranks"].is_array())
            throw Error(where + ": missing 'layer_ranks'");
        g.layer_ranks.push_back(vj["layer_ranks"].get<std::vector<int>>());
        qz::MatZ U = mat_from_json(vj.at("basis_change"), where + ".basis_change");
        if (!qz::is_unimodular(U)) throw Error(where + ": basis_change is not unimodular");
        qz::MatZ inv = qz::adjugate(U);
        if (qz::determinant(U) < 0) inv = Int(-1) * inv;
        g.basis_change.push_back(std::move(U));
        g.basis_change_inv.push_back(std::move(inv));
    }
    return g;
}

// {"generators":[[[...],...],...]} or a bare array of matrices.
std::vector<qz::MatZ> load_generators(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(std::string("generators JSON is malformed: ") + e.what());
    }
    const nlohmann::json& arr = j.is_object() && j.contains("generators") ? j["generators"] : j;
    if (!arr.is_array()) throw Error("generators file: expected an array of matrices");
    std::vector<qz::MatZ> out;
    for (size_t i = 0; i < arr.size(); ++i)
        out.push_back(mat_from_json(arr[i], "generators[" + std::to_string(i) + "]"));
    return out;
}

std::string exps_str(const std::vector<int>& key) {
    std::string s = "(";
    for (size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
    return s + ")";
}

qz::Representation load_rep(const std::string& rep_file, const std::string& builtin_name,
                            const std::map<std::string, long>& params) {
    if (rep_file.empty() == builtin_name.empty())
        throw Error("specify exactly one of --rep FILE or --builtin NAME");
    if (!rep_file.empty()) return qz::Representation::from_json(read_file(rep_file));
    return qz::builtin_rep(builtin_name, params);
}

void describe_rep(const qz::Representation& rep) {
    std::cout << "vertices:";
    for (const auto& v : rep.vertices()) std::cout << " " << v.id << "(rank " << v.rank << ")";
    std::cout << "\narrows:";
    if (rep.arrows().empty()) std::cout << " none";
    for (const auto& a : rep.arrows())
        std::cout << " " << a.id << ":" << rep.vertices()[a.tail].id << "->"
                  << rep.vertices()[a.head].id;
    std::cout << "\n";
}

// ---- count ----

struct CountArgs {
    std::string rep_file, builtin_name, json_out, ceiling = "100000000";
    std::vector<std::string> params;
    long prime = 2;
    int max_exp = 2;
    bool multivariate = false;
};

int run_count(const CountArgs& a) {
    qz::Representation rep = load_rep(a.rep_file, a.builtin_name, parse_params(a.params));
    describe_rep(rep);
    qz::CountOptions opts;
    opts.bound = a.max_exp;
    opts.multivariate = a.multivariate;
    opts.ceiling = Int(a.ceiling);
    qz::CountTable table = qz::count_subreps(rep, a.prime, opts);
    std::cout << "prime: " << table.prime
              << "   mode: " << (table.multivariate ? "multivariate" : "univariate")
              << "   bound: " << table.bound << "\n";
    std::cout << "  index  count\n";
    Int total = 0;
    for (const auto& [key, value] : table.counts) {
        std::cout << "  " << (a.multivariate ? exps_str(key) : "p^" + std::to_string(key[0]))
                  << "  " << value.str() << "\n";
        total += value;
    }
    std::cout << "total: " << total.str() << "\n";
    if (!a.json_out.empty()) write_output(a.json_out, table.to_json());
    return 0;
}

// ---- formula ----

struct FormulaArgs {
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> sets;
    int series_bound = -1;
    long at_q = 0;
    bool list = false;
};

int run_formula(const FormulaArgs& a) {
    if (a.list) {
        for (const std::string& n : qz::builtin_formula_names()) std::cout << n << "\n";
        return 0;
    }
    if (a.name.empty()) throw Error("specify --name NAME (or --list for the catalog)");
    qz::RationalFn f = qz::builtin_formula(a.name, parse_params(a.params));
    for (const auto& [key, value] : parse_params(a.sets)) f = f.with_symbol_value(key, value);
    std::cout << qz::expr::render(f) << "\n";
    if (a.series_bound >= 0) {
        qz::PowerSeries s = qz::series_expand(f, a.series_bound);
        if (a.at_q != 0) {
            std::cout << "series coefficients at q=" << a.at_q << ":\n";
            for (const auto& [key, value] : s.at_q(Int(a.at_q)))
                std::cout << "  " << exps_str(key) << "  " << value.str() << "\n";
        } else {
            std::cout << "series coefficients:\n";
            for (const auto& [key, value] : s.coefficients())
                std::cout << "  " << exps_str(key) << "  " << qz::expr::render(value) << "\n";
        }
    }
    return 0;
}

// ---- funeq ----

struct FuneqArgs {
    std::string rep_file, builtin_name, formula_name, json_out;
    std::vector<std::string> params;
    std::vector<std::string> sets;
};

int run_funeq(const FuneqArgs& a) {
    std::map<std::string, long> params = parse_params(a.params);
    qz::Representation rep = load_rep(a.rep_file, a.builtin_name, params);
    describe_rep(rep);
    qz::SymmetryData pred = qz::predicted_symmetry(rep);
    std::cout << "total rank: " << pred.n << "\n";
    std::cout << "predicted symmetry factor: sign " << (pred.sign < 0 ? "-1" : "+1")
              << ", q^" << pred.b << ", t-exponents " << exps_str(pred.c_exps)
              << "; univariate ratio " << pred.predicted_monomial(true).to_string() << "\n";

    std::optional<qz::RationalFn> formula;
    std::string note;
    if (!a.formula_name.empty()) {
        formula = qz::builtin_formula(a.formula_name, params);
    } else if (!a.builtin_name.empty()) {
        try {
            formula = qz::builtin_formula(a.builtin_name, params);
        } catch (const Error& e) {
            note = e.what();
        }
    }
    if (!formula) {
        std::cout << "no closed form checked";
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << "\n";
        return 0;
    }
    for (const auto& [key, value] : parse_params(a.sets))
        formula = formula->with_symbol_value(key, value);
    qz::FuneqReport report = qz::verify_funeq(*formula, pred);
    if (report.observed)
        std::cout << "observed ratio under q -> 1/q, t -> 1/t: " << report.observed->to_string()
                  << "\n";
    std::cout << "functional equation: " << (report.holds ? "holds" : "FAILS") << "\n";
    if (!report.holds && !report.residual.empty())
        std::cout << "residual: " << report.residual << "\n";
    if (!a.json_out.empty()) write_output(a.json_out, qz::funeq_report_json(report));
    return report.holds ? 0 : 1;
}

// ---- ppart ----

struct PpartArgs {
    std::string poset_file, catalog_name;
    bool list = false, gf = false, check_delta = false, verify_quiver = false;
    long prime = 2;
    int bound = 8;
};

int run_ppart(const PpartArgs& a) {
    if (a.list) {
        for (const auto& [name, poset] : qz::poset_catalog())
            std::cout << name << " (n=" << poset.size() << ")\n";
        return 0;
    }
    std::optional<qz::Poset> loaded;
    if (a.poset_file.empty() == a.catalog_name.empty())
        throw Error("specify exactly one of --poset FILE or --catalog NAME");
    if (!a.poset_file.empty()) {
        loaded = qz::Poset::from_json(read_file(a.poset_file));
    } else {
        for (const auto& [name, poset] : qz::poset_catalog())
            if (name == a.catalog_name) loaded = poset;
        if (!loaded) throw Error("unknown catalog poset: " + a.catalog_name);
    }
    const qz::Poset& P = *loaded;
    std::cout << "elements: " << P.size() << "\ncovers:";
    if (P.covers().empty()) std::cout << " none";
    for (const auto& [x, y] : P.covers()) std::cout << " " << x << "<" << y;
    std::cout << "\n";
    if (P.was_relabeled()) {
        std::cout << "relabeled to a natural labeling:";
        for (size_t i = 0; i < P.relabeling().size(); ++i)
            std::cout << " " << (i + 1) << "->" << P.relabeling()[i];
        std::cout << "\n";
    }
    std::cout << "partition counts:\n  size  count\n";
    for (int m = 0; m <= a.bound; ++m)
        std::cout << "  " << m << "  " << qz::ppartition_count(P, m).str() << "\n";
    if (a.gf) {
        qz::expr::RenderOptions opts;
        opts.t_name = "X";
        std::cout << "generating function: " << qz::expr::render(qz::stanley_gf(P), opts)
                  << "\n";
    }
    if (a.check_delta) {
        qz::DeltaChainResult dc = qz::delta_chain(P);
        std::cout << "longest-chain lengths:";
        for (size_t i = 0; i < dc.element_delta.size(); ++i)
            std::cout << " " << (i + 1) << ":" << dc.element_delta[i];
        std::cout << "\ndelta sum: " << dc.delta_sum << "\ndelta-chain: "
                  << (dc.is_delta_chain ? "yes" : "no") << "\n";
    }
    if (a.verify_quiver) {
        qz::Representation rep = qz::hasse_rep(P);
        qz::CountOptions co;
        co.bound = a.bound;
        qz::CountTable got = qz::count_subreps(rep, a.prime, co);
        bool ok = true;
        for (int m = 0; m <= a.bound; ++m) {
            Int direct = qz::ppartition_count(P, m);
            Int quiver = got.at({m});
            bool match = direct == quiver;
            ok = ok && match;
            std::cout << (match ? "  [ok] " : "  [MISMATCH] ") << "size " << m
                      << ": partitions " << direct.str() << ", quiver p=" << a.prime << " "
                      << quiver.str() << "\n";
        }
        std::cout << "quiver cross-check: " << (ok ? "passed" : "FAILED") << "\n";
        if (!ok) return 1;
    }
    return 0;
}

// ---- homog ----

struct HomogArgs {
    std::string rep_file, builtin_name, grading_file, generators_file;
    std::vector<std::string> params;
};

int run_homog(const HomogArgs& a) {
    qz::Representation rep = load_rep(a.rep_file, a.builtin_name, parse_params(a.params));
    describe_rep(rep);
    qz::Grading g =
        a.grading_file.empty() ? qz::cocentral_grading(rep) : load_grading(a.grading_file);
    qz::validate_grading(rep, g);
    std::cout << "grading: class " << g.c << ", layer ranks per vertex:";
    for (int h = 0; h < g.num_vertices(); ++h) {
        std::cout << " " << rep.vertices()[h].id << exps_str(g.layer_ranks[h]);
    }
    std::cout << "\n";
    qz::HomogeneityResult result =
        a.generators_file.empty()
            ? qz::check_homogeneity(rep, g)
            : qz::check_homogeneity(rep, g, load_generators(a.generators_file));
    if (result.homogeneous) {
        std::cout << "homogeneous: yes\n";
        return 0;
    }
    std::cout << "homogeneous: no\n";
    if (result.witness) {
        const auto& w = *result.witness;
        std::cout << "witness: generator " << w.generator << " maps layer " << w.from_layer
                  << " of vertex " << rep.vertices()[w.tail].id << " into layer "
                  << w.to_layer << " of vertex " << rep.vertices()[w.head].id << "\n";
    }
    return 1;
}

// ---- verify-all ----

struct VerifyArgs {
    bool fast = false;
    unsigned long long seed = 20240901;
    std::string report_file;
    std::vector<std::string> only;
};

int run_verify(const VerifyArgs& a) {
    qz::VerifyOptions opts;
    opts.fast = a.fast;
    opts.seed = a.seed;
    std::cout << "mode: " << (a.fast ? "fast" : "full") << "   seed: " << a.seed << "\n";
    std::vector<std::string> slugs = a.only.empty() ? qz::check_slugs() : a.only;
    std::vector<qz::CheckResult> results;
    bool all = true;
    for (const std::string& slug : slugs) {
        qz::CheckResult r = qz::run_check(slug, opts);
        results.push_back(r);
        all = all && r.passed;
        std::ostringstream line;
        line << (r.passed ? "[PASS] " : "[FAIL] ") << r.slug << " (" << std::fixed;
        line.precision(1);
        line << r.seconds << "s): " << r.title << " — " << r.detail;
        std::cout << line.str() << "\n" << std::flush;
    }
    std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << " (" << results.size()
              << " run)\n";
    if (!a.report_file.empty())
        write_output(a.report_file, qz::checks_report_json(results, opts));
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zeta functions of integral nilpotent quiver representations"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count subrepresentations by p-power index");
    count->add_option("--rep", count_args.rep_file, "representation JSON file");
    count->add_option("--builtin", count_args.builtin_name, "builtin representation name");
    count->add_option("--params", count_args.params, "builtin parameters key=value[,key=value]");
    count->add_option("--prime", count_args.prime, "prime p")->required();
    count->add_option("--max-exp", count_args.max_exp, "largest index exponent")->required();
    count->add_flag("--multivariate", count_args.multivariate,
                    "key counts by per-vertex index exponents");
    count->add_option("--json", count_args.json_out, "write the table as JSON ('-' = stdout)");
    count->add_option("--ceiling", count_args.ceiling,
                      "refuse runs with more candidates than this");

    FormulaArgs formula_args;
    auto* formula = app.add_subcommand("formula", "print a closed-form zeta function");
    formula->add_option("--name", formula_args.name, "formula catalog name");
    formula->add_option("--params", formula_args.params, "parameters key=value[,key=value]");
    formula->add_option("--set", formula_args.sets, "substitute a symbol, e.g. E=4");
    formula->add_option("--series", formula_args.series_bound,
                        "also expand as a series to this total degree");
    formula->add_option("--at-q", formula_args.at_q, "evaluate series coefficients at q=P");
    formula->add_flag("--list", formula_args.list, "list the catalog and exit");

    FuneqArgs funeq_args;
    auto* funeq = app.add_subcommand("funeq", "predicted functional equation report");
    funeq->add_option("--rep", funeq_args.rep_file, "representation JSON file");
    funeq->add_option("--builtin", funeq_args.builtin_name, "builtin representation name");
    funeq->add_option("--formula", funeq_args.formula_name,
                      "check this catalog formula against the prediction");
    funeq->add_option("--params", funeq_args.params, "parameters key=value[,key=value]");
    funeq->add_option("--set", funeq_args.sets, "substitute a symbol, e.g. E=4");
    funeq->add_option("--json", funeq_args.json_out, "write the report as JSON ('-' = stdout)");

    PpartArgs ppart_args;
    auto* ppart = app.add_subcommand("ppart", "poset partition counts and reciprocity");
    ppart->add_option("--poset", ppart_args.poset_file, "poset JSON file");
    ppart->add_option("--catalog", ppart_args.catalog_name, "named poset from the catalog");
    ppart->add_flag("--list", ppart_args.list, "list the poset catalog and exit");
    ppart->add_flag("--gf", ppart_args.gf, "print the order-reversing map generating function");
    ppart->add_flag("--check-delta", ppart_args.check_delta,
                    "report longest-chain lengths and the delta-chain property");
    ppart->add_flag("--verify-quiver", ppart_args.verify_quiver,
                    "cross-check counts against the Hasse quiver representation");
    ppart->add_option("--prime", ppart_args.prime, "prime for --verify-quiver");
    ppart->add_option("--bound", ppart_args.bound, "largest partition size / index exponent");

    HomogArgs homog_args;
    auto* homog = app.add_subcommand("homog", "check a grading for homogeneity");
    homog->add_option("--rep", homog_args.rep_file, "representation JSON file");
    homog->add_option("--builtin", homog_args.builtin_name, "builtin representation name");
    homog->add_option("--params", homog_args.params, "parameters key=value[,key=value]");
    homog->add_option("--grading", homog_args.grading_file,
                      "grading JSON file (default: the cocentral grading)");
    homog->add_option("--generators", homog_args.generators_file,
                      "generator matrices JSON file (default: arrow extensions)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify-all", "run the cross-verification suite");
    verify->add_flag("--fast", verify_args.fast, "reduced scales for a quick pass");
    verify->add_option("--seed", verify_args.seed, "seed for randomized tuple checks");
    verify->add_option("--report", verify_args.report_file,
                       "write a JSON report ('-' = stdout)");
    verify->add_option("--check", verify_args.only, "run only the named checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(count_args);
        if (formula->parsed()) return run_formula(formula_args);
        if (funeq->parsed()) return run_funeq(funeq_args);
        if (ppart->parsed()) return run_ppart(ppart_args);
        if (homog->parsed()) return run_homog(homog_args);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
