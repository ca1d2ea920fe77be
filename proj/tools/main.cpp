// graphlie: construct graph-defined restricted Lie algebras over F_2 / F_4,
// compute their graded dimensions, Hilbert/Poincare series and cohomology
// presentations, and check the Droms-type classification predicates against a
// brute-force subalgebra search.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphlie/classify.hpp"
#include "graphlie/cohomology.hpp"
#include "graphlie/golden.hpp"
#include "graphlie/graphs.hpp"
#include "graphlie/lie.hpp"
#include "graphlie/series.hpp"

using namespace graphlie;
using gf2k::Field;
using gf2k::Mat;
using nlohmann::json;

namespace {

struct Config {
    std::string field = "f2";
    int order = 8;
    int depth = 4;
    std::string format = "text";
    size_t budget = tensor::kDefaultBudget;
    int jobs = 1;
    bool timings = false;

    const Field& F() const { return field == "f4" ? Field::f4() : Field::f2(); }
    bool json_mode() const { return format == "json"; }
    void validate() const {
        require(order >= depth && depth >= 2, errc::usage, "need --order >= --depth >= 2");
        require(jobs >= 1, errc::usage, "--jobs must be positive");
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

graphs::ParsedGraph load_graph(const std::string& path) {
    return graphs::parse_graph_json(read_file(path));
}

std::string names_at(const graphs::MixedGraph& g, const std::vector<int>& vs) {
    std::string out = "{";
    for (size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + g.name(vs[i]);
    return out + "}";
}

json witness_json(const lie::DefectWitness& w, const Field& F) {
    json rows = json::array();
    for (size_t i = 0; i < w.generators.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < w.generators.cols(); ++j) row.push_back(F.to_string(w.generators.get(i, j)));
        rows.push_back(row);
    }
    return json{{"generators", rows},
                {"defect_degree", w.defect_degree},
                {"cover_dim", w.cover_dim},
                {"subalgebra_dim", w.subalgebra_dim}};
}

std::string witness_text(const lie::DefectWitness& w, const Field& F) {
    std::string out = "span{";
    for (size_t i = 0; i < w.generators.rows(); ++i) {
        if (i) out += ", ";
        out += "(";
        for (size_t j = 0; j < w.generators.cols(); ++j)
            out += (j ? "," : "") + F.to_string(w.generators.get(i, j));
        out += ")";
    }
    out += "}, defect degree " + std::to_string(w.defect_degree) + " (cover " +
           std::to_string(w.cover_dim) + " vs subalgebra " + std::to_string(w.subalgebra_dim) + ")";
    return out;
}

// generator rows like "1,0,T;0,1,T+1"
Mat parse_generator_rows(const std::string& text, int n, const Field& F) {
    Mat m(F, 0, size_t(n));
    std::stringstream rows_in(text);
    std::string row;
    while (std::getline(rows_in, row, ';')) {
        if (row.empty()) continue;
        std::vector<uint8_t> entries;
        std::stringstream row_in(row);
        std::string cell;
        while (std::getline(row_in, cell, ',')) entries.push_back(F.parse(cell));
        require(int(entries.size()) == n, errc::bad_coefficients,
                "generator rows need one coefficient per vertex (" + std::to_string(n) + ")");
        m.append_row(entries);
    }
    require(m.rows() > 0, errc::bad_coefficients, "no generator rows given");
    return m;
}

void emit(const Config& cfg, const json& machine, const std::string& text) {
    if (cfg.json_mode())
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << text;
}

// ---- graph-check ---------------------------------------------------------------

int cmd_graph_check(const Config& cfg, const std::string& path) {
    graphs::ParsedGraph pg = load_graph(path);
    json out;
    std::ostringstream text;
    if (pg.is_labelled()) {
        const graphs::LabelledGraph& g = *pg.labelled;
        out["kind"] = "labelled";
        out["vertices"] = g.graph().names();
        bool droms_underlying = graphs::is_simple_droms(g.graph());
        bool ldroms = graphs::is_labelled_droms(g);
        out["simple_droms"] = droms_underlying;
        out["labelled_droms"] = ldroms;
        text << "kind: labelled graph on " << g.n() << " vertices\n";
        text << "underlying droms: " << (droms_underlying ? "yes" : "no");
        if (!droms_underlying) {
            if (auto c4 = graphs::find_induced_c4(g.graph()))
                text << " (induced C4 at " << names_at(g.graph(), *c4) << ")";
            else if (auto p4 = graphs::find_induced_p4(g.graph()))
                text << " (induced P4 at " << names_at(g.graph(), *p4) << ")";
        }
        text << "\n";
        text << "labelled-droms: " << (ldroms ? "yes" : "no");
        if (auto bad = graphs::find_forbidden_labelled_path(g)) {
            text << " (forbidden labelled path at " << names_at(g.graph(), *bad) << ")";
            out["forbidden_path"] = json::array();
            for (int v : *bad) out["forbidden_path"].push_back(g.graph().name(v));
        }
        text << "\n";
        if (droms_underlying) {
            bool cc = graphs::central_condition(g);
            out["central_condition"] = cc;
            text << "central-condition: " << (cc ? "yes" : "no") << "\n";
        }
    } else {
        const graphs::MixedGraph& g = *pg.mixed;
        out["kind"] = "mixed";
        out["vertices"] = g.names();
        bool special = graphs::is_special(g);
        out["special"] = special;
        text << "kind: mixed graph on " << g.n() << " vertices\n";
        text << "special: " << (special ? "yes" : "no") << "\n";
        if (special) {
            graphs::Signature sig = graphs::signature_of(g);
            json sj = json::object();
            std::string st;
            for (int v = 0; v < g.n(); ++v) {
                sj[g.name(v)] = int(sig.theta[size_t(v)]);
                st += (v ? ", " : "") + g.name(v) + "=" + std::to_string(int(sig.theta[size_t(v)]));
            }
            out["signature"] = sj;
            text << "signature: " << st << "\n";
        }
        bool md = graphs::is_mixed_droms(g);
        out["mixed_droms"] = md;
        text << "mixed-droms: " << (md ? "yes" : "no");
        if (!md) {
            if (!special)
                text << " (not special)";
            else if (auto ls = graphs::find_induced_lambda_s(g)) {
                text << " (induced Lambda_s at " << names_at(g, *ls) << ")";
                out["lambda_s"] = json::array();
                for (int v : *ls) out["lambda_s"].push_back(g.name(v));
            } else if (auto c4 = graphs::find_induced_c4(g)) {
                text << " (induced C4 at " << names_at(g, *c4) << ")";
                out["c4"] = json::array();
                for (int v : *c4) out["c4"].push_back(g.name(v));
            } else if (auto p4 = graphs::find_induced_p4(g)) {
                text << " (induced P4 at " << names_at(g, *p4) << ")";
                out["p4"] = json::array();
                for (int v : *p4) out["p4"].push_back(g.name(v));
            }
        }
        text << "\n";
        bool co = graphs::common_origin_per_component(g);
        out["common_origin"] = co;
        text << "common-origin: " << (co ? "yes" : "no") << "\n";
        out["clique_polynomial"] = graphs::clique_polynomial(g).coefficients;
        text << "clique polynomial: " << graphs::clique_polynomial(g).to_string() << "\n";
    }
    emit(cfg, out, text.str());
    return 0;
}

// ---- series ---------------------------------------------------------------------

int cmd_series(const Config& cfg, const std::string& path, const std::string& what) {
    graphs::ParsedGraph pg = load_graph(path);
    const Field& F = cfg.F();
    int N = cfg.order;
    json out;
    std::ostringstream text;
    out["what"] = what;
    out["order"] = N;

    series::PowerSeries combinatorial(N);
    tensor::QuadraticPresentation pres;
    if (pg.is_labelled()) {
        const graphs::LabelledGraph& g = *pg.labelled;
        pres = lie::era_presentation(g, F);
        auto mono = coho::era_monomial_count(g, N);
        series::PowerSeries poincare = series::PowerSeries::from_ints(mono, N);
        if (what == "poincare") {
            combinatorial = poincare;
        } else {
            series::PowerSeries alt = poincare;
            for (int d = 1; d <= N; d += 2) alt.at(d) = -alt.at(d);
            series::PowerSeries hu = series::series_inverse(alt);
            combinatorial = hu;
            if (what == "dims") {
                series::DimensionVector ell = series::petrogradsky_dims(hu, N);
                combinatorial = series::PowerSeries(N);
                for (int k = 1; k <= N; ++k) combinatorial.at(k) = ell.at(k);
            }
        }
    } else {
        const graphs::MixedGraph& g = *pg.mixed;
        require(graphs::is_special(g), errc::not_special,
                "series computations need a special mixed graph");
        pres = lie::traag_presentation(g, F);
        auto cp = graphs::clique_polynomial(g);
        if (what == "poincare") {
            combinatorial = series::PowerSeries::from_ints(cp.coefficients, N);
        } else {
            series::PowerSeries hu = series::froberg_reciprocal(cp.coefficients, N);
            combinatorial = hu;
            if (what == "dims") {
                series::DimensionVector ell = series::petrogradsky_dims(hu, N);
                combinatorial = series::PowerSeries(N);
                for (int k = 1; k <= N; ++k) combinatorial.at(k) = ell.at(k);
            }
        }
    }

    // slice-based path
    series::PowerSeries slice_based(N);
    if (what == "hilbert-u") {
        tensor::SliceTower tower(tensor::envelope_algebra(pres), N, cfg.budget);
        slice_based = series::PowerSeries::from_ints(tower.dims(), N);
    } else if (what == "dims") {
        auto h = lie::make_handle(pres, N, cfg.budget);
        series::DimensionVector ell = lie::graded_dims(*h, N);
        for (int k = 1; k <= N; ++k) slice_based.at(k) = ell.at(k);
    } else if (what == "poincare") {
        tensor::SliceTower dual(tensor::quadratic_dual(pres), N, cfg.budget);
        slice_based = series::PowerSeries::from_ints(dual.dims(), N);
    } else {
        fail(errc::usage, "--what must be hilbert-u, dims or poincare");
    }

    bool agree = combinatorial == slice_based;
    out["combinatorial"] = combinatorial.coeff_strings();
    out["slice_based"] = slice_based.coeff_strings();
    out["agree"] = agree;
    if (what == "dims") {
        std::string ds;
        for (int k = 1; k <= N; ++k)
            ds += (k > 1 ? ", " : "") + combinatorial.at(k).convert_to<std::string>();
        text << "dims (degrees 1.." << N << "): " << ds << "\n";
    } else {
        text << what << ": " << combinatorial.to_string() << "\n";
    }
    text << "combinatorial and slice paths agree: " << (agree ? "yes" : "no") << "\n";
    require(agree, errc::internal, "combinatorial and slice-based series disagree");
    emit(cfg, out, text.str());
    return 0;
}

// ---- subalgebra -------------------------------------------------------------------

int cmd_subalgebra(const Config& cfg, const std::string& path, const std::string& generators) {
    graphs::ParsedGraph pg = load_graph(path);
    const Field& F = cfg.F();
    tensor::QuadraticPresentation pres =
        pg.is_labelled() ? lie::era_presentation(*pg.labelled, F) : lie::traag_presentation(*pg.mixed, F);
    Mat U = parse_generator_rows(generators, pres.n, F);
    auto h = lie::make_handle(pres, cfg.depth, cfg.budget);
    lie::SubalgebraData s = lie::subalgebra_closure(*h, U, cfg.depth);
    auto cover = lie::make_handle(lie::quadratic_cover_presentation(*h, s), cfg.depth, cfg.budget);
    auto w = lie::quadraticity_defect(*h, U, cfg.depth);

    json out;
    out["closure_dims"] = s.dims().ell;
    out["cover_dims"] = lie::graded_dims(*cover, cfg.depth).ell;
    out["depth"] = cfg.depth;
    std::ostringstream text;
    text << "closure dims:  " << s.dims().to_string() << "\n";
    text << "cover dims:    " << lie::graded_dims(*cover, cfg.depth).to_string() << "\n";
    if (w) {
        out["defect"] = witness_json(*w, F);
        text << "defect: " << witness_text(*w, F) << "\n";
    } else {
        out["defect"] = nullptr;
        text << "quadratic to depth " << cfg.depth << "\n";
    }
    emit(cfg, out, text.str());
    return 0;
}

// ---- classify / bruteforce ----------------------------------------------------------

int cmd_classify(const Config& cfg, const std::string& path, bool verify) {
    graphs::ParsedGraph pg = load_graph(path);
    json out;
    std::ostringstream text;
    bool violation = false;
    if (pg.is_labelled()) {
        bool bk = classify::bk_predicate(*pg.labelled);
        out["kind"] = "era";
        out["bk"] = bk;
        text << "ERA algebra: " << (bk ? "Bloch-Kato (any field)" : "not Bloch-Kato") << "\n";
    } else {
        bool f2 = classify::bk_predicate(*pg.mixed, classify::FieldKind::f2);
        bool f4 = classify::bk_predicate(*pg.mixed, classify::FieldKind::contains_f4);
        out["kind"] = "traag";
        out["bk_f2"] = f2;
        out["bk_contains_f4"] = f4;
        text << "T-RAAG over F2: " << (f2 ? "Bloch-Kato" : "not Bloch-Kato") << "\n";
        text << "T-RAAG over a field containing F4: " << (f4 ? "Bloch-Kato" : "not Bloch-Kato") << "\n";
    }
    if (verify) {
        const Field& F = cfg.F();
        classify::FieldKind kind =
            F.degree() == 1 ? classify::FieldKind::f2 : classify::FieldKind::contains_f4;
        classify::TheoremReport rep;
        if (pg.is_labelled())
            rep = classify::verify_theorem(std::vector<graphs::LabelledGraph>{*pg.labelled}, kind,
                                           cfg.depth, cfg.budget, cfg.jobs);
        else
            rep = classify::verify_theorem(std::vector<graphs::MixedGraph>{*pg.mixed}, kind, cfg.depth,
                                           cfg.budget, cfg.jobs);
        const classify::GraphRecord& rec = rep.records[0];
        json vrec;
        vrec["field"] = cfg.field;
        vrec["predicate"] = rec.predicate;
        vrec["depth"] = rec.depth;
        vrec["subspaces_checked"] = rec.subspaces_checked;
        vrec["agree"] = rec.agree;
        vrec["unresolved"] = rec.unresolved;
        if (rec.witness) vrec["witness"] = witness_json(*rec.witness, cfg.F());
        if (!rec.error.empty()) vrec["error"] = rec.error;
        if (cfg.timings) vrec["elapsed_ms"] = rec.elapsed_ms;
        out["verify"] = vrec;
        text << "oracle (" << cfg.field << ", depth " << cfg.depth << "): ";
        if (!rec.error.empty())
            text << "error: " << rec.error << "\n";
        else if (rec.witness)
            text << "witness found: " << witness_text(*rec.witness, cfg.F()) << "\n";
        else
            text << "no witness among " << rec.subspaces_checked << " subspaces\n";
        text << "predicate and oracle agree: " << (rec.agree ? "yes" : "no")
             << (rec.unresolved ? " (unresolved: no witness at this depth)" : "") << "\n";
        violation = rep.any_violation;
    }
    emit(cfg, out, text.str());
    return violation ? 4 : 0;
}

int cmd_bruteforce(const Config& cfg, const std::string& path) {
    graphs::ParsedGraph pg = load_graph(path);
    const Field& F = cfg.F();
    tensor::QuadraticPresentation pres =
        pg.is_labelled() ? lie::era_presentation(*pg.labelled, F) : lie::traag_presentation(*pg.mixed, F);
    auto h = lie::make_handle(pres, cfg.depth, cfg.budget);
    classify::OracleResult r = classify::brute_force_bk(*h, cfg.depth, cfg.jobs);
    json out;
    out["field"] = cfg.field;
    out["depth"] = cfg.depth;
    out["subspaces_checked"] = r.subspaces_checked;
    std::ostringstream text;
    if (r.witness) {
        out["witness"] = witness_json(*r.witness, F);
        text << "witness: " << witness_text(*r.witness, F) << "\n";
    } else {
        out["witness"] = nullptr;
        text << "no defect witness among " << r.subspaces_checked << " subspaces (depth " << cfg.depth
             << ")\n";
    }
    emit(cfg, out, text.str());
    return 0;
}

int cmd_examples_run(const Config& cfg) {
    auto results = golden::run_examples(cfg.budget);
    json out = json::array();
    std::ostringstream text;
    int failures = 0;
    for (const auto& r : results) {
        json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        if (!r.detail.empty()) e["detail"] = r.detail;
        out.push_back(e);
        text << (r.pass ? "PASS" : "FAIL") << " " << r.name;
        if (!r.detail.empty()) text << " -- " << r.detail;
        text << "\n";
        if (!r.pass) ++failures;
    }
    text << (failures ? "FAILURES: " + std::to_string(failures) : "all examples pass") << "\n";
    emit(cfg, json{{"examples", out}, {"failures", failures}}, text.str());
    return failures ? 4 : 0;
}

int exit_code_for(errc code) {
    switch (code) {
        case errc::usage: return 1;
        case errc::budget_exceeded: return 3;
        case errc::theorem_disagreement: return 4;
        default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-defined restricted Lie algebras over fields of characteristic 2"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--field", cfg.field, "ground field (f2 or f4)")
        ->check(CLI::IsMember({"f2", "f4"}))
        ->capture_default_str();
    app.add_option("--order", cfg.order, "series/slice truncation order")->capture_default_str();
    app.add_option("--depth", cfg.depth, "quadraticity check depth")->capture_default_str();
    app.add_option("--format", cfg.format, "output format (text or json)")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", cfg.budget, "memory budget in field elements per slice")
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for family/oracle runs")->capture_default_str();
    app.add_flag("--timings", cfg.timings, "include elapsed times in machine output");

    std::string path, what = "hilbert-u", generators;
    bool verify = false;

    auto* check = app.add_subcommand("graph-check", "graph predicates and witnesses");
    check->add_option("path", path, "graph JSON file")->required();

    auto* ser = app.add_subcommand("series", "Hilbert/Poincare series and graded dimensions");
    ser->add_option("path", path, "graph JSON file")->required();
    ser->add_option("--what", what, "hilbert-u, dims or poincare")
        ->check(CLI::IsMember({"hilbert-u", "dims", "poincare"}))
        ->capture_default_str();

    auto* sub = app.add_subcommand("subalgebra", "closure, cover and defect of a standard subalgebra");
    sub->add_option("path", path, "graph JSON file")->required();
    sub->add_option("--generators", generators, "coefficient rows, e.g. \"1,0,1;0,1,0\"")->required();

    auto* cls = app.add_subcommand("classify", "Bloch-Kato predicates (optionally verified)");
    cls->add_option("path", path, "graph JSON file")->required();
    cls->add_flag("--verify", verify, "run the brute-force oracle and compare");

    auto* brute = app.add_subcommand("bruteforce", "search all standard subspaces for defects");
    brute->add_option("path", path, "graph JSON file")->required();

    app.add_subcommand("examples-run", "run the bundled worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        cfg.validate();
        if (app.got_subcommand("graph-check")) return cmd_graph_check(cfg, path);
        if (app.got_subcommand("series")) return cmd_series(cfg, path, what);
        if (app.got_subcommand("subalgebra")) return cmd_subalgebra(cfg, path, generators);
        if (app.got_subcommand("classify")) return cmd_classify(cfg, path, verify);
        if (app.got_subcommand("bruteforce")) return cmd_bruteforce(cfg, path);
        if (app.got_subcommand("examples-run")) return cmd_examples_run(cfg);
    } catch (const error& e) {
        if (cfg.json_mode())
            std::cout << json{{"error", {{"code", e.code_name()}, {"message", e.what()}}}}.dump(2) << "\n";
        else
            std::cerr << "error[" << e.code_name() << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error[Internal]: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
