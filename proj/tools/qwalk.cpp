// qwalk: Q-polynomials, semi-edge walk counts and graph-operation identities.

#include "qwalk/io.hpp"
#include "qwalk/operations.hpp"
#include "qwalk/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qwalk;
using nlohmann::json;

namespace {

struct GraphSource {
    std::string graph6;
    std::string edge_file;
    std::string generator;
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size()) throw std::invalid_argument("bad size '" + item + "' in generator spec");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("generator spec needs parameters");
    return out;
}

// family:params, e.g. cycle:5, multipartite:2,2,3
Graph generate(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("generator spec must look like family:params");
    const std::string family = spec.substr(0, colon);
    const auto sizes = parse_sizes(spec.substr(colon + 1));
    if (family == "multipartite") return generators::complete_multipartite(sizes);
    if (sizes.size() != 1) throw std::invalid_argument("generator '" + family + "' takes one size");
    const std::size_t n = sizes[0];
    if (family == "complete") return generators::complete(n);
    if (family == "empty") return generators::empty(n);
    if (family == "path") return generators::path(n);
    if (family == "cycle") return generators::cycle(n);
    if (family == "star") return generators::star(n);
    throw std::invalid_argument("unknown generator family '" + family + "'");
}

Graph read_edge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return parse_edge_list(in);
}

Graph load(const GraphSource& src) {
    const int given = !src.graph6.empty() + !src.edge_file.empty() + !src.generator.empty();
    if (given > 1) throw std::invalid_argument("give exactly one of -g, -e, --gen");
    if (!src.graph6.empty()) return parse_graph6(src.graph6);
    if (!src.edge_file.empty()) return read_edge_file(src.edge_file);
    if (!src.generator.empty()) return generate(src.generator);
    std::string line;
    if (!std::getline(std::cin, line)) throw std::invalid_argument("no graph given and stdin is empty");
    return parse_graph6(line);
}

// operand tokens for `op`: gen:family:params, file:path, or graph6
Graph load_token(const std::string& token) {
    if (token.rfind("gen:", 0) == 0) return generate(token.substr(4));
    if (token.rfind("file:", 0) == 0) return read_edge_file(token.substr(5));
    return parse_graph6(token);
}

void add_source(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("-g,--graph6", src.graph6, "graph in graph6 form");
    cmd->add_option("-e,--edges", src.edge_file, "edge-list file: n, then one 'u v' pair per line");
    cmd->add_option("--gen", src.generator, "generator: complete:n, empty:n, path:n, cycle:n, star:n, multipartite:a,b,...");
}

void print_json(const json& j) { std::cout << j.dump() << '\n'; }

struct OpResult {
    Polynomial direct;
    std::optional<Polynomial> formula;
    std::string formula_note;
    std::vector<std::string> extra;
};

OpResult run_op(const std::string& kind, const Graph& a, const std::optional<Graph>& b) {
    auto need_b = [&]() -> const Graph& {
        if (!b) throw std::invalid_argument("operation '" + kind + "' needs two graphs");
        return *b;
    };
    OpResult r;
    if (kind == "complement") {
        if (b) throw std::invalid_argument("complement takes one graph");
        r.direct = q_polynomial(complement(a));
        if (a.regular_degree()) {
            const RationalFunction f = complement_qpoly_regular(q_polynomial(a), RegularGraphStats::of(a));
            if (f.is_polynomial()) r.formula = f.to_polynomial();
            else r.formula_note = "regular formula left a pole: " + f.to_string("lambda");
        } else {
            r.formula_note = "no closed form for non-regular graphs";
        }
    } else if (kind == "union") {
        const Graph& g2 = need_b();
        r.direct = q_polynomial(disjoint_union(a, g2));
        r.formula = q_polynomial(a) * q_polynomial(g2);
    } else if (kind == "join") {
        const Graph& g2 = need_b();
        r.direct = q_polynomial(join(a, g2));
        r.formula = join_qpoly(QPolynomials::of(a), QPolynomials::of(g2));
    } else if (kind == "corona") {
        const Graph& g2 = need_b();
        r.direct = q_polynomial(corona(a, g2));
        r.formula = corona_qpoly(q_polynomial(a), a.order(), g2);
    } else if (kind == "edge-corona") {
        const Graph& g2 = need_b();
        r.direct = q_polynomial(edge_corona(a, g2));
        if (a.regular_degree()) {
            const RegularGraphStats s1 = RegularGraphStats::of(a);
            const QPolynomials q2 = QPolynomials::of(g2);
            r.formula = edge_corona_qpoly(q_polynomial(a), s1, q2);
            const RationalFunction unshifted = edge_corona_qpoly_unshifted_reading(q_polynomial(a), s1, q2);
            r.extra.push_back(std::string("ratio fbar2(n2 - x)/f2(x) reading: ") +
                              (unshifted == RationalFunction(r.direct) ? "matches" : "differs from") + " construction");
        } else {
            r.formula_note = "formula needs a regular first graph";
        }
    } else {
        throw std::invalid_argument("unknown operation '" + kind + "'");
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signless-Laplacian polynomials, semi-edge walks and graph-operation identities"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    GraphSource src;

    bool with_complement = false;
    auto* poly = app.add_subcommand("poly", "Q-polynomial f_Q(lambda)");
    add_source(poly, src);
    poly->add_flag("--complement", with_complement, "also print the complement's Q-polynomial");

    auto* spectrum = app.add_subcommand("spectrum", "Q-eigenvalues and main-part weights gamma_l");
    add_source(spectrum, src);

    std::size_t max_k = 10;
    auto* walks = app.add_subcommand("walks", "semi-edge walk counts N_0..N_K");
    add_source(walks, src);
    walks->add_option("--max-k", max_k, "largest walk length")->capture_default_str();

    std::size_t order = 12;
    bool series = false;
    auto* genfun = app.add_subcommand("genfun", "walk generating function W(t)");
    add_source(genfun, src);
    genfun->add_option("--order", order, "series truncation order")->capture_default_str();
    genfun->add_flag("--series", series, "also print the series to --order");

    auto* coronal = app.add_subcommand("coronal", "Q-coronal Gamma(lambda)");
    add_source(coronal, src);

    std::string op_kind, op_a, op_b;
    auto* op = app.add_subcommand("op", "build a composite graph and compare its Q-polynomial with the formula");
    op->add_option("kind", op_kind, "complement | union | join | corona | edge-corona")
        ->required()
        ->check(CLI::IsMember({"complement", "union", "join", "corona", "edge-corona"}));
    op->add_option("A", op_a, "first graph: graph6, gen:family:params or file:path")->required();
    op->add_option("B", op_b, "second graph (not used by complement)");

    SweepOptions sweep;
    std::string sweep_name;
    auto* verify = app.add_subcommand("verify", "run an identity sweep; exit 0 iff every check passes");
    std::vector<std::string> names;
    for (const auto& e : sweep_registry()) names.push_back(e.name);
    verify->add_option("sweep", sweep_name, "sweep name")->required()->check(CLI::IsMember(names));
    verify->add_option("--max-n", sweep.max_n, "largest vertex count")->capture_default_str();
    verify->add_option("--seed", sweep.seed, "sampling seed")->capture_default_str();
    verify->add_option("--samples", sweep.samples, "number of sampled graphs")->capture_default_str();
    verify->add_option("--order", sweep.order, "series truncation order")->capture_default_str();
    verify->add_option("--tol", sweep.tol, "floating tolerance")->capture_default_str();
    verify->add_option("--threads", sweep.threads, "worker threads (0: QWALK_THREADS or all cores)");

    CLI11_PARSE(app, argc, argv);
    const bool as_json = format == "json";

    try {
        if (*poly) {
            const QPolynomials q = QPolynomials::of(load(src));
            if (as_json) {
                json j{{"f", to_json(q.f)}};
                if (with_complement) j["f_complement"] = to_json(q.f_complement);
                print_json(j);
            } else {
                std::cout << q.f.to_string("lambda") << '\n';
                if (with_complement) std::cout << q.f_complement.to_string("lambda") << '\n';
            }
        } else if (*spectrum) {
            const SpectralDecomposition sd = q_spectrum(load(src));
            if (as_json) {
                print_json(to_json(sd));
            } else {
                std::cout.precision(12);
                for (std::size_t l = 0; l < sd.eigenvalues.size(); ++l)
                    std::cout << sd.eigenvalues[l] << ' ' << sd.gammas[l] << '\n';
            }
        } else if (*walks) {
            const WalkCounts w = walk_counts_via_power(load(src), max_k);
            if (as_json) {
                print_json(to_json(w));
            } else {
                for (const auto& c : w.counts) std::cout << c << '\n';
            }
        } else if (*genfun) {
            const RationalFunction w = q_generating_function(load(src));
            if (as_json) {
                json j{{"w", to_json(w, "t")}};
                if (series) j["series"] = to_json(series_expand(w, order));
                print_json(j);
            } else {
                std::cout << w.to_string("t") << '\n';
                if (series)
                    for (const auto& c : series_expand(w, order).coeffs) std::cout << c << '\n';
            }
        } else if (*coronal) {
            const RationalFunction gamma = q_coronal(load(src));
            if (as_json) print_json(to_json(gamma));
            else std::cout << gamma.to_string("lambda") << '\n';
        } else if (*op) {
            const Graph a = load_token(op_a);
            std::optional<Graph> b;
            if (!op_b.empty()) b = load_token(op_b);
            const OpResult r = run_op(op_kind, a, b);
            const bool mismatch = r.formula && *r.formula != r.direct;
            const std::string status = !r.formula ? "unavailable" : mismatch ? "MISMATCH" : "match";
            if (as_json) {
                json j{{"op", op_kind}, {"direct", to_json(r.direct)}, {"status", status}};
                if (r.formula) j["formula"] = to_json(*r.formula);
                if (!r.formula_note.empty()) j["note"] = r.formula_note;
                if (!r.extra.empty()) j["notes"] = r.extra;
                print_json(j);
            } else {
                std::cout << "direct:  " << r.direct.to_string("lambda") << '\n';
                if (r.formula) std::cout << "formula: " << r.formula->to_string("lambda") << '\n';
                if (!r.formula_note.empty()) std::cout << "formula: " << r.formula_note << '\n';
                for (const auto& line : r.extra) std::cout << "note: " << line << '\n';
                std::cout << "status: " << status << '\n';
            }
            return mismatch ? 1 : 0;
        } else if (*verify) {
            const SweepReport rep = run_sweep(sweep_name, sweep);
            if (as_json) {
                json failures = json::array();
                for (const auto& f : rep.failures) failures.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
                print_json({{"sweep", rep.name},
                            {"title", rep.title},
                            {"checked", rep.checked},
                            {"passed", rep.passed()},
                            {"failures", failures},
                            {"notes", rep.notes}});
            } else {
                std::cout << rep.name << ": " << rep.title << '\n';
                for (const auto& note : rep.notes) std::cout << "  note: " << note << '\n';
                for (const auto& f : rep.failures) std::cout << "  FAIL " << f.graph6 << ": " << f.detail << '\n';
                std::cout << (rep.passed() ? "PASS" : "FAIL") << ' ' << rep.checked - rep.failures.size() << '/'
                          << rep.checked << '\n';
            }
            return rep.passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "qwalk: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
