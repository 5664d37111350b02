#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aluffi/aluffi.hpp"
#include "aluffi/graph.hpp"
#include "aluffi/ideal.hpp"
#include "aluffi/pencil.hpp"
#include "aluffi/util.hpp"

using nlohmann::json;
using namespace aluffi;

namespace {

// Exit codes: 0 torsion-free, 1 not torsion-free, 2 inconclusive,
// 3 parse/usage error, 4 precondition failure, 5 timeout, 6 disagreement.
constexpr int kExitParse = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitTimeout = 5;
constexpr int kExitDisagree = 6;

int verdict_exit(const AluffiVerdict& v) {
    switch (v.status) {
        case TorsionStatus::TorsionFree:
            return 0;
        case TorsionStatus::NotTorsionFree:
            return 1;
        case TorsionStatus::Inconclusive:
            return 2;
    }
    return kExitPrecondition;
}

struct CheckOptions {
    std::string j_file;
    std::string i_file;
    bool use_jacobian = false;
    int max_t = 4;
    bool certify = true;
    bool as_json = false;
    double timeout = 0;
};

int run_check(const CheckOptions& opt) {
    Ideal j = parse_ideal_file(opt.j_file);
    Ideal i;
    if (opt.use_jacobian) {
        i = jacobian_ideal(j);
    } else {
        i = parse_ideal_file(opt.i_file);
        if (!same_ring(j.ring(), i.ring()))
            throw std::domain_error("the two ideal files use different rings");
    }
    if (!i.contains(j)) throw std::domain_error("J is not contained in I");
    util::DeadlineGuard guard(opt.timeout);
    AluffiVerdict v = aluffi_torsion_free(j, i, opt.max_t, opt.certify);
    if (opt.as_json)
        std::cout << v.json() << "\n";
    else
        std::cout << v.str() << "\n";
    return verdict_exit(v);
}

struct GraphOptions {
    std::string source;
    bool oracle = false;
    int max_t = 4;
    bool certify = true;
    bool as_json = false;
    double timeout = 0;
};

Graph load_graph(const std::string& source) {
    if (source.find(':') != std::string::npos) return parse_graph_family(source);
    return parse_graph_file(source);
}

int run_graph(const GraphOptions& opt) {
    Graph g = load_graph(opt.source);
    bool atf = is_graph_atf(g);
    std::optional<Witness34> w;
    if (vertex_cover_number(g) > 1) w = theorem34_witness(g);

    json out;
    out["vertices"] = g.num_vertices();
    out["edges"] = g.num_edges();
    out["cover_number"] = vertex_cover_number(g);
    out["atf"] = atf;
    if (w) {
        out["witness"] = {{"x1", w->x1}, {"x2", w->x2}, {"S", w->s}};
    } else {
        out["witness"] = nullptr;
    }

    bool agree = true;
    if (opt.oracle) {
        util::DeadlineGuard guard(opt.timeout);
        Ideal j = edge_ideal(g);
        Ideal i = jacobian_ideal(j);
        AluffiVerdict v = aluffi_torsion_free(j, i, opt.max_t, opt.certify);
        bool alg_atf = v.status != TorsionStatus::NotTorsionFree;
        agree = (alg_atf == atf) &&
                (!opt.certify || v.status != TorsionStatus::Inconclusive);
        out["oracle"] = json::parse(v.json());
        out["agree"] = agree;
    }

    if (opt.as_json) {
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "graph on " << g.num_vertices() << " vertices, "
                  << g.num_edges() << " edges, cover number "
                  << out["cover_number"].get<int>() << "\n";
        std::cout << (atf ? "Aluffi torsion-free" : "not Aluffi torsion-free");
        if (w) {
            std::cout << "  [witness x1=" << w->x1 << " x2=" << w->x2 << " S={";
            for (std::size_t k = 0; k < w->s.size(); ++k)
                std::cout << (k ? "," : "") << w->s[k];
            std::cout << "}]";
        }
        std::cout << "\n";
        if (opt.oracle)
            std::cout << "oracle: " << out["oracle"]["status"].get<std::string>()
                      << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    if (opt.oracle && !agree) return kExitDisagree;
    return atf ? 0 : 1;
}

struct PencilOptions {
    std::string spec;
    bool verify = false;
    int max_t = 2;
    bool as_json = false;
    double timeout = 0;
};

int run_pencil(const PencilOptions& opt) {
    PencilSpec spec = PencilSpec::parse(opt.spec);
    int height = predicted_height(spec);
    json out;
    out["spec"] = spec.str();
    out["columns"] = spec.columns();
    out["variables"] = spec.variables();
    out["predicted_height"] = height;
    bool atf = false, have_atf = false;
    if (height > 1) {
        atf = predicted_atf(spec);
        have_atf = true;
        out["predicted_atf"] = atf;
    } else {
        out["predicted_atf"] = nullptr;
    }

    bool consistent = true;
    if (opt.verify) {
        util::DeadlineGuard guard(opt.timeout);
        Theorem24Record rec = verify_theorem24(spec, opt.max_t);
        consistent = rec.consistent;
        out["verify"] = {{"r", rec.r},
                         {"a_power_of_m", rec.a},
                         {"b_block_criterion", rec.b},
                         {"c_no_torsion", rec.c},
                         {"c_verdict", json::parse(rec.c_verdict.json())},
                         {"consistent", rec.consistent}};
    }

    if (opt.as_json) {
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "spec: " << spec.str() << "\n";
        std::cout << "predicted height: " << height << "\n";
        if (have_atf)
            std::cout << "predicted torsion-free: " << (atf ? "yes" : "no") << "\n";
        if (opt.verify) {
            std::cout << "verified: a=" << out["verify"]["a_power_of_m"].get<bool>()
                      << " b=" << out["verify"]["b_block_criterion"].get<bool>()
                      << " c=" << out["verify"]["c_no_torsion"].get<bool>()
                      << (consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
        }
    }
    if (opt.verify && !consistent) return kExitDisagree;
    if (have_atf) return atf ? 0 : 1;
    return 0;
}

int run_hilbert(const std::string& path, bool as_json) {
    Ideal a = parse_ideal_file(path);
    HilbertSeries hs = hilbert_series(a);
    if (as_json)
        std::cout << json{{"series", hs.str()}}.dump() << "\n";
    else
        std::cout << hs.str() << "\n";
    return 0;
}

// --- reproduce-paper ---------------------------------------------------------

struct ReportItem {
    std::string name;
    int section;
    std::string expected;
    std::function<std::string()> compute;
};

std::string yesno(bool b) { return b ? "true" : "false"; }

std::string abc(bool a, bool b, bool c) {
    std::ostringstream os;
    os << "a=" << yesno(a) << " b=" << yesno(b) << " c=" << yesno(c);
    return os.str();
}

Ideal curve357_j() {
    RingPtr r = RingContext::make({"x", "y", "z"});
    return Ideal(r, {parse_polynomial(r, "x^4 - y*z"), parse_polynomial(r, "y^2 - x*z"),
                     parse_polynomial(r, "x^3*y - z^2")});
}

Ideal curve357_i_expected() {
    RingPtr r = RingContext::make({"x", "y", "z"});
    std::vector<Polynomial> gens;
    for (const char* s : {"x^4", "x^3*y", "y^2", "x*z", "y*z", "z^2"})
        gens.push_back(parse_polynomial(r, s));
    return Ideal(r, std::move(gens));
}

Ideal curve3457_j() {
    RingPtr r = RingContext::make({"x", "y", "z", "w"});
    std::vector<Polynomial> gens;
    for (const char* s :
         {"x^3 - y*z", "y^2 - x*z", "z^2 - x*w", "x^2*z - y*w", "x*y - w"})
        gens.push_back(parse_polynomial(r, s));
    return Ideal(r, std::move(gens));
}

Ideal curve3457_i_expected() {
    RingPtr r = RingContext::make({"x", "y", "z", "w"});
    std::vector<Polynomial> gens;
    for (const char* s : {"x*w", "z^2", "y*z", "x*z", "y^2", "x*y - w", "x^3"})
        gens.push_back(parse_polynomial(r, s));
    return Ideal(r, std::move(gens));
}

Polynomial arrangement_p2_q() {
    RingPtr r = RingContext::make({"x", "y", "z"});
    return parse_polynomial(r, "x - y - z") * parse_polynomial(r, "y - x - z") *
           parse_polynomial(r, "z - x - y");
}

Ideal arrangement_p2_quadrics() {
    RingPtr r = RingContext::make({"x", "y", "z"});
    std::vector<Polynomial> gens;
    for (const char* s : {"3*x^2 - 2*x*y - y^2 - 2*x*z + 2*y*z - z^2",
                          "x^2 + 2*x*y - 3*y^2 - 2*x*z + 2*y*z + z^2",
                          "x^2 - 2*x*y + y^2 + 2*x*z + 2*y*z - 3*z^2"})
        gens.push_back(parse_polynomial(r, s));
    return Ideal(r, std::move(gens));
}

Polynomial arrangement_p3_q() {
    RingPtr r = RingContext::make({"x1", "x2", "x3", "x4"});
    return parse_polynomial(r, "x1 - x2") * parse_polynomial(r, "x2 - x3") *
           parse_polynomial(r, "x3 - x4") * parse_polynomial(r, "x4 - x1");
}

std::vector<ReportItem> report_items() {
    std::vector<ReportItem> items;

    // Section 2: pencils.
    items.push_back({"height of I2(M) for N(2) N(3)", 2, "5", [] {
        return std::to_string(codimension(two_minor_ideal(
            build_matrix(PencilSpec::parse("N(2) N(3)")))));
    }});
    items.push_back({"height of I2(M) for S(2) S(3)", 2, "4", [] {
        return std::to_string(codimension(two_minor_ideal(
            build_matrix(PencilSpec::parse("S(2) S(3)")))));
    }});
    items.push_back({"height of I2(M) for S(2) J(2;0) J(1;0)", 2, "3", [] {
        return std::to_string(codimension(two_minor_ideal(
            build_matrix(PencilSpec::parse("S(2) J(2;0) J(1;0)")))));
    }});
    items.push_back({"Hilbert series of scroll S(3)", 2, "(1+2v)/(1-v)^2", [] {
        return hilbert_series(two_minor_ideal(build_matrix(PencilSpec::parse("S(3)"))))
            .str();
    }});
    items.push_back({"2-minors of the two-scroll pencil S(2) S(1)", 2, "equal", [] {
        SymbolicMatrix m = build_matrix(PencilSpec::parse("S(2) S(1)"));
        Ideal j = two_minor_ideal(m);
        std::vector<Polynomial> expect;
        for (const char* s : {"z1_1^2 - z1_0*z1_2", "z1_1*z2_0 - z1_0*z2_1",
                              "z1_1*z2_1 - z1_2*z2_0"})
            expect.push_back(parse_polynomial(m.ring, s));
        return j.equals(Ideal(m.ring, std::move(expect))) ? "equal" : "different";
    }});
    items.push_back({"equivalences for S(3)", 2, abc(true, true, true), [] {
        Theorem24Record rec = verify_theorem24(PencilSpec::parse("S(3)"));
        return abc(rec.a, rec.b, rec.c);
    }});
    items.push_back({"equivalences for J(2;0) N(1)", 2, abc(false, false, false), [] {
        Theorem24Record rec = verify_theorem24(PencilSpec::parse("J(2;0) N(1)"));
        return abc(rec.a, rec.b, rec.c);
    }});
    items.push_back({"equivalences for N(1) J(1;1) J(1;2)", 2, abc(true, true, true), [] {
        Theorem24Record rec = verify_theorem24(PencilSpec::parse("N(1) J(1;1) J(1;2)"));
        return abc(rec.a, rec.b, rec.c);
    }});
    items.push_back({"colon identity for J(2;0) S(2)", 2, "true", [] {
        return yesno(check_colon_lemma(PencilSpec::parse("J(2;0) S(2)")));
    }});
    items.push_back({"colon identity for J(1;0) N(1)", 2, "true", [] {
        return yesno(check_colon_lemma(PencilSpec::parse("J(1;0) N(1)")));
    }});
    items.push_back({"colon identity fails on the longer zero block", 2, "unequal", [] {
        PencilSpec spec = PencilSpec::parse("J(2;0) J(3;0)");
        SymbolicMatrix m = build_matrix(spec);
        Ideal j2 = two_minor_ideal(m);
        // First variable of the longer block (hypothesis violated).
        Polynomial w1 = Polynomial::variable(m.ring, 2);
        Ideal q = colon(j2, w1);
        std::vector<Polynomial> vars;
        for (int v : row_variables(m, 1)) vars.push_back(Polynomial::variable(m.ring, v));
        return q.equals(Ideal(m.ring, std::move(vars))) ? "equal" : "unequal";
    }});
    items.push_back({"rational normal scroll S(4) torsion-free", 2, abc(true, true, true), [] {
        Theorem24Record rec = verify_theorem24(PencilSpec::parse("S(4)"));
        return abc(rec.a, rec.b, rec.c);
    }});
    items.push_back({"3x3 Hankel matches the scroll S(4)", 2, "equal", [] {
        SymbolicMatrix h = build_generalized_hankel({3});
        Ideal jh(h.ring, minors(h, 2));
        SymbolicMatrix s = build_matrix(PencilSpec::parse("S(4)"));
        Ideal js = two_minor_ideal(s);
        std::vector<int> image(h.ring->num_vars());
        for (int i = 0; i < h.ring->num_vars(); ++i) image[i] = i;  // x_i -> z_{i-1}
        std::vector<Polynomial> mapped;
        for (const Polynomial& g : jh.generators())
            mapped.push_back(map_vars(g, s.ring, image));
        return js.equals(Ideal(s.ring, std::move(mapped))) ? "equal" : "different";
    }});
    items.push_back({"quadric conditions agree for S(3)", 2, "consistent", [] {
        ConjectureEvidence e =
            conjecture_evidence(two_minor_ideal(build_matrix(PencilSpec::parse("S(3)"))));
        return e.consistent && e.m_primary && e.equals_power ? "consistent"
                                                             : "inconsistent";
    }});

    // Section 3: graphs.
    items.push_back({"complete graph K5", 3, "true", [] {
        return yesno(is_graph_atf(complete_graph(5)));
    }});
    items.push_back({"complete tripartite 2,2,2", 3, "true", [] {
        return yesno(is_graph_atf(complete_multipartite({2, 2, 2})));
    }});
    items.push_back({"K6 minus a perfect matching", 3, "true", [] {
        return yesno(is_graph_atf(complete_minus_matching(6, 3)));
    }});
    items.push_back({"cycles C3 and C4", 3, "true,true", [] {
        return yesno(is_graph_atf(cycle_graph(3))) + "," +
               yesno(is_graph_atf(cycle_graph(4)));
    }});
    items.push_back({"cycle C5", 3, "false", [] {
        return yesno(is_graph_atf(cycle_graph(5)));
    }});
    items.push_back({"cycle C6 witness", 3, "x1=1 x2=2 S={4}", [] {
        auto w = theorem34_witness(cycle_graph(6));
        if (!w) return std::string("none");
        std::ostringstream os;
        os << "x1=" << w->x1 << " x2=" << w->x2 << " S={";
        for (std::size_t k = 0; k < w->s.size(); ++k) os << (k ? "," : "") << w->s[k];
        os << "}";
        return os.str();
    }});
    items.push_back({"path P6", 3, "false", [] {
        return yesno(is_graph_atf(path_graph(6)));
    }});
    items.push_back({"star on 6 vertices", 3, "false", [] {
        return yesno(is_graph_atf(star_graph(6)));
    }});
    items.push_back({"C5 pair has torsion at t=2", 3, "torsion at t=2", [] {
        Ideal j = edge_ideal(cycle_graph(5));
        Ideal i = jacobian_ideal(j);
        VVComponent vv = vv_component(j, i, 2);
        Polynomial w = parse_polynomial(j.ring(), "x1*x2*x4^4");
        bool witness_ok = j.contains(w) && ideal_power(i, 2).contains(w) &&
                          !ideal_product(j, i).contains(w);
        return (!vv.is_zero && witness_ok) ? std::string("torsion at t=2")
                                           : std::string("no torsion found");
    }});
    items.push_back({"quadric conditions agree for K4", 3, "consistent", [] {
        ConjectureEvidence e = conjecture_evidence(edge_ideal(complete_graph(4)));
        return e.consistent ? "consistent" : "inconsistent";
    }});

    // Section 4: curves and arrangements.
    items.push_back({"curve (t^3,t^5,t^7): Jacobian ideal", 4, "equal", [] {
        return jacobian_ideal(curve357_j()).equals(curve357_i_expected()) ? "equal"
                                                                          : "different";
    }});
    items.push_back({"curve (t^3,t^5,t^7): pair torsion-free", 4, "TorsionFree", [] {
        Ideal j = curve357_j();
        return std::string(
            to_string(aluffi_torsion_free(j, jacobian_ideal(j), {}, true).status));
    }});
    items.push_back({"curve (t^3,t^4,t^5,t^7): Jacobian ideal", 4, "equal", [] {
        return jacobian_ideal(curve3457_j()).equals(curve3457_i_expected())
                   ? "equal"
                   : "different";
    }});
    items.push_back({"curve (t^3,t^4,t^5,t^7): T2*T5-T7^2 in the Rees ideal", 4,
                     "member", [] {
        Ideal rees = rees_ideal(curve3457_i_expected(), curve3457_j());
        Polynomial f = parse_polynomial(rees.ring(), "T2*T5 - T7^2");
        return rees.contains(f) ? "member" : "not member";
    }});
    items.push_back({"curve (t^3,t^4,t^5,t^7): pair torsion-free", 4, "TorsionFree", [] {
        Ideal j = curve3457_j();
        return std::string(
            to_string(aluffi_torsion_free(j, jacobian_ideal(j), {}, true).status));
    }});
    items.push_back({"arrangement in P2: Jacobian ideal of Q", 4, "equal", [] {
        Ideal j = jacobian_ideal(principal_ideal(arrangement_p2_q()));
        return j.equals(arrangement_p2_quadrics()) ? "equal" : "different";
    }});
    items.push_back({"arrangement in P2: second Jacobian ideal is m^2", 4, "equal", [] {
        Ideal j = arrangement_p2_quadrics();
        Ideal i = jacobian_ideal(j);
        return i.equals(variable_power_ideal(j.ring(), 2)) ? "equal" : "different";
    }});
    items.push_back({"arrangement in P2: pair torsion-free", 4, "TorsionFree", [] {
        Ideal j = arrangement_p2_quadrics();
        return std::string(
            to_string(aluffi_torsion_free(j, jacobian_ideal(j), {}, true).status));
    }});
    items.push_back({"arrangement in P3: relation type of I/J", 4, "2", [] {
        Ideal j = jacobian_ideal(principal_ideal(arrangement_p3_q()));
        Ideal i = jacobian_ideal(j);
        return std::to_string(relation_type(j, i));
    }});
    items.push_back({"arrangement in P3: J cap I^2 = J*I", 4, "equal", [] {
        Ideal j = jacobian_ideal(principal_ideal(arrangement_p3_q()));
        Ideal i = jacobian_ideal(j);
        return vv_component(j, i, 2).is_zero ? "equal" : "unequal";
    }});
    items.push_back({"arrangement in P3: pair torsion-free", 4, "TorsionFree", [] {
        Ideal j = jacobian_ideal(principal_ideal(arrangement_p3_q()));
        return std::string(
            to_string(aluffi_torsion_free(j, jacobian_ideal(j), {}, true).status));
    }});
    return items;
}

int run_reproduce(int section, bool as_json, double timeout_per_item) {
    std::vector<ReportItem> items = report_items();
    if (section > 0) {
        std::erase_if(items, [&](const ReportItem& it) { return it.section != section; });
    }
    struct Row {
        std::string computed;
        bool agree = false;
        double ms = 0;
    };
    std::vector<Row> rows(items.size());
    util::parallel_for(items.size(), [&](std::size_t k) {
        auto start = std::chrono::steady_clock::now();
        Row row;
        try {
            util::DeadlineGuard guard(timeout_per_item);
            row.computed = items[k].compute();
        } catch (const util::Timeout&) {
            row.computed = "(timeout)";
        } catch (const std::exception& e) {
            row.computed = std::string("(error: ") + e.what() + ")";
        }
        row.agree = (row.computed == items[k].expected);
        row.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
        rows[k] = std::move(row);
    });

    int agreed = 0;
    for (const Row& r : rows) agreed += r.agree ? 1 : 0;

    if (as_json) {
        json out;
        out["items"] = json::array();
        for (std::size_t k = 0; k < items.size(); ++k) {
            out["items"].push_back({{"name", items[k].name},
                                    {"section", items[k].section},
                                    {"expected", items[k].expected},
                                    {"computed", rows[k].computed},
                                    {"agree", rows[k].agree},
                                    {"elapsed_ms", rows[k].ms}});
        }
        out["summary"] = {{"total", items.size()},
                          {"agreed", agreed},
                          {"disagreed", items.size() - agreed}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t k = 0; k < items.size(); ++k) {
            std::printf("[%s] s%d %-55s expected=%s computed=%s (%.0f ms)\n",
                        rows[k].agree ? "ok" : "FAIL", items[k].section,
                        items[k].name.c_str(), items[k].expected.c_str(),
                        rows[k].computed.c_str(), rows[k].ms);
        }
        std::printf("%d/%zu items agree\n", agreed, items.size());
    }
    return agreed == static_cast<int>(items.size()) ? 0 : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Aluffi torsion-free deciders for ideal pairs over Q"};
    app.require_subcommand(1);

    CheckOptions check;
    CLI::App* c = app.add_subcommand(
        "check", "Decide whether a pair J in I is Aluffi torsion-free");
    c->add_option("J", check.j_file, "ideal file for J")->required();
    c->add_option("I", check.i_file, "ideal file for I");
    c->add_flag("--jacobian", check.use_jacobian, "take I as the Jacobian ideal of J");
    c->add_option("--max-t", check.max_t, "degrees checked without certification");
    c->add_flag("--certify,!--no-certify", check.certify,
                "certify via the relation type (default on)");
    c->add_flag("--json", check.as_json, "machine-readable output");
    c->add_option("--timeout", check.timeout, "seconds before giving up");

    GraphOptions graph;
    CLI::App* g = app.add_subcommand("graph", "Combinatorial decider for edge ideals");
    g->add_option("graph", graph.source, "graph file or family such as cycle:6")
        ->required();
    g->add_flag("--oracle", graph.oracle, "also run the algebraic verdict and compare");
    g->add_option("--max-t", graph.max_t, "degrees checked without certification");
    g->add_flag("--certify,!--no-certify", graph.certify,
                "certify the oracle verdict (default on)");
    g->add_flag("--json", graph.as_json, "machine-readable output");
    g->add_option("--timeout", graph.timeout, "seconds before giving up");

    PencilOptions pencil;
    CLI::App* p = app.add_subcommand(
        "pencil", "Block criterion for 2-minor ideals of matrix pencils");
    p->add_option("spec", pencil.spec, "block spec such as 'N(2) J(2;0) S(3)'")
        ->required();
    p->add_flag("--verify", pencil.verify, "cross-check the three conditions");
    p->add_option("--max-t", pencil.max_t, "torsion degrees checked in the verifier");
    p->add_flag("--json", pencil.as_json, "machine-readable output");
    p->add_option("--timeout", pencil.timeout, "seconds before giving up");

    std::string hilbert_file;
    bool hilbert_json = false;
    CLI::App* h = app.add_subcommand("hilbert", "Hilbert series of a homogeneous ideal");
    h->add_option("ideal", hilbert_file, "ideal file")->required();
    h->add_flag("--json", hilbert_json, "machine-readable output");

    int section = 0;
    bool rep_json = false;
    double rep_timeout = 600;
    CLI::App* r = app.add_subcommand("reproduce-paper",
                                     "Run the full example suite and compare verdicts");
    r->add_option("--section", section, "restrict to one section (2, 3 or 4)");
    r->add_flag("--json", rep_json, "machine-readable report");
    r->add_option("--timeout", rep_timeout, "seconds per item (default 600)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (c->parsed()) {
            if (!check.use_jacobian && check.i_file.empty())
                throw std::invalid_argument("need an ideal file for I or --jacobian");
            return run_check(check);
        }
        if (g->parsed()) return run_graph(graph);
        if (p->parsed()) return run_pencil(pencil);
        if (h->parsed()) return run_hilbert(hilbert_file, hilbert_json);
        if (r->parsed()) return run_reproduce(section, rep_json, rep_timeout);
    } catch (const util::Timeout& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition + 3;
    }
    return kExitParse;
}
