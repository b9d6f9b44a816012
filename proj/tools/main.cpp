// Command-line front end: every subcommand prints JSON on stdout. Exit code
// 0 on success, 1 when a --verify/check finds a mismatch, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sxp/coplactic.hpp"
#include "sxp/frontier.hpp"
#include "sxp/literals.hpp"
#include "sxp/ribbon.hpp"
#include "sxp/sxp.hpp"
#include "sxp/symfunc.hpp"

using json = nlohmann::ordered_json;
using namespace sxp;

namespace {

json to_json(const Partition& p) {
    json out = json::array();
    for (int x : p.parts()) out.push_back(x);
    return out;
}

json to_json(const SkewShape& s) {
    if (s.inner().empty()) return to_json(s.outer());
    return json::array({to_json(s.outer()), to_json(s.inner())});
}

json to_json(const SkewMultiShape& q) {
    json out = json::array();
    for (const SkewShape& c : q.components) out.push_back(to_json(c));
    return out;
}

json to_json(const SchurExpansion& e) {
    json out = json::object();
    for (const auto& [p, c] : ordered_terms(e)) out[to_literal(p)] = c;
    return out;
}

json to_json(const SkewTableau& t) {
    json rows = json::array();
    for (int a = 1; a <= t.shape().rows(); ++a) {
        json row = json::array();
        for (int b = 1; b < t.shape().row_begin(a); ++b) row.push_back(nullptr);
        for (int x : t.rows()[a - 1]) row.push_back(x);
        rows.push_back(row);
    }
    return rows;
}

json to_json(const MultiTableau& t) {
    json out = json::array();
    for (const SkewTableau& c : t.components) out.push_back(to_json(c));
    return out;
}

Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

SkewShape skew_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("expected a JSON array");
    if (j.size() == 2 && j[0].is_array() && j[1].is_array())
        return SkewShape(partition_from_json(j[0]), partition_from_json(j[1]));
    return skew(partition_from_json(j));
}

SkewMultiShape multishape_from_json(const json& j) {
    std::vector<SkewShape> comps;
    for (const auto& c : j) comps.push_back(skew_from_json(c));
    return SkewMultiShape(std::move(comps));
}

SkewTableau tableau_from_json(const json& j) {
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        int holes = 0;
        std::vector<int> entries;
        for (const auto& cell : row) {
            if (cell.is_null()) {
                if (!entries.empty()) throw parse_error("nulls must lead their row");
                ++holes;
            } else {
                entries.push_back(cell.get<int>());
            }
        }
        inner.push_back(holes);
        outer.push_back(holes + static_cast<int>(entries.size()));
        rows.push_back(std::move(entries));
    }
    return SkewTableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

Composition composition_from_csv(const std::string& text) {
    std::vector<int> entries;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        entries.push_back(std::stoi(item));
    return Composition(std::move(entries));
}

// ASCII rendering of a ribbon tableau: each box carries its ribbon label,
// with heavy boundaries between distinct border strips.
std::string ascii_ribbon(const RibbonTableau& T) {
    auto strips = border_strips(T);
    std::map<Box, int> owner, label;
    for (std::size_t i = 0; i < strips.size(); ++i)
        for (const Box& box : strips[i].boxes) {
            owner[box] = static_cast<int>(i);
            label[box] = strips[i].label;
        }
    int rows = T.shape.outer().rows();
    int cols = T.shape.outer().part(0);
    auto same_strip = [&](Box a, Box b) {
        auto ia = owner.find(a), ib = owner.find(b);
        return ia != owner.end() && ib != owner.end() && ia->second == ib->second;
    };
    std::vector<std::string> canvas(2 * rows + 1, std::string(4 * cols + 1, ' '));
    for (const auto& [box, idx] : owner) {
        auto [a, b] = box;
        int y = 2 * a - 1, x = 4 * (b - 1);
        std::string text = std::to_string(label[box]);
        canvas[y][x + 2] = text.back();
        if (!same_strip(box, {a - 1, b}))
            for (int d = 1; d <= 3; ++d) canvas[y - 1][x + d] = '-';
        if (!same_strip(box, {a + 1, b}))
            for (int d = 1; d <= 3; ++d) canvas[y + 1][x + d] = '-';
        if (!same_strip(box, {a, b - 1})) canvas[y][x] = '|';
        if (!same_strip(box, {a, b + 1})) canvas[y][x + 4] = '|';
        for (int dy : {-1, 1})
            for (int dx : {0, 4}) canvas[y + dy][x + dx] = '+';
    }
    std::string out;
    for (const std::string& line : canvas) {
        std::size_t end = line.find_last_not_of(' ');
        if (end == std::string::npos) continue;
        out += line.substr(0, end + 1);
        out += '\n';
    }
    return out;
}

std::string svg_ribbon(const std::vector<RibbonTableau>& tableaux) {
    const int cell = 28, pad = 20;
    int yoff = pad;
    std::ostringstream body;
    int width = 0;
    for (const RibbonTableau& T : tableaux) {
        auto strips = border_strips(T);
        std::map<Box, int> owner;
        for (std::size_t i = 0; i < strips.size(); ++i)
            for (const Box& box : strips[i].boxes) owner[box] = static_cast<int>(i);
        auto same_strip = [&](Box a, Box b) {
            auto ia = owner.find(a), ib = owner.find(b);
            return ia != owner.end() && ib != owner.end() && ia->second == ib->second;
        };
        for (std::size_t i = 0; i < strips.size(); ++i)
            for (const Box& box : strips[i].boxes) {
                auto [a, b] = box;
                int x = pad + (b - 1) * cell, y = yoff + (a - 1) * cell;
                width = std::max(width, x + cell + pad);
                body << "<rect x='" << x << "' y='" << y << "' width='" << cell
                     << "' height='" << cell
                     << "' fill='white' stroke='#999' stroke-width='1'/>\n";
                body << "<text x='" << x + cell / 2 << "' y='" << y + cell / 2 + 5
                     << "' text-anchor='middle' font-size='14'>" << strips[i].label
                     << "</text>\n";
                auto heavy = [&](int x1, int y1, int x2, int y2) {
                    body << "<line x1='" << x1 << "' y1='" << y1 << "' x2='" << x2
                         << "' y2='" << y2 << "' stroke='black' stroke-width='3'/>\n";
                };
                if (!same_strip(box, {a - 1, b})) heavy(x, y, x + cell, y);
                if (!same_strip(box, {a + 1, b})) heavy(x, y + cell, x + cell, y + cell);
                if (!same_strip(box, {a, b - 1})) heavy(x, y, x, y + cell);
                if (!same_strip(box, {a, b + 1})) heavy(x + cell, y, x + cell, y + cell);
            }
        yoff += T.shape.outer().rows() * cell + pad;
    }
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << std::max(width, 2 * pad)
        << "' height='" << yoff << "'>\n"
        << body.str() << "</svg>\n";
    return out.str();
}

std::string ascii_partition(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.part(i); ++j) out += "[]";
        out += '\n';
    }
    return out;
}

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

json trace_to_json(const PipelineTrace& trace) {
    json terms = json::array();
    for (const PipelineTermRecord& t : trace.terms) {
        json alpha = json::array();
        for (int x : t.alpha.entries) alpha.push_back(x);
        json images = json::array();
        for (int x : t.g.images) images.push_back(x + 1);
        terms.push_back({{"g", images}, {"sign", t.g.sign}, {"alpha", alpha}});
    }
    json by_nu = json::array();
    for (const PipelineNuRecord& rec : trace.by_nu) {
        json counts = json::array();
        for (Int c : rec.ribbon_tableaux_per_term) counts.push_back(c);
        by_nu.push_back({{"nu", to_literal(rec.nu)},
                         {"ribbon_tableaux", counts},
                         {"summands", rec.summands},
                         {"cancelled", rec.cancelled},
                         {"survivors", rec.survivors},
                         {"sign", rec.sign},
                         {"coefficient", rec.coefficient}});
    }
    return {{"jacobi_trudi_terms", trace.jacobi_trudi_terms},
            {"terms", terms},
            {"by_nu", by_nu}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Schur expansions of s_tau(s_{lambda/mu} o p_r) and the ribbon/"
        "coplactic combinatorics behind them"};
    app.require_subcommand(1);
    bool pretty = false;
    unsigned seed = 1;
    app.add_flag("--pretty", pretty, "pretty-print JSON and add diagrams");
    app.add_option("--seed", seed, "seed for randomized drivers");

    std::string shape_arg, tau_arg = "[]", quotient_arg, weight_arg, content_arg;
    std::string lambda_arg, nu_arg, json_arg, out_arg, svg_arg;
    int r = 1;

    auto* quotient_cmd = app.add_subcommand("quotient", "r-quotient of a (skew) partition");
    quotient_cmd->add_option("-r", r, "number of runners")->required()->check(CLI::Range(1, 1 << 20));
    quotient_cmd->add_option("shape", shape_arg, "[nu] or [nu]/[tau]")->required();

    auto* core_cmd = app.add_subcommand("core", "r-core of a partition");
    core_cmd->add_option("-r", r)->required()->check(CLI::Range(1, 1 << 20));
    core_cmd->add_option("shape", shape_arg, "[nu]")->required();

    auto* star_cmd = app.add_subcommand("star", "partition with the given quotient over tau");
    star_cmd->add_option("-r", r)->required()->check(CLI::Range(1, 1 << 20));
    star_cmd->add_option("--tau", tau_arg, "[tau]")->required();
    star_cmd->add_option("--quotient", quotient_arg, "multishape JSON")->required();

    auto* sign_cmd = app.add_subcommand("sign", "r-sign of a skew shape");
    sign_cmd->add_option("-r", r)->required()->check(CLI::Range(1, 1 << 20));
    sign_cmd->add_option("shape", shape_arg, "[nu]/[tau]")->required();

    auto* ssyt_cmd = app.add_subcommand("ssyt-count", "semistandard fillings of given content");
    ssyt_cmd->add_option("shape", shape_arg)->required();
    ssyt_cmd->add_option("--content", content_arg, "comma separated")->required();

    auto* lattice_cmd = app.add_subcommand("lattice-check", "is a word/tableau latticed");
    lattice_cmd->add_option("input", json_arg, "word, tableau or multitableau JSON")->required();

    auto* lr_cmd = app.add_subcommand("lr", "generalized Littlewood-Richardson coefficient");
    lr_cmd->add_option("--lambda", lambda_arg, "[lambda]")->required();
    lr_cmd->add_option("--shape", quotient_arg, "multishape JSON")->required();

    auto* gorbit_cmd = app.add_subcommand("g-orbit", "image under the pairing involution");
    gorbit_cmd->add_option("input", json_arg, "multitableau JSON")->required();

    auto* rcount_cmd = app.add_subcommand("ribbon-count", "number of r-ribbon tableaux");
    rcount_cmd->add_option("-r", r)->required()->check(CLI::Range(1, 1 << 20));
    rcount_cmd->add_option("shape", shape_arg)->required();
    rcount_cmd->add_option("--weight", weight_arg, "comma separated")->required();

    auto* rshow_cmd = app.add_subcommand("ribbon-show", "draw r-ribbon tableaux");
    rshow_cmd->add_option("-r", r)->required()->check(CLI::Range(1, 1 << 20));
    rshow_cmd->add_option("shape", shape_arg)->required();
    rshow_cmd->add_option("--weight", weight_arg)->required();
    rshow_cmd->add_option("--svg", svg_arg, "write an SVG file");

    auto* mn_cmd = app.add_subcommand("mn", "s_tau (h_alpha o p_r) expansion");
    mn_cmd->add_option("-r", r)->required()->check(CLI::Range(1, 1 << 20));
    mn_cmd->add_option("--tau", tau_arg);
    mn_cmd->add_option("--alpha", weight_arg)->required();

    bool trace = false, verify = false;
    auto* sxp_cmd = app.add_subcommand("sxp", "s_tau (s_{lambda/mu} o p_r) expansion");
    sxp_cmd->add_option("-r", r)->required()->check(CLI::Range(1, 1 << 20));
    sxp_cmd->add_option("--tau", tau_arg);
    sxp_cmd->add_option("--skew", shape_arg, "[lambda]/[mu]")->required();
    sxp_cmd->add_flag("--trace", trace, "stage counts on stderr");
    sxp_cmd->add_flag("--verify", verify, "compare against the oracle; exit 1 on mismatch");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force expansion");
    oracle_cmd->add_option("-r", r)->required()->check(CLI::Range(1, 1 << 20));
    oracle_cmd->add_option("--tau", tau_arg);
    oracle_cmd->add_option("--skew", shape_arg)->required();

    auto* cl_cmd = app.add_subcommand("cl-check", "two-ribbon column-word rule check");
    cl_cmd->add_option("--tau", tau_arg);
    cl_cmd->add_option("--lambda", lambda_arg)->required();
    cl_cmd->add_option("--nu", nu_arg)->required();

    int r_max = 3, n_max = 6, jobs = 1;
    bool resume = false;
    auto* conj_cmd = app.add_subcommand("verify-conjecture",
                                        "row-number-tableau bound harness");
    conj_cmd->add_option("--r-max", r_max);
    conj_cmd->add_option("--n-max", n_max);
    conj_cmd->add_option("--jobs", jobs);
    conj_cmd->add_option("--out", out_arg, "JSON-lines report path");
    conj_cmd->add_flag("--resume", resume, "skip cells already in the report");

    auto* table_cmd = app.add_subcommand("table", "the four counterexample rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*quotient_cmd) {
            SkewShape s = skew_from_literal(shape_arg);
            emit(to_json(skew_quotient(s, r)), pretty);
        } else if (*core_cmd) {
            Partition p = partition_from_literal(shape_arg);
            Partition core = r_core(p, r);
            if (pretty) std::cout << ascii_partition(core);
            emit(to_json(core), pretty);
        } else if (*star_cmd) {
            SkewMultiShape q = multishape_from_json(json::parse(quotient_arg));
            Partition nu = star(q, partition_from_literal(tau_arg), r);
            if (pretty) std::cout << ascii_partition(nu);
            emit(to_json(nu), pretty);
        } else if (*sign_cmd) {
            emit(json{{"sign", sgn_r(skew_from_literal(shape_arg), r)}}, pretty);
        } else if (*ssyt_cmd) {
            emit(json{{"count", count_ssyt(skew_from_literal(shape_arg),
                                           composition_from_csv(content_arg))}},
                 pretty);
        } else if (*lattice_cmd) {
            json j = json::parse(json_arg);
            bool latticed;
            if (j.empty() || j[0].is_number()) {
                Word w;
                for (const auto& x : j) w.push_back(x.get<int>());
                latticed = is_latticed(w);
            } else if (j[0].is_array() && (j[0].empty() || !j[0][0].is_array())) {
                latticed = is_latticed(tableau_from_json(j));
            } else {
                std::vector<SkewTableau> comps;
                for (const auto& c : j) comps.push_back(tableau_from_json(c));
                latticed = is_latticed(MultiTableau(std::move(comps)));
            }
            emit(json{{"latticed", latticed}}, pretty);
        } else if (*lr_cmd) {
            emit(json{{"lr", lr_coefficient(partition_from_literal(lambda_arg),
                                            multishape_from_json(json::parse(quotient_arg)))}},
                 pretty);
        } else if (*gorbit_cmd) {
            json j = json::parse(json_arg);
            std::vector<SkewTableau> comps;
            for (const auto& c : j) comps.push_back(tableau_from_json(c));
            InvolutionStep step = ls_involution(MultiTableau(std::move(comps)));
            json out{{"fixed", step.fixed}, {"image", to_json(step.image)}};
            if (!step.fixed) out["k"] = step.k;
            emit(out, pretty);
        } else if (*rcount_cmd) {
            auto list = enumerate_ribbon_tableaux(skew_from_literal(shape_arg),
                                                  composition_from_csv(weight_arg), r);
            emit(json{{"count", list.size()}}, pretty);
        } else if (*rshow_cmd) {
            auto list = enumerate_ribbon_tableaux(skew_from_literal(shape_arg),
                                                  composition_from_csv(weight_arg), r);
            for (std::size_t i = 0; i < list.size(); ++i) {
                std::cout << "# tableau " << i + 1 << " of " << list.size() << "\n";
                std::cout << ascii_ribbon(list[i]);
            }
            if (!svg_arg.empty()) {
                std::ofstream svg(svg_arg);
                svg << svg_ribbon(list);
            }
        } else if (*mn_cmd) {
            emit(to_json(plethystic_mn(partition_from_literal(tau_arg),
                                       composition_from_csv(weight_arg), r)),
                 pretty);
        } else if (*sxp_cmd) {
            Partition tau = partition_from_literal(tau_arg);
            SkewShape s = skew_from_literal(shape_arg);
            SchurExpansion e = sxp_expand(tau, s, r);
            if (trace) std::cerr << trace_to_json(pipeline_trace(tau, s, r)).dump(2) << "\n";
            emit(to_json(e), pretty);
            if (verify && e != oracle_product_plethysm(tau, s, r)) {
                std::cerr << "verification failed: expansion disagrees with the oracle\n";
                return 1;
            }
        } else if (*oracle_cmd) {
            emit(to_json(oracle_product_plethysm(partition_from_literal(tau_arg),
                                                 skew_from_literal(shape_arg), r)),
                 pretty);
        } else if (*cl_cmd) {
            CarreLeclercResult res =
                carre_leclerc_check(partition_from_literal(tau_arg),
                                    partition_from_literal(lambda_arg),
                                    partition_from_literal(nu_arg));
            emit(json{{"multiplicity", res.multiplicity},
                      {"cwl", res.cwl},
                      {"sign", res.sign},
                      {"ok", res.ok}},
                 pretty);
            if (!res.ok) return 1;
        } else if (*conj_cmd) {
            ConjectureOptions opt;
            opt.r_max = r_max;
            opt.n_max = n_max;
            opt.jobs = jobs;
            opt.resume = resume;
            opt.seed = seed;
            opt.out_path = out_arg;
            if (opt.out_path.empty()) {
                if (const char* dir = std::getenv("SXP_CACHE_DIR")) {
                    opt.out_path = std::string(dir) + "/conjecture-r" +
                                   std::to_string(r_max) + "-n" + std::to_string(n_max) +
                                   ".jsonl";
                }
            }
            ConjectureReport rep = verify_conjecture(opt);
            emit(json{{"cells", rep.cells.size()},
                      {"scanned", rep.scanned},
                      {"violations", rep.violations},
                      {"min_slack", rep.min_slack},
                      {"max_slack", rep.max_slack},
                      {"b1_cells", rep.b1_cells},
                      {"b1_equality", rep.b1_equality},
                      {"audited", rep.audited},
                      {"audit_failures", rep.audit_failures},
                      {"resumed", rep.resumed},
                      {"report", opt.out_path}},
                 pretty);
            if (rep.violations != 0 || rep.audit_failures != 0) return 1;
        } else if (*table_cmd) {
            json rows = json::array();
            for (const TableRow& row : reproduce_table())
                rows.push_back({{"tau", to_literal(row.tau)},
                                {"lambda", to_literal(row.lambda)},
                                {"r", row.r},
                                {"nu", to_literal(row.nu)},
                                {"mult", row.mult},
                                {"rt", row.rt},
                                {"cwl", row.cwl},
                                {"rntl", row.rntl}});
            emit(rows, pretty);
        }
    } catch (const parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: bad JSON argument: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
