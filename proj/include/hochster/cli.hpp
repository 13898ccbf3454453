// Copyright 2026 The hochster Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOCHSTER_CLI_HPP
#define HOCHSTER_CLI_HPP

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hochster/betti.hpp"
#include "hochster/errors.hpp"
#include "hochster/graph.hpp"
#include "hochster/homology.hpp"
#include "hochster/ideal.hpp"
#include "hochster/subsets.hpp"
#include "hochster/theorems.hpp"

namespace hochster::cli {

using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 success and every check HOLDS, 1 a check found a violation,
// 2 usage or parse error, 3 a resource guard tripped.
enum exit_code : int { exit_ok = 0, exit_violation = 1, exit_usage = 2, exit_resource = 3 };

inline bipartite_graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return read_graph(in);
}

namespace detail {

inline ordered_json subset_json(mask_t s) { return ordered_json(mask_to_indices(s)); }

inline ordered_json table_json(const betti_table& t) {
    ordered_json doc;
    doc["p"] = t.p();
    doc["xvars"] = t.xvars();
    doc["yvars"] = t.yvars();
    ordered_json mg = ordered_json::array();
    for (const auto& e : t.entries()) {
        ordered_json row;
        row["i"] = e.i;
        row["xpart"] = subset_json(e.xs);
        row["ypart"] = subset_json(e.ys);
        row["rank"] = e.rank;
        mg.push_back(row);
    }
    doc["multigraded"] = mg;
    ordered_json zn = ordered_json::array();
    for (const auto& e : t.zn_rows()) {
        ordered_json row;
        row["i"] = e.i;
        row["xpart"] = subset_json(e.xs);
        row["rank"] = e.rank;
        zn.push_back(row);
    }
    doc["zn"] = zn;
    ordered_json tot = ordered_json::array();
    for (const auto& [j, r] : t.total_rows()) tot.push_back({j, r});
    doc["total"] = tot;
    return doc;
}

inline void print_table_text(std::ostream& out, const betti_table& t, const std::string& view) {
    if (view == "all" || view == "multigraded") {
        out << "multigraded (p=" << t.p() << "):\n";
        for (const auto& e : t.entries()) {
            std::string w = format_subset(e.xs, "x");
            std::string y = format_subset(e.ys, "y");
            out << "  i=" << e.i << " W=" << (e.xs ? w : "") << (e.xs && e.ys ? "+" : "")
                << (e.ys ? y : "") << (e.xs || e.ys ? "" : "-") << " rank=" << e.rank << '\n';
        }
    }
    if (view == "all" || view == "zn") {
        out << "zn (p=" << t.p() << "):\n";
        for (const auto& e : t.zn_rows())
            out << "  i=" << e.i << " X'=" << format_subset(e.xs, "x") << " rank=" << e.rank << '\n';
    }
    if (view == "all" || view == "total") {
        out << "total (p=" << t.p() << "):\n";
        for (const auto& [j, r] : t.total_rows()) out << "  j=" << j << " rank=" << r << '\n';
    }
}

inline void print_table_csv(std::ostream& out, const betti_table& t, const std::string& view) {
    bool first = true;
    auto sep = [&] {
        if (!first) out << '\n';
        first = false;
    };
    if (view == "all" || view == "multigraded") {
        sep();
        out << t.to_csv_multigraded();
    }
    if (view == "all" || view == "zn") {
        sep();
        out << t.to_csv_zn();
    }
    if (view == "all" || view == "total") {
        sep();
        out << t.to_csv_total();
    }
}

inline ordered_json violations_json(const std::vector<violation_record>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : rows) {
        ordered_json row;
        row["i"] = v.i;
        row["xpart"] = subset_json(v.xs);
        row["lhs"] = v.lhs;
        row["rhs"] = v.rhs;
        arr.push_back(row);
    }
    return arr;
}

inline std::string violations_csv(const std::vector<violation_record>& rows) {
    std::ostringstream os;
    os << "i,xpart,lhs,rhs\n";
    for (const auto& v : rows)
        os << v.i << ',' << format_subset(v.xs) << ',' << v.lhs << ',' << v.rhs << '\n';
    return os.str();
}

inline std::int64_t parse_number(const std::string& item, const char* what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": invalid entry '" + item + "'");
    }
}

inline std::vector<std::int64_t> parse_primes(const std::string& list) {
    std::vector<std::int64_t> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_number(item, "--primes"));
    }
    if (out.empty()) throw std::invalid_argument("--primes: empty list");
    return out;
}

inline mask_t parse_index_mask(const std::string& list, int limit, const char* what) {
    mask_t s = 0;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::int64_t v = parse_number(item, what);
        if (v < 1 || v > limit)
            throw std::invalid_argument(std::string(what) + ": index " + item + " out of range");
        s |= bit(static_cast<int>(v - 1));
    }
    if (s == 0) throw std::invalid_argument(std::string(what) + ": empty list");
    return s;
}

}  // namespace detail

// Runs the tool on an argument vector (without the program name) and writes
// data to `out`, diagnostics to `err`.  Identical invocations produce byte
// identical `out` streams.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "graded Betti numbers of bipartite edge ideals.\n"
        "Convention: beta_{i,W} is the reduced homology rank of the induced slice on W\n"
        "in dimension |W|-i-2, so generators appear at i=0."};
    app.require_subcommand(1);

    std::string input, format = "text", view = "all", primes_list, y1_list, check_name = "all";
    std::int64_t prime = 2;
    int nside = -1, mside = -1, x1 = 0, coverage = 0, degree = 2;
    long count = 0;
    bool no_isolated_x = false, dedupe = false, do_check = false, verbose = false;
    bool break_ferrers = false;
    std::size_t cap_faces = default_face_cap;
    int max_cells = 16;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--prime", prime, "coefficient field modulus (prime)")->capture_default_str();
        cmd->add_option("--primes", primes_list, "comma list of primes; results are cross-checked");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--cap-faces", cap_faces, "face-count guard per complex")->capture_default_str();
        cmd->add_flag("--verbose", verbose, "print timing to the diagnostics stream");
    };

    bool view_total = false, view_zn = false, view_multigraded = false;
    CLI::App* betti_cmd = app.add_subcommand("betti", "Betti tables of a graph's edge ideal");
    betti_cmd->add_option("--input", input, "graph file")->required();
    betti_cmd->add_option("--view", view, "table view")
        ->check(CLI::IsMember({"all", "multigraded", "zn", "total"}));
    betti_cmd->add_flag("--total", view_total, "shortcut for --view total");
    betti_cmd->add_flag("--zn", view_zn, "shortcut for --view zn");
    betti_cmd->add_flag("--multigraded", view_multigraded, "shortcut for --view multigraded");
    add_common(betti_cmd);

    CLI::App* ferrers_cmd = app.add_subcommand("ferrers", "shifted graph and its closed-form table");
    ferrers_cmd->add_option("--input", input, "graph file")->required();
    ferrers_cmd->add_flag("--check", do_check, "cross-check the closed form against homology");
    add_common(ferrers_cmd);

    CLI::App* colex_cmd = app.add_subcommand("colex", "colex segment, ideal and its total table");
    colex_cmd->add_option("--degree", degree, "generator degree")->required();
    colex_cmd->add_option("--count", count, "number of generators")->required();
    add_common(colex_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run theorem checks on a graph or a family");
    verify_cmd->add_option("--check", check_name, "which check")
        ->check(CLI::IsMember({"bound", "equality", "colex", "all"}));
    verify_cmd->add_option("--input", input, "graph file (single-instance mode)");
    verify_cmd->add_option("--n", nside, "X side (family mode)");
    verify_cmd->add_option("--m", mside, "Y side (family mode)");
    verify_cmd->add_flag("--no-isolated-x", no_isolated_x, "skip graphs with isolated X vertices");
    verify_cmd->add_flag("--dedupe", dedupe, "one representative per isomorphism orbit");
    verify_cmd->add_option("--max-cells", max_cells, "enumeration guard on n*m")->capture_default_str();
    verify_cmd->add_flag("--break-ferrers", break_ferrers)->group("");  // test hook
    add_common(verify_cmd);

    CLI::App* witness_cmd = app.add_subcommand("witness", "constructive homology witnesses");
    witness_cmd->add_option("--input", input, "graph file")->required();
    witness_cmd->add_option("--x1", x1, "distinguished X vertex (1-based)")->required();
    witness_cmd->add_option("--y1", y1_list, "comma list of Y indices inside N(x1)");
    witness_cmd->add_option("--coverage", coverage, "run all Y_1' of this size and count witnesses");
    add_common(witness_cmd);

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "stream all bipartite graphs on fixed sides");
    enum_cmd->add_option("--n", nside, "X side")->required();
    enum_cmd->add_option("--m", mside, "Y side")->required();
    enum_cmd->add_flag("--no-isolated-x", no_isolated_x, "only graphs with no isolated X vertex");
    enum_cmd->add_flag("--dedupe", dedupe, "one representative per isomorphism orbit");
    enum_cmd->add_option("--max-cells", max_cells, "enumeration guard on n*m")->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (view_total) view = "total";
    else if (view_zn) view = "zn";
    else if (view_multigraded) view = "multigraded";

    std::vector<std::int64_t> primes = {prime};
    betti_caps caps;
    caps.max_faces = cap_faces;

    try {
        if (!primes_list.empty()) primes = detail::parse_primes(primes_list);
        for (std::int64_t p : primes) prime_field check_prime(p);  // validate early

        if (betti_cmd->parsed()) {
            bipartite_graph g = parse_graph_file(input);
            std::vector<betti_table> tables;
            for (std::int64_t p : primes) {
                hochster::detail::stopwatch timer;
                betti_engine eng(g, prime_field(p), caps);
                tables.push_back(betti_table::compute(eng));
                if (verbose) err << "p=" << p << " table in " << timer.ms() << " ms\n";
            }
            bool agree = true;
            for (const auto& t : tables) agree = agree && same_ranks(tables.front(), t);
            if (format == "json") {
                ordered_json doc;
                ordered_json arr = ordered_json::array();
                for (const auto& t : tables) arr.push_back(detail::table_json(t));
                doc["tables"] = arr;
                if (tables.size() > 1) doc["primes_agree"] = agree;
                out << doc.dump(2) << '\n';
            } else {
                for (std::size_t k = 0; k < tables.size(); ++k) {
                    if (k) out << '\n';
                    if (format == "csv") detail::print_table_csv(out, tables[k], view);
                    else detail::print_table_text(out, tables[k], view);
                }
                if (tables.size() > 1)
                    out << (format == "csv" ? "# primes agree: " : "primes agree: ")
                        << (agree ? "true" : "false") << '\n';
            }
            return agree ? exit_ok : exit_violation;
        }

        if (ferrers_cmd->parsed()) {
            bipartite_graph g = parse_graph_file(input);
            bipartite_graph h = ferrers_of(g);
            int imax = h.x_count() + h.y_count() - 2;
            std::vector<violation_record> closed;  // reuse: i, X', value in lhs
            for (int i = 0; i <= imax; ++i)
                for_each_subset_by_size(full_mask(h.x_count()), [&](mask_t xs) {
                    if (xs == 0) return;
                    std::int64_t v = ferrers_betti_zn(h, i, xs);
                    if (v != 0) closed.push_back({i, xs, v, 0});
                });
            bool mismatch = false;
            std::vector<violation_record> diffs;
            if (do_check) {
                for (std::int64_t p : primes) {
                    betti_engine eng(h, prime_field(p), caps);
                    for (int i = 0; i <= imax; ++i)
                        for_each_subset_by_size(full_mask(h.x_count()), [&](mask_t xs) {
                            if (xs == 0) return;
                            std::int64_t lhs = eng.zn(i, xs);
                            std::int64_t rhs = ferrers_betti_zn(h, i, xs);
                            if (lhs != rhs) diffs.push_back({i, xs, lhs, rhs});
                        });
                }
                mismatch = !diffs.empty();
            }
            if (format == "json") {
                ordered_json doc;
                doc["graph"] = write_graph(h);
                ordered_json arr = ordered_json::array();
                for (const auto& r : closed) {
                    ordered_json row;
                    row["i"] = r.i;
                    row["xpart"] = detail::subset_json(r.xs);
                    row["rank"] = r.lhs;
                    arr.push_back(row);
                }
                doc["zn"] = arr;
                if (do_check) {
                    doc["check"] = mismatch ? "mismatch" : "ok";
                    doc["diffs"] = detail::violations_json(diffs);
                }
                out << doc.dump(2) << '\n';
            } else if (format == "csv") {
                out << "i,xpart,rank\n";
                for (const auto& r : closed)
                    out << r.i << ',' << format_subset(r.xs) << ',' << r.lhs << '\n';
                if (do_check) out << "# check: " << (mismatch ? "mismatch" : "ok") << '\n';
            } else {
                out << write_graph(h);
                out << "zn (closed form):\n";
                for (const auto& r : closed)
                    out << "  i=" << r.i << " X'=" << format_subset(r.xs, "x") << " rank=" << r.lhs << '\n';
                if (do_check) out << "check: " << (mismatch ? "mismatch" : "ok") << '\n';
            }
            return mismatch ? exit_violation : exit_ok;
        }

        if (colex_cmd->parsed()) {
            colex_segment seg = colex_segment::initial(degree, count);
            squarefree_ideal ideal = colex_ideal(degree, count);
            betti_engine eng(ideal, prime_field(primes.front()), caps);
            betti_table t = betti_table::compute(eng);
            if (format == "json") {
                ordered_json doc;
                doc["d"] = degree;
                doc["k"] = count;
                doc["nvars"] = ideal.nvars();
                ordered_json gens = ordered_json::array();
                for (const auto& s : seg.supports) gens.push_back(s);
                doc["gens"] = gens;
                ordered_json tot = ordered_json::array();
                for (const auto& [j, r] : t.total_rows()) tot.push_back({j, r});
                doc["total"] = tot;
                out << doc.dump(2) << '\n';
            } else if (format == "csv") {
                out << t.to_csv_total();
            } else {
                out << "colex d=" << degree << " k=" << count << " nvars=" << ideal.nvars() << '\n';
                out << "gens:";
                for (const auto& s : seg.supports) out << ' ' << format_subset(indices_to_mask(s));
                out << '\n';
                out << "total (p=" << primes.front() << "):\n";
                for (const auto& [j, r] : t.total_rows()) out << "  j=" << j << " rank=" << r << '\n';
            }
            return exit_ok;
        }

        if (verify_cmd->parsed()) {
            check_options copt;
            copt.caps = caps;
            if (break_ferrers) copt.ferrers_bias = 1;
            std::vector<suite_check> checks;
            if (check_name == "all") checks = {suite_check::bound, suite_check::equality, suite_check::colex};
            else if (check_name == "bound") checks = {suite_check::bound};
            else if (check_name == "equality") checks = {suite_check::equality};
            else checks = {suite_check::colex};

            bool any_violated = false, any_skipped = false;
            ordered_json jdoc = ordered_json::array();

            if (!input.empty()) {
                bipartite_graph g = parse_graph_file(input);
                for (std::int64_t p : primes) {
                    prime_field f(p);
                    for (suite_check c : checks) {
                        ordered_json jrep;
                        jrep["check"] = to_string(c);
                        jrep["p"] = p;
                        if (c == suite_check::equality) {
                            if (g.has_isolated_x()) {
                                any_skipped = true;
                                jrep["status"] = "SKIPPED";
                                jrep["reason"] = "graph has an isolated X vertex";
                                if (format == "text")
                                    out << "equality (p=" << p << "): SKIPPED (isolated X vertex)\n";
                            } else {
                                equality_outcome eq = equality_characterization(g, f, {caps, false});
                                if (!eq.consistent) any_violated = true;
                                jrep["status"] = eq.consistent ? "HOLDS" : "VIOLATED";
                                jrep["tables_equal"] = eq.tables_equal;
                                jrep["nearly_row_nested"] = eq.nearly_row_nested;
                                if (format == "text")
                                    out << "equality (p=" << p << "): "
                                        << (eq.consistent ? "HOLDS" : "VIOLATED")
                                        << " tables_equal=" << (eq.tables_equal ? "true" : "false")
                                        << " nearly_row_nested=" << (eq.nearly_row_nested ? "true" : "false")
                                        << '\n';
                            }
                        } else {
                            verification_report rep = c == suite_check::bound
                                                          ? check_lower_bound(g, f, copt)
                                                          : check_colex_bound(g, f, copt);
                            if (verbose) err << to_string(c) << " p=" << p << ": " << rep.elapsed_ms << " ms\n";
                            if (rep.status == check_status::violated) any_violated = true;
                            if (rep.status == check_status::skipped) any_skipped = true;
                            jrep["status"] = to_string(rep.status);
                            if (!rep.skip_reason.empty()) jrep["reason"] = rep.skip_reason;
                            jrep["violations"] = detail::violations_json(rep.witnesses);
                            if (format == "text") {
                                out << to_string(c) << " (p=" << p << "): " << to_string(rep.status) << '\n';
                                if (!rep.witnesses.empty()) out << detail::violations_csv(rep.witnesses);
                            } else if (format == "csv" && !rep.witnesses.empty()) {
                                out << "# " << to_string(c) << " p=" << p << " VIOLATED\n"
                                    << detail::violations_csv(rep.witnesses);
                            }
                        }
                        jdoc.push_back(jrep);
                    }
                }
                if (format == "csv" && !any_violated)
                    out << "# all checks: " << (any_skipped ? "HOLDS (some skipped)" : "HOLDS") << '\n';
            } else {
                if (nside < 0 || mside < 0)
                    throw std::invalid_argument("verify: provide --input or both --n and --m");
                suite_options sopt;
                sopt.enumerate.no_isolated_x = no_isolated_x;
                sopt.enumerate.dedupe = dedupe;
                sopt.enumerate.max_cells = max_cells;
                sopt.check = copt;
                for (std::int64_t p : primes) {
                    for (suite_check c : checks) {
                        suite_result r = run_suite(nside, mside, c, prime_field(p), sopt);
                        if (verbose)
                            err << to_string(c) << " p=" << p << ": " << r.elapsed_ms << " ms\n";
                        if (r.violated > 0) any_violated = true;
                        ordered_json jrep;
                        jrep["check"] = to_string(c);
                        jrep["p"] = p;
                        jrep["n"] = r.n;
                        jrep["m"] = r.m;
                        jrep["graphs"] = r.graphs;
                        jrep["holds"] = r.holds;
                        jrep["violated"] = r.violated;
                        jrep["skipped"] = r.skipped;
                        ordered_json cexs = ordered_json::array();
                        for (const auto& ce : r.counterexamples) {
                            ordered_json jc;
                            jc["index"] = ce.index;
                            jc["graph"] = ce.graph_text;
                            jc["rows"] = detail::violations_json(ce.rows);
                            cexs.push_back(jc);
                        }
                        jrep["counterexamples"] = cexs;
                        jdoc.push_back(jrep);
                        if (format == "text") {
                            out << to_string(c) << " (p=" << p << ") n=" << r.n << " m=" << r.m
                                << ": graphs=" << r.graphs << " holds=" << r.holds
                                << " violated=" << r.violated << " skipped=" << r.skipped << '\n';
                            for (const auto& ce : r.counterexamples) {
                                out << "counterexample #" << ce.index << ":\n" << ce.graph_text;
                                if (!ce.rows.empty()) out << detail::violations_csv(ce.rows);
                            }
                        } else if (format == "csv") {
                            out << "check,p,n,m,graphs,holds,violated,skipped\n"
                                << to_string(c) << ',' << p << ',' << r.n << ',' << r.m << ','
                                << r.graphs << ',' << r.holds << ',' << r.violated << ','
                                << r.skipped << '\n';
                        }
                    }
                }
            }
            if (format == "json") out << jdoc.dump(2) << '\n';
            return any_violated ? exit_violation : exit_ok;
        }

        if (witness_cmd->parsed()) {
            bipartite_graph g = parse_graph_file(input);
            if (x1 < 1 || x1 > g.x_count()) throw std::invalid_argument("witness: --x1 out of range");
            prime_field f(primes.front());
            witness_options wopt;
            wopt.caps = caps;
            if (coverage > 0) {
                std::int64_t got = witness_coverage(g, x1 - 1, coverage, f, wopt);
                std::int64_t want = binomial(g.degree(x1 - 1), coverage);
                if (format == "json") {
                    ordered_json doc;
                    doc["x1"] = x1;
                    doc["t"] = coverage;
                    doc["witnesses"] = got;
                    doc["expected"] = want;
                    out << doc.dump(2) << '\n';
                } else {
                    out << "coverage t=" << coverage << ": witnesses=" << got << " expected=" << want
                        << '\n';
                }
                return got == want ? exit_ok : exit_violation;
            }
            if (y1_list.empty()) throw std::invalid_argument("witness: provide --y1 or --coverage");
            mask_t y1 = detail::parse_index_mask(y1_list, g.y_count(), "--y1");
            witness_result w = find_homology_witness(g, x1 - 1, y1, f, wopt);
            if (format == "json") {
                ordered_json doc;
                doc["x1"] = x1;
                doc["y1"] = detail::subset_json(w.y1);
                doc["yprime"] = detail::subset_json(w.yprime);
                doc["j"] = w.j;
                doc["verified"] = w.verified;
                ordered_json tr = ordered_json::array();
                for (const auto& lvl : w.trace) {
                    ordered_json jl;
                    jl["x_active"] = detail::subset_json(lvl.x_active);
                    jl["y_active"] = detail::subset_json(lvl.y_active);
                    jl["x1_class"] = detail::subset_json(lvl.x1_class);
                    ordered_json hs = ordered_json::array();
                    for (int v : lvl.hitting) hs.push_back(v + 1);
                    jl["hitting"] = hs;
                    jl["case"] = lvl.case_taken;
                    jl["dim"] = lvl.j;
                    jl["rank"] = lvl.rank;
                    tr.push_back(jl);
                }
                doc["trace"] = tr;
                out << doc.dump(2) << '\n';
            } else {
                out << "Y'={";
                bool first = true;
                for_each_bit(w.yprime, [&](int v) {
                    out << (first ? "" : ",") << (v + 1);
                    first = false;
                });
                out << "} j=" << w.j << " verified=" << (w.verified ? "true" : "false") << '\n';
            }
            return exit_ok;
        }

        if (enum_cmd->parsed()) {
            enumerate_options eopt;
            eopt.no_isolated_x = no_isolated_x;
            eopt.dedupe = dedupe;
            eopt.max_cells = max_cells;
            graph_enumerator en(nside, mside, eopt);
            long k = 0;
            while (auto g = en.next()) {
                out << "# graph " << k++ << '\n' << write_graph(*g) << '\n';
            }
            out << "# count " << k << '\n';
            return exit_ok;
        }
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const resource_limit_error& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const witness_certification_error& e) {
        err << "error: " << e.what() << "\ntrace:\n" << e.trace();
        return exit_violation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace hochster::cli

#endif  // HOCHSTER_CLI_HPP
