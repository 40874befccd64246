// Batch front-end over the tropcanon library: tropical determinants, canons,
// covers, matching, block decomposition, and differential-system analysis.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropcanon/analysis.hpp"
#include "tropcanon/canon.hpp"
#include "tropcanon/graph.hpp"
#include "tropcanon/matching.hpp"
#include "tropcanon/matrix_io.hpp"
#include "tropcanon/operator_det.hpp"
#include "tropcanon/parser.hpp"
#include "tropcanon/tropdet.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tropcanon;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

OrderMatrix load_matrix(const std::string& path) { return read_order_matrix(slurp(path)); }
BitMatrix load_bits(const std::string& path) { return read_bit_matrix(slurp(path)); }
std::vector<DiffPoly> load_system(const std::string& path) { return parse_system(slurp(path)); }

json value_json(OrderValue v) {
    if (v.is_neg_inf()) return json("-inf");
    return json(v.value());
}

json matrix_json(const OrderMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(value_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json indices_json(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto i : v) a.push_back(i + 1);
    return a;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) {
        if (!s.empty()) s += ' ';
        s += std::to_string(x);
    }
    return s;
}

std::string join_idx(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) {
        if (!s.empty()) s += ' ';
        s += std::to_string(x + 1);
    }
    return s;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(std::stoll(tok));
    return out;
}

// A transversal family given as 1-based column indices, one per row.
RowToCol parse_sigma(const std::string& s, std::size_t rows) {
    const auto vals = parse_int_list(s);
    if (vals.size() != rows) throw InvalidArgument("maxima list must name one column per row");
    RowToCol r(rows, kUnmatched);
    for (std::size_t i = 0; i < rows; ++i) {
        if (vals[i] < 1) throw InvalidArgument("column indices are 1-based");
        r[i] = vals[i] - 1;
    }
    return r;
}

std::string nabla_status(NablaReport::Status s) {
    switch (s) {
        case NablaReport::Status::nonzero_witness: return "nonzero_witness";
        case NablaReport::Status::certainly_zero: return "certainly_zero_symbolically";
        default: return "probably_zero";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Tropical determinants, minimal canons and differential-system "
                 "structural analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string file;
    std::string from_canon, maxima, lower_bounds, target;
    std::string algo = "hk";
    bool transpose = false, diagonal = false, weak = false;
    bool row_max = false, col_max = false, to_graph = false, roundtrip = false;
    std::uint64_t seed = 1;
    int trials = 8;
    std::size_t pivot = 0;
    std::int64_t dshift = 0;

    auto* c_tropdet = app.add_subcommand("tropdet", "tropical determinant of a matrix");
    c_tropdet->add_option("file", file)->required();

    auto* c_canon = app.add_subcommand("canon", "minimal canon of a matrix");
    c_canon->add_option("file", file)->required();
    c_canon->add_option("--from-canon", from_canon, "start from this canon (comma list)");
    c_canon->add_option("--maxima", maxima, "transversal maxima, 1-based columns (comma list)");
    c_canon->add_option("--from-maxima", maxima, "maxima of an unknown canon (comma list)")
        ->excludes("--from-canon");
    c_canon->add_option("--lower-bounds", lower_bounds, "constrained canon above these bounds");

    auto* c_cover = app.add_subcommand("cover", "canonical cover of a matrix");
    c_cover->add_option("file", file)->required();
    c_cover->add_flag("--transpose", transpose);

    auto* c_match = app.add_subcommand("match", "maximum bipartite matching of a 0/1 matrix");
    c_match->add_option("file", file)->required();
    c_match->add_option("--algo", algo)->check(CLI::IsMember({"naive", "hk"}));

    auto* c_koenig = app.add_subcommand("koenig", "maximum matching with a minimum line cover");
    c_koenig->add_option("file", file)->required();
    c_koenig->add_flag("--row-max", row_max);
    c_koenig->add_flag("--col-max", col_max);

    auto* c_blocks = app.add_subcommand("blocks", "block decomposition of a matrix");
    c_blocks->add_option("file", file)->required();
    c_blocks->add_flag("--diagonal", diagonal);

    auto* c_analyze = app.add_subcommand("analyze", "full structural report of a system");
    c_analyze->add_option("file", file)->required();
    c_analyze->add_flag("--weak", weak);
    c_analyze->add_option("--seed", seed);
    c_analyze->add_option("--trials", trials);

    auto* c_plan = app.add_subcommand("plan", "shortest-reduction differentiation schedule");
    c_plan->add_option("file", file)->required();
    c_plan->add_flag("--weak", weak);

    auto* c_reduce = app.add_subcommand("reduce1", "first-order reduction of a square system");
    c_reduce->add_option("file", file)->required();

    auto* c_ord = app.add_subcommand("ordering-bound",
                                     "differentiation bounds for an ordering change");
    c_ord->add_option("file", file)->required();
    c_ord->add_option("--target", target, "target leading orders f (comma list)")->required();

    auto* c_res = app.add_subcommand("resolvent", "resolvent differentiation bounds");
    c_res->add_option("file", file)->required();
    c_res->add_option("--pivot", pivot, "resolvent variable, 1-based")->required();
    c_res->add_option("--D", dshift, "extra order shift");

    auto* c_lindet = app.add_subcommand("lindet",
                                        "operator determinant of a linear constant system");
    c_lindet->add_option("file", file)->required();

    auto* c_graph = app.add_subcommand("graph", "shortest-path translation of a matrix");
    c_graph->add_option("file", file)->required();
    c_graph->add_flag("--to-graph", to_graph);
    c_graph->add_flag("--roundtrip", roundtrip);

    CLI11_PARSE(app, argc, argv);

    if (c_tropdet->parsed()) {
        const auto r = tropdet(load_matrix(file));
        if (as_json) {
            json j;
            j["value"] = value_json(r.value);
            json w = json::array();
            for (auto c : r.witness) w.push_back(c == kUnmatched ? json(nullptr) : json(c + 1));
            j["witness"] = w;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << r.value.str() << '\n';
        }
        return 0;
    }

    if (c_canon->parsed()) {
        const auto a = load_matrix(file);
        Canon lam;
        if (!from_canon.empty()) {
            if (maxima.empty())
                throw InvalidArgument("--from-canon requires --maxima");
            lam = minimize_canon(a, Canon{parse_int_list(from_canon)},
                                 parse_sigma(maxima, a.rows()));
        } else if (!maxima.empty()) {
            lam = canon_from_maxima(a, parse_sigma(maxima, a.rows()));
        } else if (!lower_bounds.empty()) {
            lam = constrained_canon(a, parse_int_list(lower_bounds));
        } else {
            lam = minimal_canon(a);
        }
        if (as_json)
            std::cout << json{{"lambda", lam.ell}}.dump() << '\n';
        else
            std::cout << "lambda: " << join_ints(lam.ell) << '\n';
        return 0;
    }

    if (c_cover->parsed()) {
        auto a = load_matrix(file);
        if (transpose) a = a.transpose();
        const auto c = jacobi_cover(a);
        if (as_json)
            std::cout << json{{"mu", c.mu}, {"nu", c.nu}}.dump() << '\n';
        else
            std::cout << "mu: " << join_ints(c.mu) << "\nnu: " << join_ints(c.nu) << '\n';
        return 0;
    }

    if (c_match->parsed()) {
        const auto b = load_bits(file);
        const auto r = algo == "naive" ? match_naive(b) : match_hk(b);
        if (as_json) {
            json m = json::array();
            for (auto c : r.matching) m.push_back(c == kUnmatched ? json(nullptr) : json(c + 1));
            std::cout << json{{"size", r.size}, {"matching", m}}.dump() << '\n';
        } else {
            std::cout << "size: " << r.size << "\nmatching:";
            for (auto c : r.matching)
                std::cout << ' ' << (c == kUnmatched ? std::string("-") : std::to_string(c + 1));
            std::cout << '\n';
        }
        return 0;
    }

    if (c_koenig->parsed()) {
        const auto b = load_bits(file);
        if (row_max || col_max) {
            const auto [rows, cols] = extremal_cover(
                b, row_max ? ExtremalMode::row_maximal : ExtremalMode::col_maximal);
            if (as_json)
                std::cout << json{{"rows", indices_json(rows)}, {"cols", indices_json(cols)}}
                                 .dump()
                          << '\n';
            else
                std::cout << "rows: " << join_idx(rows) << "\ncols: " << join_idx(cols) << '\n';
        } else {
            const auto k = koenig(b);
            if (as_json)
                std::cout << json{{"size", k.match.size},
                                  {"rows", indices_json(k.row_cover)},
                                  {"cols", indices_json(k.col_cover)}}
                                 .dump()
                          << '\n';
            else
                std::cout << "size: " << k.match.size << "\nrows: " << join_idx(k.row_cover)
                          << "\ncols: " << join_idx(k.col_cover) << '\n';
        }
        return 0;
    }

    if (c_blocks->parsed()) {
        const auto a = load_matrix(file);
        const SystemProfile p{a, BoundMode::strong, a.rows(), a.cols()};
        const auto blocks =
            block_decompose(p, diagonal ? BlockMode::diagonal : BlockMode::triangular);
        if (as_json) {
            json arr = json::array();
            for (const auto& b : blocks)
                arr.push_back({{"rows", indices_json(b.rows)}, {"cols", indices_json(b.cols)}});
            std::cout << json{{"blocks", arr}}.dump() << '\n';
        } else {
            for (const auto& b : blocks)
                std::cout << "rows " << join_idx(b.rows) << " | cols " << join_idx(b.cols)
                          << '\n';
        }
        return 0;
    }

    if (c_analyze->parsed()) {
        const auto sys = load_system(file);
        const auto p = profile(sys, weak ? BoundMode::weak : BoundMode::strong);
        const auto plan = reduction_plan(p);
        const auto tj = truncated_jacobian(sys, p);
        const auto nab = nabla_nonzero(tj, trials, kDefaultPrime, seed);
        const auto blocks = p.s == p.n ? block_decompose(p, BlockMode::triangular)
                                       : std::vector<Block>{};
        if (as_json) {
            json j;
            j["bound"] = value_json(plan.jacobi_order);
            j["mode"] = weak ? "weak" : "strong";
            j["order_matrix"] = matrix_json(p.order_matrix);
            j["lambda"] = plan.lambda.ell;
            j["alpha"] = plan.cover.alpha;
            j["beta"] = plan.cover.beta;
            json witness = json::array();
            for (const auto& [v, val] : nab.witness_point)
                witness.push_back({{"var", v.var}, {"order", v.order}, {"value", val}});
            j["nabla"] = {{"status", nabla_status(nab.status)},
                          {"witness_point", witness},
                          {"prime", nab.prime},
                          {"trials", nab.trials}};
            json barr = json::array();
            for (const auto& b : blocks)
                barr.push_back({{"rows", indices_json(b.rows)}, {"cols", indices_json(b.cols)}});
            j["blocks"] = barr;
            json stages = json::array();
            for (const auto& st : plan.stages) stages.push_back(indices_json(st));
            j["plan"] = {{"stages", stages}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "bound: " << plan.jacobi_order.str() << '\n';
            std::cout << "mode: " << (weak ? "weak" : "strong") << '\n';
            std::cout << "order matrix:\n";
            write_order_matrix(std::cout, p.order_matrix);
            std::cout << "lambda: " << join_ints(plan.lambda.ell) << '\n';
            std::cout << "alpha: " << join_ints(plan.cover.alpha) << '\n';
            std::cout << "beta: " << join_ints(plan.cover.beta) << '\n';
            std::cout << "nabla: " << nabla_status(nab.status) << " (prime " << nab.prime
                      << ", trials " << nab.trials << ")\n";
            for (const auto& b : blocks)
                std::cout << "block: rows " << join_idx(b.rows) << " | cols "
                          << join_idx(b.cols) << '\n';
            for (std::size_t k = 0; k < plan.stages.size(); ++k)
                std::cout << "stage " << k << ": " << join_idx(plan.stages[k]) << '\n';
        }
        return 0;
    }

    if (c_plan->parsed()) {
        const auto p =
            profile(load_system(file), weak ? BoundMode::weak : BoundMode::strong);
        const auto plan = reduction_plan(p);
        if (as_json) {
            json stages = json::array();
            for (const auto& st : plan.stages) stages.push_back(indices_json(st));
            std::cout << json{{"bound", value_json(plan.jacobi_order)},
                              {"lambda", plan.lambda.ell},
                              {"alpha", plan.cover.alpha},
                              {"beta", plan.cover.beta},
                              {"stages", stages}}
                             .dump()
                      << '\n';
        } else {
            std::cout << "bound: " << plan.jacobi_order.str() << '\n';
            std::cout << "lambda: " << join_ints(plan.lambda.ell) << '\n';
            for (std::size_t k = 0; k < plan.stages.size(); ++k)
                std::cout << "stage " << k << ": " << join_idx(plan.stages[k]) << '\n';
        }
        return 0;
    }

    if (c_reduce->parsed()) {
        const auto r = first_order_reduce(load_system(file));
        if (as_json) {
            json vars = json::array();
            for (const auto& [j, k] : r.var_map) vars.push_back({{"var", j}, {"order", k}});
            std::cout << json{{"matrix", matrix_json(r.matrix)}, {"columns", vars}}.dump()
                      << '\n';
        } else {
            std::cout << "columns:";
            for (const auto& [j, k] : r.var_map) std::cout << " u" << j << "," << k;
            std::cout << '\n';
            write_order_matrix(std::cout, r.matrix);
        }
        return 0;
    }

    if (c_ord->parsed()) {
        const auto p = profile(load_system(file), BoundMode::strong);
        std::vector<std::int64_t> e(p.n);
        for (std::size_t i = 0; i < p.n; ++i) e[i] = p.order_matrix.at(i, i).value();
        const auto lam = ordering_change_bound(p, e, parse_int_list(target));
        if (as_json)
            std::cout << json{{"lambda", lam.ell}}.dump() << '\n';
        else
            std::cout << "lambda: " << join_ints(lam.ell) << '\n';
        return 0;
    }

    if (c_res->parsed()) {
        const auto p = profile(load_system(file), BoundMode::strong);
        if (pivot < 1) throw InvalidArgument("pivot is 1-based");
        const auto rb = resolvent_bounds(p, pivot - 1, dshift);
        if (as_json) {
            json minors = json::array();
            for (auto v : rb.per_row) minors.push_back(value_json(v));
            std::cout << json{{"pivot", rb.pivot + 1},
                              {"ell", rb.ell.ell},
                              {"minors", minors},
                              {"reachable", indices_json(rb.reachable)},
                              {"unreachable", indices_json(rb.unreachable)},
                              {"unreachable_tropdet", value_json(rb.unreachable_tropdet)}}
                             .dump()
                      << '\n';
        } else {
            std::cout << "ell: " << join_ints(rb.ell.ell) << '\n';
            std::cout << "minors:";
            for (auto v : rb.per_row) std::cout << ' ' << v.str();
            std::cout << '\n';
            std::cout << "reachable: " << join_idx(rb.reachable) << '\n';
            std::cout << "unreachable: " << join_idx(rb.unreachable) << '\n';
            std::cout << "unreachable tropdet: " << rb.unreachable_tropdet.str() << '\n';
        }
        return 0;
    }

    if (c_lindet->parsed()) {
        const auto det = operator_determinant(load_system(file));
        if (as_json)
            std::cout << json{{"degree", value_json(det.degree())}, {"det", det.str()}}.dump()
                      << '\n';
        else
            std::cout << "degree: " << det.degree().str() << "\ndet: " << det.str() << '\n';
        return 0;
    }

    if (c_graph->parsed()) {
        const auto a = load_matrix(file);
        if (roundtrip) {
            const bool ok = graph_roundtrip_check(a);
            std::cout << (ok ? "true" : "false") << '\n';
            return ok ? 0 : 2;
        }
        if (!to_graph) throw InvalidArgument("choose --to-graph or --roundtrip");
        write_graph(std::cout, matrix_to_graph(a));
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tropcanon::InfeasibleCanon& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tropcanon::NotMaximalFamily& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tropcanon::NoSuchCanon& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
