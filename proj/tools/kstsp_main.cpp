#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kstsp/compat.hpp"
#include "kstsp/families.hpp"
#include "kstsp/io.hpp"
#include "kstsp/model.hpp"
#include "kstsp/solve.hpp"
#include "kstsp/stackdp.hpp"

namespace {

using namespace kstsp;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

Family parse_family(const std::string& s) {
    if (s == "I") return Family::I;
    if (s == "J") return Family::J;
    if (s == "H") return Family::H;
    throw std::invalid_argument("unknown family: " + s + " (expected I, J or H)");
}

int parse_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not an integer: " + s);
    }
    if (pos != s.size())
        throw std::invalid_argument(std::string(what) + ": not an integer: " + s);
    return v;
}

// "6", "4..8" and comma lists of either.
std::vector<int> parse_n_range(const std::string& s) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string part =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const std::size_t dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(part, "--n"));
        } else {
            const int a = parse_int(part.substr(0, dots), "--n");
            const int b = parse_int(part.substr(dots + 2), "--n");
            if (a > b) throw std::invalid_argument("--n: empty range " + part);
            for (int v = a; v <= b; ++v) out.push_back(v);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("--n: empty range");
    return out;
}

Alpha parse_alpha(const std::string& s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("--alpha: expected num/den, got " + s);
    Alpha a;
    a.num = parse_int(s.substr(0, slash), "--alpha");
    a.den = parse_int(s.substr(slash + 1), "--alpha");
    return a;  // range checked by aggregate_distance
}

StackingOrder read_stacks_file(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("stacks: ") + e.what());
    }
    if (!j.is_object() || !j.contains("stacks") || !j["stacks"].is_array())
        throw std::invalid_argument("stacks: document needs a stacks array");
    StackingOrder p;
    for (const auto& stack : j["stacks"]) {
        if (!stack.is_array())
            throw std::invalid_argument("stacks: each stack must be an array of item ids");
        std::vector<int> s;
        for (const auto& cell : stack) {
            if (!cell.is_number_integer())
                throw std::invalid_argument("stacks: items must be integers");
            s.push_back(cell.get<int>());
        }
        p.stacks.push_back(std::move(s));
    }
    return p;
}

const char* feas(bool b) { return b ? "FEASIBLE" : "INFEASIBLE"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-stack pickup/delivery tour toolkit"};
    app.require_subcommand(1);

    std::string family_str, n_range, instance_path, solution_path, tours_path, stacks_path;
    std::string method, side = "pickup", alpha_str = "1/2", out_path;
    int n = 0, k = 2;
    Cost unit = 1000, eps = 1, lo = 1, hi = 100, alpha_scale = 1;
    std::int64_t cap = 0;
    std::uint64_t seed = 1;
    bool fix_tour = false;

    CLI::App* gen = app.add_subcommand("generate", "Write an instance (family or random)");
    gen->add_option("--family", family_str, "I, J or H; omit for a random instance");
    gen->add_option("--n", n, "item count")->required();
    gen->add_option("--k", k, "stack count (random instances; families fix k=2)");
    gen->add_option("--unit", unit, "scale of every family distance");
    gen->add_option("--eps", eps, "scaled-down epsilon, 0 <= eps < unit");
    gen->add_option("--lo", lo, "random distance lower bound");
    gen->add_option("--hi", hi, "random distance upper bound");
    gen->add_option("--seed", seed, "random generator seed");
    gen->add_option("-o,--output", out_path, "output path (default stdout)");

    CLI::App* ct = app.add_subcommand("check-triple", "Feasibility of (t1, t2, stacks)");
    ct->add_option("--instance", instance_path)->required();
    ct->add_option("--solution", solution_path)->required();

    CLI::App* cp = app.add_subcommand("check-pair", "Least stack count for a tour pair");
    cp->add_option("--instance", instance_path)->required();
    cp->add_option("--tours", tours_path, "JSON with t1 and t2 (a solution file works)")
        ->required();

    CLI::App* sv = app.add_subcommand("solve", "Produce a solution");
    sv->add_option("--instance", instance_path)->required();
    sv->add_option("--method", method, "dp-stacks|oracle-pairs|oracle-stacks|tws|twd")
        ->required();
    sv->add_option("--stacks", stacks_path, "stacking for dp-stacks (JSON stacks array)");
    sv->add_option("--side", side, "tws side: pickup|delivery");
    sv->add_flag("--fix-tour", fix_tour, "tws: fix the tour to (1,2,...,n)");
    sv->add_option("--alpha", alpha_str, "twd weight num/den");
    sv->add_option("--alpha-scale", alpha_scale, "twd integer scale");
    sv->add_option("--cap", cap, "method budget override");
    sv->add_option("-o,--output", out_path, "solution output path");

    CLI::App* bd = app.add_subcommand("bounds", "Exact bound chain on one instance");
    bd->add_option("--instance", instance_path)->required();
    bd->add_option("--cap", cap, "pair-scan size limit");

    CLI::App* ex = app.add_subcommand("experiment", "Re-verify family claims, emit CSV");
    ex->add_option("--family", family_str)->required();
    ex->add_option("--n", n_range, "sizes: 6, 4..8 or 4,6,8")->required();
    ex->add_option("--unit", unit, "scale of every family distance");
    ex->add_option("--eps", eps, "scaled-down epsilon");
    ex->add_option("-o,--output", out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            const Instance inst =
                family_str.empty()
                    ? random_instance(n, k, lo, hi, seed)
                    : family_instance({parse_family(family_str), n, unit, eps});
            emit(serialize_instance(inst), out_path);
            return 0;
        }

        if (ct->parsed()) {
            const Instance inst = parse_instance(read_file(instance_path));
            const Solution sol = parse_solution(read_file(solution_path));
            if (!is_permutation_tour(sol.t1, inst.n) || !is_permutation_tour(sol.t2, inst.n))
                throw std::invalid_argument("solution tours do not cover 1.." +
                                            std::to_string(inst.n));
            int nonempty = 0;
            for (const auto& s : sol.stacking.stacks) nonempty += !s.empty();
            const bool order = check_triple_feasible(sol.t1, sol.t2, sol.stacking);
            const bool replay = simulate_triple(sol.t1, sol.t2, sol.stacking);
            const bool ok = order && replay && nonempty <= inst.k;
            std::cout << "order-check=" << feas(order) << "\n"
                      << "replay-check=" << feas(replay) << "\n"
                      << "verdict=" << feas(ok) << "\n";
            return ok ? 0 : 1;
        }

        if (cp->parsed()) {
            const Instance inst = parse_instance(read_file(instance_path));
            const auto [t1, t2] = parse_tour_pair(read_file(tours_path));
            if (!is_permutation_tour(t1, inst.n) || !is_permutation_tour(t2, inst.n))
                throw std::invalid_argument("tours do not cover 1.." + std::to_string(inst.n));
            std::cout << "chi=" << min_coloring(build_conflict_graph(t1, t2)).chi << "\n";
            const auto stacks = stacking_from_tours(t1, t2, inst.k);
            if (!stacks) {
                std::cout << "verdict=INFEASIBLE\n";
                return 1;
            }
            std::cout << "verdict=FEASIBLE\n"
                      << "stacks=" << nlohmann::json(stacks->stacks).dump() << "\n";
            return 0;
        }

        if (sv->parsed()) {
            const Instance inst = parse_instance(read_file(instance_path));
            Solution sol;
            if (method == "dp-stacks") {
                if (stacks_path.empty())
                    throw std::invalid_argument("dp-stacks needs --stacks");
                sol = optimal_tours_given_stacks(inst, read_stacks_file(stacks_path));
            } else if (method == "oracle-pairs") {
                sol = exact_oracle_pairs(inst, Objective::Min,
                                         cap > 0 ? static_cast<int>(cap) : 7);
            } else if (method == "oracle-stacks") {
                sol = exact_oracle_stacks(inst, cap > 0 ? cap : 1'000'000);
            } else if (method == "tws") {
                if (side != "pickup" && side != "delivery")
                    throw std::invalid_argument("--side must be pickup or delivery");
                std::optional<Tour> fixed;
                if (fix_tour) fixed = canonical_tour(inst.n);
                sol = tws(inst,
                          side == "delivery" ? TourSide::Delivery : TourSide::Pickup, fixed,
                          16, cap > 0 ? cap : std::int64_t(1) << 20);
            } else if (method == "twd") {
                sol = twd(inst, parse_alpha(alpha_str), alpha_scale,
                          cap > 0 ? static_cast<int>(cap) : 16);
            } else {
                throw std::invalid_argument("unknown method: " + method);
            }
            std::cout << "value=" << sol.value << "\n";
            if (!out_path.empty()) write_file(out_path, serialize_solution(sol));
            return 0;
        }

        if (bd->parsed()) {
            const Instance inst = parse_instance(read_file(instance_path));
            const BoundsReport r =
                bounds_report(inst, cap > 0 ? static_cast<int>(cap) : 7);
            std::cout << "opt_tsp1=" << r.opt_tsp1 << "\n"
                      << "opt_tsp2=" << r.opt_tsp2 << "\n"
                      << "wor_tsp1=" << r.wor_tsp1 << "\n"
                      << "wor_tsp2=" << r.wor_tsp2 << "\n"
                      << "opt_kstsp=" << r.opt_kstsp << "\n"
                      << "wor_kstsp=" << r.wor_kstsp << "\n"
                      << "chain_ok=" << (r.chain_ok ? "true" : "false") << "\n";
            return 0;
        }

        // experiment
        const auto rows =
            verify_family_claims(parse_family(family_str), parse_n_range(n_range), unit, eps);
        emit(claims_csv(rows), out_path);
        for (const ClaimRow& r : rows)
            if (r.status == "MISMATCH") return 1;
        return 0;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
