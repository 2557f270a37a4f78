#include "kstsp/io.hpp"

#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kstsp {

namespace {

using nlohmann::json;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

std::vector<int> read_int_array(const json& j, const std::string& what) {
    require(j.is_array(), what + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& cell : j) {
        require(cell.is_number_integer(), what + " entries must be integers");
        out.push_back(cell.get<int>());
    }
    return out;
}

DistanceMatrix read_matrix(const json& j, int n, const std::string& what) {
    require(j.is_array() && static_cast<int>(j.size()) == n + 1,
            what + " must be an (n+1)x(n+1) array");
    DistanceMatrix d(n + 1, std::vector<Cost>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        const json& row = j[a];
        require(row.is_array() && static_cast<int>(row.size()) == n + 1,
                what + " must be an (n+1)x(n+1) array");
        for (int b = 0; b <= n; ++b) {
            require(row[b].is_number_integer(), what + " entries must be integers");
            d[a][b] = row[b].get<Cost>();
            require(d[a][b] >= 0, what + " entries must be nonnegative");
        }
    }
    return d;
}

// Uniform draw from [0, range) off the raw 64-bit stream; rejection keeps it
// unbiased and identical on every platform.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % range;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % range;
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    const json j = parse_json(text, "instance");
    require(j.is_object() && j.contains("n") && j.contains("k") && j.contains("d1") &&
                j.contains("d2"),
            "instance: document needs n, k, d1 and d2");
    require(j["n"].is_number_integer() && j["k"].is_number_integer(),
            "instance: n and k must be integers");
    Instance inst;
    inst.n = j["n"].get<int>();
    inst.k = j["k"].get<int>();
    require(inst.n >= 1 && inst.k >= 1, "instance: n and k must be positive");
    inst.d1 = read_matrix(j["d1"], inst.n, "instance: d1");
    inst.d2 = read_matrix(j["d2"], inst.n, "instance: d2");
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    json j;
    j["d1"] = inst.d1;
    j["d2"] = inst.d2;
    j["k"] = inst.k;
    j["n"] = inst.n;
    return j.dump() + "\n";
}

Solution parse_solution(const std::string& text) {
    const json j = parse_json(text, "solution");
    require(j.is_object() && j.contains("stacks") && j.contains("t1") && j.contains("t2") &&
                j.contains("value"),
            "solution: document needs stacks, t1, t2 and value");
    Solution sol;
    sol.t1.seq = read_int_array(j["t1"], "solution: t1");
    sol.t2.seq = read_int_array(j["t2"], "solution: t2");
    require(j["stacks"].is_array(), "solution: stacks must be an array of arrays");
    for (const json& stack : j["stacks"])
        sol.stacking.stacks.push_back(read_int_array(stack, "solution: stacks"));
    require(j["value"].is_number_integer(), "solution: value must be an integer");
    sol.value = j["value"].get<Cost>();
    return sol;
}

std::string serialize_solution(const Solution& sol) {
    json j;
    j["stacks"] = sol.stacking.stacks;
    j["t1"] = sol.t1.seq;
    j["t2"] = sol.t2.seq;
    j["value"] = sol.value;
    return j.dump() + "\n";
}

std::pair<Tour, Tour> parse_tour_pair(const std::string& text) {
    const json j = parse_json(text, "tours");
    require(j.is_object() && j.contains("t1") && j.contains("t2"),
            "tours: document needs t1 and t2");
    Tour t1, t2;
    t1.seq = read_int_array(j["t1"], "tours: t1");
    t2.seq = read_int_array(j["t2"], "tours: t2");
    return {std::move(t1), std::move(t2)};
}

std::string claims_csv(const std::vector<ClaimRow>& rows) {
    std::string out = "family,n,claim_id,paper_value,computed_value,status\n";
    for (const ClaimRow& r : rows) {
        out += r.family;
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += r.claim_id;
        out += ',';
        out += r.claimed;
        out += ',';
        out += r.computed;
        out += ',';
        out += r.status;
        out += '\n';
    }
    return out;
}

Instance random_instance(int n, int k, Cost lo, Cost hi, std::uint64_t seed) {
    if (n < 1 || k < 1) throw std::invalid_argument("random instance: n and k must be positive");
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("random instance: need 0 <= lo <= hi");
    std::mt19937_64 rng(seed);
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;

    Instance inst;
    inst.n = n;
    inst.k = k;
    for (DistanceMatrix* d : {&inst.d1, &inst.d2}) {
        d->assign(n + 1, std::vector<Cost>(n + 1, 0));
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b)
                if (a != b) (*d)[a][b] = lo + static_cast<Cost>(bounded(rng, range));
    }
    return inst;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace kstsp
