#include "hyperdelta/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "hyperdelta/expr.hpp"
#include <json.hpp>

namespace hyperdelta {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hd_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

namespace {
json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw hd_error(std::string("invalid JSON: ") + e.what());
    }
}
}  // namespace

SystemDocument parse_system(const std::string& json_text) {
    json doc = parse_json(json_text);
    SystemDocument out;
    if (!doc.contains("n") || !doc.contains("matrix")) throw hd_error("system document needs 'n' and 'matrix'");
    out.n = doc["n"].get<int>();
    if (out.n <= 0) throw hd_error("system dimension must be positive");
    const auto& rows = doc["matrix"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != out.n) throw hd_error("matrix row count mismatch");
    out.matrix = MatRF(out.n, out.n);
    for (int i = 0; i < out.n; ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != out.n) throw hd_error("matrix column count mismatch");
        for (int j = 0; j < out.n; ++j) out.matrix(i, j) = parse_expr(row[static_cast<size_t>(j)].get<std::string>());
    }
    if (doc.contains("name")) out.name = doc["name"].get<std::string>();
    // reject singular systems at load time
    mat_inverse(out.matrix);
    return out;
}

SystemDocument load_system(const std::string& path) { return parse_system(slurp(path)); }

OperatorDocument parse_operator(const std::string& json_text) {
    json doc = parse_json(json_text);
    OperatorDocument out;
    if (!doc.contains("coeffs")) throw hd_error("operator document needs 'coeffs'");
    const auto& cs = doc["coeffs"];
    if (!cs.is_array() || cs.size() < 2) throw hd_error("operator needs at least two coefficients");
    std::vector<RatFunc> coeffs;
    coeffs.reserve(cs.size());
    for (const auto& c : cs) coeffs.push_back(parse_expr(c.get<std::string>()));
    if (coeffs.back().is_zero()) throw hd_error("leading coefficient a_n must be nonzero");
    out.op = OrePoly(std::move(coeffs));
    if (doc.contains("name")) out.name = doc["name"].get<std::string>();
    return out;
}

OperatorDocument load_operator(const std::string& path) { return parse_operator(slurp(path)); }

std::string solutions_to_json(const std::vector<HyperSol>& sols, const std::set<GenExp>& genexps,
                              const std::vector<Warning>& warnings) {
    json out;
    out["solutions"] = json::array();
    for (const auto& s : sols) {
        json e;
        e["c"] = rat_to_string(s.lambda.c);
        e["A"] = to_string(s.lambda.a);
        e["B"] = to_string(s.lambda.b);
        e["P"] = json::array();
        for (const auto& p : s.p) e["P"].push_back(to_string(p));
        out["solutions"].push_back(std::move(e));
    }
    out["genexps"] = json::array();
    for (const auto& g : genexps) {
        json e;
        e["s"] = g.s;
        e["c"] = rat_to_string(g.c);
        e["d"] = rat_to_string(g.d);
        out["genexps"].push_back(std::move(e));
    }
    out["warnings"] = json::array();
    for (const auto& w : warnings) out["warnings"].push_back(w.code + ": " + w.detail);
    return out.dump(2);
}

std::string factors_to_json(const FactorSearch& fs) {
    json out;
    out["factors"] = json::array();
    for (const auto& f : fs.factors) {
        json e;
        e["coeffs"] = json::array();
        for (int i = 0; i <= f.order(); ++i) e["coeffs"].push_back(to_string(f.coeff(i)));
        out["factors"].push_back(std::move(e));
    }
    out["warnings"] = json::array();
    for (const auto& w : fs.warnings) out["warnings"].push_back(w.code + ": " + w.detail);
    return out.dump(2);
}

std::string to_pretty(const HyperSol& sol) {
    std::ostringstream ss;
    ss << "hyp(" << rat_to_string(sol.lambda.c) << " * (" << to_string(sol.lambda.a) << ")/("
       << to_string(sol.lambda.b) << ")) * [";
    for (size_t i = 0; i < sol.p.size(); ++i) {
        if (i) ss << ", ";
        ss << to_string(sol.p[i]);
    }
    ss << "]";
    return ss.str();
}

std::string to_pretty(const GenExp& g) {
    std::ostringstream ss;
    ss << "(s=" << g.s << ", c=" << rat_to_string(g.c) << ", d=" << rat_to_string(g.d) << ")";
    return ss.str();
}

std::string to_pretty(const OrePoly& op) {
    if (op.is_zero()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (int i = op.order(); i >= 0; --i) {
        const RatFunc c = op.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                ss << " - ";
                cs = cs.substr(1);
            } else {
                ss << " + ";
            }
        }
        first = false;
        if (i == 0) {
            ss << cs;
            continue;
        }
        std::string tau = i == 1 ? "tau" : "tau^" + std::to_string(i);
        if (cs == "1") {
            ss << tau;
        } else if (cs == "-1") {
            ss << "-" << tau;
        } else {
            const bool atom = cs.find('+') == std::string::npos && cs.find('-', 1) == std::string::npos;
            ss << (atom ? cs : "(" + cs + ")") << "*" << tau;
        }
    }
    return ss.str();
}

}  // namespace hyperdelta
