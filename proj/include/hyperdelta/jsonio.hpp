#pragma once

#include <string>

#include "solver.hpp"
#include "wedge.hpp"

namespace hyperdelta {

struct SystemDocument {
    int n = 0;
    MatRF matrix;
    std::string name;
};

struct OperatorDocument {
    OrePoly op;
    std::string name;
};

// {"n": int, "matrix": [[expr, ...], ...], "name": optional}
SystemDocument load_system(const std::string& path);
SystemDocument parse_system(const std::string& json_text);

// {"coeffs": [expr a0, ..., expr an], "name": optional}
OperatorDocument load_operator(const std::string& path);
OperatorDocument parse_operator(const std::string& json_text);

std::string solutions_to_json(const std::vector<HyperSol>& sols, const std::set<GenExp>& genexps,
                              const std::vector<Warning>& warnings);
std::string factors_to_json(const FactorSearch& fs);

std::string to_pretty(const HyperSol& sol);
std::string to_pretty(const GenExp& g);
std::string to_pretty(const OrePoly& op);

}  // namespace hyperdelta
