#pragma once

#include <chrono>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qball/tensor_op.hpp"

namespace qball {

inline const char* factor_kind_name(Factor::Kind k) {
    switch (k) {
        case Factor::Kind::I: return "I";
        case Factor::Kind::S: return "S";
        case Factor::Kind::Sstar: return "S*";
        case Factor::Kind::Cq: return "Cq";
        case Factor::Kind::Dq: return "Dq";
        case Factor::Kind::CqS: return "CqS";
        case Factor::Kind::SstarCq: return "S*Cq";
        case Factor::Kind::General: return "general";
    }
    return "general";
}

inline nlohmann::json tensor_op_to_json(const TensorOp& op) {
    nlohmann::json j;
    j["slots"] = op.slots();
    j["dim"] = op.N();
    j["terms"] = nlohmann::json::array();
    for (const TensorTerm& t : op.terms()) {
        nlohmann::json jt;
        jt["scalar"] = {t.scalar.real(), t.scalar.imag()};
        jt["factors"] = nlohmann::json::array();
        for (const Factor& f : t.factors)
            jt["factors"].push_back({{"kind", factor_kind_name(f.kind)}, {"offset", f.offset}, {"w", f.w}});
        j["terms"].push_back(std::move(jt));
    }
    return j;
}

inline nlohmann::json tensor_vec_to_json(const TensorVec& v) {
    nlohmann::json j;
    j["slots"] = v.slots;
    j["dim"] = v.N;
    nlohmann::json amps = nlohmann::json::array();
    for (const Cx& x : v.a) amps.push_back({x.real(), x.imag()});
    j["amplitudes"] = std::move(amps);
    return j;
}

struct CheckReport {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    int64_t ms = 0;
};

struct RunReport {
    std::string suite;
    int n = 0;
    double q = 0.0;
    int N = 0;
    uint64_t seed = 0;
    std::vector<CheckReport> checks;

    bool pass() const {
        for (const CheckReport& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, double residual, double tol, int64_t ms) {
        checks.push_back({std::move(name), residual, tol, residual <= tol, ms});
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["config"] = {{"n", n}, {"q", q}, {"N", N}, {"seed", seed}};
        j["checks"] = nlohmann::json::array();
        for (const CheckReport& c : checks)
            j["checks"].push_back({{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}, {"ms", c.ms}});
        j["pass"] = pass();
        return j;
    }

    void write(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("RunReport::write: cannot open " + path);
        out << to_json().dump(2) << "\n";
    }
};

// Wall-clock milliseconds of a callable returning the residual.
template <typename F>
inline void timed_check(RunReport& report, const std::string& name, double tol, F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    const double residual = fn();
    const auto t1 = std::chrono::steady_clock::now();
    report.add(name, residual, tol, std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
}

}  // namespace qball
