#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qball/suites.hpp"

namespace {

std::vector<std::string> split_suites(const std::string& arg) {
    if (arg == "all") return qball::suite_names();
    std::vector<std::string> out;
    std::string cur;
    for (char c : arg) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification suites for the quantized matrix-ball function algebras"};

    std::string suite_arg;
    qball::SuiteConfig cfg;
    std::vector<std::string> tol_args;

    std::string names;
    for (const std::string& s : qball::suite_names()) names += (names.empty() ? "" : ", ") + s;
    app.add_option("suite", suite_arg, "Suite name, comma-separated list, or 'all'. Suites: " + names)->required();
    app.add_option("--n", cfg.n, "Matrix size")->capture_default_str();
    app.add_option("--q", cfg.q, "Deformation parameter in (0,1)")->capture_default_str();
    app.add_option("--trunc", cfg.N, "Fock truncation level")->capture_default_str();
    app.add_option("--degree", cfg.degree, "Degree bound (doubles as dilation step count)")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
    app.add_option("--samples", cfg.samples, "Sample count for randomized checks")->capture_default_str();
    app.add_option("--out", cfg.out_path, "Write the JSON report to this path");
    app.add_option("--tol", tol_args, "Tolerance override key=value; repeatable");

    CLI11_PARSE(app, argc, argv);

    for (const std::string& kv : tol_args) {
        const size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
            std::fprintf(stderr, "error: --tol expects key=value, got '%s'\n", kv.c_str());
            return 2;
        }
        try {
            cfg.tol[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            std::fprintf(stderr, "error: --tol value in '%s' is not a number\n", kv.c_str());
            return 2;
        }
    }

    const std::vector<std::string> selected = split_suites(suite_arg);
    if (selected.empty()) {
        std::fprintf(stderr, "error: no suite selected\n");
        return 2;
    }
    for (const std::string& s : selected) {
        bool known = false;
        for (const std::string& k : qball::suite_names()) known = known || k == s;
        if (!known) {
            std::fprintf(stderr, "error: unknown suite '%s'\n", s.c_str());
            return 2;
        }
    }

    bool all_pass = true;
    nlohmann::json combined = nlohmann::json::array();
    for (size_t i = 0; i < selected.size(); ++i) {
        qball::SuiteConfig one = cfg;
        one.suite = selected[i];
        one.out_path.clear();
        qball::RunReport rep;
        try {
            rep = qball::run_suite(one);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: suite '%s': %s\n", selected[i].c_str(), e.what());
            return 2;
        }
        for (const qball::CheckReport& c : rep.checks) {
            std::printf("[%s] %s/%s residual=%.3e tol=%.3e (%lld ms)\n", c.pass ? "PASS" : "FAIL", rep.suite.c_str(),
                        c.name.c_str(), c.residual, c.tol, static_cast<long long>(c.ms));
        }
        all_pass = all_pass && rep.pass();
        combined.push_back(rep.to_json());
    }

    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::fprintf(stderr, "error: cannot open '%s'\n", cfg.out_path.c_str());
            return 2;
        }
        if (combined.size() == 1)
            out << combined[0].dump(2) << "\n";
        else
            out << combined.dump(2) << "\n";
    }

    std::printf("%s\n", all_pass ? "ALL PASS" : "FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
