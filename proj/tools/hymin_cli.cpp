#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hymin.h"

namespace {

using nlohmann::json;

std::string read_input(const std::string& file) {
    if (file.empty() || file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct FormHandle {
    hymin_form* f = nullptr;
    ~FormHandle() { hymin_form_free(f); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { hymin_string_free(s); }
};

int fail(int status) {
    std::cerr << "error: " << hymin_last_error() << "\n";
    return status;
}

int emit(const std::string& command, const std::string& payload_json, bool as_json,
         uint64_t seed) {
    if (as_json) {
        json env;
        env["command"] = command;
        env["seed"] = seed;
        env["result"] = json::parse(payload_json);
        std::cout << env.dump(2) << "\n";
        return 0;
    }
    json r = json::parse(payload_json);
    if (r.contains("form")) std::cout << r["form"].get<std::string>() << "\n";
    if (r.contains("success")) std::cout << "success: " << (r["success"].get<bool>() ? "yes" : "no") << "\n";
    if (r.contains("e")) std::cout << "e: " << r["e"] << "\n";
    if (r.contains("matrix")) {
        std::cout << "matrix:\n";
        for (const auto& row : r["matrix"]) {
            std::cout << " ";
            for (const auto& x : row) std::cout << " " << x.get<std::string>();
            std::cout << "\n";
        }
    }
    if (r.contains("scale_exp") && r["scale_exp"].is_object()) {
        std::cout << "scale:";
        for (auto& [p, e] : r["scale_exp"].items()) std::cout << " " << p << "^" << e;
        std::cout << "\n";
    }
    if (r.contains("primes_touched")) {
        std::cout << "primes touched:";
        for (const auto& p : r["primes_touched"]) std::cout << " " << p.get<std::string>();
        std::cout << "\n";
    }
    if (r.contains("primes")) {
        for (const auto& p : r["primes"]) std::cout << p.get<std::string>() << "\n";
    }
    if (r.contains("I1")) {
        std::cout << "I1 = " << r["I1"]["value"].get<std::string>() << "  [" << r["I1"]["tag"].get<std::string>() << "]\n";
        std::cout << "I2 = " << r["I2"]["value"].get<std::string>() << "  [" << r["I2"]["tag"].get<std::string>() << "]\n";
        std::cout << "gcd = " << r["gcd"].get<std::string>() << "\n";
    }
    if (r.contains("c4")) {
        std::cout << "c4 = " << r["c4"]["value"].get<std::string>() << "  [covariant " << r["covariant_tag"].get<std::string>() << "]\n";
        std::cout << "c6 = " << r["c6"]["value"].get<std::string>() << "\n";
        std::cout << "gcd = " << r["gcd"].get<std::string>() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimization and reduction of integral hypersurface models"};
    app.require_subcommand(1);

    bool as_json = false;
    uint64_t seed = hymin_get_seed();
    int threads = 1;
    app.add_flag("--json", as_json, "machine-readable JSON envelope");
    app.add_option("--seed", seed, "seed for randomized steps");
    app.add_option("--threads", threads, "internal parallelism (weight-set computation)");

    // weights
    auto* weights = app.add_subcommand("weights", "minimal complete set of weight vectors");
    weights->fallthrough();
    int wn = 2, wd = 3;
    bool raw = false;
    weights->add_option("--n", wn, "dimension n (forms in n+1 variables)")->required();
    weights->add_option("--d", wd, "degree")->required();
    weights->add_flag("--raw", raw, "emit the n=2 covering set without minimization");

    auto add_form_cmd = [&](const char* name, const char* desc, std::string& file) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->fallthrough();
        cmd->add_option("--file", file, "input file with one form (default: stdin)");
        return cmd;
    };

    std::string min_file, p_str = "2", strategy = "dfs";
    auto* minimize = add_form_cmd("minimize", "minimize a form at one prime", min_file);
    minimize->add_option("--p", p_str, "prime")->required();
    minimize->add_option("--strategy", strategy, "tree search order: dfs|bfs|best");

    std::string glob_file, primes_csv;
    auto* glob = add_form_cmd("minimize-global", "minimize at all candidate primes", glob_file);
    glob->add_option("--primes", primes_csv, "comma-separated prime list (required for quaternary)");

    std::string det_file;
    add_form_cmd("detect-primes", "candidate non-minimal primes", det_file);

    std::string red_file;
    add_form_cmd("reduce", "ad-hoc unimodular coefficient reduction", red_file);

    std::string inv_file;
    add_form_cmd("invariants", "transvectant invariants of a ternary form", inv_file);

    std::string ora_file, ora_p = "2";
    unsigned long max_lattices = 1000000;
    auto* oracle = add_form_cmd("oracle-minimize", "exhaustive lattice-enumeration minimizer", ora_file);
    oracle->add_option("--p", ora_p, "prime")->required();
    oracle->add_option("--max-lattices", max_lattices, "enumeration cap per weight vector");

    CLI11_PARSE(app, argc, argv);
    hymin_set_seed(seed);
    hymin_set_threads(threads);

    try {
        if (weights->parsed()) {
            StringHandle out;
            int rc = hymin_weights(wn, wd, raw ? 1 : 0, &out.s);
            if (rc != HYMIN_OK) return fail(rc);
            if (as_json) {
                json env;
                env["command"] = "weights";
                env["seed"] = seed;
                json arr = json::array();
                std::istringstream ss(out.s);
                std::string line;
                while (std::getline(ss, line))
                    if (!line.empty()) arr.push_back(line);
                env["result"] = {{"vectors", arr}};
                std::cout << env.dump(2) << "\n";
            } else {
                std::cout << out.s;
            }
            return 0;
        }

        auto with_form = [&](const std::string& file, auto&& fn) -> int {
            FormHandle f;
            std::string text = read_input(file);
            int rc = hymin_form_parse(text.c_str(), &f.f);
            if (rc != HYMIN_OK) return fail(rc);
            return fn(f.f);
        };

        if (minimize->parsed())
            return with_form(min_file, [&](hymin_form* f) {
                StringHandle out;
                int rc = hymin_minimize(f, p_str.c_str(), strategy.c_str(), &out.s);
                if (rc != HYMIN_OK) return fail(rc);
                return emit("minimize", out.s, as_json, seed);
            });
        if (glob->parsed())
            return with_form(glob_file, [&](hymin_form* f) {
                StringHandle out;
                int rc = hymin_minimize_global(f, primes_csv.empty() ? nullptr : primes_csv.c_str(),
                                               &out.s);
                if (rc != HYMIN_OK) return fail(rc);
                return emit("minimize-global", out.s, as_json, seed);
            });
        if (app.get_subcommand("detect-primes")->parsed())
            return with_form(det_file, [&](hymin_form* f) {
                StringHandle out;
                int rc = hymin_detect_primes(f, &out.s);
                if (rc != HYMIN_OK) return fail(rc);
                return emit("detect-primes", out.s, as_json, seed);
            });
        if (app.get_subcommand("reduce")->parsed())
            return with_form(red_file, [&](hymin_form* f) {
                StringHandle out;
                int rc = hymin_reduce(f, &out.s);
                if (rc != HYMIN_OK) return fail(rc);
                return emit("reduce", out.s, as_json, seed);
            });
        if (app.get_subcommand("invariants")->parsed())
            return with_form(inv_file, [&](hymin_form* f) {
                StringHandle out;
                int rc = hymin_invariants(f, &out.s);
                if (rc != HYMIN_OK) return fail(rc);
                return emit("invariants", out.s, as_json, seed);
            });
        if (oracle->parsed())
            return with_form(ora_file, [&](hymin_form* f) {
                StringHandle out;
                int rc = hymin_oracle_minimize(f, ora_p.c_str(), max_lattices, &out.s);
                if (rc != HYMIN_OK) return fail(rc);
                return emit("oracle-minimize", out.s, as_json, seed);
            });
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
