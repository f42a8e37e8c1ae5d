#include <rotconj/rotconj.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUnknown = 3;

struct ValidationFailure {
    std::string message;
};

/// "@path" reads the argument from a file, "@-" from stdin.
std::string load_argument(const std::string& value) {
    if (value.size() < 2 || value[0] != '@') return value;
    std::stringstream buf;
    if (value == "@-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(value.substr(1));
        if (!in) throw ValidationFailure{"cannot read '" + value.substr(1) + "'"};
        buf << in.rdbuf();
    }
    return buf.str();
}

class Session {
public:
    Session() {
        if (rc_session_create(&s_) != RC_OK) throw std::runtime_error("cannot create session");
    }
    ~Session() { rc_session_destroy(s_); }
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    rc_session* get() const { return s_; }

    /// Returns the parsed result or the exit code for a failed call.
    template <typename F>
    nlohmann::json call(F&& f, int& exit_code) {
        char* out = nullptr;
        rc_status st = f(s_, &out);
        if (st != RC_OK) {
            std::cerr << "error: " << rc_last_error(s_) << "\n";
            exit_code = st == RC_ERR_INTERNAL ? kExitInternal : kExitValidation;
            return nullptr;
        }
        nlohmann::json j = nlohmann::json::parse(out);
        rc_string_free(out);
        exit_code = kExitOk;
        return j;
    }

private:
    rc_session* s_ = nullptr;
};

void write_points(const std::string& path, const nlohmann::json& points) {
    std::ofstream out(path);
    if (!out) throw ValidationFailure{"cannot write '" + path + "'"};
    out.precision(17);
    for (const auto& row : points) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].get<double>() + 0.0;
        out << "\n";
    }
}

void print_table(const nlohmann::json& result, std::ostream& os) {
    for (const auto& c : result["criteria"]) {
        char line[96];
        std::snprintf(line, sizeof(line), "%-2d %-4s %-44s %8.2fs", c["id"].get<int>(),
                      c["passed"].get<bool>() ? "PASS" : "FAIL", c["title"].get<std::string>().c_str(),
                      c["seconds"].get<double>());
        os << line << "  " << c["detail"].get<std::string>() << "\n";
    }
    os << (result["passed"].get<bool>() ? "all criteria passed" : "some criteria FAILED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conjugacy of left translations on compact Lie groups of rank <= 2"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string basis_file, output_file;
    std::uint64_t seed = 0x5EED;
    bool strict = false, numeric = false;
    app.add_option("--basis", basis_file, "JSON file declaring irrational symbols and their numeric values");
    app.add_option("--seed", seed, "Seed for sampling (default 0x5EED)");
    app.add_flag("--strict", strict, "Exit 3 when the verdict is unknown");
    app.add_option("--output", output_file, "Write the JSON result to FILE instead of stdout");
    app.add_flag("--numeric", numeric, "Read plain decimal angles through rational recognition");

    std::string group, mode = "topological", rho, rho_prime, element, element_prime, covering, emit_points;
    int bound = 10, verify_samples = 0, samples = 1000;
    long long orbit_samples = 5000;
    double radius = 0.05;
    bool table_json = false;

    auto* classify = app.add_subcommand("classify", "Decide conjugacy of two rotation vectors or two elements");
    classify->add_option("--group", group, "su2 | u2 | so3 | so3xs1 | spinc3 (also circle, torus2)")->required();
    classify->add_option("--mode", mode, "topological | smooth | algebraic");
    auto* c_rho = classify->add_option("--rho", rho, "Rotation vector");
    auto* c_rhop = classify->add_option("--rho-prime", rho_prime, "Rotation vector of the second translation");
    auto* c_el = classify->add_option("--element", element, "Group element JSON");
    auto* c_elp = classify->add_option("--element-prime", element_prime, "Second group element JSON");
    classify->add_option("--bound", bound, "Entry bound for the torus2 search");
    c_rho->needs(c_rhop);
    c_rhop->needs(c_rho);
    c_el->needs(c_elp);
    c_elp->needs(c_el);
    c_rho->excludes(c_el);

    auto* reduce = app.add_subcommand("reduce", "Conjugate an element into the fixed torus");
    reduce->add_option("--group", group, "Group of the element when the JSON does not name it");
    reduce->add_option("--element", element, "Group element JSON")->required();

    auto* witness = app.add_subcommand("witness", "Build an explicit conjugating map");
    witness->add_option("--group", group)->required();
    witness->add_option("--rho", rho)->required();
    witness->add_option("--rho-prime", rho_prime)->required();
    witness->add_option("--verify", verify_samples, "Check the witness on N random points");

    auto* verify = app.add_subcommand("verify", "Build a witness and report its numeric error");
    verify->add_option("--group", group)->required();
    verify->add_option("--rho", rho)->required();
    verify->add_option("--rho-prime", rho_prime)->required();
    verify->add_option("--samples", samples);

    auto* orbit = app.add_subcommand("orbit", "Classify the orbit closure and cross-check by clustering");
    orbit->add_option("--group", group)->required();
    orbit->add_option("--rho", rho)->required();
    orbit->add_option("--samples", orbit_samples);
    orbit->add_option("--radius", radius);
    orbit->add_option("--emit-points", emit_points, "Write sampled orbit coordinates as CSV");

    auto* lift = app.add_subcommand("lift", "Enumerate lifts of a rotation vector through a covering");
    lift->add_option("--covering", covering, "su2-so3 | u2-so3xs1 | u2-spinc3 | u2-self:P | spinc3-so3xs1")
        ->required();
    lift->add_option("--rho", rho)->required();

    auto* project = app.add_subcommand("project", "Push an element or rotation vector down a covering");
    project->add_option("--covering", covering)->required();
    auto* p_el = project->add_option("--element", element, "Element of the covering group");
    auto* p_rho = project->add_option("--rho", rho, "Rotation vector of the covering group");
    p_el->excludes(p_rho);

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->add_flag("--json", table_json, "Print JSON instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        Session session;
        rc_session* s = session.get();
        if (!basis_file.empty()) {
            std::ifstream in(basis_file);
            if (!in) throw ValidationFailure{"cannot read basis file '" + basis_file + "'"};
            std::stringstream buf;
            buf << in.rdbuf();
            if (rc_session_set_basis_json(s, buf.str().c_str()) != RC_OK) {
                std::cerr << "error: " << rc_last_error(s) << "\n";
                return kExitValidation;
            }
        }
        rc_session_set_seed(s, seed);
        rc_session_set_numeric_angles(s, numeric ? 1 : 0);

        const std::string rho_v = load_argument(rho), rho_p_v = load_argument(rho_prime);
        const std::string el_v = load_argument(element), el_p_v = load_argument(element_prime);
        int code = kExitOk;
        nlohmann::json result;

        if (classify->parsed()) {
            if (rho.empty() && element.empty())
                throw ValidationFailure{"classify needs --rho/--rho-prime or --element/--element-prime"};
            if (!element.empty()) {
                result = session.call(
                    [&](rc_session* x, char** o) {
                        return rc_classify_elements(x, group.c_str(), mode.c_str(), el_v.c_str(), el_p_v.c_str(), o);
                    },
                    code);
            } else {
                result = session.call(
                    [&](rc_session* x, char** o) {
                        return rc_classify(x, group.c_str(), mode.c_str(), rho_v.c_str(), rho_p_v.c_str(), bound, o);
                    },
                    code);
            }
        } else if (reduce->parsed()) {
            result = session.call(
                [&](rc_session* x, char** o) { return rc_reduce(x, group.c_str(), el_v.c_str(), o); }, code);
        } else if (witness->parsed()) {
            result = session.call(
                [&](rc_session* x, char** o) {
                    return rc_witness(x, group.c_str(), rho_v.c_str(), rho_p_v.c_str(), verify_samples, o);
                },
                code);
        } else if (verify->parsed()) {
            result = session.call(
                [&](rc_session* x, char** o) {
                    return rc_verify(x, group.c_str(), rho_v.c_str(), rho_p_v.c_str(), samples, o);
                },
                code);
        } else if (orbit->parsed()) {
            result = session.call(
                [&](rc_session* x, char** o) {
                    return rc_orbit(x, group.c_str(), rho_v.c_str(), orbit_samples, radius, emit_points.empty() ? 0 : 1,
                                    o);
                },
                code);
            if (code == kExitOk && !emit_points.empty()) {
                write_points(emit_points, result["points"]);
                result.erase("points");
                result["points_file"] = emit_points;
            }
        } else if (lift->parsed()) {
            result = session.call(
                [&](rc_session* x, char** o) { return rc_lift(x, covering.c_str(), rho_v.c_str(), o); }, code);
        } else if (project->parsed()) {
            if (element.empty() && rho.empty()) throw ValidationFailure{"project needs --element or --rho"};
            const std::string& input = element.empty() ? rho_v : el_v;
            result = session.call(
                [&](rc_session* x, char** o) { return rc_project(x, covering.c_str(), input.c_str(), o); }, code);
        } else if (selftest->parsed()) {
            result = session.call([&](rc_session* x, char** o) { return rc_selftest(x, o); }, code);
            if (code == kExitOk) {
                std::ostringstream text;
                if (table_json)
                    text << result.dump(2) << "\n";
                else
                    print_table(result, text);
                if (output_file.empty()) {
                    std::cout << text.str();
                } else {
                    std::ofstream(output_file) << text.str();
                }
                return result["passed"].get<bool>() ? kExitOk : kExitInternal;
            }
        }
        if (code != kExitOk) return code;

        const std::string text = result.dump(2) + "\n";
        if (output_file.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(output_file);
            if (!out) throw ValidationFailure{"cannot write '" + output_file + "'"};
            out << text;
        }
        if (strict && rc_result_is_unknown(result.dump().c_str())) return kExitUnknown;
        return kExitOk;
    } catch (const ValidationFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kExitInternal;
    }
}
