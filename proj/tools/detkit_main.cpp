// detkit command line: exact determinants, Cramer solving, independence
// testing, and the seeded determinant-law verification harness.
//
// Exit codes are a stable contract: 0 success, 2 parse error, 3 shape error,
// 4 singular system, 5 unexpected property violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "detkit/detkit.hpp"

namespace {

using nlohmann::json;

struct CliOptions {
    std::string field_text = "rational";
    std::string algorithm_text = "crosscheck";
    std::string input = "-";
    std::string functional_text;
    int trials = 200;
    std::uint64_t seed = 0;
    bool machine = false;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw detkit::ParseError("cannot open input file '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

detkit::DetAlgorithm parse_algorithm(const std::string& text) {
    if (text == "cofactor")
        return detkit::DetAlgorithm::Cofactor;
    if (text == "elimination")
        return detkit::DetAlgorithm::Elimination;
    if (text == "crosscheck")
        return detkit::DetAlgorithm::CrossChecked;
    throw detkit::ParseError("unknown algorithm '" + text + "'");
}

template <class S>
json vector_json(const detkit::Vector<S>& v) {
    json a = json::array();
    for (const S& x : v.entries())
        a.push_back(x.str());
    return a;
}

template <class S>
json tuple_json(const detkit::VecTuple<S>& t) {
    json a = json::array();
    for (const auto& v : t.vectors())
        a.push_back(vector_json(v));
    return a;
}

template <class S>
std::string tuple_str(const detkit::VecTuple<S>& t) {
    std::string out;
    for (int k = 0; k < t.arity(); ++k) {
        if (k)
            out += ' ';
        out += '[' + t[k].str() + ']';
    }
    return out;
}

// ---- det ------------------------------------------------------------------

template <detkit::ScalarField F>
int run_det(const F& field, const CliOptions& opt) {
    auto algorithm = parse_algorithm(opt.algorithm_text);
    auto matrix = detkit::parse_matrix(field, read_input(opt.input));
    auto result = detkit::det(matrix, algorithm);

    json record{{"command", "det"},
                {"field", field.descriptor().str()},
                {"status", "ok"},
                {"det", result.value.str()},
                {"algorithm", detkit::algorithm_name(result.algorithm)}};
    std::string extra;
    if (algorithm == detkit::DetAlgorithm::Elimination) {
        auto trace = detkit::reduce_to_diagonal(matrix);
        std::string diag;
        json jdiag = json::array();
        for (int i = 0; i < trace.diagonal.nrows(); ++i) {
            if (i)
                diag += ' ';
            diag += trace.diagonal.at(i, i).str();
            jdiag.push_back(trace.diagonal.at(i, i).str());
        }
        record["swaps"] = trace.swap_count;
        record["diagonal"] = jdiag;
        extra = "swaps = " + std::to_string(trace.swap_count) + "\ndiagonal = " + diag + "\n";
    }

    if (opt.machine) {
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "det = " << result.value.str() << "\n"
                  << "algorithm = " << detkit::algorithm_name(result.algorithm) << "\n"
                  << extra;
    }
    return 0;
}

// ---- solve ----------------------------------------------------------------

template <detkit::ScalarField F>
int run_solve(const F& field, const CliOptions& opt) {
    auto system = detkit::parse_system(field, read_input(opt.input));
    using S = typename F::Element;
    try {
        auto solution = detkit::cramer_solve(system);
        std::string xs, nums;
        json jx = json::array(), jn = json::array();
        for (std::size_t k = 0; k < solution.values.size(); ++k) {
            if (k) {
                xs += ' ';
                nums += ' ';
            }
            xs += solution.values[k].str();
            nums += solution.numerators[k].str();
            jx.push_back(solution.values[k].str());
            jn.push_back(solution.numerators[k].str());
        }
        if (opt.machine) {
            json record{{"command", "solve"},       {"field", field.descriptor().str()},
                        {"status", "ok"},           {"x", jx},
                        {"numerators", jn},         {"denominator", solution.base_determinant.str()}};
            std::cout << record.dump() << "\n";
        } else {
            std::cout << "x = " << xs << "\n"
                      << "numerators = " << nums << "\n"
                      << "denominator = " << solution.base_determinant.str() << "\n";
        }
        return 0;
    } catch (const detkit::SingularSystemError<S>& e) {
        std::string cert;
        json jcert = json::array();
        for (std::size_t k = 0; k < e.certificate.size(); ++k) {
            if (k)
                cert += ' ';
            cert += e.certificate[k].str();
            jcert.push_back(e.certificate[k].str());
        }
        if (opt.machine) {
            json record{{"command", "solve"},
                        {"field", field.descriptor().str()},
                        {"status", "singular"},
                        {"rank", e.rank},
                        {"certificate", jcert}};
            std::cout << record.dump() << "\n";
        } else {
            std::cerr << "error: singular system: rank = " << e.rank << ", certificate = " << cert
                      << "\n";
        }
        return 4;
    }
}

// ---- independent ------------------------------------------------------------

template <detkit::ScalarField F>
int run_independent(const F& field, const CliOptions& opt) {
    auto matrix = detkit::parse_matrix(field, read_input(opt.input));
    auto tuple = matrix.as_tuple();
    int r = detkit::rank(tuple);
    bool independent = detkit::is_linearly_independent(tuple);
    bool spans = detkit::spans_ambient(tuple);
    if (opt.machine) {
        json record{{"command", "independent"}, {"field", field.descriptor().str()},
                    {"status", "ok"},           {"rank", r},
                    {"independent", independent}, {"spans", spans}};
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "rank = " << r << "\n"
                  << "independent = " << (independent ? "true" : "false") << "\n"
                  << "spans = " << (spans ? "true" : "false") << "\n";
    }
    return 0;
}

// ---- verify -----------------------------------------------------------------

template <class S>
bool has_pathological_base(const detkit::DetFunctional<S>& f) {
    switch (f.kind()) {
    case detkit::DetFunctional<S>::Kind::XminusY:
    case detkit::DetFunctional<S>::Kind::XY:
        return true;
    case detkit::DetFunctional<S>::Kind::Scaled:
    case detkit::DetFunctional<S>::Kind::Lifted:
        return has_pathological_base(f.inner());
    default:
        return false;
    }
}

struct PropertyLine {
    bool pass;
    bool expected;
    std::string human_witness; // indented lines, empty when clean
    json witness;              // null when clean
};

template <class S>
PropertyLine main_equation_line(const detkit::ResidualReport<detkit::MainEquationWitness<S>>& report,
                                bool expected) {
    PropertyLine line{report.clean(), expected, "", nullptr};
    if (!report.clean()) {
        const auto& w = *report.witness;
        line.human_witness = "  trial = " + std::to_string(w.trial) + "\n  tuple = " +
                             tuple_str(w.tuple) + "\n  b = [" + w.b.str() + "]\n  residual = [" +
                             w.residual.str() + "]\n";
        line.witness = json{{"trial", w.trial},
                            {"tuple", tuple_json(w.tuple)},
                            {"b", vector_json(w.b)},
                            {"residual", vector_json(w.residual)}};
    }
    return line;
}

template <class S>
PropertyLine multilinearity_line(const detkit::ResidualReport<detkit::MultilinearityWitness<S>>& report,
                                 bool expected) {
    PropertyLine line{report.clean(), expected, "", nullptr};
    if (!report.clean()) {
        const auto& w = *report.witness;
        line.human_witness = "  trial = " + std::to_string(w.trial) + "\n  slot = " +
                             std::to_string(w.slot) + "\n  tuple = " + tuple_str(w.tuple) +
                             "\n  w = [" + w.w.str() + "]\n  s = " + w.s.str() +
                             "\n  additivity_residual = " + w.additivity_residual.str() +
                             "\n  homogeneity_residual = " + w.homogeneity_residual.str() + "\n";
        line.witness = json{{"trial", w.trial},
                            {"slot", w.slot},
                            {"tuple", tuple_json(w.tuple)},
                            {"w", vector_json(w.w)},
                            {"s", w.s.str()},
                            {"additivity_residual", w.additivity_residual.str()},
                            {"homogeneity_residual", w.homogeneity_residual.str()}};
    }
    return line;
}

template <class S>
PropertyLine antisymmetry_line(const detkit::ResidualReport<detkit::AntisymmetryWitness<S>>& report,
                               bool expected) {
    PropertyLine line{report.clean(), expected, "", nullptr};
    if (!report.clean()) {
        const auto& w = *report.witness;
        line.human_witness = "  trial = " + std::to_string(w.trial) + "\n  slots = " +
                             std::to_string(w.i) + " " + std::to_string(w.j) + "\n  tuple = " +
                             tuple_str(w.tuple) + "\n  residual = " + w.residual.str() + "\n";
        line.witness = json{{"trial", w.trial},
                            {"i", w.i},
                            {"j", w.j},
                            {"tuple", tuple_json(w.tuple)},
                            {"residual", w.residual.str()}};
    }
    return line;
}

const char* pass_fail(bool pass) { return pass ? "PASS" : "FAIL"; }

template <detkit::ScalarField F>
int run_verify(const F& field, const CliOptions& opt) {
    auto functional = detkit::parse_functional(field, opt.functional_text);
    if (field.descriptor().kind == detkit::FieldKind::PrimeField && has_pathological_base(functional))
        throw detkit::ParseError("functional '" + opt.functional_text +
                                 "' is defined over the rationals; drop --field gf:<p>");

    auto expectation = detkit::expected_classification(functional);
    auto main_report = detkit::verify_main_equation(field, functional, opt.trials, opt.seed);
    auto multi_report = detkit::verify_multilinearity(field, functional, opt.trials, opt.seed);
    auto anti_report = detkit::verify_antisymmetry(field, functional, opt.trials, opt.seed);

    PropertyLine lines[3] = {
        main_equation_line(main_report, expectation.main_equation),
        multilinearity_line(multi_report, expectation.multilinearity),
        antisymmetry_line(anti_report, expectation.antisymmetry),
    };
    const char* names[3] = {"main_equation", "multilinearity", "antisymmetry"};

    bool ok = true;
    for (const PropertyLine& line : lines)
        ok = ok && line.pass == line.expected;

    if (opt.machine) {
        json record{{"command", "verify"},
                    {"field", field.descriptor().str()},
                    {"functional", functional.descriptor()},
                    {"trials", opt.trials},
                    {"seed", opt.seed},
                    {"status", "ok"},
                    {"verdict", ok ? "ok" : "unexpected"}};
        for (int k = 0; k < 3; ++k) {
            json prop{{"pass", lines[k].pass}, {"expected", lines[k].expected}};
            if (!lines[k].witness.is_null())
                prop["witness"] = lines[k].witness;
            record[names[k]] = prop;
        }
        std::cout << record.dump() << "\n";
    } else {
        std::cout << "functional = " << functional.descriptor() << "\n"
                  << "field = " << field.descriptor().str() << "\n"
                  << "trials = " << opt.trials << "\n"
                  << "seed = " << opt.seed << "\n";
        for (int k = 0; k < 3; ++k) {
            std::cout << names[k] << " = " << pass_fail(lines[k].pass) << " (expected "
                      << pass_fail(lines[k].expected) << ")\n"
                      << lines[k].human_witness;
        }
        std::cout << "verdict = " << (ok ? "ok" : "unexpected") << "\n";
    }
    return ok ? 0 : 5;
}

// ---- dispatch ---------------------------------------------------------------

template <class Fn>
int guarded(const CliOptions& opt, const std::string& command, Fn&& fn) {
    auto report = [&](const std::string& message, int code) {
        if (opt.machine) {
            json record{{"command", command},
                        {"field", opt.field_text},
                        {"status", "error"},
                        {"error", message}};
            std::cout << record.dump() << "\n";
        } else {
            std::cerr << "error: " << message << "\n";
        }
        return code;
    };
    try {
        return fn();
    } catch (const detkit::ParseError& e) {
        return report(e.what(), 2);
    } catch (const detkit::InvalidModulusError& e) {
        return report(e.what(), 2);
    } catch (const detkit::DivisionByZeroError& e) {
        return report(e.what(), 2);
    } catch (const detkit::NotSquareError& e) {
        return report(e.what(), 3);
    } catch (const detkit::DimensionMismatchError& e) {
        return report(e.what(), 3);
    } catch (const detkit::ArityMismatchError& e) {
        return report(e.what(), 3);
    } catch (const detkit::IndexOutOfRangeError& e) {
        return report(e.what(), 3);
    } catch (const detkit::Error& e) {
        return report(e.what(), 1);
    } catch (const std::exception& e) {
        return report(e.what(), 1);
    }
}

template <class Runner>
int with_field(const CliOptions& opt, Runner&& runner) {
    auto descriptor = detkit::FieldDescriptor::parse(opt.field_text);
    if (descriptor.kind == detkit::FieldKind::Rational)
        return runner(detkit::RationalField{});
    return runner(detkit::PrimeField{descriptor});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic determinants, Cramer's-rule solving, and\n"
                 "seeded verification of the determinant laws"};
    app.require_subcommand(1);

    CliOptions opt;

    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", opt.field_text, "scalar field: rational | gf:<p>")
            ->capture_default_str();
        cmd->add_flag("--machine", opt.machine, "one JSON record per result on stdout");
    };

    CLI::App* det_cmd = app.add_subcommand("det", "determinant of a matrix file");
    det_cmd->add_option("input", opt.input, "matrix file, or - for stdin")->capture_default_str();
    det_cmd->add_option("--algorithm", opt.algorithm_text, "cofactor | elimination | crosscheck")
        ->capture_default_str();
    add_field(det_cmd);

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a square system by Cramer's rule");
    solve_cmd->add_option("input", opt.input, "system file (matrix, ---, rhs), or - for stdin")
        ->capture_default_str();
    add_field(solve_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "sample determinant laws against a functional descriptor");
    verify_cmd->add_option("functional", opt.functional_text,
                           "det:<n> | scaled:<c>:<f> | lifted:<f> | xminusy | xy")
        ->required();
    verify_cmd->add_option("--trials", opt.trials, "sampling trials per property")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000000000));
    verify_cmd->add_option("--seed", opt.seed, "64-bit generator seed")->capture_default_str();
    add_field(verify_cmd);

    CLI::App* indep_cmd =
        app.add_subcommand("independent", "rank / independence / spanning of matrix rows");
    indep_cmd->add_option("input", opt.input, "matrix file, or - for stdin")->capture_default_str();
    add_field(indep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (det_cmd->parsed())
        return guarded(opt, "det",
                       [&] { return with_field(opt, [&](const auto& f) { return run_det(f, opt); }); });
    if (solve_cmd->parsed())
        return guarded(opt, "solve", [&] {
            return with_field(opt, [&](const auto& f) { return run_solve(f, opt); });
        });
    if (verify_cmd->parsed())
        return guarded(opt, "verify", [&] {
            return with_field(opt, [&](const auto& f) { return run_verify(f, opt); });
        });
    return guarded(opt, "independent", [&] {
        return with_field(opt, [&](const auto& f) { return run_independent(f, opt); });
    });
}
