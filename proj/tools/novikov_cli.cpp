#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "novikov/constructions.hpp"
#include "novikov/deffile.hpp"
#include "novikov/identity.hpp"
#include "novikov/series.hpp"
#include "novikov/subspace.hpp"
#include "novikov/suite.hpp"

using namespace novikov;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitHypothesis = 3;

Field field_from_flags(const std::string& field_name, unsigned long p) {
    if (field_name == "Q") return Field::rationals();
    if (field_name == "Fp") return Field::prime(p);
    throw ParseError("unknown field '" + field_name + "' (use Q or Fp)");
}

std::string witness_line(const Algebra& a, const Witness& w) {
    std::string s = w.what + " at (";
    for (size_t i = 0; i < w.tuple.size(); ++i) {
        if (i) s += ",";
        s += a.label(w.tuple[i]);
    }
    return s + ") = " + w.value->str();
}

ordered_json witness_json(const Algebra& a, const Witness& w) {
    ordered_json j;
    j["what"] = w.what;
    ordered_json tuple = ordered_json::array();
    for (int t : w.tuple) tuple.push_back(a.label(t));
    j["tuple"] = std::move(tuple);
    j["value"] = w.value->str();
    return j;
}

ordered_json series_json(const SeriesReport& r) {
    ordered_json j;
    j["kind"] = series_kind_name(r.kind);
    j["dims"] = r.dims;
    j["terminated"] = r.terminated;
    if (r.index) {
        j["index"] = *r.index;
    } else {
        j["index"] = nullptr;
    }
    j["stabilized_nonzero"] = r.stabilized_nonzero;
    return j;
}

void print_series(const SeriesReport& r) {
    std::cout << "  " << series_kind_name(r.kind) << " series: dims";
    for (int d : r.dims) std::cout << " " << d;
    if (r.terminated) {
        std::cout << ", zero at index " << *r.index;
    } else {
        std::cout << ", stabilizes nonzero";
    }
    std::cout << "\n";
}

int cmd_construct(const std::string& name, int d, const std::string& field_name, unsigned long p,
                  std::uint64_t seed, const std::string& out_path) {
    ConstructionDescriptor desc{name, d, field_from_flags(field_name, p), seed};
    Algebra a = build_construction(desc);
    save_definition_file(a, out_path);
    std::cout << "wrote " << desc.describe() << " (dim " << a.dim() << ") to " << out_path
              << "\n";
    return kExitPass;
}

int cmd_validate(const std::string& path, int workers) {
    Algebra a = load_definition_file(path);
    Verdict v = is_novikov(a, workers);
    if (v.holds) {
        std::cout << "Novikov: holds (dim " << a.dim() << ", " << a.field().describe() << ")\n";
        return kExitPass;
    }
    std::cout << "Novikov: FAILS, " << witness_line(a, *v.witness) << "\n";
    return kExitFail;
}

int cmd_report(const std::string& path, bool as_json) {
    Algebra a = load_definition_file(path);
    Verdict nov = is_novikov(a);
    if (!nov.holds) {
        std::cerr << "refusing: not a Novikov algebra, " << witness_line(a, *nov.witness)
                  << "\n";
        return kExitFail;
    }
    Classification c = classify(a);
    if (as_json) {
        ordered_json j;
        j["dim"] = a.dim();
        j["field"] = a.field().describe();
        j["nilpotent"] = c.nilpotent;
        j["right_nilpotent"] = c.right_nilpotent;
        j["solvable"] = c.solvable;
        j["lie_solvable"] = c.lie_solvable;
        j["square_nilpotent"] = c.square_nilpotent ? ordered_json(*c.square_nilpotent)
                                                   : ordered_json(nullptr);
        j["sz_consistent"] = c.sz_consistent;
        j["series"] = ordered_json::array(
            {series_json(c.power), series_json(c.right_power), series_json(c.derived),
             series_json(c.lie_derived)});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim " << a.dim() << " over " << a.field().describe() << "\n";
        std::cout << "nilpotent: " << (c.nilpotent ? "yes" : "no")
                  << ", right-nilpotent: " << (c.right_nilpotent ? "yes" : "no")
                  << ", solvable: " << (c.solvable ? "yes" : "no")
                  << ", Lie-solvable: " << (c.lie_solvable ? "yes" : "no") << "\n";
        print_series(c.power);
        print_series(c.right_power);
        print_series(c.derived);
        print_series(c.lie_derived);
        if (!c.sz_consistent) {
            std::cout << "INTERNAL ERROR: solvable/right-nilpotent/N^2-nilpotent disagree\n";
        }
    }
    if (!c.sz_consistent) return kExitFail;
    return kExitPass;
}

int cmd_identity(const std::string& path, const std::string& id_name, const std::string& expr,
                 bool as_json, int workers, bool force) {
    Algebra a = load_definition_file(path);
    Identity id = [&] {
        if (!id_name.empty()) {
            const auto& cat = identity_catalog();
            auto it = cat.find(id_name);
            if (it == cat.end()) throw ParseError("unknown identity '" + id_name + "'");
            return it->second;
        }
        return parse_identity("expr", expr);
    }();

    try {
        Verdict v = check_identity(a, id, workers, force);
        if (as_json) {
            ordered_json j;
            j["identity"] = id.name;
            j["status"] = v.holds ? "pass" : "fail";
            if (!v.holds) j["witness"] = witness_json(a, *v.witness);
            std::cout << j.dump(2) << "\n";
        } else if (v.holds) {
            std::cout << id.name << ": pass\n";
        } else {
            std::cout << id.name << ": FAIL, " << witness_line(a, *v.witness) << "\n";
        }
        return v.holds ? kExitPass : kExitFail;
    } catch (const HypothesisViolation& e) {
        if (as_json) {
            ordered_json j;
            j["identity"] = id.name;
            j["status"] = "hypothesis-not-satisfied";
            j["reason"] = e.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << id.name << ": hypothesis-not-satisfied (" << e.what() << ")\n";
        }
        return kExitHypothesis;
    }
}

ordered_json suite_json(const SuiteResult& s) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
        ordered_json j;
        j["id"] = c.id;
        j["status"] = check_status_name(c.status);
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    ordered_json j;
    j["lie_metabelian"] = s.lie_metabelian;
    j["checks"] = std::move(checks);
    return j;
}

void print_suite(const SuiteResult& s) {
    std::cout << "  Lie-metabelian: " << (s.lie_metabelian ? "yes" : "no") << "\n";
    for (const auto& c : s.checks) {
        std::cout << "  " << c.id << ": " << check_status_name(c.status);
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
}

int cmd_theorems(const std::string& path, bool use_corpus, std::uint64_t seed, bool as_json,
                 bool explore_char2) {
    if (explore_char2) {
        std::cout << char2_explore(seed, 20000) << "\n";
        return kExitPass;
    }
    if (use_corpus) {
        CorpusReport rep = run_corpus(default_corpus(seed), seed);
        if (as_json) {
            ordered_json j;
            j["seed"] = rep.seed;
            j["failures"] = rep.failures;
            ordered_json items = ordered_json::array();
            for (const auto& item : rep.items) {
                ordered_json ij;
                ij["name"] = item.name;
                ij["novikov"] = item.novikov;
                if (!item.error.empty()) ij["error"] = item.error;
                if (item.novikov) ij["suite"] = suite_json(item.suite);
                items.push_back(std::move(ij));
            }
            j["items"] = std::move(items);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "corpus seed " << rep.seed << ", " << rep.items.size() << " instances\n";
            for (const auto& item : rep.items) {
                std::string summary;
                if (!item.novikov) {
                    summary = "ERROR: " + item.error;
                } else if (item.suite.any_fail()) {
                    summary = "FAIL";
                } else {
                    summary = "ok";
                }
                std::cout << "  " << item.name << ": " << summary << "\n";
            }
            std::cout << "failures: " << rep.failures << "\n";
        }
        return rep.failures == 0 ? kExitPass : kExitFail;
    }

    Algebra a = load_definition_file(path);
    Verdict nov = is_novikov(a);
    if (!nov.holds) {
        std::cerr << "refusing: not a Novikov algebra, " << witness_line(a, *nov.witness)
                  << "\n";
        return kExitFail;
    }
    SuiteResult s = run_suite(a);
    if (as_json) {
        std::cout << suite_json(s).dump(2) << "\n";
    } else {
        std::cout << "dim " << a.dim() << " over " << a.field().describe() << "\n";
        print_suite(s);
    }
    return s.any_fail() ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant engine for Novikov algebras"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a named algebra definition file");
    std::string c_name, c_field = "Q", c_out = "algebra.json";
    int c_d = 1;
    unsigned long c_p = 0;
    std::uint64_t c_seed = 1;
    construct->add_option("name", c_name,
                          "example1 | truncated-witt | binomial-truncated-witt | mishchenko | "
                          "binomial-mishchenko | gelfand-dorfman")
        ->required();
    construct->add_option("--d", c_d, "truncation parameter");
    construct->add_option("--field", c_field, "Q or Fp");
    construct->add_option("--p", c_p, "prime modulus for Fp");
    construct->add_option("--seed", c_seed, "seed for gelfand-dorfman");
    construct->add_option("-o,--output", c_out, "output path");

    // validate
    auto* validate = app.add_subcommand("validate", "check the Novikov axioms on a file");
    std::string v_path;
    int v_workers = 1;
    validate->add_option("path", v_path)->required();
    validate->add_option("--workers", v_workers, "parallel workers");

    // report
    auto* report = app.add_subcommand("report", "classification report (all four series)");
    std::string r_path;
    bool r_json = false;
    report->add_option("path", r_path)->required();
    report->add_flag("--json", r_json);

    // identity
    auto* identity = app.add_subcommand("identity", "check a catalog or ad-hoc identity");
    std::string i_path, i_id, i_expr;
    bool i_json = false, i_force = false;
    int i_workers = 1;
    identity->add_option("path", i_path)->required();
    identity->add_option("--id", i_id, "catalog name (f1..f14, g1..g5, jacobi)");
    identity->add_option("--expr", i_expr, "identity expression");
    identity->add_flag("--json", i_json);
    identity->add_flag("--force", i_force, "override the 7-variable dimension guard");
    identity->add_option("--workers", i_workers);

    // theorems
    auto* theorems = app.add_subcommand("theorems", "run the structural check suite");
    std::string t_path, t_corpus;
    bool t_json = false, t_explore = false;
    std::uint64_t t_seed = 20240901;
    theorems->add_option("path", t_path);
    theorems->add_option("--corpus", t_corpus, "'default' to run the built-in corpus");
    theorems->add_flag("--json", t_json);
    theorems->add_option("--seed", t_seed);
    theorems->add_flag("--char2-explore", t_explore, "search small F_2 tables (exploratory)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInputError;
    }

    try {
        if (*construct) return cmd_construct(c_name, c_d, c_field, c_p, c_seed, c_out);
        if (*validate) return cmd_validate(v_path, v_workers);
        if (*report) return cmd_report(r_path, r_json);
        if (*identity) {
            if (i_id.empty() == i_expr.empty()) {
                std::cerr << "identity: pass exactly one of --id / --expr\n";
                return kExitInputError;
            }
            return cmd_identity(i_path, i_id, i_expr, i_json, i_workers, i_force);
        }
        if (*theorems) {
            bool use_corpus = !t_corpus.empty();
            if (use_corpus && t_corpus != "default") {
                std::cerr << "theorems: only '--corpus default' is supported\n";
                return kExitInputError;
            }
            if (!use_corpus && t_path.empty() && !t_explore) {
                std::cerr << "theorems: give a file path or --corpus default\n";
                return kExitInputError;
            }
            return cmd_theorems(t_path, use_corpus, t_seed, t_json, t_explore);
        }
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis not satisfied: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInputError;
}
