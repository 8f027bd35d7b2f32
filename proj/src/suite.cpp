#include "novikov/suite.hpp"

#include <random>
#include <sstream>

#include "novikov/constructions.hpp"
#include "novikov/identity.hpp"
#include "novikov/series.hpp"
#include "novikov/subspace.hpp"

namespace novikov {

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::HypothesisNotSatisfied: return "hypothesis-not-satisfied";
        case CheckStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

bool SuiteResult::any_fail() const {
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) return true;
    }
    return false;
}

const CheckResult& SuiteResult::get(const std::string& id) const {
    for (const auto& c : checks) {
        if (c.id == id) return c;
    }
    throw DomainError("unknown check id " + id);
}

namespace {

std::string witness_str(const Algebra& a, const Witness& w) {
    std::ostringstream os;
    os << w.what << " at (";
    for (size_t i = 0; i < w.tuple.size(); ++i) {
        if (i) os << ",";
        os << a.label(w.tuple[i]);
    }
    os << ") = " << w.value->str();
    return os.str();
}

CheckResult from_verdict(const std::string& id, const Algebra& a, const Verdict& v) {
    if (v.holds) return {id, CheckStatus::Pass, ""};
    return {id, CheckStatus::Fail, witness_str(a, *v.witness)};
}

// true iff all pairwise commutators and triple associators of the subspace
// basis vanish, i.e. the subspace is a commutative associative subalgebra
CheckResult comm_assoc_check(const std::string& id, const Algebra& a, const Subspace& u,
                             const std::string& label) {
    auto rows = u.basis();
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows.size(); ++j) {
            Element c = commutator(a, rows[i], rows[j]);
            if (!c.is_zero()) {
                return {id, CheckStatus::Fail,
                        label + " not commutative: [" + rows[i].str() + ", " + rows[j].str() +
                            "] = " + c.str()};
            }
            for (size_t k = 0; k < rows.size(); ++k) {
                Element s = associator(a, rows[i], rows[j], rows[k]);
                if (!s.is_zero()) {
                    return {id, CheckStatus::Fail, label + " not associative"};
                }
            }
        }
    }
    return {id, CheckStatus::Pass, ""};
}

}  // namespace

SuiteResult run_suite(const Algebra& a) {
    Verdict nov = is_novikov(a);
    if (!nov.holds) {
        throw DomainError("run_suite: instance is not Novikov: " + witness_str(a, *nov.witness));
    }

    const bool char2 = a.field().characteristic() == 2;
    const auto& cat = identity_catalog();

    SuiteResult res;
    res.lie_metabelian = is_lie_metabelian(a).holds;

    Subspace full = Subspace::full(a);
    Subspace assoc = associator_space(a);
    Subspace comm = commutator_space(a, full, full);

    auto hns = [](const std::string& id) {
        return CheckResult{id, CheckStatus::HypothesisNotSatisfied, "characteristic 2"};
    };
    auto na = [](const std::string& id) {
        return CheckResult{id, CheckStatus::NotApplicable, "instance is not Lie-metabelian"};
    };

    // L1: associator space is an ideal
    res.checks.push_back(from_verdict("L1", a, is_ideal(a, assoc)));

    // C1: commutator space is an ideal (char != 2)
    res.checks.push_back(char2 ? hns("C1") : from_verdict("C1", a, is_ideal(a, comm)));

    // L2: f12-f14
    if (char2) {
        res.checks.push_back(hns("L2"));
    } else {
        CheckResult r{"L2", CheckStatus::Pass, ""};
        for (const char* name : {"f12", "f13", "f14"}) {
            Verdict v = check_identity(a, cat.at(name));
            if (!v.holds) {
                r = {"L2", CheckStatus::Fail, witness_str(a, *v.witness)};
                break;
            }
        }
        res.checks.push_back(std::move(r));
    }

    // C2a: (N,N,N) contained in [N,N]
    if (char2) {
        res.checks.push_back(hns("C2a"));
    } else if (comm.contains(assoc)) {
        res.checks.push_back({"C2a", CheckStatus::Pass, ""});
    } else {
        res.checks.push_back({"C2a", CheckStatus::Fail, "(N,N,N) not contained in [N,N]"});
    }

    // C2b: on Lie-metabelian instances, both ideals commutative and associative
    if (char2) {
        res.checks.push_back(hns("C2b"));
    } else if (!res.lie_metabelian) {
        res.checks.push_back(na("C2b"));
    } else {
        CheckResult r = comm_assoc_check("C2b", a, comm, "[N,N]");
        if (r.status == CheckStatus::Pass) r = comm_assoc_check("C2b", a, assoc, "(N,N,N)");
        res.checks.push_back(std::move(r));
    }

    // L3: g2; L4: g3-g5 (Lie-metabelian only)
    auto identity_block = [&](const std::string& id, std::initializer_list<const char*> names) {
        if (char2) return hns(id);
        if (!res.lie_metabelian) return na(id);
        for (const char* name : names) {
            try {
                Verdict v = check_identity(a, cat.at(name));
                if (!v.holds) return CheckResult{id, CheckStatus::Fail, witness_str(a, *v.witness)};
            } catch (const DomainError& e) {
                return CheckResult{id, CheckStatus::NotApplicable, e.what()};
            }
        }
        return CheckResult{id, CheckStatus::Pass, ""};
    };
    res.checks.push_back(identity_block("L3", {"g2"}));
    res.checks.push_back(identity_block("L4", {"g3", "g4", "g5"}));

    // L5: (N,N,N)^3 = 0 and [N,N]^4 = 0 on Lie-metabelian instances
    if (char2) {
        res.checks.push_back(hns("L5"));
    } else if (!res.lie_metabelian) {
        res.checks.push_back(na("L5"));
    } else {
        SeriesReport pa = power_series(a, assoc);
        SeriesReport pc = power_series(a, comm);
        bool ok = pa.terminated && *pa.index <= 3 && pc.terminated && *pc.index <= 4;
        std::ostringstream os;
        os << "(N,N,N) power index "
           << (pa.terminated ? std::to_string(*pa.index) : std::string("none"))
           << ", [N,N] power index "
           << (pc.terminated ? std::to_string(*pc.index) : std::string("none"));
        res.checks.push_back({"L5", ok ? CheckStatus::Pass : CheckStatus::Fail, os.str()});
    }

    // T1: Lie-solvable <=> [N,N] right nilpotent (both directions)
    if (char2) {
        res.checks.push_back(hns("T1"));
    } else {
        bool lie_solvable = lie_derived_series(a, full).terminated;
        bool comm_rn = right_power_series(a, comm).terminated;
        if (lie_solvable == comm_rn) {
            res.checks.push_back({"T1", CheckStatus::Pass, ""});
        } else {
            res.checks.push_back(
                {"T1", CheckStatus::Fail,
                 lie_solvable ? "Lie-solvable but [N,N] not right nilpotent (defect?)"
                              : "[N,N] right nilpotent but not Lie-solvable (defect?)"});
        }
    }

    // SZ: solvable <=> right nilpotent <=> N^2 nilpotent
    {
        bool solvable = derived_series(a, full).terminated;
        bool rn = right_power_series(a, full).terminated;
        Subspace square = product_space(a, full, full);
        bool sq_nil = power_series(a, square).terminated;  // N^2 is an ideal, so a subalgebra
        if (solvable == rn && rn == sq_nil) {
            res.checks.push_back({"SZ", CheckStatus::Pass, ""});
        } else {
            std::ostringstream os;
            os << "disagreement: solvable=" << solvable << " right-nilpotent=" << rn
               << " square-nilpotent=" << sq_nil << " (internal defect)";
            res.checks.push_back({"SZ", CheckStatus::Fail, os.str()});
        }
    }

    return res;
}

std::string ConstructionDescriptor::describe() const {
    std::ostringstream os;
    os << kind;
    if (kind == "gelfand-dorfman") {
        os << "(seed=" << seed << ")";
    } else if (kind != "example1") {
        os << "(d=" << d << ")";
    }
    os << " over " << field.describe();
    return os.str();
}

Algebra build_construction(const ConstructionDescriptor& desc) {
    if (desc.kind == "example1") return example1(desc.field);
    if (desc.kind == "truncated-witt") return truncated_witt(desc.d, desc.field);
    if (desc.kind == "binomial-truncated-witt") return binomial_truncated_witt(desc.d, desc.field);
    if (desc.kind == "mishchenko") return mishchenko(desc.d, desc.field);
    if (desc.kind == "binomial-mishchenko") return binomial_mishchenko(desc.d, desc.field);
    if (desc.kind == "gelfand-dorfman") {
        return gelfand_dorfman(random_differential_algebra(desc.field, 6, desc.seed));
    }
    throw ParseError("unknown construction '" + desc.kind + "'");
}

std::vector<ConstructionDescriptor> default_corpus(std::uint64_t seed) {
    std::vector<ConstructionDescriptor> out;
    Field q = Field::rationals();
    out.push_back({"example1", 1, q, 0});
    for (int d = 2; d <= 8; ++d) out.push_back({"truncated-witt", d, q, 0});
    for (int d = 1; d <= 8; ++d) out.push_back({"mishchenko", d, q, 0});
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        Field fp = Field::prime(p);
        for (int d = 1; d <= 8; ++d) out.push_back({"binomial-mishchenko", d, fp, 0});
    }
    for (int i = 0; i < 50; ++i) out.push_back({"gelfand-dorfman", 1, q, seed + i});
    return out;
}

CorpusReport run_corpus(const std::vector<ConstructionDescriptor>& specs, std::uint64_t seed) {
    CorpusReport rep;
    rep.seed = seed;
    for (const auto& desc : specs) {
        CorpusItem item;
        item.name = desc.describe();
        try {
            Algebra a = build_construction(desc);
            item.constructed = true;
            Verdict nov = is_novikov(a);
            item.novikov = nov.holds;
            if (!nov.holds) {
                item.error = "not Novikov: " + witness_str(a, *nov.witness);
            } else {
                item.suite = run_suite(a);
            }
        } catch (const Error& e) {
            item.error = e.what();
        }
        if (!item.novikov || item.suite.any_fail()) ++rep.failures;
        rep.items.push_back(std::move(item));
    }
    return rep;
}

std::string char2_explore(std::uint64_t seed, int attempts) {
    Field f2 = Field::prime(2);
    std::mt19937_64 rng(seed);
    int novikov_found = 0;
    for (int t = 0; t < attempts; ++t) {
        int n = 2 + static_cast<int>(rng() % 2);  // dim 2 or 3
        std::map<std::pair<int, int>, TableRow> table;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    if (rng() % 2) table[{i, j}].emplace_back(k, f2.one());
                }
            }
        }
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
        Algebra a(f2, std::move(labels), std::move(table));
        if (!is_novikov(a).holds) continue;
        ++novikov_found;
        Subspace full = Subspace::full(a);
        Subspace comm = commutator_space(a, full, full);
        Verdict v = is_ideal(a, comm);
        if (!v.holds) {
            std::ostringstream os;
            os << "hit at attempt " << t << " (dim " << n << "): [N,N] is not an ideal, "
               << witness_str(a, *v.witness) << "; table:";
            for (const auto& [ij, row] : a.table()) {
                os << " (" << ij.first << "," << ij.second << ")->";
                for (const auto& [k, c] : row) os << k << " ";
            }
            return os.str();
        }
    }
    std::ostringstream os;
    os << "no char-2 counterexample among " << attempts << " random tables (seed " << seed
       << ", " << novikov_found << " Novikov instances checked)";
    return os.str();
}

}  // namespace novikov
