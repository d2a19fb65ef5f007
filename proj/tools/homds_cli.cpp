#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "homds/codes.hpp"
#include "homds/intersect.hpp"
#include "homds/patterns.hpp"
#include "homds/witness.hpp"
#include "json_io.hpp"

using namespace homds;
using homds::io::json;

namespace {

constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 verdict computed, 1 operational error, 2 usage error.
constexpr int kOperationalError = 1;
constexpr int kUsageError = 2;

json manifest(const std::string& command, json parameters) {
    return json{{"command", command}, {"parameters", std::move(parameters)}, {"version", kVersion}, {"rng", "splitmix64"}};
}

void emit(const json& doc, const std::string& out) {
    const std::string text = doc.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write '" + out + "'");
    os << text;
}

json rational_list(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

// Evidence for a failing family of the generator: a dependent column set or a common point.
json family_evidence(const LinearCode& code, const SetFamily& family) {
    if (family.size() == 1) return io::mds_violation_json(code, family.sets[0]);
    if (auto w = find_intersection_witness(code.generator, family)) return io::intersection_witness_json(code, *w);
    return json();
}

struct DimArgs {
    std::string family, engine = "partition", out;
    std::uint64_t prime = kMersenne61, seed = 0;
    int trials = 2;
};

json run_dim(const DimArgs& a) {
    const SetFamily family = io::family_from_json(io::read_json_file(a.family));
    const Engine engine = parse_engine(a.engine);
    json doc = manifest("dim", {{"family", io::to_json(family)}, {"engine", a.engine}, {"prime", a.prime}, {"trials", a.trials}, {"seed", a.seed}});
    doc["seed"] = a.seed;
    doc["prime"] = a.prime;
    doc["engine"] = to_string(engine);

    if (engine == Engine::lp) {
        const LpReport r = generic_dim_lp(family);
        doc["dimension"] = r.result.dimension;
        doc["error_bound"] = 0.0;
        doc["lp"] = {{"deltas", rational_list(r.deltas)}, {"optimum", to_string(r.optimum)}, {"rounds", r.rounds}};
        json cuts = json::array();
        for (auto c : r.constraints) cuts.push_back(io::to_json(c));
        doc["lp"]["constraints"] = cuts;
        doc["dual_certificate"] = io::dual_certificate_json(family, r.dual);
        return doc;
    }
    const GenericDimResult r = generic_dim(family, engine, PrimeField(a.prime), a.trials, a.seed);
    doc["dimension"] = r.dimension;
    doc["error_bound"] = engine == Engine::randomized ? r.total_error_bound : 0.0;
    if (engine == Engine::randomized) {
        doc["trials"] = r.trials;
        doc["agreeing_trials"] = r.agreeing_trials;
        doc["per_trial_error_bound"] = r.error_bound;
    } else {
        doc["partition"] = io::to_json(r.partition);
        doc["dual_certificate"] = io::dual_certificate_json(family, dual_certificate_from_partition(family, r.partition));
    }
    return doc;
}

struct CheckArgs {
    std::string code, property, strategy = "dual", out;
    int level = 1;
    std::size_t budget = kDefaultBudget;
};

json run_check(const CheckArgs& a) {
    const LinearCode code = io::read_code(a.code);
    json doc = manifest("check", {{"code", io::to_json(code)}, {"property", a.property}, {"level", a.level}, {"budget", a.budget}});
    doc["prime"] = code.field().modulus();
    doc["seed"] = nullptr;
    doc["property"] = a.property;
    json evidence = json::array();

    if (a.property == "mds") {
        const auto bad = mds_violation(code);
        doc["verdict"] = !bad.has_value();
        if (bad) evidence.push_back(io::mds_violation_json(code, *bad));
    } else if (a.property == "mds-ell") {
        const MdsEllResult r = is_mds_ell(code, a.level, a.budget);
        doc["verdict"] = r.holds;
        doc["families_checked"] = r.families_checked;
        if (r.violating) {
            doc["family"] = io::to_json(*r.violating);
            if (json e = family_evidence(code, *r.violating); !e.is_null()) evidence.push_back(e);
        }
    } else if (a.property == "gzp-ell") {
        const GzpEllResult r = is_gzp_ell(code, a.level, a.budget, true);
        doc["verdict"] = r.holds;
        doc["mds"] = r.mds;
        doc["patterns_checked"] = r.patterns_checked;
        if (!r.mds) {
            if (auto bad = mds_violation(code)) evidence.push_back(io::mds_violation_json(code, *bad));
        } else if (r.failing) {
            doc["failing_pattern"] = io::to_json(*r.failing);
        }
        if (r.holds)
            for (const auto& c : r.certificates) evidence.push_back(io::gzp_certificate_json(code, c));
    } else if (a.property == "ld-mds") {
        const LdMdsStrategy strategy = parse_ld_mds_strategy(a.strategy);
        doc["parameters"]["strategy"] = a.strategy;
        const LdMdsResult r = is_ld_mds_le(code, a.level, strategy, a.budget);
        doc["verdict"] = r.holds;
        doc["items_checked"] = r.items_checked;
        if (r.witness) evidence.push_back(io::ld_mds_witness_json(code, *r.witness));
        if (r.dual_violation) {
            const LinearCode dual = dual_code(code);
            doc["dual_violation"] = io::to_json(*r.dual_violation);
            if (json e = family_evidence(dual, *r.dual_violation); !e.is_null()) evidence.push_back(e);
            if (auto w = r.dual_violation->size() > 1 ? find_intersection_witness(dual.generator, *r.dual_violation) : std::nullopt) {
                LdMdsWitness ld = mds_violation_to_ldmds(dual, *w);
                ld.syndrome = parity_check_matrix(code).apply(ld.u[0]);
                if (verify_ld_mds_witness(code, ld)) evidence.push_back(io::ld_mds_witness_json(code, ld));
            }
        }
    } else {
        throw std::invalid_argument("unknown property '" + a.property + "'");
    }
    doc["evidence"] = evidence;
    return doc;
}

struct RsArgs {
    int n = 6, k = 3, level = 2, trials = 100, workers = 1;
    std::uint64_t prime = kMersenne61, seed = 0;
    std::string out;
};

json run_random_rs(const RsArgs& a) {
    const RsReport r = random_rs_trial(a.n, a.k, a.level, PrimeField(a.prime), a.trials, a.seed, a.workers);
    json doc = manifest("random-rs", {{"n", a.n}, {"k", a.k}, {"L", a.level}, {"prime", a.prime}, {"trials", a.trials}, {"seed", a.seed}, {"workers", a.workers}});
    doc["seed"] = a.seed;
    doc["prime"] = a.prime;
    json results = json::array();
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) {
        const RsTrialOutcome& o = r.outcomes[i];
        json item{{"index", i}, {"points", o.points}, {"distinct", o.distinct}, {"ld_mds", o.ld_mds}};
        if (o.dual_violation) item["dual_violation"] = io::to_json(*o.dual_violation);
        results.push_back(item);
    }
    doc["results"] = results;
    doc["aggregate"] = {{"trials", r.trials}, {"failures", r.failures}, {"failure_rate", r.trials ? static_cast<double>(r.failures) / r.trials : 0.0}};
    if (r.c.fits_ulong_p())
        doc["c"] = r.c.get_ui();
    else
        doc["c"] = r.c.get_str();
    doc["error_bound"] = r.bound;
    Rational exact(r.c, mpz_class(std::to_string(a.prime)));
    exact.canonicalize();
    doc["error_bound_exact"] = exact.get_str();
    return doc;
}

struct St20Args {
    std::string code, sets, matrix_out, out;
};

json run_st20(const St20Args& a) {
    const LinearCode code = io::read_code(a.code);
    const json sj = io::read_json_file(a.sets);
    const std::vector<IndexSet> sets = io::sets_from_json(sj.is_array() ? sj : sj.at("sets"), code.n());
    json wire = json::array();
    for (auto s : sets) wire.push_back(io::to_json(s));
    json doc = manifest("st20", {{"code", io::to_json(code)}, {"sets", wire}});
    doc["prime"] = code.field().modulus();
    doc["seed"] = nullptr;
    const St20Report r = check_st20(code, sets);
    doc["hypothesis_holds"] = r.hypothesis_holds;
    doc["union_equality"] = r.union_equality;
    doc["used_columns"] = io::to_json(r.used_columns);
    if (r.violating_subset) doc["violating_subset"] = io::to_json(*r.violating_subset);
    if (r.full_column_rank) {
        doc["full_column_rank"] = *r.full_column_rank;
        doc["rank"] = r.rank;
        doc["columns"] = r.columns;
    }
    if (!a.matrix_out.empty()) {
        std::ofstream os(a.matrix_out);
        if (!os) throw std::runtime_error("cannot write '" + a.matrix_out + "'");
        write_matrix_text(os, build_st20_matrix(code, sets).matrix);
    }
    return doc;
}

struct ExtendArgs {
    std::string pattern, family, out;
};

json run_extend(const ExtendArgs& a) {
    if (a.pattern.empty() == a.family.empty()) throw std::invalid_argument("extend: give exactly one of --pattern or --family");
    if (!a.family.empty()) {
        const SetFamily f = io::family_from_json(io::read_json_file(a.family));
        json doc = manifest("extend", {{"family", io::to_json(f)}});
        doc["seed"] = nullptr;
        doc["prime"] = nullptr;
        if (auto bad = ell_hall_violation(f)) {
            doc["feasible"] = false;
            doc["violating"] = io::to_json(*bad);
            return doc;
        }
        doc["feasible"] = true;
        doc["family"] = io::to_json(extend_hall(f));
        return doc;
    }
    const ZeroPattern p = io::pattern_from_json(io::read_json_file(a.pattern));
    json doc = manifest("extend", {{"pattern", io::to_json(p)}});
    doc["seed"] = nullptr;
    doc["prime"] = nullptr;
    if (auto bad = gzp_violation(p)) {
        doc["is_gzp"] = false;
        doc["violating_rows"] = io::to_json(*bad);
        return doc;
    }
    const ZeroPattern m = extend_to_maximal(p);
    doc["is_gzp"] = true;
    doc["pattern"] = io::to_json(m);
    doc["order"] = m.order();
    return doc;
}

struct AttainArgs {
    std::string code, pattern, strategy = "maximal", out;
};

json run_attain(const AttainArgs& a) {
    const LinearCode code = io::read_code(a.code);
    const ZeroPattern p = io::pattern_from_json(io::read_json_file(a.pattern));
    AttainStrategy strategy;
    if (a.strategy == "maximal")
        strategy = AttainStrategy::maximal;
    else if (a.strategy == "k-1")
        strategy = AttainStrategy::k_minus_1;
    else
        throw std::invalid_argument("unknown attain strategy '" + a.strategy + "'");
    json doc = manifest("attain", {{"code", io::to_json(code)}, {"pattern", io::to_json(p)}, {"strategy", a.strategy}});
    doc["prime"] = code.field().modulus();
    doc["seed"] = nullptr;
    const AttainResult r = attain_pattern(code, p, strategy);
    doc["success"] = r.success;
    doc["extended"] = io::to_json(r.extended);
    if (r.certificate) doc["certificate"] = io::gzp_certificate_json(code, *r.certificate);
    if (!r.success) doc["reason"] = r.reason;
    return doc;
}

// Accepts one evidence object, an array of them, or a document produced by another subcommand.
void collect_evidence(const json& j, std::vector<json>& out) {
    if (j.is_array()) {
        for (const auto& x : j) collect_evidence(x, out);
        return;
    }
    if (!j.is_object()) return;
    if (j.contains("type")) {
        out.push_back(j);
        return;
    }
    for (const char* key : {"evidence", "certificate", "dual_certificate"})
        if (j.contains(key)) collect_evidence(j.at(key), out);
}

json run_verify(const std::string& path) {
    const json input = io::read_json_file(path);
    std::vector<json> items;
    collect_evidence(input, items);
    if (items.empty()) throw std::invalid_argument("no evidence found in '" + path + "'");
    json doc = manifest("verify-witness", json::object());
    doc["seed"] = nullptr;
    doc["prime"] = nullptr;
    json results = json::array();
    bool all = true;
    for (const auto& e : items) {
        const io::Verdict v = io::verify_evidence(e);
        json item{{"type", v.type}, {"valid", v.valid}};
        if (!v.valid) item["reason"] = v.reason;
        results.push_back(item);
        all = all && v.valid;
    }
    doc["results"] = results;
    doc["checked"] = items.size();
    doc["valid"] = all;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher-order MDS toolkit: generic intersections, zero patterns, and code predicates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    DimArgs dim;
    auto* c_dim = app.add_subcommand("dim", "Generic intersection dimension of a set family");
    c_dim->add_option("--family", dim.family, "Family JSON")->required()->check(CLI::ExistingFile);
    c_dim->add_option("--engine", dim.engine, "partition | lp | randomized")
        ->capture_default_str()
        ->check(CLI::IsMember({"partition", "lp", "randomized"}));
    c_dim->add_option("--prime", dim.prime, "Field for the randomized engine")->capture_default_str();
    c_dim->add_option("--trials", dim.trials, "Randomized trials")->capture_default_str()->check(CLI::PositiveNumber);
    c_dim->add_option("--seed", dim.seed, "Seed")->capture_default_str();
    c_dim->add_option("--out", dim.out, "Output file (default stdout)");

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "Test a code for a property and emit evidence");
    c_check->add_option("--code", check.code, "Code JSON or generator matrix text")->required()->check(CLI::ExistingFile);
    c_check->add_option("--property", check.property, "mds | mds-ell | gzp-ell | ld-mds")
        ->required()
        ->check(CLI::IsMember({"mds", "mds-ell", "gzp-ell", "ld-mds"}));
    c_check->add_option("--level", check.level, "l for mds-ell/gzp-ell, L for ld-mds")->capture_default_str()->check(CLI::PositiveNumber);
    c_check->add_option("--strategy", check.strategy, "ld-mds strategy: dual | direct")
        ->capture_default_str()
        ->check(CLI::IsMember({"dual", "direct"}));
    c_check->add_option("--budget", check.budget, "Enumeration budget")->capture_default_str();
    c_check->add_option("--out", check.out, "Output file (default stdout)");

    RsArgs rs;
    auto* c_rs = app.add_subcommand("random-rs", "List-decoding experiment on random Reed-Solomon codes");
    c_rs->add_option("--n", rs.n, "Length")->capture_default_str();
    c_rs->add_option("--k", rs.k, "Dimension")->capture_default_str();
    c_rs->add_option("--level", rs.level, "List size L")->capture_default_str()->check(CLI::PositiveNumber);
    c_rs->add_option("--prime", rs.prime, "Field size")->capture_default_str();
    c_rs->add_option("--trials", rs.trials, "Trials")->capture_default_str()->check(CLI::NonNegativeNumber);
    c_rs->add_option("--seed", rs.seed, "Seed")->capture_default_str();
    c_rs->add_option("--workers", rs.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    c_rs->add_option("--out", rs.out, "Output file (default stdout)");

    St20Args st;
    auto* c_st = app.add_subcommand("st20", "Hypothesis and rank test for the block matrix of a set tuple");
    c_st->add_option("--code", st.code, "Code JSON or generator matrix text")->required()->check(CLI::ExistingFile);
    c_st->add_option("--sets", st.sets, "JSON with the sets J_1..J_t")->required()->check(CLI::ExistingFile);
    c_st->add_option("--matrix-out", st.matrix_out, "Write the block matrix in text format");
    c_st->add_option("--out", st.out, "Output file (default stdout)");

    ExtendArgs ext;
    auto* c_ext = app.add_subcommand("extend", "Extend a zero pattern to a maximal one, or a family to Hall sizes");
    c_ext->add_option("--pattern", ext.pattern, "Zero pattern JSON")->check(CLI::ExistingFile);
    c_ext->add_option("--family", ext.family, "Family JSON with deltas")->check(CLI::ExistingFile);
    c_ext->add_option("--out", ext.out, "Output file (default stdout)");

    AttainArgs att;
    auto* c_att = app.add_subcommand("attain", "Attain a generic zero pattern with a code");
    c_att->add_option("--code", att.code, "Code JSON or generator matrix text")->required()->check(CLI::ExistingFile);
    c_att->add_option("--pattern", att.pattern, "Zero pattern JSON")->required()->check(CLI::ExistingFile);
    c_att->add_option("--strategy", att.strategy, "maximal | k-1")->capture_default_str()->check(CLI::IsMember({"maximal", "k-1"}));
    c_att->add_option("--out", att.out, "Output file (default stdout)");

    std::string witness, verify_out;
    auto* c_ver = app.add_subcommand("verify-witness", "Check certificates and witnesses");
    c_ver->add_option("--witness", witness, "Evidence JSON, or any output document")->required()->check(CLI::ExistingFile);
    c_ver->add_option("--out", verify_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*c_dim) emit(run_dim(dim), dim.out);
        else if (*c_check) emit(run_check(check), check.out);
        else if (*c_rs) emit(run_random_rs(rs), rs.out);
        else if (*c_st) emit(run_st20(st), st.out);
        else if (*c_ext) emit(run_extend(ext), ext.out);
        else if (*c_att) emit(run_attain(att), att.out);
        else if (*c_ver) emit(run_verify(witness), verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOperationalError;
    }
    return 0;
}
