// Command line front end: matrix generation, distance reports, random search,
// verification, and cross-validated evaluation.
//
// Exit codes: 0 ok, 1 verification violation, 2 usage/parse error,
// 3 construction error, 4 enumeration budget exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "necoc/construct.hpp"
#include "necoc/dataset.hpp"
#include "necoc/ensemble.hpp"
#include "necoc/errors.hpp"
#include "necoc/factory.hpp"
#include "necoc/matrix_io.hpp"
#include "necoc/metrics.hpp"
#include "necoc/verification.hpp"

namespace {

using namespace necoc;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct violation_found {};  // verification failed; exit 1

DimensionPolicy parse_policy(const std::string& text) {
    if (text == "half") return DimensionPolicy::half();
    if (text == "square") return DimensionPolicy::square();
    if (text == "double") return DimensionPolicy::double_width();
    try {
        const int n = std::stoi(text);
        if (n >= 1) return DimensionPolicy::explicit_width(n);
    } catch (const std::exception&) {
    }
    throw usage_error("policy must be half, square, double, or a positive width");
}

DistanceMetric parse_metric(const std::string& text) {
    if (text == "hamming") return DistanceMetric::kronecker;
    if (text == "absolute") return DistanceMetric::absolute;
    throw usage_error("metric must be hamming or absolute");
}

void write_outputs(const CodingMatrix& m, const Provenance& prov,
                   const std::string& out_path) {
    write_matrix_file(m, out_path);
    std::ofstream meta(out_path + ".meta", std::ios::binary);
    if (!meta) throw std::runtime_error("cannot write meta file: " + out_path + ".meta");
    meta << provenance_text(prov);
}

std::string format_accuracy(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// ----- gen ------------------------------------------------------------

struct GenArgs {
    int base = 0;
    int k = 0;
    int classes = 0;
    std::string policy;
    std::string out;
};

int run_gen(const GenArgs& a) {
    if ((a.k > 0) == (a.classes > 0))
        throw usage_error("give either --k or --classes with --policy");
    FactoryResult result = [&] {
        if (a.k > 0) {
            CodingMatrix m = build_mk(BasePrime(a.base), a.k);
            DistanceReport report = distance_report(m, DistanceMetric::kronecker);
            Provenance prov;
            prov.strategy = Provenance::Strategy::deterministic;
            prov.base = a.base;
            prov.k = a.k;
            return FactoryResult{std::move(m), report, prov};
        }
        const DimensionPolicy policy =
            a.policy.empty() ? DimensionPolicy::square() : parse_policy(a.policy);
        return deterministic_matrix(BasePrime(a.base), a.classes, policy);
    }();
    if (!a.out.empty())
        write_outputs(result.matrix, result.provenance, a.out);
    else
        std::cout << to_text(result.matrix);
    std::cout << report_line(result.report) << "\n";
    return 0;
}

// ----- dist -----------------------------------------------------------

struct DistArgs {
    std::string matrix;
    std::string metric = "hamming";
};

int run_dist(const DistArgs& a) {
    const CodingMatrix m = read_matrix_file(a.matrix);
    const DistanceReport r = distance_report(m, parse_metric(a.metric));
    std::cout << report_line(r) << "\n";
    std::cout << "rows " << r.argmin_rows.first << " " << r.argmin_rows.second << "\n";
    std::cout << "cols " << r.argmin_cols.first << " " << r.argmin_cols.second << "\n";
    return 0;
}

// ----- search ---------------------------------------------------------

struct SearchArgs {
    int base = 0;
    int classes = 0;
    std::string policy = "square";
    int trials = 1000;
    std::uint64_t seed = 0;
    std::string objective = "total";
    std::string metric = "hamming";
    std::string out;
};

int run_search(const SearchArgs& a) {
    SearchConfig config;
    config.trials = a.trials;
    config.seed = a.seed;
    config.metric = parse_metric(a.metric);
    if (a.objective == "total")
        config.objective = SearchConfig::Objective::total;
    else if (a.objective == "row")
        config.objective = SearchConfig::Objective::row;
    else
        throw usage_error("objective must be total or row");
    const FactoryResult result =
        random_matrix(a.base, a.classes, parse_policy(a.policy), config);
    if (!a.out.empty())
        write_outputs(result.matrix, result.provenance, a.out);
    else
        std::cout << to_text(result.matrix);
    std::cout << report_line(result.report) << "\n";
    return 0;
}

// ----- verify ---------------------------------------------------------

struct VerifyArgs {
    bool theorem12 = false;
    bool conjecture = false;
    bool composite_demo = false;
    int base = 2;
    int k = 0;
    int n = 0;
};

int run_verify(const VerifyArgs& a) {
    const int chosen = int(a.theorem12) + int(a.conjecture) + int(a.composite_demo);
    if (chosen != 1)
        throw usage_error("choose exactly one of --theorem12, --conjecture, --composite-demo");

    if (a.theorem12) {
        if (a.k < 1) throw usage_error("--theorem12 needs --base and --k");
        const TheoremReport r = check_theorem12(BasePrime(a.base), a.k);
        if (r.pass) {
            std::cout << "theorem12 base=" << a.base << " k=" << a.k
                      << ": PASS d_r=d_c=" << r.d_r << "\n";
            return 0;
        }
        std::cout << "theorem12 base=" << a.base << " k=" << a.k << ": FAIL "
                  << r.violation << "\n";
        throw violation_found{};
    }

    if (a.conjecture) {
        if (a.n < 2) throw usage_error("--conjecture needs --n");
        const ExhaustiveResult r = exhaustive_max_dT(a.base, a.n);
        std::cout << "max d_T = " << r.max_d_t << " over " << r.enumerated << " base-"
                  << a.base << " matrices of dimension " << a.n << "\n";
        std::cout << "witness:\n" << to_text(r.witness);
        if (a.base == 2 && a.n >= 3) {
            const long bound = binary_total_distance_bound(a.n);
            if (r.max_d_t > bound) {
                std::cout << "bound " << bound << " VIOLATED\n";
                throw violation_found{};
            }
            std::cout << "bound " << bound
                      << (r.max_d_t == bound ? " attained" : " not attained") << "\n";
        }
        return 0;
    }

    // Composite demonstration: the distance formula must fail at N=4, k=2.
    const CodingMatrix m = build_mk_unchecked(4, 2);
    const DistanceReport r = distance_report(m, DistanceMetric::kronecker);
    const long formula = 2 * 3 * 4;  // 2 ((N-1)/N) N^k at N=4, k=2
    std::cout << "composite base 4, k=2: d_T = " << r.d_t
              << ", the prime-base formula gives " << formula << "\n";
    if (r.d_t == formula) {
        std::cout << "unexpected: composite base met the prime-base distance\n";
        throw violation_found{};
    }
    std::cout << "confirmed: the construction is not optimal for composite bases\n";
    return 0;
}

// ----- eval -----------------------------------------------------------

struct EvalArgs {
    std::string data;
    std::string format = "csv";
    int label_column = -1;
    bool header = false;
    std::string name;
    int base = 0;
    std::string policy = "square";
    std::string strategy = "det";
    std::string learner = "dt";
    int folds = 10;
    std::uint64_t seed = 0;
    int trials = 1000;
    std::string objective = "total";
    std::string metric = "hamming";
    bool per_fold = false;
};

CodingMatrix build_eval_matrix(const EvalArgs& a, int classes) {
    if (a.strategy == "det")
        return deterministic_matrix(BasePrime(a.base), classes, parse_policy(a.policy))
            .matrix;
    if (a.strategy != "rand") throw usage_error("strategy must be det or rand");
    SearchConfig config;
    config.trials = a.trials;
    config.seed = a.seed;
    config.metric = parse_metric(a.metric);
    config.objective = a.objective == "row" ? SearchConfig::Objective::row
                                            : SearchConfig::Objective::total;
    return random_matrix(a.base, classes, parse_policy(a.policy), config).matrix;
}

int run_eval(const EvalArgs& a) {
    Dataset data;
    if (a.format == "csv")
        data = load_csv(a.data, a.label_column, a.header, a.name);
    else if (a.format == "sparse")
        data = load_sparse(a.data, a.name);
    else
        throw usage_error("format must be csv or sparse");

    const CodingMatrix codebook = build_eval_matrix(a, data.classes);
    LearnerSpec spec;
    if (a.learner == "dt")
        spec = LearnerSpec::decision_tree();
    else if (a.learner == "centroid")
        spec = LearnerSpec::nearest_centroid();
    else
        throw usage_error("learner must be dt or centroid");

    const CvResult r = evaluate_cv(data, codebook, spec, a.folds, a.seed);
    std::cout << data.name << "\t" << a.base << "\t" << parse_policy(a.policy).name()
              << "\t" << spec.name() << "\t" << format_accuracy(r.mean) << "\t"
              << format_accuracy(r.stddev) << "\n";
    if (a.per_fold) {
        std::cout << "folds";
        for (double acc : r.per_fold) std::cout << "\t" << format_accuracy(acc);
        std::cout << "\n";
    }
    return 0;
}

// ----- tables ---------------------------------------------------------

struct TablesArgs {
    std::string which;
    std::vector<std::string> datasets;
    std::vector<int> bases{2, 3, 5, 7, 11, 13};
    std::string out = ".";
    std::string data_dir = "data";
    int trials = 1000;
    std::uint64_t seed = 0;
    std::string learner = "dt";
    int folds = 10;
};

const std::map<std::string, int>& dataset_classes() {
    static const std::map<std::string, int> table{
        {"pendigits", 10}, {"usps", 10},   {"vowel", 11},
        {"letters", 26},   {"auslan", 95}, {"aloi", 1000},
    };
    return table;
}

int run_tables(const TablesArgs& a) {
    if (a.which != "distances" && a.which != "accuracy")
        throw usage_error("--which must be distances or accuracy");
    std::filesystem::create_directories(a.out);
    for (const std::string& name : a.datasets) {
        const auto it = dataset_classes().find(name);
        if (it == dataset_classes().end()) {
            std::cerr << "warning: unknown dataset '" << name << "', skipped\n";
            continue;
        }
        const int classes = it->second;
        if (a.which == "distances") {
            std::ofstream out(std::filesystem::path(a.out) / (name + "_distances.txt"));
            out << "# " << name << "  c=" << classes << "  square matrices, best of "
                << a.trials << " random trials, seed " << a.seed << "\n";
            out << "N\tn_k\tdet_d_r\tdet_d_T\trand_d_r\trand_d_T\n";
            for (int base : a.bases) {
                const FactoryResult det = deterministic_matrix(BasePrime(base), classes,
                                                               DimensionPolicy::square());
                SearchConfig config;
                config.trials = a.trials;
                config.seed = a.seed;
                const FactoryResult rand =
                    random_matrix(base, classes, DimensionPolicy::square(), config);
                long long nk = 1;
                for (int t = 0; t < det.provenance.k; ++t) nk *= base;
                out << base << "\t" << nk << "\t" << det.report.d_r << "\t"
                    << det.report.d_t << "\t" << rand.report.d_r << "\t"
                    << rand.report.d_t << "\n";
            }
        } else {
            const auto csv = std::filesystem::path(a.data_dir) / (name + ".csv");
            if (!std::filesystem::exists(csv)) {
                std::cerr << "warning: " << csv.string() << " not found, table skipped\n";
                continue;
            }
            const Dataset data = load_csv(csv, -1, false, name);
            LearnerSpec spec = a.learner == "centroid" ? LearnerSpec::nearest_centroid()
                                                       : LearnerSpec::decision_tree();
            std::ofstream out(std::filesystem::path(a.out) / (name + "_accuracy.txt"));
            out << "# " << name << "  c=" << data.classes << "  square matrices, "
                << spec.name() << ", " << a.folds << "-fold CV, seed " << a.seed << "\n";
            out << "N\tdet_mean\tdet_std\trand_mean\trand_std\n";
            for (int base : a.bases) {
                const CodingMatrix det =
                    deterministic_matrix(BasePrime(base), data.classes,
                                         DimensionPolicy::square())
                        .matrix;
                SearchConfig config;
                config.trials = a.trials;
                config.seed = a.seed;
                const CodingMatrix rand =
                    random_matrix(base, data.classes, DimensionPolicy::square(), config)
                        .matrix;
                const CvResult det_cv = evaluate_cv(data, det, spec, a.folds, a.seed);
                const CvResult rand_cv = evaluate_cv(data, rand, spec, a.folds, a.seed);
                out << base << "\t" << format_accuracy(det_cv.mean) << "\t"
                    << format_accuracy(det_cv.stddev) << "\t"
                    << format_accuracy(rand_cv.mean) << "\t"
                    << format_accuracy(rand_cv.stddev) << "\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic N-ary coding matrices for ECOC ensembles"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "construct a deterministic matrix");
    gen_cmd->add_option("--base", gen.base, "prime alphabet size")->required();
    gen_cmd->add_option("--k", gen.k, "family index; emits the full N^k matrix");
    gen_cmd->add_option("--classes", gen.classes, "class count for the truncation pipeline");
    gen_cmd->add_option("--policy", gen.policy, "half|square|double|<width>");
    gen_cmd->add_option("--out", gen.out, "matrix file path (.meta sidecar written too)");

    DistArgs dist;
    CLI::App* dist_cmd = app.add_subcommand("dist", "distance report for a matrix file");
    dist_cmd->add_option("--matrix", dist.matrix, "matrix file")->required();
    dist_cmd->add_option("--metric", dist.metric, "hamming|absolute");

    SearchArgs search;
    CLI::App* search_cmd = app.add_subcommand("search", "best-of-T random matrix search");
    search_cmd->add_option("--base", search.base, "alphabet size (composites allowed)")
        ->required();
    search_cmd->add_option("--classes", search.classes, "class count")->required();
    search_cmd->add_option("--policy", search.policy, "half|square|double|<width>");
    search_cmd->add_option("--trials", search.trials, "candidates to draw");
    search_cmd->add_option("--seed", search.seed, "root seed");
    search_cmd->add_option("--objective", search.objective, "total|row");
    search_cmd->add_option("--metric", search.metric, "hamming|absolute");
    search_cmd->add_option("--out", search.out, "matrix file path");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification oracle");
    verify_cmd->add_flag("--theorem12", verify.theorem12, "check the distance theorem");
    verify_cmd->add_flag("--conjecture", verify.conjecture,
                         "exhaustive total-distance maximum");
    verify_cmd->add_flag("--composite-demo", verify.composite_demo,
                         "show the composite-base counterexample");
    verify_cmd->add_option("--base", verify.base, "alphabet size");
    verify_cmd->add_option("--k", verify.k, "family index");
    verify_cmd->add_option("--n", verify.n, "matrix dimension to enumerate");

    EvalArgs eval;
    CLI::App* eval_cmd = app.add_subcommand("eval", "cross-validated ensemble accuracy");
    eval_cmd->add_option("--data", eval.data, "dataset file")->required();
    eval_cmd->add_option("--format", eval.format, "csv|sparse");
    eval_cmd->add_option("--label-column", eval.label_column, "label column, -1 = last");
    eval_cmd->add_flag("--header", eval.header, "skip the first csv line");
    eval_cmd->add_option("--name", eval.name, "dataset name for the results row");
    eval_cmd->add_option("--base", eval.base, "alphabet size")->required();
    eval_cmd->add_option("--policy", eval.policy, "half|square|double|<width>");
    eval_cmd->add_option("--strategy", eval.strategy, "det|rand");
    eval_cmd->add_option("--learner", eval.learner, "dt|centroid");
    eval_cmd->add_option("--folds", eval.folds, "cross-validation folds");
    eval_cmd->add_option("--seed", eval.seed, "root seed");
    eval_cmd->add_option("--trials", eval.trials, "random-search candidates");
    eval_cmd->add_option("--objective", eval.objective, "total|row");
    eval_cmd->add_option("--metric", eval.metric, "hamming|absolute");
    eval_cmd->add_flag("--per-fold", eval.per_fold, "also print per-fold accuracies");

    TablesArgs tables;
    CLI::App* tables_cmd = app.add_subcommand("tables", "emit distance/accuracy tables");
    tables_cmd->add_option("--which", tables.which, "distances|accuracy")->required();
    tables_cmd->add_option("--datasets", tables.datasets, "dataset names");
    tables_cmd->add_option("--bases", tables.bases, "alphabet sizes");
    tables_cmd->add_option("--out", tables.out, "output directory");
    tables_cmd->add_option("--data-dir", tables.data_dir, "directory with <name>.csv files");
    tables_cmd->add_option("--trials", tables.trials, "random-search candidates");
    tables_cmd->add_option("--seed", tables.seed, "root seed");
    tables_cmd->add_option("--learner", tables.learner, "dt|centroid");
    tables_cmd->add_option("--folds", tables.folds, "cross-validation folds");

    try {
        app.parse(argc, argv);
        if (gen_cmd->parsed()) return run_gen(gen);
        if (dist_cmd->parsed()) return run_dist(dist);
        if (search_cmd->parsed()) return run_search(search);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (eval_cmd->parsed()) return run_eval(eval);
        if (tables_cmd->parsed()) return run_tables(tables);
        throw usage_error("no subcommand given");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const violation_found&) {
        return 1;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
