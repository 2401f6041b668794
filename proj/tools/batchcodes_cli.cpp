// batchcodes: analyze, plan, construct and search binary batch / PIR / LRC codes.
//
// Exit status: 0 success or servable, 1 unservable or not found, 2 usage,
// parse or input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "batchcodes/bounds.hpp"
#include "batchcodes/constructions.hpp"
#include "batchcodes/errors.hpp"
#include "batchcodes/matrix_io.hpp"
#include "batchcodes/query.hpp"
#include "batchcodes/report.hpp"
#include "batchcodes/search.hpp"

namespace {

using namespace batchcodes;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

SizeCap cap_from(const std::optional<std::size_t>& r) {
    return r ? SizeCap::at_most(*r) : SizeCap::unbounded();
}

LinearCode load(const std::string& path) { return LinearCode(read_matrix_file(path)); }

struct AnalyzeArgs {
    std::string file;
    std::vector<std::size_t> caps;
    std::vector<std::string> queries;
    bool json = false;
};

int run_analyze(const AnalyzeArgs& args) {
    const LinearCode code = load(args.file);
    std::vector<SizeCap> caps;
    if (args.caps.empty()) {
        caps = default_profile_caps();
    } else {
        for (const std::size_t r : args.caps) caps.push_back(SizeCap::at_most(r));
        caps.push_back(SizeCap::unbounded());
    }
    std::vector<Query> queries;
    for (const std::string& q : args.queries) queries.push_back(parse_query(q, code.k()));
    const AnalysisReport report = analyze(code, args.file, caps, queries);
    if (args.json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << render_text(report);
    }
    return kExitOk;
}

struct QueryArgs {
    std::string file;
    std::string query;
    std::optional<std::size_t> r;
    bool json = false;
};

int run_query(const QueryArgs& args) {
    const LinearCode code = load(args.file);
    const Query query = parse_query(args.query, code.k());
    const SizeCap cap = cap_from(args.r);
    const PlanRecord record{query, cap, serve_query(code, query, cap)};
    if (args.json) {
        std::cout << to_json(record).dump(2) << "\n";
    } else {
        std::cout << (record.plan ? render_plan(*record.plan) : "UNSERVABLE") << "\n";
    }
    return record.plan ? kExitOk : kExitNegative;
}

struct ConstructArgs {
    std::string family;
    std::size_t ell = 2;
    std::size_t m = 1;
    std::size_t k = 2;
    std::size_t kappa = 1;
};

int run_construct(const ConstructArgs& args) {
    std::optional<LinearCode> code;
    if (args.family == "subcube") {
        code = subcube(args.ell, args.m);
    } else if (args.family == "simplex") {
        code = simplex(args.m);
    } else if (args.family == "triplicated_parity") {
        code = triplicated_parity(args.k);
    } else if (args.family == "blockwise_subcube_allones") {
        code = blockwise_subcube_allones(args.kappa);
    } else if (args.family == "paired_parity") {
        code = paired_parity(args.k);
    } else if (args.family == "identity") {
        code = identity_code(args.k);
    } else {
        std::cerr << "error: unknown family '" << args.family
                  << "' (expected subcube, simplex, triplicated_parity, blockwise_subcube_allones, "
                     "paired_parity, identity)\n";
        return kExitUsage;
    }
    std::cout << format_matrix(code->generator());
    return kExitOk;
}

struct BoundsArgs {
    BoundInputs inputs;
    std::optional<std::size_t> delta;
    std::optional<std::size_t> n;
    bool json = false;
};

int run_bounds(BoundsArgs args) {
    args.inputs.delta = args.delta;
    args.inputs.n = args.n;
    const auto verdicts = evaluate_parameters(args.inputs);
    if (args.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& v : verdicts) out.push_back(to_json(v));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_text(verdicts);
    }
    return kExitOk;
}

struct SearchArgs {
    std::size_t k = 0;
    std::size_t t = 0;
    std::string mode = "batch";
    std::optional<std::size_t> r;
    std::optional<std::size_t> n_max;
    bool non_systematic = false;
    std::size_t max_k = 5;
    std::size_t max_redundancy = 5;
    bool json = false;
};

int run_search(const SearchArgs& args) {
    SearchOptions options;
    options.r_cap = cap_from(args.r);
    options.systematic_only = !args.non_systematic;
    options.max_k = args.max_k;
    options.max_redundancy = args.max_redundancy;
    const std::size_t n_max = args.n_max.value_or(args.k + std::min<std::size_t>(args.max_redundancy, 5));
    const SearchResult result = min_length(args.k, args.t, parse_search_mode(args.mode), n_max, options);
    if (args.json) {
        std::cout << to_json(result).dump(2) << "\n";
    } else {
        std::cout << render_text(result);
    }
    return result.optimal_n ? kExitOk : kExitNegative;
}

int run_distance(const std::string& file, std::size_t guard) {
    const LinearCode code = load(file);
    std::cout << code.min_distance(guard) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, analyze and certify binary batch, PIR and locally repairable codes"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Profile a code and evaluate every bound");
    analyze_cmd->add_option("file", analyze_args.file, "Generator matrix file ('-' for stdin)")->required();
    analyze_cmd->add_option("-r,--r", analyze_args.caps, "Reconstruction-set cap(s); unbounded is always included");
    analyze_cmd->add_option("-q,--query", analyze_args.queries, "Query to plan, e.g. 1,1,2,2 (repeatable)");
    analyze_cmd->add_flag("--json", analyze_args.json, "Emit the structured report");

    QueryArgs query_args;
    auto* query_cmd = app.add_subcommand("query", "Serve one multiset query");
    query_cmd->add_option("file", query_args.file, "Generator matrix file")->required();
    query_cmd->add_option("query", query_args.query, "Comma-separated 1-based indices")->required();
    query_cmd->add_option("-r,--r", query_args.r, "Reconstruction-set cap");
    query_cmd->add_flag("--json", query_args.json, "Emit JSON");

    ConstructArgs construct_args;
    auto* construct_cmd = app.add_subcommand("construct", "Print a named code's generator matrix");
    construct_cmd->add_option("family", construct_args.family,
                              "subcube | simplex | triplicated_parity | blockwise_subcube_allones | "
                              "paired_parity | identity")
        ->required();
    construct_cmd->add_option("--ell", construct_args.ell, "subcube side length");
    construct_cmd->add_option("--m", construct_args.m, "subcube dimension / simplex order");
    construct_cmd->add_option("--k", construct_args.k, "dimension for parity families and identity");
    construct_cmd->add_option("--kappa", construct_args.kappa, "number of blocks");

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the closed-form bounds for given parameters");
    bounds_cmd->add_option("--k", bounds_args.inputs.k, "dimension")->required();
    bounds_cmd->add_option("--d", bounds_args.inputs.d, "minimum distance")->required();
    bounds_cmd->add_option("--r", bounds_args.inputs.r, "reconstruction-set size / locality")->required();
    bounds_cmd->add_option("--t", bounds_args.inputs.t, "query size")->required();
    bounds_cmd->add_option("--delta", bounds_args.delta, "availability");
    bounds_cmd->add_option("--q", bounds_args.inputs.q, "field size for the Plotkin-type bound");
    bounds_cmd->add_option("--n", bounds_args.n, "code length to certify against");
    bounds_cmd->add_flag("--systematic", bounds_args.inputs.systematic, "code is systematic");
    bounds_cmd->add_flag("--json", bounds_args.json, "Emit JSON");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "Find the shortest systematic batch or PIR code");
    search_cmd->add_option("--k", search_args.k, "dimension")->required();
    search_cmd->add_option("--t", search_args.t, "query size")->required();
    search_cmd->add_option("--mode", search_args.mode, "batch | pir");
    search_cmd->add_option("--r", search_args.r, "reconstruction-set cap");
    search_cmd->add_option("--n-max", search_args.n_max, "largest length to try");
    search_cmd->add_flag("--non-systematic", search_args.non_systematic, "search all full-rank generators");
    search_cmd->add_option("--max-k", search_args.max_k, "guard on k");
    search_cmd->add_option("--max-redundancy", search_args.max_redundancy, "guard on n_max - k");
    search_cmd->add_flag("--json", search_args.json, "Emit JSON");

    std::string distance_file;
    std::size_t distance_guard = kDefaultDistanceGuard;
    auto* distance_cmd = app.add_subcommand("distance", "Minimum Hamming distance by enumeration");
    distance_cmd->add_option("file", distance_file, "Generator matrix file")->required();
    distance_cmd->add_option("--max-k", distance_guard, "enumeration guard on k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_args);
        if (*query_cmd) return run_query(query_args);
        if (*construct_cmd) return run_construct(construct_args);
        if (*bounds_cmd) return run_bounds(bounds_args);
        if (*search_cmd) return run_search(search_args);
        if (*distance_cmd) return run_distance(distance_file, distance_guard);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
