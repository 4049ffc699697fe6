// recon: command-line front end for fitting, replicating, comparing and
// benchmarking graphs.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <recon/Benchmark.hpp>
#include <recon/Errors.hpp>
#include <recon/GraphIO.hpp>
#include <recon/Metrics.hpp>
#include <recon/Models.hpp>
#include <recon/PowerLawFit.hpp>
#include <recon/Random.hpp>
#include <recon/ReCoN.hpp>
#include <recon/Reports.hpp>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace recon;

namespace {

constexpr int exitOk = 0;
constexpr int exitIo = 1;
constexpr int exitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph loadGraph(const std::string &path) {
    try {
        auto result = readEdgeListFile(path);
        if (result.selfLoopsDropped + result.duplicatesDropped > 0)
            std::cerr << path << ": dropped " << result.selfLoopsDropped << " self-loops and "
                      << result.duplicatesDropped << " duplicate edges\n";
        return std::move(result.graph);
    } catch (const ParseError &e) {
        throw IoError(path + ": " + e.what());
    } catch (const std::runtime_error &e) {
        throw IoError(e.what());
    }
}

std::optional<Partition> loadPartition(const Graph &g, const std::string &path) {
    if (path.empty())
        return std::nullopt;
    std::vector<recon::index> assignment;
    try {
        assignment = readPartitionFile(path);
    } catch (const ParseError &e) {
        throw IoError(path + ": " + e.what());
    } catch (const std::runtime_error &e) {
        throw IoError(e.what());
    }
    try {
        return Partition(g, std::move(assignment));
    } catch (const std::invalid_argument &e) {
        throw IoError(path + ": " + e.what());
    }
}

std::ofstream openOutput(const fs::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    return out;
}

// Writes to `path`, or to stdout when it is empty.
void emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    auto out = openOutput(path);
    out << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

double millisecondsSince(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Common options of the generating commands.
struct ModelOptions {
    std::string model = "recon";
    std::string initiator = "preset";
    std::string partition;
    unsigned threads = 1;
};

void addModelOptions(CLI::App *cmd, ModelOptions &o, const std::string &models) {
    cmd->add_option("--model", o.model, models)->capture_default_str();
    cmd->add_option("--initiator", o.initiator, "RMAT initiator: preset, random or a,b,c,d")
        ->capture_default_str();
    cmd->add_option("--partition", o.partition, "Community file for recon (one id per node)");
    cmd->add_option("--threads", o.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

FitOptions fitOptions(const ModelOptions &o, std::uint64_t seed) {
    FitOptions f;
    f.seed = deriveSeed(seed, 11);
    if (o.initiator == "preset") {
        f.initiatorSource = InitiatorSource::Preset;
    } else if (o.initiator == "random") {
        f.initiatorSource = InitiatorSource::Random;
    } else {
        try {
            f.initiator = Initiator::parse(o.initiator);
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--initiator: ") + e.what());
        }
        f.initiatorSource = InitiatorSource::Explicit;
    }
    return f;
}

bool isRecon(const std::string &model) { return model == "recon"; }

ModelKind requireModel(const std::string &model) {
    auto kind = parseModelKind(model);
    if (!kind)
        throw UsageError("unknown model '" + model + "' (expected recon, er, ba, cl, esmc or rmat)");
    return *kind;
}

json reconMetadata(const ReconModel &model, const Replica &replica) {
    json j;
    j["k"] = model.numberOfCommunities();
    j["intra_edges"] = model.intraEdges.size();
    j["inter_edges"] = model.interEdges.size();
    j["forbidden_after_global"] = replica.forbiddenAfterGlobal;
    j["residual_forbidden"] = replica.residualForbidden;
    j["rewiring_passes"] = replica.rewiringPasses;
    return j;
}

struct Generated {
    Graph graph;
    json metadata;
};

Generated generateReplica(const Graph &g, const ModelOptions &o, count scale, std::uint64_t seed,
                          const std::optional<Partition> &partition, double &msFit, double &msGenerate) {
    Generated result;
    if (isRecon(o.model)) {
        auto start = std::chrono::steady_clock::now();
        auto model = fitRecon(g, partition, seed);
        msFit = millisecondsSince(start);
        start = std::chrono::steady_clock::now();
        GenerateOptions options;
        options.threads = o.threads;
        auto replica = generate(model, scale, seed, options);
        msGenerate = millisecondsSince(start);
        result.metadata = reconMetadata(model, replica);
        result.graph = std::move(replica.graph);
        return result;
    }
    const auto kind = requireModel(o.model);
    auto start = std::chrono::steady_clock::now();
    auto params = fit(g, kind, scale, fitOptions(o, seed));
    msFit = millisecondsSince(start);
    start = std::chrono::steady_clock::now();
    result.graph = generateModel(params, seed);
    msGenerate = millisecondsSince(start);
    result.metadata["params"] = toJson(params);
    return result;
}

// replicate ------------------------------------------------------------------

struct ReplicateArgs {
    std::string input;
    std::string out = "replica.el";
    count scale = 1;
    std::uint64_t seed = 42;
    ModelOptions model;
};

int runReplicate(const ReplicateArgs &a) {
    if (!isRecon(a.model.model))
        requireModel(a.model.model);
    fitOptions(a.model, a.seed);
    const Graph g = loadGraph(a.input);
    auto partition = isRecon(a.model.model) ? loadPartition(g, a.model.partition) : std::nullopt;

    double msFit = 0, msGenerate = 0;
    auto generated = generateReplica(g, a.model, a.scale, a.seed, partition, msFit, msGenerate);

    json meta;
    meta["schema_version"] = reportSchemaVersion;
    meta["command"] = "replicate";
    meta["model"] = a.model.model;
    meta["input"] = fs::path(a.input).filename().string();
    meta["scale"] = a.scale;
    meta["seed"] = a.seed;
    meta["original"] = {{"n", g.numberOfNodes()}, {"m", g.numberOfEdges()}};
    meta["replica"] = {{"n", generated.graph.numberOfNodes()}, {"m", generated.graph.numberOfEdges()}};
    for (auto &[key, value] : generated.metadata.items())
        meta[key] = value;

    writeEdgeListFile(a.out, generated.graph);
    emit(a.out + ".json", dump(meta));
    json timings{{"schema_version", reportSchemaVersion}, {"ms_fit", msFit}, {"ms_generate", msGenerate}};
    emit(a.out + ".timings.json", dump(timings));
    return exitOk;
}

// fit ------------------------------------------------------------------------

struct FitArgs {
    std::string input;
    std::string out;
    count scale = 1;
    std::uint64_t seed = 42;
    ModelOptions model;
};

int runFit(const FitArgs &a) {
    const auto &name = a.model.model;
    const bool reference = name == "lfr" || name == "hudg";
    if (!isRecon(name) && !reference)
        requireModel(name);
    fitOptions(a.model, a.seed);
    const Graph g = loadGraph(a.input);

    json j;
    j["schema_version"] = reportSchemaVersion;
    j["command"] = "fit";
    j["model"] = name;
    j["scale"] = a.scale;
    j["seed"] = a.seed;
    if (isRecon(name)) {
        auto model = fitRecon(g, loadPartition(g, a.model.partition), a.seed);
        j["params"] = {{"n", model.n},
                       {"k", model.numberOfCommunities()},
                       {"intra_edges", model.intraEdges.size()},
                       {"inter_edges", model.interEdges.size()},
                       {"community_sizes", model.communitySizes}};
    } else if (name == "lfr") {
        j["params"] = toJson(fitLfrReference(g, a.scale, a.seed));
    } else if (name == "hudg") {
        j["params"] = toJson(fitHudgReference(g, a.scale));
    } else {
        j["params"] = toJson(fit(g, requireModel(name), a.scale, fitOptions(a.model, a.seed)));
    }
    emit(a.out, dump(j));
    return exitOk;
}

// profile / compare ----------------------------------------------------------

struct ProfileArgs {
    std::string input;
    std::string out;
    std::uint64_t seed = 42;
};

int runProfile(const ProfileArgs &a) {
    const Graph g = loadGraph(a.input);
    ProfileOptions options;
    options.seed = a.seed;
    options.diameter.seed = a.seed;
    json j;
    j["schema_version"] = reportSchemaVersion;
    j["input"] = fs::path(a.input).filename().string();
    j["seed"] = a.seed;
    j["features"] = toJson(profile(g, options));
    emit(a.out, dump(j));
    return exitOk;
}

struct CompareArgs {
    std::string original;
    std::string replica;
    std::string out;
    std::uint64_t seed = 42;
    unsigned threads = 1;
};

int runCompare(const CompareArgs &a) {
    const Graph original = loadGraph(a.original);
    const Graph replica = loadGraph(a.replica);
    ProfileOptions profileOptions;
    profileOptions.seed = a.seed;
    profileOptions.diameter.seed = a.seed;
    CentralityOptions centrality;
    centrality.seed = a.seed;
    centrality.threads = a.threads;

    const auto fo = profile(original, profileOptions);
    const auto fr = profile(replica, profileOptions);
    auto report = compare(fo, fr);
    report.originalCentrality = summarize(centralityDistributions(original, centrality));
    report.replicaCentrality = summarize(centralityDistributions(replica, centrality));

    json j;
    j["schema_version"] = reportSchemaVersion;
    j["seed"] = a.seed;
    j["original"] = toJson(fo);
    j["replica"] = toJson(fr);
    j["comparison"] = toJson(report);
    if (a.out.empty()) {
        std::cout << dump(j);
        return exitOk;
    }
    emit(a.out + ".json", dump(j));
    std::ostringstream csv;
    writeComparisonCsv(csv, report);
    emit(a.out + ".csv", csv.str());
    return exitOk;
}

// scaling-study --------------------------------------------------------------

struct StudyArgs {
    std::string input;
    std::string out;
    std::string scales = "1,2,4,8,16,32";
    count seeds = 1;
    std::uint64_t seed = 42;
    ModelOptions model;
};

std::vector<count> parseScales(const std::string &text) {
    std::vector<count> scales;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || value < 1)
            throw UsageError("--scales: '" + item + "' is not a positive integer");
        scales.push_back(static_cast<count>(value));
    }
    if (scales.empty())
        throw UsageError("--scales: empty scale list");
    return scales;
}

int runStudy(const StudyArgs &a) {
    const auto scales = parseScales(a.scales);
    if (!isRecon(a.model.model))
        requireModel(a.model.model);
    if (a.seeds < 1)
        throw UsageError("--seeds must be at least 1");
    fitOptions(a.model, a.seed);
    const Graph g = loadGraph(a.input);
    auto partition = isRecon(a.model.model) ? loadPartition(g, a.model.partition) : std::nullopt;

    // the ReCoN fit does not depend on the scale, so it is done once
    std::optional<ReconModel> reconModel;
    if (isRecon(a.model.model))
        reconModel = fitRecon(g, partition, a.seed);

    std::ostringstream csv;
    writeFeatureCsvHeader(csv);
    for (count scale : scales) {
        for (count i = 0; i < a.seeds; ++i) {
            const std::uint64_t runSeed = a.seed + i;
            Graph replica;
            if (reconModel) {
                GenerateOptions options;
                options.threads = a.model.threads;
                replica = generate(*reconModel, scale, runSeed, options).graph;
            } else {
                auto params = fit(g, requireModel(a.model.model), scale, fitOptions(a.model, runSeed));
                replica = generateModel(params, runSeed);
            }
            ProfileOptions options;
            options.seed = runSeed;
            options.diameter.seed = runSeed;
            writeFeatureCsvRow(csv, a.model.model, scale, runSeed, profile(replica, options));
        }
    }
    emit(a.out, csv.str());
    return exitOk;
}

// bench ----------------------------------------------------------------------

struct BenchArgs {
    std::vector<std::string> inputs;
    std::string out;
    std::uint64_t seed = 42;
    count reps = 1;
};

int runBench(const BenchArgs &a) {
    std::vector<Graph> graphs;
    for (const auto &path : a.inputs)
        graphs.push_back(loadGraph(path));
    std::ostringstream csv;
    writeBenchmarkHeader(csv);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto run = timedSuite(graphs[i], a.seed, a.reps);
        if (!run.diagnostic.empty())
            std::cerr << a.inputs[i] << ": " << run.diagnostic << "\n";
        writeBenchmarkRows(csv, fs::path(a.inputs[i]).filename().string(), run, a.seed);
    }
    emit(a.out, csv.str());
    return exitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Graph replication, model fitting and benchmarking"};
    app.require_subcommand(1);

    const std::string generators = "recon, er, ba, cl, esmc or rmat";

    ReplicateArgs rep;
    auto *replicateCmd = app.add_subcommand("replicate", "Write a scaled replica and its metadata");
    replicateCmd->add_option("input", rep.input, "Edge list")->required();
    replicateCmd->add_option("--scale,-x", rep.scale, "Scale factor")->capture_default_str()->check(CLI::PositiveNumber);
    replicateCmd->add_option("--seed", rep.seed, "Master seed")->capture_default_str();
    replicateCmd->add_option("--out,-o", rep.out, "Output edge list; metadata goes to <out>.json")
        ->capture_default_str();
    addModelOptions(replicateCmd, rep.model, generators);

    FitArgs fitArgs;
    auto *fitCmd = app.add_subcommand("fit", "Print fitted model parameters as JSON");
    fitCmd->add_option("input", fitArgs.input, "Edge list")->required();
    fitCmd->add_option("--scale,-x", fitArgs.scale, "Scale factor")->capture_default_str()->check(CLI::PositiveNumber);
    fitCmd->add_option("--seed", fitArgs.seed, "Master seed")->capture_default_str();
    fitCmd->add_option("--out,-o", fitArgs.out, "Output file (default stdout)");
    addModelOptions(fitCmd, fitArgs.model, generators + ", or the reference fits lfr and hudg");

    ProfileArgs prof;
    auto *profileCmd = app.add_subcommand("profile", "Print the feature vector of a graph");
    profileCmd->add_option("input", prof.input, "Edge list")->required();
    profileCmd->add_option("--seed", prof.seed, "Seed for PLM and diameter sampling")->capture_default_str();
    profileCmd->add_option("--out,-o", prof.out, "Output file (default stdout)");

    CompareArgs cmp;
    auto *compareCmd = app.add_subcommand("compare", "Compare a replica with its original");
    compareCmd->add_option("original", cmp.original, "Original edge list")->required();
    compareCmd->add_option("replica", cmp.replica, "Replica edge list")->required();
    compareCmd->add_option("--seed", cmp.seed, "Seed for PLM and sampling")->capture_default_str();
    compareCmd->add_option("--out,-o", cmp.out, "Write <out>.json and <out>.csv instead of JSON to stdout");
    compareCmd->add_option("--threads", cmp.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

    StudyArgs study;
    auto *studyCmd = app.add_subcommand("scaling-study", "Features of replicas over a range of scales (CSV)");
    studyCmd->add_option("input", study.input, "Edge list")->required();
    studyCmd->add_option("--scales", study.scales, "Comma-separated scale factors")->capture_default_str();
    studyCmd->add_option("--seeds", study.seeds, "Replicas per scale, seeds seed .. seed+seeds-1")
        ->capture_default_str();
    studyCmd->add_option("--seed", study.seed, "First seed")->capture_default_str();
    studyCmd->add_option("--out,-o", study.out, "Output CSV (default stdout)");
    addModelOptions(studyCmd, study.model, generators);

    BenchArgs bench;
    auto *benchCmd = app.add_subcommand("bench", "Time the algorithm suite on each input (CSV)");
    benchCmd->add_option("inputs", bench.inputs, "Edge lists")->required();
    benchCmd->add_option("--seed", bench.seed, "Seed for randomized algorithms")->capture_default_str();
    benchCmd->add_option("--reps", bench.reps, "Timed repetitions per algorithm")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    benchCmd->add_option("--out,-o", bench.out, "Output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exitOk : exitUsage;
    }

    try {
        if (replicateCmd->parsed())
            return runReplicate(rep);
        if (fitCmd->parsed())
            return runFit(fitArgs);
        if (profileCmd->parsed())
            return runProfile(prof);
        if (compareCmd->parsed())
            return runCompare(cmp);
        if (studyCmd->parsed())
            return runStudy(study);
        if (benchCmd->parsed())
            return runBench(bench);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exitUsage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exitIo;
    }
    return exitUsage;
}
