#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <recon/Graph.hpp>
#include <recon/GraphTools.hpp>
#include <recon/PowerLawFit.hpp>
#include <recon/Random.hpp>

namespace recon {

enum class ModelKind { ER, BA, CL, ESMC, RMAT };

/// "er", "ba", "cl", "esmc", "rmat"; nullopt for anything else.
std::optional<ModelKind> parseModelKind(std::string_view name);
std::string_view modelName(ModelKind kind);

struct ErParams {
    count n = 0;
    double p = 0;
};

struct BaParams {
    count n = 0;
    count k = 1;
};

struct ClParams {
    DegreeSequence degrees;
};

struct EsmcParams {
    DegreeSequence degrees;
};

/// Row-major 2x2 stochastic initiator (a, b; c, d).
struct Initiator {
    double a = 0.25, b = 0.25, c = 0.25, d = 0.25;

    /// Fitted on fb-Caltech36 with 50 kronfit iterations.
    static Initiator facebookPreset();
    /// Uniform draw from the probability simplex.
    static Initiator random(Rng &rng);
    /// Four comma-separated reals, e.g. "0.57,0.19,0.19,0.05". Throws on bad input.
    static Initiator parse(std::string_view text);

    /// Throws std::invalid_argument unless all entries are >= 0 and sum to 1 within 1e-6.
    void validate() const;
};

enum class InitiatorSource { Preset, Random, Explicit };

struct RmatParams {
    count scale = 0;      // s: 2^s nodes before deletion
    count edgeFactor = 1; // e: e * 2^s edge draws
    Initiator initiator;
    InitiatorSource source = InitiatorSource::Preset;
    count targetNodes = 1; // nodes kept after deletion
};

using ModelParams = std::variant<ErParams, BaParams, ClParams, EsmcParams, RmatParams, PowerLawFit, CommunityFit>;

struct FitOptions {
    InitiatorSource initiatorSource = InitiatorSource::Preset;
    std::optional<Initiator> initiator; // required for Explicit
    std::uint64_t seed = 42;            // for Random
};

/**
 * Parameters of `kind` fitted to g and scaled by x:
 *   ER   n' = x n, p = 2m / (x n (n - 1))
 *   BA   n' = x n, k = floor(m / n)   (at least 1)
 *   CL   x-fold concatenation of the degree sequence (likewise ESMC)
 *   RMAT s = ceil(log2(x n)), e = floor(m / n) (at least 1), n_r = x n
 * Requires n >= 2 and m >= 1.
 */
ModelParams fit(const Graph &g, ModelKind kind, count x, const FitOptions &options = {});

/// Reference-only fits for generators that are not built here.
struct HudgReference {
    count n = 0;
    double averageDegree = 0;
    double exponent = 2.1; // positive convention, at least 2.1
};

struct LfrReference {
    count n = 0;
    PowerLawFit degrees;
    CommunityFit communities;
    double mixing = 0;
};

HudgReference fitHudgReference(const Graph &g, count x);
LfrReference fitLfrReference(const Graph &g, count x, std::uint64_t seed);

class GraphicalityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool isGraphical(std::span<const count> degrees);

/// Deterministic realization of a graphical sequence; throws GraphicalityError.
Graph havelHakimi(std::span<const count> degrees);

/// max(d)^2 <= sum(d), under which no Chung-Lu probability needs clamping.
bool chungLuValid(std::span<const count> degrees);

Graph generateErdosRenyi(const ErParams &params, std::uint64_t seed);
/// Growth from a (k+1)-clique; m = C(k+1, 2) + (n - k - 1) k.
Graph generateBarabasiAlbert(const BaParams &params, std::uint64_t seed);
Graph generateChungLu(const ClParams &params, std::uint64_t seed);
/// Havel-Hakimi realization followed by 10 m switch attempts.
Graph generateEdgeSwitchingMarkovChain(const EsmcParams &params, std::uint64_t seed);
Graph generateRmat(const RmatParams &params, std::uint64_t seed);

/// Dispatches on the generative alternatives of ModelParams; fit-only
/// alternatives throw std::invalid_argument.
Graph generateModel(const ModelParams &params, std::uint64_t seed);

} // namespace recon
