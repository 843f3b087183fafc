#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <json.hpp>

#include "symedge/certify.hpp"
#include "symedge/graph.hpp"
#include "symedge/symbolic.hpp"

namespace symedge {

enum class ConjectureStatus { holds, refuted, unknown, hypothesis_unmet };
const char* to_string(ConjectureStatus s);

enum class Family { cochordal, co_block, co_interval, cond_c, perfect };
std::optional<Family> family_from_string(const std::string& name);
const char* to_string(Family f);
bool in_family(const Graph& g, Family f);

struct FamilyFlags {
    bool cochordal = false;
    bool perfect = false;
    bool co_block = false;
    bool co_proper_interval = false;
    bool condition_c = false;
};
FamilyFlags classify(const Graph& g);

/// Cooperative deadline: long-running checks poll it between stages and
/// settle for `unknown` when it has passed.
struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;

    static Deadline after(double seconds) {
        Deadline d;
        d.at = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds));
        return d;
    }
    static Deadline none() { return Deadline{}; }
    bool expired() const {
        return at.has_value() && std::chrono::steady_clock::now() > *at;
    }
};

struct CheckOptions {
    CertifyStrategy strategy = CertifyStrategy::both;
    Deadline deadline = Deadline::none();
};

/// One graph's verdict for one conjecture; everything needed to replay a
/// refutation is embedded in `evidence`.
struct ConjectureReport {
    std::string graph6;
    int n = 0;
    FamilyFlags flags;
    std::string conjecture;
    int k = 0;
    std::vector<int> gen_degrees;
    std::vector<int> predicted_degrees;
    ConjectureStatus status = ConjectureStatus::unknown;
    nlohmann::ordered_json evidence;
    double wall_ms = 0;

    nlohmann::ordered_json to_json() const;
};

/// reg I^(k) = reg I^k (= 2k) for cochordal graphs: componentwise
/// certification plus the top generator degree, corroborated by a
/// quotients certificate for the ordinary power when within caps.
ConjectureReport check_conjecture_A_cochordal(const Graph& g, int k,
                                              const CheckOptions& opts = {});

/// I^(k) componentwise linear (hypothesis: I(G) has linear resolution,
/// i.e. G cochordal).
ConjectureReport check_conjecture_B(const Graph& g, int k, const CheckOptions& opts = {});

/// I^(k) has linear quotients as a whole ideal; k = 2 uses the recursive
/// construction with search fallback.
ConjectureReport check_conjecture_C(const Graph& g, int k, const CheckOptions& opts = {});

}  // namespace symedge
