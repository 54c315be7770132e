#pragma once

#include "vwref/localize.hpp"
#include "vwref/qseries.hpp"
#include "vwref/wallcross.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vw {

/// One atom line of a scenario file; expression fields are kept as source
/// text and evaluated against the ring and integer bindings at run time.
struct AtomSpec {
    enum class Kind { Line, Rank2, Trivial };
    Kind kind = Kind::Trivial;
    std::string c1;      // Line
    std::string ch, det; // Rank2
    std::string weight;  // integer expression
    std::string count = "1";
    int sign = +1;
    bool operator==(const AtomSpec&) const = default;
};

/// Payload of a LOCALIZE scenario: ring selector plus the fixed-locus data.
/// When nvir_is_dual is set the nvir block lists the dual bundle's atoms
/// (the form the fixed-locus computations naturally produce) and is
/// dualized on load.
struct LocalizeSpec {
    std::string ring;                // point | curve | cxc | surface | custom
    std::string ring_arg;            // genus: symbol name or integer literal
    std::string prefactor = "1";
    std::vector<AtomSpec> numerator;
    bool nvir_is_dual = false;
    std::vector<AtomSpec> nvir;
    std::string tangent = "0";
    bool operator==(const LocalizeSpec&) const = default;
};

/// Payload of a generic wall-crossing scenario: a charge profile plus the
/// invariant map, entered directly in the file.
struct WallcrossSpec {
    int divisibility = 1;
    bool hzero = true;
    std::vector<std::pair<int, long>> chi;          // multiple -> Euler characteristic
    std::vector<std::pair<int, std::string>> vw;    // multiple -> invariant expression
    bool operator==(const WallcrossSpec&) const = default;
};

struct BindSpec {
    std::string name;
    long value = 0;    // default
    bool operator==(const BindSpec&) const = default;
};

struct GoldenSpec {
    std::vector<std::pair<std::string, long>> binds;   // constraints, may be empty
    std::string value;                                 // canonical RatFunc string
    bool operator==(const GoldenSpec&) const = default;
};

struct Scenario {
    enum class Kind { Localize, Series, Wallcross, Identity };
    std::string name;
    std::string title;
    Kind kind = Kind::Localize;
    std::vector<BindSpec> binds;
    LocalizeSpec loc;     // Kind::Localize
    WallcrossSpec wc;     // Kind::Wallcross with op "desk"
    std::string op;       // other kinds: delta | k3 | gentype | pairs_pg | roundtrip |
                          //              desk | eagon_northcott | quantum
    std::vector<GoldenSpec> goldens;

    Bindings defaults() const;
    bool operator==(const Scenario&) const = default;
};

/// Parsed scenario file: scenario blocks plus any custom ring blocks.
struct ScenarioFile {
    std::vector<Scenario> scenarios;
    std::vector<std::string> ring_blocks;  // raw "ring name { ... }" texts
};

ScenarioFile parse_scenario_text(const std::string& text);
std::string serialize_scenario(const Scenario& s);

/// The registry preloaded with the built-in scenarios (the text returned by
/// builtin_scenario_text()); additional files may be loaded on top.
class ScenarioRegistry {
public:
    static ScenarioRegistry& instance();

    void load_text(const std::string& text);
    const Scenario& get(const std::string& name) const;  // throws UnknownScenario
    std::vector<std::string> names() const;
    RingPtr ring_for(const LocalizeSpec& spec) const;

private:
    ScenarioRegistry();
    std::map<std::string, Scenario> scenarios_;
    std::map<std::string, RingPtr> custom_rings_;
};

const char* builtin_scenario_text();

/// Evaluates a LOCALIZE scenario's payload into engine input.
FixedLocusData build_localize_data(const Scenario& s, const Bindings& binds);

struct CheckLine {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SeriesRow {
    int q_exp = 0;
    std::string canonical;
    std::string t1;
    bool symmetric = false;
};

/// Structured result of one scenario run.
struct RunResult {
    std::string scenario;
    Bindings bindings;
    std::optional<std::string> result_canonical;
    std::optional<std::string> t1_value;
    std::optional<bool> symmetric;
    std::optional<bool> golden_match;
    bool origin_pole = false;
    std::vector<SeriesRow> series;
    std::vector<CheckLine> checks;

    bool ok() const;
    std::string to_json() const;
    std::string to_text(bool quiet = false) const;
};

/// Runs one scenario with the given binding overrides on top of defaults.
RunResult run_scenario(const std::string& name, const Bindings& overrides = {});

/// Runs every registered scenario (name-ordered) with default bindings;
/// filter keeps scenarios whose name contains the substring.
std::vector<RunResult> check_all(const std::string& filter = "");

} // namespace vw
