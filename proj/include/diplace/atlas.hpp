#pragma once

// Minimal witnesses for the 22 values born by day 2.

#include <stdexcept>
#include <string>
#include <vector>

#include "diplace/digraph.hpp"
#include "diplace/game.hpp"

namespace diplace {

struct AtlasEntry {
    std::string name;    // value as an expression, e.g. "{0,*|-1}"
    std::size_t drawn;   // vertex count of the drawing
    DigraphGame digraph;
};

const std::vector<AtlasEntry>& atlas();

struct AtlasCheck {
    std::string name;
    Game expected;
    Game actual;
    std::size_t vertices;
    std::size_t drawn;
    bool pass;
};

struct AtlasReport {
    std::vector<AtlasCheck> entries;
    bool all_pass() const;
};

class AtlasMismatch : public std::runtime_error {
public:
    explicit AtlasMismatch(AtlasReport report);
    const AtlasReport& report() const { return report_; }

private:
    AtlasReport report_;
};

/// Evaluates every entry against its target; never throws.
AtlasReport check_atlas();
/// As check_atlas, but throws AtlasMismatch naming the failing entries.
AtlasReport verify_atlas();

}  // namespace diplace
