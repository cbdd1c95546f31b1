// Size caps for the exact brute-force searches.
#pragma once

namespace stripcolor {

// Exceeding a cap raises ResourceLimitError; there is no approximate fallback.
// Defaults can be overridden with the STRIPCOLOR_CAPS environment variable,
// e.g. STRIPCOLOR_CAPS="clique=50,chromatic=16,ktt=45,longest=14,extensions=9".
struct Caps {
    int clique = 40;      // branch-and-bound clique number
    int chromatic = 15;   // exact chromatic number
    int ktt = 40;         // induced K_{t,t} search
    int longest = 12;     // exhaustive longest index sequence (history size)
    int extensions = 8;   // linear extension enumeration (poset size)
};

// Process-wide caps, initialized once from the environment.
Caps& caps();

// Parses a "key=value,key=value" spec into an existing Caps value.
void apply_caps_spec(Caps& caps, const char* spec);

}  // namespace stripcolor
