// Line-oriented text formats: instances, posets, transcripts, report rows.
// All coordinates are exact rational "p/q" strings and round-trip losslessly.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stripcolor/engine.hpp"
#include "stripcolor/geometry.hpp"
#include "stripcolor/poset.hpp"

namespace stripcolor {

enum class InstanceKind { strip, attached };

struct Instance {
    InstanceKind kind = InstanceKind::strip;
    std::vector<StripObject> strip_objects;  // presentation order
    std::vector<AttachedSegment> attached;
};

std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);  // validates every object

std::string serialize_poset(const Poset& p);
Poset parse_poset(std::string_view text);

// Distinct colors ranked lexicographically, ids starting at 1.
std::vector<int> flatten_colors(std::span<const Color> colors);

template <class Object>
std::string serialize_transcript(const Transcript<Object>& t, std::string_view algorithm) {
    std::vector<int> flat = flatten_colors(t.colors);
    std::string out = "stripcolor-transcript v1 algorithm=";
    out += algorithm;
    out += " n=" + std::to_string(t.objects.size());
    out += " proper=" + std::to_string(t.proper ? 1 : 0);
    out += "\n";
    for (std::size_t i = 0; i < t.objects.size(); ++i) {
        const Color& c = t.colors[i];
        out += "step " + std::to_string(i) + " color " + std::to_string(flat[i]) + " triple " +
               std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.c) +
               " omega " + std::to_string(t.omega_running[i]) + "\n";
    }
    return out;
}

struct ReportRow {
    std::uint64_t seed = 0;
    std::string algorithm;
    int n = 0;
    int omega = 0;
    int colors_used = 0;
    long long bound = -1;  // -1: no proven bound
    bool proper = false;
    int gamma_max = -1;  // -1: not a triple coloring
};

std::string report_header();
std::string report_line(const ReportRow& row);

// File helpers.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace stripcolor
