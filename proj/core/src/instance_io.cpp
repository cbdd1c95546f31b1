#include "stripcolor/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stripcolor/errors.hpp"

namespace stripcolor {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& what) {
    throw InvalidInputError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::string out = "stripcolor-instance v1 ";
    out += inst.kind == InstanceKind::strip ? "strip" : "attached";
    out += "\n";
    if (inst.kind == InstanceKind::strip) {
        for (const StripObject& o : inst.strip_objects) {
            out += "strip ";
            out += o.kind == ObjectKind::convex ? "convex" : "quasi";
            out += " base " + o.base.x_top.str() + " " + o.base.x_bottom.str() + " poly";
            for (const Point& p : o.polygon) out += " " + p.x.str() + " " + p.y.str();
            out += "\n";
        }
    } else {
        for (const AttachedSegment& s : inst.attached) {
            out += "attached " + s.foot.x.str() + " " + s.apex.x.str() + " " + s.apex.y.str() + "\n";
        }
    }
    return out;
}

Instance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    Instance inst;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> tok = split_tokens(line);
        if (tok.empty()) continue;
        if (!header_seen) {
            if (tok.size() != 3 || tok[0] != "stripcolor-instance" || tok[1] != "v1")
                parse_fail(lineno, "expected header 'stripcolor-instance v1 <kind>'");
            if (tok[2] == "strip")
                inst.kind = InstanceKind::strip;
            else if (tok[2] == "attached")
                inst.kind = InstanceKind::attached;
            else
                parse_fail(lineno, "unknown instance kind '" + tok[2] + "'");
            header_seen = true;
            continue;
        }
        if (tok[0] == "strip") {
            if (inst.kind != InstanceKind::strip) parse_fail(lineno, "strip record in attached instance");
            if (tok.size() < 7 || tok[2] != "base" || tok[5] != "poly")
                parse_fail(lineno, "malformed strip record");
            StripObject o;
            if (tok[1] == "convex")
                o.kind = ObjectKind::convex;
            else if (tok[1] == "quasi")
                o.kind = ObjectKind::quasi_convex;
            else
                parse_fail(lineno, "unknown object kind '" + tok[1] + "'");
            o.base = BaseSegment{Rational::parse(tok[3]), Rational::parse(tok[4])};
            std::size_t coords = tok.size() - 6;
            if (coords < 4 || coords % 2 != 0) parse_fail(lineno, "polygon needs 2k >= 4 coordinates");
            for (std::size_t i = 6; i < tok.size(); i += 2)
                o.polygon.push_back(Point{Rational::parse(tok[i]), Rational::parse(tok[i + 1])});
            try {
                validate(o);
            } catch (const InvalidInputError& e) {
                parse_fail(lineno, e.what());
            }
            inst.strip_objects.push_back(std::move(o));
        } else if (tok[0] == "attached") {
            if (inst.kind != InstanceKind::attached)
                parse_fail(lineno, "attached record in strip instance");
            if (tok.size() != 4) parse_fail(lineno, "malformed attached record");
            AttachedSegment s;
            s.foot = Point{Rational::parse(tok[1]), Rational(0)};
            s.apex = Point{Rational::parse(tok[2]), Rational::parse(tok[3])};
            try {
                validate(s);
            } catch (const InvalidInputError& e) {
                parse_fail(lineno, e.what());
            }
            inst.attached.push_back(s);
        } else {
            parse_fail(lineno, "unknown record '" + tok[0] + "'");
        }
    }
    if (!header_seen) throw InvalidInputError("missing instance header");
    return inst;
}

std::string serialize_poset(const Poset& p) {
    std::string out = "stripcolor-poset v1 " + std::to_string(p.size()) + "\n";
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (p.less(i, j)) out += "less " + std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

Poset parse_poset(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> tok = split_tokens(line);
        if (tok.empty()) continue;
        if (n < 0) {
            if (tok.size() != 3 || tok[0] != "stripcolor-poset" || tok[1] != "v1")
                parse_fail(lineno, "expected header 'stripcolor-poset v1 <n>'");
            try {
                n = std::stoi(tok[2]);
            } catch (const std::exception&) {
                parse_fail(lineno, "bad element count");
            }
            if (n < 0) parse_fail(lineno, "bad element count");
            continue;
        }
        if (tok[0] != "less" || tok.size() != 3) parse_fail(lineno, "expected 'less <a> <b>'");
        try {
            pairs.emplace_back(std::stoi(tok[1]), std::stoi(tok[2]));
        } catch (const std::exception&) {
            parse_fail(lineno, "bad element index");
        }
    }
    if (n < 0) throw InvalidInputError("missing poset header");
    return Poset::from_pairs(n, pairs, /*close_transitively=*/true);
}

std::vector<int> flatten_colors(std::span<const Color> colors) {
    std::vector<Color> distinct(colors.begin(), colors.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> out;
    out.reserve(colors.size());
    for (const Color& c : colors) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), c);
        out.push_back(static_cast<int>(it - distinct.begin()) + 1);
    }
    return out;
}

std::string report_header() {
    return "seed\talgorithm\tn\tomega\tcolors_used\tbound\tproper\tgamma_max\n";
}

std::string report_line(const ReportRow& row) {
    std::string out = std::to_string(row.seed) + "\t" + row.algorithm + "\t" +
                      std::to_string(row.n) + "\t" + std::to_string(row.omega) + "\t" +
                      std::to_string(row.colors_used) + "\t";
    out += row.bound < 0 ? "-" : std::to_string(row.bound);
    out += "\t";
    out += row.proper ? "1" : "0";
    out += "\t";
    out += row.gamma_max < 0 ? "-" : std::to_string(row.gamma_max);
    out += "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << content;
    if (!out) throw InvalidInputError("failed writing file: " + path);
}

}  // namespace stripcolor
