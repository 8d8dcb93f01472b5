#include "extremal/io.hpp"

#include "extremal/errors.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace extremal {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::string> words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}

int parse_int(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (text.empty() || *end != '\0' || errno == ERANGE)
        throw InvalidArgument("expected an integer, got '" + text + "'");
    return static_cast<int>(v);
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (!line.empty()) return true;
    }
    return false;
}

} // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || *end != '\0' || (errno == ERANGE && std::isfinite(v) && v != 0.0))
        throw InvalidArgument("expected a number, got '" + text + "'");
    return v;
}

void write_points(std::ostream& out, const PointSet& ps) {
    out << "# kind,d,k,n,delta,h\n";
    out << "# " << to_string(ps.kind) << ',' << ps.dim << ',' << ps.k << ',' << ps.n << ','
        << format_double(ps.delta) << ',' << format_double(ps.h) << '\n';
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out << ps.labels[i].circle << ',' << ps.labels[i].index;
        for (Eigen::Index c = 0; c < ps.points[i].size(); ++c)
            out << ',' << format_double(ps.points[i](c));
        out << '\n';
    }
}

PointSet read_points(std::istream& in) {
    std::string line;
    if (!next_line(in, line) || line != "# kind,d,k,n,delta,h")
        throw InvalidArgument("points: missing '# kind,d,k,n,delta,h' header");
    if (!next_line(in, line) || line.rfind("# ", 0) != 0)
        throw InvalidArgument("points: missing parameter line");
    const auto meta = split(line.substr(2), ',');
    if (meta.size() != 6) throw InvalidArgument("points: parameter line needs 6 fields");
    PointSet ps;
    ps.kind = parse_kind(meta[0]);
    ps.dim = parse_int(meta[1]);
    ps.k = parse_int(meta[2]);
    ps.n = parse_int(meta[3]);
    ps.delta = parse_double(meta[4]);
    ps.h = parse_double(meta[5]);
    if (ps.dim < 1) throw InvalidArgument("points: dimension must be positive");
    while (next_line(in, line)) {
        const auto f = split(line, ',');
        if (static_cast<int>(f.size()) != ps.dim + 2)
            throw InvalidArgument("points: row has " + std::to_string(f.size()) +
                                  " fields, expected " + std::to_string(ps.dim + 2));
        PointLabel label{parse_int(f[0]), parse_int(f[1])};
        Vector p(ps.dim);
        for (int c = 0; c < ps.dim; ++c) p(c) = parse_double(f[c + 2]);
        if (label.circle == kApexCircle) ps.apex_ids.push_back(ps.points.size());
        ps.labels.push_back(label);
        ps.points.push_back(std::move(p));
    }
    return ps;
}

void write_filtration(std::ostream& out, const FilteredComplex& fc) {
    for (const auto& e : fc.entries) {
        out << format_double(e.value) << ' ' << e.cell.dim();
        for (auto v : e.cell.simplex.vertices) out << ' ' << v;
        if (e.cell.cls)
            out << ' ' << e.cell.cls->touch << ' ' << e.cell.cls->short_edges;
        else
            out << " - -";
        out << '\n';
    }
}

FilteredComplex read_filtration(std::istream& in) {
    std::vector<FilteredEntry> entries;
    std::string line;
    while (next_line(in, line)) {
        const auto w = words(line);
        if (w.size() < 5) throw InvalidArgument("filtration: short line '" + line + "'");
        FilteredEntry e;
        e.value = parse_double(w[0]);
        const int dim = parse_int(w[1]);
        if (dim < 0 || static_cast<std::size_t>(dim) + 5 != w.size())
            throw InvalidArgument("filtration: vertex count does not match dim in '" + line + "'");
        for (int i = 0; i <= dim; ++i)
            e.cell.simplex.vertices.push_back(static_cast<std::size_t>(parse_int(w[2 + i])));
        const auto& t = w[w.size() - 2];
        const auto& s = w[w.size() - 1];
        if (t != "-" || s != "-") e.cell.cls = SimplexClass{parse_int(t), parse_int(s)};
        entries.push_back(std::move(e));
    }
    FilteredComplex fc{std::move(entries)};
    check_face_order(fc);
    return fc;
}

void write_diagram(std::ostream& out, const PersistenceDiagram& pd) {
    auto pairs = pd.pairs;
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    out << "dim,birth,death\n";
    for (const auto& p : pairs)
        out << p.dim << ',' << format_double(p.birth) << ',' << format_double(p.death) << '\n';
}

PersistenceDiagram read_diagram(std::istream& in, bool reduced) {
    std::string line;
    if (!next_line(in, line) || line != "dim,birth,death")
        throw InvalidArgument("diagram: missing 'dim,birth,death' header");
    PersistenceDiagram pd;
    pd.reduced = reduced;
    while (next_line(in, line)) {
        const auto f = split(line, ',');
        if (f.size() != 3) throw InvalidArgument("diagram: expected 3 fields in '" + line + "'");
        PersistencePair p;
        p.dim = parse_int(f[0]);
        p.birth = parse_double(f[1]);
        p.death = parse_double(f[2]);
        if (p.death < p.birth) throw InvalidArgument("diagram: death precedes birth");
        p.birth_index = pd.pairs.size();
        p.death_index = std::isinf(p.death) ? kNoIndex : pd.pairs.size();
        pd.pairs.push_back(p);
    }
    return pd;
}

void write_diagram_svg(std::ostream& out, const PersistenceDiagram& pd) {
    static const char* colours[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                    "#66a61e", "#e6ab02", "#a6761d", "#666666"};
    constexpr double size = 400.0, margin = 40.0;
    double hi = 0.0;
    for (const auto& p : pd.pairs) {
        hi = std::max(hi, p.birth);
        if (std::isfinite(p.death)) hi = std::max(hi, p.death);
    }
    if (hi <= 0.0) hi = 1.0;
    const double top = hi * 1.1;
    auto sx = [&](double v) { return margin + (size - 2 * margin) * v / top; };
    auto sy = [&](double v) { return size - margin - (size - 2 * margin) * v / top; };
    char buf[160];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"black\"/>\n",
                  sx(0), sy(0), sx(top), sy(top));
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"gray\" "
                  "stroke-dasharray=\"4\"/>\n",
                  sx(0), sy(top), sx(top), sy(top));
    out << buf;
    for (const auto& p : pd.pairs) {
        const double y = std::isfinite(p.death) ? p.death : top;
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\" fill=\"%s\" fill-opacity=\"0.7\"/>\n",
                      sx(p.birth), sy(y), colours[std::min(p.dim, 7)]);
        out << buf;
    }
    out << "<text x=\"200\" y=\"395\" text-anchor=\"middle\" font-size=\"12\">birth</text>\n";
    out << "<text x=\"12\" y=\"200\" font-size=\"12\" transform=\"rotate(-90 12 200)\">death</text>\n";
    out << "</svg>\n";
}

} // namespace extremal
