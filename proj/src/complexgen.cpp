#include "extremal/complexgen.hpp"

#include "extremal/errors.hpp"
#include "extremal/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace extremal {

namespace {

std::size_t point_id(const PointSet& ps, int circle, int index) {
    return static_cast<std::size_t>(circle) * static_cast<std::size_t>(ps.points_per_circle()) +
           static_cast<std::size_t>(index);
}

// Per-circle choice: nothing, one point, or a consecutive pair starting at `index`.
struct CircleChoice {
    enum Kind { None, Single, Pair } kind = None;
    int index = 0;
};

// Enumerates every combination of per-circle choices except the all-empty one.
// `singles` and `pairs` are the number of single-point and pair choices per circle.
std::vector<ClassifiedSimplex> enumerate_choices(const PointSet& ps, int singles, int pairs) {
    const int circles = ps.circle_count();
    const int ppc = ps.points_per_circle();
    std::vector<ClassifiedSimplex> out;
    std::vector<CircleChoice> choice(circles);

    auto emit = [&] {
        ClassifiedSimplex cs;
        int touched = 0;
        int paired = 0;
        for (int c = 0; c < circles; ++c) {
            const auto& ch = choice[c];
            if (ch.kind == CircleChoice::None) continue;
            ++touched;
            cs.simplex.vertices.push_back(point_id(ps, c, ch.index));
            if (ch.kind == CircleChoice::Pair) {
                ++paired;
                cs.simplex.vertices.push_back(point_id(ps, c, (ch.index + 1) % ppc));
            }
        }
        if (touched == 0) return;
        std::sort(cs.simplex.vertices.begin(), cs.simplex.vertices.end());
        cs.cls = SimplexClass{touched - 1, paired - 1};
        out.push_back(std::move(cs));
    };

    auto recurse = [&](auto& self, int c) -> void {
        if (c == circles) {
            emit();
            return;
        }
        choice[c] = {CircleChoice::None, 0};
        self(self, c + 1);
        for (int i = 0; i < singles; ++i) {
            choice[c] = {CircleChoice::Single, i};
            self(self, c + 1);
        }
        for (int i = 0; i < pairs; ++i) {
            choice[c] = {CircleChoice::Pair, i};
            self(self, c + 1);
        }
    };
    recurse(recurse, 0);

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.simplex < b.simplex;
    });
    return out;
}

} // namespace

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices.size() < 2) return out;
    out.reserve(vertices.size());
    for (std::size_t drop = 0; drop < vertices.size(); ++drop) {
        Simplex f;
        f.vertices.reserve(vertices.size() - 1);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (i != drop) f.vertices.push_back(vertices[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : s.vertices) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::string to_string(const SimplexClass& c) {
    return "(" + std::to_string(c.touch) + "," + std::to_string(c.short_edges) + ")";
}

int FilteredComplex::max_dim() const {
    int m = -1;
    for (const auto& e : entries) m = std::max(m, e.cell.dim());
    return m;
}

std::vector<std::size_t> FilteredComplex::census() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(0, max_dim() + 1)), 0);
    for (const auto& e : entries) ++counts[static_cast<std::size_t>(e.cell.dim())];
    return counts;
}

ClassifiedSimplex classify(const PointSet& ps, const Simplex& s) {
    if (s.vertices.empty()) throw InvalidSimplex("classify: empty simplex");
    std::map<int, std::vector<int>> by_circle;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        const auto v = s.vertices[i];
        if (v >= ps.size()) throw InvalidSimplex("classify: vertex id out of range");
        if (i > 0 && s.vertices[i - 1] >= v)
            throw InvalidSimplex("classify: vertices must be strictly increasing");
        const auto& label = ps.labels[v];
        if (label.circle == kApexCircle) throw InvalidSimplex("classify: apex has no circle");
        by_circle[label.circle].push_back(label.index);
    }
    const int ppc = ps.points_per_circle();
    int paired = 0;
    for (auto& [circle, idx] : by_circle) {
        if (idx.size() > 2)
            throw InvalidSimplex("classify: three or more vertices on circle " +
                                 std::to_string(circle));
        if (idx.size() == 2) {
            std::sort(idx.begin(), idx.end());
            const int gap = idx[1] - idx[0];
            const bool consecutive = gap == 1 || (ps.cyclic() && gap == ppc - 1);
            if (!consecutive)
                throw InvalidSimplex("classify: non-consecutive vertices on circle " +
                                     std::to_string(circle));
            ++paired;
        }
    }
    return {s, SimplexClass{static_cast<int>(by_circle.size()) - 1, paired - 1}};
}

std::vector<ClassifiedSimplex> enumerate_even(const PointSet& ps) {
    if (ps.kind != Kind::Even) throw InvalidArgument("enumerate_even: not an even point set");
    if (ps.n < min_n(ps.k))
        throw InvalidArgument("enumerate_even: n=" + std::to_string(ps.n) + " below min_n(" +
                              std::to_string(ps.k) + ")=" + std::to_string(min_n(ps.k)));
    return enumerate_choices(ps, ps.n, ps.n);
}

std::vector<ClassifiedSimplex> enumerate_odd(const PointSet& ps) {
    if (ps.kind != Kind::ThreeD && ps.kind != Kind::Odd)
        throw InvalidArgument("enumerate_odd: not a 3-D or odd point set");
    return enumerate_choices(ps, ps.n + 1, ps.n);
}

std::vector<ClassifiedSimplex> enumerate(const PointSet& ps) {
    if (ps.kind == Kind::Even) return enumerate_even(ps);
    if (ps.kind == Kind::Suspended)
        throw InvalidArgument("enumerate: suspended sets are handled by the Cech oracle");
    return enumerate_odd(ps);
}

double radius_value(const PointSet& ps, const Simplex& s, const Tolerance& tol) {
    const auto pts = gather(ps.points, s.vertices);
    const auto ball = min_enclosing_ball(pts, tol);
    if (auto bad = first_point_inside(ball, ps.points, s.vertices, Emptiness::Strict, tol)) {
        std::string verts;
        for (auto v : s.vertices) verts += (verts.empty() ? "" : " ") + std::to_string(v);
        throw NotCritical("radius_value: point " + std::to_string(*bad) +
                              " inside the smallest sphere of {" + verts + "}",
                          *bad);
    }
    return ball.radius;
}

void sort_filtration(std::vector<FilteredEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const FilteredEntry& a, const FilteredEntry& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.cell.dim() != b.cell.dim()) return a.cell.dim() < b.cell.dim();
        return a.cell.simplex < b.cell.simplex;
    });
}

void repair_monotonicity(std::vector<FilteredEntry>& entries, const Tolerance& tol) {
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return entries[a].cell.dim() < entries[b].cell.dim();
    });
    std::unordered_map<Simplex, double, SimplexHash> value;
    value.reserve(entries.size() * 2);
    for (auto i : order) {
        auto& e = entries[i];
        double top = e.value;
        for (const auto& f : e.cell.simplex.facets())
            if (auto it = value.find(f); it != value.end()) top = std::max(top, it->second);
        if (top > e.value && top - e.value <= tol.abs_eps) e.value = top;
        value.emplace(e.cell.simplex, e.value);
    }
}

SimplexIndex index_of(const FilteredComplex& fc) {
    SimplexIndex idx;
    idx.reserve(fc.size() * 2);
    for (std::size_t i = 0; i < fc.size(); ++i) idx.emplace(fc.entries[i].cell.simplex, i);
    return idx;
}

void check_face_order(const FilteredComplex& fc) {
    const auto idx = index_of(fc);
    if (idx.size() != fc.size()) throw OrderingViolation("filtration contains duplicate simplices");
    for (std::size_t i = 0; i < fc.size(); ++i) {
        const auto& s = fc.entries[i].cell.simplex;
        if (s.vertices.empty()) throw OrderingViolation("filtration contains an empty simplex");
        for (const auto& f : s.facets()) {
            auto it = idx.find(f);
            if (it == idx.end())
                throw OrderingViolation("filtration is not closed under faces (entry " +
                                        std::to_string(i) + ")");
            if (it->second >= i)
                throw OrderingViolation("face at position " + std::to_string(it->second) +
                                        " follows its coface at position " + std::to_string(i));
        }
    }
}

FilteredComplex make_filtration(std::vector<FilteredEntry> entries) {
    sort_filtration(entries);
    FilteredComplex fc{std::move(entries)};
    check_face_order(fc);
    return fc;
}

FilteredComplex build_filtration(const PointSet& ps, const FiltrationOptions& opt) {
    auto cells = enumerate(ps);
    std::vector<FilteredEntry> entries(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto& s = cells[i].simplex;
        double value = 0.0;
        if (opt.assert_empty) {
            value = radius_value(ps, s, opt.tol);
        } else {
            value = min_enclosing_ball(gather(ps.points, s.vertices), opt.tol).radius;
        }
        entries[i] = {std::move(cells[i]), value};
    });
    repair_monotonicity(entries, opt.tol);
    return make_filtration(std::move(entries));
}

std::vector<ClassRange> class_ranges(const FilteredComplex& fc) {
    std::map<SimplexClass, ClassRange> ranges;
    for (const auto& e : fc.entries) {
        if (!e.cell.cls) continue;
        auto [it, inserted] = ranges.try_emplace(*e.cell.cls);
        auto& r = it->second;
        if (inserted) {
            r.cls = *e.cell.cls;
            r.min_value = r.max_value = e.value;
        }
        r.min_value = std::min(r.min_value, e.value);
        r.max_value = std::max(r.max_value, e.value);
        ++r.count;
    }
    std::vector<ClassRange> out;
    for (auto& [c, r] : ranges) out.push_back(r);
    return out;
}

std::vector<Threshold> pick_thresholds(const FilteredComplex& fc) {
    const auto ranges = class_ranges(fc);
    std::vector<Threshold> out;
    for (std::size_t i = 1; i < ranges.size(); ++i) {
        const auto& lo = ranges[i - 1];
        const auto& hi = ranges[i];
        if (!(lo.max_value < hi.min_value))
            throw Overlap("class " + to_string(lo.cls) + " reaches " +
                          std::to_string(lo.max_value) + " but class " + to_string(hi.cls) +
                          " starts at " + std::to_string(hi.min_value));
        out.push_back({lo.cls, hi.cls, 0.5 * (lo.max_value + hi.min_value),
                       hi.min_value - lo.max_value});
    }
    return out;
}

std::optional<Threshold> threshold_after(std::span<const Threshold> ts, SimplexClass c) {
    for (const auto& t : ts)
        if (t.below == c) return t;
    return std::nullopt;
}

CriticalityReport criticality_check(const PointSet& ps, std::span<const ClassifiedSimplex> cells,
                                    const Tolerance& tol) {
    CriticalityReport report;
    report.checked = cells.size();
    std::vector<std::optional<CriticalityFailure>> result(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto& s = cells[i].simplex;
        const auto pts = gather(ps.points, s.vertices);
        try {
            const auto sphere = circumsphere(pts, tol);
            if (!barycentric_interior(pts, sphere.center, tol)) {
                result[i] = CriticalityFailure{s, "circumcenter not in the interior"};
                return;
            }
            if (auto bad = first_point_inside(sphere, ps.points, s.vertices, Emptiness::Strict,
                                              tol)) {
                result[i] = CriticalityFailure{
                    s, "circumsphere not strictly empty (point " + std::to_string(*bad) + ")"};
            }
        } catch (const Error& e) {
            result[i] = CriticalityFailure{s, e.what()};
        }
    });
    for (auto& r : result)
        if (r) report.failures.push_back(std::move(*r));
    return report;
}

CriticalityReport criticality_check(const PointSet& ps, const FilteredComplex& fc,
                                    const Tolerance& tol) {
    std::vector<ClassifiedSimplex> cells;
    cells.reserve(fc.size());
    for (const auto& e : fc.entries) cells.push_back(e.cell);
    return criticality_check(ps, cells, tol);
}

} // namespace extremal
