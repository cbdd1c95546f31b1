#include "stripcolor/strip_coloring.hpp"

#include "stripcolor/errors.hpp"

namespace stripcolor {

int schmerl_alpha(const BaseSegment& v, std::span<const BaseSegment> earlier,
                  std::span<const int> earlier_alphas) {
    if (earlier.size() != earlier_alphas.size())
        throw PreconditionError("each earlier base needs a stored alpha");
    int best = 0;
    for (std::size_t i = 0; i < earlier.size(); ++i) {
        const BaseSegment& u = earlier[i];
        if (!(u.x_top < v.x_top) && !(u.x_bottom > v.x_bottom))
            best = std::max(best, earlier_alphas[i]);
    }
    return best + 1;
}

int schmerl_beta(const BaseSegment& v, std::span<const BaseSegment> earlier,
                 std::span<const int> earlier_betas) {
    if (earlier.size() != earlier_betas.size())
        throw PreconditionError("each earlier base needs a stored beta");
    int best = 0;
    for (std::size_t i = 0; i < earlier.size(); ++i) {
        const BaseSegment& u = earlier[i];
        if (!(v.x_top < u.x_top) && !(v.x_bottom > u.x_bottom))
            best = std::max(best, earlier_betas[i]);
    }
    return best + 1;
}

long long triple_color_bound(int omega) {
    if (omega < 0) throw PreconditionError("clique number must be non-negative");
    long long pairs = static_cast<long long>(omega + 1) * omega / 2;
    return pairs * 24 * omega;
}

TripleRunChecks check_triple_run(const Transcript<StripObject>& t, bool check_k33) {
    TripleRunChecks out;
    out.proper = t.proper;

    out.index_bound = true;
    for (std::size_t i = 0; i < t.colors.size(); ++i)
        if (t.colors[i].a + t.colors[i].b > t.omega_running[i] + 1) out.index_bound = false;

    std::map<ClassKey, std::vector<int>> classes;
    for (std::size_t i = 0; i < t.colors.size(); ++i)
        classes[ClassKey{t.colors[i].a, t.colors[i].b}].push_back(static_cast<int>(i));

    out.bases_disjoint = true;
    for (const auto& [key, members] : classes) {
        for (std::size_t a = 0; a < members.size() && out.bases_disjoint; ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const BaseSegment& u = t.objects[members[a]].base;
                const BaseSegment& v = t.objects[members[b]].base;
                Point u1{u.x_bottom, Rational(0)}, u2{u.x_top, Rational(1)};
                Point v1{v.x_bottom, Rational(0)}, v2{v.x_top, Rational(1)};
                if (segments_intersect(u1, u2, v1, v2)) {
                    out.bases_disjoint = false;
                    break;
                }
            }
        }
    }

    out.gamma_bound = true;
    for (const auto& [key, members] : classes) {
        SimpleGraph sub(static_cast<int>(members.size()));
        int gamma_max = 0;
        for (std::size_t a = 0; a < members.size(); ++a) {
            gamma_max = std::max(gamma_max, t.colors[members[a]].c);
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (t.graph.adjacent(members[a], members[b]))
                    sub.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
        if (gamma_max > 24 * oracle::clique_number(sub, sub.size())) out.gamma_bound = false;
        if (check_k33 && oracle::has_induced_ktt(sub, 3)) out.no_induced_k33 = false;
    }

    int omega = t.omega_running.empty() ? 0 : t.omega_running.back();
    out.within_bound = t.colors_used() <= triple_color_bound(omega) || t.colors.empty();
    return out;
}

}  // namespace stripcolor
