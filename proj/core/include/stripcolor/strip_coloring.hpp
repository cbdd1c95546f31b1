// On-line coloring of quasi-convex sets between two lines with integer
// triples (alpha, beta, gamma): alpha and beta are Schmerl indices computed
// from base segments, gamma is assigned by First-Fit inside the class of
// objects sharing (alpha, beta). Intersecting objects always receive distinct
// triples, alpha + beta never exceeds omega + 1, and the total number of
// distinct triples is at most C(omega+1, 2) * 24 * omega.
#pragma once

#include <map>
#include <span>
#include <vector>

#include "stripcolor/engine.hpp"
#include "stripcolor/geometry.hpp"

namespace stripcolor {

// Identifies the class X(alpha, beta).
struct ClassKey {
    int alpha = 0;
    int beta = 0;
    friend bool operator==(const ClassKey&, const ClassKey&) = default;
    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

// 1 + max stored alpha over earlier bases u with v.top <= u.top and
// v.bottom >= u.bottom (the empty maximum is 0).
int schmerl_alpha(const BaseSegment& v, std::span<const BaseSegment> earlier,
                  std::span<const int> earlier_alphas);

// Mirror image: 1 + max stored beta over earlier u with v.top >= u.top and
// v.bottom <= u.bottom.
int schmerl_beta(const BaseSegment& v, std::span<const BaseSegment> earlier,
                 std::span<const int> earlier_betas);

// Upper bound on the number of distinct triples for clique number omega.
long long triple_color_bound(int omega);

// Per-class First-Fit state over generic objects carrying base segments.
template <class Object>
class TripleColorerBase : public OnlineColorer<Object> {
public:
    Color color(const Object& next, std::span<const Object> earlier,
                std::span<const Color> earlier_colors) override {
        if (earlier.size() != bases_.size())
            throw PreconditionError("triple colorer replayed with a diverging prefix");
        (void)earlier_colors;
        BaseSegment base = base_of(next);
        int alpha = schmerl_alpha(base, bases_, alphas_);
        int beta = schmerl_beta(base, bases_, betas_);
        auto& members = classes_[ClassKey{alpha, beta}];
        std::vector<bool> used(members.size() + 2, false);
        for (int idx : members) {
            if (!object_intersects(earlier[idx], next)) continue;
            int gamma = gammas_[idx];
            if (gamma < static_cast<int>(used.size())) used[gamma] = true;
        }
        int gamma = 1;
        while (used[gamma]) ++gamma;

        int index = static_cast<int>(bases_.size());
        bases_.push_back(base);
        alphas_.push_back(alpha);
        betas_.push_back(beta);
        gammas_.push_back(gamma);
        members.push_back(index);
        return Color{alpha, beta, gamma};
    }

    const std::map<ClassKey, std::vector<int>>& classes() const { return classes_; }
    const std::vector<int>& alphas() const { return alphas_; }
    const std::vector<int>& betas() const { return betas_; }
    const std::vector<int>& gammas() const { return gammas_; }

protected:
    virtual BaseSegment base_of(const Object& obj) const = 0;
    virtual bool object_intersects(const Object& a, const Object& b) const = 0;

private:
    std::vector<BaseSegment> bases_;
    std::vector<int> alphas_, betas_, gammas_;
    std::map<ClassKey, std::vector<int>> classes_;
};

// The main algorithm on quasi-convex strip objects. First-Fit inside a class
// uses intersection of the full objects; the bases drive only the indices.
class StripColorer final : public TripleColorerBase<StripObject> {
protected:
    BaseSegment base_of(const StripObject& obj) const override { return obj.base; }
    bool object_intersects(const StripObject& a, const StripObject& b) const override {
        return intersects(a, b);
    }
};

// Adapter running the same triple scheme on segments attached to one line,
// reading (apex.x, foot.x) as the index pair. Carries no color bound there;
// it is a proper on-line colorer used as an adversary opponent.
class AttachedTripleColorer final : public TripleColorerBase<AttachedSegment> {
protected:
    BaseSegment base_of(const AttachedSegment& s) const override {
        return BaseSegment{s.apex.x, s.foot.x};
    }
    bool object_intersects(const AttachedSegment& a, const AttachedSegment& b) const override {
        return intersects_attached(a, b);
    }
};

// Post-hoc verification of a triple-coloring transcript; the classes are
// recovered from the recorded triples.
struct TripleRunChecks {
    bool proper = false;
    bool index_bound = false;      // alpha + beta <= running omega + 1 at every step
    bool bases_disjoint = false;   // within every final class
    bool no_induced_k33 = true;    // within every final class (optional, brute force)
    bool gamma_bound = false;      // per class, gamma <= 24 * class clique number
    bool within_bound = false;     // distinct triples <= C(omega+1,2) * 24 omega

    bool all() const {
        return proper && index_bound && bases_disjoint && no_induced_k33 && gamma_bound &&
               within_bound;
    }
};

TripleRunChecks check_triple_run(const Transcript<StripObject>& t, bool check_k33);

}  // namespace stripcolor
