// Copyright 2026 The tcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thompson/dyadic.hpp"

namespace thompson {

enum class Carrier { Interval, Circle };

const char *carrier_name(Carrier c);

/// An increasing piecewise-affine bijection [xs.front(), xs.back()] ->
/// [ys.front(), ys.back()] between real intervals, every slope a power of
/// two. Coordinates are lifted: an arc of the circle is written as an
/// interval of length at most 1 in R.
///
/// Interior breakpoints are merged whenever the slopes on both sides agree,
/// so equal fragments have identical breakpoint lists.
class PLFragment {
   public:
    PLFragment(std::vector<Dyadic> xs, std::vector<Dyadic> ys);

    /// The translation lo -> lo on [lo, hi].
    static PLFragment identity(const Dyadic &lo, const Dyadic &hi);

    const std::vector<Dyadic> &xs() const { return xs_; }
    const std::vector<Dyadic> &ys() const { return ys_; }
    size_t piece_count() const { return xs_.size() - 1; }
    const Dyadic &domain_lo() const { return xs_.front(); }
    const Dyadic &domain_hi() const { return xs_.back(); }
    const Dyadic &image_lo() const { return ys_.front(); }
    const Dyadic &image_hi() const { return ys_.back(); }
    int64_t log2_slope(size_t piece) const { return slopes_[piece]; }

    Dyadic eval(const Dyadic &x) const;
    Dyadic eval_inverse(const Dyadic &y) const;
    PLFragment inverse() const;
    /// x -> g(f(x)). g is first translated by the integer that lines its
    /// domain up with this fragment's image; the two must then coincide.
    PLFragment then(const PLFragment &g) const;
    /// Translates the domain by dx and the image by dy.
    PLFragment translated(const Dyadic &dx, const Dyadic &dy) const;

    friend bool operator==(const PLFragment &a, const PLFragment &b) { return a.xs_ == b.xs_ && a.ys_ == b.ys_; }

    std::string str() const;

   private:
    std::vector<Dyadic> xs_;
    std::vector<Dyadic> ys_;
    std::vector<int64_t> slopes_;
};

/// An element of F (Interval carrier) or T (Circle carrier).
///
/// Stored as one period of its lift: breakpoints 0 = x_0 < ... < x_n = 1
/// and values F(x_i) with F(0) in [0, 1) and F(1) = F(0) + 1. The points 0
/// and 1 are always present; every other breakpoint is genuine. Equality
/// compares the maps themselves, not the carrier tag, so an element of F
/// equals its image in T.
class PLMap {
   public:
    static PLMap identity(Carrier carrier = Carrier::Interval);
    /// Builds from one period of the lift; `lift` must have domain [0, 1].
    static PLMap from_lift(Carrier carrier, const PLFragment &lift);
    /// Builds from circle points (x, xf) with representatives in [0, 1).
    /// Points must have distinct x; consecutive images are joined
    /// counterclockwise.
    static PLMap from_points(Carrier carrier, std::vector<std::pair<Dyadic, Dyadic>> points);
    /// Builds from a lift fragment whose domain has length exactly 1.
    static PLMap from_period(Carrier carrier, const PLFragment &period);

    Carrier carrier() const { return carrier_; }
    const PLFragment &lift() const { return lift_; }

    /// Image of a point: x in [0, 1] for Interval maps (result in [0, 1]),
    /// any x for Circle maps (result in [0, 1)).
    Dyadic eval(const Dyadic &x) const;
    CirclePoint eval(const CirclePoint &x) const { return CirclePoint(eval_lift(x.pos())); }
    /// The periodic lift, F(x + 1) = F(x) + 1.
    Dyadic eval_lift(const Dyadic &x) const;
    Dyadic eval_inverse_lift(const Dyadic &y) const;

    /// Genuine breakpoints in [0, 1): points where the slope changes
    /// (circularly for Circle maps).
    std::vector<Dyadic> breakpoints() const;
    bool is_identity() const;
    bool fixes_zero() const { return lift_.image_lo().sign() == 0; }

    /// The same map tagged as an element of T.
    PLMap as_circle() const;
    /// The same map tagged as an element of F; requires 0 to be fixed.
    PLMap as_interval() const;

    /// Restriction to the lifted interval [lo, hi], hi - lo in (0, 1].
    PLFragment restrict(const Dyadic &lo, const Dyadic &hi) const;
    /// Restriction to the closed counterclockwise arc [from, to].
    PLFragment restrict_arc(const CirclePoint &from, const CirclePoint &to) const;

    friend bool operator==(const PLMap &a, const PLMap &b) { return a.lift_ == b.lift_; }

   private:
    PLMap(Carrier carrier, PLFragment lift) : carrier_(carrier), lift_(std::move(lift)) {}

    Carrier carrier_;
    PLFragment lift_;
};

/// x -> g(f(x)). Actions are on the right: compose(f, g) is "f then g".
PLMap compose(const PLMap &f, const PLMap &g);
PLMap inverse(const PLMap &f);
/// g^-1 f g.
PLMap conjugate(const PLMap &f, const PLMap &g);
/// f^-1 g^-1 f g.
PLMap commutator(const PLMap &f, const PLMap &g);
PLMap power(const PLMap &f, int64_t n);
/// Product of a sequence, left to right.
PLMap product(const std::vector<PLMap> &factors);

enum class Side { Left, Right };

/// log2 of the one-sided derivative of f at x.
int64_t one_sided_slope(const PLMap &f, const Dyadic &x, Side side);

/// The rotation x -> x + a of the circle.
PLMap rotation(const Dyadic &a);

/// Assembles a map from fragments whose domains tile the carrier and whose
/// images tile it in the same cyclic order.
PLMap restrict_patch(Carrier carrier, std::vector<PLFragment> fragments);

/// Canonical Thompson-like bijection [p, q] -> [r, s] (lifted intervals).
///
/// Both intervals are cut greedily into maximal standard dyadic intervals;
/// while the counts differ, the largest interval (leftmost on ties) of the
/// side with fewer pieces is halved. The i-th source piece is then mapped
/// affinely onto the i-th target piece.
PLFragment thompson_like_map(const Dyadic &p, const Dyadic &q, const Dyadic &r, const Dyadic &s);
/// The same for counterclockwise arcs [p, q] -> [r, s] of the circle.
PLFragment thompson_like_map(const CirclePoint &p, const CirclePoint &q, const CirclePoint &r,
                             const CirclePoint &s);

/// The maximal standard dyadic intervals [a/2^j, (a+1)/2^j] tiling [p, q],
/// returned as their left endpoints followed by q.
std::vector<Dyadic> standard_decomposition(const Dyadic &p, const Dyadic &q);

/// Concatenation of fragments with a.domain_hi() == b.domain_lo() and
/// a.image_hi() == b.image_lo().
PLFragment join(const PLFragment &a, const PLFragment &b);

/// Moves `g` into a box: returns tau^-1 g tau on tau's image and the
/// identity elsewhere. g must map tau's domain onto itself.
PLMap transport(const PLMap &g, const PLFragment &tau);

/// An open counterclockwise arc from lo to hi, lo in [0, 1), hi in (lo, lo + 1].
/// hi == lo + 1 is the circle minus the point lo.
struct OpenArc {
    Rational lo;
    Rational hi;

    static OpenArc make(const Rational &from, const Rational &to);
    static OpenArc make(const CirclePoint &from, const CirclePoint &to) {
        return make(from.pos().to_rational(), to.pos().to_rational());
    }
    Rational length() const { return hi - lo; }
    bool contains(const Rational &x) const;
    /// True iff `other` is a subset of this arc.
    bool contains(const OpenArc &other) const;
    bool intersects(const OpenArc &other) const;
    std::string str() const;
    friend bool operator==(const OpenArc &, const OpenArc &) = default;
};

/// A union of open arcs normalized to disjoint maximal arcs.
class ArcUnion {
   public:
    ArcUnion() = default;
    explicit ArcUnion(const std::vector<OpenArc> &arcs);

    bool is_full_circle() const { return full_; }
    bool empty() const { return !full_ && arcs_.empty(); }
    const std::vector<OpenArc> &arcs() const { return arcs_; }
    bool contains(const Rational &x) const;
    /// True iff every arc of `other` lies inside this union.
    bool contains(const ArcUnion &other) const;
    std::string str() const;

    friend bool operator==(const ArcUnion &, const ArcUnion &) = default;

   private:
    friend ArcUnion make_full_circle();
    bool full_ = false;
    std::vector<OpenArc> arcs_;
};

ArcUnion make_full_circle();

/// A closed piece of the fixed set: the arc [lo, hi] (lo == hi for a point).
/// For Interval maps lo <= hi always; for Circle maps hi < lo wraps past 0.
struct FixedComponent {
    Rational lo;
    Rational hi;
    friend bool operator==(const FixedComponent &, const FixedComponent &) = default;
};

struct FixedSet {
    bool everything = false;
    std::vector<FixedComponent> components;
    bool empty() const { return !everything && components.empty(); }
    bool contains(const Rational &x) const;
    std::string str() const;
};

/// Support as maximal open arcs. For Interval maps arcs never wrap.
using SupportSet = ArcUnion;

FixedSet fixed_points(const PLMap &f);
SupportSet support(const PLMap &f);

/// Pairwise intersection of two unions of open arcs.
ArcUnion intersect(const ArcUnion &a, const ArcUnion &b);

/// True iff f and g agree as circle maps on the closed arc [from, to].
bool agree_on_arc(const PLMap &f, const PLMap &g, const CirclePoint &from, const CirclePoint &to);
/// True iff f fixes every point of the closed arc [from, to].
bool acts_trivially_on_arc(const PLMap &f, const CirclePoint &from, const CirclePoint &to);

std::ostream &operator<<(std::ostream &out, const PLMap &f);

}  // namespace thompson
