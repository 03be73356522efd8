#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "uniseq/json_fwd.hpp"

namespace uniseq {

using Point = std::int64_t;
using PointSet = std::set<Point>;

/// An injective partial map on points, acting on the right.
class PartialPerm {
public:
    PartialPerm() = default;
    /// Throws InvalidMap if two points share an image.
    explicit PartialPerm(std::map<Point, Point> pairs);
    PartialPerm(std::initializer_list<std::pair<const Point, Point>> pairs)
        : PartialPerm(std::map<Point, Point>(pairs)) {}

    static PartialPerm identity(const PointSet& points);

    [[nodiscard]] const std::map<Point, Point>& pairs() const noexcept { return pairs_; }
    [[nodiscard]] std::optional<Point> operator()(Point x) const;
    [[nodiscard]] bool defined_at(Point x) const { return pairs_.count(x) != 0; }
    [[nodiscard]] PointSet domain() const;
    [[nodiscard]] PointSet range() const;

    /// x ↦ ((x)this)next, defined where both steps are.
    [[nodiscard]] PartialPerm then(const PartialPerm& next) const;
    [[nodiscard]] PartialPerm inverse() const;

    friend bool operator==(const PartialPerm&, const PartialPerm&) = default;

private:
    std::map<Point, Point> pairs_;
};

[[nodiscard]] inline PartialPerm compose(const PartialPerm& f, const PartialPerm& g) { return f.then(g); }
[[nodiscard]] inline PartialPerm invert(const PartialPerm& f) { return f.inverse(); }

using Partition = std::vector<PointSet>;

/// Orbits {(z)s : s in S¹} of the inverse semigroup S generated by the
/// given partial perms. Points of `ground` outside every domain and range
/// are singleton blocks. Blocks are sorted by their least point.
[[nodiscard]] Partition blocks(std::span<const PartialPerm> generators, const PointSet& ground);

/// Does `u` equal the orbit of each of its points?
[[nodiscard]] bool is_block(const PointSet& u, std::span<const PartialPerm> generators);

/// A bijection phi: U -> V with (z)s·phi = (z)phi·s for every generator s
/// (both sides undefined together), or nullopt if none exists. Throws
/// BlocksInvalid if U or V is not a block.
[[nodiscard]] std::optional<std::map<Point, Point>>
block_equivalent(const PointSet& u, const PointSet& v, std::span<const PartialPerm> generators);

/// Perms on Y' = X ⊔ (labels × U): each generator acts as itself on X and as
/// (y, z) ↦ (y, (z)s) on the copies. Copy points get fresh ids above X.
struct Lift {
    PointSet ground;
    std::vector<PartialPerm> generators;
    std::map<Point, std::pair<Point, Point>> copy_of; // fresh id -> (label, z)
};

/// Throws BlockNotClosed unless every generator restricts to a permutation
/// of U.
[[nodiscard]] Lift lift(std::span<const PartialPerm> generators, const PointSet& ground, const PointSet& block,
                        const PointSet& labels);

/// |ground \ dom(f)|
[[nodiscard]] std::size_t domain_deficiency(const PartialPerm& f, const PointSet& ground);

[[nodiscard]] Json to_json(const PartialPerm& f);
/// [[1,2],[2,1]]; throws ParseError or InvalidMap.
[[nodiscard]] PartialPerm partial_perm_from_json(const Json& j);

} // namespace uniseq
