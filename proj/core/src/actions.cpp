#include "uniseq/actions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "uniseq/errors.hpp"

namespace uniseq {

PartialPerm::PartialPerm(std::map<Point, Point> pairs) : pairs_(std::move(pairs))
{
    PointSet seen;
    for (const auto& [x, y] : pairs_)
        if (!seen.insert(y).second)
            throw InvalidMap("partial permutation is not injective: image " + std::to_string(y) + " repeats");
}

PartialPerm PartialPerm::identity(const PointSet& points)
{
    std::map<Point, Point> pairs;
    for (auto p : points)
        pairs.emplace(p, p);
    return PartialPerm(std::move(pairs));
}

std::optional<Point> PartialPerm::operator()(Point x) const
{
    auto it = pairs_.find(x);
    if (it == pairs_.end())
        return std::nullopt;
    return it->second;
}

PointSet PartialPerm::domain() const
{
    PointSet out;
    for (const auto& [x, y] : pairs_)
        out.insert(x);
    return out;
}

PointSet PartialPerm::range() const
{
    PointSet out;
    for (const auto& [x, y] : pairs_)
        out.insert(y);
    return out;
}

PartialPerm PartialPerm::then(const PartialPerm& next) const
{
    std::map<Point, Point> pairs;
    for (const auto& [x, y] : pairs_)
        if (auto z = next(y))
            pairs.emplace(x, *z);
    return PartialPerm(std::move(pairs));
}

PartialPerm PartialPerm::inverse() const
{
    std::map<Point, Point> pairs;
    for (const auto& [x, y] : pairs_)
        pairs.emplace(y, x);
    return PartialPerm(std::move(pairs));
}

namespace {

// Undirected arcs z -- (z)s over every generator; inverses give the same arcs.
std::map<Point, std::vector<Point>> arcs(std::span<const PartialPerm> generators)
{
    std::map<Point, std::vector<Point>> adj;
    for (const auto& s : generators) {
        for (const auto& [x, y] : s.pairs()) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
    }
    return adj;
}

PointSet orbit(Point start, const std::map<Point, std::vector<Point>>& adj)
{
    PointSet seen{start};
    std::deque<Point> queue{start};
    while (!queue.empty()) {
        const Point z = queue.front();
        queue.pop_front();
        auto it = adj.find(z);
        if (it == adj.end())
            continue;
        for (Point next : it->second)
            if (seen.insert(next).second)
                queue.push_back(next);
    }
    return seen;
}

} // namespace

Partition blocks(std::span<const PartialPerm> generators, const PointSet& ground)
{
    const auto adj = arcs(generators);
    PointSet remaining = ground;
    for (const auto& [z, _] : adj)
        remaining.insert(z);

    Partition out;
    while (!remaining.empty()) {
        auto block = orbit(*remaining.begin(), adj);
        for (auto z : block)
            remaining.erase(z);
        out.push_back(std::move(block));
    }
    return out;
}

bool is_block(const PointSet& u, std::span<const PartialPerm> generators)
{
    if (u.empty())
        return false;
    return orbit(*u.begin(), arcs(generators)) == u;
}

namespace {

class EquivalenceSearch {
public:
    EquivalenceSearch(const PointSet& u, const PointSet& v, std::span<const PartialPerm> generators)
        : targets_(v.begin(), v.end())
    {
        for (const auto& s : generators) {
            gens_.push_back(s);
            gens_.push_back(s.inverse());
        }
        // Breadth-first order from the least point so later choices are
        // mostly forced by earlier ones.
        const auto adj = arcs(generators);
        PointSet seen;
        for (Point start : u) {
            if (seen.count(start))
                continue;
            for (Point z : orbit(start, adj))
                seen.insert(z);
            std::deque<Point> queue{start};
            PointSet queued{start};
            while (!queue.empty()) {
                Point z = queue.front();
                queue.pop_front();
                order_.push_back(z);
                auto it = adj.find(z);
                if (it == adj.end())
                    continue;
                for (Point next : it->second)
                    if (u.count(next) && queued.insert(next).second)
                        queue.push_back(next);
            }
        }
    }

    std::optional<std::map<Point, Point>> run()
    {
        if (order_.size() != targets_.size())
            return std::nullopt;
        if (extend(0))
            return phi_;
        return std::nullopt;
    }

private:
    bool consistent(Point z, Point t) const
    {
        for (const auto& s : gens_) {
            const auto sz = s(z);
            const auto st = s(t);
            if (sz.has_value() != st.has_value())
                return false;
            if (!sz)
                continue;
            if (auto it = phi_.find(*sz); it != phi_.end() && it->second != *st)
                return false;
            if (auto it = used_.find(*st); it != used_.end() && it->second != *sz)
                return false;
        }
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const Point z = order_[depth];
        for (Point t : targets_) {
            if (used_.count(t) || !consistent(z, t))
                continue;
            phi_.emplace(z, t);
            used_.emplace(t, z);
            if (extend(depth + 1))
                return true;
            phi_.erase(z);
            used_.erase(t);
        }
        return false;
    }

    std::vector<PartialPerm> gens_;
    std::vector<Point> order_;
    std::vector<Point> targets_;
    std::map<Point, Point> phi_;
    std::map<Point, Point> used_; // image -> preimage
};

} // namespace

std::optional<std::map<Point, Point>> block_equivalent(const PointSet& u, const PointSet& v,
                                                        std::span<const PartialPerm> generators)
{
    if (!is_block(u, generators))
        throw BlocksInvalid("first set is not a block of the action");
    if (!is_block(v, generators))
        throw BlocksInvalid("second set is not a block of the action");
    return EquivalenceSearch(u, v, generators).run();
}

std::size_t domain_deficiency(const PartialPerm& f, const PointSet& ground)
{
    return static_cast<std::size_t>(
        std::count_if(ground.begin(), ground.end(), [&](Point x) { return !f.defined_at(x); }));
}

Lift lift(std::span<const PartialPerm> generators, const PointSet& ground, const PointSet& block,
          const PointSet& labels)
{
    for (std::size_t k = 0; k < generators.size(); ++k) {
        for (Point z : block) {
            const auto image = generators[k](z);
            if (!image || !block.count(*image))
                throw BlockNotClosed("generator " + std::to_string(k) + " does not permute the block at point "
                                     + std::to_string(z));
        }
    }

    Point next_id = 0;
    const auto bump = [&](Point p) { next_id = std::max(next_id, p + 1); };
    for (Point p : ground)
        bump(p);
    for (Point p : block)
        bump(p);
    for (const auto& s : generators)
        for (const auto& [x, y] : s.pairs()) {
            bump(x);
            bump(y);
        }

    Lift out;
    out.ground = ground;
    std::map<std::pair<Point, Point>, Point> id_of;
    for (Point label : labels)
        for (Point z : block) {
            id_of[{label, z}] = next_id;
            out.copy_of[next_id] = {label, z};
            out.ground.insert(next_id++);
        }

    for (const auto& s : generators) {
        auto pairs = s.pairs();
        for (const auto& [id, copy] : out.copy_of)
            pairs.emplace(id, id_of.at({copy.first, *s(copy.second)}));
        PartialPerm t(std::move(pairs));
        // The copies lie inside dom(t), so the missing domain is X's.
        PointSet missing_lifted, missing_base;
        for (Point p : out.ground)
            if (!t.defined_at(p))
                missing_lifted.insert(p);
        for (Point p : ground)
            if (!s.defined_at(p))
                missing_base.insert(p);
        if (missing_lifted != missing_base)
            throw std::logic_error("lift changed the domain deficiency");
        out.generators.push_back(std::move(t));
    }
    return out;
}

Json to_json(const PartialPerm& f)
{
    Json out = Json::array();
    for (const auto& [x, y] : f.pairs())
        out.push_back(Json::array({x, y}));
    return out;
}

PartialPerm partial_perm_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("a partial permutation is an array of [from, to] pairs");
    std::map<Point, Point> pairs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw ParseError("each pair must be [from, to] with integer points");
        if (!pairs.emplace(pair[0].get<Point>(), pair[1].get<Point>()).second)
            throw InvalidMap("point " + std::to_string(pair[0].get<Point>()) + " has two images");
    }
    return PartialPerm(std::move(pairs));
}

} // namespace uniseq
