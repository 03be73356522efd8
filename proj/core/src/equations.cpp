#include "uniseq/equations.hpp"

#include <algorithm>
#include <charconv>
#include <future>

#include <nlohmann/json.hpp>

#include "uniseq/errors.hpp"

namespace uniseq {

FiniteMap::FiniteMap(std::vector<std::uint32_t> images) : images_(std::move(images))
{
    for (auto img : images_)
        if (img >= images_.size())
            throw InvalidMap("image " + std::to_string(img) + " is outside {0.."
                             + std::to_string(images_.size()) + "-1}");
}

FiniteMap FiniteMap::identity(std::size_t m)
{
    std::vector<std::uint32_t> images(m);
    for (std::size_t i = 0; i < m; ++i)
        images[i] = static_cast<std::uint32_t>(i);
    return FiniteMap(std::move(images));
}

FiniteMap FiniteMap::parse(std::string_view text)
{
    std::vector<std::uint32_t> images;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        std::uint32_t value = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || end != item.data() + item.size() || item.empty())
            throw InvalidMap("'" + std::string(item) + "' is not a point index");
        images.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
        if (text.empty())
            throw InvalidMap("trailing comma in image list");
    }
    if (images.empty())
        throw InvalidMap("empty image list");
    return FiniteMap(std::move(images));
}

FiniteMap FiniteMap::then(const FiniteMap& next) const
{
    FiniteMap out = *this;
    for (auto& img : out.images_)
        img = next.images_.at(img);
    return out;
}

std::uint64_t FiniteMap::ordinal() const
{
    std::uint64_t ord = 0;
    for (auto img : images_)
        ord = ord * images_.size() + img;
    return ord;
}

FiniteMap FiniteMap::from_ordinal(std::uint64_t ordinal, std::size_t m)
{
    std::vector<std::uint32_t> images(m);
    for (std::size_t i = m; i-- > 0;) {
        images[i] = static_cast<std::uint32_t>(ordinal % m);
        ordinal /= m;
    }
    return FiniteMap(std::move(images));
}

FiniteMap evaluate(const Word& w, const Assignment& assignment)
{
    if (w.empty())
        throw InvalidArgument("cannot evaluate the empty word in a semigroup");
    FiniteMap out = w[0] == 'a' ? assignment.a : assignment.b;
    for (std::size_t i = 1; i < w.size(); ++i)
        out = out.then(w[i] == 'a' ? assignment.a : assignment.b);
    return out;
}

namespace {

std::uint64_t map_count(std::size_t m)
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < m; ++i)
        count *= m;
    return count;
}

// Least solution whose a-ordinal lies in [a_begin, a_end) with the given
// stride; equations in a alone are checked before b is enumerated.
std::optional<Assignment> search(std::span<const Word> words, std::span<const FiniteMap> targets, std::size_t m,
                                 std::uint64_t a_begin, std::uint64_t a_end, std::uint64_t stride)
{
    const auto total = map_count(m);
    std::vector<std::size_t> a_only, rest;
    for (std::size_t i = 0; i < words.size(); ++i)
        (words[i].view().find('b') == std::string_view::npos ? a_only : rest).push_back(i);

    for (std::uint64_t ao = a_begin; ao < a_end; ao += stride) {
        Assignment candidate{FiniteMap::from_ordinal(ao, m), FiniteMap{}};
        const bool a_fits = std::all_of(a_only.begin(), a_only.end(), [&](std::size_t i) {
            return evaluate(words[i], candidate) == targets[i];
        });
        if (!a_fits)
            continue;
        if (rest.empty()) {
            candidate.b = FiniteMap::from_ordinal(0, m); // b is unconstrained
            return candidate;
        }
        for (std::uint64_t bo = 0; bo < total; ++bo) {
            candidate.b = FiniteMap::from_ordinal(bo, m);
            const bool fits = std::all_of(rest.begin(), rest.end(), [&](std::size_t i) {
                return evaluate(words[i], candidate) == targets[i];
            });
            if (fits)
                return candidate;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Assignment> solve(std::span<const Word> words, std::span<const FiniteMap> targets,
                                const SolveOptions& options)
{
    if (words.size() != targets.size())
        throw InvalidArgument("need exactly one target per word");
    if (words.empty())
        throw InvalidArgument("need at least one equation");
    const std::size_t m = targets.front().size();
    for (const auto& t : targets)
        if (t.size() != m)
            throw InvalidArgument("all targets must act on the same set");
    for (const auto& w : words)
        if (w.empty())
            throw InvalidArgument("equations need nonempty words");
    if (m > options.max_set_size)
        throw CapExceeded("set size " + std::to_string(m) + " exceeds the cap of "
                          + std::to_string(options.max_set_size));

    const auto total = map_count(m);
    const unsigned workers = std::max(1u, options.threads);
    if (workers == 1)
        return search(words, targets, m, 0, total, 1);

    // Worker k takes a-ordinals k, k + workers, ...; the least a-ordinal
    // among the partial answers wins, and b is least within each a.
    std::vector<std::future<std::optional<Assignment>>> parts;
    for (unsigned k = 0; k < workers; ++k)
        parts.push_back(std::async(std::launch::async, search, words, targets, m, k, total, workers));
    std::optional<Assignment> best;
    for (auto& part : parts) {
        auto found = part.get();
        if (found && (!best || found->a.ordinal() < best->a.ordinal()))
            best = std::move(found);
    }
    return best;
}

Json to_json(const FiniteMap& f)
{
    return Json(f.images());
}

} // namespace uniseq
