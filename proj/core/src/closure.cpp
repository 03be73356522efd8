#include "uniseq/closure.hpp"

#include <algorithm>

#include "uniseq/errors.hpp"

namespace uniseq {

GeneratorSet::GeneratorSet(std::set<Word> generators) : generators_(std::move(generators))
{
    generators_.erase(Word{});
    for (const auto& g : generators_)
        max_length_ = std::max(max_length_, g.size());
}

GeneratorSet::GeneratorSet(std::initializer_list<const char*> generators)
{
    std::set<Word> gens;
    for (const char* g : generators)
        gens.insert(Word(g));
    *this = GeneratorSet(std::move(gens));
}

std::vector<bool> GeneratorSet::prefix_members(std::string_view w) const
{
    std::vector<bool> member(w.size() + 1, false);
    member[0] = true;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        for (const auto& g : generators_) {
            const std::size_t len = g.size();
            if (len <= i && member[i - len] && w.substr(i - len, len) == g.view()) {
                member[i] = true;
                break;
            }
        }
    }
    return member;
}

std::vector<bool> GeneratorSet::suffix_members(std::string_view w) const
{
    std::vector<bool> member(w.size() + 1, false);
    member[w.size()] = true;
    for (std::size_t i = w.size(); i-- > 0;) {
        for (const auto& g : generators_) {
            const std::size_t len = g.size();
            if (i + len <= w.size() && member[i + len] && w.substr(i, len) == g.view()) {
                member[i] = true;
                break;
            }
        }
    }
    return member;
}

bool GeneratorSet::contains(std::string_view w) const
{
    if (w.empty())
        return true;
    if (generators_.empty())
        return false;
    return prefix_members(w).back();
}

std::optional<std::vector<Word>> GeneratorSet::factorize(std::string_view w) const
{
    const auto tail_ok = suffix_members(w);
    if (!tail_ok.front())
        return std::nullopt;

    std::vector<Word> pieces;
    std::size_t pos = 0;
    while (pos < w.size()) {
        // Shortlex order ascends, so walk backwards for longest-first.
        bool advanced = false;
        for (auto it = generators_.rbegin(); it != generators_.rend(); ++it) {
            const std::size_t len = it->size();
            if (pos + len <= w.size() && tail_ok[pos + len] && w.substr(pos, len) == it->view()) {
                pieces.push_back(*it);
                pos += len;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            return std::nullopt; // unreachable: tail_ok[pos] holds here
    }
    return pieces;
}

std::set<Word> extract_repeated(const GeneratorSet& gens, std::span<const Word> words)
{
    std::set<Word> out{Word{}};
    for (const auto& word : words) {
        const auto w = word.view();
        const auto pre = gens.prefix_members(w);
        const auto suf = gens.suffix_members(w);
        for (std::size_t i = 0; i <= w.size(); ++i) {
            if (!pre[i])
                continue;
            for (std::size_t k = i; k <= w.size(); ++k) {
                if (!suf[k])
                    continue;
                // w = s · v · u · v · s' with s = w[0,i), s' = w[k,|w|).
                for (std::size_t len = 1; 2 * len <= k - i; ++len)
                    if (w.substr(i, len) == w.substr(k - len, len))
                        out.insert(word.substr(i, len));
            }
        }
    }
    return out;
}

std::set<Word> extract_overlaps(const GeneratorSet& gens, std::span<const Word> words)
{
    std::vector<std::vector<bool>> pre, suf;
    pre.reserve(words.size());
    suf.reserve(words.size());
    for (const auto& w : words) {
        pre.push_back(gens.prefix_members(w.view()));
        suf.push_back(gens.suffix_members(w.view()));
    }

    std::set<Word> out{Word{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto wi = words[i].view();
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i == j)
                continue;
            const auto wj = words[j].view();
            // v starts right after an S-prefix of w_i and ends right before
            // an S-suffix of w_j.
            for (std::size_t p = 0; p < wi.size(); ++p) {
                if (!pre[i][p])
                    continue;
                for (std::size_t k = 1; k <= wj.size(); ++k) {
                    if (!suf[j][k])
                        continue;
                    const std::size_t longest = std::min(wi.size() - p, k);
                    for (std::size_t len = 1; len <= longest; ++len)
                        if (wi.substr(p, len) == wj.substr(k - len, len))
                            out.insert(words[i].substr(p, len));
                }
            }
        }
    }
    return out;
}

IrredundantSet irredundant_generators(const std::set<Word>& pool)
{
    // Products are never shorter than their factors, so a word added later
    // (longer or equal length) can never generate an earlier one.
    IrredundantSet out;
    GeneratorSet current;
    for (const auto& x : pool) {
        if (x.empty() || current.contains(x))
            continue;
        out.elements.insert(x);
        current = GeneratorSet(out.elements);
    }
    return out;
}

bool is_closed(const GeneratorSet& gens, std::span<const Word> words)
{
    const auto all_members = [&](const std::set<Word>& s) {
        return std::all_of(s.begin(), s.end(), [&](const Word& v) { return gens.contains(v); });
    };
    return all_members(extract_repeated(gens, words)) && all_members(extract_overlaps(gens, words));
}

ClosureResult closure(std::span<const Word> words)
{
    if (words.empty())
        throw EmptyInput("closure needs at least one word");
    for (const auto& w : words)
        if (w.empty())
            throw EmptyInput("closure inputs must be nonempty words");

    ClosureResult result;
    for (;;) {
        ClosureRound round{extract_repeated(result.generators, words),
                           extract_overlaps(result.generators, words)};
        bool grew = false;
        for (const auto* found : {&round.repeated, &round.overlaps}) {
            for (const auto& v : *found) {
                result.pool.insert(v);
                grew = grew || !result.generators.contains(v);
            }
        }
        result.rounds.push_back(std::move(round));
        if (!grew)
            break;
        // Every round adds a pooled subword of the input to the monoid, so
        // the loop runs at most (number of distinct subwords) times.
        result.generators = irredundant_generators(result.pool).as_generators();
    }
    return result;
}

} // namespace uniseq
