#include "uniseq/conditions.hpp"

#include <nlohmann/json.hpp>

#include "uniseq/errors.hpp"

namespace uniseq {

std::optional<SplitWitness> find_split(const Word& w, const GeneratorSet& gens)
{
    const auto pre = gens.prefix_members(w.view());
    const auto suf = gens.suffix_members(w.view());
    // w = s·t·v with s·t = w[0,i) and t·v = w[j,|w|), j <= i.
    for (std::size_t i = 0; i <= w.size(); ++i) {
        if (!pre[i])
            continue;
        for (std::size_t j = 0; j <= i; ++j)
            if (suf[j])
                return SplitWitness{w.substr(0, j), w.substr(j, i - j), w.substr(i)};
    }
    return std::nullopt;
}

bool check_split(const Word& w, const GeneratorSet& gens)
{
    return !find_split(w, gens).has_value();
}

Decomposition decompose(const Word& w, const GeneratorSet& gens, std::int64_t index)
{
    if (auto cut = find_split(w, gens))
        throw SplitViolation("w_" + std::to_string(index) + " = " + display(w) + " splits as ("
                             + display(cut->left) + ")(" + display(cut->middle) + ")("
                             + display(cut->right) + ") with both overlapping parts in the submonoid");
    const auto pre = gens.prefix_members(w.view());
    const auto suf = gens.suffix_members(w.view());
    std::size_t p = w.size();
    while (!pre[p])
        --p;
    std::size_t s = 0;
    while (!suf[s])
        ++s;
    // No split means p < s, so the middle is nonempty.
    return Decomposition{w.substr(0, p), w.substr(p, s - p), w.substr(s), index};
}

namespace {

void require_bound(std::size_t n)
{
    if (n < 2)
        throw InvalidArgument("bounded checks need at least two words (N >= 2)");
}

std::int64_t as_index(std::size_t zero_based)
{
    return static_cast<std::int64_t>(zero_based) + 1;
}

} // namespace

TheoremAnalysis check_theorem(std::span<const Word> words)
{
    require_bound(words.size());
    TheoremAnalysis out;
    out.words.assign(words.begin(), words.end());
    out.closure = closure(words);
    out.verdict.bound = static_cast<std::int64_t>(words.size());

    const auto& gens = out.closure.generators;
    const std::size_t count = words.size();
    out.decompositions.resize(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (auto cut = find_split(words[n], gens)) {
            out.verdict.violations.push_back(
                {"split", {as_index(n)}, {cut->left, cut->middle, cut->right}});
            continue;
        }
        out.decompositions[n] = decompose(words[n], gens, as_index(n));
    }

    for (std::size_t n = 0; n < count; ++n) {
        const auto& dn = out.decompositions[n];
        if (!dn)
            continue;
        for (std::size_t m = 0; m < count; ++m) {
            if (m != n && is_subword(dn->middle.view(), words[m].view()))
                out.verdict.violations.push_back(
                    {"middle-occurs-elsewhere", {as_index(n), as_index(m)}, {dn->middle, words[m]}});
            if (m == n && is_subword(dn->middle.view(), dn->prefix.view()))
                out.verdict.violations.push_back(
                    {"middle-in-own-prefix", {as_index(n)}, {dn->middle, dn->prefix}});
            if (m != n && out.decompositions[m]
                && is_subword(dn->middle.view(), out.decompositions[m]->prefix.view()))
                out.verdict.warnings.push_back({"middle-in-other-prefix",
                                                {as_index(n), as_index(m)},
                                                {dn->middle, out.decompositions[m]->prefix}});
        }
    }
    return out;
}

TheoremAnalysis check_theorem(const SequenceFamily& family, std::int64_t bound)
{
    require_bound(bound < 0 ? 0 : static_cast<std::size_t>(bound));
    const auto words = family.first(bound);
    return check_theorem(words);
}

Verdict check_corollary(std::span<const Word> words)
{
    require_bound(words.size());
    Verdict v;
    v.bound = static_cast<std::int64_t>(words.size());
    for (std::size_t n = 0; n < words.size(); ++n) {
        const auto wn = words[n].view();
        for (std::size_t m = 0; m < words.size(); ++m) {
            const auto wm = words[m].view();
            // Shortest offending prefix only; one entry per (n, m).
            for (std::size_t len = 1; len < wn.size(); ++len) {
                if (is_suffix(wn.substr(0, len), wm)) {
                    v.violations.push_back(
                        {"prefix-is-suffix", {as_index(n), as_index(m)}, {words[n].substr(0, len)}});
                    break;
                }
            }
            if (m != n && is_subword(wn, wm))
                v.violations.push_back({"subword", {as_index(n), as_index(m)}, {words[n], words[m]}});
        }
    }
    return v;
}

Verdict check_corollary(const SequenceFamily& family, std::int64_t bound)
{
    require_bound(bound < 0 ? 0 : static_cast<std::size_t>(bound));
    const auto words = family.first(bound);
    return check_corollary(words);
}

Verdict check_sandwich(const GeneratorSet& gens, std::span<const Word> words)
{
    Verdict v;
    v.bound = static_cast<std::int64_t>(words.size());
    for (const char* letter : {"a", "b"}) {
        if (gens.contains(std::string_view(letter))) {
            v.applicable = false;
            v.violations.push_back({"not-applicable", {}, {Word(letter)}});
            return v;
        }
    }
    if (words.empty() || words.front().empty())
        return v;

    const char first = words.front()[0];
    const char last = first == 'a' ? 'b' : 'a';
    const auto oriented = [&](const Word& w) {
        return w.size() >= 2 && w[0] == first && w[w.size() - 1] == last;
    };
    for (std::size_t i = 0; i < words.size(); ++i)
        if (!oriented(words[i]))
            v.violations.push_back({"word-orientation", {as_index(i)}, {words[i]}});
    for (const auto& g : gens.generators())
        if (!oriented(g))
            v.violations.push_back({"generator-orientation", {}, {g}});
    return v;
}

Json to_json(const Verdict& verdict)
{
    const auto list = [](const std::vector<Violation>& vs) {
        auto arr = Json::array();
        for (const auto& v : vs) {
            auto witness = Json::array();
            for (const auto& w : v.witness)
                witness.push_back(w.str());
            arr.push_back({{"condition", v.condition}, {"indices", v.indices}, {"witness", witness}});
        }
        return arr;
    };
    Json out = {{"holds", verdict.holds()},
                {"bound", verdict.bound},
                {"violations", list(verdict.violations)}};
    if (!verdict.warnings.empty())
        out["warnings"] = list(verdict.warnings);
    if (!verdict.applicable)
        out["applicable"] = false;
    return out;
}

Json to_json(const Decomposition& d)
{
    return {{"index", d.index}, {"prefix", d.prefix.str()}, {"middle", d.middle.str()}, {"suffix", d.suffix.str()}};
}

} // namespace uniseq
