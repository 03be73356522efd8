#include "uniseq/witness.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

namespace uniseq {

// ---------------------------------------------------------------------------
// States

std::string entry_text(const Entry& e)
{
    if (const auto* g = std::get_if<GroupWord>(&e))
        return g->str();
    return "y" + std::to_string(std::get<Atom>(e).id);
}

Entry parse_entry(std::string_view text)
{
    if (!text.empty() && text.front() == 'y') {
        const auto digits = text.substr(1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("atom '" + std::string(text) + "' must be y followed by digits");
        return Atom{static_cast<std::uint32_t>(std::stoul(std::string(digits)))};
    }
    return GroupWord::parse(text);
}

StackState::StackState(Entry tail, std::vector<Entry> entries) : tail_(std::move(tail)), entries_(std::move(entries))
{
    if (entries_.empty()) {
        if (!std::holds_alternative<GroupWord>(tail_))
            throw InvalidArgument("x_0 must be a free group element, but the state is constantly an atom");
        entries_.push_back(tail_);
    }
    if (!std::holds_alternative<GroupWord>(entries_.back()))
        throw InvalidArgument("x_0 must be a free group element, got " + entry_text(entries_.back()));
    auto first_kept = entries_.begin();
    while (std::distance(first_kept, entries_.end()) > 1 && *first_kept == tail_)
        ++first_kept;
    entries_.erase(entries_.begin(), first_kept);
}

const Entry& StackState::at(std::size_t i) const
{
    return i < entries_.size() ? entries_[entries_.size() - 1 - i] : tail_;
}

std::vector<Entry> StackState::materialize(std::size_t count) const
{
    std::vector<Entry> out;
    if (count > entries_.size())
        out.assign(count - entries_.size(), tail_);
    out.insert(out.end(), entries_.begin(), entries_.end());
    return out;
}

StackState StackState::pushed(GroupWord g) const
{
    auto entries = entries_;
    entries.emplace_back(std::move(g));
    return StackState(tail_, std::move(entries));
}

StackState StackState::times_bottom(const GroupWord& g) const
{
    auto entries = entries_;
    entries.back() = std::get<GroupWord>(entries.back()) * g;
    return StackState(tail_, std::move(entries));
}

Json to_json(const StackState& x)
{
    Json entries = Json::array();
    for (const auto& e : x.entries())
        entries.push_back(entry_text(e));
    return {{"tail", entry_text(x.tail())}, {"entries", std::move(entries)}};
}

StackState state_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("tail") || !j["tail"].is_string() || !j.contains("entries")
        || !j["entries"].is_array())
        throw ParseError("a state needs a string \"tail\" and an array \"entries\"");
    std::vector<Entry> entries;
    for (const auto& e : j["entries"]) {
        if (!e.is_string())
            throw ParseError("state entries must be strings");
        entries.push_back(parse_entry(e.get<std::string>()));
    }
    return StackState(parse_entry(j["tail"].get<std::string>()), std::move(entries));
}

std::string canonical_text(const StackState& x)
{
    return to_json(x).dump();
}

// ---------------------------------------------------------------------------
// Pseudo-random states

namespace {

std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class StateGenerator {
public:
    StateGenerator(std::uint64_t seed, std::uint32_t atoms) : rng_(seed), atoms_(std::max<std::uint32_t>(atoms, 1)) {}

    StackState next()
    {
        const auto depth = 1 + pick(5);
        std::vector<Entry> entries;
        for (std::uint64_t i = 1; i < depth; ++i)
            entries.push_back(any_entry());
        entries.emplace_back(pick(2) ? positive_word() : group_word());
        Entry tail = pick(2) ? Entry(Atom{static_cast<std::uint32_t>(pick(atoms_))}) : Entry(group_word());
        return StackState(std::move(tail), std::move(entries));
    }

private:
    std::uint64_t pick(std::uint64_t k) { return rng_() % k; }

    GroupWord group_word()
    {
        std::string s;
        for (auto len = pick(5); len > 0; --len)
            s.push_back("abAB"[pick(4)]);
        return GroupWord::parse(s);
    }

    GroupWord positive_word()
    {
        std::string s;
        for (auto len = 1 + pick(3); len > 0; --len)
            s.push_back("ab"[pick(2)]);
        return GroupWord::parse(s);
    }

    Entry any_entry()
    {
        const auto r = pick(20);
        if (r < 8)
            return positive_word();
        if (r < 15)
            return group_word();
        return Atom{static_cast<std::uint32_t>(pick(atoms_))};
    }

    std::mt19937_64 rng_;
    std::uint32_t atoms_;
};

} // namespace

std::vector<StackState> sample_states(std::uint64_t seed, std::size_t count, std::uint32_t atom_count)
{
    StateGenerator gen(splitmix64(seed ^ 0x73616d706c6573ULL), atom_count);
    std::vector<StackState> out;
    std::set<StackState> seen;
    for (std::size_t attempts = 0; out.size() < count && attempts < 64 * count + 64; ++attempts) {
        auto x = gen.next();
        if (seen.insert(x).second)
            out.push_back(std::move(x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Targets

struct TargetFunction::Memo {
    std::mutex mutex;
    std::map<StackState, StackState> cache;
};

TargetFunction TargetFunction::identity()
{
    return TargetFunction(Table{});
}

TargetFunction TargetFunction::table(std::map<StackState, StackState> mapping)
{
    return TargetFunction(Table{std::move(mapping)});
}

TargetFunction TargetFunction::seeded(std::uint64_t seed, std::int64_t index)
{
    return TargetFunction(Seeded{seed, index, std::make_shared<Memo>()});
}

StackState TargetFunction::operator()(const StackState& x) const
{
    if (const auto* table = std::get_if<Table>(&impl_)) {
        auto it = table->mapping.find(x);
        return it == table->mapping.end() ? x : it->second;
    }
    const auto& seeded = std::get<Seeded>(impl_);
    {
        std::lock_guard lock(seeded.memo->mutex);
        if (auto it = seeded.memo->cache.find(x); it != seeded.memo->cache.end())
            return it->second;
    }
    const auto key = splitmix64(seeded.seed ^ splitmix64(static_cast<std::uint64_t>(seeded.index)
                                                         ^ splitmix64(fnv1a(canonical_text(x)))));
    auto image = StateGenerator(key, 8).next();
    std::lock_guard lock(seeded.memo->mutex);
    // A concurrent caller may have inserted the same (equal) value already.
    return seeded.memo->cache.emplace(x, std::move(image)).first->second;
}

// ---------------------------------------------------------------------------
// The homomorphisms

WitnessContext make_context(const TheoremAnalysis& analysis, std::vector<TargetFunction> targets)
{
    WitnessContext ctx;
    ctx.collapse_words = analysis.closure.generators.generators();
    for (const auto& d : analysis.decompositions) {
        if (!d)
            throw HypothesisNotVerified("a word fails the split condition, so it has no decomposition");
        ctx.decompositions.push_back(*d);
    }
    if (targets.size() < ctx.decompositions.size())
        throw InvalidArgument("need one target per index: got " + std::to_string(targets.size()) + " for "
                              + std::to_string(ctx.decompositions.size()) + " words");
    targets.resize(ctx.decompositions.size(), TargetFunction::identity());
    ctx.targets = std::move(targets);
    return ctx;
}

namespace {

// Calls visit(i, spelled) for i = 1, 2, ... where x_{i-1}, ..., x_0 are all
// positive, spelled = x_{i-1}···x_0 has at most max_len letters and x_i is a
// group word.
template <class Visit>
void scan_runs(const StackState& x, std::size_t max_len, Visit&& visit)
{
    std::string spelled;
    for (std::size_t i = 1;; ++i) {
        const auto* g = std::get_if<GroupWord>(&x.at(i - 1));
        if (g == nullptr || !g->is_positive())
            return;
        spelled.insert(0, g->str());
        if (spelled.size() > max_len)
            return;
        if (std::holds_alternative<GroupWord>(x.at(i)))
            visit(i, std::string_view(spelled));
    }
}

// (..., x_{i+1}, x_i, x_{i-1}, ..., x_0) -> (..., x_{i+1}, x_i · g)
StackState replace_run(const StackState& x, std::size_t run, const GroupWord& g)
{
    auto entries = x.materialize(std::max(x.depth(), run + 1));
    entries.resize(entries.size() - run);
    entries.back() = std::get<GroupWord>(entries.back()) * g;
    return StackState(x.tail(), std::move(entries));
}

} // namespace

StackState push_letter(const StackState& x, char letter)
{
    if (letter != 'a' && letter != 'b')
        throw InvalidArgument(std::string("cannot push letter '") + letter + "'");
    return x.pushed(GroupWord::parse(std::string_view(&letter, 1)));
}

StackState collapse(const StackState& x, const WitnessContext& ctx, StepCounters* counters)
{
    std::size_t max_len = 0;
    for (const auto& v : ctx.collapse_words)
        max_len = std::max(max_len, v.size());

    std::vector<std::pair<std::size_t, Word>> matches;
    scan_runs(x, max_len, [&](std::size_t i, std::string_view spelled) {
        for (const auto& v : ctx.collapse_words)
            if (v.view() == spelled)
                matches.emplace_back(i, v);
    });
    if (matches.empty())
        return x;
    if (matches.size() > 1)
        throw AmbiguousCollapse("collapse words " + display(matches[0].second) + " and "
                                + display(matches[1].second) + " both end the state "
                                + canonical_text(x));
    if (counters != nullptr)
        ++counters->collapses;
    return replace_run(x, matches.front().first, GroupWord::from_word(matches.front().second));
}

StackState fire_target(const StackState& x, const WitnessContext& ctx, StepCounters* counters)
{
    std::size_t max_len = 0;
    for (const auto& d : ctx.decompositions)
        max_len = std::max(max_len, d.middle.size());

    std::vector<std::pair<std::size_t, std::size_t>> matches; // (run length, decomposition)
    scan_runs(x, max_len, [&](std::size_t i, std::string_view spelled) {
        for (std::size_t k = 0; k < ctx.decompositions.size(); ++k)
            if (ctx.decompositions[k].middle.view() == spelled)
                matches.emplace_back(i, k);
    });
    if (matches.empty())
        return x;
    if (matches.size() > 1)
        throw AmbiguousCollapse("middle words of w_" + std::to_string(ctx.decompositions[matches[0].second].index)
                                + " and w_" + std::to_string(ctx.decompositions[matches[1].second].index)
                                + " both end the state " + canonical_text(x));
    if (counters != nullptr)
        ++counters->fires;

    const auto [run, k] = matches.front();
    const auto& d = ctx.decompositions[k];
    const auto undone = replace_run(x, run, GroupWord::from_word(d.prefix).inverse());
    return ctx.targets[k](undone).times_bottom(GroupWord::from_word(d.suffix).inverse());
}

StackState step(const StackState& x, char letter, Hom hom, const WitnessContext& ctx, StepCounters* counters)
{
    auto y = push_letter(x, letter);
    if (letter == 'a')
        return y;
    y = collapse(y, ctx, counters);
    if (hom == Hom::phi)
        y = fire_target(y, ctx, counters);
    return y;
}

StackState eval_hom(const Word& w, const StackState& x, Hom hom, const WitnessContext& ctx, StepCounters* counters)
{
    if (w.empty())
        throw InvalidArgument("homomorphisms are defined on nonempty words only");
    StackState y = x;
    for (char letter : w.view())
        y = step(y, letter, hom, ctx, counters);
    return y;
}

// ---------------------------------------------------------------------------
// Verification

Json to_json(const WitnessReport& report)
{
    const auto counter = [](const CheckCounter& c) { return Json{{"passed", c.passed}, {"failed", c.failed}}; };
    Json out = {{"bound", report.bound},
                {"samples", report.samples},
                {"checks",
                 {{"target", counter(report.target)},
                  {"append", counter(report.append)},
                  {"agreement", counter(report.agreement)},
                  {"stacking", counter(report.stacking)},
                  {"fire", counter(report.fire)}}},
                {"live_states", report.live_states}};
    if (report.first_failure) {
        const auto& f = *report.first_failure;
        out["first_failure"] = {{"check", f.check}, {"index", f.index}, {"word", f.word.str()},
                                {"state", Json::parse(f.state)}, {"expected", Json::parse(f.expected)},
                                {"actual", Json::parse(f.actual)}};
    } else {
        out["first_failure"] = nullptr;
    }
    return out;
}

VerificationFailure::VerificationFailure(WitnessReport report)
    : Error("witness verification failed: " + report.first_failure.value().check + " check at index "
            + std::to_string(report.first_failure->index)),
      report_(std::move(report))
{
}

namespace {

// (u)Ψ on x must leave x's entries in place and push positive entries
// spelling u on top of x_0.
// Does δ change the state when nothing is being pushed?
bool is_live(const StackState& x, const WitnessContext& ctx)
{
    return fire_target(x, ctx) != x;
}

// Is `after` equal to `before` with j >= 1 positive entries spelling u
// pushed on top? Compared index by index, since canonical forms may drop a
// stored entry once it is no longer x_0.
bool pushes_spelling(const StackState& before, const StackState& after, const Word& u)
{
    if (after.tail() != before.tail())
        return false;
    const std::size_t span = std::max(before.depth(), after.depth()) + 1;
    for (std::size_t j = 1; j <= u.size(); ++j) {
        std::string spelled;
        bool positive = true;
        for (std::size_t i = j; i-- > 0 && positive;) {
            const auto* g = std::get_if<GroupWord>(&after.at(i));
            positive = g != nullptr && g->is_positive();
            if (positive)
                spelled += g->str();
        }
        if (!positive || spelled != u.str())
            continue;
        bool kept = true;
        for (std::size_t i = 0; i < span && kept; ++i)
            kept = after.at(i + j) == before.at(i);
        if (kept)
            return true;
    }
    return false;
}

} // namespace

WitnessReport verify_witness(const SequenceFamily& family, std::int64_t bound, std::vector<TargetFunction> targets,
                             std::span<const StackState> samples)
{
    const auto analysis = check_theorem(family, bound);
    if (!analysis.verdict.holds()) {
        const auto& v = analysis.verdict.violations.front();
        throw HypothesisNotVerified("hypothesis check fails at bound " + std::to_string(bound) + " ("
                                    + v.condition + " at index " + std::to_string(v.indices.front()) + ")");
    }
    const auto ctx = make_context(analysis, std::move(targets));

    WitnessReport report;
    report.bound = bound;
    report.samples = samples.size();

    const auto fail = [&](CheckCounter& counter, const char* name, std::int64_t index, const Word& w,
                          const StackState& x, const Json& expected, const StackState& actual) {
        ++counter.failed;
        if (!report.first_failure)
            report.first_failure = WitnessFailure{name, index, w, to_json(x).dump(), expected.dump(), to_json(actual).dump()};
    };
    const auto record = [&](CheckCounter& counter, const char* name, std::int64_t index, const Word& w,
                            const StackState& x, const StackState& expected, const StackState& actual) {
        if (expected == actual)
            ++counter.passed;
        else
            fail(counter, name, index, w, x, to_json(expected), actual);
    };

    for (const auto& d : ctx.decompositions) {
        const auto k = static_cast<std::size_t>(d.index - 1);
        const Word w = analysis.words[k];
        for (const auto& x : samples) {
            const auto expected = ctx.targets[k](x);
            const auto actual = eval_hom(w, x, Hom::phi, ctx);
            record(report.target, "target", d.index, w, x, expected, actual);
            if (expected != actual
                && (is_live(expected, ctx) || is_live(x.times_bottom(GroupWord::from_word(d.prefix)), ctx)))
                ++report.live_states;

            const auto pushed = eval_hom(d.middle, x, Hom::psi, ctx);
            if (pushes_spelling(x, pushed, d.middle))
                ++report.stacking.passed;
            else
                fail(report.stacking, "stacking", d.index, d.middle, x,
                     Json("entries of x followed by positive entries spelling " + d.middle.str()), pushed);

            record(report.fire, "fire", d.index, d.middle, x, fire_target(pushed, ctx),
                   eval_hom(d.middle, x, Hom::phi, ctx));
        }
    }

    std::set<Word> members = ctx.collapse_words;
    for (const auto& d : ctx.decompositions) {
        if (!d.prefix.empty())
            members.insert(d.prefix);
        if (!d.suffix.empty())
            members.insert(d.suffix);
    }
    for (const auto& v : members) {
        for (const auto& x : samples) {
            const auto psi = eval_hom(v, x, Hom::psi, ctx);
            record(report.append, "append", 0, v, x, x.times_bottom(GroupWord::from_word(v)), psi);

            StepCounters counters;
            const auto phi = eval_hom(v, x, Hom::phi, ctx, &counters);
            if (counters.fires != 0) {
                fail(report.agreement, "agreement", 0, v, x, Json("no target firing"), phi);
                if (is_live(psi, ctx))
                    ++report.live_states;
            }
            else
                record(report.agreement, "agreement", 0, v, x, psi, phi);
        }
    }

    if (!report.ok())
        throw VerificationFailure(std::move(report));
    return report;
}

} // namespace uniseq
