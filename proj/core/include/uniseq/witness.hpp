#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "uniseq/closure.hpp"
#include "uniseq/conditions.hpp"
#include "uniseq/errors.hpp"
#include "uniseq/group_word.hpp"
#include "uniseq/json_fwd.hpp"
#include "uniseq/sequence.hpp"

namespace uniseq {

/// An opaque point of the auxiliary set Y, written "y<id>".
struct Atom {
    std::uint32_t id = 0;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

using Entry = std::variant<GroupWord, Atom>;

[[nodiscard]] std::string entry_text(const Entry& e);
[[nodiscard]] Entry parse_entry(std::string_view text);

/// An eventually constant sequence (..., x_2, x_1, x_0) over F(A) ∪ Y with
/// x_0 in F(A), stored exactly.
///
/// `entries()` lists the stored part top-down: front() is the highest stored
/// index x_k and back() is x_0. Every x_i above the stored part equals
/// `tail()`. The canonical form drops stored entries equal to the tail from
/// the top, but always keeps x_0.
class StackState {
public:
    /// Throws InvalidArgument if x_0 would not be a group word.
    StackState(Entry tail, std::vector<Entry> entries);

    [[nodiscard]] const Entry& tail() const noexcept { return tail_; }
    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t depth() const noexcept { return entries_.size(); }

    /// x_i; indices past the stored part read the tail.
    [[nodiscard]] const Entry& at(std::size_t i) const;
    [[nodiscard]] const GroupWord& bottom() const { return std::get<GroupWord>(entries_.back()); }

    /// x_{count-1}, ..., x_0 in storage order.
    [[nodiscard]] std::vector<Entry> materialize(std::size_t count) const;

    /// (..., x_1, x_0) -> (..., x_1, x_0, g)
    [[nodiscard]] StackState pushed(GroupWord g) const;
    /// (..., x_1, x_0) -> (..., x_1, x_0 · g)
    [[nodiscard]] StackState times_bottom(const GroupWord& g) const;

    friend bool operator==(const StackState&, const StackState&) = default;
    friend auto operator<=>(const StackState&, const StackState&) = default;

private:
    Entry tail_;
    std::vector<Entry> entries_;
};

[[nodiscard]] Json to_json(const StackState& x);
[[nodiscard]] StackState state_from_json(const Json& j);
/// Compact canonical serialization; used as the hashing key of seeded
/// targets.
[[nodiscard]] std::string canonical_text(const StackState& x);

/// A total deterministic map on states.
///
/// Table targets map listed states and fix every other state. Seeded targets
/// derive f(x) from a stable hash of (seed, index, canonical_text(x)) and
/// memoize the result; copies share one cache, which is safe to use from
/// several threads.
class TargetFunction {
public:
    static TargetFunction identity();
    static TargetFunction table(std::map<StackState, StackState> mapping);
    static TargetFunction seeded(std::uint64_t seed, std::int64_t index);

    [[nodiscard]] StackState operator()(const StackState& x) const;

private:
    struct Table {
        std::map<StackState, StackState> mapping;
    };
    struct Memo;
    struct Seeded {
        std::uint64_t seed = 0;
        std::int64_t index = 0;
        std::shared_ptr<Memo> memo;
    };

    explicit TargetFunction(std::variant<Table, Seeded> impl) : impl_(std::move(impl)) {}
    std::variant<Table, Seeded> impl_;
};

/// Deterministic pseudo-random states: mixed group words, positive words and
/// atoms from a pool of `atom_count` atoms.
[[nodiscard]] std::vector<StackState> sample_states(std::uint64_t seed, std::size_t count,
                                                    std::uint32_t atom_count = 8);

/// The data the homomorphisms are built from.
struct WitnessContext {
    /// Irredundant generators of the closure (the words γ collapses).
    std::set<Word> collapse_words;
    /// One decomposition per index; targets[i] belongs to decompositions[i].
    std::vector<Decomposition> decompositions;
    std::vector<TargetFunction> targets;
};

[[nodiscard]] WitnessContext make_context(const TheoremAnalysis& analysis, std::vector<TargetFunction> targets);

enum class Hom { psi, phi };

struct StepCounters {
    std::size_t collapses = 0; // γ changed the state
    std::size_t fires = 0;     // δ changed the state
};

/// α or β: push the single letter as the new x_0.
[[nodiscard]] StackState push_letter(const StackState& x, char letter);
/// γ: fold a top run spelling a collapse word into the entry beneath it.
[[nodiscard]] StackState collapse(const StackState& x, const WitnessContext& ctx, StepCounters* counters = nullptr);
/// δ: on a top run spelling some middle word u_n, undo p_n, apply f_n and
/// pre-cancel s_n.
[[nodiscard]] StackState fire_target(const StackState& x, const WitnessContext& ctx,
                                     StepCounters* counters = nullptr);

/// One letter of Ψ (a -> α, b -> β·γ) or Φ (a -> α, b -> β·γ·δ).
[[nodiscard]] StackState step(const StackState& x, char letter, Hom hom, const WitnessContext& ctx,
                              StepCounters* counters = nullptr);

/// x · (w)Ψ or x · (w)Φ, letters applied left to right. `w` must be nonempty.
[[nodiscard]] StackState eval_hom(const Word& w, const StackState& x, Hom hom, const WitnessContext& ctx,
                                  StepCounters* counters = nullptr);

struct CheckCounter {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct WitnessFailure {
    std::string check;
    std::int64_t index = 0;
    Word word;
    // Serialized JSON, kept as text so this header needs only json_fwd.
    std::string state;
    std::string expected;
    std::string actual;
};

struct WitnessReport {
    std::int64_t bound = 0;
    std::size_t samples = 0;
    CheckCounter target;     // (w_n)Φ agrees with f_n
    CheckCounter append;     // (v)Ψ appends v to x_0 for v in the submonoid
    CheckCounter agreement;  // (v)Φ = (v)Ψ with δ silent for v in the submonoid
    CheckCounter stacking;   // (u_n)Ψ pushes positive entries spelling u_n
    CheckCounter fire;       // (u_n)Φ = (u_n)Ψ followed by δ
    /// Failed target or agreement checks that pass through a state δ
    /// changes on its own: x·p_n or f_n(x) for a target check, x·v for an
    /// agreement check. Replaying p_n, s_n or v fires δ again on such a
    /// state, so these failures come from the construction itself.
    std::size_t live_states = 0;
    std::optional<WitnessFailure> first_failure;

    [[nodiscard]] bool ok() const noexcept { return !first_failure.has_value(); }
};

[[nodiscard]] Json to_json(const WitnessReport& report);

class VerificationFailure : public Error {
public:
    explicit VerificationFailure(WitnessReport report);
    [[nodiscard]] const WitnessReport& report() const noexcept { return report_; }

private:
    WitnessReport report_;
};

/// Runs Φ on w_1..w_N over every sample and checks (w_n)Φ = f_n exactly,
/// along with the intermediate identities the construction relies on.
/// Throws HypothesisNotVerified if the bounded hypothesis check fails and
/// VerificationFailure (carrying the full report) if any check fails.
[[nodiscard]] WitnessReport verify_witness(const SequenceFamily& family, std::int64_t bound,
                                           std::vector<TargetFunction> targets,
                                           std::span<const StackState> samples);

} // namespace uniseq
