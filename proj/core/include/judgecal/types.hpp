#pragma once

#include <optional>
#include <string>
#include <vector>

#include "judgecal/errors.hpp"

namespace judgecal {

enum class Slot { First, Second };

inline Slot other_slot(Slot s) { return s == Slot::First ? Slot::Second : Slot::First; }

inline const char* slot_name(Slot s) { return s == Slot::First ? "first" : "second"; }

/// The five LLMBar subsets plus a catch-all for non-LLMBar data
/// (synthetic populations, ad-hoc sets).
enum class Subset { Natural, Neighbor, Manual, GPTOut, GPTInst, Other };

inline const char* subset_name(Subset s) {
    switch (s) {
        case Subset::Natural: return "Natural";
        case Subset::Neighbor: return "Neighbor";
        case Subset::Manual: return "Manual";
        case Subset::GPTOut: return "GPTOut";
        case Subset::GPTInst: return "GPTInst";
        case Subset::Other: return "Other";
    }
    return "Other";
}

std::optional<Subset> subset_from_name(const std::string& name);

/// Canonical report order.
inline constexpr Subset kSubsetOrder[] = {Subset::Natural, Subset::Neighbor,
                                          Subset::Manual, Subset::GPTOut,
                                          Subset::GPTInst, Subset::Other};

enum class AnswerOrigin { Dataset, ModelGenerated };

struct Instruction {
    std::string id;
    std::string text;
    std::string source_dataset;

    bool operator==(const Instruction&) const = default;
};

struct Answer {
    std::string text;
    AnswerOrigin origin = AnswerOrigin::Dataset;

    bool operator==(const Answer&) const = default;
};

struct PairwiseInstance {
    std::string id;
    Instruction instruction;
    Answer answer1;
    Answer answer2;
    Slot gold_label = Slot::First;
    Subset subset = Subset::Other;

    const Answer& answer(Slot s) const { return s == Slot::First ? answer1 : answer2; }

    bool operator==(const PairwiseInstance&) const = default;
};

/// One instruction with its preferred answer; the rejected answer is kept
/// when the source record carries one (used for natural training pairs).
struct PoolEntry {
    std::string id;
    Instruction instruction;
    Answer preferred;
    std::optional<Answer> rejected;

    bool operator==(const PoolEntry&) const = default;
};

struct InstructionAnswerPool {
    std::vector<PoolEntry> entries;
    /// Records rejected during lenient loading.
    std::size_t warning_count = 0;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
};

inline std::optional<Subset> subset_from_name(const std::string& name) {
    for (Subset s : kSubsetOrder)
        if (name == subset_name(s)) return s;
    // lowercase aliases for config keys
    if (name == "natural") return Subset::Natural;
    if (name == "neighbor") return Subset::Neighbor;
    if (name == "manual") return Subset::Manual;
    if (name == "gptout") return Subset::GPTOut;
    if (name == "gptinst") return Subset::GPTInst;
    if (name == "other") return Subset::Other;
    return std::nullopt;
}

}  // namespace judgecal
