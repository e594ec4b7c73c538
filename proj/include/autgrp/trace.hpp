#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace autgrp {

inline uint64_t hash_mix(uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

struct DeviationValue {
    uint64_t position;  // first mismatching token position (global)
    uint64_t value;     // hash over the mismatch and the k-cell extension
    bool operator==(const DeviationValue&) const = default;
    auto operator<=>(const DeviationValue&) const = default;
};

// Append-only invariant token stream recorded during refinement. May compare
// itself position-wise against a reference stream; after the first mismatch,
// refinement continues for `extension_budget` more cell-split events to make
// the recorded deviation value more distinct, then requests an early-out.
class Trace {
public:
    Trace() = default;

    // Compare appended tokens against reference[offset...].
    void set_compare(const Trace* reference, size_t offset, int extension_budget) {
        reference_ = reference;
        ref_offset_ = offset;
        budget_ = extension_budget;
    }
    bool compare_mode() const { return reference_ != nullptr; }

    void append(uint64_t token) {
        if (reference_ && !deviated_) {
            size_t gpos = ref_offset_ + tokens_.size();
            if (gpos >= reference_->size() || reference_->tokens_[gpos] != token) {
                deviated_ = true;
                dev_pos_ = gpos;
                dev_hash_ = hash_mix(0x2545f4914f6cdd1dULL, token);
            }
        } else if (deviated_) {
            dev_hash_ = hash_mix(dev_hash_, token);
        }
        tokens_.push_back(token);
    }

    // Called by the refiner once per cell-split event after its tokens.
    void end_split_event() {
        if (deviated_) ++events_after_deviation_;
    }

    // False once a deviation has been recorded and the extension budget spent.
    bool keep_refining() const {
        return !deviated_ || events_after_deviation_ < budget_;
    }

    bool deviated() const { return deviated_; }

    // Recorded deviation, or nullopt if the stream matched the reference.
    std::optional<DeviationValue> deviation_value() const {
        if (!reference_) throw std::logic_error("trace is not in compare mode");
        if (!deviated_) return std::nullopt;
        return DeviationValue{dev_pos_, dev_hash_};
    }

    size_t size() const { return tokens_.size(); }
    const std::vector<uint64_t>& tokens() const { return tokens_; }

private:
    std::vector<uint64_t> tokens_;
    const Trace* reference_ = nullptr;
    size_t ref_offset_ = 0;
    int budget_ = 5;
    bool deviated_ = false;
    int events_after_deviation_ = 0;
    uint64_t dev_pos_ = 0;
    uint64_t dev_hash_ = 0;
};

} // namespace autgrp
