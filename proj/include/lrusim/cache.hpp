#ifndef LRUSIM_CACHE_HPP
#define LRUSIM_CACHE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lrusim/geometry.hpp"
#include "lrusim/replacement.hpp"
#include "lrusim/rng.hpp"

namespace lrusim {

enum class AccessKind { Hit, Miss, Bypass };

struct AccessOutcome {
    AccessKind kind = AccessKind::Miss;
    uint32_t way = 0;                      // meaningless for Bypass
    std::optional<uint64_t> evicted_tag;   // set only when a valid line was replaced
};

struct LineMeta {
    bool valid = false;
    bool locked = false; // PL-cache variant only; never set by the base model
    uint64_t tag = 0;
};

// One set-associative cache with a pluggable replacement policy.
// Single-threaded: one access at a time, no sharing between instances.
class CacheModel {
public:
    CacheModel(CacheGeometry geom, Policy policy, uint64_t seed = 0);
    virtual ~CacheModel() = default;

    virtual AccessOutcome access(uint64_t addr) { return access_impl(addr, true); }

    // Pure lookup, no state changes.
    std::optional<uint32_t> lookup(uint64_t addr) const;
    bool resident(uint64_t addr) const { return lookup(addr).has_value(); }

    // Victim the policy would pick for this set. Rejects sets that still
    // have an invalid way: misses fill those first.
    uint32_t find_victim(uint32_t set);

    const CacheGeometry& geometry() const { return geom_; }
    Policy policy() const { return policy_; }
    uint32_t set_index(uint64_t addr) const { return geom_.set_index(addr); }
    uint64_t tag_of(uint64_t addr) const { return geom_.tag_of(addr); }
    uint64_t address_for(uint64_t tag, uint32_t set) const { return geom_.address_for(tag, set); }

    const ReplacementState& set_state(uint32_t set) const { return state_[set]; }
    ReplacementState& set_state(uint32_t set) { return state_[set]; }
    const LineMeta& line(uint32_t set, uint32_t way) const { return lines_[set * geom_.ways + way]; }

    // Experiment setup: drop a tag into a slot without touching policy state.
    void place_line(uint32_t set, uint32_t way, uint64_t tag);
    void invalidate_all();

    uint64_t hits() const { return hits_; }
    uint64_t misses() const { return misses_; }
    uint64_t bypasses() const { return bypasses_; }
    uint64_t accesses() const { return hits_ + misses_ + bypasses_; }
    void reset_counters() { hits_ = misses_ = bypasses_ = 0; }

protected:
    // update_locked_hits=false suppresses replacement-state updates on hits
    // to locked lines (the repaired PL design); a miss whose victim is
    // locked is served uncached either way.
    AccessOutcome access_impl(uint64_t addr, bool update_locked_hits);

    LineMeta& line_mut(uint32_t set, uint32_t way) { return lines_[set * geom_.ways + way]; }

private:
    CacheGeometry geom_;
    Policy policy_;
    std::vector<LineMeta> lines_;
    std::vector<ReplacementState> state_;
    uint64_t hits_ = 0, misses_ = 0, bypasses_ = 0;
};

} // namespace lrusim

#endif
