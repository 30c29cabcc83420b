#ifndef LRUSIM_REPLACEMENT_HPP
#define LRUSIM_REPLACEMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lrusim/rng.hpp"

namespace lrusim {

enum class Policy { TrueLru, TreePlru, BitPlru, Fifo, Random };

const char* to_string(Policy p);
Policy policy_from_string(const std::string& name);

// Per-set replacement metadata for one policy.
//
//   TrueLru  - age per way, a permutation of 0..N-1, 0 = most recent
//   TreePlru - N-1 node bits in a complete binary tree (heap order);
//              bit 0 sends the victim walk left, updates point each node
//              on the accessed way's path away from it
//   BitPlru  - one MRU bit per way; victim is the lowest way with bit 0;
//              when an access sets the last zero bit, all bits reset to 0
//   Fifo     - fill sequence number per way, untouched on hits
//   Random   - seeded per-set generator, no other state
//
// victim() assumes the caller already checked the set is full.  It is a
// pure read for every policy except Random, which advances its generator.
class ReplacementState {
public:
    ReplacementState(Policy policy, uint32_t ways, Rng rng);

    uint32_t victim();
    void touch(uint32_t way);     // on hit, and on fill for recency policies
    void on_fill(uint32_t way);   // fill: records FIFO order, then touch semantics

    Policy policy() const { return policy_; }
    uint32_t ways() const { return ways_; }

    // State introspection for tests and experiment setup.
    const std::vector<uint8_t>& meta() const { return meta_; }
    std::vector<uint8_t>& meta() { return meta_; }

    bool operator==(const ReplacementState& o) const {
        return policy_ == o.policy_ && ways_ == o.ways_ && meta_ == o.meta_ &&
               fill_seq_ == o.fill_seq_;
    }

private:
    Policy policy_;
    uint32_t ways_;
    std::vector<uint8_t> meta_;      // ages / tree bits / MRU bits
    std::vector<uint64_t> fill_seq_; // FIFO only
    uint64_t fill_counter_ = 0;
    Rng rng_;
};

} // namespace lrusim

#endif
