#ifndef LRUSIM_PL_CACHE_HPP
#define LRUSIM_PL_CACHE_HPP

#include "lrusim/cache.hpp"

namespace lrusim {

// Partition-Locked cache: every line carries a lock bit, and a locked line
// is never evicted; a miss whose victim is locked is served uncached
// (Bypass). Two variants differ in what a hit on a locked line does to the
// replacement state:
//
//   Original  - the hit updates the state as usual. The sender can still
//               steer evictions of unlocked lines through a locked one.
//   LruLocked - hits on locked lines leave the replacement state alone,
//               which closes that channel.
class PlCacheModel : public CacheModel {
public:
    enum class Variant { Original, LruLocked };

    PlCacheModel(CacheGeometry geom, Policy policy, Variant variant, uint64_t seed = 0)
        : CacheModel(geom, policy, seed), variant_(variant) {}

    AccessOutcome access(uint64_t addr) override {
        return access_impl(addr, variant_ == Variant::Original);
    }

    // Fetch-and-lock: fills the line first if it is not resident.
    void lock(uint64_t addr);
    void unlock(uint64_t addr); // no-op when the line is absent
    bool locked(uint64_t addr) const;

    Variant variant() const { return variant_; }

private:
    Variant variant_;
};

const char* to_string(PlCacheModel::Variant v);
PlCacheModel::Variant pl_variant_from_string(const std::string& name);

} // namespace lrusim

#endif
