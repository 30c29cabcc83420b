#include "lrusim/cache.hpp"

#include <stdexcept>

namespace lrusim {

CacheModel::CacheModel(CacheGeometry geom, Policy policy, uint64_t seed)
    : geom_(geom), policy_(policy) {
    geom_.validate();
    lines_.resize(static_cast<size_t>(geom_.num_sets) * geom_.ways);
    Rng root(seed);
    state_.reserve(geom_.num_sets);
    for (uint32_t s = 0; s < geom_.num_sets; ++s)
        state_.emplace_back(policy_, geom_.ways, root.child(s));
}

std::optional<uint32_t> CacheModel::lookup(uint64_t addr) const {
    uint32_t set = geom_.set_index(addr);
    uint64_t tag = geom_.tag_of(addr);
    for (uint32_t w = 0; w < geom_.ways; ++w) {
        const LineMeta& l = line(set, w);
        if (l.valid && l.tag == tag)
            return w;
    }
    return std::nullopt;
}

uint32_t CacheModel::find_victim(uint32_t set) {
    for (uint32_t w = 0; w < geom_.ways; ++w)
        if (!line(set, w).valid)
            throw std::logic_error("find_victim called on a set with an invalid way");
    return state_[set].victim();
}

AccessOutcome CacheModel::access_impl(uint64_t addr, bool update_locked_hits) {
    uint32_t set = geom_.set_index(addr);
    uint64_t tag = geom_.tag_of(addr);

    for (uint32_t w = 0; w < geom_.ways; ++w) {
        LineMeta& l = line_mut(set, w);
        if (l.valid && l.tag == tag) {
            ++hits_;
            if (update_locked_hits || !l.locked)
                state_[set].touch(w);
            return {AccessKind::Hit, w, std::nullopt};
        }
    }

    // Miss: fill the lowest invalid way if there is one.
    for (uint32_t w = 0; w < geom_.ways; ++w) {
        LineMeta& l = line_mut(set, w);
        if (!l.valid) {
            ++misses_;
            l.valid = true;
            l.tag = tag;
            state_[set].on_fill(w);
            return {AccessKind::Miss, w, std::nullopt};
        }
    }

    uint32_t v = state_[set].victim();
    LineMeta& l = line_mut(set, v);
    if (l.locked) {
        // Locked victim: the incoming line is served uncached and no
        // replacement state changes.
        ++bypasses_;
        return {AccessKind::Bypass, 0, std::nullopt};
    }
    ++misses_;
    uint64_t evicted = l.tag;
    l.tag = tag;
    state_[set].on_fill(v);
    return {AccessKind::Miss, v, evicted};
}

void CacheModel::place_line(uint32_t set, uint32_t way, uint64_t tag) {
    LineMeta& l = line_mut(set, way);
    l.valid = true;
    l.locked = false;
    l.tag = tag;
}

void CacheModel::invalidate_all() {
    for (auto& l : lines_)
        l = LineMeta{};
}

} // namespace lrusim
