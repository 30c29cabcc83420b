#include "lrusim/pl_cache.hpp"

#include <stdexcept>

namespace lrusim {

void PlCacheModel::lock(uint64_t addr) {
    auto way = lookup(addr);
    if (!way) {
        AccessOutcome out = access(addr);
        if (out.kind == AccessKind::Bypass)
            throw std::runtime_error("cannot lock: fill bypassed (victim locked)");
        way = out.way;
    }
    line_mut(set_index(addr), *way).locked = true;
}

void PlCacheModel::unlock(uint64_t addr) {
    auto way = lookup(addr);
    if (way)
        line_mut(set_index(addr), *way).locked = false;
}

bool PlCacheModel::locked(uint64_t addr) const {
    auto way = lookup(addr);
    return way && line(set_index(addr), *way).locked;
}

const char* to_string(PlCacheModel::Variant v) {
    return v == PlCacheModel::Variant::Original ? "original" : "lru-locked";
}

PlCacheModel::Variant pl_variant_from_string(const std::string& name) {
    if (name == "original") return PlCacheModel::Variant::Original;
    if (name == "lru-locked" || name == "lrulocked") return PlCacheModel::Variant::LruLocked;
    throw std::invalid_argument("unknown PL cache variant: " + name);
}

} // namespace lrusim
