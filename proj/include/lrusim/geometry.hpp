#ifndef LRUSIM_GEOMETRY_HPP
#define LRUSIM_GEOMETRY_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace lrusim {

// Set-associative cache shape. Defaults model an 8-way 32KB L1D with
// 64-byte lines (64 sets), the organization of the machines we model.
struct CacheGeometry {
    uint32_t num_sets = 64;
    uint32_t ways = 8;
    uint32_t line_bytes = 64;

    void validate() const {
        if (num_sets == 0 || !std::has_single_bit(num_sets))
            throw std::invalid_argument("num_sets must be a power of two");
        if (line_bytes == 0 || !std::has_single_bit(line_bytes))
            throw std::invalid_argument("line_bytes must be a power of two");
        if (ways == 0)
            throw std::invalid_argument("ways must be >= 1");
    }

    uint32_t offset_bits() const { return static_cast<uint32_t>(std::countr_zero(line_bytes)); }
    uint32_t set_bits() const { return static_cast<uint32_t>(std::countr_zero(num_sets)); }

    uint32_t set_index(uint64_t addr) const {
        return static_cast<uint32_t>((addr >> offset_bits()) & (num_sets - 1));
    }
    uint64_t tag_of(uint64_t addr) const {
        return addr >> (offset_bits() + set_bits());
    }
    // Address of the line with a given tag in a given set (offset 0).
    uint64_t address_for(uint64_t tag, uint32_t set) const {
        return (tag << (offset_bits() + set_bits())) |
               (static_cast<uint64_t>(set) << offset_bits());
    }
};

} // namespace lrusim

#endif
