#include "lrusim/replacement.hpp"

#include <bit>
#include <stdexcept>

namespace lrusim {

const char* to_string(Policy p) {
    switch (p) {
    case Policy::TrueLru: return "lru";
    case Policy::TreePlru: return "tree-plru";
    case Policy::BitPlru: return "bit-plru";
    case Policy::Fifo: return "fifo";
    case Policy::Random: return "random";
    }
    return "?";
}

Policy policy_from_string(const std::string& name) {
    if (name == "lru") return Policy::TrueLru;
    if (name == "tree-plru" || name == "tree") return Policy::TreePlru;
    if (name == "bit-plru" || name == "bit") return Policy::BitPlru;
    if (name == "fifo") return Policy::Fifo;
    if (name == "random") return Policy::Random;
    throw std::invalid_argument("unknown policy: " + name);
}

ReplacementState::ReplacementState(Policy policy, uint32_t ways, Rng rng)
    : policy_(policy), ways_(ways), rng_(rng) {
    if (ways == 0)
        throw std::invalid_argument("ways must be >= 1");
    switch (policy_) {
    case Policy::TrueLru:
        meta_.resize(ways);
        for (uint32_t w = 0; w < ways; ++w)
            meta_[w] = static_cast<uint8_t>(w);
        break;
    case Policy::TreePlru:
        if (!std::has_single_bit(ways))
            throw std::invalid_argument("tree-plru requires power-of-two associativity");
        meta_.assign(ways - 1, 0);
        break;
    case Policy::BitPlru:
        meta_.assign(ways, 0);
        break;
    case Policy::Fifo:
        fill_seq_.assign(ways, 0);
        break;
    case Policy::Random:
        break;
    }
}

uint32_t ReplacementState::victim() {
    switch (policy_) {
    case Policy::TrueLru:
        for (uint32_t w = 0; w < ways_; ++w)
            if (meta_[w] == ways_ - 1)
                return w;
        throw std::logic_error("lru ages are not a permutation");
    case Policy::TreePlru: {
        uint32_t n = 0;
        while (n < ways_ - 1)
            n = 2 * n + 1 + meta_[n];
        return n - (ways_ - 1);
    }
    case Policy::BitPlru:
        for (uint32_t w = 0; w < ways_; ++w)
            if (meta_[w] == 0)
                return w;
        throw std::logic_error("bit-plru MRU bits saturated");
    case Policy::Fifo: {
        uint32_t oldest = 0;
        for (uint32_t w = 1; w < ways_; ++w)
            if (fill_seq_[w] < fill_seq_[oldest])
                oldest = w;
        return oldest;
    }
    case Policy::Random:
        return rng_.next_below(ways_);
    }
    throw std::logic_error("unreachable");
}

void ReplacementState::touch(uint32_t way) {
    if (way >= ways_)
        throw std::out_of_range("way out of range");
    switch (policy_) {
    case Policy::TrueLru: {
        uint8_t age = meta_[way];
        for (uint32_t w = 0; w < ways_; ++w)
            if (meta_[w] < age)
                ++meta_[w];
        meta_[way] = 0;
        break;
    }
    case Policy::TreePlru: {
        uint32_t n = way + (ways_ - 1);
        while (n > 0) {
            uint32_t parent = (n - 1) / 2;
            meta_[parent] = (n == 2 * parent + 1) ? 1 : 0;
            n = parent;
        }
        break;
    }
    case Policy::BitPlru: {
        meta_[way] = 1;
        bool all = true;
        for (uint32_t w = 0; w < ways_; ++w)
            if (meta_[w] == 0) { all = false; break; }
        if (all)
            for (uint32_t w = 0; w < ways_; ++w)
                meta_[w] = 0;
        break;
    }
    case Policy::Fifo:
    case Policy::Random:
        break; // no recency state
    }
}

void ReplacementState::on_fill(uint32_t way) {
    if (policy_ == Policy::Fifo) {
        if (way >= ways_)
            throw std::out_of_range("way out of range");
        fill_seq_[way] = ++fill_counter_;
        return;
    }
    touch(way);
}

} // namespace lrusim
