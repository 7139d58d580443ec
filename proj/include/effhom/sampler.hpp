#pragma once

#include "effhom/coefficient.hpp"
#include "effhom/element.hpp"
#include "effhom/module.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace effhom {

/// Window and element shape used by the law checkers.
struct SamplerConfig {
    Degree lo = -8;
    Degree hi = 8;
    std::size_t samples = 32;
    std::uint64_t seed = 7;
    std::int64_t coeffBound = 20;
    std::size_t support = 5;
    GeneratorIndex maxGen = 16;
};

/// Deterministic random elements.
///
/// Every (law, degree, sample index) triple gets its own stream derived from
/// the seed, so reports do not depend on evaluation order.
class Sampler {
  public:
    explicit Sampler(SamplerConfig config = {}) : config_(config) {
        if (config_.lo > config_.hi)
            throw std::invalid_argument("empty degree range");
        if (config_.samples == 0)
            throw std::invalid_argument("samples must be at least 1");
        if (config_.coeffBound < 0)
            throw std::invalid_argument("coefficient bound must be non-negative");
    }

    const SamplerConfig& config() const noexcept { return config_; }

    std::mt19937_64 stream(std::string_view law, Degree degree,
                           std::size_t index) const {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (char c : law) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        std::uint64_t s = splitmix(config_.seed ^ splitmix(h));
        s = splitmix(s ^ static_cast<std::uint64_t>(degree));
        s = splitmix(s ^ static_cast<std::uint64_t>(index));
        return std::mt19937_64(s);
    }

    Element draw(const Module& desc, std::mt19937_64& rng) const {
        switch (desc.kind()) {
        case Module::Kind::Zero:
            return Element();
        case Module::Kind::Sum: {
            Element l = draw(desc.left(), rng);
            Element r = draw(desc.right(), rng);
            return Element::tuple(std::move(l), std::move(r));
        }
        case Module::Kind::FiniteFree:
        case Module::Kind::CountableFree:
            break;
        }
        GeneratorIndex top = config_.maxGen;
        if (desc.kind() == Module::Kind::FiniteFree)
            top = std::min<GeneratorIndex>(top, desc.rank() - 1);
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(config_.coeffBound) + 1;
        const std::size_t count = below(rng, config_.support + 1);
        std::vector<Term> terms;
        terms.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            const GeneratorIndex index = below(rng, top + 1);
            const auto c = static_cast<std::int64_t>(below(rng, span)) - config_.coeffBound;
            terms.push_back(Term{index, c});
        }
        return Element::combination(std::move(terms));
    }

    Element draw(const Module& desc, std::string_view law, Degree degree,
                 std::size_t index) const {
        auto rng = stream(law, degree, index);
        return draw(desc, rng);
    }

  private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    // Uniform in [0, n) by rejection; std distributions are not portable.
    static std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
        if (n <= 1)
            return 0;
        const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
        std::uint64_t x;
        do {
            x = rng();
        } while (x >= limit);
        return x % n;
    }

    SamplerConfig config_;
};

} // namespace effhom
