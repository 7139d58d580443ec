#pragma once

#include "effhom/element.hpp"
#include "effhom/element_io.hpp"
#include "effhom/errors.hpp"
#include "effhom/morphism.hpp"
#include "effhom/sampler.hpp"

#include <json.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace effhom {

/// Outcome of evaluating one law on one sampled element.
struct LawCase {
    std::string law;
    Degree degree = 0;
    std::size_t sample = 0;
    bool pass = false;
    Element input;
    Module inputModule;
    Element output;
    Element expected;
    Module outputModule;
    std::string note; // set when evaluation itself raised an error
};

struct LawSummary {
    std::string law;
    Degree lo = 0;
    Degree hi = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t violations = 0;
};

/// Per-sample verdicts plus one summary per law, in deterministic order.
class LawReport {
  public:
    void addSummary(LawSummary s) { summaries_.push_back(std::move(s)); }
    void addCase(LawCase c) { cases_.push_back(std::move(c)); }

    void merge(const LawReport& other) {
        summaries_.insert(summaries_.end(), other.summaries_.begin(),
                          other.summaries_.end());
        cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
    }

    const std::vector<LawSummary>& summaries() const noexcept { return summaries_; }
    const std::vector<LawCase>& cases() const noexcept { return cases_; }

    std::size_t violations() const {
        std::size_t n = 0;
        for (const auto& s : summaries_)
            n += s.violations;
        return n;
    }

    bool ok() const { return violations() == 0; }

    std::vector<LawCase> counterexamples() const {
        std::vector<LawCase> out;
        for (const auto& c : cases_)
            if (!c.pass)
                out.push_back(c);
        return out;
    }

    /// One line per case, then one `law=... violations=k` line per law.
    std::string toText() const {
        std::ostringstream out;
        for (const auto& c : cases_) {
            out << "law=" << c.law << " degree=" << c.degree
                << " sample=" << c.sample
                << " verdict=" << (c.pass ? "pass" : "FAIL")
                << " input=" << show(c.input, c.inputModule);
            if (c.note.empty()) {
                out << " output=" << show(c.output, c.outputModule);
                if (!c.pass)
                    out << " expected=" << show(c.expected, c.outputModule);
            } else {
                out << " note=" << c.note;
            }
            out << '\n';
        }
        for (const auto& s : summaries_)
            out << summaryLine(s) << '\n';
        return out.str();
    }

    nlohmann::json toJson() const {
        nlohmann::json cases = nlohmann::json::array();
        for (const auto& c : cases_) {
            nlohmann::json j = {{"law", c.law},
                                {"degree", c.degree},
                                {"sample", c.sample},
                                {"verdict", c.pass ? "pass" : "FAIL"},
                                {"input", show(c.input, c.inputModule)}};
            if (c.note.empty()) {
                j["output"] = show(c.output, c.outputModule);
                if (!c.pass)
                    j["expected"] = show(c.expected, c.outputModule);
            } else {
                j["note"] = c.note;
            }
            cases.push_back(std::move(j));
        }
        nlohmann::json summaries = nlohmann::json::array();
        for (const auto& s : summaries_)
            summaries.push_back({{"law", s.law},
                                 {"degrees", std::to_string(s.lo) + ".." +
                                                 std::to_string(s.hi)},
                                 {"samples", s.samples},
                                 {"seed", s.seed},
                                 {"violations", s.violations}});
        return {{"cases", std::move(cases)}, {"summaries", std::move(summaries)}};
    }

    static std::string summaryLine(const LawSummary& s) {
        std::ostringstream out;
        out << "law=" << s.law << " degrees=" << s.lo << ".." << s.hi
            << " samples=" << s.samples << " seed=" << s.seed
            << " violations=" << s.violations;
        return out.str();
    }

  private:
    static std::string show(const Element& e, const Module& desc) {
        try {
            return format(e, desc);
        } catch (const Error&) {
            return "<ill-formed>";
        }
    }

    std::vector<LawSummary> summaries_;
    std::vector<LawCase> cases_;
};

/// Raised by constructors that validate their input by sampling.
class LawViolationError : public Error {
  public:
    explicit LawViolationError(LawReport report)
        : Error("law violation: " + std::to_string(report.violations()) +
                " counterexample(s)"),
          report_(std::move(report)) {}

    const LawReport& report() const noexcept { return report_; }

  private:
    LawReport report_;
};

/// A pointwise law lhs(i) == rhs(i), checked on samples of lhs(i).source().
struct PointwiseLaw {
    std::string name;
    std::function<ModMorphism(Degree)> lhs;
    std::function<ModMorphism(Degree)> rhs;
};

inline LawReport checkLaw(const PointwiseLaw& law, const Sampler& sampler) {
    const SamplerConfig& cfg = sampler.config();
    LawReport report;
    LawSummary summary{law.name, cfg.lo, cfg.hi, cfg.samples, cfg.seed, 0};
    for (Degree i = cfg.lo; i <= cfg.hi; ++i) {
        std::optional<ModMorphism> lhs, rhs;
        std::string buildError;
        try {
            lhs = law.lhs(i);
            rhs = law.rhs(i);
            if (!(lhs->source() == rhs->source()) || !(lhs->target() == rhs->target()))
                throw ShapeError("two sides of " + law.name + " have different descriptors");
        } catch (const Error& e) {
            buildError = e.what();
        }
        if (!buildError.empty()) {
            LawCase c;
            c.law = law.name;
            c.degree = i;
            c.note = buildError;
            report.addCase(std::move(c));
            ++summary.violations;
            continue;
        }
        for (std::size_t k = 0; k < cfg.samples; ++k) {
            LawCase c;
            c.law = law.name;
            c.degree = i;
            c.sample = k;
            c.inputModule = lhs->source();
            c.outputModule = lhs->target();
            c.input = sampler.draw(c.inputModule, law.name, i, k);
            try {
                c.output = (*lhs)(c.input);
                c.expected = (*rhs)(c.input);
                c.pass = c.output == c.expected;
            } catch (const Error& e) {
                c.note = e.what();
                c.pass = false;
            }
            if (!c.pass)
                ++summary.violations;
            report.addCase(std::move(c));
        }
    }
    report.addSummary(std::move(summary));
    return report;
}

} // namespace effhom
